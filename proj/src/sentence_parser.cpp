#include <cctype>
#include <limits>

#include "itercon/error.hpp"
#include "itercon/sentence.hpp"

namespace itercon {

namespace {

class SentenceParser {
 public:
  SentenceParser(std::string_view text, const SchematicVocabulary& vocabulary)
      : text_(text), vocabulary_(vocabulary) {}

  Sentence parse_all() {
    Sentence s = parse();
    skip_ws();
    if (pos_ != text_.size()) fail("end of input");
    return s;
  }

 private:
  Sentence parse() {
    skip_ws();
    char c = peek();
    if (c == 'T') return ++pos_, top();
    if (c == 'F') return ++pos_, bot();
    if (c == '~') {
      ++pos_;
      return negation(parse());
    }
    if (c == '(') {
      ++pos_;
      Sentence a = parse();
      skip_ws();
      NodeKind op;
      if (accept("&")) {
        op = NodeKind::And;
      } else if (accept("|")) {
        op = NodeKind::Or;
      } else if (accept("->")) {
        op = NodeKind::Imp;
      } else {
        fail("'&', '|' or '->'");
      }
      Sentence b = parse();
      expect(")");
      return op == NodeKind::And ? conj(a, b) : op == NodeKind::Or ? disj(a, b) : implies(a, b);
    }
    if (c == '@') {
      ++pos_;
      std::size_t start = pos_;
      std::string name = identifier(true);
      if (!vocabulary_.contains(name))
        throw UnknownSchematicAtom("unknown schematic atom @" + name + " at position " + std::to_string(start));
      return schematic(std::move(name));
    }
    if (accept("ConCF(")) return close(con_cut_free(parse()));
    if (accept("ConI[")) {
      skip_ws();
      std::uint64_t level = number();
      expect("]");
      expect("(");
      return close(con_isigma(level, parse()));
    }
    if (accept("Con[")) {
      std::size_t start = pos_;
      std::size_t end = text_.find(']', start);
      if (end == std::string_view::npos) fail("']'");
      Ordinal index;
      try {
        index = parse_ordinal(text_.substr(start, end - start));
      } catch (const ParseError& e) {
        throw ParseError(start + e.position(), e.expected());
      }
      pos_ = end + 1;
      expect("(");
      return close(con_iter(index, parse()));
    }
    if (accept("Con(")) return close(con(parse()));
    if (accept("1Con(")) return close(one_con(parse()));
    if (std::islower(static_cast<unsigned char>(c))) return atom(identifier(false));
    fail("sentence");
  }

  Sentence close(Sentence s) {
    expect(")");
    return s;
  }

  std::string identifier(bool schematic_name) {
    auto first_ok = [&](char ch) {
      auto u = static_cast<unsigned char>(ch);
      return schematic_name ? std::isalpha(u) != 0 : std::islower(u) != 0;
    };
    auto rest_ok = [&](char ch) {
      auto u = static_cast<unsigned char>(ch);
      if (ch == '_' || std::isdigit(u)) return true;
      return schematic_name ? std::isalpha(u) != 0 : std::islower(u) != 0;
    };
    if (!first_ok(peek())) fail("identifier");
    std::size_t start = pos_;
    while (pos_ < text_.size() && rest_ok(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint64_t number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("numeral");
    std::uint64_t n = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      unsigned d = static_cast<unsigned>(peek() - '0');
      if (n > (std::numeric_limits<std::uint64_t>::max() - d) / 10) fail("numeral below 2^64");
      n = n * 10 + d;
      ++pos_;
    }
    skip_ws();
    return n;
  }

  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("'" + std::string(token) + "'");
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& expected) const { throw ParseError(pos_, expected); }

  std::string_view text_;
  const SchematicVocabulary& vocabulary_;
  std::size_t pos_ = 0;
};

}  // namespace

Sentence parse_sentence(std::string_view text, const SchematicVocabulary& vocabulary, std::size_t size_cap) {
  SentenceParser p(text, vocabulary);
  Sentence s = p.parse_all();
  check_size(s, size_cap);
  return s;
}

}  // namespace itercon
