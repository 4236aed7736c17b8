#include "itercon/ordinal.hpp"

#include <cctype>
#include <limits>

#include "itercon/error.hpp"

namespace itercon {

Ordinal::Ordinal() = default;

Ordinal Ordinal::finite(std::uint64_t n) {
  Ordinal o;
  if (n > 0) o.terms_.push_back(OrdinalTerm{Ordinal(), n});
  return o;
}

Ordinal Ordinal::omega() {
  Ordinal o;
  o.terms_.push_back(OrdinalTerm{finite(1), 1});
  return o;
}

Ordinal Ordinal::from_terms(std::vector<OrdinalTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0) throw NonCanonical("ordinal term with coefficient 0");
    if (i > 0 && compare(terms[i - 1].exponent, terms[i].exponent) != Cmp::GT)
      throw NonCanonical("ordinal exponents must strictly decrease");
  }
  Ordinal o;
  o.terms_ = std::move(terms);
  return o;
}

const std::vector<OrdinalTerm>& Ordinal::terms() const { return terms_; }

bool Ordinal::is_zero() const { return terms_.empty(); }

std::optional<std::uint64_t> Ordinal::as_finite() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1 && terms_[0].exponent.is_zero()) return terms_[0].coefficient;
  return std::nullopt;
}

std::size_t Ordinal::node_count() const {
  std::size_t n = 0;
  for (const auto& t : terms_) n += 1 + t.exponent.node_count();
  return n;
}

bool operator==(const Ordinal& a, const Ordinal& b) { return compare(a, b) == Cmp::EQ; }

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  switch (compare(a, b)) {
    case Cmp::LT:
      return std::strong_ordering::less;
    case Cmp::GT:
      return std::strong_ordering::greater;
    default:
      return std::strong_ordering::equal;
  }
}

Cmp compare(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    Cmp e = compare(x[i].exponent, y[i].exponent);
    if (e != Cmp::EQ) return e;
    if (x[i].coefficient != y[i].coefficient) return x[i].coefficient < y[i].coefficient ? Cmp::LT : Cmp::GT;
  }
  if (x.size() == y.size()) return Cmp::EQ;
  return x.size() < y.size() ? Cmp::LT : Cmp::GT;
}

OrdinalKind classify(const Ordinal& a) {
  if (a.is_zero()) return OrdinalKind::Zero;
  return a.terms().back().exponent.is_zero() ? OrdinalKind::Successor : OrdinalKind::Limit;
}

Ordinal predecessor(const Ordinal& a) {
  if (classify(a) != OrdinalKind::Successor) throw NotASuccessor(render(a) + " is not a successor");
  std::vector<OrdinalTerm> terms = a.terms();
  if (--terms.back().coefficient == 0) terms.pop_back();
  return Ordinal::from_terms(std::move(terms));
}

Ordinal successor(const Ordinal& a) {
  std::vector<OrdinalTerm> terms = a.terms();
  if (!terms.empty() && terms.back().exponent.is_zero()) {
    ++terms.back().coefficient;
  } else {
    terms.push_back(OrdinalTerm{Ordinal(), 1});
  }
  return Ordinal::from_terms(std::move(terms));
}

Ordinal fundamental_step(const Ordinal& a, std::uint64_t n) {
  if (classify(a) != OrdinalKind::Limit) throw NotALimit(render(a) + " is not a limit");
  std::vector<OrdinalTerm> terms = a.terms();
  const Ordinal top = terms.back().exponent;
  if (--terms.back().coefficient == 0) terms.pop_back();
  if (classify(top) == OrdinalKind::Successor) {
    if (n > 0) terms.push_back(OrdinalTerm{predecessor(top), n});
  } else {
    terms.push_back(OrdinalTerm{fundamental_step(top, n), 1});
  }
  return Ordinal::from_terms(std::move(terms));
}

namespace {

class OrdinalParser {
 public:
  OrdinalParser(std::string_view text, std::size_t base) : text_(text), base_(base) {}

  Ordinal parse_ord() {
    skip_ws();
    if (peek() == '0') {
      std::size_t save = pos_;
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) return Ordinal();
      pos_ = save;
    }
    std::vector<OrdinalTerm> terms;
    terms.push_back(parse_term());
    skip_ws();
    while (peek() == '+') {
      ++pos_;
      terms.push_back(parse_term());
      skip_ws();
    }
    return Ordinal::from_terms(std::move(terms));
  }

  void expect_end() {
    skip_ws();
    if (pos_ != text_.size()) fail("end of ordinal");
  }

  std::size_t pos() const { return pos_; }

 private:
  OrdinalTerm parse_term() {
    skip_ws();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::uint64_t n = parse_num();
      if (n == 0) throw NonCanonical("finite ordinal term 0 inside a sum");
      return OrdinalTerm{Ordinal(), n};
    }
    if (peek() != 'w') fail("numeral or 'w'");
    ++pos_;
    OrdinalTerm term{Ordinal::finite(1), 1};
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      term.exponent = parse_factor();
      if (term.exponent.is_zero()) throw NonCanonical("exponent 0 must be written as a numeral term");
      skip_ws();
    }
    if (peek() == '*') {
      ++pos_;
      skip_ws();
      term.coefficient = parse_num();
      if (term.coefficient == 0) throw NonCanonical("ordinal term with coefficient 0");
    }
    return term;
  }

  Ordinal parse_factor() {
    skip_ws();
    if (std::isdigit(static_cast<unsigned char>(peek()))) return Ordinal::finite(parse_num());
    if (peek() == 'w') {
      ++pos_;
      return Ordinal::omega();
    }
    if (peek() != '(') fail("numeral, 'w' or '('");
    ++pos_;
    Ordinal inner = parse_ord();
    skip_ws();
    if (peek() != ')') fail("')'");
    ++pos_;
    return inner;
  }

  std::uint64_t parse_num() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("numeral");
    std::uint64_t n = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      unsigned d = static_cast<unsigned>(peek() - '0');
      if (n > (std::numeric_limits<std::uint64_t>::max() - d) / 10) fail("numeral below 2^64");
      n = n * 10 + d;
      ++pos_;
    }
    return n;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& expected) const { throw ParseError(base_ + pos_, expected); }

  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

std::string render_factor(const Ordinal& e) {
  if (auto n = e.as_finite()) return std::to_string(*n);
  if (e == Ordinal::omega()) return "w";
  return "(" + render(e) + ")";
}

}  // namespace

Ordinal parse_ordinal(std::string_view text, std::size_t node_cap) {
  OrdinalParser p(text, 0);
  Ordinal o = p.parse_ord();
  p.expect_end();
  if (o.node_count() > node_cap)
    throw SizeCapExceeded("ordinal has " + std::to_string(o.node_count()) + " nodes, cap is " +
                          std::to_string(node_cap));
  return o;
}

std::string render(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& t : a.terms()) {
    if (!out.empty()) out += "+";
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += "w";
    if (!(t.exponent == Ordinal::finite(1))) out += "^" + render_factor(t.exponent);
    if (t.coefficient != 1) out += "*" + std::to_string(t.coefficient);
  }
  return out;
}

std::string ordinal_tag(const Ordinal& a) {
  std::string out;
  for (char c : render(a)) {
    switch (c) {
      case '^': out += 'e'; break;
      case '*': out += 'x'; break;
      case '+': out += 'p'; break;
      case '(': out += 'l'; break;
      case ')': out += 'r'; break;
      default: out += c;
    }
  }
  return out;
}

const char* to_string(Cmp c) {
  switch (c) {
    case Cmp::LT: return "LT";
    case Cmp::EQ: return "EQ";
    case Cmp::GT: return "GT";
  }
  return "?";
}

const char* to_string(OrdinalKind k) {
  switch (k) {
    case OrdinalKind::Zero: return "Zero";
    case OrdinalKind::Successor: return "Successor";
    case OrdinalKind::Limit: return "Limit";
  }
  return "?";
}

}  // namespace itercon
