#ifndef ITERCON_SENTENCE_HPP
#define ITERCON_SENTENCE_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "itercon/ordinal.hpp"

namespace itercon {

enum class NodeKind : std::uint8_t {
  Top,
  Bot,
  Atom,
  Schematic,  // opaque stand-in for a quantified side condition, written @name
  Not,
  And,
  Or,
  Imp,
  Con,
  ConIter,
  OneCon,
  ConAux,
};

/// Tag of an auxiliary consistency modality: cut-free consistency, or consistency over I-Sigma_n.
struct AuxTag {
  enum class Kind : std::uint8_t { CutFree, ISigma };
  Kind kind = Kind::CutFree;
  std::uint64_t level = 0;

  friend bool operator==(const AuxTag&, const AuxTag&) = default;
};

// Immutable formula tree. Copies share structure; equality is structural.
class Sentence {
 public:
  static constexpr std::size_t kDefaultSizeCap = 4096;

  Sentence();  // T

  NodeKind kind() const;
  /// Atom or schematic name (without the '@').
  const std::string& name() const;
  /// Sole operand of Not/Con/ConIter/OneCon/ConAux.
  const Sentence& operand() const;
  const Sentence& left() const;
  const Sentence& right() const;
  const Ordinal& index() const;
  const AuxTag& aux() const;

  /// Number of tree nodes, saturating at SIZE_MAX.
  std::size_t size() const;
  std::size_t hash() const;
  /// Address of the shared node; equal identities imply equal sentences.
  const void* identity() const;

  friend bool operator==(const Sentence& a, const Sentence& b);

 private:
  struct Node;
  explicit Sentence(std::shared_ptr<const Node> node);

  friend Sentence make_node(NodeKind, std::string, const Sentence*, const Sentence*, Ordinal, AuxTag);

  std::shared_ptr<const Node> node_;
};

Sentence top();
Sentence bot();
Sentence atom(std::string name);
Sentence schematic(std::string name);
Sentence negation(const Sentence& s);
Sentence conj(const Sentence& a, const Sentence& b);
Sentence disj(const Sentence& a, const Sentence& b);
Sentence implies(const Sentence& a, const Sentence& b);
Sentence iff(const Sentence& a, const Sentence& b);
Sentence con(const Sentence& s);
Sentence con_iter(const Ordinal& index, const Sentence& s);
Sentence con_iter(std::uint64_t index, const Sentence& s);
Sentence one_con(const Sentence& s);
Sentence con_cut_free(const Sentence& s);
Sentence con_isigma(std::uint64_t level, const Sentence& s);
/// ~Con(~s), the provability reading.
Sentence provable(const Sentence& s);

/// Left-nested conjunction; T for an empty list.
Sentence conj_all(const std::vector<Sentence>& parts);
/// Left-nested disjunction; F for an empty list.
Sentence disj_all(const std::vector<Sentence>& parts);

/// Throws SizeCapExceeded when s has more than cap nodes.
const Sentence& check_size(const Sentence& s, std::size_t cap);

// Registered names allowed after '@'. Entries are exact names or prefixes ending in '_'.
class SchematicVocabulary {
 public:
  /// The built-in vocabulary used by the constructions.
  static const SchematicVocabulary& standard();

  void add_name(std::string name);
  void add_prefix(std::string prefix);
  bool contains(std::string_view name) const;

 private:
  std::set<std::string, std::less<>> names_;
  std::vector<std::string> prefixes_;
};

/// Grammar:
///   s := "T" | "F" | IDENT | "@" IDENT | "~" s | "(" s OP s ")" | "Con(" s ")"
///      | "Con[" ord "](" s ")" | "1Con(" s ")" | "ConCF(" s ")" | "ConI[" NUM "](" s ")"
///   OP := "&" | "|" | "->"
/// Throws ParseError, UnknownSchematicAtom, NonCanonical, SizeCapExceeded.
Sentence parse_sentence(std::string_view text,
                        const SchematicVocabulary& vocabulary = SchematicVocabulary::standard(),
                        std::size_t size_cap = Sentence::kDefaultSizeCap);

std::string render(const Sentence& s);

struct UnfoldResult {
  Sentence sentence;
  bool exact = true;
};

/// Rewrites every Con[a](s): index 0 -> T, successor b+1 -> Con(s & Con[b](s)), limit l ->
/// conjunction of Con[l[i]](s) for i < budget (inexact). The result contains no ConIter.
UnfoldResult unfold_iter(const Sentence& s, std::uint64_t budget,
                         std::size_t size_cap = Sentence::kDefaultSizeCap);

/// True when s has no atoms, schematic atoms, 1Con or auxiliary modalities.
bool is_letterless(const Sentence& s);
/// True when some ConIter index is w or larger.
bool has_infinite_index(const Sentence& s);
/// Atom names occurring in s; schematic atoms appear with their '@' prefix.
std::set<std::string> atom_names(const Sentence& s);

struct SentenceHash {
  std::size_t operator()(const Sentence& s) const { return s.hash(); }
};

// Building blocks for exhaustive enumeration by size.
struct SentenceGrammar {
  std::vector<Sentence> leaves;
  bool negation = true;
  bool binary = true;  // &, |, ->
  bool con = true;

  static SentenceGrammar letterless();
  static SentenceGrammar one_atom(std::string name = "p");
};

/// levels[n] holds every sentence of exactly n nodes (n <= max_size), sorted by rendered
/// text. levels[0] is empty. Larger sentences share subtrees with smaller ones.
std::vector<std::vector<Sentence>> sentences_by_size(const SentenceGrammar& grammar, std::size_t max_size);

}  // namespace itercon

#endif  // ITERCON_SENTENCE_HPP
