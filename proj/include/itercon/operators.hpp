#ifndef ITERCON_OPERATORS_HPP
#define ITERCON_OPERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "itercon/oracle.hpp"
#include "itercon/sentence.hpp"

namespace itercon {

/// Claims about an operator. They are tested, never assumed.
struct DeclaredProperties {
  bool monotone = false;
  bool pi01_valued = false;
  /// k such that s & Con[k](s) proves op(s).
  std::optional<std::uint64_t> bounded_by_con_k;
  /// op(s) proves s.
  bool implies_input = false;
};

struct OperatorSpec {
  std::string name;
  std::function<Sentence(const Sentence&)> transform;
  DeclaredProperties declared;
};

/// op.transform(s); throws SizeCapExceeded when the result is too large.
Sentence apply(const OperatorSpec& op, const Sentence& s, std::size_t size_cap = Sentence::kDefaultSizeCap);

namespace ops {

OperatorSpec identity();
/// s -> (s & Con(s))
OperatorSpec conj_con();
/// s -> (s & Con[k](s))
OperatorSpec conj_con_k(std::uint64_t k);
/// s -> (s & Con[a](s))
OperatorSpec conj_con_ord(const Ordinal& a);
OperatorSpec con();
OperatorSpec con_k(std::uint64_t k);
/// s -> ~s, antitone.
OperatorSpec negate();
OperatorSpec star(std::uint64_t bound);
OperatorSpec slowcon(std::uint64_t bound);

}  // namespace ops

/// s & conjunction over x < bound of (ConI[x](s) -> ConI[x]((s & ConI[x](s)))).
/// Throws PreconditionFailed when bound is 0.
Sentence build_star(const Sentence& s, std::uint64_t bound, std::size_t size_cap = Sentence::kDefaultSizeCap);
/// Conjunction over x < bound of (@F_eps0_total_at_x -> ConI[x](s)).
Sentence build_slowcon(const Sentence& s, std::uint64_t bound, std::size_t size_cap = Sentence::kDefaultSizeCap);

// Name -> operator table. Parametrised built-ins are spelled conj_con_k<N>, con_k<N>,
// star<N>, slowcon<N> and conj_con_ord(<ordinal>).
class OperatorRegistry {
 public:
  /// Registry holding the fixed-name built-ins.
  static OperatorRegistry builtin();

  void add(OperatorSpec op);
  /// Throws PreconditionFailed for unknown names.
  OperatorSpec find(std::string_view name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, OperatorSpec, std::less<>> table_;
};

/// Random sentence with exactly `size` nodes over T, F, the given atoms, ~, &, |, ->, Con.
Sentence random_sentence(std::mt19937_64& rng, std::size_t size, const std::vector<std::string>& atoms);

/// Seeded pairs (s, t) where t weakens s by construction, so s proves t.
std::vector<std::pair<Sentence, Sentence>> weakening_pairs(std::size_t count, std::uint64_t seed);

struct MonotoneItem {
  std::size_t index;
  Sentence s;
  Sentence t;
  Verdict verdict;  // proves(op(s), op(t))
};

struct MonotoneReport {
  std::string op_name;
  std::uint64_t seed = 0;
  std::vector<MonotoneItem> items;
  std::size_t valid = 0;
  std::size_t invalid = 0;
  std::size_t unknown = 0;

  /// ITEM i VERDICT v lines, one WITNESS block per Invalid item, then a SUMMARY line.
  std::string to_text() const;
};

MonotoneReport check_monotone(const OperatorSpec& op, std::size_t corpus_size, std::uint64_t seed,
                              const Oracle& oracle = Oracle());

}  // namespace itercon

#endif  // ITERCON_OPERATORS_HPP
