#ifndef ITERCON_ENUMERATOR_HPP
#define ITERCON_ENUMERATOR_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "itercon/constructions.hpp"
#include "itercon/oracle.hpp"
#include "itercon/sentence.hpp"

namespace itercon {

// phi_0, phi_1, ...: letterless sentences by size, ties broken by rendered text, keeping the
// first sentence of each non-constant equivalence class and skipping classes whose
// complement already appeared.
class LetterlessEnumeration {
 public:
  LetterlessEnumeration();
  const Sentence& at(std::size_t k);

 private:
  void extend();

  std::size_t max_size_ = 0;
  std::vector<std::vector<Sentence>> levels_;
  std::size_t level_ = 1;
  std::size_t offset_ = 0;
  std::unordered_set<std::string> seen_;
  std::vector<Sentence> items_;
};

inline constexpr std::uint64_t kDefaultStageCap = 8;

struct EnumeratorState {
  std::uint64_t stage = 0;
  std::uint64_t closure_depth = 0;
  /// Closure round r scans letterless sentences with at most r + 1 nodes.
  std::size_t universe_max_size = 0;
  std::shared_ptr<LetterlessEnumeration> enumeration;
  /// In order of numeration.
  std::vector<Sentence> numerated;
  std::unordered_set<Sentence, SentenceHash> numerated_set;
  std::vector<Sentence> active;
  /// Sentences added by the equivalence closure, in order.
  std::vector<Sentence> closure_added;

  bool is_numerated(const Sentence& s) const { return numerated_set.count(s) > 0; }
};

EnumeratorState enumerator_init(std::uint64_t closure_depth, const Oracle& oracle = Oracle());
/// Throws StageCapExceeded when st.stage has reached stage_cap.
EnumeratorState enumerator_step(const EnumeratorState& st, const Oracle& oracle = Oracle(),
                                std::uint64_t stage_cap = kDefaultStageCap);

/// Number of active sentences that are true.
std::size_t true_active_count(const EnumeratorState& st);

/// decide(~(a & b)) for every pair of distinct actives.
ClaimReport verify_incompatibility(const EnumeratorState& st, const Oracle& oracle = Oracle());
/// For every true phi_k with k <= horizon, a true numerated sentence proving it.
/// Throws PreconditionFailed when horizon exceeds the stage.
ClaimReport verify_unbounded_truth(const EnumeratorState& st, std::uint64_t horizon,
                                   const Oracle& oracle = Oracle());

struct GapResult {
  Sentence phi;
  std::optional<Sentence> witness;
  std::size_t candidates_checked = 0;
};

/// Looks for psi outside the numerated set with phi & Con(phi) strictly above psi strictly
/// above phi, where phi is the first true numerated sentence.
GapResult search_gap_witness(const EnumeratorState& st, std::size_t size_bound, const Oracle& oracle = Oracle());

/// STAGE n, NUM lines, ACT lines, TRUE line.
std::string dump(const EnumeratorState& st);

}  // namespace itercon

#endif  // ITERCON_ENUMERATOR_HPP
