#ifndef ITERCON_CONSTRUCTIONS_HPP
#define ITERCON_CONSTRUCTIONS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "itercon/operators.hpp"
#include "itercon/oracle.hpp"
#include "itercon/sentence.hpp"

namespace itercon {

struct SubClaim {
  std::string label;
  Tri verdict = Tri::Unknown;
  std::optional<Countermodel> countermodel;
  /// Explanation for Unknown results and for No results without a countermodel.
  std::string trace;
};

struct ClaimReport {
  std::string label;
  Tri verdict = Tri::Unknown;
  std::vector<SubClaim> claims;
  /// Instances of quantified side conditions that were conjoined as antecedents.
  std::vector<Sentence> hypotheses_used;

  const SubClaim* find(std::string_view label) const;
  /// CLAIM label VERDICT v, HYP lines, then one CLAIM line per sub-claim with embedded
  /// countermodel or TRACE lines.
  std::string to_text() const;
};

/// No if any sub-claim is No, else Unknown if any is Unknown, else Yes.
Tri combine(const std::vector<SubClaim>& claims);
SubClaim to_claim(std::string label, const Verdict& v);

struct InversionResult {
  Sentence psi;
  ClaimReport report;
};

/// psi := Con(T) -> s, then checks s |- psi & Con(psi) and back. Throws HypothesisNotMet
/// when s does not prove Con(T).
InversionResult inversion_witness(const Sentence& s, const Oracle& oracle = Oracle());

struct BbbResult {
  Sentence psi;
  Sentence theta;
  ClaimReport report;
};

/// theta := psi & (op(psi) -> Con(psi)) where psi := psi0 & chi0 carries the instance
/// chi0 := Con(psi0) -> Con(psi0 & ~op(psi0)).
BbbResult bbb_theta(const Sentence& psi0, const OperatorSpec& op, const Oracle& oracle = Oracle());

struct TowerResult {
  /// phi_1 .. phi_{n+1}
  std::vector<Sentence> sequence;
  ClaimReport report;
  /// (i, k) with op(phi_i) equivalent to phi_i & Con^k(phi_i), which is not refutable.
  std::optional<std::pair<std::size_t, std::uint64_t>> equivalence;
};

inline constexpr std::uint64_t kDefaultTowerCap = 4;

/// phi_{k+1} := phi_k & (op(phi_k) -> Con^k(phi_k)) with Con^k unfolded exactly.
TowerResult ttt_tower(const Sentence& phi1, const OperatorSpec& op, std::uint64_t n,
                      const Oracle& oracle = Oracle(), std::uint64_t cap = kDefaultTowerCap);

using OrdinalSequence = std::vector<std::pair<Ordinal, Sentence>>;

/// Schematic theta_b for every b <= alpha reached through predecessors and the first
/// `limit_budget` fundamental steps, in ascending order. alpha must be at least 1.
OrdinalSequence theta_sequence(const Ordinal& alpha, const OperatorSpec& op, std::uint64_t limit_budget,
                               std::size_t size_cap = Sentence::kDefaultSizeCap);

/// phi_g := phi_1 & conjunction over d < g of (True_Pi1(op(phi_d)) -> Con[d](phi_d)).
OrdinalSequence main_phi_sequence(const Ordinal& alpha, const OperatorSpec& op, std::uint64_t limit_budget,
                                  std::size_t size_cap = Sentence::kDefaultSizeCap);

inline constexpr std::uint64_t kOneConMaxK = 5;

/// Checks (H & Con^k(s)) |- Con^(k+1)(s) with H := Con^k(s) -> Con(s & Con^k(s)).
ClaimReport onecon_successor_check(const Sentence& s, std::uint64_t k, const Oracle& oracle = Oracle());

}  // namespace itercon

#endif  // ITERCON_CONSTRUCTIONS_HPP
