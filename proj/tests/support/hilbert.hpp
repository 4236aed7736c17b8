#ifndef ITERCON_TESTS_HILBERT_HPP
#define ITERCON_TESTS_HILBERT_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modal.hpp"

namespace itercon::support {

// Hilbert system for GL: axioms K and Loeb, modus ponens, necessitation, and tautological
// consequence (the usual shorthand for a tautology instance followed by modus ponens
// steps; boxed subformulas and variables count as propositional atoms).
enum class Rule { TautConseq, AxiomK, AxiomLob, MP, Nec };

struct ProofLine {
  int formula;
  Rule rule;
  std::vector<std::size_t> premises;
};

/// Empty when every line is justified and the last line is `goal`, else a message naming
/// the first bad line.
std::string check_proof(const ModalStore& store, const std::vector<ProofLine>& lines, int goal);

/// True when f holds under every assignment to its propositional atoms.
bool is_tautology(const ModalStore& store, int f);

// Backward search in the cut-free sequent calculus for GL, translated into Hilbert lines
// as it goes. Complete for GL; `budget` bounds the number of sequents visited.
class GlProofSearch {
 public:
  enum class Outcome { Proved, NoProof, Exhausted };

  GlProofSearch(ModalStore& store, std::uint64_t budget = 200000) : st_(store), budget_(budget) {}

  Outcome prove(int f);
  /// Proof of the last formula passed to prove() when it returned Proved.
  const std::vector<ProofLine>& lines() const { return lines_; }

 private:
  using Seq = std::pair<std::vector<int>, std::vector<int>>;
  struct OutOfBudget {};

  std::optional<std::size_t> prove_seq(const std::vector<int>& left, const std::vector<int>& right);
  std::vector<std::pair<Seq, bool>> decompose(const Seq& s);
  int seq_formula(const std::vector<int>& left, const std::vector<int>& right);
  std::size_t glr(const std::vector<int>& left, const std::vector<int>& right, int b, std::size_t premise);

  std::size_t emit(int formula, Rule rule, std::vector<std::size_t> premises = {});
  std::size_t mono(std::size_t line);
  std::size_t box_and(int x, int y);
  std::size_t four(int x);

  ModalStore& st_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  std::vector<ProofLine> lines_;
  std::map<Seq, std::optional<std::size_t>> memo_;
  std::map<int, std::size_t> four_memo_;
  std::map<std::pair<int, int>, std::size_t> and_memo_;
};

}  // namespace itercon::support

#endif  // ITERCON_TESTS_HILBERT_HPP
