#ifndef ITERCON_ORACLE_HPP
#define ITERCON_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "itercon/sentence.hpp"

namespace itercon {

struct OracleConfig {
  /// Maximum number of tableau node expansions per decide call.
  std::uint64_t budget = 1000000;
  /// Maximum number of worlds in an extracted countermodel.
  std::size_t model_cap = 512;
  std::size_t size_cap = Sentence::kDefaultSizeCap;
};

// Finite Kripke model with a strict partial order. Schematic atoms appear in the valuation
// with their '@' prefix.
class Countermodel {
 public:
  /// Throws PreconditionFailed unless the relation is transitive and irreflexive and every
  /// index is in range.
  Countermodel(std::size_t worlds, std::vector<std::pair<std::size_t, std::size_t>> relation,
               std::vector<std::set<std::string>> valuation, std::size_t root);

  std::size_t worlds() const { return worlds_; }
  std::size_t root() const { return root_; }
  /// Sorted pairs (i, j) with i below j.
  const std::vector<std::pair<std::size_t, std::size_t>>& relation() const { return relation_; }
  const std::set<std::string>& valuation(std::size_t world) const { return valuation_.at(world); }
  bool related(std::size_t from, std::size_t to) const;
  const std::vector<std::size_t>& successors(std::size_t world) const { return successors_.at(world); }

  /// WORLDS n / REL i j / VAL i name / ROOT i, one item per line.
  std::string to_text() const;
  /// Throws ParseError on malformed text and PreconditionFailed on an invalid model.
  static Countermodel from_text(std::string_view text);

 private:
  std::size_t worlds_;
  std::vector<std::pair<std::size_t, std::size_t>> relation_;
  std::vector<std::set<std::string>> valuation_;
  std::size_t root_;
  std::vector<std::vector<std::size_t>> successors_;
};

/// Evaluates s at a world. Con[a] with an infinite index is false in every finite model.
/// Throws PreconditionFailed on 1Con and auxiliary modalities.
bool holds_at(const Countermodel& model, std::size_t world, const Sentence& s);

struct Verdict {
  enum class Kind { Valid, Invalid, Unknown };
  Kind kind = Kind::Unknown;
  /// Present exactly when kind is Invalid.
  std::optional<Countermodel> countermodel;
  std::string reason;
  /// Unknown because a budget or cap ran out.
  bool resource = false;

  static Verdict valid() { return Verdict{Kind::Valid, std::nullopt, {}, false}; }
  static Verdict invalid(Countermodel m) { return Verdict{Kind::Invalid, std::move(m), {}, false}; }
  static Verdict unknown(std::string why, bool resource = false) {
    return Verdict{Kind::Unknown, std::nullopt, std::move(why), resource};
  }

  bool is_valid() const { return kind == Kind::Valid; }
  bool is_invalid() const { return kind == Kind::Invalid; }
  bool is_unknown() const { return kind == Kind::Unknown; }
};

const char* to_string(Verdict::Kind k);

enum class Tri { Yes, No, Unknown };
const char* to_string(Tri t);

// Decision procedure for the provability logic GL, reading Con as the diamond. Schematic
// atoms behave as ordinary atoms; 1Con, auxiliary modalities and infinite ConIter indices
// are outside the fragment and yield Unknown.
class Oracle {
 public:
  explicit Oracle(OracleConfig config = {}) : config_(config) {}

  const OracleConfig& config() const { return config_; }

  /// Throws SizeCapExceeded when s is larger than the configured cap.
  Verdict decide(const Sentence& s) const;
  /// decide(s -> t)
  Verdict proves(const Sentence& s, const Sentence& t) const;
  /// Yes when s proves t and t does not prove s; No as soon as either fails definitively.
  Tri strictly_proves(const Sentence& s, const Sentence& t) const;

 private:
  OracleConfig config_;
};

/// Truth in the standard model for letterless sentences with finite indices.
/// Throws NotLetterless otherwise.
bool truth_letterless(const Sentence& s);

/// Canonical Boolean combination of Con[k](T) equivalent to s. Throws NotLetterless.
Sentence letterless_nf(const Sentence& s);

// Instances of registered schemata. The oracle never adds these itself; callers conjoin
// them as hypotheses.
namespace schemata {

/// ~Con(~(s -> t)) -> (Con[k](s) -> Con[k](t))
Sentence monotonicity_instance(const Sentence& s, const Sentence& t, std::uint64_t k);
/// Con[k+1](s) -> Con[k](s)
Sentence hierarchy_instance(const Sentence& s, std::uint64_t k);
/// Con(s) -> ConCF(s)
Sentence cut_free_instance(const Sentence& s);
/// (h1 & ... & hn) -> goal
Sentence with_hypotheses(const std::vector<Sentence>& hypotheses, const Sentence& goal);

}  // namespace schemata

}  // namespace itercon

#endif  // ITERCON_ORACLE_HPP
