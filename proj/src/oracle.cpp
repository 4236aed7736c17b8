#include "itercon/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "itercon/error.hpp"
#include "tableau.hpp"

namespace itercon {

Countermodel::Countermodel(std::size_t worlds, std::vector<std::pair<std::size_t, std::size_t>> relation,
                           std::vector<std::set<std::string>> valuation, std::size_t root)
    : worlds_(worlds), relation_(std::move(relation)), valuation_(std::move(valuation)), root_(root) {
  if (worlds_ == 0) throw PreconditionFailed("countermodel needs at least one world");
  if (root_ >= worlds_) throw PreconditionFailed("root world out of range");
  valuation_.resize(worlds_);
  std::sort(relation_.begin(), relation_.end());
  relation_.erase(std::unique(relation_.begin(), relation_.end()), relation_.end());
  successors_.assign(worlds_, {});
  for (auto [i, j] : relation_) {
    if (i >= worlds_ || j >= worlds_) throw PreconditionFailed("relation pair out of range");
    if (i == j) throw PreconditionFailed("relation is not irreflexive at world " + std::to_string(i));
    successors_[i].push_back(j);
  }
  for (auto [i, j] : relation_)
    for (std::size_t k : successors_[j])
      if (!related(i, k))
        throw PreconditionFailed("relation is not transitive: " + std::to_string(i) + " " + std::to_string(j) +
                                 " " + std::to_string(k));
}

bool Countermodel::related(std::size_t from, std::size_t to) const {
  const auto& s = successors_.at(from);
  return std::binary_search(s.begin(), s.end(), to);
}

std::string Countermodel::to_text() const {
  std::ostringstream out;
  out << "WORLDS " << worlds_ << '\n';
  for (auto [i, j] : relation_) out << "REL " << i << ' ' << j << '\n';
  for (std::size_t i = 0; i < worlds_; ++i)
    for (const auto& name : valuation_[i]) out << "VAL " << i << ' ' << name << '\n';
  out << "ROOT " << root_ << '\n';
  return out.str();
}

Countermodel Countermodel::from_text(std::string_view text) {
  std::optional<std::size_t> worlds;
  std::optional<std::size_t> root;
  std::vector<std::pair<std::size_t, std::size_t>> relation;
  std::vector<std::set<std::string>> valuation;
  std::size_t offset = 0;
  while (offset < text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    std::istringstream line{std::string(text.substr(offset, end - offset))};
    std::string keyword;
    line >> keyword;
    auto fail = [&](const std::string& expected) -> void { throw ParseError(offset, expected); };
    if (keyword.empty()) {
      // blank line
    } else if (keyword == "WORLDS") {
      std::size_t n;
      if (worlds || !(line >> n)) fail("a single WORLDS count");
      worlds = n;
      valuation.resize(n);
    } else if (!worlds) {
      fail("WORLDS first");
    } else if (keyword == "REL") {
      std::size_t i, j;
      if (!(line >> i >> j)) fail("REL i j");
      relation.emplace_back(i, j);
    } else if (keyword == "VAL") {
      std::size_t i;
      std::string name;
      if (!(line >> i >> name) || i >= *worlds) fail("VAL i name with i in range");
      valuation[i].insert(name);
    } else if (keyword == "ROOT") {
      std::size_t r;
      if (!(line >> r)) fail("ROOT i");
      root = r;
    } else {
      fail("WORLDS, REL, VAL or ROOT");
    }
    std::string extra;
    if (line >> extra) fail("end of line");
    offset = end + 1;
  }
  if (!worlds || !root) throw ParseError(text.size(), "WORLDS and ROOT lines");
  return Countermodel(*worlds, std::move(relation), std::move(valuation), *root);
}

namespace {

class ModelEvaluator {
 public:
  explicit ModelEvaluator(const Countermodel& model) : model_(model) {}

  const std::vector<bool>& eval(const Sentence& s) {
    auto it = memo_.find(s.identity());
    if (it != memo_.end()) return it->second;
    std::size_t n = model_.worlds();
    std::vector<bool> out(n, false);
    switch (s.kind()) {
      case NodeKind::Top:
        out.assign(n, true);
        break;
      case NodeKind::Bot:
        break;
      case NodeKind::Atom:
      case NodeKind::Schematic: {
        std::string name = s.kind() == NodeKind::Atom ? s.name() : "@" + s.name();
        for (std::size_t w = 0; w < n; ++w) out[w] = model_.valuation(w).count(name) > 0;
        break;
      }
      case NodeKind::Not: {
        const auto& x = eval(s.operand());
        for (std::size_t w = 0; w < n; ++w) out[w] = !x[w];
        break;
      }
      case NodeKind::And:
      case NodeKind::Or:
      case NodeKind::Imp: {
        std::vector<bool> a = eval(s.left());
        const auto& b = eval(s.right());
        for (std::size_t w = 0; w < n; ++w)
          out[w] = s.kind() == NodeKind::And ? (a[w] && b[w]) : s.kind() == NodeKind::Or ? (a[w] || b[w])
                                                                                          : (!a[w] || b[w]);
        break;
      }
      case NodeKind::Con:
        out = diamond(eval(s.operand()));
        break;
      case NodeKind::ConIter: {
        auto k = s.index().as_finite();
        if (!k) break;  // an infinite iterate implies every finite one, all false at finite depth
        std::vector<bool> body = eval(s.operand());
        out.assign(n, true);
        for (std::uint64_t i = 0; i < *k && i <= n; ++i) {
          for (std::size_t w = 0; w < n; ++w) out[w] = out[w] && body[w];
          out = diamond(out);
        }
        if (*k > n) out.assign(n, false);
        break;
      }
      case NodeKind::OneCon:
      case NodeKind::ConAux:
        throw PreconditionFailed("cannot evaluate " + render(s) + " in a Kripke model");
    }
    return memo_.emplace(s.identity(), std::move(out)).first->second;
  }

 private:
  std::vector<bool> diamond(const std::vector<bool>& x) const {
    std::vector<bool> out(x.size(), false);
    for (std::size_t w = 0; w < x.size(); ++w)
      for (std::size_t v : model_.successors(w))
        if (x[v]) {
          out[w] = true;
          break;
        }
    return out;
  }

  const Countermodel& model_;
  std::unordered_map<const void*, std::vector<bool>> memo_;
};

// First construct outside the decidable fragment, if any.
std::optional<std::string> outside_fragment(const Sentence& s, std::unordered_set<const void*>& seen) {
  if (!seen.insert(s.identity()).second) return std::nullopt;
  switch (s.kind()) {
    case NodeKind::Top:
    case NodeKind::Bot:
    case NodeKind::Atom:
    case NodeKind::Schematic:
      return std::nullopt;
    case NodeKind::OneCon:
      return "1Con is outside the decidable fragment";
    case NodeKind::ConAux:
      return "auxiliary consistency modality is outside the decidable fragment";
    case NodeKind::ConIter:
      if (!s.index().as_finite())
        return "infinite iteration index " + render(s.index()) + " only unfolds inexactly";
      return outside_fragment(s.operand(), seen);
    case NodeKind::And:
    case NodeKind::Or:
    case NodeKind::Imp:
      if (auto r = outside_fragment(s.left(), seen)) return r;
      return outside_fragment(s.right(), seen);
    default:
      return outside_fragment(s.operand(), seen);
  }
}

}  // namespace

bool holds_at(const Countermodel& model, std::size_t world, const Sentence& s) {
  if (world >= model.worlds()) throw PreconditionFailed("world out of range");
  ModelEvaluator ev(model);
  return ev.eval(s)[world];
}

const char* to_string(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Valid: return "VALID";
    case Verdict::Kind::Invalid: return "INVALID";
    case Verdict::Kind::Unknown: return "UNKNOWN";
  }
  return "?";
}

const char* to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "Yes";
    case Tri::No: return "No";
    case Tri::Unknown: return "Unknown";
  }
  return "?";
}

Verdict Oracle::decide(const Sentence& s) const {
  check_size(s, config_.size_cap);
  std::unordered_set<const void*> seen;
  if (auto why = outside_fragment(s, seen)) return Verdict::unknown(*why);
  detail::GlTableau tableau(config_);
  return tableau.decide(s);
}

Verdict Oracle::proves(const Sentence& s, const Sentence& t) const { return decide(implies(s, t)); }

Tri Oracle::strictly_proves(const Sentence& s, const Sentence& t) const {
  Verdict forward = proves(s, t);
  if (forward.is_invalid()) return Tri::No;
  Verdict backward = proves(t, s);
  if (backward.is_valid()) return Tri::No;
  if (forward.is_unknown() || backward.is_unknown()) return Tri::Unknown;
  return Tri::Yes;
}

namespace schemata {

Sentence monotonicity_instance(const Sentence& s, const Sentence& t, std::uint64_t k) {
  return implies(provable(implies(s, t)), implies(con_iter(k, s), con_iter(k, t)));
}

Sentence hierarchy_instance(const Sentence& s, std::uint64_t k) {
  return implies(con_iter(k + 1, s), con_iter(k, s));
}

Sentence cut_free_instance(const Sentence& s) { return implies(con(s), con_cut_free(s)); }

Sentence with_hypotheses(const std::vector<Sentence>& hypotheses, const Sentence& goal) {
  if (hypotheses.empty()) return goal;
  return implies(conj_all(hypotheses), goal);
}

}  // namespace schemata

}  // namespace itercon
