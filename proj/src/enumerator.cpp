#include "itercon/enumerator.hpp"

#include <sstream>

#include "itercon/error.hpp"

namespace itercon {

LetterlessEnumeration::LetterlessEnumeration() = default;

const Sentence& LetterlessEnumeration::at(std::size_t k) {
  while (items_.size() <= k) extend();
  return items_[k];
}

void LetterlessEnumeration::extend() {
  for (;;) {
    if (level_ > max_size_) {
      levels_ = sentences_by_size(SentenceGrammar::letterless(), ++max_size_);
      continue;
    }
    if (offset_ >= levels_[level_].size()) {
      ++level_;
      offset_ = 0;
      continue;
    }
    const Sentence& s = levels_[level_][offset_++];
    std::string key = render(letterless_nf(s));
    if (key == "T" || key == "F" || seen_.count(key)) continue;
    if (seen_.count(render(letterless_nf(negation(s))))) continue;
    seen_.insert(key);
    items_.push_back(s);
    return;
  }
}

namespace {

void numerate(EnumeratorState& st, const Sentence& s) {
  if (st.numerated_set.insert(s).second) st.numerated.push_back(s);
}

void close_under_equivalence(EnumeratorState& st, const Oracle& oracle) {
  if (st.closure_depth == 0) return;
  auto levels = sentences_by_size(SentenceGrammar::letterless(), st.universe_max_size);
  for (std::uint64_t round = 1; round <= st.closure_depth; ++round) {
    std::map<std::string, std::vector<Sentence>> by_profile;
    for (const auto& s : st.numerated) by_profile[render(letterless_nf(s))].push_back(s);
    std::vector<Sentence> added;
    for (std::size_t size = 1; size <= round + 1 && size < levels.size(); ++size) {
      for (const auto& u : levels[size]) {
        if (st.is_numerated(u)) continue;
        auto it = by_profile.find(render(letterless_nf(u)));
        if (it == by_profile.end()) continue;
        for (const auto& c : it->second) {
          if (oracle.proves(u, c).is_valid() && oracle.proves(c, u).is_valid()) {
            added.push_back(u);
            break;
          }
        }
      }
    }
    for (const auto& u : added) {
      numerate(st, u);
      st.closure_added.push_back(u);
    }
  }
}

}  // namespace

EnumeratorState enumerator_init(std::uint64_t closure_depth, const Oracle& oracle) {
  EnumeratorState st;
  st.closure_depth = closure_depth;
  st.universe_max_size = static_cast<std::size_t>(closure_depth) + 1;
  st.enumeration = std::make_shared<LetterlessEnumeration>();
  Sentence phi = st.enumeration->at(0);
  Sentence neg = negation(phi);
  numerate(st, phi);
  numerate(st, neg);
  st.active = {conj(phi, con(phi)), conj(neg, con(neg))};
  close_under_equivalence(st, oracle);
  return st;
}

EnumeratorState enumerator_step(const EnumeratorState& st, const Oracle& oracle, std::uint64_t stage_cap) {
  if (st.stage >= stage_cap)
    throw StageCapExceeded("stage " + std::to_string(st.stage) + " reached the cap " + std::to_string(stage_cap));
  EnumeratorState next = st;
  next.stage = st.stage + 1;
  Sentence phi = next.enumeration->at(next.stage);
  std::vector<Sentence> active;
  for (const auto& psi : st.active) {
    for (const Sentence& theta : {conj(psi, phi), conj(psi, negation(phi))}) {
      check_size(theta, oracle.config().size_cap);
      numerate(next, theta);
      active.push_back(check_size(conj(theta, con(theta)), oracle.config().size_cap));
    }
  }
  next.active = std::move(active);
  close_under_equivalence(next, oracle);
  return next;
}

std::size_t true_active_count(const EnumeratorState& st) {
  std::size_t n = 0;
  for (const auto& a : st.active) n += truth_letterless(a) ? 1 : 0;
  return n;
}

ClaimReport verify_incompatibility(const EnumeratorState& st, const Oracle& oracle) {
  ClaimReport report;
  report.label = "incompatibility_stage" + std::to_string(st.stage);
  for (std::size_t i = 0; i < st.active.size(); ++i) {
    for (std::size_t j = i + 1; j < st.active.size(); ++j) {
      Verdict v = oracle.decide(negation(conj(st.active[i], st.active[j])));
      if (!v.is_valid()) report.claims.push_back(to_claim("pair_" + std::to_string(i) + "_" + std::to_string(j), v));
    }
  }
  std::size_t pairs = st.active.size() * (st.active.size() - (st.active.empty() ? 0 : 1)) / 2;
  if (report.claims.empty())
    report.claims.push_back({"all_pairs", Tri::Yes, std::nullopt, std::to_string(pairs) + " pairs refuted"});
  report.verdict = combine(report.claims);
  return report;
}

ClaimReport verify_unbounded_truth(const EnumeratorState& st, std::uint64_t horizon, const Oracle& oracle) {
  if (horizon > st.stage)
    throw PreconditionFailed("horizon " + std::to_string(horizon) + " exceeds stage " + std::to_string(st.stage));
  ClaimReport report;
  report.label = "unbounded_truth";
  for (std::uint64_t k = 0; k <= horizon; ++k) {
    const Sentence& phi = st.enumeration->at(k);
    if (!truth_letterless(phi)) continue;
    SubClaim c;
    c.label = "phi_" + std::to_string(k);
    c.verdict = Tri::No;
    c.trace = "no true numerated sentence proves " + render(phi);
    bool unknown = false;
    for (const auto& psi : st.numerated) {
      if (!truth_letterless(psi)) continue;
      Verdict v = oracle.proves(psi, phi);
      if (v.is_valid()) {
        c.verdict = Tri::Yes;
        c.trace = "by " + render(psi);
        break;
      }
      if (v.is_unknown()) unknown = true;
    }
    if (c.verdict == Tri::No && unknown) {
      c.verdict = Tri::Unknown;
      c.trace = "some candidates were undecided";
    }
    report.claims.push_back(std::move(c));
  }
  report.verdict = combine(report.claims);
  return report;
}

GapResult search_gap_witness(const EnumeratorState& st, std::size_t size_bound, const Oracle& oracle) {
  const Sentence* phi = nullptr;
  for (const auto& s : st.numerated) {
    if (truth_letterless(s)) {
      phi = &s;
      break;
    }
  }
  if (!phi) throw PreconditionFailed("no true numerated sentence");
  GapResult result{*phi, std::nullopt, 0};
  Sentence strong = conj(*phi, con(*phi));
  auto levels = sentences_by_size(SentenceGrammar::letterless(), size_bound);
  for (std::size_t size = 1; size <= size_bound && !result.witness; ++size) {
    for (const auto& psi : levels[size]) {
      if (st.is_numerated(psi)) continue;
      ++result.candidates_checked;
      if (oracle.strictly_proves(strong, psi) == Tri::Yes && oracle.strictly_proves(psi, *phi) == Tri::Yes) {
        result.witness = psi;
        break;
      }
    }
  }
  return result;
}

std::string dump(const EnumeratorState& st) {
  std::ostringstream out;
  out << "# closure_depth " << st.closure_depth << " universe_max_size " << st.universe_max_size << '\n';
  out << "STAGE " << st.stage << '\n';
  for (const auto& s : st.numerated) out << "NUM " << render(s) << '\n';
  for (const auto& s : st.active) out << "ACT " << render(s) << '\n';
  for (const auto& s : st.active)
    if (truth_letterless(s)) out << "TRUE " << render(s) << '\n';
  return out.str();
}

}  // namespace itercon
