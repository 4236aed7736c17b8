#include "itercon/constructions.hpp"

#include <map>
#include <set>
#include <sstream>

#include "itercon/error.hpp"

namespace itercon {

const SubClaim* ClaimReport::find(std::string_view wanted) const {
  for (const auto& c : claims)
    if (c.label == wanted) return &c;
  return nullptr;
}

std::string ClaimReport::to_text() const {
  std::ostringstream out;
  out << "CLAIM " << label << " VERDICT " << to_string(verdict) << '\n';
  for (const auto& h : hypotheses_used) out << "HYP " << render(h) << '\n';
  for (const auto& c : claims) {
    out << "CLAIM " << label << '.' << c.label << " VERDICT " << to_string(c.verdict) << '\n';
    if (c.countermodel) out << c.countermodel->to_text();
    if (!c.trace.empty()) out << "TRACE " << c.trace << '\n';
  }
  return out.str();
}

Tri combine(const std::vector<SubClaim>& claims) {
  bool unknown = false;
  for (const auto& c : claims) {
    if (c.verdict == Tri::No) return Tri::No;
    if (c.verdict == Tri::Unknown) unknown = true;
  }
  return unknown ? Tri::Unknown : Tri::Yes;
}

SubClaim to_claim(std::string label, const Verdict& v) {
  SubClaim c;
  c.label = std::move(label);
  switch (v.kind) {
    case Verdict::Kind::Valid:
      c.verdict = Tri::Yes;
      break;
    case Verdict::Kind::Invalid:
      c.verdict = Tri::No;
      c.countermodel = v.countermodel;
      break;
    case Verdict::Kind::Unknown:
      c.verdict = Tri::Unknown;
      c.trace = v.reason;
      break;
  }
  return c;
}

InversionResult inversion_witness(const Sentence& s, const Oracle& oracle) {
  Verdict pre = oracle.proves(s, con(top()));
  if (pre.is_invalid()) throw HypothesisNotMet(render(s) + " does not prove Con(T)");
  Sentence psi = implies(con(top()), s);
  Sentence strong = conj(psi, con(psi));
  ClaimReport report;
  report.label = "inversion";
  report.claims.push_back(to_claim("hypothesis", pre));
  report.claims.push_back(to_claim("forward", oracle.proves(s, strong)));
  report.claims.push_back(to_claim("backward", oracle.proves(strong, s)));
  report.verdict = combine(report.claims);
  return {psi, std::move(report)};
}

BbbResult bbb_theta(const Sentence& psi0, const OperatorSpec& op, const Oracle& oracle) {
  std::size_t cap = oracle.config().size_cap;
  auto chi = [&](const Sentence& z) { return implies(con(z), con(conj(z, negation(apply(op, z, cap))))); };
  Sentence chi0 = chi(psi0);
  Sentence psi = check_size(conj(psi0, chi0), cap);
  Sentence op_psi = apply(op, psi, cap);
  Sentence theta = check_size(conj(psi, implies(op_psi, con(psi))), cap);
  Sentence op_theta = apply(op, theta, cap);
  Sentence chi_psi = chi(psi);
  Sentence psi_con = conj(psi, con(psi));
  Sentence theta_con = conj(theta, con(theta));

  ClaimReport report;
  report.label = "bbb";
  report.hypotheses_used = {chi0, chi_psi};

  Verdict refutable = oracle.decide(negation(psi));
  if (refutable.is_valid()) {
    SubClaim c{"hyp_strict", Tri::Yes, std::nullopt, "psi is refutable, hypothesis holds vacuously"};
    report.claims.push_back(std::move(c));
  } else {
    Verdict forward = oracle.proves(op_psi, psi);
    if (!forward.is_valid()) {
      SubClaim c = to_claim("hyp_strict", forward);
      if (forward.is_invalid()) c.trace = "op(psi) does not prove psi";
      report.claims.push_back(std::move(c));
    } else {
      Verdict backward = oracle.proves(psi, op_psi);
      SubClaim c{"hyp_strict", Tri::Unknown, std::nullopt, backward.reason};
      if (backward.is_invalid()) c.verdict = Tri::Yes;
      if (backward.is_valid()) {
        c.verdict = Tri::No;
        c.trace = "psi proves op(psi), so op(psi) does not strictly imply psi";
      }
      report.claims.push_back(std::move(c));
    }
  }
  report.claims.push_back(to_claim("hyp_implies_input", oracle.proves(op_theta, theta)));
  report.claims.push_back(to_claim("claim1", oracle.proves(op_theta, conj(theta, op_psi))));
  report.claims.push_back(to_claim("claim2", oracle.proves(conj(theta, op_psi), psi_con)));
  report.claims.push_back(to_claim("claim3", oracle.proves(conj(chi_psi, psi_con), theta_con)));
  report.claims.push_back(to_claim("conclusion", oracle.proves(conj(chi_psi, op_theta), theta_con)));
  report.verdict = combine(report.claims);
  return {psi, theta, std::move(report)};
}

TowerResult ttt_tower(const Sentence& phi1, const OperatorSpec& op, std::uint64_t n, const Oracle& oracle,
                      std::uint64_t cap) {
  if (n > cap) throw PreconditionFailed("tower height " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  std::size_t size_cap = oracle.config().size_cap;
  auto con_pow = [&](std::uint64_t k, const Sentence& x) {
    return unfold_iter(con_iter(k, x), 1, size_cap).sentence;
  };
  auto f = [&](const Sentence& x) { return apply(op, x, size_cap); };

  TowerResult result;
  result.sequence.push_back(phi1);
  for (std::uint64_t k = 1; k <= n; ++k) {
    const Sentence& phi = result.sequence.back();
    result.sequence.push_back(check_size(conj(phi, implies(f(phi), con_pow(k, phi))), size_cap));
  }
  ClaimReport& report = result.report;
  report.label = "ttt";
  if (n == 0) {
    report.verdict = Tri::Yes;
    return result;
  }
  for (std::uint64_t k = 1; k <= n; ++k) {
    const Sentence& phi = result.sequence[k - 1];
    Sentence h1 = implies(con(phi), con(conj(phi, negation(f(phi)))));
    Sentence h2 = implies(con_pow(k, phi), con(negation(iff(conj(phi, con_pow(k - 1, phi)), f(phi)))));
    report.hypotheses_used.push_back(h1);
    report.hypotheses_used.push_back(h2);
    Sentence premise = check_size(conj_all({h1, h2, phi, con_pow(k, phi)}), size_cap);
    report.claims.push_back(
        to_claim("lemma_k" + std::to_string(k), oracle.proves(premise, con_pow(k, result.sequence[k]))));
  }
  bool unknown = false;
  for (std::size_t i = 0; i < result.sequence.size() && !result.equivalence; ++i) {
    const Sentence& phi = result.sequence[i];
    for (std::uint64_t k = 0; k <= n; ++k) {
      Sentence target = conj(phi, con_pow(k, phi));
      Sentence image = f(phi);
      Verdict a = oracle.proves(image, target);
      Verdict b = a.is_valid() ? oracle.proves(target, image) : a;
      Verdict c = b.is_valid() ? oracle.decide(negation(target)) : b;
      if (a.is_unknown() || b.is_unknown() || c.is_unknown()) unknown = true;
      if (a.is_valid() && b.is_valid() && c.is_invalid()) {
        result.equivalence = std::make_pair(i + 1, k);
        break;
      }
    }
  }
  SubClaim eq;
  eq.label = "equivalence";
  if (result.equivalence) {
    eq.verdict = Tri::Yes;
    eq.trace = "phi_" + std::to_string(result.equivalence->first) + " k=" + std::to_string(result.equivalence->second);
  } else {
    eq.verdict = unknown ? Tri::Unknown : Tri::No;
    eq.trace = unknown ? "some equivalence checks were undecided" : "no phi_i and k <= n coincide";
  }
  report.claims.push_back(std::move(eq));
  report.verdict = combine(report.claims);
  return result;
}

namespace {

// alpha together with everything reached from it through predecessors, all smaller
// naturals, and the fundamental steps l[1] .. l[budget].
std::set<Ordinal> reachable_below(const Ordinal& alpha, std::uint64_t budget, std::size_t cap) {
  if (alpha.is_zero()) throw PreconditionFailed("sequence index must be at least 1");
  std::set<Ordinal> seen;
  std::vector<Ordinal> todo{alpha};
  auto visit = [&](const Ordinal& b) {
    if (b.is_zero() || seen.count(b)) return;
    if (seen.size() >= cap) throw SizeCapExceeded("more than " + std::to_string(cap) + " sequence elements");
    seen.insert(b);
    todo.push_back(b);
  };
  seen.insert(alpha);
  while (!todo.empty()) {
    Ordinal b = todo.back();
    todo.pop_back();
    if (auto k = b.as_finite()) {
      for (std::uint64_t i = 1; i < *k; ++i) visit(Ordinal::finite(i));
    } else if (classify(b) == OrdinalKind::Successor) {
      visit(predecessor(b));
    } else {
      for (std::uint64_t i = 0; i < budget; ++i) visit(fundamental_step(b, i + 1));
    }
  }
  return seen;
}

}  // namespace

OrdinalSequence theta_sequence(const Ordinal& alpha, const OperatorSpec& op, std::uint64_t limit_budget,
                               std::size_t size_cap) {
  std::set<Ordinal> index = reachable_below(alpha, limit_budget, size_cap);
  std::map<Ordinal, Sentence> theta;
  OrdinalSequence out;
  for (const Ordinal& b : index) {
    Sentence s;
    std::string tag = op.name + "_" + ordinal_tag(b);
    if (b == Ordinal::finite(1)) {
      s = schematic("theta1_" + op.name);
    } else if (classify(b) == OrdinalKind::Successor) {
      s = conj(theta.at(predecessor(b)), schematic("theta_succ_" + tag));
    } else {
      std::vector<Sentence> parts;
      for (std::uint64_t i = 0; i < limit_budget; ++i)
        parts.push_back(schematic("true_pi3_theta_" + op.name + "_" + ordinal_tag(fundamental_step(b, i + 1))));
      s = conj(conj_all(parts), schematic("theta_body_" + tag));
    }
    check_size(s, size_cap);
    theta.emplace(b, s);
    out.emplace_back(b, s);
  }
  return out;
}

OrdinalSequence main_phi_sequence(const Ordinal& alpha, const OperatorSpec& op, std::uint64_t limit_budget,
                                  std::size_t size_cap) {
  std::set<Ordinal> index = reachable_below(alpha, limit_budget, size_cap);
  Sentence phi1 = conj_all({schematic("phi1_strict_" + op.name), schematic("phi1_noncoincide_" + op.name),
                            schematic("phi1_monotone_" + op.name), schematic("phi1_pi2_sound_" + op.name)});
  std::map<Ordinal, Sentence> phi;
  std::map<Ordinal, std::set<Ordinal>> below;
  OrdinalSequence out;
  for (const Ordinal& g : index) {
    std::set<Ordinal>& lower = below[g];
    if (auto k = g.as_finite()) {
      for (std::uint64_t i = 1; i < *k; ++i) lower.insert(Ordinal::finite(i));
    } else if (classify(g) == OrdinalKind::Successor) {
      Ordinal p = predecessor(g);
      lower = below.at(p);
      lower.insert(p);
    } else {
      for (std::uint64_t i = 0; i < limit_budget; ++i) lower.insert(fundamental_step(g, i + 1));
    }
    Sentence s = phi1;
    if (!(g == Ordinal::finite(1))) {
      std::vector<Sentence> parts;
      for (const Ordinal& d : lower) {
        const Sentence& pd = phi.at(d);
        Sentence image = apply(op, pd, size_cap);
        Sentence truth = image.kind() == NodeKind::Con || image.kind() == NodeKind::ConIter
                             ? image
                             : schematic("true_pi1_" + op.name + "_phi_" + ordinal_tag(d));
        parts.push_back(implies(truth, con_iter(d, pd)));
        check_size(parts.back(), size_cap);
      }
      s = conj(phi1, conj_all(parts));
    }
    check_size(s, size_cap);
    phi.emplace(g, s);
    out.emplace_back(g, s);
  }
  return out;
}

ClaimReport onecon_successor_check(const Sentence& s, std::uint64_t k, const Oracle& oracle) {
  if (k > kOneConMaxK) throw PreconditionFailed("k must be at most " + std::to_string(kOneConMaxK));
  Sentence ck = con_iter(k, s);
  Sentence h = implies(ck, con(conj(s, ck)));
  ClaimReport report;
  report.label = "onecon_successor";
  report.hypotheses_used = {h};
  report.claims.push_back(to_claim("successor", oracle.proves(conj(h, ck), con_iter(k + 1, s))));
  report.verdict = combine(report.claims);
  return report;
}

}  // namespace itercon
