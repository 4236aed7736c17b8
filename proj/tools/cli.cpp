#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "itercon/constructions.hpp"
#include "itercon/enumerator.hpp"
#include "itercon/error.hpp"
#include "itercon/operators.hpp"
#include "itercon/oracle.hpp"
#include "itercon/ordinal.hpp"
#include "itercon/sentence.hpp"

namespace itercon::cli {

namespace {

struct Options {
  std::uint64_t budget = OracleConfig{}.budget;
  std::size_t model_cap = OracleConfig{}.model_cap;
  std::size_t size_cap = Sentence::kDefaultSizeCap;
  std::uint64_t limit_budget = 2;
  std::uint64_t stages = 1;
  std::uint64_t closure_depth = 0;
  std::optional<std::uint64_t> seed;
  std::size_t size_bound = 0;
  std::uint64_t n = 1;
  std::uint64_t bound = 1;
  std::uint64_t k = 1;
  std::optional<std::uint64_t> horizon;
  std::string op = "conj_con";
  std::size_t corpus_size = 50;
  std::string a;
  std::string b;
  std::uint64_t index = 0;

  Oracle oracle() const { return Oracle(OracleConfig{budget, model_cap, size_cap}); }
  Sentence sentence(const std::string& text) const {
    return parse_sentence(text, SchematicVocabulary::standard(), size_cap);
  }
  OperatorSpec op_spec() const { return OperatorRegistry::builtin().find(op); }
};

int print_verdict(std::ostream& out, const Verdict& v) {
  out << "RESULT: " << to_string(v.kind);
  if (v.is_unknown()) out << ' ' << v.reason;
  out << '\n';
  if (v.countermodel) out << v.countermodel->to_text();
  if (v.is_unknown()) return v.resource ? kExitResource : kExitUnknown;
  return kExitOk;
}

int print_tri(std::ostream& out, Tri t) {
  std::string word = to_string(t);
  std::transform(word.begin(), word.end(), word.begin(), [](unsigned char c) { return std::toupper(c); });
  out << "RESULT: " << word << '\n';
  return t == Tri::Unknown ? kExitUnknown : kExitOk;
}

int print_report(std::ostream& out, const ClaimReport& r) {
  out << r.to_text();
  return r.verdict == Tri::Unknown ? kExitUnknown : kExitOk;
}

int print_sequence(std::ostream& out, const OrdinalSequence& seq) {
  out << "# fundamental sequences: " << kFundamentalConvention << '\n';
  for (const auto& [b, s] : seq) out << "SEQ " << render(b) << ' ' << render(s) << '\n';
  return kExitOk;
}

CLI::Option* positional(CLI::App* app, const char* name, std::string& target, const char* what) {
  return app->add_option(name, target, what)->required();
}

void oracle_flags(CLI::App* app, Options& o) {
  app->add_option("--budget", o.budget, "Tableau node expansions per query")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app->add_option("--model-cap", o.model_cap, "Maximum countermodel worlds")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app->add_option("--size-cap", o.size_cap, "Maximum sentence size in nodes")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

void op_flag(CLI::App* app, Options& o) {
  app->add_option("--op", o.op,
                  "Operator: identity, conj_con, con, negate, conj_con_k<N>, con_k<N>, star<N>, slowcon<N>, "
                  "conj_con_ord(<ordinal>)")
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  std::ostringstream buf;
  std::function<int()> action;

  CLI::App app{"Iterated consistency workbench", "itercon"};
  app.require_subcommand(1);

  auto* decide = app.add_subcommand("decide", "Decide provability of a sentence");
  positional(decide, "sentence", o.a, "Sentence");
  oracle_flags(decide, o);
  decide->callback([&] { action = [&] { return print_verdict(buf, o.oracle().decide(o.sentence(o.a))); }; });

  auto* proves = app.add_subcommand("proves", "Decide whether S proves T");
  positional(proves, "s", o.a, "Antecedent");
  positional(proves, "t", o.b, "Consequent");
  oracle_flags(proves, o);
  proves->callback([&] {
    action = [&] { return print_verdict(buf, o.oracle().proves(o.sentence(o.a), o.sentence(o.b))); };
  });

  auto* strict = app.add_subcommand("strict", "Decide whether S strictly implies T");
  positional(strict, "s", o.a, "Stronger sentence");
  positional(strict, "t", o.b, "Weaker sentence");
  oracle_flags(strict, o);
  strict->callback([&] {
    action = [&] { return print_tri(buf, o.oracle().strictly_proves(o.sentence(o.a), o.sentence(o.b))); };
  });

  auto* nf = app.add_subcommand("nf", "Normal form of a letterless sentence");
  positional(nf, "sentence", o.a, "Letterless sentence");
  nf->callback([&] {
    action = [&] {
      buf << render(letterless_nf(o.sentence(o.a))) << '\n';
      return kExitOk;
    };
  });

  auto* truth = app.add_subcommand("truth", "Truth value of a letterless sentence");
  positional(truth, "sentence", o.a, "Letterless sentence");
  truth->callback([&] {
    action = [&] {
      buf << (truth_letterless(o.sentence(o.a)) ? "TRUE" : "FALSE") << '\n';
      return kExitOk;
    };
  });

  auto* parse = app.add_subcommand("parse", "Parse and print a sentence in canonical form");
  positional(parse, "sentence", o.a, "Sentence");
  parse->callback([&] {
    action = [&] {
      Sentence s = o.sentence(o.a);
      buf << render(s) << "\n# size " << s.size() << '\n';
      return kExitOk;
    };
  });

  auto* unfold = app.add_subcommand("unfold", "Unfold iterated consistency");
  positional(unfold, "sentence", o.a, "Sentence");
  unfold->add_option("--limit-budget", o.limit_budget, "Fundamental steps per limit index")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  unfold->callback([&] {
    action = [&] {
      UnfoldResult r = unfold_iter(o.sentence(o.a), o.limit_budget, o.size_cap);
      buf << render(r.sentence) << "\n# " << (r.exact ? "exact" : "inexact") << '\n';
      if (!r.exact) buf << "# fundamental sequences: " << kFundamentalConvention << '\n';
      return kExitOk;
    };
  });

  auto* ord = app.add_subcommand("ord", "Ordinal notation operations");
  ord->require_subcommand(1);
  auto* cmp = ord->add_subcommand("cmp", "Compare two ordinals");
  positional(cmp, "a", o.a, "Ordinal");
  positional(cmp, "b", o.b, "Ordinal");
  cmp->callback([&] {
    action = [&] {
      buf << to_string(compare(parse_ordinal(o.a), parse_ordinal(o.b))) << '\n';
      return kExitOk;
    };
  });
  auto* classify_cmd = ord->add_subcommand("classify", "Zero, Successor or Limit");
  positional(classify_cmd, "a", o.a, "Ordinal");
  classify_cmd->callback([&] {
    action = [&] {
      buf << to_string(classify(parse_ordinal(o.a))) << '\n';
      return kExitOk;
    };
  });
  auto* pred = ord->add_subcommand("pred", "Predecessor of a successor");
  positional(pred, "a", o.a, "Ordinal");
  pred->callback([&] {
    action = [&] {
      buf << render(predecessor(parse_ordinal(o.a))) << '\n';
      return kExitOk;
    };
  });
  auto* fund = ord->add_subcommand("fund", "n-th fundamental-sequence element of a limit");
  positional(fund, "a", o.a, "Limit ordinal");
  fund->add_option("n", o.index, "Index")->required();
  fund->callback([&] {
    action = [&] {
      buf << render(fundamental_step(parse_ordinal(o.a), o.index)) << '\n';
      buf << "# fundamental sequences: " << kFundamentalConvention << '\n';
      return kExitOk;
    };
  });

  auto* construct = app.add_subcommand("construct", "Proof gadgets");
  construct->require_subcommand(1);

  auto* inversion = construct->add_subcommand("inversion", "Con-inversion witness");
  positional(inversion, "sentence", o.a, "Sentence proving Con(T)");
  oracle_flags(inversion, o);
  inversion->callback([&] {
    action = [&] {
      InversionResult r = inversion_witness(o.sentence(o.a), o.oracle());
      buf << "PSI " << render(r.psi) << '\n';
      return print_report(buf, r.report);
    };
  });

  auto* bbb = construct->add_subcommand("bbb", "Theta construction and its claims");
  positional(bbb, "psi0", o.a, "Base sentence");
  op_flag(bbb, o);
  oracle_flags(bbb, o);
  bbb->callback([&] {
    action = [&] {
      BbbResult r = bbb_theta(o.sentence(o.a), o.op_spec(), o.oracle());
      buf << "PSI " << render(r.psi) << "\nTHETA " << render(r.theta) << '\n';
      return print_report(buf, r.report);
    };
  });

  auto* ttt = construct->add_subcommand("ttt", "Finite tower and coincidence search");
  positional(ttt, "phi1", o.a, "First sentence of the tower");
  op_flag(ttt, o);
  ttt->add_option("--n", o.n, "Tower height")->capture_default_str();
  oracle_flags(ttt, o);
  ttt->callback([&] {
    action = [&] {
      TowerResult r = ttt_tower(o.sentence(o.a), o.op_spec(), o.n, o.oracle());
      for (std::size_t i = 0; i < r.sequence.size(); ++i) buf << "PHI " << i + 1 << ' ' << render(r.sequence[i]) << '\n';
      return print_report(buf, r.report);
    };
  });

  auto* theta = construct->add_subcommand("theta", "Schematic theta sequence");
  positional(theta, "alpha", o.a, "Ordinal at least 1");
  op_flag(theta, o);
  theta->add_option("--limit-budget", o.limit_budget, "Fundamental steps per limit")->capture_default_str();
  theta->callback([&] {
    action = [&] { return print_sequence(buf, theta_sequence(parse_ordinal(o.a), o.op_spec(), o.limit_budget, o.size_cap)); };
  });

  auto* mainphi = construct->add_subcommand("mainphi", "Schematic phi sequence");
  positional(mainphi, "alpha", o.a, "Ordinal at least 1");
  op_flag(mainphi, o);
  mainphi->add_option("--limit-budget", o.limit_budget, "Fundamental steps per limit")->capture_default_str();
  mainphi->callback([&] {
    action = [&] {
      return print_sequence(buf, main_phi_sequence(parse_ordinal(o.a), o.op_spec(), o.limit_budget, o.size_cap));
    };
  });

  auto* star = construct->add_subcommand("star", "Bounded star sentence");
  positional(star, "sentence", o.a, "Sentence");
  star->add_option("--bound", o.bound, "Quantifier instances")->capture_default_str();
  star->callback([&] {
    action = [&] {
      buf << render(build_star(o.sentence(o.a), o.bound, o.size_cap)) << '\n';
      return kExitOk;
    };
  });

  auto* slowcon = construct->add_subcommand("slowcon", "Bounded slow consistency sentence");
  positional(slowcon, "sentence", o.a, "Sentence");
  slowcon->add_option("--bound", o.bound, "Quantifier instances")->capture_default_str();
  slowcon->callback([&] {
    action = [&] {
      buf << render(build_slowcon(o.sentence(o.a), o.bound, o.size_cap)) << '\n';
      return kExitOk;
    };
  });

  auto* onecon = construct->add_subcommand("onecon-check", "1Con successor instance");
  positional(onecon, "sentence", o.a, "Sentence");
  onecon->add_option("--k", o.k, "Iteration level")->capture_default_str();
  oracle_flags(onecon, o);
  onecon->callback([&] { action = [&] { return print_report(buf, onecon_successor_check(o.sentence(o.a), o.k, o.oracle())); }; });

  auto* op = app.add_subcommand("op", "Operator harnesses");
  op->require_subcommand(1);
  auto* mono = op->add_subcommand("check-monotone", "Seeded monotonicity check");
  op_flag(mono, o);
  mono->add_option("--corpus-size", o.corpus_size, "Number of pairs")->capture_default_str();
  mono->add_option("--seed", o.seed, "Corpus seed")->required();
  oracle_flags(mono, o);
  mono->callback([&] {
    action = [&] {
      MonotoneReport r = check_monotone(o.op_spec(), o.corpus_size, *o.seed, o.oracle());
      buf << r.to_text();
      return r.unknown > 0 ? kExitUnknown : kExitOk;
    };
  });

  auto* en = app.add_subcommand("enum", "Staged enumeration of letterless sentences");
  en->add_option("--stages", o.stages, "Steps after stage 0")->capture_default_str();
  en->add_option("--closure-depth", o.closure_depth, "Equivalence closure rounds")->capture_default_str();
  en->add_option("--horizon", o.horizon, "Check unbounded truth up to this index");
  en->add_option("--size-bound", o.size_bound, "Search for a gap witness up to this size (0 skips)")
      ->capture_default_str();
  oracle_flags(en, o);
  en->callback([&] {
    action = [&] {
      Oracle oracle = o.oracle();
      bool unknown = false;
      EnumeratorState st = enumerator_init(o.closure_depth, oracle);
      for (std::uint64_t i = 0;; ++i) {
        buf << dump(st);
        ClaimReport inc = verify_incompatibility(st, oracle);
        buf << "# true_actives " << true_active_count(st) << " incompatibility " << to_string(inc.verdict) << '\n';
        unknown = unknown || inc.verdict == Tri::Unknown;
        if (i == o.stages) break;
        st = enumerator_step(st, oracle);
      }
      if (o.horizon) {
        ClaimReport r = verify_unbounded_truth(st, *o.horizon, oracle);
        buf << r.to_text();
        unknown = unknown || r.verdict == Tri::Unknown;
      }
      if (o.size_bound > 0) {
        GapResult g = search_gap_witness(st, o.size_bound, oracle);
        buf << "GAP " << (g.witness ? "FOUND " + render(*g.witness) : std::string("NOTFOUND")) << " phi "
            << render(g.phi) << " checked " << g.candidates_checked << '\n';
      }
      return unknown ? kExitUnknown : kExitOk;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  int code;
  try {
    code = action ? action() : kExitUsage;
  } catch (const SizeCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    code = kExitResource;
  } catch (const StageCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    code = kExitResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    code = kExitUsage;
  }
  out << buf.str();
  return code;
}

}  // namespace itercon::cli
