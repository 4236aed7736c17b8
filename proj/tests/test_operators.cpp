#include <gtest/gtest.h>

#include "itercon/error.hpp"
#include "itercon/operators.hpp"

using namespace itercon;

namespace {

Sentence S(const char* text) { return parse_sentence(text); }

}  // namespace

TEST(Apply, Examples) {
  EXPECT_EQ(render(apply(ops::conj_con(), S("p"))), "(p & Con(p))");
  EXPECT_EQ(apply(ops::identity(), S("Con(T)")), S("Con(T)"));
  EXPECT_EQ(render(apply(ops::conj_con_ord(Ordinal::omega()), S("p"))), "(p & Con[w](p))");
  EXPECT_EQ(render(apply(ops::con_k(3), S("p"))), "Con[3](p)");
  EXPECT_EQ(render(apply(ops::negate(), S("p"))), "~p");
  EXPECT_THROW(apply(ops::conj_con(), S("(p & (p & p))"), 6), SizeCapExceeded);
}

TEST(Star, Shapes) {
  EXPECT_EQ(render(build_star(S("p"), 1)), "(p & (ConI[0](p) -> ConI[0]((p & ConI[0](p)))))");
  Sentence two = build_star(S("T"), 2);
  EXPECT_EQ(render(two),
            "((T & (ConI[0](T) -> ConI[0]((T & ConI[0](T))))) & (ConI[1](T) -> ConI[1]((T & ConI[1](T)))))");
  EXPECT_THROW(build_star(S("p"), 0), PreconditionFailed);
  EXPECT_EQ(apply(ops::star(2), S("T")), two);
}

TEST(SlowCon, Shapes) {
  EXPECT_EQ(render(build_slowcon(S("p"), 1)), "(@F_eps0_total_at_0 -> ConI[0](p))");
  EXPECT_EQ(render(build_slowcon(S("T"), 2)),
            "((@F_eps0_total_at_0 -> ConI[0](T)) & (@F_eps0_total_at_1 -> ConI[1](T)))");
  EXPECT_THROW(build_slowcon(S("p"), 0), PreconditionFailed);
}

TEST(Registry, BuiltinsAndParametrisedNames) {
  OperatorRegistry reg = OperatorRegistry::builtin();
  for (const char* name : {"identity", "conj_con", "con", "negate"}) EXPECT_EQ(reg.find(name).name, name);
  EXPECT_EQ(render(apply(reg.find("conj_con_k3"), S("p"))), "(p & Con[3](p))");
  EXPECT_EQ(render(apply(reg.find("con_k2"), S("p"))), "Con[2](p)");
  EXPECT_EQ(render(apply(reg.find("conj_con_ord(w+1)"), S("p"))), "(p & Con[w+1](p))");
  EXPECT_EQ(apply(reg.find("star1"), S("p")), build_star(S("p"), 1));
  EXPECT_EQ(apply(reg.find("slowcon2"), S("p")), build_slowcon(S("p"), 2));
  EXPECT_THROW(reg.find("nope"), PreconditionFailed);
  EXPECT_THROW(reg.find("conj_con_ord(w+w^2)"), Error);

  reg.add({"double_con", [](const Sentence& s) { return con(con(s)); }, {}});
  EXPECT_EQ(render(apply(reg.find("double_con"), S("p"))), "Con(Con(p))");
  auto names = reg.names();
  EXPECT_NE(std::find(names.begin(), names.end(), "double_con"), names.end());
}

TEST(Declared, PropertiesHoldOnSamples) {
  Oracle o;
  std::vector<Sentence> samples{S("p"), S("Con(p)"), S("(p -> q)"), S("~Con(T)"), S("T")};
  for (const auto& op : {ops::identity(), ops::conj_con(), ops::conj_con_k(2), ops::con(), ops::star(1)}) {
    for (const auto& s : samples) {
      Sentence image = apply(op, s);
      if (op.declared.implies_input) {
        EXPECT_FALSE(o.proves(image, s).is_invalid()) << op.name;
      }
      if (op.declared.bounded_by_con_k) {
        Sentence bound = conj(s, unfold_iter(con_iter(*op.declared.bounded_by_con_k, s), 1).sentence);
        Verdict v = o.proves(bound, image);
        EXPECT_FALSE(v.is_invalid()) << op.name;
      }
    }
  }
}

TEST(RandomSentence, ExactSizeAndDeterministic) {
  std::mt19937_64 a(11), b(11);
  for (std::size_t n = 1; n <= 12; ++n) {
    Sentence x = random_sentence(a, n, {"p", "q"});
    EXPECT_EQ(x.size(), n);
    EXPECT_EQ(x, random_sentence(b, n, {"p", "q"}));
  }
}

TEST(Weakening, PairsAreProvable) {
  Oracle o;
  auto pairs = weakening_pairs(40, 3);
  ASSERT_EQ(pairs.size(), 40u);
  for (const auto& [s, t] : pairs) EXPECT_TRUE(o.proves(s, t).is_valid()) << render(s) << " / " << render(t);
  EXPECT_EQ(weakening_pairs(40, 3), pairs);
}

TEST(CheckMonotone, Examples) {
  MonotoneReport cc = check_monotone(ops::conj_con(), 50, 7);
  EXPECT_EQ(cc.valid, 50u);
  EXPECT_EQ(cc.invalid, 0u);
  MonotoneReport id = check_monotone(ops::identity(), 50, 7);
  EXPECT_EQ(id.valid, 50u);
  MonotoneReport neg = check_monotone(ops::negate(), 50, 7);
  EXPECT_GT(neg.invalid, 0u);
  std::string text = neg.to_text();
  EXPECT_NE(text.find("WITNESS"), std::string::npos);
  EXPECT_NE(text.find("SUMMARY"), std::string::npos);
  for (const auto& item : neg.items) {
    if (!item.verdict.is_invalid()) continue;
    EXPECT_FALSE(holds_at(*item.verdict.countermodel, item.verdict.countermodel->root(),
                          implies(negation(item.s), negation(item.t))));
  }
}
