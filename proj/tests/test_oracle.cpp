#include <gtest/gtest.h>

#include "itercon/error.hpp"
#include "itercon/oracle.hpp"
#include "modal.hpp"

using namespace itercon;

namespace {

Sentence S(const char* text) { return parse_sentence(text); }

void expect_refuted(const Sentence& s, const Verdict& v) {
  ASSERT_TRUE(v.is_invalid()) << render(s);
  ASSERT_TRUE(v.countermodel.has_value());
  EXPECT_FALSE(holds_at(*v.countermodel, v.countermodel->root(), s));
  support::ModalStore store;
  EXPECT_FALSE(support::holds_at_root(store, store.from_sentence(s), *v.countermodel));
}

}  // namespace

TEST(Decide, Examples) {
  Oracle o;
  EXPECT_TRUE(o.decide(S("(Con(T) -> Con(~Con(T)))")).is_valid());
  Verdict v = o.decide(S("Con(T)"));
  expect_refuted(S("Con(T)"), v);
  EXPECT_EQ(v.countermodel->worlds(), 1u);
  EXPECT_TRUE(o.decide(S("(Con(Con(T)) -> Con(T))")).is_valid());
}

TEST(Decide, CountermodelsRefute) {
  Oracle o;
  for (const char* text : {"p", "(Con(p) -> p)", "~Con(Con(Con(T)))", "(~Con(~p) -> p)", "(@hyp_a -> Con(@hyp_a))"}) {
    Sentence s = S(text);
    expect_refuted(s, o.decide(s));
  }
  Verdict v = o.decide(S("~Con(Con(Con(T)))"));
  EXPECT_EQ(v.countermodel->worlds(), 4u);
}

TEST(Decide, GoedelLoebFacts) {
  Oracle o;
  EXPECT_TRUE(o.decide(S("(Con(p) -> Con((p & ~Con(p))))")).is_valid());
  EXPECT_TRUE(o.decide(S("(~Con(~(~Con(~p) -> p)) -> ~Con(~p))")).is_valid());
  EXPECT_TRUE(o.decide(S("(Con[3](T) -> Con[2](T))")).is_valid());
  EXPECT_TRUE(o.decide(S("(@hyp_a -> @hyp_a)")).is_valid());
}

TEST(Decide, OutsideFragmentIsUnknown) {
  Oracle o;
  for (const char* text : {"1Con(p)", "ConCF(T)", "ConI[1](p)", "(Con[w](T) -> T)"}) {
    Verdict v = o.decide(S(text));
    EXPECT_TRUE(v.is_unknown()) << text;
    EXPECT_FALSE(v.resource);
    EXPECT_FALSE(v.reason.empty());
  }
}

TEST(Decide, ResourceLimits) {
  OracleConfig tight;
  tight.budget = 3;
  Verdict v = Oracle(tight).decide(S("~(Con(p) & (Con(q) & (Con(~p) & Con(~q))))"));
  EXPECT_TRUE(v.is_unknown());
  EXPECT_TRUE(v.resource);

  OracleConfig few;
  few.model_cap = 2;
  Verdict m = Oracle(few).decide(S("~Con(Con(Con(T)))"));
  EXPECT_TRUE(m.is_unknown());
  EXPECT_TRUE(m.resource);

  OracleConfig small;
  small.size_cap = 3;
  EXPECT_THROW(Oracle(small).decide(S("(p & (p & p))")), SizeCapExceeded);
}

TEST(Decide, Deterministic) {
  Oracle o;
  Sentence s = S("((Con(p) & Con(~p)) -> Con(Con(T)))");
  Verdict a = o.decide(s), b = o.decide(s);
  ASSERT_TRUE(a.is_invalid() && b.is_invalid());
  EXPECT_EQ(a.countermodel->to_text(), b.countermodel->to_text());
}

TEST(Proves, Examples) {
  Oracle o;
  EXPECT_TRUE(o.proves(S("(p & Con(p))"), S("p")).is_valid());
  EXPECT_TRUE(o.proves(S("Con[2](T)"), S("Con[1](T)")).is_valid());
  EXPECT_TRUE(o.proves(S("Con[1](T)"), S("Con[2](T)")).is_invalid());
}

TEST(StrictlyProves, Examples) {
  Oracle o;
  EXPECT_EQ(o.strictly_proves(S("Con[2](T)"), S("Con[1](T)")), Tri::Yes);
  EXPECT_EQ(o.strictly_proves(S("p"), S("p")), Tri::No);
  EXPECT_EQ(o.strictly_proves(S("1Con(p)"), S("Con(p)")), Tri::Unknown);
  EXPECT_EQ(o.strictly_proves(S("p"), S("q")), Tri::No);
}

TEST(Truth, Examples) {
  EXPECT_TRUE(truth_letterless(S("Con(T)")));
  EXPECT_FALSE(truth_letterless(S("~Con(T)")));
  EXPECT_TRUE(truth_letterless(S("Con(~Con(T))")));
  EXPECT_TRUE(truth_letterless(S("Con[40](T)")));
  EXPECT_FALSE(truth_letterless(S("Con(F)")));
  EXPECT_FALSE(truth_letterless(S("~Con(~Con(T))")));
  EXPECT_THROW(truth_letterless(S("Con(p)")), NotLetterless);
  EXPECT_THROW(truth_letterless(S("Con[w](T)")), NotLetterless);
}

TEST(NormalForm, Examples) {
  EXPECT_EQ(render(letterless_nf(S("Con((T & Con(T)))"))), "Con[2](T)");
  EXPECT_EQ(render(letterless_nf(S("(~Con(T) | Con(T))"))), "T");
  EXPECT_EQ(render(letterless_nf(S("(Con(T) & Con[2](T))"))), "Con[2](T)");
  EXPECT_EQ(render(letterless_nf(S("Con(F)"))), "F");
  EXPECT_THROW(letterless_nf(S("Con(p)")), NotLetterless);
}

TEST(NormalForm, EquivalentAndIdempotentOnSmallSentences) {
  Oracle o;
  auto levels = sentences_by_size(SentenceGrammar::letterless(), 6);
  for (const auto& level : levels) {
    for (const auto& s : level) {
      Sentence nf = letterless_nf(s);
      EXPECT_TRUE(o.decide(iff(nf, s)).is_valid()) << render(s);
      EXPECT_EQ(letterless_nf(nf), nf) << render(s);
      EXPECT_EQ(truth_letterless(nf), truth_letterless(s)) << render(s);
    }
  }
}

TEST(ProvesPreorder, ReflexiveAndTransitiveOnSamples) {
  Oracle o;
  auto levels = sentences_by_size(SentenceGrammar::one_atom("p"), 3);
  std::vector<Sentence> pool;
  for (const auto& l : levels) pool.insert(pool.end(), l.begin(), l.end());
  for (const auto& a : pool) {
    EXPECT_TRUE(o.proves(a, a).is_valid());
    for (const auto& b : pool) {
      if (!o.proves(a, b).is_valid()) continue;
      for (const auto& c : pool)
        if (o.proves(b, c).is_valid()) {
          EXPECT_TRUE(o.proves(a, c).is_valid());
        }
    }
  }
}

TEST(Countermodel, TextRoundTrip) {
  Countermodel m(3, {{0, 1}, {0, 2}, {1, 2}}, {{"p"}, {}, {"p", "q"}}, 0);
  std::string text = m.to_text();
  EXPECT_EQ(text, "WORLDS 3\nREL 0 1\nREL 0 2\nREL 1 2\nVAL 0 p\nVAL 2 p\nVAL 2 q\nROOT 0\n");
  EXPECT_EQ(Countermodel::from_text(text).to_text(), text);
  EXPECT_THROW(Countermodel::from_text("WORLDS x\n"), ParseError);
}

TEST(Countermodel, ValidatesFrame) {
  EXPECT_THROW(Countermodel(2, {{0, 0}}, {{}, {}}, 0), PreconditionFailed);
  EXPECT_THROW(Countermodel(3, {{0, 1}, {1, 2}}, {{}, {}, {}}, 0), PreconditionFailed);
  EXPECT_THROW(Countermodel(2, {{0, 1}}, {{}, {}}, 5), PreconditionFailed);
  EXPECT_THROW(Countermodel(2, {{0, 1}, {1, 0}}, {{}, {}}, 0), PreconditionFailed);
}

TEST(Schemata, Instances) {
  Oracle o;
  Sentence p = atom("p"), q = atom("q");
  EXPECT_TRUE(o.decide(schemata::hierarchy_instance(p, 2)).is_valid());
  EXPECT_TRUE(o.decide(schemata::monotonicity_instance(p, q, 2)).is_valid());
  EXPECT_EQ(render(schemata::cut_free_instance(p)), "(Con(p) -> ConCF(p))");
  EXPECT_EQ(render(schemata::with_hypotheses({p, q}, p)), "((p & q) -> p)");
}
