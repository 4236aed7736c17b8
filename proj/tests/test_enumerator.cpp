#include <gtest/gtest.h>

#include "itercon/enumerator.hpp"
#include "itercon/error.hpp"

using namespace itercon;

namespace {

Sentence S(const char* text) { return parse_sentence(text); }

}  // namespace

TEST(Enumeration, FirstSentences) {
  LetterlessEnumeration e;
  EXPECT_EQ(render(e.at(0)), "Con(T)");
  EXPECT_EQ(render(e.at(1)), "Con(Con(T))");
  std::set<std::string> classes;
  for (std::size_t k = 0; k < 12; ++k) {
    Sentence nf = letterless_nf(e.at(k));
    EXPECT_NE(render(nf), "T");
    EXPECT_NE(render(nf), "F");
    EXPECT_TRUE(classes.insert(render(nf)).second);
    EXPECT_EQ(classes.count(render(letterless_nf(negation(e.at(k))))), 0u);
  }
}

TEST(Enumerator, InitExample) {
  EnumeratorState st = enumerator_init(0);
  EXPECT_EQ(st.stage, 0u);
  EXPECT_EQ(st.numerated, (std::vector<Sentence>{S("Con(T)"), S("~Con(T)")}));
  EXPECT_EQ(st.active, (std::vector<Sentence>{S("(Con(T) & Con(Con(T)))"), S("(~Con(T) & Con(~Con(T)))")}));
  EXPECT_TRUE(truth_letterless(st.active[0]));
  EXPECT_FALSE(truth_letterless(st.active[1]));
  EXPECT_EQ(true_active_count(st), 1u);
}

TEST(Enumerator, ClosureOnlyAddsEquivalents) {
  Oracle o;
  EnumeratorState st = enumerator_init(2, o);
  EXPECT_EQ(st.universe_max_size, 3u);
  EXPECT_EQ(st.numerated[0], S("Con(T)"));
  EXPECT_FALSE(st.closure_added.empty());
  for (const auto& s : st.closure_added) {
    bool matched = o.proves(s, S("Con(T)")).is_valid() && o.proves(S("Con(T)"), s).is_valid();
    matched = matched || (o.proves(s, S("~Con(T)")).is_valid() && o.proves(S("~Con(T)"), s).is_valid());
    EXPECT_TRUE(matched) << render(s);
    EXPECT_LE(s.size(), 3u);
  }
}

TEST(Enumerator, StepExamples) {
  Oracle o;
  EnumeratorState st = enumerator_step(enumerator_init(0, o), o);
  EXPECT_EQ(st.stage, 1u);
  EXPECT_EQ(st.active.size(), 4u);
  EXPECT_GE(st.numerated.size(), 4u);
  EXPECT_EQ(true_active_count(st), 1u);
  EXPECT_EQ(verify_incompatibility(st, o).verdict, Tri::Yes);

  EnumeratorState capped = enumerator_init(0, o);
  EXPECT_THROW(enumerator_step(capped, o, 0), StageCapExceeded);
}

TEST(Enumerator, Incompatibility) {
  Oracle o;
  EnumeratorState st = enumerator_init(0, o);
  EXPECT_EQ(verify_incompatibility(st, o).verdict, Tri::Yes);
  st = enumerator_step(enumerator_step(st, o), o);
  ClaimReport r = verify_incompatibility(st, o);
  EXPECT_EQ(r.verdict, Tri::Yes);
  EXPECT_EQ(st.active.size(), 8u);

  EnumeratorState single = enumerator_init(0, o);
  single.active.resize(1);
  EXPECT_EQ(verify_incompatibility(single, o).verdict, Tri::Yes);
}

TEST(Enumerator, UnboundedTruth) {
  Oracle o;
  EnumeratorState st = enumerator_init(0, o);
  EXPECT_EQ(verify_unbounded_truth(st, 0, o).verdict, Tri::Yes);
  for (int i = 0; i < 4; ++i) st = enumerator_step(st, o);
  EXPECT_EQ(verify_unbounded_truth(st, 3, o).verdict, Tri::Yes);
  EXPECT_THROW(verify_unbounded_truth(st, 5, o), PreconditionFailed);
}

TEST(Enumerator, GapSearch) {
  Oracle o;
  EnumeratorState st = enumerator_init(0, o);
  GapResult g = search_gap_witness(st, 3, o);
  EXPECT_EQ(g.phi, S("Con(T)"));
  EXPECT_GT(g.candidates_checked, 0u);
  if (g.witness) {
    Sentence strong = conj(g.phi, con(g.phi));
    EXPECT_EQ(o.strictly_proves(strong, *g.witness), Tri::Yes);
    EXPECT_EQ(o.strictly_proves(*g.witness, g.phi), Tri::Yes);
  }
  EnumeratorState none = st;
  none.numerated = {S("~Con(T)")};
  EXPECT_THROW(search_gap_witness(none, 3, o), PreconditionFailed);
}

TEST(Enumerator, Dump) {
  std::string text = dump(enumerator_init(0));
  EXPECT_EQ(text,
            "# closure_depth 0 universe_max_size 1\n"
            "STAGE 0\n"
            "NUM Con(T)\n"
            "NUM ~Con(T)\n"
            "ACT (Con(T) & Con(Con(T)))\n"
            "ACT (~Con(T) & Con(~Con(T)))\n"
            "TRUE (Con(T) & Con(Con(T)))\n");
}
