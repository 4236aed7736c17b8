#include <gtest/gtest.h>

#include "generators.hpp"
#include "hilbert.hpp"
#include "itercon/sentence.hpp"
#include "modal.hpp"
#include "reference_ordinal.hpp"

using namespace itercon;
using namespace itercon::support;

TEST(Support, ReferenceFundamentalTable) {
  // w^2 = w^(1+1): step n is w*n.
  RefOrdinal w2{{{{2}, 1}}};
  EXPECT_EQ(ref_text(ref_fundamental(w2, 2)), "w*2");
  RefOrdinal ww{{{{0, 1}, 1}}};
  EXPECT_EQ(ref_text(ref_fundamental(ww, 3)), "w^3");
  EXPECT_EQ(ref_text(ref_fundamental(ww, 0)), "1");
}

TEST(Support, SmallModelCounts) {
  // Unlabelled posets on 1..3 points: 1, 2, 5.
  EXPECT_EQ(all_small_models(1, 0).size(), 1u);
  EXPECT_EQ(all_small_models(2, 0).size(), 3u);
  EXPECT_EQ(all_small_models(3, 0).size(), 8u);
  EXPECT_EQ(all_small_models(4, 0).size(), 8u + 16u);
}

TEST(Support, GeneratorMatchesLibraryCounts) {
  auto mine = all_sentences(6, "p");
  auto levels = sentences_by_size(SentenceGrammar::one_atom("p"), 6);
  std::size_t total = 0;
  for (const auto& l : levels) total += l.size();
  EXPECT_EQ(mine.size(), total);
}

TEST(Support, ProofSearchFindsCheckableProofs) {
  ModalStore st;
  int p = st.var("p");
  int loeb = st.imp(st.box(st.imp(st.box(p), p)), st.box(p));
  GlProofSearch search(st);
  ASSERT_EQ(search.prove(loeb), GlProofSearch::Outcome::Proved);
  EXPECT_EQ(check_proof(st, search.lines(), loeb), "");
  int four = st.imp(st.box(p), st.box(st.box(p)));
  ASSERT_EQ(search.prove(four), GlProofSearch::Outcome::Proved);
  EXPECT_EQ(check_proof(st, search.lines(), four), "");
  int t = st.imp(st.box(p), p);
  EXPECT_EQ(search.prove(t), GlProofSearch::Outcome::NoProof);
}

TEST(Support, CheckerRejectsTamperedProof) {
  ModalStore st;
  int p = st.var("p");
  int goal = st.imp(st.box(st.conj(p, p)), st.box(p));
  GlProofSearch search(st);
  ASSERT_EQ(search.prove(goal), GlProofSearch::Outcome::Proved);
  auto lines = search.lines();
  ASSERT_EQ(check_proof(st, lines, goal), "");
  bool tampered = false;
  for (auto& l : lines) {
    if (l.rule == Rule::AxiomLob || l.rule == Rule::AxiomK) {
      l.formula = st.imp(st.box(p), p);
      tampered = true;
      break;
    }
  }
  if (!tampered) lines.insert(lines.begin(), ProofLine{st.imp(st.box(p), p), Rule::AxiomK, {}});
  EXPECT_NE(check_proof(st, lines, goal), "");
  std::vector<ProofLine> bogus{{goal, Rule::TautConseq, {}}};
  EXPECT_NE(check_proof(st, bogus, goal), "");
}
