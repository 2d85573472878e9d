/* Copyright 2026 The nlcov Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <algorithm>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "nlcov/eval.hpp"
#include "nlcov/synthetic.hpp"
#include "test_support.hpp"

namespace nlcov {
namespace {

CorpusDocument Read(const std::string &text) {
  std::istringstream in(text);
  return ReadConllx(in);
}

std::vector<ArcSet> GoldParses(const CorpusDocument &doc) {
  std::vector<ArcSet> out;
  for (const Sentence &s : doc.sentences) out.push_back(GoldArcs(s));
  return out;
}

const char *kHeRuns =
    "1\tHe\t_\tP\tPRP\t_\t2\tnsubj\t_\t_\n"
    "2\truns\t_\tV\tVBZ\t_\t0\troot\t_\t_\n"
    "3\t.\t_\tPUNCT\t.\t_\t2\tpunct\t_\t_\n";

TEST(ScoreParses, PerfectParse) {
  const CorpusDocument doc = Read(kHeRuns);
  const ScoreReport r = ScoreParses(doc, GoldParses(doc));
  EXPECT_EQ(r.uas, 1.0);
  EXPECT_EQ(r.las, 1.0);
  EXPECT_EQ(r.tokens_scored, 3);
  EXPECT_EQ(r.tokens_excluded, 0);
}

TEST(ScoreParses, WrongLabelCountsForUasOnly) {
  const CorpusDocument doc = Read(
      "1\tHe\t_\tP\tPRP\t_\t2\tnsubj\t_\t_\n"
      "2\truns\t_\tV\tVBZ\t_\t0\troot\t_\t_\n");
  const ScoreReport r = ScoreParses(doc, {ArcSet{{2, 1, "obj"}, {0, 2, "root"}}});
  EXPECT_EQ(r.uas, 1.0);
  EXPECT_EQ(r.las, 0.5);
}

TEST(ScoreParses, PunctuationExclusion) {
  const CorpusDocument doc = Read(kHeRuns);
  ScoreOptions options;
  options.punct = PunctPolicy::kExclude;
  const ScoreReport r = ScoreParses(doc, GoldParses(doc), options);
  EXPECT_EQ(r.tokens_scored, 2);
  EXPECT_EQ(r.tokens_excluded, 1);
  EXPECT_EQ(r.uas, 1.0);

  // A wrong head on the full stop only matters when punctuation is scored.
  const std::vector<ArcSet> off = {ArcSet{{2, 1, "nsubj"}, {0, 2, "root"}, {1, 3, "punct"}}};
  EXPECT_EQ(ScoreParses(doc, off, options).uas, 1.0);
  EXPECT_NEAR(ScoreParses(doc, off).uas, 2.0 / 3.0, 1e-12);
}

TEST(ScoreParses, PosTagBlacklistOverridesFormRule) {
  const CorpusDocument doc = Read(kHeRuns);
  ScoreOptions options;
  options.punct = PunctPolicy::kExclude;
  options.punct_tags = {"PRP"};
  const ScoreReport r = ScoreParses(doc, GoldParses(doc), options);
  EXPECT_EQ(r.tokens_excluded, 1);
  EXPECT_EQ(r.tokens_scored, 2);
}

TEST(ScoreParses, ArityMismatch) {
  const CorpusDocument doc = Read(kHeRuns);
  EXPECT_THROW(ScoreParses(doc, {}), Error);
}

TEST(ScoreParses, InvariantToSentenceOrderAndLasBelowUas) {
  const CorpusDocument doc = Read(std::string(kHeRuns) + "\n" +
                                  "1\tGo\t_\tV\tVB\t_\t0\troot\t_\t_\n"
                                  "2\thome\t_\tN\tNN\t_\t1\tobj\t_\t_\n");
  std::vector<ArcSet> parses = {ArcSet{{0, 1, "root"}, {1, 2, "x"}, {2, 3, "punct"}},
                                ArcSet{{0, 2, "root"}, {2, 1, "obj"}}};
  const ScoreReport forward = ScoreParses(doc, parses);
  CorpusDocument reversed = doc;
  std::reverse(reversed.sentences.begin(), reversed.sentences.end());
  std::reverse(parses.begin(), parses.end());
  const ScoreReport backward = ScoreParses(reversed, parses);
  EXPECT_EQ(forward.uas, backward.uas);
  EXPECT_EQ(forward.las, backward.las);
  EXPECT_LE(forward.las, forward.uas);
  EXPECT_EQ(forward.tokens_scored + forward.tokens_excluded, 5);
}

TEST(IsPunctuationForm, UnicodeCategories) {
  EXPECT_TRUE(IsPunctuationForm("."));
  EXPECT_TRUE(IsPunctuationForm("..."));
  EXPECT_TRUE(IsPunctuationForm("\xE2\x80\x94"));  // em dash, Pd
  EXPECT_TRUE(IsPunctuationForm("\xC2\xBF"));      // inverted question mark, Po
  EXPECT_TRUE(IsPunctuationForm("\xE3\x80\x82"));  // ideographic full stop
  EXPECT_FALSE(IsPunctuationForm(""));
  EXPECT_FALSE(IsPunctuationForm("a."));
  EXPECT_FALSE(IsPunctuationForm("$"));  // Sc, a symbol
  EXPECT_FALSE(IsPunctuationForm("+"));  // Sm
  EXPECT_FALSE(IsPunctuationForm("\xFF"));
}

TEST(TransitionStats, ExampleTree) {
  const TransitionStats stats = ComputeTransitionStats({testing::ExampleTree()});
  ASSERT_EQ(stats.per_sentence.size(), 1u);
  EXPECT_EQ(stats.per_sentence[0].covington, 12);
  EXPECT_EQ(stats.per_sentence[0].nl_covington, 9);
  EXPECT_EQ(stats.avg_cov, 12.0);
  EXPECT_EQ(stats.avg_nl, 9.0);
  EXPECT_NEAR(stats.ReductionPercent(), 25.0, 1e-12);
}

TEST(TransitionStats, SingleWordSentences) {
  const GoldTree one({{0, "root"}});
  const TransitionStats stats = ComputeTransitionStats({one, one, one});
  for (const auto &counts : stats.per_sentence) {
    EXPECT_EQ(counts.covington, 1);
    EXPECT_EQ(counts.nl_covington, 1);
  }
}

// 0 -> 1 -> 2 -> ... -> n: every arc is local, so both systems need n
// Shifts and n-1 arcs.
TEST(TransitionStats, ChainNeedsNoNoArc) {
  for (int n = 1; n <= 12; ++n) {
    std::vector<Attachment> heads;
    for (int v = 1; v <= n; ++v) heads.push_back({v - 1, v == 1 ? "root" : "dep"});
    const TransitionStats stats = ComputeTransitionStats({GoldTree(heads)});
    EXPECT_EQ(stats.per_sentence[0].covington, 2 * n - 1);
    EXPECT_EQ(stats.per_sentence[0].nl_covington, 2 * n - 1);
  }
}

// avg_cov - avg_nl is the mean number of No-Arcs the expansion adds.
TEST(TransitionStats, AccountingIdentity) {
  std::vector<GoldTree> trees;
  for (uint64_t seed = 0; seed < 50; ++seed) {
    trees.push_back(RandomGoldTree(1 + static_cast<int>(seed % 17), seed));
  }
  const TransitionStats stats = ComputeTransitionStats(trees);
  double savings = 0.0;
  for (size_t idx = 0; idx < trees.size(); ++idx) {
    const auto nl = OracleSequence(SystemForTree(SystemKind::kNlCovington, trees[idx]),
                                   trees[idx]);
    const int64_t saved = NonLocalSavings(nl);
    EXPECT_EQ(stats.per_sentence[idx].covington - stats.per_sentence[idx].nl_covington,
              saved);
    EXPECT_LE(stats.per_sentence[idx].nl_covington, stats.per_sentence[idx].covington);
    savings += static_cast<double>(saved);
  }
  EXPECT_NEAR(stats.avg_cov - stats.avg_nl, savings / trees.size(), 1e-9);
}

TEST(IsProjective, Examples) {
  EXPECT_TRUE(IsProjective(testing::ExampleTree()));
  EXPECT_TRUE(IsProjective(GoldTree({{0, ""}, {1, ""}, {2, ""}})));
  // 3 -> 1, 2 -> 4, root -> 3 -> 2.
  EXPECT_FALSE(IsProjective(GoldTree({{3, ""}, {3, ""}, {0, ""}, {2, ""}})));
  // Root arc 0 -> 2 crossed by 1 -> 3.
  EXPECT_FALSE(IsProjective(GoldTree({{0, ""}, {0, ""}, {1, ""}})));
}

// Brute force over all four-word trees: a tree is projective iff every arc's
// span only contains descendants of its head.
TEST(IsProjective, AgreesWithDescendantDefinition) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto &heads : testing::EnumerateTreeHeads(n)) {
      const GoldTree gold = testing::TreeFromHeads(heads);
      bool projective = true;
      for (int d = 1; d <= n; ++d) {
        const int h = gold.head(d);
        for (int v = std::min(h, d) + 1; v < std::max(h, d); ++v) {
          int cur = v;
          while (cur != 0 && cur != h) cur = gold.head(cur);
          if (cur != h) projective = false;
        }
      }
      EXPECT_EQ(IsProjective(gold), projective);
    }
  }
}

}  // namespace
}  // namespace nlcov
