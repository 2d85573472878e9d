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

#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "nlcov/eval.hpp"
#include "nlcov/model.hpp"
#include "nlcov/synthetic.hpp"
#include "test_support.hpp"

namespace nlcov {
namespace {

Sentence MakeSentence(const std::vector<std::pair<std::string, std::string>> &words) {
  std::vector<Token> tokens;
  for (size_t idx = 0; idx < words.size(); ++idx) {
    Token t;
    t.id = static_cast<NodeId>(idx + 1);
    t.form = words[idx].first;
    t.cpos = t.pos = words[idx].second;
    tokens.push_back(t);
  }
  return Sentence(std::move(tokens));
}

std::vector<TrainingExample> Examples(const std::vector<Sentence> &sentences) {
  std::vector<TrainingExample> out;
  for (const Sentence &s : sentences) out.push_back({s, GoldTree::FromSentence(s)});
  return out;
}

TEST(Featurize, ShiftOnSingleWordMentionsOnlyThatWord) {
  const Sentence s = MakeSentence({{"hello", "UH"}});
  const std::vector<std::string> feats =
      FeatureStrings(s, InitialConfiguration(1), Transition::Shift());
  for (const std::string &f : feats) {
    // Either an attribute of the front word or the next-word POS marker.
    const bool about_word = f.rfind("sh.j", 0) == 0;
    const bool end_marker = f == "sh.np=</s>";
    EXPECT_TRUE(about_word || end_marker || f == "sh.bias") << f;
  }
  EXPECT_NE(std::find(feats.begin(), feats.end(), "sh.np=</s>"), feats.end());
}

TEST(Featurize, SensitiveToEndpointPos) {
  const TransitionSystem sys(SystemKind::kNlCovington, {"a"});
  const FeatureHasher hasher(3);
  const Configuration c{{1}, {}, {2}, {}};
  const FeatureVector a =
      Featurize(sys, MakeSentence({{"x", "N"}, {"y", "V"}}), c, Transition::RightArc(1, "a"), hasher);
  const FeatureVector b =
      Featurize(sys, MakeSentence({{"x", "D"}, {"y", "V"}}), c, Transition::RightArc(1, "a"), hasher);
  EXPECT_NE(a, b);
}

TEST(Featurize, KBucketDistinguishesNonLocalArcs) {
  const TransitionSystem sys(SystemKind::kNlCovington, {"a"});
  const FeatureHasher hasher;
  const Sentence s = MakeSentence({{"x", "N"}, {"y", "N"}, {"z", "V"}});
  const Configuration c{{1, 2}, {}, {3}, {}};
  const FeatureVector ra1 = Featurize(sys, s, c, Transition::RightArc(1, "a"), hasher);
  const FeatureVector ra2 = Featurize(sys, s, c, Transition::RightArc(2, "a"), hasher);
  EXPECT_EQ(ra1.Count(hasher("arc.k=1")), 1);
  EXPECT_EQ(ra1.Count(hasher("arc.k=2")), 0);
  EXPECT_EQ(ra2.Count(hasher("arc.k=2")), 1);
  EXPECT_EQ(ra2.Count(hasher("arc.k=1")), 0);
}

TEST(Featurize, RejectsIllegalTransition) {
  const TransitionSystem sys(SystemKind::kNlCovington, {"a"});
  const Sentence s = MakeSentence({{"x", "N"}, {"y", "V"}});
  EXPECT_THROW(Featurize(sys, s, InitialConfiguration(2), Transition::LeftArc(1, "a"),
                         FeatureHasher()),
               Error);
  EXPECT_THROW(Featurize(sys, s, Configuration{{1}, {}, {2}, {}}, Transition::NoArc(),
                         FeatureHasher()),
               Error);
}

TEST(DistanceBucket, Boundaries) {
  EXPECT_EQ(DistanceBucket(1), "1");
  EXPECT_EQ(DistanceBucket(5), "5");
  EXPECT_EQ(DistanceBucket(6), "6-10");
  EXPECT_EQ(DistanceBucket(10), "6-10");
  EXPECT_EQ(DistanceBucket(11), "11+");
}

TEST(Score, ZeroSingleWeightAndLinearity) {
  Model model(SystemKind::kCovington, {"a"});
  const FeatureVector f1 = FeatureVector::FromIds({10, 11});
  const FeatureVector f2 = FeatureVector::FromIds({20});
  EXPECT_EQ(Score(model, f1, Transition::Shift()), 0.0);
  model.SetWeight(0, 10, 2.5);
  EXPECT_EQ(Score(model, FeatureVector::FromIds({10}), Transition::Shift()), 2.5);
  model.SetWeight(0, 20, -0.75);
  EXPECT_EQ(Score(model, f1.Merge(f2), Transition::Shift()),
            Score(model, f1, Transition::Shift()) + Score(model, f2, Transition::Shift()));
  EXPECT_EQ(Score(model, f1, Transition::LeftArc(1, "zzz")),
            -std::numeric_limits<double>::infinity());
}

TEST(Model, RejectsNoArcWeightsForNlCovington) {
  Model model(SystemKind::kNlCovington, {"a"});
  EXPECT_THROW(model.SetWeight(1, 5, 1.0), Error);
  EXPECT_THROW(model.SetWeight(4, 5, 1.0), Error);
  model.SetWeight(3, 5, 1.0);
}

TEST(GreedyParse, SingleWordGoesToRoot) {
  const Model model(SystemKind::kNlCovington, {"a"});
  const ArcSet parse = GreedyParse(model, MakeSentence({{"x", "N"}}));
  EXPECT_EQ(parse, (ArcSet{{0, 1, "ROOT"}}));
}

// Left-Arc and Right-Arc with the same label and equal scores: Left-Arc
// comes first in the canonical order.
TEST(GreedyParse, TiesFollowCanonicalOrder) {
  Model model(SystemKind::kNlCovington, {"a"});
  const FeatureId bias = model.hasher()("arc.bias");
  model.SetWeight(*model.ClassOf(Transition::LeftArc(1, "a")), bias, 1.0);
  model.SetWeight(*model.ClassOf(Transition::RightArc(1, "a")), bias, 1.0);
  const ArcSet parse = GreedyParse(model, MakeSentence({{"x", "N"}, {"y", "V"}}));
  EXPECT_EQ(parse, (ArcSet{{2, 1, "a"}, {0, 2, "ROOT"}}));

  // An untrained model always shifts.
  const Model zero(SystemKind::kCovington, {"a"});
  EXPECT_EQ(GreedyParse(zero, MakeSentence({{"x", "N"}, {"y", "V"}})),
            (ArcSet{{0, 1, "ROOT"}, {0, 2, "ROOT"}}));
}

// Random weights: output is always a rooted tree and the transition count
// stays within the worst-case bounds of each system.
TEST(GreedyParse, WellFormedUnderRandomModels) {
  std::mt19937_64 rng(17);
  const std::vector<std::string> labels = {"a", "b"};
  for (SystemKind kind : {SystemKind::kCovington, SystemKind::kNlCovington}) {
    for (int trial = 0; trial < 40; ++trial) {
      Model model(kind, labels, trial);
      std::uniform_real_distribution<double> weight(-1.0, 1.0);
      for (const char *f : {"sh.bias", "na.bias", "arc.bias", "arc.k=1", "arc.k=2",
                            "arc.k=3", "arc.dist=+1", "arc.dist=-2", "sh.jp=X"}) {
        for (int cls = 0; cls < model.NumClasses(); ++cls) {
          if (model.IsValidClass(cls)) model.SetWeight(cls, model.hasher()(f), weight(rng));
        }
      }
      const int n = 1 + static_cast<int>(rng() % 20);
      const Sentence s = testing::SentenceForTree(RandomGoldTree(n, rng()));
      int64_t steps = 0;
      const ArcSet parse = GreedyParse(model, model.MakeSystem(), s, &steps);
      ASSERT_TRUE(IsRootedTree(parse, n));
      if (kind == SystemKind::kNlCovington) {
        EXPECT_LE(steps, 2 * n - 1);
      } else {
        EXPECT_LE(steps, n * (n + 1) / 2 + n);
      }
    }
  }
}

TEST(GreedyParse, RejectsSystemMismatch) {
  const Model model(SystemKind::kCovington, {"a"});
  EXPECT_THROW(GreedyParse(model, TransitionSystem(SystemKind::kNlCovington, {"a"}),
                           MakeSentence({{"x", "N"}})),
               Error);
}

TEST(Train, ConvergesOnExampleSentence) {
  Sentence s = testing::SentenceForTree(testing::ExampleTree());
  for (SystemKind kind : {SystemKind::kCovington, SystemKind::kNlCovington}) {
    int64_t last_mistakes = -1;
    TrainOptions options;
    options.epochs = 20;
    const Model model = Train(Examples({s}), kind, options,
                              [&](const EpochReport &r) { last_mistakes = r.mistakes; });
    EXPECT_EQ(last_mistakes, 0);
    EXPECT_EQ(GreedyParse(model, s), GoldArcs(s));
  }
}

TEST(Train, SingleWordCorpusGivesZeroModel) {
  TrainOptions options;
  options.epochs = 1;
  const Sentence s({Token{1, "x", "", "N", "N", "", 0, "root"}});
  const Model model = Train(Examples({s}), SystemKind::kNlCovington, options);
  EXPECT_TRUE(model.weights().empty());
  EXPECT_EQ(model.root_label(), "root");
}

TEST(Train, ErrorCases) {
  TrainOptions options;
  EXPECT_THROW(Train({}, SystemKind::kCovington, options), Error);
  const Sentence s = testing::SentenceForTree(testing::ExampleTree());
  options.epochs = 0;
  EXPECT_THROW(Train(Examples({s}), SystemKind::kCovington, options), Error);
  options.epochs = 1;
  std::vector<TrainingExample> bad = {{s, GoldTree({{0, "ROOT"}})}};
  EXPECT_THROW(Train(bad, SystemKind::kCovington, options), Error);
}

TEST(Train, DeterministicGivenSeed) {
  const auto corpus = Examples(synthetic::ToyCorpus(15, 3));
  TrainOptions options;
  options.epochs = 3;
  options.seed = 9;
  const Model a = Train(corpus, SystemKind::kNlCovington, options);
  const Model b = Train(corpus, SystemKind::kNlCovington, options);
  EXPECT_EQ(a, b);
  std::ostringstream sa, sb;
  SaveModel(a, sa);
  SaveModel(b, sb);
  EXPECT_EQ(sa.str(), sb.str());
}

TEST(Train, FitsSmallToyCorpus) {
  const std::vector<Sentence> sentences = synthetic::ToyCorpus(10, 21);
  CorpusDocument doc{sentences, "toy"};
  for (SystemKind kind : {SystemKind::kCovington, SystemKind::kNlCovington}) {
    TrainOptions options;
    options.epochs = 30;
    const Model model = Train(Examples(sentences), kind, options);
    std::vector<ArcSet> parses;
    for (const Sentence &s : sentences) parses.push_back(GreedyParse(model, s));
    EXPECT_GE(ScoreParses(doc, parses).uas, 0.95) << SystemName(kind);
  }
}

TEST(ModelFile, RoundTripsExactly) {
  const auto corpus = Examples(synthetic::ToyCorpus(8, 5));
  TrainOptions options;
  options.epochs = 2;
  options.hash_seed = 77;
  const Model model = Train(corpus, SystemKind::kCovington, options);
  ASSERT_FALSE(model.weights().empty());
  std::stringstream buf;
  SaveModel(model, buf);
  const Model loaded = LoadModel(buf);
  EXPECT_EQ(loaded, model);
  EXPECT_EQ(loaded.hasher().seed(), 77u);
}

TEST(ModelFile, HeaderLayout) {
  Model model(SystemKind::kNlCovington, {"nsubj", ""}, 5, "root");
  model.SetWeight(2, 42, 0.1);
  std::ostringstream out;
  SaveModel(model, out);
  EXPECT_EQ(out.str(),
            "version\t1\nsystem\tnl-covington\nhash-seed\t5\nroot-label\troot\n"
            "update-count\t0\nlabels\tnsubj\t_\nweights\n2\t42\t0.1\n");
  std::istringstream in(out.str());
  EXPECT_EQ(LoadModel(in), model);
}

TEST(ModelFile, RejectsMalformedInput) {
  std::istringstream no_version("system\tcovington\nweights\n");
  EXPECT_THROW(LoadModel(no_version), Error);
  std::istringstream bad_weight(
      "version\t1\nsystem\tcovington\nhash-seed\t0\nlabels\ta\nweights\n0\t1\tabc\n");
  EXPECT_THROW(LoadModel(bad_weight), Error);
  std::istringstream no_arc_class(
      "version\t1\nsystem\tnl-covington\nhash-seed\t0\nlabels\ta\nweights\n1\t1\t0.5\n");
  EXPECT_THROW(LoadModel(no_arc_class), Error);
}

}  // namespace
}  // namespace nlcov
