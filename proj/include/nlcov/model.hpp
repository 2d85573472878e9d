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

// Linear transition scorer with averaged-perceptron training and greedy
// decoding.
//
// Weights are indexed by (transition class, feature id). Transition classes
// are: 0 = Shift, 1 = No-Arc, 2 + 2l = Left-Arc with label l and
// 3 + 2l = Right-Arc with label l. The k of a non-local arc is a feature, not
// part of the class.

#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <functional>
#include <istream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nlcov/core.hpp"
#include "nlcov/features.hpp"
#include "nlcov/oracle.hpp"
#include "nlcov/systems.hpp"

namespace nlcov {

using ClassId = uint32_t;

struct WeightKey {
  ClassId cls = 0;
  FeatureId feature = 0;

  friend bool operator==(const WeightKey &, const WeightKey &) = default;
  friend auto operator<=>(const WeightKey &, const WeightKey &) = default;
};

struct WeightKeyHash {
  size_t operator()(const WeightKey &key) const {
    return std::hash<uint64_t>()(key.feature ^ (uint64_t{key.cls} * 0x9e3779b97f4a7c15ull));
  }
};

using WeightMap = std::unordered_map<WeightKey, double, WeightKeyHash>;

inline constexpr int kModelFormatVersion = 1;

class Model {
 public:
  Model(SystemKind system, std::vector<std::string> labels, uint64_t hash_seed = 0,
        std::string root_label = kDefaultRootLabel)
      : system_(system),
        labels_(std::move(labels)),
        hasher_(hash_seed),
        root_label_(std::move(root_label)) {
    // Validates the label set.
    TransitionSystem probe(system_, labels_);
    for (size_t l = 0; l < labels_.size(); ++l) {
      label_index_.emplace(labels_[l], static_cast<ClassId>(l));
    }
  }

  SystemKind system() const { return system_; }
  const std::vector<std::string> &labels() const { return labels_; }
  const FeatureHasher &hasher() const { return hasher_; }
  const std::string &root_label() const { return root_label_; }
  void set_root_label(std::string label) { root_label_ = std::move(label); }

  TransitionSystem MakeSystem() const { return TransitionSystem(system_, labels_); }

  int NumClasses() const { return 2 + 2 * static_cast<int>(labels_.size()); }

  // Class of `t`, or nullopt for a label outside the model's label set.
  std::optional<ClassId> ClassOf(const Transition &t) const {
    switch (t.kind) {
      case TransitionKind::kShift:
        return 0;
      case TransitionKind::kNoArc:
        return 1;
      case TransitionKind::kLeftArc:
      case TransitionKind::kRightArc: {
        auto it = label_index_.find(t.label);
        if (it == label_index_.end()) return std::nullopt;
        return 2 + 2 * it->second + (t.kind == TransitionKind::kRightArc ? 1 : 0);
      }
    }
    return std::nullopt;
  }

  // Shift and No-Arc exist in Covington models; NL-Covington has no No-Arc.
  bool IsValidClass(ClassId cls) const {
    if (cls >= static_cast<ClassId>(NumClasses())) return false;
    return !(cls == 1 && system_ == SystemKind::kNlCovington);
  }

  double Weight(ClassId cls, FeatureId feature) const {
    auto it = weights_.find({cls, feature});
    return it == weights_.end() ? 0.0 : it->second;
  }

  // Zero weights are dropped. Throws Error for a class the system lacks.
  void SetWeight(ClassId cls, FeatureId feature, double value) {
    if (!IsValidClass(cls)) {
      throw Error("class " + std::to_string(cls) + " is not valid for a " +
                  SystemName(system_) + " model");
    }
    if (value == 0.0) {
      weights_.erase({cls, feature});
    } else {
      weights_[{cls, feature}] = value;
    }
  }

  const WeightMap &weights() const { return weights_; }

  int64_t update_count() const { return update_count_; }
  void set_update_count(int64_t count) { update_count_ = count; }

  double ScoreClass(ClassId cls, const FeatureVector &fv) const {
    double total = 0.0;
    for (const auto &[feature, count] : fv.entries()) {
      total += Weight(cls, feature) * count;
    }
    return total;
  }

  friend bool operator==(const Model &a, const Model &b) {
    return a.system_ == b.system_ && a.labels_ == b.labels_ &&
           a.hasher_.seed() == b.hasher_.seed() && a.root_label_ == b.root_label_ &&
           a.weights_ == b.weights_ && a.update_count_ == b.update_count_;
  }

 private:
  SystemKind system_;
  std::vector<std::string> labels_;
  std::map<std::string, ClassId> label_index_;
  FeatureHasher hasher_;
  std::string root_label_;
  WeightMap weights_;
  int64_t update_count_ = 0;
};

// Dot product of `fv` with the weight row of t's class. Transitions whose
// label the model does not know score -infinity.
inline double Score(const Model &model, const FeatureVector &fv, const Transition &t) {
  auto cls = model.ClassOf(t);
  if (!cls) return -std::numeric_limits<double>::infinity();
  return model.ScoreClass(*cls, fv);
}

namespace internal {

// Highest-scoring legal labeled transition other than `skip`, or nullopt if
// there is none. Candidates are visited in canonical order and only a
// strictly greater score replaces the incumbent, so ties go to the earliest
// candidate.
template <typename ClassScorer>
std::optional<std::pair<Transition, double>> BestRival(
    const TransitionSystem &sys, const Model &model, const Sentence &sentence,
    const Configuration &c, const ClassScorer &score_class,
    const std::optional<Transition> &skip) {
  Transition best;
  double best_score = -std::numeric_limits<double>::infinity();
  bool have_best = false;
  for (const Transition &skeleton : sys.LegalSkeletons(c)) {
    const FeatureVector fv = FeaturizeLegal(sentence, c, skeleton, model.hasher());
    if (!skeleton.IsArc()) {
      if (skip && skeleton == *skip) continue;
      const double s = score_class(*model.ClassOf(skeleton), fv);
      if (!have_best || s > best_score) {
        best = skeleton;
        best_score = s;
        have_best = true;
      }
      continue;
    }
    for (const std::string &label : sys.labels()) {
      Transition t{skeleton.kind, skeleton.k, label};
      if (skip && t == *skip) continue;
      const auto cls = model.ClassOf(t);
      const double s = cls ? score_class(*cls, fv)
                           : -std::numeric_limits<double>::infinity();
      if (!have_best || s > best_score) {
        best = std::move(t);
        best_score = s;
        have_best = true;
      }
    }
  }
  if (!have_best) return std::nullopt;
  return std::make_pair(std::move(best), best_score);
}

template <typename ClassScorer>
Transition BestTransition(const TransitionSystem &sys, const Model &model,
                          const Sentence &sentence, const Configuration &c,
                          const ClassScorer &score_class) {
  return BestRival(sys, model, sentence, c, score_class, std::nullopt)->first;
}

}  // namespace internal

// Parses `sentence` by repeatedly applying the best-scoring legal transition,
// then attaches headless words to the root. The number of transitions taken
// is stored in `num_transitions` when given.
inline ArcSet GreedyParse(const Model &model, const TransitionSystem &sys,
                          const Sentence &sentence,
                          int64_t *num_transitions = nullptr) {
  if (sys.kind() != model.system()) {
    throw Error("model was trained for " + SystemName(model.system()) +
                ", not " + sys.name());
  }
  Configuration c = InitialConfiguration(sentence.size());
  auto scorer = [&](ClassId cls, const FeatureVector &fv) {
    return model.ScoreClass(cls, fv);
  };
  int64_t steps = 0;
  while (!IsTerminal(c)) {
    sys.ApplyInPlace(c, internal::BestTransition(sys, model, sentence, c, scorer));
    ++steps;
  }
  if (num_transitions != nullptr) *num_transitions = steps;
  return AttachRoot(std::move(c.arcs), sentence.size(), model.root_label());
}

inline ArcSet GreedyParse(const Model &model, const Sentence &sentence) {
  return GreedyParse(model, model.MakeSystem(), sentence);
}

struct TrainingExample {
  Sentence sentence;
  GoldTree gold;
};

struct TrainOptions {
  int epochs = 10;
  uint64_t seed = 1;
  uint64_t hash_seed = 0;
  // Label for arcs from the root in parser output. Empty means the most
  // frequent root label of the training data, or "ROOT" if there is none.
  std::string root_label;
};

struct EpochReport {
  int epoch = 0;
  int64_t configurations = 0;
  int64_t mistakes = 0;
};

using EpochCallback = std::function<void(const EpochReport &)>;

namespace internal {

// Averaged perceptron parameters with lazy averaging: `total` accumulates
// weight * time up to `stamp`.
class PerceptronWeights {
 public:
  double Weight(ClassId cls, FeatureId feature) const {
    auto it = params_.find({cls, feature});
    return it == params_.end() ? 0.0 : it->second.weight;
  }

  double ScoreClass(ClassId cls, const FeatureVector &fv) const {
    double total = 0.0;
    for (const auto &[feature, count] : fv.entries()) {
      total += Weight(cls, feature) * count;
    }
    return total;
  }

  void Update(ClassId cls, const FeatureVector &fv, double delta, int64_t now) {
    for (const auto &[feature, count] : fv.entries()) {
      Param &p = params_[{cls, feature}];
      p.total += static_cast<double>(now - p.stamp) * p.weight;
      p.stamp = now;
      p.weight += delta * count;
    }
  }

  // Averages over `now` time steps, in key order so the result does not
  // depend on hash-table iteration order.
  std::vector<std::pair<WeightKey, double>> Averaged(int64_t now) const {
    std::vector<std::pair<WeightKey, double>> out;
    if (now <= 0) return out;
    for (const auto &[key, p] : params_) {
      const double total = p.total + static_cast<double>(now - p.stamp) * p.weight;
      const double avg = total / static_cast<double>(now);
      if (avg != 0.0) out.emplace_back(key, avg);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct Param {
    double weight = 0.0;
    double total = 0.0;
    int64_t stamp = 0;
  };
  std::unordered_map<WeightKey, Param, WeightKeyHash> params_;
};

}  // namespace internal

// Averaged-perceptron training along static-oracle paths. At each oracle
// configuration the current argmax is compared with the oracle transition
// and, on a mismatch, the oracle's features are rewarded and the
// prediction's penalised. The corpus order is reshuffled every epoch from
// `options.seed`.
inline Model Train(const std::vector<TrainingExample> &corpus, SystemKind system,
                   const TrainOptions &options, const EpochCallback &on_epoch = {}) {
  if (corpus.empty()) throw Error("training corpus is empty");
  if (options.epochs < 1) throw Error("epochs must be at least 1");

  std::vector<std::string> labels;
  std::map<std::string, int> root_label_counts;
  for (size_t idx = 0; idx < corpus.size(); ++idx) {
    const TrainingExample &ex = corpus[idx];
    if (ex.sentence.size() != ex.gold.size()) {
      throw Error("sentence " + std::to_string(idx + 1) + " has " +
                  std::to_string(ex.sentence.size()) + " tokens but its tree has " +
                  std::to_string(ex.gold.size()) + " nodes");
    }
    for (NodeId v = 1; v <= ex.gold.size(); ++v) {
      if (ex.gold.head(v) == kRootNode) {
        ++root_label_counts[ex.gold.label(v)];
      } else if (std::find(labels.begin(), labels.end(), ex.gold.label(v)) ==
                 labels.end()) {
        labels.push_back(ex.gold.label(v));
      }
    }
  }
  std::string root_label = options.root_label;
  if (root_label.empty()) {
    root_label = kDefaultRootLabel;
    int best = 0;
    for (const auto &[label, count] : root_label_counts) {
      if (count > best) {
        root_label = label;
        best = count;
      }
    }
  }
  if (labels.empty()) labels.push_back(root_label);

  Model model(system, labels, options.hash_seed, root_label);
  const TransitionSystem sys = model.MakeSystem();
  internal::PerceptronWeights weights;
  auto scorer = [&](ClassId cls, const FeatureVector &fv) {
    return weights.ScoreClass(cls, fv);
  };

  std::vector<size_t> order(corpus.size());
  for (size_t idx = 0; idx < order.size(); ++idx) order[idx] = idx;
  std::mt19937_64 rng(options.seed);
  int64_t now = 0;
  for (int epoch = 1; epoch <= options.epochs; ++epoch) {
    // Fisher-Yates with a fixed reduction, so the order only depends on the
    // seed and not on the standard library's distribution implementation.
    for (size_t idx = order.size(); idx > 1; --idx) {
      std::swap(order[idx - 1], order[rng() % idx]);
    }
    EpochReport report;
    report.epoch = epoch;
    for (size_t idx : order) {
      const TrainingExample &ex = corpus[idx];
      Configuration c = InitialConfiguration(ex.sentence.size());
      while (!IsTerminal(c)) {
        ++now;
        ++report.configurations;
        const Transition gold_t = OracleStep(system, c, ex.gold);
        const FeatureVector gold_fv =
            FeaturizeLegal(ex.sentence, c, gold_t, model.hasher());
        const double gold_score = weights.ScoreClass(*model.ClassOf(gold_t), gold_fv);
        const auto rival =
            internal::BestRival(sys, model, ex.sentence, c, scorer, gold_t);
        // A tie with the gold transition counts as a mistake, so the final
        // weights separate every training decision by a positive margin.
        if (rival && rival->second >= gold_score) {
          ++report.mistakes;
          weights.Update(*model.ClassOf(gold_t), gold_fv, 1.0, now);
          weights.Update(*model.ClassOf(rival->first),
                         FeaturizeLegal(ex.sentence, c, rival->first, model.hasher()),
                         -1.0, now);
        }
        sys.ApplyInPlace(c, gold_t);
      }
    }
    if (on_epoch) on_epoch(report);
  }

  for (const auto &[key, value] : weights.Averaged(now)) {
    model.SetWeight(key.cls, key.feature, value);
  }
  model.set_update_count(now);
  return model;
}

// Model file: "key<TAB>value" header lines, a "weights" line, then one
// "class<TAB>feature<TAB>weight" line per nonzero weight in key order.
// Weights use the shortest decimal form that round-trips. An empty label is
// written as "_".
inline void SaveModel(const Model &model, std::ostream &out) {
  auto encode = [](const std::string &label) { return label.empty() ? "_" : label; };
  out << "version\t" << kModelFormatVersion << '\n';
  out << "system\t" << SystemName(model.system()) << '\n';
  out << "hash-seed\t" << model.hasher().seed() << '\n';
  out << "root-label\t" << encode(model.root_label()) << '\n';
  out << "update-count\t" << model.update_count() << '\n';
  out << "labels";
  for (const std::string &label : model.labels()) out << '\t' << encode(label);
  out << '\n';
  out << "weights\n";
  std::vector<std::pair<WeightKey, double>> sorted(model.weights().begin(),
                                                   model.weights().end());
  std::sort(sorted.begin(), sorted.end());
  char buf[64];
  for (const auto &[key, value] : sorted) {
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    out << key.cls << '\t' << key.feature << '\t' << std::string_view(buf, ptr - buf)
        << '\n';
  }
}

inline Model LoadModel(std::istream &in) {
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string &msg) -> Error {
    return Error("model line " + std::to_string(line_no) + ": " + msg);
  };
  auto split = [](const std::string &text) {
    std::vector<std::string> fields;
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, '\t')) fields.push_back(field);
    return fields;
  };
  auto decode = [](const std::string &label) { return label == "_" ? "" : label; };
  std::map<std::string, std::vector<std::string>> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (line == "weights") break;
    std::vector<std::string> fields = split(line);
    if (fields.empty()) throw fail("empty header line");
    const std::string key = fields.front();
    fields.erase(fields.begin());
    header[key] = std::move(fields);
  }
  auto single = [&](const std::string &key) -> std::string {
    auto it = header.find(key);
    if (it == header.end() || it->second.size() != 1) {
      throw fail("missing or malformed header '" + key + "'");
    }
    return it->second.front();
  };
  if (single("version") != std::to_string(kModelFormatVersion)) {
    throw fail("unsupported model version " + single("version"));
  }
  const SystemKind system = ParseSystemName(single("system"));
  const uint64_t hash_seed = std::stoull(single("hash-seed"));
  auto labels_it = header.find("labels");
  if (labels_it == header.end()) throw fail("missing header 'labels'");
  std::vector<std::string> labels;
  for (const std::string &label : labels_it->second) labels.push_back(decode(label));
  std::string root_label = kDefaultRootLabel;
  if (header.count("root-label")) root_label = decode(single("root-label"));

  Model model(system, std::move(labels), hash_seed, std::move(root_label));
  if (header.count("update-count")) {
    model.set_update_count(std::stoll(single("update-count")));
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::vector<std::string> fields = split(line);
    if (fields.size() != 3) throw fail("expected class, feature and weight");
    ClassId cls = 0;
    FeatureId feature = 0;
    double value = 0.0;
    auto parse = [&](const std::string &text, auto &target) {
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), target);
      if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw fail("malformed number '" + text + "'");
      }
    };
    parse(fields[0], cls);
    parse(fields[1], feature);
    parse(fields[2], value);
    if (!model.IsValidClass(cls)) throw fail("class not valid for this system");
    model.SetWeight(cls, feature, value);
  }
  return model;
}

}  // namespace nlcov
