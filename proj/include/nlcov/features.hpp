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

// Sparse features for scoring transitions.
//
// Each transition is featurized by the words it touches:
//  - an arc transition by its head and dependent words, plus the signed
//    head-dependent distance and the k parameter;
//  - No-Arc by the left focus word (rightmost in lambda1) and the right
//    focus word (front of the buffer);
//  - Shift by the front of the buffer, with the next buffer word's POS.
// Feature strings are hashed to 64-bit ids with a seeded FNV-1a.

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nlcov/core.hpp"
#include "nlcov/systems.hpp"

namespace nlcov {

using FeatureId = uint64_t;

class FeatureHasher {
 public:
  explicit FeatureHasher(uint64_t seed = 0) : seed_(seed) {}

  uint64_t seed() const { return seed_; }

  FeatureId operator()(std::string_view text) const {
    uint64_t h = kOffset;
    for (int shift = 0; shift < 64; shift += 8) {
      h ^= (seed_ >> shift) & 0xffu;
      h *= kPrime;
    }
    for (unsigned char ch : text) {
      h ^= ch;
      h *= kPrime;
    }
    return h;
  }

 private:
  static constexpr uint64_t kOffset = 14695981039346656037ull;
  static constexpr uint64_t kPrime = 1099511628211ull;
  uint64_t seed_;
};

// (feature id, count) pairs, sorted by id with no duplicates and positive
// counts.
class FeatureVector {
 public:
  FeatureVector() = default;

  static FeatureVector FromIds(std::vector<FeatureId> ids) {
    std::sort(ids.begin(), ids.end());
    FeatureVector fv;
    for (FeatureId id : ids) {
      if (!fv.entries_.empty() && fv.entries_.back().first == id) {
        ++fv.entries_.back().second;
      } else {
        fv.entries_.emplace_back(id, 1);
      }
    }
    return fv;
  }

  const std::vector<std::pair<FeatureId, int>> &entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  int Count(FeatureId id) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(),
                               std::make_pair(id, 0));
    return it != entries_.end() && it->first == id ? it->second : 0;
  }

  // Feature-wise sum.
  FeatureVector Merge(const FeatureVector &other) const {
    std::vector<FeatureId> ids;
    for (const auto &[id, count] : entries_) ids.insert(ids.end(), count, id);
    for (const auto &[id, count] : other.entries_) ids.insert(ids.end(), count, id);
    return FromIds(std::move(ids));
  }

  friend bool operator==(const FeatureVector &, const FeatureVector &) = default;

 private:
  std::vector<std::pair<FeatureId, int>> entries_;
};

// Bucket for distances and k: 1..5 individually, then 6-10, then 11+.
inline std::string DistanceBucket(int value) {
  if (value <= 5) return std::to_string(value);
  if (value <= 10) return "6-10";
  return "11+";
}

namespace internal {

inline const std::string &PosOf(const Token &token) {
  return token.pos.empty() || token.pos == "_" ? token.cpos : token.pos;
}

inline constexpr const char *kEndOfBuffer = "</s>";
inline constexpr const char *kStartOfSentence = "<s>";

// Context attributes of token `id`: POS of its sentence neighbours and
// whether it already has a head in `c`. Names are `prefix` + "lp=", "rp=", "h=".
inline void AppendContext(std::vector<std::string> &out, const std::string &prefix,
                          const Sentence &sentence, const Configuration &c, NodeId id) {
  out.push_back(prefix + "lp=" +
                (id > 1 ? PosOf(sentence.token(id - 1)) : kStartOfSentence));
  out.push_back(prefix + "rp=" +
                (id < sentence.size() ? PosOf(sentence.token(id + 1)) : kEndOfBuffer));
  out.push_back(prefix + "h=" + (c.arcs.HasHead(id) ? "1" : "0"));
}

}  // namespace internal

// Feature strings for transition `t` in `c`; the caller guarantees that `t`
// is legal in `c`. Arc features do not depend on the label; the label only
// selects the weight row.
inline std::vector<std::string> FeatureStrings(const Sentence &sentence,
                                               const Configuration &c,
                                               const Transition &t) {
  using internal::PosOf;
  std::vector<std::string> out;
  const NodeId j = c.RightFocus();
  const Token &tj = sentence.token(j);
  switch (t.kind) {
    case TransitionKind::kShift: {
      const std::string next_pos =
          c.buffer.size() > 1 ? PosOf(sentence.token(c.buffer[1]))
                              : internal::kEndOfBuffer;
      out = {"sh.bias",
             "sh.jw=" + tj.form,
             "sh.jp=" + PosOf(tj),
             "sh.jwp=" + tj.form + "|" + PosOf(tj),
             "sh.np=" + next_pos,
             "sh.jp.np=" + PosOf(tj) + "|" + next_pos};
      internal::AppendContext(out, "sh.j", sentence, c, j);
      break;
    }
    case TransitionKind::kNoArc: {
      const Token &ti = sentence.token(c.LeftWord(1));
      out = {"na.bias",
             "na.iw=" + ti.form,
             "na.ip=" + PosOf(ti),
             "na.jw=" + tj.form,
             "na.jp=" + PosOf(tj),
             "na.ip.jp=" + PosOf(ti) + "|" + PosOf(tj)};
      internal::AppendContext(out, "na.i", sentence, c, ti.id);
      internal::AppendContext(out, "na.j", sentence, c, j);
      break;
    }
    case TransitionKind::kLeftArc:
    case TransitionKind::kRightArc: {
      const NodeId ik = c.LeftWord(t.k);
      const bool left = t.kind == TransitionKind::kLeftArc;
      const Token &head = sentence.token(left ? j : ik);
      const Token &dep = sentence.token(left ? ik : j);
      const int signed_dist = dep.id - head.id;
      const std::string dist =
          (signed_dist < 0 ? "-" : "+") + DistanceBucket(std::abs(signed_dist));
      const std::string k = DistanceBucket(t.k);
      const std::string pos_pair = PosOf(head) + "|" + PosOf(dep);
      out = {"arc.bias",
             "arc.hw=" + head.form,
             "arc.hp=" + PosOf(head),
             "arc.hwp=" + head.form + "|" + PosOf(head),
             "arc.dw=" + dep.form,
             "arc.dp=" + PosOf(dep),
             "arc.dwp=" + dep.form + "|" + PosOf(dep),
             "arc.hp.dp=" + pos_pair,
             "arc.hw.dp=" + head.form + "|" + PosOf(dep),
             "arc.hp.dw=" + PosOf(head) + "|" + dep.form,
             "arc.dist=" + dist,
             "arc.k=" + k,
             "arc.hp.dp.dist=" + pos_pair + "|" + dist,
             "arc.hp.dp.k=" + pos_pair + "|" + k};
      internal::AppendContext(out, "arc.h", sentence, c, head.id);
      internal::AppendContext(out, "arc.d", sentence, c, dep.id);
      break;
    }
  }
  return out;
}

// Hashed features of a transition known to be legal.
inline FeatureVector FeaturizeLegal(const Sentence &sentence,
                                    const Configuration &c, const Transition &t,
                                    const FeatureHasher &hasher) {
  std::vector<FeatureId> ids;
  for (const std::string &text : FeatureStrings(sentence, c, t)) {
    ids.push_back(hasher(text));
  }
  return FeatureVector::FromIds(std::move(ids));
}

// Throws Error if `t` is not legal in `c` under `sys`. Arc labels are ignored
// for the legality check since they do not affect the features.
inline FeatureVector Featurize(const TransitionSystem &sys,
                               const Sentence &sentence, const Configuration &c,
                               const Transition &t, const FeatureHasher &hasher) {
  Transition probe = t;
  if (probe.IsArc() && !sys.HasLabel(probe.label)) probe.label = sys.labels().front();
  if (!sys.IsLegal(c, probe)) {
    throw Error("cannot featurize illegal transition " + ToString(t));
  }
  return FeaturizeLegal(sentence, c, t, hasher);
}

}  // namespace nlcov
