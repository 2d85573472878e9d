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

// The Covington and NL-Covington transition systems.
//
// Both systems share Shift:
//   <l1, l2, j|B, A>  =>  <l1 . l2|j, [], B, A>
// NL-Covington adds the non-local arc transitions, for 1 <= k <= |l1|:
//   Left-Arc_k:  <l1|i_k|...|i_1, l2, j|B, A> => <l1, i_k|...|i_1|l2, j|B, A + {j -> i_k}>
//   Right-Arc_k: <l1|i_k|...|i_1, l2, j|B, A> => <l1, i_k|...|i_1|l2, j|B, A + {i_k -> j}>
// subject to the single-head and acyclicity constraints on the new arc.
// Covington is the same machine with k fixed to 1 plus No-Arc, which moves
// i_1 to the front of l2 without building anything.

#pragma once

#include <charconv>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nlcov/core.hpp"

namespace nlcov {

enum class SystemKind { kCovington, kNlCovington };

inline std::string SystemName(SystemKind kind) {
  return kind == SystemKind::kCovington ? "covington" : "nl-covington";
}

inline SystemKind ParseSystemName(std::string_view name) {
  if (name == "covington") return SystemKind::kCovington;
  if (name == "nl-covington") return SystemKind::kNlCovington;
  throw Error("unknown transition system '" + std::string(name) + "'");
}

// Thrown by Apply() and RunSequence(). `index` is the position of the
// offending transition within the sequence (0 for a single Apply()).
class IllegalTransitionError : public Error {
 public:
  IllegalTransitionError(const std::string &what, size_t index,
                         Configuration config)
      : Error(what), index_(index), config_(std::move(config)) {}

  size_t index() const { return index_; }
  const Configuration &configuration() const { return config_; }

 private:
  size_t index_;
  Configuration config_;
};

class TransitionSystem {
 public:
  // Throws Error on an empty or duplicated label set.
  TransitionSystem(SystemKind kind, std::vector<std::string> labels)
      : kind_(kind), labels_(std::move(labels)) {
    if (labels_.empty()) throw Error("label set must not be empty");
    std::set<std::string> seen;
    for (const std::string &label : labels_) {
      if (!seen.insert(label).second) {
        throw Error("duplicate label '" + label + "'");
      }
    }
    label_lookup_ = std::move(seen);
  }

  SystemKind kind() const { return kind_; }
  std::string name() const { return SystemName(kind_); }
  const std::vector<std::string> &labels() const { return labels_; }
  bool HasLabel(const std::string &label) const {
    return label_lookup_.count(label) > 0;
  }

  // Largest k available in `c`.
  int MaxK(const Configuration &c) const {
    if (c.lambda1.empty()) return 0;
    return kind_ == SystemKind::kCovington ? 1
                                           : static_cast<int>(c.lambda1.size());
  }

  // Unlabeled legal transitions in canonical order: Shift, No-Arc
  // (Covington only), Left-Arc_1..K, Right-Arc_1..K. Labels are left empty
  // for the caller to expand.
  std::vector<Transition> LegalSkeletons(const Configuration &c) const {
    if (IsTerminal(c)) throw Error("no transitions from a terminal configuration");
    std::vector<Transition> out;
    out.push_back(Transition::Shift());
    if (kind_ == SystemKind::kCovington && !c.lambda1.empty()) {
      out.push_back(Transition::NoArc());
    }
    const int max_k = MaxK(c);
    for (int k = 1; k <= max_k; ++k) {
      if (LeftArcAllowed(c, k)) out.push_back(Transition::LeftArc(k));
    }
    for (int k = 1; k <= max_k; ++k) {
      if (RightArcAllowed(c, k)) out.push_back(Transition::RightArc(k));
    }
    return out;
  }

  // Fully labeled legal transitions, in canonical order with labels in
  // label-set order.
  std::vector<Transition> LegalTransitions(const Configuration &c) const {
    std::vector<Transition> out;
    for (Transition &t : LegalSkeletons(c)) {
      if (!t.IsArc()) {
        out.push_back(std::move(t));
        continue;
      }
      for (const std::string &label : labels_) {
        out.push_back({t.kind, t.k, label});
      }
    }
    return out;
  }

  bool IsLegal(const Configuration &c, const Transition &t) const {
    if (IsTerminal(c)) return false;
    switch (t.kind) {
      case TransitionKind::kShift:
        return t.k == 0 && t.label.empty();
      case TransitionKind::kNoArc:
        return kind_ == SystemKind::kCovington && t.k == 0 && t.label.empty() &&
               !c.lambda1.empty();
      case TransitionKind::kLeftArc:
        return t.k >= 1 && t.k <= MaxK(c) && HasLabel(t.label) &&
               LeftArcAllowed(c, t.k);
      case TransitionKind::kRightArc:
        return t.k >= 1 && t.k <= MaxK(c) && HasLabel(t.label) &&
               RightArcAllowed(c, t.k);
    }
    return false;
  }

  // Returns the successor of `c`; throws IllegalTransitionError and leaves
  // `c` untouched if `t` is not legal in it.
  Configuration Apply(const Configuration &c, const Transition &t) const {
    Configuration next = c;
    ApplyInPlace(next, t);
    return next;
  }

  // Same as Apply() but updates `c` directly. On error `c` is unchanged.
  void ApplyInPlace(Configuration &c, const Transition &t) const;

 private:
  // Left-Arc_k creates j -> i_k.
  static bool LeftArcAllowed(const Configuration &c, int k) {
    const NodeId ik = c.LeftWord(k);
    const NodeId j = c.RightFocus();
    return !WouldViolateSingleHead(c.arcs, ik) && !WouldCreateCycle(c.arcs, j, ik);
  }

  // Right-Arc_k creates i_k -> j.
  static bool RightArcAllowed(const Configuration &c, int k) {
    const NodeId ik = c.LeftWord(k);
    const NodeId j = c.RightFocus();
    return !WouldViolateSingleHead(c.arcs, j) && !WouldCreateCycle(c.arcs, ik, j);
  }

  SystemKind kind_;
  std::vector<std::string> labels_;
  std::set<std::string> label_lookup_;
};

// Text form used in traces and golden files: SH, NA, LA(k):label and
// RA(k):label. `omit_unit_k` drops "(1)", the Covington convention. The label
// suffix is dropped when the label is empty.
inline std::string ToString(const Transition &t, bool omit_unit_k = false) {
  std::string out;
  switch (t.kind) {
    case TransitionKind::kShift:
      return "SH";
    case TransitionKind::kNoArc:
      return "NA";
    case TransitionKind::kLeftArc:
      out = "LA";
      break;
    case TransitionKind::kRightArc:
      out = "RA";
      break;
  }
  if (!(omit_unit_k && t.k == 1)) out += "(" + std::to_string(t.k) + ")";
  if (!t.label.empty()) out += ":" + t.label;
  return out;
}

inline std::string ToString(const Transition &t, SystemKind system) {
  return ToString(t, system == SystemKind::kCovington);
}

// Inverse of ToString(); a missing "(k)" means k = 1.
inline Transition ParseTransition(std::string_view text) {
  auto fail = [&]() -> Transition {
    throw Error("malformed transition '" + std::string(text) + "'");
  };
  if (text == "SH") return Transition::Shift();
  if (text == "NA") return Transition::NoArc();
  if (text.size() < 2) return fail();
  Transition t;
  if (text.substr(0, 2) == "LA") {
    t.kind = TransitionKind::kLeftArc;
  } else if (text.substr(0, 2) == "RA") {
    t.kind = TransitionKind::kRightArc;
  } else {
    return fail();
  }
  std::string_view rest = text.substr(2);
  t.k = 1;
  if (!rest.empty() && rest.front() == '(') {
    const size_t close = rest.find(')');
    if (close == std::string_view::npos) return fail();
    const std::string_view digits = rest.substr(1, close - 1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), t.k);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || t.k < 1) {
      return fail();
    }
    rest = rest.substr(close + 1);
  }
  if (!rest.empty()) {
    if (rest.front() != ':' || rest.size() == 1) return fail();
    t.label = std::string(rest.substr(1));
  }
  return t;
}

inline void TransitionSystem::ApplyInPlace(Configuration &c,
                                           const Transition &t) const {
  if (!IsLegal(c, t)) {
    throw IllegalTransitionError(
        "illegal transition " + ToString(t) + " under " + name(), 0, c);
  }
  switch (t.kind) {
    case TransitionKind::kShift: {
      c.lambda1.insert(c.lambda1.end(), c.lambda2.begin(), c.lambda2.end());
      c.lambda1.push_back(c.buffer.front());
      c.lambda2.clear();
      c.buffer.erase(c.buffer.begin());
      return;
    }
    case TransitionKind::kNoArc:
    case TransitionKind::kLeftArc:
    case TransitionKind::kRightArc: {
      const int k = t.kind == TransitionKind::kNoArc ? 1 : t.k;
      const NodeId ik = c.LeftWord(k);
      const NodeId j = c.RightFocus();
      if (t.kind == TransitionKind::kLeftArc) c.arcs.Add(j, ik, t.label);
      if (t.kind == TransitionKind::kRightArc) c.arcs.Add(ik, j, t.label);
      const auto split = c.lambda1.end() - k;
      c.lambda2.insert(c.lambda2.begin(), split, c.lambda1.end());
      c.lambda1.erase(split, c.lambda1.end());
      return;
    }
  }
}

// Folds Apply() over `seq` from the initial configuration of an n-word
// sentence. The first illegal transition raises IllegalTransitionError
// carrying its index and the configuration it was applied to.
inline Configuration RunSequence(const TransitionSystem &sys, int n,
                                 const std::vector<Transition> &seq) {
  Configuration c = InitialConfiguration(n);
  for (size_t idx = 0; idx < seq.size(); ++idx) {
    if (!sys.IsLegal(c, seq[idx])) {
      throw IllegalTransitionError("illegal transition " + ToString(seq[idx]) +
                                       " at index " + std::to_string(idx) +
                                       " under " + sys.name(),
                                   idx, c);
    }
    sys.ApplyInPlace(c, seq[idx]);
  }
  return c;
}

}  // namespace nlcov
