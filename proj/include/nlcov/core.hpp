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

// Domain types shared by every part of the toolkit: tokens and sentences,
// labeled arcs, the arc set built during parsing, parser configurations
// <lambda1, lambda2, buffer, arcs> and transitions.
//
// Node ids are 1-based sentence positions. Node 0 is the artificial root; it
// never appears in a configuration and only receives arcs via AttachRoot().

#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nlcov {

using NodeId = int;

inline constexpr NodeId kRootNode = 0;
inline constexpr const char *kDefaultRootLabel = "ROOT";

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Token {
  NodeId id = 1;
  std::string form;
  std::string lemma;
  std::string cpos;
  std::string pos;
  std::string feats;
  std::optional<NodeId> gold_head;
  std::optional<std::string> gold_label;

  friend bool operator==(const Token &, const Token &) = default;
};

class Sentence {
 public:
  Sentence() = default;

  // Throws Error unless ids are 1..n in order and no token heads itself.
  explicit Sentence(std::vector<Token> tokens) : tokens_(std::move(tokens)) {
    for (size_t k = 0; k < tokens_.size(); ++k) {
      const Token &token = tokens_[k];
      if (token.id != static_cast<NodeId>(k + 1)) {
        throw Error("token ids must be contiguous from 1; found id " +
                    std::to_string(token.id) + " at position " +
                    std::to_string(k + 1));
      }
      if (token.gold_head && *token.gold_head == token.id) {
        throw Error("token " + std::to_string(token.id) + " is its own head");
      }
    }
  }

  int size() const { return static_cast<int>(tokens_.size()); }
  bool empty() const { return tokens_.empty(); }

  // 1-based access by node id.
  const Token &token(NodeId id) const { return tokens_.at(id - 1); }
  const std::vector<Token> &tokens() const { return tokens_; }

  bool HasGoldHeads() const {
    return std::all_of(tokens_.begin(), tokens_.end(),
                       [](const Token &t) { return t.gold_head.has_value(); });
  }

  friend bool operator==(const Sentence &, const Sentence &) = default;

 private:
  std::vector<Token> tokens_;
};

struct Arc {
  NodeId head = 0;
  NodeId dependent = 1;
  std::string label;

  friend auto operator<=>(const Arc &, const Arc &) = default;
};

// Head and label of one dependent.
struct Attachment {
  NodeId head = 0;
  std::string label;

  friend bool operator==(const Attachment &, const Attachment &) = default;
};

// Set of labeled arcs keyed by dependent, so the single-head property holds
// structurally. Acyclicity is enforced by Add().
class ArcSet {
 public:
  ArcSet() = default;
  ArcSet(std::initializer_list<Arc> arcs) {
    for (const Arc &arc : arcs) Add(arc);
  }

  // Throws Error if the arc would give its dependent a second head or close a
  // cycle.
  void Add(const Arc &arc);
  void Add(NodeId head, NodeId dependent, std::string label = {}) {
    Add(Arc{head, dependent, std::move(label)});
  }

  bool HasHead(NodeId dependent) const { return head_of_.count(dependent) > 0; }

  const Attachment *Find(NodeId dependent) const {
    auto it = head_of_.find(dependent);
    return it == head_of_.end() ? nullptr : &it->second;
  }

  bool Contains(NodeId head, NodeId dependent) const {
    const Attachment *att = Find(dependent);
    return att != nullptr && att->head == head;
  }

  // True iff there is a (possibly empty) directed path from `from` to `to`.
  // Walks the head chain upwards from `to`, which is the single-head
  // specialisation of a depth-first search over dependents.
  bool HasPath(NodeId from, NodeId to) const {
    NodeId cur = to;
    for (size_t steps = 0; steps <= head_of_.size(); ++steps) {
      if (cur == from) return true;
      const Attachment *att = Find(cur);
      if (att == nullptr) return false;
      cur = att->head;
    }
    return false;
  }

  // Arcs ordered by dependent.
  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    out.reserve(head_of_.size());
    for (const auto &[dep, att] : head_of_) out.push_back({att.head, dep, att.label});
    return out;
  }

  const std::map<NodeId, Attachment> &head_of() const { return head_of_; }
  size_t size() const { return head_of_.size(); }
  bool empty() const { return head_of_.empty(); }

  friend bool operator==(const ArcSet &, const ArcSet &) = default;

 private:
  std::map<NodeId, Attachment> head_of_;
};

inline bool WouldViolateSingleHead(const ArcSet &arcs, NodeId dependent) {
  return arcs.HasHead(dependent);
}

// True iff adding head -> dependent would close a cycle, i.e. a path from
// dependent to head already exists.
inline bool WouldCreateCycle(const ArcSet &arcs, NodeId head, NodeId dependent) {
  return arcs.HasPath(dependent, head);
}

inline void ArcSet::Add(const Arc &arc) {
  if (arc.head == arc.dependent) {
    throw Error("self-loop on node " + std::to_string(arc.dependent));
  }
  if (arc.head < 0 || arc.dependent < 1) {
    throw Error("invalid arc " + std::to_string(arc.head) + " -> " +
                std::to_string(arc.dependent));
  }
  if (WouldViolateSingleHead(*this, arc.dependent)) {
    throw Error("node " + std::to_string(arc.dependent) + " already has a head");
  }
  if (WouldCreateCycle(*this, arc.head, arc.dependent)) {
    throw Error("arc " + std::to_string(arc.head) + " -> " +
                std::to_string(arc.dependent) + " would create a cycle");
  }
  head_of_.emplace(arc.dependent, Attachment{arc.head, arc.label});
}

// Links every headless node in 1..n to the artificial root.
inline ArcSet AttachRoot(ArcSet arcs, int n,
                         const std::string &root_label = kDefaultRootLabel) {
  for (NodeId v = 1; v <= n; ++v) {
    if (!arcs.HasHead(v)) arcs.Add(kRootNode, v, root_label);
  }
  return arcs;
}

// True iff every node 1..n has exactly one head in 0..n and all nodes reach
// the root.
inline bool IsRootedTree(const ArcSet &arcs, int n) {
  if (static_cast<int>(arcs.size()) != n) return false;
  for (const auto &[dep, att] : arcs.head_of()) {
    if (dep < 1 || dep > n || att.head < 0 || att.head > n) return false;
  }
  for (NodeId v = 1; v <= n; ++v) {
    if (!arcs.HasPath(kRootNode, v)) return false;
  }
  return true;
}

enum class TransitionKind { kShift, kNoArc, kLeftArc, kRightArc };

struct Transition {
  TransitionKind kind = TransitionKind::kShift;
  // Position of the arc's left endpoint in lambda1, counted from its right
  // end. Zero for Shift and NoArc.
  int k = 0;
  std::string label;

  static Transition Shift() { return {TransitionKind::kShift, 0, {}}; }
  static Transition NoArc() { return {TransitionKind::kNoArc, 0, {}}; }
  static Transition LeftArc(int k, std::string label = {}) {
    return {TransitionKind::kLeftArc, k, std::move(label)};
  }
  static Transition RightArc(int k, std::string label = {}) {
    return {TransitionKind::kRightArc, k, std::move(label)};
  }

  bool IsArc() const {
    return kind == TransitionKind::kLeftArc || kind == TransitionKind::kRightArc;
  }

  friend bool operator==(const Transition &, const Transition &) = default;
};

struct Configuration {
  // Rightmost element is the left focus word i.
  std::vector<NodeId> lambda1;
  std::vector<NodeId> lambda2;
  // Front element is the right focus word j.
  std::vector<NodeId> buffer;
  ArcSet arcs;

  // i_k: the k-th element of lambda1 counted from the right (k >= 1).
  NodeId LeftWord(int k) const {
    return lambda1[lambda1.size() - static_cast<size_t>(k)];
  }
  NodeId RightFocus() const { return buffer.front(); }

  friend bool operator==(const Configuration &, const Configuration &) = default;
};

inline Configuration InitialConfiguration(int n) {
  if (n < 0) throw Error("sentence length must be non-negative");
  Configuration c;
  c.buffer.reserve(static_cast<size_t>(n));
  for (NodeId v = 1; v <= n; ++v) c.buffer.push_back(v);
  return c;
}

inline bool IsTerminal(const Configuration &c) { return c.buffer.empty(); }

// Checks the structural invariants of a configuration over n words: the three
// lists partition 1..n, lambda1 and lambda2 are increasing and precede the
// buffer, and the arcs form a forest over 1..n.
inline bool SatisfiesInvariants(const Configuration &c, int n) {
  std::vector<NodeId> all;
  all.insert(all.end(), c.lambda1.begin(), c.lambda1.end());
  all.insert(all.end(), c.lambda2.begin(), c.lambda2.end());
  all.insert(all.end(), c.buffer.begin(), c.buffer.end());
  if (static_cast<int>(all.size()) != n) return false;
  // lambda1 ++ lambda2 ++ buffer is sorted exactly when all three orderings
  // hold; together with the size check it is then 1..n.
  for (int idx = 0; idx < n; ++idx) {
    if (all[static_cast<size_t>(idx)] != idx + 1) return false;
  }
  for (const auto &[dep, att] : c.arcs.head_of()) {
    if (dep < 1 || dep > n || att.head < 1 || att.head > n) return false;
  }
  return true;
}

}  // namespace nlcov
