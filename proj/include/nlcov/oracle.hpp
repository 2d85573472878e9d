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

// Static oracles for the Covington and NL-Covington systems.
//
// The NL-Covington oracle builds the shortest pending gold arc between the
// right focus word j and a word in lambda1, and shifts when none is left.
// The Covington oracle is defined as its expansion: the k-1 No-Arc moves
// that walk the left focus onto i_k, then the local arc.
// Arcs from the artificial root are never built; AttachRoot() adds them.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nlcov/core.hpp"
#include "nlcov/systems.hpp"

namespace nlcov {

class OracleError : public Error {
 public:
  using Error::Error;
};

// A complete gold dependency tree over {0..n} rooted at 0.
class GoldTree {
 public:
  GoldTree() = default;

  // heads[v - 1] is the attachment of node v. Throws Error unless the heads
  // form a tree rooted at 0.
  explicit GoldTree(std::vector<Attachment> heads) : heads_(std::move(heads)) {
    const int n = size();
    for (NodeId v = 1; v <= n; ++v) {
      const NodeId h = head(v);
      if (h < 0 || h > n || h == v) {
        throw Error("node " + std::to_string(v) + " has invalid head " +
                    std::to_string(h));
      }
    }
    // Every node must reach the root within n steps.
    for (NodeId v = 1; v <= n; ++v) {
      NodeId cur = v;
      int steps = 0;
      while (cur != kRootNode && steps <= n) {
        cur = head(cur);
        ++steps;
      }
      if (cur != kRootNode) {
        throw Error("gold heads contain a cycle through node " + std::to_string(v));
      }
    }
  }

  // Throws Error if any token lacks a gold head or the heads are not a tree.
  static GoldTree FromSentence(const Sentence &sentence) {
    std::vector<Attachment> heads;
    heads.reserve(sentence.tokens().size());
    for (const Token &token : sentence.tokens()) {
      if (!token.gold_head) {
        throw Error("token " + std::to_string(token.id) + " has no gold head");
      }
      heads.push_back({*token.gold_head, token.gold_label.value_or("")});
    }
    return GoldTree(std::move(heads));
  }

  int size() const { return static_cast<int>(heads_.size()); }
  NodeId head(NodeId v) const { return heads_.at(v - 1).head; }
  const std::string &label(NodeId v) const { return heads_.at(v - 1).label; }
  const std::vector<Attachment> &heads() const { return heads_; }

  // All arcs, root arcs included.
  ArcSet ToArcSet() const {
    ArcSet arcs;
    for (NodeId v = 1; v <= size(); ++v) arcs.Add(head(v), v, label(v));
    return arcs;
  }

  int NonRootArcCount() const {
    int count = 0;
    for (const Attachment &att : heads_) count += att.head != kRootNode;
    return count;
  }

  // Distinct labels of non-root arcs in order of first appearance.
  std::vector<std::string> ArcLabels() const {
    std::vector<std::string> out;
    for (const Attachment &att : heads_) {
      if (att.head == kRootNode) continue;
      if (std::find(out.begin(), out.end(), att.label) == out.end()) {
        out.push_back(att.label);
      }
    }
    return out;
  }

  friend bool operator==(const GoldTree &, const GoldTree &) = default;

 private:
  std::vector<Attachment> heads_;
};

// A transition system able to replay the oracle for `gold`: its label set is
// the tree's arc labels, or {fallback} when the tree has no non-root arcs.
inline TransitionSystem SystemForTree(SystemKind kind, const GoldTree &gold,
                                      const std::string &fallback = "") {
  std::vector<std::string> labels = gold.ArcLabels();
  if (labels.empty()) labels.push_back(fallback);
  return TransitionSystem(kind, std::move(labels));
}

namespace internal {

inline void CheckOraclePrecondition(const Configuration &c, const GoldTree &gold) {
  if (IsTerminal(c)) throw OracleError("oracle queried on a terminal configuration");
  for (const auto &[dep, att] : c.arcs.head_of()) {
    if (dep < 1 || dep > gold.size() || gold.head(dep) != att.head ||
        gold.label(dep) != att.label || att.head == kRootNode) {
      throw OracleError("configuration arc " + std::to_string(att.head) + " -> " +
                        std::to_string(dep) + " is not a gold arc");
    }
  }
}

// Unbuilt gold arc between j and i, if any, as the transition building it at
// position k.
inline std::optional<Transition> PendingArc(const Configuration &c,
                                            const GoldTree &gold, int k) {
  const NodeId i = c.LeftWord(k);
  const NodeId j = c.RightFocus();
  if (gold.head(j) == i && !c.arcs.HasHead(j)) {
    return Transition::RightArc(k, gold.label(j));
  }
  if (gold.head(i) == j && !c.arcs.HasHead(i)) {
    return Transition::LeftArc(k, gold.label(i));
  }
  return std::nullopt;
}

}  // namespace internal

// Next NL-Covington transition: the arc to the closest lambda1 word with a
// pending gold arc to j, or Shift.
inline Transition NlOracleStep(const Configuration &c, const GoldTree &gold) {
  internal::CheckOraclePrecondition(c, gold);
  // lambda1 is increasing, so distance to j grows with k and there are no
  // ties.
  for (int k = 1; k <= static_cast<int>(c.lambda1.size()); ++k) {
    if (auto t = internal::PendingArc(c, gold, k)) return *t;
  }
  return Transition::Shift();
}

// Next Covington transition: the local arc if the focus pair has a pending
// gold arc, No-Arc if one is pending further left in lambda1, else Shift.
inline Transition CovOracleStep(const Configuration &c, const GoldTree &gold) {
  internal::CheckOraclePrecondition(c, gold);
  if (c.lambda1.empty()) return Transition::Shift();
  if (auto t = internal::PendingArc(c, gold, 1)) return *t;
  for (int k = 2; k <= static_cast<int>(c.lambda1.size()); ++k) {
    if (internal::PendingArc(c, gold, k)) return Transition::NoArc();
  }
  return Transition::Shift();
}

inline Transition OracleStep(SystemKind kind, const Configuration &c,
                             const GoldTree &gold) {
  return kind == SystemKind::kCovington ? CovOracleStep(c, gold)
                                        : NlOracleStep(c, gold);
}

// The canonical transition sequence deriving the non-root arcs of `gold`.
inline std::vector<Transition> OracleSequence(const TransitionSystem &sys,
                                              const GoldTree &gold) {
  std::vector<Transition> seq;
  Configuration c = InitialConfiguration(gold.size());
  while (!IsTerminal(c)) {
    Transition t = OracleStep(sys.kind(), c, gold);
    sys.ApplyInPlace(c, t);
    seq.push_back(std::move(t));
  }
  return seq;
}

// Rewrites an NL-Covington sequence as the equivalent Covington one: each
// arc transition with parameter k becomes k-1 No-Arc moves and the local arc.
inline std::vector<Transition> ExpandToCovington(const std::vector<Transition> &seq) {
  std::vector<Transition> out;
  out.reserve(seq.size());
  for (const Transition &t : seq) {
    switch (t.kind) {
      case TransitionKind::kShift:
        out.push_back(t);
        break;
      case TransitionKind::kNoArc:
        throw Error("No-Arc does not occur in NL-Covington sequences");
      case TransitionKind::kLeftArc:
      case TransitionKind::kRightArc:
        if (t.k < 1) throw Error("arc transition with k < 1");
        out.insert(out.end(), static_cast<size_t>(t.k - 1), Transition::NoArc());
        out.push_back({t.kind, 1, t.label});
        break;
    }
  }
  return out;
}

// Sum of (k - 1) over the arc transitions of `seq`: the number of No-Arc
// moves its Covington expansion adds.
inline int64_t NonLocalSavings(const std::vector<Transition> &seq) {
  int64_t total = 0;
  for (const Transition &t : seq) {
    if (t.IsArc()) total += t.k - 1;
  }
  return total;
}

// Uniformly samples one of the (n+1)^(n-1) trees over {0..n} rooted at 0 by
// decoding a random Pruefer sequence. Non-root arcs get labels drawn
// uniformly from `labels`; root arcs get `root_label`.
inline GoldTree RandomGoldTree(int n, uint64_t seed,
                               const std::vector<std::string> &labels = {"dep"},
                               const std::string &root_label = kDefaultRootLabel) {
  if (n < 1) throw Error("random trees need n >= 1");
  if (labels.empty()) throw Error("random trees need at least one label");
  std::mt19937_64 rng(seed);
  const int vertices = n + 1;
  std::vector<int> code(static_cast<size_t>(n - 1));
  for (int &x : code) x = static_cast<int>(rng() % static_cast<uint64_t>(vertices));

  // Pruefer decoding into an undirected edge list.
  std::vector<int> degree(static_cast<size_t>(vertices), 1);
  for (int x : code) ++degree[static_cast<size_t>(x)];
  std::vector<std::vector<int>> adjacent(static_cast<size_t>(vertices));
  auto link = [&](int a, int b) {
    adjacent[static_cast<size_t>(a)].push_back(b);
    adjacent[static_cast<size_t>(b)].push_back(a);
  };
  for (int x : code) {
    int leaf = 0;
    while (degree[static_cast<size_t>(leaf)] != 1) ++leaf;
    link(leaf, x);
    --degree[static_cast<size_t>(leaf)];
    --degree[static_cast<size_t>(x)];
  }
  int u = -1;
  for (int v = 0; v < vertices; ++v) {
    if (degree[static_cast<size_t>(v)] == 1) {
      if (u < 0) {
        u = v;
      } else {
        link(u, v);
        break;
      }
    }
  }

  // Orient away from node 0.
  std::vector<Attachment> heads(static_cast<size_t>(n));
  std::vector<bool> visited(static_cast<size_t>(vertices), false);
  std::vector<int> stack = {kRootNode};
  visited[0] = true;
  while (!stack.empty()) {
    const int cur = stack.back();
    stack.pop_back();
    for (int next : adjacent[static_cast<size_t>(cur)]) {
      if (visited[static_cast<size_t>(next)]) continue;
      visited[static_cast<size_t>(next)] = true;
      heads[static_cast<size_t>(next - 1)].head = cur;
      stack.push_back(next);
    }
  }
  for (NodeId v = 1; v <= n; ++v) {
    Attachment &att = heads[static_cast<size_t>(v - 1)];
    att.label = att.head == kRootNode
                    ? root_label
                    : labels[rng() % static_cast<uint64_t>(labels.size())];
  }
  return GoldTree(std::move(heads));
}

// One row of an oracle trace: the transition and the configuration it leads
// to.
struct TraceRow {
  int step = 0;
  Transition transition;
  Configuration after;
  std::optional<Arc> new_arc;
};

inline std::vector<TraceRow> OracleTrace(const TransitionSystem &sys,
                                         const GoldTree &gold) {
  std::vector<TraceRow> rows;
  Configuration c = InitialConfiguration(gold.size());
  while (!IsTerminal(c)) {
    TraceRow row;
    row.step = static_cast<int>(rows.size()) + 1;
    row.transition = OracleStep(sys.kind(), c, gold);
    const NodeId j = c.RightFocus();
    if (row.transition.kind == TransitionKind::kLeftArc) {
      row.new_arc = Arc{j, c.LeftWord(row.transition.k), row.transition.label};
    } else if (row.transition.kind == TransitionKind::kRightArc) {
      row.new_arc = Arc{c.LeftWord(row.transition.k), j, row.transition.label};
    }
    sys.ApplyInPlace(c, row.transition);
    row.after = c;
    rows.push_back(std::move(row));
  }
  return rows;
}

// "[1, 2, 3]" or "[]".
inline std::string FormatNodeList(const std::vector<NodeId> &nodes) {
  std::string out = "[";
  for (size_t idx = 0; idx < nodes.size(); ++idx) {
    if (idx > 0) out += ", ";
    out += std::to_string(nodes[idx]);
  }
  return out + "]";
}

inline constexpr const char *kTraceHeader =
    "step\ttransition\tlambda1\tlambda2\tbuffer\tnew_arc";

// Tab-separated trace rows, no header. Rightward arcs print as "h->d",
// leftward ones as "d<-h".
inline void WriteTrace(std::ostream &out, SystemKind system,
                       const std::vector<TraceRow> &rows) {
  for (const TraceRow &row : rows) {
    out << row.step << '\t' << ToString(row.transition, system) << '\t'
        << FormatNodeList(row.after.lambda1) << '\t'
        << FormatNodeList(row.after.lambda2) << '\t'
        << FormatNodeList(row.after.buffer) << '\t';
    if (row.new_arc) {
      const Arc &arc = *row.new_arc;
      if (arc.head < arc.dependent) {
        out << arc.head << "->" << arc.dependent;
      } else {
        out << arc.dependent << "<-" << arc.head;
      }
    }
    out << '\n';
  }
}

}  // namespace nlcov
