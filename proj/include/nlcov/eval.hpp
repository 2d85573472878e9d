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

// Attachment scores, oracle transition-count statistics and projectivity.

#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include "nlcov/conll.hpp"
#include "nlcov/core.hpp"
#include "nlcov/oracle.hpp"
#include "nlcov/systems.hpp"

namespace nlcov {

enum class PunctPolicy { kInclude, kExclude };

struct ScoreReport {
  double uas = 0.0;
  double las = 0.0;
  int64_t tokens_scored = 0;
  int64_t tokens_excluded = 0;
  int64_t head_correct = 0;
  int64_t label_correct = 0;
};

struct ScoreOptions {
  PunctPolicy punct = PunctPolicy::kInclude;
  // When non-empty, tokens whose POSTAG or CPOSTAG is listed count as
  // punctuation instead of the form-based rule.
  std::set<std::string> punct_tags;
};

// True iff `form` is non-empty valid UTF-8 made only of characters in the
// Unicode punctuation categories (Pc, Pd, Ps, Pe, Pi, Pf, Po).
inline bool IsPunctuationForm(std::string_view form) {
  if (form.empty()) return false;
  const auto *bytes = reinterpret_cast<const uint8_t *>(form.data());
  const int32_t length = static_cast<int32_t>(form.size());
  int32_t offset = 0;
  while (offset < length) {
    UChar32 ch = 0;
    U8_NEXT(bytes, offset, length, ch);
    if (ch < 0 || !u_ispunct(ch)) return false;
  }
  return true;
}

inline bool IsPunctuation(const Token &token, const ScoreOptions &options) {
  if (!options.punct_tags.empty()) {
    return options.punct_tags.count(token.pos) > 0 ||
           options.punct_tags.count(token.cpos) > 0;
  }
  return IsPunctuationForm(token.form);
}

// UAS and LAS of `predicted` against the gold annotation of `gold`.
inline ScoreReport ScoreParses(const CorpusDocument &gold,
                               const std::vector<ArcSet> &predicted,
                               const ScoreOptions &options = {}) {
  if (predicted.size() != gold.sentences.size()) {
    throw Error("got " + std::to_string(predicted.size()) + " parses for " +
                std::to_string(gold.sentences.size()) + " gold sentences");
  }
  ScoreReport report;
  for (size_t s = 0; s < predicted.size(); ++s) {
    const Sentence &sentence = gold.sentences[s];
    for (const Token &token : sentence.tokens()) {
      if (!token.gold_head) {
        throw Error("gold sentence " + std::to_string(s + 1) + " token " +
                    std::to_string(token.id) + " has no head");
      }
      if (options.punct == PunctPolicy::kExclude && IsPunctuation(token, options)) {
        ++report.tokens_excluded;
        continue;
      }
      ++report.tokens_scored;
      const Attachment *att = predicted[s].Find(token.id);
      if (att == nullptr || att->head != *token.gold_head) continue;
      ++report.head_correct;
      if (att->label == token.gold_label.value_or("")) ++report.label_correct;
    }
  }
  if (report.tokens_scored > 0) {
    report.uas = static_cast<double>(report.head_correct) / report.tokens_scored;
    report.las = static_cast<double>(report.label_correct) / report.tokens_scored;
  }
  return report;
}

struct SentenceTransitionCounts {
  int64_t covington = 0;
  int64_t nl_covington = 0;
};

struct TransitionStats {
  std::vector<SentenceTransitionCounts> per_sentence;
  double avg_cov = 0.0;
  double avg_nl = 0.0;

  // Share of Covington transitions saved by NL-Covington, in percent.
  double ReductionPercent() const {
    return avg_cov > 0.0 ? 100.0 * (avg_cov - avg_nl) / avg_cov : 0.0;
  }
};

// Static-oracle sequence lengths of both systems for each tree.
inline TransitionStats ComputeTransitionStats(const std::vector<GoldTree> &corpus) {
  TransitionStats stats;
  int64_t total_cov = 0;
  int64_t total_nl = 0;
  for (const GoldTree &gold : corpus) {
    SentenceTransitionCounts counts;
    counts.covington = static_cast<int64_t>(
        OracleSequence(SystemForTree(SystemKind::kCovington, gold), gold).size());
    counts.nl_covington = static_cast<int64_t>(
        OracleSequence(SystemForTree(SystemKind::kNlCovington, gold), gold).size());
    total_cov += counts.covington;
    total_nl += counts.nl_covington;
    stats.per_sentence.push_back(counts);
  }
  if (!corpus.empty()) {
    stats.avg_cov = static_cast<double>(total_cov) / static_cast<double>(corpus.size());
    stats.avg_nl = static_cast<double>(total_nl) / static_cast<double>(corpus.size());
  }
  return stats;
}

// True iff no two arcs of the tree cross, counting arcs from the root at
// position 0. Arcs sharing an endpoint never cross.
inline bool IsProjective(const GoldTree &gold) {
  std::vector<std::pair<int, int>> spans;
  for (NodeId v = 1; v <= gold.size(); ++v) {
    spans.emplace_back(std::min(v, gold.head(v)), std::max(v, gold.head(v)));
  }
  for (size_t a = 0; a < spans.size(); ++a) {
    for (size_t b = a + 1; b < spans.size(); ++b) {
      const auto [l1, r1] = spans[a];
      const auto [l2, r2] = spans[b];
      if ((l1 < l2 && l2 < r1 && r1 < r2) || (l2 < l1 && l1 < r2 && r2 < r1)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace nlcov
