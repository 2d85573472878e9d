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

// Deterministic synthetic treebanks for tests, demos and the bundled data.
//
//  - ZipfCorpus: random trees whose arc lengths follow a truncated Zipf law,
//    used to measure oracle sequence lengths.
//  - ToyCorpus: sentences from a tiny English-like grammar with lexically
//    determined attachments and an occasional extraposed relative clause
//    (non-projective), used to check that the parser can learn.

#pragma once

#include <cmath>
#include <cstdlib>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "nlcov/core.hpp"

namespace nlcov::synthetic {

namespace internal {

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound).
  int Below(int bound) {
    return static_cast<int>(engine_() % static_cast<uint64_t>(bound));
  }
  // Uniform in [lo, hi].
  int Between(int lo, int hi) { return lo + Below(hi - lo + 1); }
  // Uniform in [0, 1).
  double Unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool Chance(double p) { return Unit() < p; }

  template <typename T>
  const T &Pick(const std::vector<T> &items) {
    return items[static_cast<size_t>(Below(static_cast<int>(items.size())))];
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace internal

struct ZipfOptions {
  int min_length = 5;
  int max_length = 40;
  double exponent = 1.5;
};

// One tree over n words: a random word heads the sentence and the others
// join in random order, each attaching to a word already in the tree with
// probability proportional to distance^-exponent.
inline Sentence ZipfSentence(int n, internal::Rng &rng, double exponent) {
  std::vector<int> order(static_cast<size_t>(n));
  for (int v = 1; v <= n; ++v) order[static_cast<size_t>(v - 1)] = v;
  for (int idx = n; idx > 1; --idx) {
    std::swap(order[static_cast<size_t>(idx - 1)],
              order[static_cast<size_t>(rng.Below(idx))]);
  }
  std::vector<int> heads(static_cast<size_t>(n + 1), -1);
  std::vector<int> placed = {order.front()};
  heads[static_cast<size_t>(order.front())] = kRootNode;
  for (size_t idx = 1; idx < order.size(); ++idx) {
    const int v = order[idx];
    double total = 0.0;
    std::vector<double> weights;
    for (int u : placed) {
      weights.push_back(std::pow(static_cast<double>(std::abs(u - v)), -exponent));
      total += weights.back();
    }
    double target = rng.Unit() * total;
    size_t pick = 0;
    while (pick + 1 < placed.size() && target >= weights[pick]) {
      target -= weights[pick];
      ++pick;
    }
    heads[static_cast<size_t>(v)] = placed[pick];
    placed.push_back(v);
  }
  std::vector<Token> tokens;
  for (int v = 1; v <= n; ++v) {
    Token token;
    token.id = v;
    token.form = "w" + std::to_string(v);
    token.cpos = token.pos = "X";
    token.gold_head = heads[static_cast<size_t>(v)];
    token.gold_label = heads[static_cast<size_t>(v)] == kRootNode ? "root" : "dep";
    tokens.push_back(std::move(token));
  }
  return Sentence(std::move(tokens));
}

inline std::vector<Sentence> ZipfCorpus(int count, uint64_t seed,
                                        const ZipfOptions &options = {}) {
  internal::Rng rng(seed);
  std::vector<Sentence> out;
  for (int s = 0; s < count; ++s) {
    const int n = rng.Between(options.min_length, options.max_length);
    out.push_back(ZipfSentence(n, rng, options.exponent));
  }
  return out;
}

namespace internal {

// Words of a sentence under construction; heads refer to indices in
// `words` and are converted to 1-based ids by Finish().
class SentenceBuilder {
 public:
  int Add(std::string form, std::string pos) {
    words_.push_back({std::move(form), std::move(pos), -1, {}});
    return static_cast<int>(words_.size()) - 1;
  }
  void Attach(int dependent, int head, std::string label) {
    words_[static_cast<size_t>(dependent)].head = head;
    words_[static_cast<size_t>(dependent)].label = std::move(label);
  }
  Sentence Finish() const {
    std::vector<Token> tokens;
    for (size_t idx = 0; idx < words_.size(); ++idx) {
      const Word &w = words_[idx];
      Token token;
      token.id = static_cast<NodeId>(idx + 1);
      token.form = w.form;
      token.lemma = w.form;
      token.cpos = token.pos = w.pos;
      token.gold_head = w.head < 0 ? kRootNode : w.head + 1;
      token.gold_label = w.head < 0 ? "root" : w.label;
      tokens.push_back(std::move(token));
    }
    return Sentence(std::move(tokens));
  }

 private:
  struct Word {
    std::string form;
    std::string pos;
    int head;
    std::string label;
  };
  std::vector<Word> words_;
};

struct ToyLexicon {
  std::vector<std::string> determiners = {"the", "a", "every", "this"};
  std::vector<std::string> adjectives = {"big", "small", "red", "old", "happy"};
  std::vector<std::string> nouns = {"dog",   "cat",  "man",   "woman",  "park",
                                    "house", "book", "child", "garden", "telescope"};
  std::vector<std::string> pronouns = {"he", "she", "they"};
  std::vector<std::string> transitive = {"sees", "likes", "finds", "reads", "builds"};
  std::vector<std::string> intransitive = {"sleeps", "runs", "smiles", "waits"};
  std::vector<std::string> adverbs = {"quickly", "often", "today"};
};

// Noun phrase "DET ADJ* NOUN [of NP]"; returns the index of its head noun.
inline int AddNounPhrase(SentenceBuilder &b, Rng &rng, const ToyLexicon &lex,
                         int depth) {
  const int det = b.Add(rng.Pick(lex.determiners), "DET");
  std::vector<int> adjs;
  const int num_adjs = rng.Below(3);
  for (int a = 0; a < num_adjs; ++a) adjs.push_back(b.Add(rng.Pick(lex.adjectives), "ADJ"));
  const int noun = b.Add(rng.Pick(lex.nouns), "NOUN");
  b.Attach(det, noun, "det");
  for (int adj : adjs) b.Attach(adj, noun, "amod");
  if (depth == 0 && rng.Chance(0.25)) {
    const int prep = b.Add("of", "ADP");
    const int inner = AddNounPhrase(b, rng, lex, depth + 1);
    b.Attach(prep, inner, "case");
    b.Attach(inner, noun, "nmod");
  }
  return noun;
}

}  // namespace internal

// One sentence of the toy grammar:
//   SUBJ VERB [OBJ] [with|in NP] [ADV] [who VERB] .
// "with" and "in" phrases attach to the verb and "of" phrases to the noun
// before them. The trailing "who VERB" clause modifies the subject noun,
// crossing the verb's root arc.
inline Sentence ToySentence(internal::Rng &rng) {
  static const internal::ToyLexicon lex;
  internal::SentenceBuilder b;
  int subject;
  const bool pronoun_subject = rng.Chance(0.3);
  if (pronoun_subject) {
    subject = b.Add(rng.Pick(lex.pronouns), "PRON");
  } else {
    subject = internal::AddNounPhrase(b, rng, lex, 0);
  }
  const bool transitive = rng.Chance(0.6);
  const int verb =
      b.Add(rng.Pick(transitive ? lex.transitive : lex.intransitive), "VERB");
  b.Attach(subject, verb, "nsubj");
  if (transitive) {
    const int object = internal::AddNounPhrase(b, rng, lex, 0);
    b.Attach(object, verb, "obj");
  }
  if (rng.Chance(0.4)) {
    const int prep = b.Add(rng.Chance(0.5) ? "with" : "in", "ADP");
    const int noun = internal::AddNounPhrase(b, rng, lex, 1);
    b.Attach(prep, noun, "case");
    b.Attach(noun, verb, "obl");
  }
  if (rng.Chance(0.3)) b.Attach(b.Add(rng.Pick(lex.adverbs), "ADV"), verb, "advmod");
  if (!pronoun_subject && rng.Chance(0.25)) {
    const int who = b.Add("who", "PRON");
    const int rel = b.Add(rng.Pick(lex.intransitive), "VERB");
    b.Attach(who, rel, "nsubj");
    b.Attach(rel, subject, "acl");
  }
  b.Attach(b.Add(".", "PUNCT"), verb, "punct");
  return b.Finish();
}

inline std::vector<Sentence> ToyCorpus(int count, uint64_t seed) {
  internal::Rng rng(seed);
  std::vector<Sentence> out;
  for (int s = 0; s < count; ++s) out.push_back(ToySentence(rng));
  return out;
}

}  // namespace nlcov::synthetic
