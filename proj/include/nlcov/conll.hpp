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

// CoNLL-X reader and writer.
//
// A token line has ten tab-separated columns:
//   ID FORM LEMMA CPOSTAG POSTAG FEATS HEAD DEPREL PHEAD PDEPREL
// "_" marks an absent value and sentences are separated by blank lines.
// With `conllu` set, comment lines and multiword/empty-node rows of CoNLL-U
// files are skipped; UPOS and XPOS land in CPOSTAG and POSTAG since the
// columns line up.

#pragma once

#include <charconv>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "nlcov/core.hpp"

namespace nlcov {

class ConllError : public Error {
 public:
  ConllError(const std::string &what, int line) : Error(what), line_(line) {}
  // 1-based input line, or 0 when the error is not tied to one line.
  int line() const { return line_; }

 private:
  int line_;
};

struct CorpusDocument {
  std::vector<Sentence> sentences;
  std::string source_name;
};

struct ReadOptions {
  // Strict mode fails on a sentence whose gold heads contain a cycle;
  // lenient mode skips it and records an issue.
  bool strict = true;
  bool conllu = false;
};

namespace internal {

inline std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t start = 0;
  while (true) {
    const size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

inline bool ParseInt(std::string_view text, int &value) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size();
}

inline std::string Field(std::string_view text) {
  return text == "_" ? std::string() : std::string(text);
}

// Node on a head cycle, or 0 when the present heads are acyclic.
inline NodeId FindHeadCycle(const std::vector<Token> &tokens) {
  const int n = static_cast<int>(tokens.size());
  for (const Token &token : tokens) {
    NodeId cur = token.id;
    for (int steps = 0; steps <= n; ++steps) {
      const Token &t = tokens[static_cast<size_t>(cur - 1)];
      if (!t.gold_head || *t.gold_head == kRootNode) {
        cur = kRootNode;
        break;
      }
      cur = *t.gold_head;
    }
    if (cur != kRootNode) return token.id;
  }
  return kRootNode;
}

}  // namespace internal

// Reads a whole document. Format errors throw ConllError with the offending
// line number. Cycle diagnostics of skipped sentences go to `issues`.
inline CorpusDocument ReadConllx(std::istream &in, const ReadOptions &options = {},
                                 std::string source_name = {},
                                 std::vector<std::string> *issues = nullptr) {
  CorpusDocument doc;
  doc.source_name = std::move(source_name);
  std::vector<Token> tokens;
  std::vector<int> token_lines;
  int line_no = 0;
  int sentence_index = 0;

  auto flush = [&]() {
    if (tokens.empty()) return;
    ++sentence_index;
    const int n = static_cast<int>(tokens.size());
    for (size_t idx = 0; idx < tokens.size(); ++idx) {
      const Token &token = tokens[idx];
      if (token.gold_head && (*token.gold_head < 0 || *token.gold_head > n)) {
        throw ConllError("head " + std::to_string(*token.gold_head) +
                             " out of range for a sentence of " + std::to_string(n) +
                             " tokens",
                         token_lines[idx]);
      }
    }
    if (const NodeId on_cycle = internal::FindHeadCycle(tokens)) {
      const std::string msg = "sentence " + std::to_string(sentence_index) +
                              " (line " + std::to_string(token_lines.front()) +
                              "): gold heads form a cycle through token " +
                              std::to_string(on_cycle);
      if (options.strict) throw ConllError(msg, token_lines.front());
      if (issues != nullptr) issues->push_back(msg);
    } else {
      doc.sentences.emplace_back(std::move(tokens));
    }
    tokens.clear();
    token_lines.clear();
  };

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (line.find_first_not_of(" \t") == std::string::npos) {
      flush();
      continue;
    }
    if (options.conllu && line.front() == '#') continue;
    const std::vector<std::string_view> fields = internal::SplitTabs(line);
    if (fields.size() != 10) {
      throw ConllError("expected 10 tab-separated columns, found " +
                           std::to_string(fields.size()),
                       line_no);
    }
    if (options.conllu &&
        fields[0].find_first_of("-.") != std::string_view::npos) {
      continue;
    }
    Token token;
    if (!internal::ParseInt(fields[0], token.id)) {
      throw ConllError("non-integer token id '" + std::string(fields[0]) + "'",
                       line_no);
    }
    const int expected = static_cast<int>(tokens.size()) + 1;
    if (token.id != expected) {
      throw ConllError("token id " + std::to_string(token.id) + " where " +
                           std::to_string(expected) + " was expected",
                       line_no);
    }
    token.form = std::string(fields[1]);
    token.lemma = internal::Field(fields[2]);
    token.cpos = internal::Field(fields[3]);
    token.pos = internal::Field(fields[4]);
    token.feats = internal::Field(fields[5]);
    if (fields[6] != "_") {
      int head = 0;
      if (!internal::ParseInt(fields[6], head)) {
        throw ConllError("non-integer head '" + std::string(fields[6]) + "'", line_no);
      }
      if (head == token.id) throw ConllError("token is its own head", line_no);
      token.gold_head = head;
    }
    if (fields[7] != "_") token.gold_label = std::string(fields[7]);
    tokens.push_back(std::move(token));
    token_lines.push_back(line_no);
  }
  flush();
  return doc;
}

// Writes `doc` with HEAD and DEPREL taken from `predicted`, one ArcSet per
// sentence, each a root-attached tree. Every sentence is followed by a blank
// line; PHEAD and PDEPREL are written as "_".
inline void WriteConllx(std::ostream &out, const CorpusDocument &doc,
                        const std::vector<ArcSet> &predicted) {
  if (predicted.size() != doc.sentences.size()) {
    throw Error("got " + std::to_string(predicted.size()) + " parses for " +
                std::to_string(doc.sentences.size()) + " sentences");
  }
  auto field = [](const std::string &value) -> const std::string & {
    static const std::string kAbsent = "_";
    return value.empty() ? kAbsent : value;
  };
  for (size_t s = 0; s < doc.sentences.size(); ++s) {
    const Sentence &sentence = doc.sentences[s];
    const ArcSet &arcs = predicted[s];
    if (!IsRootedTree(arcs, sentence.size())) {
      throw Error("parse of sentence " + std::to_string(s + 1) +
                  " is not a rooted tree");
    }
    for (const auto &[dep, att] : arcs.head_of()) {
      if (att.label.find_first_of(" \t\r\n") != std::string::npos) {
        throw Error("label '" + att.label + "' contains whitespace");
      }
    }
    for (const Token &token : sentence.tokens()) {
      const Attachment &att = *arcs.Find(token.id);
      out << token.id << '\t' << field(token.form) << '\t' << field(token.lemma)
          << '\t' << field(token.cpos) << '\t' << field(token.pos) << '\t'
          << field(token.feats) << '\t' << att.head << '\t' << field(att.label)
          << "\t_\t_\n";
    }
    out << '\n';
  }
}

// Gold arcs of a fully annotated sentence as an ArcSet.
inline ArcSet GoldArcs(const Sentence &sentence) {
  ArcSet arcs;
  for (const Token &token : sentence.tokens()) {
    if (!token.gold_head) {
      throw Error("token " + std::to_string(token.id) + " has no gold head");
    }
    arcs.Add(*token.gold_head, token.id, token.gold_label.value_or(""));
  }
  return arcs;
}

}  // namespace nlcov
