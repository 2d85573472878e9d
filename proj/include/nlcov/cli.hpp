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

// Command-line front end: train, parse, eval, stats and oracle-trace.
//
// Data goes to `out`, diagnostics to `err`. Exit status is 0 on success,
// 1 on internal errors and 2 on usage or data errors. The whole thing runs
// against caller-supplied streams so it can be driven in-process.

#pragma once

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nlcov/conll.hpp"
#include "nlcov/eval.hpp"
#include "nlcov/model.hpp"
#include "nlcov/oracle.hpp"
#include "nlcov/systems.hpp"

namespace nlcov::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

// Usage or data problem reported with exit status 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::string command;
  std::string system = "nl-covington";
  bool system_given = false;
  std::vector<std::string> inputs;
  std::string model_path;
  int epochs = 10;
  uint64_t seed = 1;
  uint64_t hash_seed = 0;
  std::string punct = "include";
  bool ptsd_compat = false;
  std::vector<std::string> punct_tags;
  bool lenient = false;
  bool conllu = false;
  std::string root_label;
};

namespace internal {

// Opens `path` for reading, with "-" meaning `stdin_stream`.
class InputSource {
 public:
  InputSource(const std::string &path, std::istream &stdin_stream) {
    if (path == "-") {
      stream_ = &stdin_stream;
      return;
    }
    if (!std::filesystem::is_regular_file(path)) {
      throw UsageError("cannot read input '" + path + "'");
    }
    file_ = std::make_unique<std::ifstream>(path, std::ios::binary);
    if (!*file_) throw UsageError("cannot open input '" + path + "'");
    stream_ = file_.get();
  }
  std::istream &stream() { return *stream_; }

 private:
  std::unique_ptr<std::ifstream> file_;
  std::istream *stream_ = nullptr;
};

inline CorpusDocument ReadDocument(const RunConfig &cfg, const std::string &path,
                                   std::istream &in, std::ostream &err) {
  InputSource source(path, in);
  ReadOptions options;
  options.strict = !cfg.lenient;
  options.conllu = cfg.conllu;
  std::vector<std::string> issues;
  CorpusDocument doc = ReadConllx(source.stream(), options, path, &issues);
  for (const std::string &issue : issues) err << path << ": skipped " << issue << '\n';
  return doc;
}

inline std::vector<GoldTree> GoldTrees(const CorpusDocument &doc) {
  std::vector<GoldTree> trees;
  for (size_t s = 0; s < doc.sentences.size(); ++s) {
    if (!doc.sentences[s].HasGoldHeads()) {
      throw UsageError("sentence " + std::to_string(s + 1) + " of '" +
                       doc.source_name + "' lacks gold heads");
    }
    trees.push_back(GoldTree::FromSentence(doc.sentences[s]));
  }
  return trees;
}

inline std::string Percent(double fraction) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << 100.0 * fraction;
  return os.str();
}

inline int CmdTrain(const RunConfig &cfg, std::istream &in, std::ostream &err) {
  if (cfg.inputs.size() != 1) throw UsageError("train takes exactly one input file");
  if (cfg.model_path.empty()) throw UsageError("train needs --model");
  if (cfg.epochs < 1) throw UsageError("--epochs must be at least 1");
  const CorpusDocument doc = ReadDocument(cfg, cfg.inputs.front(), in, err);
  const std::vector<GoldTree> trees = GoldTrees(doc);
  std::vector<TrainingExample> corpus;
  for (size_t s = 0; s < trees.size(); ++s) {
    corpus.push_back({doc.sentences[s], trees[s]});
  }
  if (corpus.empty()) throw UsageError("no training sentences in '" + cfg.inputs.front() + "'");

  TrainOptions options;
  options.epochs = cfg.epochs;
  options.seed = cfg.seed;
  options.hash_seed = cfg.hash_seed;
  options.root_label = cfg.root_label;
  const Model model =
      Train(corpus, ParseSystemName(cfg.system), options, [&](const EpochReport &r) {
        err << "epoch " << r.epoch << ": " << r.mistakes << " oracle mismatches in "
            << r.configurations << " configurations\n";
      });

  std::ofstream out(cfg.model_path, std::ios::binary);
  if (!out) throw UsageError("cannot write model '" + cfg.model_path + "'");
  SaveModel(model, out);
  out.close();
  if (!out) throw UsageError("failed writing model '" + cfg.model_path + "'");

  std::vector<ArcSet> parses;
  for (const Sentence &sentence : doc.sentences) {
    parses.push_back(GreedyParse(model, sentence));
  }
  const ScoreReport report = ScoreParses(doc, parses);
  err << "training UAS " << Percent(report.uas) << " LAS " << Percent(report.las)
      << '\n';
  return kExitOk;
}

inline Model LoadModelFile(const std::string &path) {
  if (!std::filesystem::is_regular_file(path)) {
    throw UsageError("cannot read model '" + path + "'");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open model '" + path + "'");
  try {
    return LoadModel(in);
  } catch (const Error &e) {
    throw UsageError(path + ": " + e.what());
  }
}

inline int CmdParse(const RunConfig &cfg, std::istream &in, std::ostream &out,
                    std::ostream &err) {
  if (cfg.inputs.size() != 1) throw UsageError("parse takes exactly one input file");
  if (cfg.model_path.empty()) throw UsageError("parse needs --model");
  Model model = LoadModelFile(cfg.model_path);
  if (cfg.system_given && ParseSystemName(cfg.system) != model.system()) {
    throw UsageError("model '" + cfg.model_path + "' was trained for " +
                     SystemName(model.system()) + " but --system is " + cfg.system);
  }
  if (!cfg.root_label.empty()) model.set_root_label(cfg.root_label);
  const CorpusDocument doc = ReadDocument(cfg, cfg.inputs.front(), in, err);
  const TransitionSystem sys = model.MakeSystem();
  std::vector<ArcSet> parses;
  parses.reserve(doc.sentences.size());
  for (const Sentence &sentence : doc.sentences) {
    parses.push_back(GreedyParse(model, sys, sentence));
  }
  WriteConllx(out, doc, parses);
  return kExitOk;
}

inline int CmdEval(const RunConfig &cfg, std::istream &in, std::ostream &out,
                   std::ostream &err) {
  if (cfg.inputs.size() != 2) throw UsageError("eval takes a gold file and a parsed file");
  const CorpusDocument gold = ReadDocument(cfg, cfg.inputs[0], in, err);
  const CorpusDocument parsed = ReadDocument(cfg, cfg.inputs[1], in, err);
  if (gold.sentences.size() != parsed.sentences.size()) {
    throw UsageError("gold has " + std::to_string(gold.sentences.size()) +
                     " sentences but the parsed file has " +
                     std::to_string(parsed.sentences.size()));
  }
  std::vector<ArcSet> predicted;
  for (size_t s = 0; s < parsed.sentences.size(); ++s) {
    const Sentence &sentence = parsed.sentences[s];
    if (sentence.size() != gold.sentences[s].size()) {
      throw UsageError("sentence " + std::to_string(s + 1) + " has " +
                       std::to_string(sentence.size()) + " parsed tokens but " +
                       std::to_string(gold.sentences[s].size()) + " gold tokens");
    }
    predicted.push_back(GoldArcs(sentence));
  }
  ScoreOptions options;
  options.punct = cfg.punct == "exclude" || cfg.ptsd_compat ? PunctPolicy::kExclude
                                                            : PunctPolicy::kInclude;
  options.punct_tags.insert(cfg.punct_tags.begin(), cfg.punct_tags.end());
  const ScoreReport report = ScoreParses(gold, predicted, options);
  out << "UAS\t" << Percent(report.uas) << '\n';
  out << "LAS\t" << Percent(report.las) << '\n';
  err << report.tokens_scored << " tokens scored, " << report.tokens_excluded
      << " excluded\n";
  return kExitOk;
}

inline int CmdStats(const RunConfig &cfg, std::istream &in, std::ostream &out,
                    std::ostream &err) {
  if (cfg.inputs.empty()) throw UsageError("stats needs at least one input file");
  out << "dataset\tsentences\tavg_cov\tavg_nl\treduction_pct\n";
  for (const std::string &path : cfg.inputs) {
    const CorpusDocument doc = ReadDocument(cfg, path, in, err);
    const TransitionStats stats = ComputeTransitionStats(GoldTrees(doc));
    out << std::fixed << std::setprecision(2) << path << '\t'
        << stats.per_sentence.size() << '\t' << stats.avg_cov << '\t'
        << stats.avg_nl << '\t' << stats.ReductionPercent() << '\n';
  }
  return kExitOk;
}

inline int CmdOracleTrace(const RunConfig &cfg, std::istream &in, std::ostream &out,
                          std::ostream &err) {
  if (cfg.inputs.size() != 1) throw UsageError("oracle-trace takes exactly one input file");
  const SystemKind kind = ParseSystemName(cfg.system);
  const CorpusDocument doc = ReadDocument(cfg, cfg.inputs.front(), in, err);
  const std::vector<GoldTree> trees = GoldTrees(doc);
  out << kTraceHeader << '\n';
  for (size_t s = 0; s < trees.size(); ++s) {
    if (s > 0) out << '\n';
    const TransitionSystem sys = SystemForTree(kind, trees[s]);
    WriteTrace(out, kind, OracleTrace(sys, trees[s]));
  }
  return kExitOk;
}

}  // namespace internal

inline int Run(const std::vector<std::string> &args, std::istream &in,
               std::ostream &out, std::ostream &err) {
  CLI::App app{"Covington and NL-Covington dependency parsing toolkit", "nlcov"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App *sub) {
    sub->add_option("--system", cfg.system, "Transition system")
        ->check(CLI::IsMember({"covington", "nl-covington"}));
    sub->add_flag("--lenient", cfg.lenient,
                  "Skip sentences whose gold heads form a cycle instead of failing");
    sub->add_flag("--conllu", cfg.conllu,
                  "Accept CoNLL-U comments and multiword-token rows");
  };

  CLI::App *train = app.add_subcommand("train", "Train a model with the static oracle");
  add_common(train);
  train->add_option("input", cfg.inputs, "Training CoNLL-X file ('-' for stdin)")
      ->required();
  train->add_option("--model", cfg.model_path, "Output model file")->required();
  train->add_option("--epochs", cfg.epochs, "Training epochs");
  train->add_option("--seed", cfg.seed, "Shuffling seed");
  train->add_option("--hash-seed", cfg.hash_seed, "Feature hashing seed");
  train->add_option("--root-label", cfg.root_label,
                    "Label of root arcs in parser output (default: most frequent "
                    "in training data)");

  CLI::App *parse = app.add_subcommand("parse", "Parse a CoNLL-X file to stdout");
  add_common(parse);
  parse->add_option("input", cfg.inputs, "Input CoNLL-X file ('-' for stdin)")
      ->required();
  parse->add_option("--model", cfg.model_path, "Model file")->required();
  parse->add_option("--root-label", cfg.root_label, "Label of root arcs");

  CLI::App *eval = app.add_subcommand("eval", "Score a parsed file against gold");
  add_common(eval);
  eval->add_option("files", cfg.inputs, "Gold file, then parsed file ('-' for stdin)")
      ->required()
      ->expected(2);
  eval->add_option("--punct", cfg.punct, "Punctuation policy")
      ->check(CLI::IsMember({"include", "exclude"}));
  eval->add_flag("--ptsd-compat", cfg.ptsd_compat,
                 "Exclude punctuation; same as --punct exclude");
  eval->add_option("--punct-tags", cfg.punct_tags,
                   "POS tags treated as punctuation instead of the form rule")
      ->delimiter(',');

  CLI::App *stats = app.add_subcommand("stats", "Oracle transition counts per dataset");
  add_common(stats);
  stats->add_option("inputs", cfg.inputs, "CoNLL-X files")->required();

  CLI::App *trace = app.add_subcommand("oracle-trace", "Print static-oracle traces");
  add_common(trace);
  trace->add_option("input", cfg.inputs, "CoNLL-X file ('-' for stdin)")->required();

  std::vector<std::string> argv_storage = args;
  argv_storage.insert(argv_storage.begin(), "nlcov");
  std::vector<const char *> argv;
  for (const std::string &arg : argv_storage) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "nlcov: " << e.what() << '\n';
    return kExitUsage;
  }

  for (CLI::App *sub : app.get_subcommands()) {
    cfg.command = sub->get_name();
    cfg.system_given = sub->count("--system") > 0;
  }

  try {
    if (cfg.command == "train") return internal::CmdTrain(cfg, in, err);
    if (cfg.command == "parse") return internal::CmdParse(cfg, in, out, err);
    if (cfg.command == "eval") return internal::CmdEval(cfg, in, out, err);
    if (cfg.command == "stats") return internal::CmdStats(cfg, in, out, err);
    if (cfg.command == "oracle-trace") return internal::CmdOracleTrace(cfg, in, out, err);
  } catch (const ConllError &e) {
    err << "nlcov: line " << e.line() << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error &e) {
    err << "nlcov: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception &e) {
    err << "nlcov: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  err << "nlcov: unknown command\n";
  return kExitUsage;
}

}  // namespace nlcov::cli
