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

// Writes the bundled synthetic treebanks:
//   gen_synthetic zipf OUT [COUNT] [SEED]
//   gen_synthetic toy OUT [COUNT] [SEED]

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "nlcov/conll.hpp"
#include "nlcov/synthetic.hpp"

int main(int argc, char **argv) {
  if (argc < 3) {
    std::cerr << "usage: gen_synthetic {zipf|toy} OUT [COUNT] [SEED]\n";
    return 2;
  }
  const std::string kind = argv[1];
  const int count = argc > 3 ? std::stoi(argv[3]) : 200;
  const uint64_t seed = argc > 4 ? std::stoull(argv[4]) : 1;
  nlcov::CorpusDocument doc;
  if (kind == "zipf") {
    doc.sentences = nlcov::synthetic::ZipfCorpus(count, seed);
  } else if (kind == "toy") {
    doc.sentences = nlcov::synthetic::ToyCorpus(count, seed);
  } else {
    std::cerr << "unknown corpus kind '" << kind << "'\n";
    return 2;
  }
  std::vector<nlcov::ArcSet> gold;
  for (const nlcov::Sentence &sentence : doc.sentences) {
    gold.push_back(nlcov::GoldArcs(sentence));
  }
  std::ofstream out(argv[2], std::ios::binary);
  if (!out) {
    std::cerr << "cannot write '" << argv[2] << "'\n";
    return 2;
  }
  nlcov::WriteConllx(out, doc, gold);
  return 0;
}
