#pragma once

// The shared evaluation corpus: every family the conjecture was checked on at
// desk scale, 200+ graphs total. Entries are named by their generate() spec
// so failures point back to a reproducible instance.

#include <string>
#include <vector>

#include "fracpow/generators.hpp"
#include "fracpow/graph.hpp"

namespace testutil {

struct CorpusEntry {
  std::string name;
  fracpow::Graph graph;
};

inline std::vector<CorpusEntry> acceptance_corpus() {
  std::vector<CorpusEntry> out;
  auto add = [&out](const std::string& spec) {
    out.push_back({spec, fracpow::generate(spec)});
  };

  for (int k = 2; k <= 8; ++k) add("complete " + std::to_string(k));
  for (int n = 3; n <= 30; ++n) add("cycle " + std::to_string(n));
  for (int n = 2; n <= 30; ++n) add("path " + std::to_string(n));
  for (int d = 2; d <= 5; ++d) add("hypercube " + std::to_string(d));
  for (int q : {5, 13, 17, 29}) add("paley " + std::to_string(q));

  for (int n = 10; n <= 100; n += 10) {
    for (int d : {3, 4, 6, 10}) {
      if (d >= n || (n * d) % 2 != 0) continue;
      for (int seed : {1, 2}) {
        add("random_regular " + std::to_string(n) + ' ' + std::to_string(d) + ' ' +
            std::to_string(seed));
      }
    }
  }
  for (int n : {30, 70}) {
    for (int d : {5, 7, 9}) {
      add("random_regular " + std::to_string(n) + ' ' + std::to_string(d) + " 1");
    }
  }

  for (int n = 10; n <= 100; n += 10) {
    for (const char* p : {"0.05", "0.15"}) {
      for (int seed : {1, 2}) {
        add("erdos_renyi " + std::to_string(n) + ' ' + p + ' ' + std::to_string(seed));
      }
    }
  }
  for (int n : {20, 40, 60, 80}) {
    add("erdos_renyi " + std::to_string(n) + " 0.3 1");
  }

  return out;
}

/// Small sample of the corpus for unit-level property tests.
inline std::vector<CorpusEntry> small_corpus() {
  std::vector<CorpusEntry> out;
  for (const char* spec :
       {"complete 2", "complete 4", "cycle 5", "cycle 9", "path 2", "path 7", "hypercube 3",
        "paley 5", "paley 13", "random_regular 10 3 1", "erdos_renyi 12 0.3 7"}) {
    out.push_back({spec, fracpow::generate(spec)});
  }
  return out;
}

}  // namespace testutil
