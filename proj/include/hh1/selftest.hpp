#pragma once

#include <string>
#include <vector>

#include "hh1/harness.hpp"

namespace hh1 {

struct CorpusEntry {
  std::string label;
  std::string text;
};

// the generated example families over the fields the suite exercises
std::vector<CorpusEntry> builtin_corpus();

struct CriterionRecord {
  int number;
  std::string title;
  bool pass;
  std::string detail;
};

struct SelftestResult {
  std::uint64_t seed = 0;
  std::vector<std::string> labels;
  std::vector<TheoremReport> reports;
  std::vector<CriterionRecord> criteria;
  bool all_pass = false;

  Json to_json() const;
  std::string table() const;
};

// criteria 1..11 on the in-process corpus (12 is a CLI-level determinism
// check, exercised by the acceptance runner)
SelftestResult run_selftest(std::uint64_t seed);

}  // namespace hh1
