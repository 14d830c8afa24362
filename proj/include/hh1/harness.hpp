#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hh1/derivations.hpp"
#include "hh1/generators.hpp"

namespace hh1 {

using Json = nlohmann::ordered_json;

std::string fnv1a64_hex(const std::string& text);

// Everything the checks consume, computed once per algebra.
struct AlgebraAnalysis {
  std::string source_text;
  std::string hash;
  std::uint64_t seed = 0;
  std::shared_ptr<const FdAlgebra> algebra;
  std::vector<std::vector<int>> ext1;
  QuiverClass qclass{};
  HH1Algebra h;
  SeriesReport series;
  SymmetricForm symmetric;
  std::optional<Sl2Result> sl2;    // attempted when dim HH^1 = 3
  std::optional<WittResult> witt;  // attempted when dim HH^1 = char = p >= 3

  const FdAlgebra& A() const { return *algebra; }
  // brute-force oracle, computed once on first use
  const GenericHH1& generic() const;

 private:
  mutable std::shared_ptr<GenericHH1> generic_cache_;
};

AlgebraAnalysis analyze_presentation(const std::string& text, std::uint64_t seed);
AlgebraAnalysis analyze_presentation(const BoundQuiverPresentation& pres, std::uint64_t seed);

enum class Verdict { Pass, Warn, Fail };

struct CheckRecord {
  std::string id;
  bool applicable = false;
  std::string reason;  // applicability explanation
  Verdict verdict = Verdict::Pass;
  Json measured = Json::object();
  Json expected = Json::object();
  std::string note;
};

struct HarnessOptions {
  std::uint64_t seed = 0;
  std::string inject_fault;  // check id whose expected bound gets tampered (testing)
  bool skip_expensive = false;  // skip oracle work on algebras over the dimension cap
};

// criterion 9 gate: brute-force oracles run on algebras of dimension <= 30
constexpr int kOracleDimensionCap = 30;

CheckRecord check_simple_digraph_theorem(const AlgebraAnalysis& an, const HarnessOptions& opt);
CheckRecord check_two_parallel_theorem(const AlgebraAnalysis& an, const HarnessOptions& opt);
CheckRecord check_loop_theorem(const AlgebraAnalysis& an, const HarnessOptions& opt);
CheckRecord check_filtration_props(const AlgebraAnalysis& an, const HarnessOptions& opt);
CheckRecord check_dimension_formula(const AlgebraAnalysis& an, const HarnessOptions& opt);
// suite-level invariants, also exercised by the acceptance criteria
CheckRecord check_oracle_equivalence(const AlgebraAnalysis& an, const HarnessOptions& opt);
CheckRecord check_schur_props(const AlgebraAnalysis& an, const HarnessOptions& opt);
CheckRecord check_lie_validation(const AlgebraAnalysis& an, const HarnessOptions& opt);

struct TheoremReport {
  Json algebra_meta;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;
  Verdict worst() const;
};

TheoremReport run_all(const AlgebraAnalysis& an, const HarnessOptions& opt);

Json check_json(const CheckRecord& c);
Json report_json(const TheoremReport& r);

const char* verdict_str(Verdict v);

}  // namespace hh1
