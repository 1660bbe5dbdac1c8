#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcalc/identities.hpp"
#include "qcalc/numeric.hpp"

namespace qcalc {

enum class Suite { exact, numeric, all };
Suite parse_suite(std::string_view name);
std::string_view to_string(Suite s);

struct RunConfig {
  Suite suite = Suite::exact;
  int order = 12;
  int trials = 5;
  std::uint64_t seed = 42;
  long precision_bits = 256;
  std::string tail_tol = "1e-40";
  std::string compare_tol = "1e-12";
  std::string output;
  /// Empty selects everything; otherwise entries matching id_matches().
  std::vector<std::string> ids;
  /// Drop runtime_ms so repeated runs produce byte-identical reports.
  bool omit_timing = false;
  bool errata = true;
  /// Worker threads for exact trials; 0 uses the hardware concurrency.
  int jobs = 0;

  /// Throws std::invalid_argument on trials < 1, order < 4, bad tolerances.
  void validate() const;
  NumericConfig numeric_config() const;
};

/// Numeric check at the configured precision and again refined (precision
/// doubled, tail_tol * 1e-10). Passes only if both pass and the relative
/// difference shrinks at least tenfold.
struct NumericEntry {
  NumericReport base;
  NumericReport refined;
  NumStatus status = NumStatus::pass;
};

struct SuiteResult {
  std::vector<Report> exact;
  std::vector<NumericEntry> numeric;
  std::vector<Report> exact_errata;
  std::vector<NumericReport> numeric_errata;
  /// 0 pass, 1 some entry failed, 3 numeric non-convergence only.
  int exit_code() const;
};

SuiteResult run_suite(const RunConfig& cfg);

using Json = nlohmann::ordered_json;

Json to_json(const ParamSet& p);
Json to_json(const Report& r, bool omit_timing);
Json to_json(const NumericReport& r, bool omit_timing);
Json to_json(const NumericEntry& e, bool omit_timing);
Json to_json(const SuiteResult& result, const RunConfig& cfg);

}  // namespace qcalc
