#include "qcalc/report.hpp"

#include <atomic>
#include <thread>

namespace qcalc {

Suite parse_suite(std::string_view name) {
  if (name == "exact") return Suite::exact;
  if (name == "numeric") return Suite::numeric;
  if (name == "all") return Suite::all;
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::exact: return "exact";
    case Suite::numeric: return "numeric";
    case Suite::all: return "all";
  }
  return "unknown";
}

void RunConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (order < 4) throw std::invalid_argument("order must be at least 4");
  if (jobs < 0) throw std::invalid_argument("jobs must be non-negative");
  NumericConfig n = numeric_config();
  if (!(n.tail_tol > BigFloat(0)) || !(n.compare_tol > BigFloat(0)))
    throw std::invalid_argument("tolerances must be positive");
  if (!(n.tail_tol < n.compare_tol)) throw std::invalid_argument("tail_tol must be far below compare_tol");
}

NumericConfig RunConfig::numeric_config() const {
  PrecisionScope ps(precision_bits);
  NumericConfig n;
  n.precision_bits = precision_bits;
  n.tail_tol = BigFloat(tail_tol);
  n.compare_tol = BigFloat(compare_tol);
  return n;
}

int SuiteResult::exit_code() const {
  bool nonconvergent = false;
  for (const auto& r : exact)
    if (r.status != Status::pass) return 1;
  for (const auto& e : numeric) {
    if (e.status == NumStatus::fail) return 1;
    if (e.status == NumStatus::nonconvergent) nonconvergent = true;
  }
  return nonconvergent ? 3 : 0;
}

namespace {

bool selected(const RunConfig& cfg, std::string_view id) {
  if (cfg.ids.empty()) return true;
  for (const auto& f : cfg.ids)
    if (id_matches(id, f)) return true;
  return false;
}

// Runs jobs[i] on a small pool; results land at their index so assembly
// does not depend on completion order.
template <typename Result, typename Job>
std::vector<Result> run_pool(const std::vector<Job>& jobs, int workers) {
  std::vector<Result> out(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
      try {
        out[i] = jobs[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::size_t n = std::min<std::size_t>(std::max(workers, 1), jobs.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<Report> run_exact(const std::vector<IdentityCheck>& cat, const RunConfig& cfg, int trials) {
  std::vector<std::function<Report()>> jobs;
  for (const auto& check : cat) {
    if (!selected(cfg, check.id)) continue;
    for (int trial = 0; trial < trials; ++trial) {
      jobs.push_back([&check, &cfg, trial] {
        return verify(check, sample_params(check, cfg.seed, trial, cfg.order), cfg.order, trial);
      });
    }
  }
  int workers = cfg.jobs > 0 ? cfg.jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  return run_pool<Report>(jobs, workers);
}

}  // namespace

SuiteResult run_suite(const RunConfig& cfg) {
  cfg.validate();
  SuiteResult result;
  if (cfg.suite != Suite::numeric) {
    std::vector<IdentityCheck> checks = identity_catalog();
    const auto& red = reduction_catalog();
    checks.insert(checks.end(), red.begin(), red.end());
    result.exact = run_exact(checks, cfg, cfg.trials);
    if (cfg.errata) result.exact_errata = run_exact(erratum_catalog(), cfg, 1);
  }
  if (cfg.suite != Suite::exact) {
    const NumericConfig base = cfg.numeric_config();
    const NumericConfig fine = base.refined();
    for (const auto& check : numeric_catalog()) {
      if (!selected(cfg, check.id)) continue;
      NumericEntry e{run_numeric(check, base), run_numeric(check, fine), NumStatus::pass};
      if (e.base.status == NumStatus::nonconvergent || e.refined.status == NumStatus::nonconvergent) {
        e.status = NumStatus::nonconvergent;
      } else if (e.base.status != NumStatus::pass || e.refined.status != NumStatus::pass ||
                 !(e.refined.rel_diff * BigFloat(10) <= e.base.rel_diff)) {
        e.status = NumStatus::fail;
      }
      result.numeric.push_back(std::move(e));
    }
    if (cfg.errata)
      for (const auto& check : numeric_erratum_catalog())
        if (selected(cfg, check.id)) result.numeric_errata.push_back(run_numeric(check, base));
  }
  return result;
}

Json to_json(const ParamSet& p) {
  Json j = Json::object();
  for (const auto& [name, value] : p.entries()) j[name] = to_string(value);
  return j;
}

Json to_json(const Report& r, bool omit_timing) {
  Json j = Json::object();
  j["id"] = r.id;
  j["trial"] = r.trial;
  j["params"] = to_json(r.params);
  j["status"] = std::string(to_string(r.status));
  if (r.first_mismatch) {
    const auto& m = *r.first_mismatch;
    j["first_mismatch"] = Json{{"comparison", m.label}, {"power", m.power}, {"lhs", m.lhs.to_string()},
                               {"rhs", m.rhs.to_string()}};
  }
  if (r.pole_index) j["pole_index"] = *r.pole_index;
  if (!r.message.empty()) j["message"] = r.message;
  if (!omit_timing) j["runtime_ms"] = r.runtime_ms;
  return j;
}

Json to_json(const NumericReport& r, bool omit_timing) {
  constexpr int digits = 20;
  Json j = Json::object();
  j["id"] = r.id;
  j["trial"] = 0;
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["status"] = std::string(to_string(r.status));
  j["rel_diff"] = r.rel_diff.to_string(digits);
  j["error_budget"] = r.error_budget.to_string(digits);
  j["lhs"] = r.lhs.to_string();
  j["rhs"] = r.rhs.to_string();
  j["precision_bits"] = r.precision_bits;
  if (!r.message.empty()) j["message"] = r.message;
  if (!omit_timing) j["runtime_ms"] = r.runtime_ms;
  return j;
}

Json to_json(const NumericEntry& e, bool omit_timing) {
  Json j = to_json(e.base, omit_timing);
  j["status"] = std::string(to_string(e.status));
  j["refined"] = Json{{"precision_bits", e.refined.precision_bits},
                      {"status", std::string(to_string(e.refined.status))},
                      {"rel_diff", e.refined.rel_diff.to_string(20)}};
  if (!omit_timing) j["refined"]["runtime_ms"] = e.refined.runtime_ms;
  return j;
}

Json to_json(const SuiteResult& result, const RunConfig& cfg) {
  Json j = Json::object();
  j["suite"] = std::string(to_string(cfg.suite));
  j["seed"] = cfg.seed;
  j["order"] = cfg.order;
  j["trials"] = cfg.trials;
  j["precision_bits"] = cfg.precision_bits;
  Json entries = Json::array();
  for (const auto& r : result.exact) entries.push_back(to_json(r, cfg.omit_timing));
  for (const auto& e : result.numeric) entries.push_back(to_json(e, cfg.omit_timing));
  j["entries"] = entries;
  // Typeset forms that are known to fail; they never affect the exit status.
  Json errata = Json::array();
  for (const auto& r : result.exact_errata) {
    Json e = to_json(r, cfg.omit_timing);
    e["notes"] = find_check(r.id).notes;
    errata.push_back(std::move(e));
  }
  for (const auto& r : result.numeric_errata) errata.push_back(to_json(r, cfg.omit_timing));
  j["errata"] = errata;
  j["exit_code"] = result.exit_code();
  return j;
}

}  // namespace qcalc
