#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "qcalc/identities.hpp"
#include "qcalc/polys.hpp"
#include "qcalc/qkernel.hpp"
#include "qcalc/qops.hpp"
#include "qcalc/report.hpp"

namespace qcalc {

namespace {

constexpr int kUsageError = 2;

struct VerifyFlags {
  std::string config;
  std::string suite;
  int order = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  long precision = 0;
  std::string tail_tol, compare_tol, output;
  std::vector<std::string> ids;
  bool omit_timing = false;
  bool no_errata = false;
  int jobs = 0;
};

void load_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("config file '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config file must hold a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "suite") cfg.suite = parse_suite(value.get<std::string>());
      else if (key == "order") cfg.order = value.get<int>();
      else if (key == "trials") cfg.trials = value.get<int>();
      else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
      else if (key == "precision") cfg.precision_bits = value.get<long>();
      else if (key == "tail_tol") cfg.tail_tol = value.get<std::string>();
      else if (key == "compare_tol") cfg.compare_tol = value.get<std::string>();
      else if (key == "output") cfg.output = value.get<std::string>();
      else if (key == "ids") cfg.ids = value.get<std::vector<std::string>>();
      else if (key == "omit_timing") cfg.omit_timing = value.get<bool>();
      else if (key == "errata") cfg.errata = value.get<bool>();
      else if (key == "jobs") cfg.jobs = value.get<int>();
      else throw std::invalid_argument("unknown config key '" + key + "'");
    }
  } catch (const nlohmann::json::type_error& e) {
    throw std::invalid_argument("config file '" + path + "': " + e.what());
  }
}

int cmd_verify(const CLI::App& sub, const VerifyFlags& f, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (!f.config.empty()) load_config_file(f.config, cfg);
  auto given = [&](const char* name) { return sub.count(name) > 0; };
  if (given("--suite")) cfg.suite = parse_suite(f.suite);
  if (given("--order")) cfg.order = f.order;
  if (given("--trials")) cfg.trials = f.trials;
  if (given("--seed")) cfg.seed = f.seed;
  if (given("--precision")) cfg.precision_bits = f.precision;
  if (given("--tail-tol")) cfg.tail_tol = f.tail_tol;
  if (given("--compare-tol")) cfg.compare_tol = f.compare_tol;
  if (given("--output")) cfg.output = f.output;
  if (given("--ids")) cfg.ids = f.ids;
  if (given("--omit-timing")) cfg.omit_timing = true;
  if (given("--no-errata")) cfg.errata = false;
  if (given("--jobs")) cfg.jobs = f.jobs;
  cfg.validate();
  if (!cfg.ids.empty()) {
    // Every filter must select something, or the report would silently be empty.
    for (const auto& id : cfg.ids) {
      bool hit = false;
      for (const auto* cat : {&identity_catalog(), &reduction_catalog(), &erratum_catalog()})
        for (const auto& c : *cat) hit = hit || id_matches(c.id, id);
      for (const auto& c : numeric_catalog()) hit = hit || id_matches(c.id, id);
      for (const auto& c : numeric_erratum_catalog()) hit = hit || id_matches(c.id, id);
      if (!hit) throw std::invalid_argument("identity filter '" + id + "' matches nothing");
    }
  }

  SuiteResult result = run_suite(cfg);
  const std::string text = to_json(result, cfg).dump(2) + "\n";
  std::ostream& summary = cfg.output.empty() ? err : out;
  if (cfg.output.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot write report to '" + cfg.output + "'");
    file << text;
  }
  int failed = 0;
  for (const auto& r : result.exact) {
    if (r.status == Status::pass) continue;
    ++failed;
    summary << "FAIL " << r.id << " trial " << r.trial << " (" << to_string(r.status) << ")\n";
  }
  for (const auto& e : result.numeric) {
    if (e.status == NumStatus::pass) continue;
    ++failed;
    summary << "FAIL " << e.base.id << " (" << to_string(e.status) << ", rel_diff " << e.base.rel_diff.to_string(6)
            << ")\n";
  }
  summary << result.exact.size() + result.numeric.size() << " entries, " << failed << " not passing\n";
  return result.exit_code();
}

struct EvalFlags {
  std::string family;
  int n = 0;
  int k = 0;
  std::string q = "1/2";
  std::string a = "0", b = "0", c = "0", d = "0", e = "0";
  std::string x, y;
};

Rational value_at(const Poly& p, const Rational& x, const Rational& y) {
  Rational v;
  for (const auto& [ex, coeff] : p.terms()) v += coeff * pow(x, ex.x) * pow(y, ex.y);
  return v;
}

int cmd_eval(const EvalFlags& f, std::ostream& out) {
  ParamSet p;
  p.q = parse_rational(f.q);
  p.a = parse_rational(f.a);
  p.b = parse_rational(f.b);
  p.c = parse_rational(f.c);
  p.d = parse_rational(f.d);
  p.e = parse_rational(f.e);
  if (f.n < 0) throw std::invalid_argument("--n must be non-negative");
  const std::string& fam = f.family;
  std::optional<Poly> poly;
  std::optional<Rational> scalar;
  if (fam == "asc-new-phi") poly = asc_new(AscKind::phi, f.n, p);
  else if (fam == "asc-new-psi") poly = asc_new(AscKind::psi, f.n, p);
  else if (fam == "asc-gen3-phi") poly = asc_gen3(AscKind::phi, f.n, p.a, p.b, p.c, p.q);
  else if (fam == "asc-gen3-psi") poly = asc_gen3(AscKind::psi, f.n, p.a, p.b, p.c, p.q);
  else if (fam == "asc-classical-phi") poly = asc_classical(AscKind::phi, f.n, p.a, p.q);
  else if (fam == "asc-classical-psi") poly = asc_classical(AscKind::psi, f.n, p.a, p.q);
  else if (fam == "cauchy") poly = cauchy_pn(f.n, p.q);
  else if (fam == "rogers-szego") poly = rogers_szego_h(f.n, p.q);
  else if (fam == "operator-T") poly = apply_operator(OperatorSpec{OperatorKind::T, p}, Poly::monomial(Rational(1), f.n, 0));
  else if (fam == "operator-E") poly = apply_operator(OperatorSpec{OperatorKind::E, p}, Poly::monomial(Rational(1), f.n, 0));
  else if (fam == "qbinom") scalar = qbinom(f.n, f.k, p.q);
  else if (fam == "qpoch") scalar = qpoch(p.a, p.q, f.n);
  else throw std::invalid_argument("unknown family '" + fam + "'");

  if (poly && (!f.x.empty() || !f.y.empty())) {
    if (f.x.empty() || f.y.empty()) throw std::invalid_argument("--x and --y must be given together");
    scalar = value_at(*poly, parse_rational(f.x), parse_rational(f.y));
    poly.reset();
  }
  out << (poly ? poly->to_string() : to_string(*scalar)) << "\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"q-calculus kernel and identity verifier"};
  app.require_subcommand(1);

  VerifyFlags vf;
  CLI::App* verify = app.add_subcommand("verify", "run verification suites and write a JSON report");
  verify->add_option("--config", vf.config, "JSON config file; flags given on the command line win");
  verify->add_option("--suite", vf.suite, "exact | numeric | all");
  verify->add_option("--order", vf.order, "truncation order N of the t-series");
  verify->add_option("--trials", vf.trials, "random parameter sets per identity");
  verify->add_option("--seed", vf.seed, "64-bit seed determining every sampled parameter set");
  verify->add_option("--precision", vf.precision, "numeric working precision in bits");
  verify->add_option("--tail-tol", vf.tail_tol, "numeric truncation tolerance");
  verify->add_option("--compare-tol", vf.compare_tol, "numeric relative agreement tolerance");
  verify->add_option("--output", vf.output, "report path (stdout if omitted)");
  verify->add_option("--ids", vf.ids, "identity ids; ID-7 also selects ID-7.k0 ...")->delimiter(',');
  verify->add_flag("--omit-timing", vf.omit_timing, "leave runtime_ms out of the report");
  verify->add_flag("--no-errata", vf.no_errata, "skip the typeset-form probes");
  verify->add_option("--jobs", vf.jobs, "worker threads for exact trials");

  EvalFlags ef;
  CLI::App* eval = app.add_subcommand("eval", "print a polynomial or value");
  eval->add_option("family", ef.family,
                   "asc-new-phi | asc-new-psi | asc-gen3-phi | asc-gen3-psi | asc-classical-phi | "
                   "asc-classical-psi | cauchy | rogers-szego | operator-T | operator-E | qbinom | qpoch")
      ->required();
  eval->add_option("--n", ef.n, "degree")->required();
  eval->add_option("--k", ef.k, "lower index for qbinom");
  eval->add_option("--q", ef.q, "base");
  eval->add_option("--a", ef.a);
  eval->add_option("--b", ef.b);
  eval->add_option("--c", ef.c);
  eval->add_option("--d", ef.d);
  eval->add_option("--e", ef.e);
  eval->add_option("--x", ef.x, "evaluate at this x (with --y)");
  eval->add_option("--y", ef.y, "evaluate at this y (with --x)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*verify) return cmd_verify(*verify, vf, out, err);
    return cmd_eval(ef, out);
  } catch (const PoleError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qcalc
