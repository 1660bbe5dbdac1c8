#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qcalc/params.hpp"
#include "qcalc/polys.hpp"
#include "qcalc/series.hpp"

namespace qcalc {

using SeriesBuilder = std::function<TSeries(const ParamSet&, int order)>;

/// One side-by-side comparison inside an identity check.
struct Comparison {
  std::string label;
  SeriesBuilder lhs;
  SeriesBuilder rhs;
};

/// An identity verified coefficientwise as truncated series in t.
struct IdentityCheck {
  std::string id;
  std::string description;
  /// Extra parameter names drawn by the sampler in addition to q, a..e.
  std::vector<std::string> extras;
  std::vector<Comparison> comparisons;
  /// Optional specialization applied to sampled parameters (e.g. c = e = 0).
  std::function<void(ParamSet&)> specialize;
  /// Returns a message if the parameters violate the identity's constraints.
  std::function<std::optional<std::string>(const ParamSet&, int order)> constraint;
  std::string notes;
};

enum class Status { pass, fail, pole };
std::string_view to_string(Status s);

struct Mismatch {
  std::string label;
  int power = 0;
  Poly lhs;
  Poly rhs;
};

struct Report {
  std::string id;
  int trial = 0;
  ParamSet params;
  int order = 0;
  Status status = Status::pass;
  std::optional<Mismatch> first_mismatch;
  std::optional<int> pole_index;
  std::string message;
  double runtime_ms = 0.0;
};

/// Exact coefficientwise comparison of every comparison in `check`.
/// Throws std::invalid_argument if the parameters violate the constraints.
Report verify(const IdentityCheck& check, ParamSet params, int order, int trial = 0);

/// The identity catalog ID-1 ... ID-13 (ID-7 and ID-13 have sub-entries).
const std::vector<IdentityCheck>& identity_catalog();

/// Collapse checks between catalog entries under parameter specialization.
const std::vector<IdentityCheck>& reduction_catalog();

/// Forms of catalog identities exactly as typeset in the source, kept as
/// probes. They are expected to fail; see notes on each entry.
const std::vector<IdentityCheck>& erratum_catalog();

/// Looks up an id across all three catalogs.
const IdentityCheck& find_check(std::string_view id);

/// True if `id` is selected by `filter`: equal, or filter followed by '.'.
bool id_matches(std::string_view id, std::string_view filter);

/// Draws parameters for `check`, applies the specialization, and re-draws
/// (bounded) until the constraint holds.
ParamSet sample_params(const IdentityCheck& check, std::uint64_t run_seed, int trial, int order);

// Generating-series builders shared by the catalog, reductions and tests.
namespace gf {

/// sum_n P_n(x,y) * weight(n) * t^n / (q;q)_n.
TSeries weighted(int order, const Rational& q, const std::function<Poly(int)>& poly,
                 const std::function<Rational(int)>& weight);

/// 1/(xt;q)_inf * 3P2(a,b,c; d,e; q; yt): closed form of sum phi_n t^n/(q;q)_n.
TSeries asc_phi_closed_form(const ParamSet& p, int order);
/// sum_n phi_n(x,y) t^n / (q;q)_n.
TSeries asc_phi_series(const ParamSet& p, int order);

/// (xt;q)_inf * 3P3(a,b,c; 0,d,e; q; -yt): closed form of
/// sum psi_n (-1)^n q^binom(n,2) t^n / (q;q)_n.
TSeries asc_psi_closed_form(const ParamSet& p, int order);
TSeries asc_psi_series(const ParamSet& p, int order);

}  // namespace gf

enum class QdiffEquation { phi_eq, psi_eq };

/// LHS - RHS of the seven-variable q-difference equation whose solutions
/// are exactly the phi-expandable (phi_eq) or psi-expandable (psi_eq)
/// functions, applied to one polynomial in x, y.
Poly qdiff_residual(QdiffEquation which, const Poly& f, const ParamSet& p);
/// Coefficientwise residual of a series in t.
TSeries qdiff_residual(QdiffEquation which, const TSeries& f, const ParamSet& p);

/// Thrown by expand_in_basis when some coefficient leaves a nonzero
/// remainder after the triangular solve.
class NotInSpanError : public std::runtime_error {
 public:
  NotInSpanError(int power, Poly remainder);
  int power() const noexcept { return power_; }
  const Poly& remainder() const noexcept { return remainder_; }

 private:
  int power_;
  Poly remainder_;
};

/// Coefficients mu_m with f = sum_m mu_m B_m(x,y), B_m the degree-m phi or
/// psi polynomial. The basis is triangular (B_m = x^m + terms with
/// y-degree >= 1), so mu_m is the x^m y^0 coefficient of f; a nonzero
/// remainder throws NotInSpanError(0, remainder).
std::vector<Rational> expand_poly_in_basis(const Poly& f, AscKind basis, const ParamSet& p);

/// Triangular solve with coefficients allowed to depend on y:
/// f = sum_m mu_m(y) B_m(x,y). Always succeeds; result[m] is a polynomial
/// in y alone. Reduces to expand_poly_in_basis when f is in the span.
std::vector<Poly> expand_poly_in_basis_y(const Poly& f, AscKind basis, const ParamSet& p);
Poly synthesize_from_basis_y(const std::vector<Poly>& mu, AscKind basis, const ParamSet& p);

/// sum_m mu_m B_m.
Poly synthesize_from_basis(const std::vector<Rational>& mu, AscKind basis, const ParamSet& p);

/// Per t-power expansion: result[n][m] is mu_m of the t^n coefficient.
std::vector<std::vector<Rational>> expand_in_basis(const TSeries& f, AscKind basis, const ParamSet& p);

TSeries synthesize_from_basis(const std::vector<std::vector<Rational>>& mu, AscKind basis, const ParamSet& p);

}  // namespace qcalc
