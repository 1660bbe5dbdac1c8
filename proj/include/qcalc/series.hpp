#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qcalc/poly.hpp"

namespace qcalc {

/// Power series in the formal variable t, truncated after t^order, with
/// polynomial coefficients in x, y. The order is fixed at construction;
/// binary operations between different orders throw std::invalid_argument.
class TSeries {
 public:
  explicit TSeries(int order);
  TSeries(int order, std::vector<Poly> coeffs);

  static TSeries one(int order);
  /// p * t^power (zero series if power > order).
  static TSeries term(int order, int power, const Poly& p);

  int order() const { return order_; }
  const std::vector<Poly>& coeffs() const { return coeffs_; }

  /// series_coeff; throws std::out_of_range for n outside [0, order].
  const Poly& coeff(int n) const;
  void set_coeff(int n, Poly p);
  /// Adds p to the t^n coefficient; silently ignores n > order.
  void add_to_coeff(int n, const Poly& p);

  bool is_zero() const;

  TSeries& operator+=(const TSeries& other);
  TSeries& operator-=(const TSeries& other);
  TSeries& operator*=(const TSeries& other);
  TSeries& operator*=(const Poly& scale);

  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
  friend TSeries operator*(const TSeries& a, const TSeries& b);
  friend TSeries operator*(TSeries a, const Poly& s) { return a *= s; }
  friend TSeries operator*(const Poly& s, TSeries a) { return a *= s; }

  friend bool operator==(const TSeries&, const TSeries&) = default;

  /// Applies f to every coefficient (e.g. a poly_shift).
  TSeries map(const std::function<Poly(const Poly&)>& f) const;

  /// t -> s * t: coefficient n is multiplied by s^n.
  TSeries rescaled(const Rational& s) const;

  /// Lowest power at which the two series differ.
  std::optional<int> first_mismatch(const TSeries& other) const;

 private:
  void require_same_order(const TSeries& other) const;

  int order_;
  std::vector<Poly> coeffs_;
};

}  // namespace qcalc
