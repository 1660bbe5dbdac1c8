#include "qcalc/series.hpp"

#include <stdexcept>
#include <string>

namespace qcalc {

TSeries::TSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TSeries::TSeries(int order, std::vector<Poly> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  if (coeffs_.size() != static_cast<std::size_t>(order) + 1)
    throw std::invalid_argument("coefficient count does not match order");
}

TSeries TSeries::one(int order) {
  TSeries s(order);
  s.coeffs_[0] = Poly(1);
  return s;
}

TSeries TSeries::term(int order, int power, const Poly& p) {
  TSeries s(order);
  if (power < 0) throw std::invalid_argument("negative power of t");
  if (power <= order) s.coeffs_[power] = p;
  return s;
}

const Poly& TSeries::coeff(int n) const {
  if (n < 0 || n > order_)
    throw std::out_of_range("series coefficient " + std::to_string(n) + " outside order " +
                            std::to_string(order_));
  return coeffs_[n];
}

void TSeries::set_coeff(int n, Poly p) {
  if (n < 0 || n > order_) throw std::out_of_range("series coefficient outside order");
  coeffs_[n] = std::move(p);
}

void TSeries::add_to_coeff(int n, const Poly& p) {
  if (n < 0) throw std::out_of_range("negative power of t");
  if (n <= order_) coeffs_[n] += p;
}

bool TSeries::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

void TSeries::require_same_order(const TSeries& other) const {
  if (order_ != other.order_)
    throw std::invalid_argument("series order mismatch: " + std::to_string(order_) + " vs " +
                                std::to_string(other.order_));
}

TSeries& TSeries::operator+=(const TSeries& other) {
  require_same_order(other);
  for (int n = 0; n <= order_; ++n) coeffs_[n] += other.coeffs_[n];
  return *this;
}

TSeries& TSeries::operator-=(const TSeries& other) {
  require_same_order(other);
  for (int n = 0; n <= order_; ++n) coeffs_[n] -= other.coeffs_[n];
  return *this;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
  a.require_same_order(b);
  TSeries out(a.order_);
  for (int i = 0; i <= a.order_; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= a.order_; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

TSeries& TSeries::operator*=(const TSeries& other) {
  *this = *this * other;
  return *this;
}

TSeries& TSeries::operator*=(const Poly& scale) {
  for (auto& c : coeffs_) c *= scale;
  return *this;
}

TSeries TSeries::map(const std::function<Poly(const Poly&)>& f) const {
  TSeries out(order_);
  for (int n = 0; n <= order_; ++n) out.coeffs_[n] = f(coeffs_[n]);
  return out;
}

TSeries TSeries::rescaled(const Rational& s) const {
  TSeries out(order_);
  Rational power(1);
  for (int n = 0; n <= order_; ++n) {
    out.coeffs_[n] = coeffs_[n] * power;
    power *= s;
  }
  return out;
}

std::optional<int> TSeries::first_mismatch(const TSeries& other) const {
  require_same_order(other);
  for (int n = 0; n <= order_; ++n)
    if (coeffs_[n] != other.coeffs_[n]) return n;
  return std::nullopt;
}

}  // namespace qcalc
