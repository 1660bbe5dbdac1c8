#include "qcalc/bigfloat.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qcalc {

namespace {
thread_local long g_precision = 256;
}

long working_precision() { return g_precision; }

PrecisionScope::PrecisionScope(long bits) : saved_(g_precision) {
  if (bits < 64) throw std::invalid_argument("precision must be at least 64 bits");
  g_precision = bits;
}

PrecisionScope::~PrecisionScope() { g_precision = saved_; }

BigFloat::BigFloat() {
  mpfr_init2(v_, g_precision);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long v) {
  mpfr_init2(v_, g_precision);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& v) {
  mpfr_init2(v_, g_precision);
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const std::string& decimal) {
  mpfr_init2(v_, g_precision);
  if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(v_);
    throw std::invalid_argument("malformed decimal '" + decimal + "'");
  }
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

// A moved-from BigFloat keeps a valid 64-bit zero so its destructor and
// reassignment stay well defined.
BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, 64);
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, std::max<long>(mpfr_get_prec(o.v_), g_precision));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

namespace {
// Results are produced at the working precision even if operands carry more.
void settle(mpfr_ptr v) {
  if (mpfr_get_prec(v) != g_precision) mpfr_prec_round(v, g_precision, MPFR_RNDN);
}
}  // namespace

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  settle(v_);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  settle(v_);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  settle(v_);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  settle(v_);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat r;
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string BigFloat::to_string(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  if (digits <= 0) digits = static_cast<int>(std::floor(static_cast<double>(precision()) * 0.30103));
  std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
  return buf.data();
}

BigFloat BigFloat::pi() {
  BigFloat r;
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow10(long e) {
  BigFloat r(10);
  mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r;
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r;
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat exp(const BigFloat& x) {
  BigFloat r;
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat log(const BigFloat& x) {
  BigFloat r;
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

void sin_cos(const BigFloat& x, BigFloat& s, BigFloat& c) {
  BigFloat sr, cr;
  mpfr_sin_cos(sr.get(), cr.get(), x.get(), MPFR_RNDN);
  s = std::move(sr);
  c = std::move(cr);
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigFloat pow(const BigFloat& x, long e) {
  BigFloat r;
  mpfr_pow_si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

ComplexBF& ComplexBF::operator+=(const ComplexBF& o) {
  re += o.re;
  im += o.im;
  return *this;
}

ComplexBF& ComplexBF::operator-=(const ComplexBF& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

ComplexBF& ComplexBF::operator*=(const ComplexBF& o) {
  if (im.is_zero() && o.im.is_zero()) {
    re *= o.re;
    return *this;
  }
  BigFloat r = re * o.re - im * o.im;
  BigFloat i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

ComplexBF& ComplexBF::operator*=(const BigFloat& s) {
  re *= s;
  im *= s;
  return *this;
}

ComplexBF& ComplexBF::operator/=(const ComplexBF& o) {
  if (o.im.is_zero()) {
    re /= o.re;
    im /= o.re;
    return *this;
  }
  BigFloat den = o.re * o.re + o.im * o.im;
  BigFloat r = (re * o.re + im * o.im) / den;
  BigFloat i = (im * o.re - re * o.im) / den;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::string ComplexBF::to_string(int digits) const {
  if (im.is_zero()) return re.to_string(digits);
  return re.to_string(digits) + (mpfr_sgn(im.get()) < 0 ? " - " : " + ") + abs(im).to_string(digits) + "i";
}

BigFloat abs(const ComplexBF& z) {
  BigFloat r;
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}

ComplexBF conj(const ComplexBF& z) { return {z.re, -z.im}; }

ComplexBF expi(const BigFloat& theta) {
  BigFloat s, c;
  sin_cos(theta, s, c);
  return {std::move(c), std::move(s)};
}

}  // namespace qcalc
