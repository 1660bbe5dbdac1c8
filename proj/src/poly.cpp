#include "qcalc/poly.hpp"

#include <algorithm>
#include <vector>

namespace qcalc {

Poly::Poly(const Rational& constant) {
  if (!qcalc::is_zero(constant)) terms_.emplace(Exponent{0, 0}, constant);
}

Poly Poly::monomial(const Rational& coeff, int x_exp, int y_exp) {
  if (x_exp < 0 || y_exp < 0) throw std::invalid_argument("negative exponent in monomial");
  Poly p;
  if (!qcalc::is_zero(coeff)) p.terms_.emplace(Exponent{x_exp, y_exp}, coeff);
  return p;
}

Rational Poly::coeff(int x_exp, int y_exp) const {
  auto it = terms_.find(Exponent{x_exp, y_exp});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::degree_x() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.x);
  return d;
}

int Poly::degree_y() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.y);
  return d;
}

void Poly::add_term(const Exponent& e, const Rational& coeff) {
  if (qcalc::is_zero(coeff)) return;
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (qcalc::is_zero(it->second)) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  if (a.is_zero() || b.is_zero()) return out;
  Rational prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      prod = ca * cb;
      out.add_term(Exponent{ea.x + eb.x, ea.y + eb.y}, prod);
    }
  }
  return out;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (qcalc::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Poly Poly::shifted(const Rational& sx, const Rational& sy) const {
  if (qcalc::is_zero(sx) || qcalc::is_zero(sy)) {
    // Only terms free of the annihilated variable survive.
    Poly out;
    for (const auto& [e, c] : terms_)
      if ((e.x == 0 || !qcalc::is_zero(sx)) && (e.y == 0 || !qcalc::is_zero(sy)))
        out.terms_.emplace(e, c * pow(sx, e.x) * pow(sy, e.y));
    return out;
  }
  std::vector<Rational> px{Rational(1)}, py{Rational(1)};
  int dx = degree_x(), dy = degree_y();
  for (int i = 1; i <= dx; ++i) px.push_back(px.back() * sx);
  for (int j = 1; j <= dy; ++j) py.push_back(py.back() * sy);
  Poly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * px[e.x] * py[e.y]);
  return out;
}

Poly Poly::y_free_part() const {
  Poly out;
  for (const auto& [e, c] : terms_)
    if (e.y == 0) out.terms_.emplace(e, c);
  return out;
}

namespace {

std::string monomial_string(const Exponent& e) {
  std::string s;
  auto var = [&s](const char* name, int power) {
    if (power == 0) return;
    if (!s.empty()) s += '*';
    s += name;
    if (power > 1) s += '^' + std::to_string(power);
  };
  var("x", e.x);
  var("y", e.y);
  return s;
}

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_string(e);
    if (mono.empty()) {
      out += qcalc::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else if (mag.get_den() == 1) {
      out += qcalc::to_string(mag) + mono;
    } else {
      out += '(' + qcalc::to_string(mag) + ')' + mono;
    }
  }
  return out;
}

}  // namespace qcalc
