#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcalc {

/// Exact rational number in lowest terms with a positive denominator.
/// GMP keeps every arithmetic result canonical; values built from raw
/// numerator/denominator pairs go through make_rational().
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" rendering ("p" when the denominator is 1).
std::string to_string(const Rational& r);

/// r^e for any integer e; negative exponents require r != 0.
Rational pow(const Rational& r, long e);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// Thrown when a q-Pochhammer factor in a denominator vanishes. `index` is
/// the series/term index at which the vanishing factor first enters.
class PoleError : public std::domain_error {
 public:
  PoleError(const std::string& what, int index)
      : std::domain_error(what + " (pole at index " + std::to_string(index) + ")"),
        index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

}  // namespace qcalc
