// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace dicke {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& q);

/// Canonical "p/q" form, denominator always present (e.g. "-1/9", "0/1").
std::string rational_to_string(const Rational& q);

/// Like rational_to_string but drops a unit denominator ("2/3", "1", "-2").
std::string rational_to_display(const Rational& q);

/// Accepts both "p/q" and plain "p". Throws std::invalid_argument on garbage
/// or zero denominator.
Rational rational_from_string(const std::string& s);

bool is_perfect_square(const BigInt& x);

/// Exact square root of a nonnegative rational, when the result is rational.
std::optional<Rational> exact_sqrt(const Rational& q);

/// A real number of the form coef * sqrt(radicand) with radicand >= 0.
/// Perfect-square radicands are folded into coef on construction, so values
/// that happen to be rational (matrix diagonals, traces) stay exactly
/// rational. Conversion to double is the only lossy operation.
class SqrtRational {
 public:
  SqrtRational() : coef_(0), radicand_(1) {}

  static SqrtRational of_rational(Rational q);
  /// sqrt(radicand); throws on negative radicand.
  static SqrtRational sqrt_of(const Rational& radicand);
  /// coef * sqrt(radicand); throws on negative radicand.
  static SqrtRational scaled_sqrt(Rational coef, Rational radicand);

  const Rational& coef() const { return coef_; }
  const Rational& radicand() const { return radicand_; }

  bool is_zero() const { return coef_ == 0; }
  /// True when the value is exactly rational (radicand folded to 1).
  bool is_rational() const { return radicand_ == 1; }
  /// The exact rational value; throws std::logic_error if irrational.
  const Rational& as_rational() const;

  int sign() const;
  /// coef^2 * radicand, exact.
  Rational squared() const;
  double to_double() const;

  SqrtRational operator*(const SqrtRational& other) const;
  SqrtRational operator-() const;

  /// Exact value comparison (sign and square), independent of representation.
  bool operator==(const SqrtRational& other) const;
  bool operator!=(const SqrtRational& other) const { return !(*this == other); }

 private:
  SqrtRational(Rational c, Rational r);
  void reduce();

  Rational coef_;
  Rational radicand_;  // >= 0; == 1 iff the value is rational
};

}  // namespace dicke
