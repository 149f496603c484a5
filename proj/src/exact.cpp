// SPDX-License-Identifier: Apache-2.0
#include "dicke/exact.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cmath>
#include <stdexcept>
#include <utility>

namespace dicke {

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string rational_to_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string rational_to_display(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return rational_to_string(q);
}

Rational rational_from_string(const std::string& s) {
  const auto slash = s.find('/');
  const std::string num_part = s.substr(0, slash);
  const std::string den_part =
      slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (num_part.empty() || den_part.empty()) {
    throw std::invalid_argument("malformed rational: '" + s + "'");
  }
  try {
    BigInt num(num_part);
    BigInt den(den_part);
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational: '" + s + "'");
  }
}

bool is_perfect_square(const BigInt& x) {
  if (x < 0) return false;
  const BigInt r = boost::multiprecision::sqrt(x);
  return r * r == x;
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const BigInt num = numerator(q);
  const BigInt den = denominator(q);
  if (!is_perfect_square(num) || !is_perfect_square(den)) return std::nullopt;
  return Rational(boost::multiprecision::sqrt(num),
                  boost::multiprecision::sqrt(den));
}

SqrtRational::SqrtRational(Rational c, Rational r)
    : coef_(std::move(c)), radicand_(std::move(r)) {
  reduce();
}

SqrtRational SqrtRational::of_rational(Rational q) {
  return SqrtRational(std::move(q), Rational(1));
}

SqrtRational SqrtRational::sqrt_of(const Rational& radicand) {
  return scaled_sqrt(Rational(1), radicand);
}

SqrtRational SqrtRational::scaled_sqrt(Rational coef, Rational radicand) {
  if (radicand < 0) throw std::invalid_argument("negative radicand");
  return SqrtRational(std::move(coef), radicand);
}

void SqrtRational::reduce() {
  if (coef_ == 0 || radicand_ == 0) {
    coef_ = 0;
    radicand_ = 1;
    return;
  }
  if (radicand_ == 1) return;
  // Fold the largest perfect-square divisor we can find cheaply: first the
  // whole radicand, then its numerator and denominator separately.
  if (auto root = exact_sqrt(radicand_)) {
    coef_ *= *root;
    radicand_ = 1;
    return;
  }
  BigInt num = numerator(radicand_);
  BigInt den = denominator(radicand_);
  if (is_perfect_square(num)) {
    coef_ *= Rational(boost::multiprecision::sqrt(num));
    num = 1;
  }
  if (is_perfect_square(den)) {
    coef_ /= Rational(boost::multiprecision::sqrt(den));
    den = 1;
  }
  if (den != 1) {
    // sqrt(a/b) = sqrt(a*b)/b keeps the radicand integral.
    coef_ /= Rational(den);
    num *= den;
    den = 1;
  }
  radicand_ = Rational(num);
}

const Rational& SqrtRational::as_rational() const {
  if (!is_rational()) throw std::logic_error("value is irrational");
  return coef_;
}

int SqrtRational::sign() const {
  if (coef_ == 0) return 0;
  return coef_ > 0 ? 1 : -1;
}

Rational SqrtRational::squared() const { return coef_ * coef_ * radicand_; }

double SqrtRational::to_double() const {
  if (is_rational()) return dicke::to_double(coef_);
  // Split the radicand's double conversion from the coefficient's to keep
  // intermediate magnitudes tame.
  const double root = std::sqrt(dicke::to_double(radicand_));
  return dicke::to_double(coef_) * root;
}

SqrtRational SqrtRational::operator*(const SqrtRational& other) const {
  return SqrtRational(coef_ * other.coef_, radicand_ * other.radicand_);
}

SqrtRational SqrtRational::operator-() const {
  return SqrtRational(-coef_, radicand_);
}

bool SqrtRational::operator==(const SqrtRational& other) const {
  return sign() == other.sign() && squared() == other.squared();
}

}  // namespace dicke
