// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "dicke/exact.hpp"

using dicke::BigInt;
using dicke::Rational;
using dicke::SqrtRational;

TEST_SUITE("rational strings") {
  TEST_CASE("canonical form always carries a denominator") {
    CHECK(dicke::rational_to_string(Rational(2, 3)) == "2/3");
    CHECK(dicke::rational_to_string(Rational(-1, 9)) == "-1/9");
    CHECK(dicke::rational_to_string(Rational(0)) == "0/1");
    CHECK(dicke::rational_to_string(Rational(5)) == "5/1");
  }

  TEST_CASE("display form drops unit denominators") {
    CHECK(dicke::rational_to_display(Rational(5)) == "5");
    CHECK(dicke::rational_to_display(Rational(2, 3)) == "2/3");
  }

  TEST_CASE("parsing accepts both plain and fraction forms") {
    CHECK(dicke::rational_from_string("2/3") == Rational(2, 3));
    CHECK(dicke::rational_from_string("-1/9") == Rational(-1, 9));
    CHECK(dicke::rational_from_string("7") == Rational(7));
    CHECK(dicke::rational_from_string("-4/6") == Rational(-2, 3));
  }

  TEST_CASE("round trip is exact for large values") {
    const Rational big(BigInt("123456789012345678901234567890"),
                       BigInt("98765432109876543210987"));
    CHECK(dicke::rational_from_string(dicke::rational_to_string(big)) == big);
  }

  TEST_CASE("garbage is rejected") {
    CHECK_THROWS_AS((void)dicke::rational_from_string("1/0"),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)dicke::rational_from_string("x"),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)dicke::rational_from_string(""),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)dicke::rational_from_string("1/2/3"),
                    std::invalid_argument);
  }
}

TEST_SUITE("square roots") {
  TEST_CASE("perfect square detection") {
    CHECK(dicke::is_perfect_square(BigInt(0)));
    CHECK(dicke::is_perfect_square(BigInt(1)));
    CHECK(dicke::is_perfect_square(BigInt(144)));
    CHECK(dicke::is_perfect_square(BigInt("1000000000000000000000000")));
    CHECK_FALSE(dicke::is_perfect_square(BigInt(2)));
    CHECK_FALSE(dicke::is_perfect_square(BigInt(-4)));
    CHECK_FALSE(dicke::is_perfect_square(BigInt("1000000000000000000000001")));
  }

  TEST_CASE("exact rational roots") {
    CHECK(dicke::exact_sqrt(Rational(4, 9)) == Rational(2, 3));
    CHECK(dicke::exact_sqrt(Rational(1)) == Rational(1));
    CHECK(dicke::exact_sqrt(Rational(0)) == Rational(0));
    CHECK_FALSE(dicke::exact_sqrt(Rational(1, 2)).has_value());
    CHECK_FALSE(dicke::exact_sqrt(Rational(-1)).has_value());
  }
}

TEST_SUITE("radical values") {
  TEST_CASE("perfect squares fold into the coefficient") {
    const auto value = SqrtRational::sqrt_of(Rational(4, 9));
    CHECK(value.is_rational());
    CHECK(value.as_rational() == Rational(2, 3));
  }

  TEST_CASE("partial folding keeps an integral radicand") {
    const auto value = SqrtRational::sqrt_of(Rational(1, 2));
    CHECK_FALSE(value.is_rational());
    CHECK(value.coef() == Rational(1, 2));
    CHECK(value.radicand() == Rational(2));
    CHECK(value.squared() == Rational(1, 2));
  }

  TEST_CASE("equality sees through the representation") {
    const auto a = SqrtRational::scaled_sqrt(Rational(2), Rational(2));
    const auto b = SqrtRational::sqrt_of(Rational(8));
    CHECK(a == b);
    CHECK(a != -b);
    CHECK(-a == -b);
  }

  TEST_CASE("products reduce to a single radical") {
    const auto a = SqrtRational::sqrt_of(Rational(1, 2));
    const auto product = a * a;
    CHECK(product.is_rational());
    CHECK(product.as_rational() == Rational(1, 2));

    const auto mixed = SqrtRational::sqrt_of(Rational(2)) *
                       SqrtRational::sqrt_of(Rational(3));
    CHECK(mixed.squared() == Rational(6));
    CHECK_FALSE(mixed.is_rational());
  }

  TEST_CASE("sign and zero handling") {
    CHECK(SqrtRational().is_zero());
    CHECK(SqrtRational().sign() == 0);
    CHECK(SqrtRational::of_rational(Rational(-2)).sign() == -1);
    CHECK(SqrtRational::sqrt_of(Rational(3)).sign() == 1);
    CHECK(SqrtRational::scaled_sqrt(Rational(0), Rational(5)).is_zero());
    CHECK(SqrtRational::scaled_sqrt(Rational(3), Rational(0)).is_zero());
  }

  TEST_CASE("double conversion") {
    const auto value = SqrtRational::scaled_sqrt(Rational(2, 3), Rational(2));
    CHECK(value.to_double() ==
          doctest::Approx(2.0 / 3.0 * std::sqrt(2.0)).epsilon(1e-15));
  }

  TEST_CASE("invalid operations throw") {
    CHECK_THROWS_AS((void)SqrtRational::sqrt_of(Rational(-1)),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)SqrtRational::sqrt_of(Rational(2)).as_rational(),
                    std::logic_error);
  }
}
