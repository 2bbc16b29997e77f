#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cycubic/rational.hpp"

using cycubic::BigInt;
using cycubic::Rational;

TEST_CASE("construction normalizes to lowest terms with positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7).den() == 1);
    CHECK(Rational(0, 7).num() == 0);
    CHECK_THROWS_AS(Rational(1, 0), cycubic::DivisionByZero);
}

TEST_CASE("arithmetic is exact") {
    Rational a(7, 12), b(-5, 18);
    CHECK(a + b == Rational(11, 36));
    CHECK(a - b == Rational(31, 36));
    CHECK(a * b == Rational(-35, 216));
    CHECK(a / b == Rational(-21, 10));
    CHECK_THROWS_AS(a / Rational(0), cycubic::DivisionByZero);
}

TEST_CASE("comparison is exact cross multiplication") {
    CHECK(Rational(1, 3) < Rational(34, 100));
    CHECK(Rational(-1, 2) < Rational(1, 1000000));
    CHECK(Rational(10, 3) > Rational(3));
}

TEST_CASE("to_string and magnitudes") {
    CHECK(Rational(27, 5).to_string() == "27/5");
    CHECK(Rational(-7).to_string() == "-7");
    CHECK(Rational(9).to_double() == doctest::Approx(9.0));
    CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("rat_sqrt exact square roots") {
    CHECK(*cycubic::rat_sqrt(Rational(81)) == Rational(9));
    CHECK(*cycubic::rat_sqrt(Rational(729, 25)) == Rational(27, 5));
    CHECK(!cycubic::rat_sqrt(Rational(2)));
    CHECK(*cycubic::rat_sqrt(Rational(0)) == Rational(0));
    CHECK_THROWS_AS(cycubic::rat_sqrt(Rational(-1)), cycubic::NegativeInput);
    // 729/25: numerator and denominator checked independently
    CHECK(cycubic::isqrt_floor(BigInt(729)) == 27);
    CHECK(cycubic::isqrt_floor(BigInt(25)) == 5);
    CHECK(BigInt(27) * 27 == 729);
    CHECK(BigInt(5) * 5 == 25);
}

TEST_CASE("isqrt_floor on awkward boundaries") {
    CHECK(cycubic::isqrt_floor(BigInt(0)) == 0);
    CHECK(cycubic::isqrt_floor(BigInt(1)) == 1);
    CHECK(cycubic::isqrt_floor(BigInt(2)) == 1);
    CHECK(cycubic::isqrt_floor(BigInt(3)) == 1);
    CHECK(cycubic::isqrt_floor(BigInt(4)) == 2);
    BigInt big = BigInt("123456789123456789123456789");
    BigInt s = cycubic::isqrt_floor(big * big);
    CHECK(s == big);
    CHECK(cycubic::isqrt_floor(big * big - 1) == big - 1);
    CHECK(cycubic::isqrt_floor(big * big + 1) == big);
}

TEST_CASE("rat_cbrt exact cube roots") {
    CHECK(*cycubic::rat_cbrt(Rational(27)) == Rational(3));
    CHECK(*cycubic::rat_cbrt(Rational(-27, 8)) == Rational(-3, 2));
    CHECK(!cycubic::rat_cbrt(Rational(4)));
}

TEST_CASE("rationalize recovers simple fractions from doubles") {
    CHECK(cycubic::rationalize(0.5, BigInt(10)) == Rational(1, 2));
    CHECK(cycubic::rationalize(0.3333333333, BigInt(100)) == Rational(1, 3));
    CHECK(cycubic::rationalize(-1.9999999, BigInt(10)) == Rational(-2));
}

TEST_CASE("rationalize on exact rational input returns best convergent") {
    CHECK(cycubic::rationalize(Rational(355, 113), BigInt(113)) == Rational(355, 113));
    CHECK(cycubic::rationalize(Rational(355, 113), BigInt(112)) == Rational(22, 7));
    // pi to 20 digits: convergents 3, 22/7, 333/106, 355/113
    Rational pi(BigInt("31415926535897932384"), BigInt("10000000000000000000"));
    CHECK(cycubic::rationalize(pi, BigInt(1)) == Rational(3));
    CHECK(cycubic::rationalize(pi, BigInt(10)) == Rational(22, 7));
    CHECK(cycubic::rationalize(pi, BigInt(150)) == Rational(355, 113));
}

TEST_CASE("property: rat_sqrt round trip and arithmetic identities") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<long long> dist(1, 1000000);
    for (int i = 0; i < 500; ++i) {
        Rational r(dist(rng), dist(rng));
        Rational square = r * r;
        auto root = cycubic::rat_sqrt(square);
        REQUIRE(root.has_value());
        CHECK(*root == r);
        CHECK(*root * *root == square);

        Rational a(dist(rng) - 500000, dist(rng));
        Rational b(dist(rng) - 500000, dist(rng));
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("property: rationalize recovers p/q from its double when representable") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<long long> dist(1, 100000);
    for (int i = 0; i < 300; ++i) {
        long long q = dist(rng);
        long long p = dist(rng) - 50000;
        Rational exact(p, q);
        Rational lifted = cycubic::rationalize(exact.to_double(), BigInt(q));
        CHECK(lifted == exact);
    }
}
