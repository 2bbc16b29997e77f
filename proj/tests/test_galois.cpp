#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <variant>

#include "cycubic/classes.hpp"
#include "cycubic/galois.hpp"
#include "cycubic/parse.hpp"

using cycubic::GaloisCert;
using cycubic::NotGaloisReason;
using cycubic::Poly;
using cycubic::QuadMap;
using cycubic::Rational;

namespace {

const Poly kP = cycubic::parse_poly("x^3-3*x+1");

GaloisCert cert_of(const Poly& p) { return cycubic::certify_or_throw(p); }

} // namespace

TEST_CASE("certify the reference cubic") {
    auto result = cycubic::certify(kP);
    auto* cert = std::get_if<GaloisCert>(&result);
    REQUIRE(cert != nullptr);
    CHECK(cert->D == Rational(81));
    CHECK(cert->d == Rational(9));
    CHECK(cert->poly.to_poly() == kP);
}

TEST_CASE("certification is scale invariant") {
    auto result = cycubic::certify(cycubic::parse_poly("2*x^3-6*x+2"));
    auto* cert = std::get_if<GaloisCert>(&result);
    REQUIRE(cert != nullptr);
    CHECK(cert->poly.to_poly() == kP);
    CHECK(cert->D == Rational(81));
}

TEST_CASE("certification failure reasons") {
    auto reducible = cycubic::certify(cycubic::parse_poly("x^3-x"));
    REQUIRE(std::holds_alternative<NotGaloisReason>(reducible));
    CHECK(std::get<NotGaloisReason>(reducible) == NotGaloisReason::Reducible);

    // discriminant -4*1 - 27*1 = -31
    auto nonsquare = cycubic::certify(cycubic::parse_poly("x^3+x+1"));
    REQUIRE(std::holds_alternative<NotGaloisReason>(nonsquare));
    CHECK(std::get<NotGaloisReason>(nonsquare) == NotGaloisReason::NonSquareDiscriminant);

    // x^3 - 7x - 7 is irreducible with discriminant 49 * (4*7-27) = 49 (not... 4*7-27 = 1)
    // positive square: pick instead x^3 - 2x - 2, discriminant 4*8 - 108 = -76
    auto negdisc = cycubic::certify(cycubic::parse_poly("x^3-2*x-2"));
    REQUIRE(std::holds_alternative<NotGaloisReason>(negdisc));
    CHECK(std::get<NotGaloisReason>(negdisc) == NotGaloisReason::NonSquareDiscriminant);

    // (x-1)^2 (x+2) has a repeated root
    auto repeated = cycubic::certify(cycubic::parse_poly("x^3-3*x+2"));
    REQUIRE(std::holds_alternative<NotGaloisReason>(repeated));
    CHECK(std::get<NotGaloisReason>(repeated) == NotGaloisReason::RepeatedRoots);

    CHECK_THROWS_AS(cycubic::certify(cycubic::parse_poly("x^2-1")), cycubic::WrongDegree);
    CHECK_THROWS_AS(cycubic::certify_or_throw(cycubic::parse_poly("x^3-x")), cycubic::NotGalois);
}

TEST_CASE("permutation polynomials of the reference cubic, both signs") {
    GaloisCert cert = cert_of(kP);
    QuadMap plus = cycubic::perm_poly(cert, +1);
    QuadMap minus = cycubic::perm_poly(cert, -1);
    CHECK(plus == QuadMap(Rational(1), Rational(0), Rational(-2)));   // x^2 - 2
    CHECK(minus == QuadMap(Rational(-1), Rational(-1), Rational(2))); // -x^2 - x + 2
    CHECK(cycubic::verify_permutes(kP, plus));
    CHECK(cycubic::verify_permutes(kP, minus));
}

TEST_CASE("the two maps reduce to each other under q(q) mod p") {
    GaloisCert cert = cert_of(kP);
    Poly qp = cycubic::perm_poly(cert, +1).to_poly();
    Poly qm = cycubic::perm_poly(cert, -1).to_poly();
    CHECK(cycubic::mod_reduce(cycubic::compose(qp, qp), kP) == qm);
    CHECK(cycubic::mod_reduce(cycubic::compose(qm, qm), kP) == qp);
}

TEST_CASE("specialized representative maps match the general formula") {
    Rational a(27), k(9);
    auto [q1, q2] = cycubic::perm_poly_rep(a, k);
    CHECK(q1 == QuadMap(Rational(1, 3), Rational(-1), Rational(-6)));
    CHECK(q2 == QuadMap(Rational(-1, 3), Rational(0), Rational(6)));
    Poly rep = cycubic::parse_poly("x^3-27*x-27");
    cycubic::MonicCubic m = cycubic::MonicCubic::from_poly(rep);
    CHECK(q1 == cycubic::perm_poly_from_d(m, a * k));
    CHECK(q2 == cycubic::perm_poly_from_d(m, -(a * k)));
    CHECK(cycubic::verify_permutes(rep, q1));
    CHECK(cycubic::verify_permutes(rep, q2));
    CHECK_THROWS_AS(cycubic::perm_poly_rep(Rational(5), Rational(9)), cycubic::InconsistentPair);
    CHECK_THROWS_AS(cycubic::perm_poly_rep(Rational(27), Rational(-9)), cycubic::InconsistentPair);
}

TEST_CASE("verify_permutes rejects the identity and non-permuting maps") {
    CHECK(!cycubic::verify_permutes(kP, QuadMap(Rational(1, 1000000), Rational(1), Rational(0))));
    CHECK(!cycubic::verify_permutes(kP, QuadMap(Rational(1), Rational(0), Rational(0)))); // x^2
}

TEST_CASE("coupled polynomials of the reference cubic") {
    GaloisCert cert = cert_of(kP);
    Poly via_plus = cycubic::coupled(kP, cycubic::perm_poly(cert, +1));
    Poly via_minus = cycubic::coupled(kP, cycubic::perm_poly(cert, -1));
    CHECK(via_plus == cycubic::parse_poly("x^3+x^2-2*x-1"));
    CHECK(via_minus == cycubic::parse_poly("x^3+2*x^2-3*x-5"));
    CHECK(cycubic::discriminant_cubic(cycubic::MonicCubic::from_poly(via_plus)) == Rational(49));
    CHECK(cycubic::discriminant_cubic(cycubic::MonicCubic::from_poly(via_minus)) == Rational(169));

    auto [p1, p2] = cycubic::coupled_pair(kP);
    CHECK(p1 == via_plus);
    CHECK(p2 == via_minus);
}

TEST_CASE("coupled accepts a reducible input with three distinct roots") {
    Poly rep = cycubic::parse_poly("x^3-343/36*x-343/36");
    auto [q1, q2] = cycubic::perm_poly_rep(Rational(343, 36), Rational(10, 3));
    Poly c1 = cycubic::coupled(rep, q1);
    Poly c2 = cycubic::coupled(rep, q2);
    CHECK(c1 == cycubic::parse_poly("x^3 - 91/18*x^2 - 385/81*x + 49763/1458"));
    CHECK(cycubic::is_irreducible_cubic(c1));
    CHECK(cycubic::is_irreducible_cubic(c2));
    CHECK(!(c1 == c2));
}

TEST_CASE("coupled pair of the canonical representative lands in phi/psi classes") {
    Poly rep = cycubic::parse_poly("x^3-27*x-27");
    auto [c1, c2] = cycubic::coupled_pair(rep);
    auto k_of = [](const Poly& p) {
        auto r = cycubic::representative(p);
        REQUIRE(std::holds_alternative<cycubic::Representative>(r));
        return std::get<cycubic::Representative>(r).rep.k;
    };
    std::set<Rational> got{k_of(c1), k_of(c2)};
    CHECK(got == std::set<Rational>{Rational(27), Rational(27, 5)});
}

TEST_CASE("coupled reports inexact division when q does not permute the roots") {
    Poly p = cycubic::parse_poly("x^3-x");
    CHECK_THROWS_AS(cycubic::coupled(p, QuadMap(Rational(1), Rational(0), Rational(-2))),
                    cycubic::InexactDivision);
}

TEST_CASE("conjugated inputs produce conjugated couplings") {
    Poly shifted = cycubic::affine_sub(kP, Rational(1), Rational(1));
    auto [s1, s2] = cycubic::coupled_pair(shifted);
    auto [p1, p2] = cycubic::coupled_pair(kP);
    CHECK(s1 == cycubic::affine_sub(p1, Rational(1), Rational(1)));
    CHECK(s2 == cycubic::affine_sub(p2, Rational(1), Rational(1)));
}

TEST_CASE("uniqueness: a small exhaustive grid finds exactly the two maps") {
    GaloisCert cert = cert_of(kP);
    Poly plus = cycubic::perm_poly(cert, +1).to_poly();
    Poly minus = cycubic::perm_poly(cert, -1).to_poly();
    int hits = 0;
    for (long long a = -3; a <= 3; ++a) {
        if (a == 0) continue;
        for (long long b = -3; b <= 3; ++b) {
            for (long long c = -3; c <= 3; ++c) {
                QuadMap q{Rational(a), Rational(b), Rational(c)};
                if (!cycubic::verify_permutes(kP, q)) continue;
                ++hits;
                CHECK((q.to_poly() == plus || q.to_poly() == minus));
            }
        }
    }
    CHECK(hits == 2);
}

TEST_CASE("property: order-3 action and opposite-order reduction on random classes") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long long> num(1, 60);
    std::uniform_int_distribution<long long> den(1, 12);
    int tested = 0;
    while (tested < 40) {
        Rational k(num(rng), den(rng));
        cycubic::ClassRep rep = cycubic::rep_from_k(k);
        Poly p = rep.poly();
        if (!cycubic::is_irreducible_cubic(p)) continue;
        ++tested;
        GaloisCert cert = cert_of(p);
        Poly qp = cycubic::perm_poly(cert, +1).to_poly();
        Poly qm = cycubic::perm_poly(cert, -1).to_poly();
        // q(q(q)) = x mod p
        Poly cube = cycubic::compose(qp, cycubic::compose(qp, qp));
        CHECK(cycubic::mod_reduce(cube, p) == Poly::x());
        // the two signs are inverse cycles of each other
        CHECK(cycubic::mod_reduce(cycubic::compose(qp, qp), p) == qm);
        CHECK(cycubic::mod_reduce(cycubic::compose(qm, qm), p) == qp);
        // both couplings have square discriminants (checked inside coupled)
        Poly c1 = cycubic::coupled(p, cycubic::perm_poly(cert, +1));
        Poly c2 = cycubic::coupled(p, cycubic::perm_poly(cert, -1));
        CHECK(!(c1 == c2));
    }
}
