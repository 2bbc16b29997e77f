#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "cycubic/errors.hpp"
#include "cycubic/galois.hpp"
#include "cycubic/poly.hpp"
#include "cycubic/rational.hpp"

namespace cycubic {

inline const BigInt& default_denominator_bound() {
    static const BigInt kBound(1000000000000LL); // 10^12
    return kBound;
}

/// One isolated real root: exact rational bracket with a verified sign
/// change, plus a floating refinement.
struct RootInterval {
    Rational lo;
    Rational hi;
    double approx = 0.0;

    Rational midpoint() const { return (lo + hi) / Rational(2); }
};

/// The three real roots of a cubic with positive discriminant, ascending.
struct RootTriple {
    std::array<RootInterval, 3> roots;
};

/// Isolate and refine the three real roots of p to bracket width <= eps.
inline RootTriple real_roots(const Poly& p, const Rational& eps) {
    if (p.degree() != 3) throw WrongDegree("real_roots expects a cubic");
    if (eps.sign() <= 0) throw Error("real_roots expects eps > 0");
    Rational disc = discriminant_cubic(MonicCubic::normalize(p));
    if (disc.sign() <= 0)
        throw NotThreeRealRoots("discriminant is not positive; fewer than three real roots");
    std::vector<detail::Isolation> isolated = detail::isolate_real_roots(p);
    if (isolated.size() != 3) throw LogicError("expected exactly three isolating intervals");
    RootTriple triple;
    for (std::size_t i = 0; i < 3; ++i) {
        detail::Isolation fine = detail::refine_root(p, isolated[i], eps);
        Rational mid = (fine.lo + fine.hi) / Rational(2);
        triple.roots[i] = {std::move(fine.lo), std::move(fine.hi), mid.to_double()};
    }
    return triple;
}

namespace detail {

/// Solve the 3x3 system M c = z by Cramer's rule, exactly.
inline std::array<Rational, 3> solve3(const std::array<std::array<Rational, 3>, 3>& m,
                                      const std::array<Rational, 3>& z) {
    auto det3 = [](const std::array<std::array<Rational, 3>, 3>& a) {
        return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
               a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
               a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    };
    Rational d = det3(m);
    if (d.is_zero()) throw LogicError("singular interpolation system");
    std::array<Rational, 3> c;
    for (std::size_t col = 0; col < 3; ++col) {
        auto mc = m;
        for (std::size_t row = 0; row < 3; ++row) mc[row][col] = z[row];
        c[col] = det3(mc) / d;
    }
    return c;
}

/// Rational approximations of the three real roots, each within width.
inline std::array<Rational, 3> approx_roots(const Poly& p, const Rational& width) {
    std::vector<Isolation> isolated = isolate_real_roots(p);
    if (isolated.size() != 3) throw LogicError("expected three real roots");
    std::array<Rational, 3> mids;
    for (std::size_t i = 0; i < 3; ++i) {
        Isolation fine = refine_root(p, isolated[i], width);
        mids[i] = (fine.lo + fine.hi) / Rational(2);
    }
    return mids;
}

constexpr std::array<std::array<std::size_t, 3>, 6> kOrderings{{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

} // namespace detail

/// All exactly verified root expressions of p over f: polynomials
/// g = c0 + c1 x + c2 x^2 with p(g(x)) = 0 (mod f). Candidates come from
/// matching refined root approximations under each of the 6 orderings,
/// lifting the interpolation solution to rationals with denominators
/// bounded by max_den, and keeping only candidates that pass the exact
/// symbolic check. Extra refinement rounds absorb ill conditioning; a
/// candidate is never accepted numerically.
inline std::vector<Poly> root_expression_candidates(const Poly& f, const Poly& p,
                                                    const BigInt& max_den) {
    GaloisCert cf = certify_or_throw(f);
    GaloisCert cp = certify_or_throw(p);
    Poly mf = cf.poly.to_poly();
    Poly mp = cp.poly.to_poly();

    const long base_bits = static_cast<long>(2 * (boost::multiprecision::msb(max_den) + 1) + 64);
    std::vector<Poly> found;
    for (int round = 0; round < 3; ++round) {
        Rational width(BigInt(1), BigInt(1) << static_cast<unsigned>(base_bits + 128 * round));
        std::array<Rational, 3> rf = detail::approx_roots(mf, width);
        std::array<Rational, 3> rp = detail::approx_roots(mp, width);
        std::array<std::array<Rational, 3>, 3> system;
        for (std::size_t i = 0; i < 3; ++i) system[i] = {Rational(1), rf[i], rf[i] * rf[i]};
        found.clear();
        for (const auto& ordering : detail::kOrderings) {
            std::array<Rational, 3> target{rp[ordering[0]], rp[ordering[1]], rp[ordering[2]]};
            std::array<Rational, 3> c = detail::solve3(system, target);
            std::vector<Rational> lifted;
            for (const auto& ci : c) lifted.push_back(rationalize(ci, max_den));
            Poly g = Poly::from_coeffs_ascending(std::move(lifted));
            if (mod_reduce(compose(mp, g), mf).is_zero() &&
                std::find(found.begin(), found.end(), g) == found.end())
                found.push_back(g);
        }
        if (!found.empty()) return found;
    }
    return found;
}

/// First exactly verified root expression in ordering order, if any.
inline std::optional<Poly> root_expression(const Poly& f, const Poly& p,
                                           const BigInt& max_den = default_denominator_bound()) {
    std::vector<Poly> all = root_expression_candidates(f, p, max_den);
    if (all.empty()) return std::nullopt;
    return all.front();
}

enum class FieldStatus {
    VerifiedPresent, // an exact root expression was found and checked symbolically
    AbsentAtBound,   // no expression lifted within the denominator bound
};

inline const char* to_string(FieldStatus s) {
    return s == FieldStatus::VerifiedPresent ? "verified present" : "absent at bound";
}

struct SameFieldResult {
    bool same = false;
    FieldStatus status = FieldStatus::AbsentAtBound;
    std::optional<Poly> expression;
    BigInt bound;
};

/// Do f and p generate the same cyclic cubic field? For these fields,
/// containment of one root implies equality, so a single verified root
/// expression decides. A negative answer is relative to the denominator
/// bound of the lift.
inline SameFieldResult same_field(const Poly& f, const Poly& p,
                                  const BigInt& max_den = default_denominator_bound()) {
    std::optional<Poly> g = root_expression(f, p, max_den);
    if (g)
        return {true, FieldStatus::VerifiedPresent, std::move(g), max_den};
    return {false, FieldStatus::AbsentAtBound, std::nullopt, max_den};
}

/// The parametric family t(y) = 27 (y^2 + 2187y + 1594323)^3 /
/// (y^3 - 4782969y - 3486784401)^2 of representative coefficients claimed
/// to stay inside the field of x^3 - 3x + 1.
inline Rational family_t(const Rational& y) {
    Rational denom = y * y * y - Rational(4782969) * y - Rational(3486784401LL);
    if (denom.is_zero()) throw PoleOfFamily("family parameter hits the pole");
    Rational numer = y * y + Rational(2187) * y + Rational(1594323);
    return Rational(27) * numer * numer * numer / (denom * denom);
}

} // namespace cycubic
