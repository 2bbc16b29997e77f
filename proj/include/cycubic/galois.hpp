#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "cycubic/errors.hpp"
#include "cycubic/poly.hpp"
#include "cycubic/rational.hpp"

namespace cycubic {

/// Why a cubic failed Galois certification.
enum class NotGaloisReason { Reducible, NonSquareDiscriminant, RepeatedRoots, DegenerateAlpha };

inline const char* to_string(NotGaloisReason r) {
    switch (r) {
    case NotGaloisReason::Reducible: return "Reducible";
    case NotGaloisReason::NonSquareDiscriminant: return "NonSquareDiscriminant";
    case NotGaloisReason::RepeatedRoots: return "RepeatedRoots";
    case NotGaloisReason::DegenerateAlpha: return "DegenerateAlpha";
    }
    return "?";
}

/// Certificate that a cubic generates a cyclic cubic field: the monic form,
/// its discriminant D > 0, and the positive exact square root d of D.
/// Both signs of d are meaningful; see perm_poly.
struct GaloisCert {
    MonicCubic poly;
    Rational D;
    Rational d;
};

/// Quadratic root-permuting map q = alpha*x^2 + beta*x + gamma.
/// alpha is never zero: the map has degree exactly 2.
struct QuadMap {
    QuadMap(Rational alpha_, Rational beta_, Rational gamma_)
        : alpha(std::move(alpha_)), beta(std::move(beta_)), gamma(std::move(gamma_)) {
        if (alpha.is_zero()) throw Error("quadratic map requires a nonzero leading coefficient");
    }

    Rational alpha;
    Rational beta;
    Rational gamma;

    Poly to_poly() const { return Poly::from_coeffs_ascending({gamma, beta, alpha}); }

    friend bool operator==(const QuadMap& a, const QuadMap& b) {
        return a.alpha == b.alpha && a.beta == b.beta && a.gamma == b.gamma;
    }
};

/// Certify that p defines a cyclic cubic field: monic-normalizable,
/// irreducible, positive square discriminant. Degree must be 3.
inline std::variant<GaloisCert, NotGaloisReason> certify(const Poly& p) {
    if (p.degree() != 3) throw WrongDegree("certification expects a cubic");
    MonicCubic m = MonicCubic::normalize(p);
    Rational D = discriminant_cubic(m);
    if (D.is_zero()) return NotGaloisReason::RepeatedRoots;
    if (!is_irreducible_cubic(p)) return NotGaloisReason::Reducible;
    if (D.sign() < 0) return NotGaloisReason::NonSquareDiscriminant;
    std::optional<Rational> d = rat_sqrt(D);
    if (!d) return NotGaloisReason::NonSquareDiscriminant;
    if ((m.a * m.a - Rational(3) * m.b).is_zero()) return NotGaloisReason::DegenerateAlpha;
    return GaloisCert{m, std::move(D), std::move(*d)};
}

inline GaloisCert certify_or_throw(const Poly& p) {
    auto result = certify(p);
    if (auto* reason = std::get_if<NotGaloisReason>(&result))
        throw NotGalois(std::string("not a Galois cubic: ") + to_string(*reason));
    return std::get<GaloisCert>(std::move(result));
}

/// The root-permuting quadratic of x^3 + ax^2 + bx + c for a chosen signed
/// square root d of the discriminant, solved from the root-matching linear
/// system by Cramer's rule:
///   q = (a^2-3b)/d * x^2 + (2a^3+9c-7ab-d)/(2d) * x + (a^2b+3ac-4b^2-ad)/(2d)
inline QuadMap perm_poly_from_d(const MonicCubic& p, const Rational& signed_d) {
    if (signed_d.is_zero()) throw InconsistentPair("square root of discriminant cannot be zero");
    if (!(signed_d * signed_d == discriminant_cubic(p)))
        throw InconsistentPair("d^2 does not equal the discriminant");
    const Rational &a = p.a, &b = p.b, &c = p.c;
    const Rational& d = signed_d;
    Rational two_d = Rational(2) * d;
    Rational alpha = (a * a - Rational(3) * b) / d;
    Rational beta =
        (Rational(2) * a * a * a + Rational(9) * c - Rational(7) * a * b - d) / two_d;
    Rational gamma = (a * a * b + Rational(3) * a * c - Rational(4) * b * b - a * d) / two_d;
    return QuadMap(std::move(alpha), std::move(beta), std::move(gamma));
}

/// One of the two cyclic permutations of the roots; sign selects which
/// square root of D is used.
inline QuadMap perm_poly(const GaloisCert& cert, int sign) {
    if (sign != 1 && sign != -1) throw Error("sign must be +1 or -1");
    return perm_poly_from_d(cert.poly, sign == 1 ? cert.d : -cert.d);
}

/// Both permutation maps of the representative x^3 - ax - a, specialized:
///   q1 =  3/k * x^2 - (k+9)/(2k) * x - 2a/k
///   q2 = -3/k * x^2 + (9-k)/(2k) * x + 2a/k
/// They equal perm_poly_from_d with d = +ak and d = -ak respectively.
inline std::pair<QuadMap, QuadMap> perm_poly_rep(const Rational& a, const Rational& k) {
    if (k.sign() <= 0) throw InconsistentPair("characteristic number must be positive");
    if (!(Rational(4) * a - Rational(27) == k * k))
        throw InconsistentPair("4a - 27 != k^2 for the given pair");
    Rational two_k = Rational(2) * k;
    QuadMap q1(Rational(3) / k, -(k + Rational(9)) / two_k, -(Rational(2) * a) / k);
    QuadMap q2(Rational(-3) / k, (Rational(9) - k) / two_k, (Rational(2) * a) / k);
    return {std::move(q1), std::move(q2)};
}

/// True iff q maps the root set of p into itself nontrivially:
/// p divides p(q(x)) and q is not the identity on the roots.
inline bool verify_permutes(const Poly& p, const QuadMap& q) {
    if (p.degree() != 3) throw WrongDegree("verify_permutes expects a cubic");
    Poly qp = q.to_poly();
    if (!mod_reduce(compose(p, qp), p).is_zero()) return false;
    return !(mod_reduce(qp, p) == Poly::x());
}

/// The third cubic factor of s = q(q(q(x))) - x: s is divisible by p and by
/// q - x, and the remaining monic cubic is the polynomial coupled to p via
/// q. The output discriminant is checked to be a positive rational square.
inline Poly coupled(const Poly& p, const QuadMap& q) {
    if (p.degree() != 3) throw WrongDegree("coupled expects a cubic");
    Poly qp = q.to_poly();
    Poly s = compose(qp, compose(qp, qp)) - Poly::x();
    DivRem by_p = divrem(s, p);
    if (!by_p.remainder.is_zero())
        throw InexactDivision("p does not divide q(q(q)) - x; q does not permute its roots");
    DivRem by_fix = divrem(by_p.quotient, qp - Poly::x());
    if (!by_fix.remainder.is_zero())
        throw InexactDivision("q - x does not divide the cofactor; degenerate shared roots");
    if (by_fix.quotient.degree() != 3)
        throw LogicError("coupled cofactor is not a cubic");
    Poly result = by_fix.quotient / by_fix.quotient.leading();
    Rational D = discriminant_cubic(MonicCubic::from_poly(result));
    if (D.sign() <= 0 || !rat_sqrt(D))
        throw LogicError("coupled output discriminant is not a positive rational square");
    return result;
}

/// The two polynomials coupled to a certified Galois cubic, in sign order
/// (+d, -d) of the permutation map.
inline std::pair<Poly, Poly> coupled_pair(const Poly& p) {
    GaloisCert cert = certify_or_throw(p);
    Poly plus = coupled(p, perm_poly(cert, +1));
    Poly minus = coupled(p, perm_poly(cert, -1));
    return {std::move(plus), std::move(minus)};
}

} // namespace cycubic
