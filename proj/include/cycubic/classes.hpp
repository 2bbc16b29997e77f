#pragma once

#include <optional>
#include <utility>
#include <variant>

#include "cycubic/errors.hpp"
#include "cycubic/galois.hpp"
#include "cycubic/poly.hpp"
#include "cycubic/rational.hpp"

namespace cycubic {

/// The class representative x^3 - ax - a together with its characteristic
/// number k > 0, where 4a - 27 = k^2 exactly.
struct ClassRep {
    ClassRep(Rational a_, Rational k_) : a(std::move(a_)), k(std::move(k_)) {
        if (k.sign() <= 0) throw NonPositiveK("characteristic number must be positive");
        if (!(Rational(4) * a - Rational(27) == k * k))
            throw InconsistentPair("4a - 27 != k^2");
    }

    Rational a;
    Rational k;

    Poly poly() const { return Poly::from_coeffs_ascending({-a, -a, Rational(0), Rational(1)}); }

    friend bool operator==(const ClassRep& x, const ClassRep& y) { return x.a == y.a; }
};

/// Exact witness of class membership: scale * p(alpha*x + beta) equals the
/// representative.
struct AffineWitness {
    Rational alpha;
    Rational beta;
    Rational scale;
};

enum class NoRepReason {
    ZeroLinearTerm,   // depressed form has P = 0 (impossible for Galois cubics)
    ZeroConstantTerm, // depressed form has Q = 0, i.e. the shifted cubic has root 0
    NonSquareShift,   // 4a - 27 is not a positive rational square, no characteristic number
};

inline const char* to_string(NoRepReason r) {
    switch (r) {
    case NoRepReason::ZeroLinearTerm: return "ZeroLinearTerm";
    case NoRepReason::ZeroConstantTerm: return "ZeroConstantTerm";
    case NoRepReason::NonSquareShift: return "NonSquareShift";
    }
    return "?";
}

struct Representative {
    ClassRep rep;
    AffineWitness witness;
};

namespace detail {

struct RepCoefficient {
    Rational a;
    AffineWitness witness;
};

/// The coefficient a of the class representative x^3 - ax - a, with the
/// exact affine witness, or a structural failure reason. k is not computed
/// here, so this also serves non-Galois cubics (used by is_equivalent).
inline std::variant<RepCoefficient, NoRepReason> rep_coefficient(const Poly& p) {
    if (p.degree() != 3) throw WrongDegree("representative expects a cubic");
    const Rational lead = p.leading();
    MonicCubic m = MonicCubic::normalize(p);
    if (discriminant_cubic(m).is_zero()) throw RepeatedRoots("cubic has a repeated root");
    auto [P, Q] = depress(m);
    if (P.is_zero()) return NoRepReason::ZeroLinearTerm;
    if (Q.is_zero()) return NoRepReason::ZeroConstantTerm;
    Rational alpha = Q / P;
    Rational beta = -m.a / Rational(3);
    Rational scale = Rational(1) / (lead * alpha * alpha * alpha);
    Rational a = -(P * P * P) / (Q * Q);
    return RepCoefficient{std::move(a), {std::move(alpha), std::move(beta), std::move(scale)}};
}

} // namespace detail

/// Characteristic number k > 0 with 4a - 27 = k^2, for the representative
/// coefficient a.
inline Rational char_number(const Rational& a) {
    Rational shift = Rational(4) * a - Rational(27);
    if (shift.sign() <= 0) throw NotASquare("4a - 27 is not positive");
    std::optional<Rational> k = rat_sqrt(shift);
    if (!k) throw NotASquare("4a - 27 is not a rational square");
    return *k;
}

inline Rational char_number(const ClassRep& rep) { return rep.k; }

/// Representative from a characteristic number: a = (k^2 + 27)/4.
inline ClassRep rep_from_k(const Rational& k) {
    if (k.sign() <= 0) throw NonPositiveK("characteristic number must be positive");
    return ClassRep((k * k + Rational(27)) / Rational(4), k);
}

/// Normalize a cubic to its class representative x^3 - ax - a. The witness
/// is validated exactly before returning; WrongDegree and RepeatedRoots are
/// thrown, structural failures are reported as values.
inline std::variant<Representative, NoRepReason> representative(const Poly& p) {
    auto coeff = detail::rep_coefficient(p);
    if (auto* reason = std::get_if<NoRepReason>(&coeff)) return *reason;
    auto& rc = std::get<detail::RepCoefficient>(coeff);
    Rational shift = Rational(4) * rc.a - Rational(27);
    std::optional<Rational> k;
    if (shift.sign() > 0) k = rat_sqrt(shift);
    if (!k) return NoRepReason::NonSquareShift;
    ClassRep rep(rc.a, std::move(*k));
    // witness re-check, per the module contract
    Poly image = rc.witness.scale * affine_sub(p, rc.witness.alpha, rc.witness.beta);
    if (!(image == rep.poly())) throw LogicError("affine witness failed exact validation");
    return Representative{std::move(rep), std::move(rc.witness)};
}

/// Linear equivalence: same representative coefficient a. The degenerate
/// depressed shapes (P = 0 or Q = 0, which have no representative of the
/// x^3 - ax - a form) are compared exactly by their own invariants.
inline bool is_equivalent(const Poly& p, const Poly& r) {
    if (p.degree() != 3 || r.degree() != 3) throw WrongDegree("equivalence expects cubics");
    MonicCubic mp = MonicCubic::normalize(p);
    MonicCubic mr = MonicCubic::normalize(r);
    if (discriminant_cubic(mp).is_zero() || discriminant_cubic(mr).is_zero())
        throw RepeatedRoots("equivalence expects distinct roots");
    auto [Pp, Qp] = depress(mp);
    auto [Pr, Qr] = depress(mr);
    if (Pp.is_zero() != Pr.is_zero() || Qp.is_zero() != Qr.is_zero()) return false;
    // x^3 + Q ~ x^3 + Q' iff Q/Q' is a rational cube
    if (Pp.is_zero()) return rat_cbrt(Qp / Qr).has_value();
    // x^3 + Px ~ x^3 + P'x iff P/P' is a square of a rational
    if (Qp.is_zero()) {
        Rational ratio = Pp / Pr;
        return ratio.sign() > 0 && rat_sqrt(ratio).has_value();
    }
    return Pp * Pp * Pp * Qr * Qr == Pr * Pr * Pr * Qp * Qp;
}

/// Conjugation of a root-permuting map under x -> alpha*x + beta:
/// (q(alpha*x + beta) - beta) / alpha. Permutes the roots of
/// p(alpha*x + beta) whenever q permutes the roots of p.
inline QuadMap conjugate_map(const QuadMap& q, const Rational& alpha, const Rational& beta) {
    if (alpha.is_zero()) throw DegenerateAffine("conjugation with alpha = 0");
    Poly image = (affine_sub(q.to_poly(), alpha, beta) - Poly::constant(beta)) / alpha;
    return QuadMap(image.coeff(2), image.coeff(1), image.coeff(0));
}

} // namespace cycubic
