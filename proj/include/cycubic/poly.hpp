#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "cycubic/errors.hpp"
#include "cycubic/rational.hpp"

namespace cycubic {

/// Dense univariate polynomial over Rational, coefficients stored in
/// ascending degree with no trailing zero. The zero polynomial has an
/// empty coefficient vector and no degree.
class Poly {
public:
    Poly() = default;

    static Poly zero() { return Poly(); }

    static Poly constant(Rational c) {
        Poly p;
        if (!c.is_zero()) p.coeffs_.push_back(std::move(c));
        return p;
    }

    static Poly x() { return monomial(1, Rational(1)); }

    static Poly monomial(std::size_t degree, Rational coeff) {
        Poly p;
        if (!coeff.is_zero()) {
            p.coeffs_.assign(degree + 1, Rational(0));
            p.coeffs_[degree] = std::move(coeff);
        }
        return p;
    }

    static Poly from_coeffs_ascending(std::vector<Rational> coeffs) {
        Poly p;
        p.coeffs_ = std::move(coeffs);
        p.trim();
        return p;
    }

    static Poly from_coeffs_descending(std::vector<Rational> coeffs) {
        std::reverse(coeffs.begin(), coeffs.end());
        return from_coeffs_ascending(std::move(coeffs));
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree, or nullopt for the zero polynomial (degree "minus infinity").
    std::optional<int> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return static_cast<int>(coeffs_.size()) - 1;
    }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// Coefficient of x^i, zero beyond the stored range.
    const Rational& coeff(std::size_t i) const {
        static const Rational kZero(0);
        return i < coeffs_.size() ? coeffs_[i] : kZero;
    }

    const Rational& leading() const {
        if (coeffs_.empty()) throw Error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    Rational evaluate(const Rational& x) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly derivative() const {
        Poly d;
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            d.coeffs_.push_back(coeffs_[i] * Rational(static_cast<long long>(i)));
        d.trim();
        return d;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.coeff(i) + b.coeff(i);
        r.trim();
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r;
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.coeff(i) - b.coeff(i);
        r.trim();
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        r.trim();
        return r;
    }

    friend Poly operator*(const Poly& a, const Rational& s) {
        if (s.is_zero()) return Poly();
        Poly r = a;
        for (auto& c : r.coeffs_) c *= s;
        return r;
    }
    friend Poly operator*(const Rational& s, const Poly& a) { return a * s; }

    friend Poly operator/(const Poly& a, const Rational& s) {
        if (s.is_zero()) throw DivisionByZero("division of polynomial by zero scalar");
        Poly r = a;
        for (auto& c : r.coeffs_) c /= s;
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

struct DivRem {
    Poly quotient;
    Poly remainder;
};

/// Euclidean division: f = q*g + r with deg r < deg g, exact over Q.
inline DivRem divrem(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw DivisionByZeroPoly("polynomial division by zero");
    Poly r = f;
    std::vector<Rational> q;
    const int dg = *g.degree();
    while (!r.is_zero() && *r.degree() >= dg) {
        const int dr = *r.degree();
        Rational c = r.leading() / g.leading();
        const std::size_t shift = static_cast<std::size_t>(dr - dg);
        if (q.size() < shift + 1) q.resize(shift + 1, Rational(0));
        q[shift] += c;
        r = r - Poly::monomial(shift, c) * g;
    }
    return {Poly::from_coeffs_ascending(std::move(q)), std::move(r)};
}

/// f(g(x)), by Horner composition.
inline Poly compose(const Poly& f, const Poly& g) {
    Poly acc;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
        acc = acc * g + Poly::constant(*it);
    return acc;
}

inline Poly mod_reduce(const Poly& f, const Poly& m) { return divrem(f, m).remainder; }

/// p(alpha*x + beta). alpha must be nonzero.
inline Poly affine_sub(const Poly& p, const Rational& alpha, const Rational& beta) {
    if (alpha.is_zero()) throw DegenerateAffine("affine substitution with alpha = 0");
    return compose(p, Poly::from_coeffs_ascending({beta, alpha}));
}

/// The monic cubic x^3 + a*x^2 + b*x + c.
struct MonicCubic {
    Rational a;
    Rational b;
    Rational c;

    Poly to_poly() const { return Poly::from_coeffs_ascending({c, b, a, Rational(1)}); }

    static MonicCubic from_poly(const Poly& p) {
        if (p.degree() != 3) throw WrongDegree("expected a cubic polynomial");
        if (!(p.leading() == Rational(1))) throw WrongDegree("expected a monic cubic");
        return {p.coeff(2), p.coeff(1), p.coeff(0)};
    }

    /// Scale an arbitrary cubic to monic form.
    static MonicCubic normalize(const Poly& p) {
        if (p.degree() != 3) throw WrongDegree("expected a cubic polynomial");
        const Rational& lead = p.leading();
        return {p.coeff(2) / lead, p.coeff(1) / lead, p.coeff(0) / lead};
    }

    friend bool operator==(const MonicCubic& x, const MonicCubic& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c;
    }
};

/// 18abc - 4a^3c + a^2b^2 - 4b^3 - 27c^2 for x^3 + ax^2 + bx + c.
inline Rational discriminant_cubic(const MonicCubic& p) {
    const Rational &a = p.a, &b = p.b, &c = p.c;
    return Rational(18) * a * b * c - Rational(4) * a * a * a * c + a * a * b * b -
           Rational(4) * b * b * b - Rational(27) * c * c;
}

/// Remove the quadratic term: p(x - a/3) = x^3 + P*x + Q.
inline std::pair<Rational, Rational> depress(const MonicCubic& p) {
    Rational P = p.b - p.a * p.a / Rational(3);
    Rational Q = p.c - p.a * p.b / Rational(3) + Rational(2) * p.a * p.a * p.a / Rational(27);
    return {P, Q};
}

namespace detail {

/// Clear denominators and content: the returned coefficients are integers
/// with trivial common factor, same roots, ascending degree.
inline std::vector<BigInt> primitive_integer_coeffs(const Poly& p) {
    BigInt l = 1;
    for (const auto& c : p.coeffs()) l = boost::multiprecision::lcm(l, c.den());
    std::vector<BigInt> out;
    out.reserve(p.coeffs().size());
    BigInt content = 0;
    for (const auto& c : p.coeffs()) {
        BigInt v = c.num() * (l / c.den());
        content = boost::multiprecision::gcd(content, v < 0 ? BigInt(-v) : v);
        out.push_back(std::move(v));
    }
    if (content > 1)
        for (auto& v : out) v /= content;
    return out;
}

/// All positive divisors of |n| (n != 0), from a trial-division
/// factorization. Slow for large prime factors; callers at desk scale.
inline std::vector<BigInt> positive_divisors(BigInt n) {
    if (n < 0) n = -n;
    std::vector<std::pair<BigInt, unsigned>> factors;
    for (BigInt p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) factors.emplace_back(p, e);
    }
    if (n > 1) factors.emplace_back(n, 1);
    std::vector<BigInt> divs{BigInt(1)};
    for (const auto& [p, e] : factors) {
        const std::size_t base = divs.size();
        BigInt pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

/// Cauchy bound: all real roots lie strictly inside (-B, B).
inline Rational root_bound(const Poly& p) {
    Rational maxratio(0);
    const Rational& lead = p.leading();
    for (std::size_t i = 0; i + 1 < p.coeffs().size(); ++i) {
        Rational r = abs(p.coeffs()[i] / lead);
        if (r > maxratio) maxratio = r;
    }
    return Rational(1) + maxratio;
}

/// Sturm chain: p, p', then negated remainders down to a constant.
inline std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    chain.push_back(p);
    Poly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(std::move(d));
    for (;;) {
        Poly r = -mod_reduce(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

inline int sign_variations(const std::vector<Poly>& chain, const Rational& t) {
    int variations = 0;
    int last = 0;
    for (const auto& q : chain) {
        int s = q.evaluate(t).sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

/// Number of distinct real roots in (lo, hi]; endpoints must not be roots
/// of the first chain element for the classic count to apply (we always
/// call it with nonroot endpoints).
inline int sturm_count(const std::vector<Poly>& chain, const Rational& lo, const Rational& hi) {
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

struct Isolation {
    Rational lo;
    Rational hi;
};

/// Shrink around a known root at `mid` until the interval isolates it with
/// a strict sign change at the endpoints.
inline Isolation bracket_exact_root(const Poly& p, const std::vector<Poly>& chain,
                                    const Rational& mid, Rational delta) {
    for (;;) {
        Rational lo = mid - delta, hi = mid + delta;
        if (!p.evaluate(lo).is_zero() && !p.evaluate(hi).is_zero() &&
            sturm_count(chain, lo, hi) == 1)
            return {lo, hi};
        delta /= Rational(2);
    }
}

/// Isolating intervals for all distinct real roots of a squarefree p,
/// sorted ascending; each has a strict sign change at rational endpoints.
inline std::vector<Isolation> isolate_real_roots(const Poly& p) {
    std::vector<Poly> chain = sturm_chain(p);
    Rational bound = root_bound(p);
    std::vector<Isolation> result;
    std::vector<Isolation> work{{-bound, bound}};
    while (!work.empty()) {
        Isolation cur = work.back();
        work.pop_back();
        int n = sturm_count(chain, cur.lo, cur.hi);
        if (n == 0) continue;
        if (n == 1) {
            // simple root (squarefree input), so the signs differ
            result.push_back(cur);
            continue;
        }
        Rational mid = (cur.lo + cur.hi) / Rational(2);
        if (p.evaluate(mid).is_zero()) {
            Isolation hit = bracket_exact_root(p, chain, mid, (cur.hi - cur.lo) / Rational(16));
            result.push_back(hit);
            work.push_back({cur.lo, hit.lo});
            work.push_back({hit.hi, cur.hi});
        } else {
            work.push_back({cur.lo, mid});
            work.push_back({mid, cur.hi});
        }
    }
    std::sort(result.begin(), result.end(),
              [](const Isolation& a, const Isolation& b) { return a.lo < b.lo; });
    return result;
}

/// Bisect, preserving the sign change, until hi - lo <= eps.
inline Isolation refine_root(const Poly& p, Isolation iv, const Rational& eps) {
    int sign_lo = p.evaluate(iv.lo).sign();
    while (iv.hi - iv.lo > eps) {
        Rational mid = (iv.lo + iv.hi) / Rational(2);
        int sm = p.evaluate(mid).sign();
        if (sm == 0) {
            // the root is exactly mid; collapse symmetrically around it
            Rational delta = eps / Rational(4);
            Rational width = iv.hi - iv.lo;
            if (delta > width / Rational(4)) delta = width / Rational(4);
            iv = {mid - delta, mid + delta};
            sign_lo = p.evaluate(iv.lo).sign();
            continue;
        }
        if (sm == sign_lo)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
    return iv;
}

} // namespace detail

/// All rational roots of p, ascending. Clears denominators to a primitive
/// integer polynomial and tests the classic +-(divisor of constant)/(divisor
/// of leading) candidates; slow if the extreme coefficients have huge prime
/// factors.
inline std::vector<Rational> rational_roots(const Poly& p) {
    if (p.is_zero()) throw Error("rational_roots of the zero polynomial");
    std::vector<Rational> roots;
    std::vector<BigInt> c = detail::primitive_integer_coeffs(p);
    std::size_t low = 0;
    while (c[low] == 0) ++low;
    if (low > 0) roots.push_back(Rational(0));
    if (c.size() - low == 1) {
        return roots; // constant after removing the power of x
    }
    const BigInt& constant = c[low];
    const BigInt& lead = c.back();
    std::vector<BigInt> num_divs = detail::positive_divisors(constant);
    std::vector<BigInt> den_divs = detail::positive_divisors(lead);
    Poly shifted = Poly::from_coeffs_ascending(
        [&] {
            std::vector<Rational> cc;
            for (std::size_t i = low; i < c.size(); ++i) cc.emplace_back(c[i]);
            return cc;
        }());
    for (const BigInt& n : num_divs) {
        for (const BigInt& d : den_divs) {
            Rational cand(n, d);
            if (shifted.evaluate(cand).is_zero()) roots.push_back(cand);
            Rational neg = -cand;
            if (shifted.evaluate(neg).is_zero()) roots.push_back(neg);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

/// Degree-3 irreducibility over Q: no rational root. Decided exactly by
/// isolating the real roots and lifting each to the unique nearby rational
/// with denominator dividing the leading coefficient; every candidate is
/// verified by exact evaluation. Fast even for enormous coefficients.
inline bool is_irreducible_cubic(const Poly& p) {
    if (p.degree() != 3) throw WrongDegree("irreducibility test expects a cubic");
    std::vector<BigInt> c = detail::primitive_integer_coeffs(p);
    if (c[0] == 0) return false; // zero is a root
    // discriminant of c3 x^3 + c2 x^2 + c1 x + c0
    const BigInt &c0 = c[0], &c1 = c[1], &c2 = c[2], &c3 = c[3];
    BigInt disc = 18 * c3 * c2 * c1 * c0 - 4 * c2 * c2 * c2 * c0 + c2 * c2 * c1 * c1 -
                  4 * c3 * c1 * c1 * c1 - 27 * c3 * c3 * c0 * c0;
    if (disc == 0) return false; // a repeated root of a rational cubic is rational
    Poly ip = Poly::from_coeffs_ascending({Rational(c0), Rational(c1), Rational(c2), Rational(c3)});
    BigInt lead_abs = c3 < 0 ? BigInt(-c3) : c3;
    // any rational root u/v in lowest terms has v | c3; recover it from an
    // approximation within 1/(2 v * lead_abs)
    Rational width(BigInt(1), 8 * lead_abs * lead_abs);
    for (const auto& iv : detail::isolate_real_roots(ip)) {
        detail::Isolation fine = detail::refine_root(ip, iv, width);
        Rational mid = (fine.lo + fine.hi) / Rational(2);
        Rational cand = rationalize(mid, lead_abs);
        if (ip.evaluate(cand).is_zero()) return false;
    }
    return true;
}

} // namespace cycubic
