#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "cycubic/errors.hpp"

namespace cycubic {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; zero is 0/1. All arithmetic is exact, division by zero
/// is a reported error.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
    Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rational operator-() const { return Rational(unchecked_tag{}, -num_, den_); }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        reduce();
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        reduce();
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        reduce();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw DivisionByZero("division of rational by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        // denominators are positive, so cross multiplication preserves order
        BigInt lhs = a.num_ * b.den_;
        BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "p/q", or just "p" when the denominator is 1.
    std::string to_string() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    /// Nearest-double approximation, safe for operands whose parts exceed
    /// the double range individually.
    double to_double() const {
        if (num_ == 0) return 0.0;
        BigInt n = num_ < 0 ? BigInt(-num_) : num_;
        BigInt q = (n << 64) / den_;
        double r = std::ldexp(q.convert_to<double>(), -64);
        return num_ < 0 ? -r : r;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    struct unchecked_tag {};
    Rational(unchecked_tag, BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (den_ == 0) throw DivisionByZero("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        reduce();
    }

    void reduce() {
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational pow(const Rational& base, unsigned exp) {
    Rational result(1);
    Rational b = base;
    unsigned e = exp;
    while (e > 0) {
        if (e & 1u) result *= b;
        b *= b;
        e >>= 1u;
    }
    return result;
}

/// Floor of sqrt(n) for n >= 0, by Newton iteration with a monotone
/// descent from an initial power-of-two overestimate. Exact.
inline BigInt isqrt_floor(const BigInt& n) {
    if (n < 0) throw NegativeInput("isqrt of negative integer");
    if (n == 0) return BigInt(0);
    unsigned bits = boost::multiprecision::msb(n) + 1;
    BigInt x = BigInt(1) << ((bits + 1) / 2); // x >= sqrt(n)
    for (;;) {
        BigInt y = (x + n / x) >> 1;
        if (y >= x) return x;
        x = y;
    }
}

/// Floor of cbrt(n) for n >= 0.
inline BigInt icbrt_floor(const BigInt& n) {
    if (n < 0) throw NegativeInput("icbrt of negative integer");
    if (n == 0) return BigInt(0);
    unsigned bits = boost::multiprecision::msb(n) + 1;
    BigInt x = BigInt(1) << (bits / 3 + 1); // x >= cbrt(n)
    for (;;) {
        BigInt y = (2 * x + n / (x * x)) / 3;
        if (y >= x) break;
        x = y;
    }
    while (x * x * x > n) --x;
    while ((x + 1) * (x + 1) * (x + 1) <= n) ++x;
    return x;
}

/// Exact cube root of a rational, if one exists.
inline std::optional<Rational> rat_cbrt(const Rational& x) {
    if (x.sign() < 0) {
        auto r = rat_cbrt(-x);
        if (!r) return std::nullopt;
        return -*r;
    }
    if (x.is_zero()) return Rational(0);
    BigInt rn = icbrt_floor(x.num());
    if (rn * rn * rn != x.num()) return std::nullopt;
    BigInt rd = icbrt_floor(x.den());
    if (rd * rd * rd != x.den()) return std::nullopt;
    return Rational(rn, rd);
}

/// Exact square root of a nonnegative rational, if one exists.
/// A rational in lowest terms is a square iff numerator and denominator
/// are both perfect squares.
inline std::optional<Rational> rat_sqrt(const Rational& x) {
    if (x.sign() < 0) throw NegativeInput("rat_sqrt of negative rational");
    if (x.is_zero()) return Rational(0);
    BigInt rn = isqrt_floor(x.num());
    if (rn * rn != x.num()) return std::nullopt;
    BigInt rd = isqrt_floor(x.den());
    if (rd * rd != x.den()) return std::nullopt;
    return Rational(rn, rd);
}

namespace detail {

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    // b > 0; cpp_int division truncates toward zero
    BigInt q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

} // namespace detail

/// Best continued-fraction convergent of x with denominator <= max_den.
/// Always returns some convergent (the integer part at worst); returns x
/// itself whenever its denominator is within the bound.
inline Rational rationalize(const Rational& x, const BigInt& max_den) {
    if (max_den < 1) throw Error("rationalize: denominator bound must be >= 1");
    BigInt p = x.num(), q = x.den();
    BigInt h_prev = 1, h_prev2 = 0; // h_{-1}, h_{-2}
    BigInt k_prev = 0, k_prev2 = 1; // k_{-1}, k_{-2}
    for (;;) {
        BigInt a = detail::floor_div(p, q);
        BigInt h = a * h_prev + h_prev2;
        BigInt k = a * k_prev + k_prev2;
        if (k > max_den) return Rational(h_prev, k_prev);
        BigInt r = p - a * q;
        h_prev2 = std::move(h_prev);
        h_prev = std::move(h);
        k_prev2 = std::move(k_prev);
        k_prev = std::move(k);
        if (r == 0) return Rational(h_prev, k_prev);
        p = std::move(q);
        q = std::move(r);
    }
}

/// Exact dyadic expansion of a finite double, then the convergent search.
inline Rational rationalize(double x, const BigInt& max_den) {
    if (!std::isfinite(x)) throw Error("rationalize: input must be finite");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double mantissa = std::frexp(x, &exp);
    auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
    int e = exp - 53;
    Rational exact = e >= 0 ? Rational(BigInt(scaled) << e)
                            : Rational(BigInt(scaled), BigInt(1) << -e);
    return rationalize(exact, max_den);
}

} // namespace cycubic
