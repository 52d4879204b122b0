// Scalar: the exact coefficient type used throughout. Either a Rational
// (fixed-kappa mode) or a KRational (symbolic mode). Rational constants
// promote losslessly when combined with symbolic values, so integer
// bookkeeping (degrees, slot counts) mixes freely with kappa-dependent
// weights inside one computation.
#pragma once

#include <string>
#include <variant>

#include "kpoly.hpp"

namespace cspoly {

class Scalar {
   public:
    Scalar() : v_(Rational(0)) {}
    Scalar(long n) : v_(Rational(n)) {}  // NOLINT: implicit by design
    Scalar(Rational r) : v_(std::move(r)) {}  // NOLINT
    Scalar(KRational k) : v_(std::move(k)) {}  // NOLINT

    static Scalar kappa() { return Scalar(KRational::kappa()); }

    bool is_symbolic() const { return std::holds_alternative<KRational>(v_); }
    bool is_zero() const {
        return is_symbolic() ? std::get<KRational>(v_).is_zero() : std::get<Rational>(v_).is_zero();
    }
    bool is_one() const {
        if (is_symbolic()) {
            const auto& k = std::get<KRational>(v_);
            return k.is_polynomial() && k.num().is_one();
        }
        return std::get<Rational>(v_).is_one();
    }

    const Rational& as_rational() const {
        if (is_symbolic()) throw MathError("symbolic Scalar where a rational was required");
        return std::get<Rational>(v_);
    }
    KRational as_krational() const {
        if (is_symbolic()) return std::get<KRational>(v_);
        return KRational(std::get<Rational>(v_));
    }

    Scalar operator-() const {
        return is_symbolic() ? Scalar(-std::get<KRational>(v_)) : Scalar(-std::get<Rational>(v_));
    }
    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.is_symbolic() || b.is_symbolic()) return {a.as_krational() + b.as_krational()};
        return {a.as_rational() + b.as_rational()};
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.is_symbolic() || b.is_symbolic()) return {a.as_krational() * b.as_krational()};
        return {a.as_rational() * b.as_rational()};
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (a.is_symbolic() || b.is_symbolic()) return {a.as_krational() / b.as_krational()};
        return {a.as_rational() / b.as_rational()};
    }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.is_symbolic() || b.is_symbolic()) return a.as_krational() == b.as_krational();
        return a.as_rational() == b.as_rational();
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inverse() const {
        if (is_symbolic()) return {std::get<KRational>(v_).inverse()};
        return {std::get<Rational>(v_).inverse()};
    }

    Scalar pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Scalar acc(1), base(*this);
        for (; e > 0; e >>= 1) {
            if (e & 1) acc *= base;
            if (e > 1) base *= base;
        }
        return acc;
    }

    // exact substitution; identity on rationals
    Scalar evaluate_at(const Rational& k) const {
        if (!is_symbolic()) return *this;
        return {std::get<KRational>(v_).evaluate_at_kappa(k)};
    }

    std::string str(const std::string& sym = "k") const {
        return is_symbolic() ? std::get<KRational>(v_).str(sym) : std::get<Rational>(v_).str();
    }
    // canonical key for caches and deterministic hashing
    std::string key() const {
        if (!is_symbolic()) return std::get<Rational>(v_).str();
        const auto& kr = std::get<KRational>(v_);
        std::string s = "[";
        for (const auto& c : kr.num().coeffs()) s += c.str() + ",";
        s += "]/[";
        for (const auto& c : kr.den().coeffs()) s += c.str() + ",";
        return s + "]";
    }

   private:
    std::variant<Rational, KRational> v_;
};

// binom(kappa, q) = kappa(kappa-1)...(kappa-q+1)/q!, a degree-q polynomial
inline KPolynomial kappa_binomial(long q) {
    if (q < 0) throw MathError("kappa_binomial: q must be non-negative");
    KPolynomial r{Rational(1)};
    Rational fact(1);
    for (long i = 0; i < q; ++i) {
        r = r * KPolynomial(std::vector<Rational>{Rational(-i), Rational(1)});
        fact *= Rational(i + 1);
    }
    return r.scaled(fact.inverse());
}

// binom(kappa+s-1, s) = kappa(kappa+1)...(kappa+s-1)/s!
inline KPolynomial rising_binomial(long s) {
    if (s < 0) throw MathError("rising_binomial: s must be non-negative");
    KPolynomial r{Rational(1)};
    Rational fact(1);
    for (long i = 0; i < s; ++i) {
        r = r * KPolynomial(std::vector<Rational>{Rational(i), Rational(1)});
        fact *= Rational(i + 1);
    }
    return r.scaled(fact.inverse());
}

inline Rational evaluate_at_kappa(const KRational& p, const Rational& k) {
    return p.evaluate_at_kappa(k);
}

// binomial of a Scalar argument: binom(x, q) for mode-generic weights,
// e.g. binom(1/kappa, q) in the deformed prefactor
inline Scalar scalar_binomial(const Scalar& x, long q) {
    Scalar r(1);
    Scalar fact(1);
    for (long i = 0; i < q; ++i) {
        r *= x - Scalar(i);
        fact *= Scalar(i + 1);
    }
    return r / fact;
}

// binom(x+s-1, s) with Scalar x
inline Scalar scalar_rising_binomial(const Scalar& x, long s) {
    Scalar r(1);
    Scalar fact(1);
    for (long i = 0; i < s; ++i) {
        r *= x + Scalar(i);
        fact *= Scalar(i + 1);
    }
    return r / fact;
}

}  // namespace cspoly
