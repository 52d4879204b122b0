// Polynomials in the formal coupling symbol kappa over Q, and their
// canonical ratios. KRational is the coefficient field used in symbolic
// mode: num/gcd-reduced, denominator primitive with positive leading
// coefficient, so equal field elements have identical representations.
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace cspoly {

class KPolynomial {
   public:
    KPolynomial() = default;
    KPolynomial(Rational c) {  // NOLINT: implicit by design
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    explicit KPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static KPolynomial kappa() { return KPolynomial(std::vector<Rational>{0, 1}); }

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const Rational& leading() const {
        static const Rational zero{0};
        return c_.empty() ? zero : c_.back();
    }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    KPolynomial operator-() const {
        KPolynomial r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend KPolynomial operator+(const KPolynomial& a, const KPolynomial& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return KPolynomial(std::move(r));
    }
    friend KPolynomial operator-(const KPolynomial& a, const KPolynomial& b) { return a + (-b); }
    friend KPolynomial operator*(const KPolynomial& a, const KPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return KPolynomial(std::move(r));
    }
    friend bool operator==(const KPolynomial& a, const KPolynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const KPolynomial& a, const KPolynomial& b) { return !(a == b); }

    KPolynomial scaled(const Rational& s) const {
        if (s.is_zero()) return {};
        KPolynomial r(*this);
        for (auto& x : r.c_) x *= s;
        return r;
    }

    Rational eval(const Rational& k) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * k + *it;
        return acc;
    }

    // quotient and remainder over Q[kappa]; den must be nonzero
    static std::pair<KPolynomial, KPolynomial> divmod(KPolynomial num, const KPolynomial& den) {
        if (den.is_zero()) throw DenominatorVanishes("polynomial division by zero");
        std::vector<Rational> q;
        if (num.degree() >= den.degree())
            q.assign(static_cast<std::size_t>(num.degree() - den.degree()) + 1, Rational(0));
        while (!num.is_zero() && num.degree() >= den.degree()) {
            Rational f = num.leading() / den.leading();
            int shift = num.degree() - den.degree();
            q[static_cast<std::size_t>(shift)] = f;
            std::vector<Rational> sub(static_cast<std::size_t>(shift), Rational(0));
            for (const auto& d : den.c_) sub.push_back(d * f);
            num = num - KPolynomial(std::move(sub));
        }
        return {KPolynomial(std::move(q)), num};
    }

    // positive rational c with (*this)/c having coprime integer coefficients
    Rational content() const {
        if (is_zero()) return Rational(1);
        mpz_class g(0), l(1);
        for (const auto& x : c_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.numerator().get_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
        }
        return Rational(mpq_class(g, l));
    }

    // divide out +/-content so the result is primitive with positive leading coefficient
    KPolynomial primitive_positive() const {
        if (is_zero()) return {};
        Rational c = content();
        if (leading().sign() < 0) c = -c;
        return scaled(c.inverse());
    }

    std::string str(const std::string& sym = "k") const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            const Rational& a = c_[static_cast<std::size_t>(i)];
            if (a.is_zero()) continue;
            if (!s.empty()) s += a.sign() > 0 ? " + " : " - ";
            else if (a.sign() < 0)
                s += "-";
            Rational mag = a.abs();
            if (i == 0 || !mag.is_one()) s += mag.str();
            if (i > 0) {
                if (!mag.is_one()) s += "*";
                s += sym;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline KPolynomial gcd(KPolynomial a, KPolynomial b) {
    if (a.is_zero()) return b.primitive_positive();
    if (b.is_zero()) return a.primitive_positive();
    while (!b.is_zero()) {
        auto [q, r] = KPolynomial::divmod(a, b);
        (void)q;
        a = std::move(b);
        b = r.primitive_positive();  // keeps coefficient growth down
    }
    return a.primitive_positive();
}

// Positive rational roots of p, via the rational root theorem on the
// primitive integer form. Used to report couplings where a symbolic-mode
// division would fail at specialization.
inline std::vector<Rational> positive_rational_roots(const KPolynomial& p0) {
    std::vector<Rational> roots;
    if (p0.is_zero()) return roots;
    KPolynomial p = p0.primitive_positive();
    // strip kappa^v factor; kappa = 0 is never a positive root
    std::size_t v = 0;
    while (v < p.coeffs().size() && p.coeffs()[v].is_zero()) ++v;
    if (v > 0) {
        std::vector<Rational> shifted(p.coeffs().begin() + static_cast<long>(v), p.coeffs().end());
        p = KPolynomial(std::move(shifted));
    }
    if (p.degree() < 1) return roots;
    mpz_class a0 = p.coeff(0).numerator();
    mpz_class ad = p.leading().numerator();
    auto divisors = [](mpz_class n) {
        n = abs(n);
        std::vector<mpz_class> ds;
        for (mpz_class d(1); d * d <= n; ++d)
            if (n % d == 0) {
                ds.push_back(d);
                ds.push_back(n / d);
            }
        return ds;
    };
    for (const auto& pnum : divisors(a0))
        for (const auto& qden : divisors(ad)) {
            Rational cand{mpq_class(pnum, qden)};
            if (p.eval(cand).is_zero() &&
                std::find(roots.begin(), roots.end(), cand) == roots.end())
                roots.push_back(cand);
        }
    std::sort(roots.begin(), roots.end());
    return roots;
}

class KRational {
   public:
    KRational() : num_(), den_(Rational(1)) {}
    KRational(Rational c) : num_(std::move(c)), den_(Rational(1)) {}  // NOLINT
    KRational(KPolynomial p) : num_(std::move(p)), den_(Rational(1)) {}  // NOLINT
    KRational(KPolynomial num, KPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DenominatorVanishes("KRational with zero denominator");
        canonicalize();
    }

    static KRational kappa() { return KRational(KPolynomial::kappa()); }

    const KPolynomial& num() const { return num_; }
    const KPolynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    KRational operator-() const {
        KRational r(*this);
        r.num_ = -r.num_;
        return r;
    }
    friend KRational operator+(const KRational& a, const KRational& b) {
        return KRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend KRational operator-(const KRational& a, const KRational& b) { return a + (-b); }
    friend KRational operator*(const KRational& a, const KRational& b) {
        return KRational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend KRational operator/(const KRational& a, const KRational& b) {
        if (b.is_zero()) throw DenominatorVanishes("division by zero KRational");
        return KRational(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const KRational& a, const KRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const KRational& a, const KRational& b) { return !(a == b); }

    KRational inverse() const {
        if (is_zero()) throw DenominatorVanishes("inverse of zero KRational");
        return KRational(den_, num_);
    }

    // exact substitution kappa := k; throws if k is a pole
    Rational evaluate_at_kappa(const Rational& k) const {
        Rational d = den_.eval(k);
        if (d.is_zero()) throw DenominatorVanishes("kappa = " + k.str() + " is a pole");
        return num_.eval(k) / d;
    }

    std::string str(const std::string& sym = "k") const {
        if (is_polynomial()) return num_.str(sym);
        return "(" + num_.str(sym) + ")/(" + den_.str(sym) + ")";
    }

   private:
    void canonicalize() {
        if (num_.is_zero()) {
            den_ = KPolynomial(Rational(1));
            return;
        }
        KPolynomial g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = KPolynomial::divmod(num_, g).first;
            den_ = KPolynomial::divmod(den_, g).first;
        }
        Rational c = den_.content();
        if (den_.leading().sign() < 0) c = -c;
        den_ = den_.scaled(c.inverse());
        num_ = num_.scaled(c.inverse());
    }

    KPolynomial num_;
    KPolynomial den_;
};

}  // namespace cspoly
