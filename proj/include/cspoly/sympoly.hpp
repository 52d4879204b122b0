// Sparse exact polynomial arithmetic: expanded multivariate polynomials,
// symmetric polynomials stored one coefficient per monomial orbit, and
// block-symmetric polynomials in two variable groups. The expanded form is
// the operator-application workspace; the orbit forms are the API types.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "partitions.hpp"
#include "scalar.hpp"

namespace cspoly {

// ---------------------------------------------------------------------------
// univariate polynomials over Scalar (alpha, beta, drift coefficients)

class UniPoly {
   public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(Scalar s) { return UniPoly(std::vector<Scalar>{std::move(s)}); }

    const std::vector<Scalar>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }

    UniPoly operator-() const {
        UniPoly r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()), Scalar(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(r));
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    UniPoly scaled(const Scalar& s) const {
        if (s.is_zero()) return {};
        UniPoly r(*this);
        for (auto& x : r.c_) x *= s;
        return r;
    }
    UniPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Scalar> r(c_.size() - 1, Scalar(0));
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Scalar(static_cast<long>(i));
        return UniPoly(std::move(r));
    }
    Scalar eval(const Scalar& x) const {
        Scalar acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Scalar> c_;
};

// ---------------------------------------------------------------------------
// expanded form

class ExpandedPoly {
   public:
    using Key = std::vector<long>;  // exponent vector, length nvars

    ExpandedPoly() : nvars_(0) {}
    explicit ExpandedPoly(std::size_t nvars) : nvars_(nvars) {}

    std::size_t nvars() const { return nvars_; }
    const std::map<Key, Scalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add_term(const Key& k, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = t_.find(k);
        if (it == t_.end()) {
            t_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    void add(const ExpandedPoly& o) {
        for (const auto& [k, c] : o.t_) add_term(k, c);
    }
    ExpandedPoly scaled(const Scalar& s) const {
        ExpandedPoly r(nvars_);
        if (s.is_zero()) return r;
        for (const auto& [k, c] : t_) r.t_.emplace(k, c * s);
        return r;
    }
    friend ExpandedPoly operator+(ExpandedPoly a, const ExpandedPoly& b) {
        a.add(b);
        return a;
    }
    friend ExpandedPoly operator-(ExpandedPoly a, const ExpandedPoly& b) {
        a.add(b.scaled(Scalar(-1)));
        return a;
    }
    friend ExpandedPoly operator*(const ExpandedPoly& a, const ExpandedPoly& b) {
        ExpandedPoly r(a.nvars_);
        Key k(a.nvars_, 0);
        for (const auto& [ka, ca] : a.t_)
            for (const auto& [kb, cb] : b.t_) {
                for (std::size_t i = 0; i < a.nvars_; ++i) k[i] = ka[i] + kb[i];
                r.add_term(k, ca * cb);
            }
        return r;
    }
    friend bool operator==(const ExpandedPoly& a, const ExpandedPoly& b) {
        return a.nvars_ == b.nvars_ && a.t_ == b.t_;
    }

    ExpandedPoly derivative(std::size_t var) const {
        ExpandedPoly r(nvars_);
        for (const auto& [k, c] : t_) {
            if (k[var] == 0) continue;
            Key nk = k;
            --nk[var];
            r.add_term(nk, c * Scalar(k[var]));
        }
        return r;
    }

    // multiply by p(z_var)
    ExpandedPoly mul_univariate(std::size_t var, const UniPoly& p) const {
        ExpandedPoly r(nvars_);
        for (std::size_t d = 0; d < p.coeffs().size(); ++d) {
            if (p.coeffs()[d].is_zero()) continue;
            for (const auto& [k, c] : t_) {
                Key nk = k;
                nk[var] += static_cast<long>(d);
                r.add_term(nk, c * p.coeffs()[d]);
            }
        }
        return r;
    }

    // exact division by (z_i - z_j); throws NotDivisible when the input does
    // not vanish on the hyperplane z_i = z_j
    ExpandedPoly divided_difference(std::size_t i, std::size_t j) const {
        ExpandedPoly q(nvars_), rem(nvars_);
        for (const auto& [k, c] : t_) {
            long d = k[i];
            Key nk = k;
            for (long t = 0; t < d; ++t) {
                nk[i] = t;
                nk[j] = k[j] + (d - 1 - t);
                q.add_term(nk, c);
            }
            nk[i] = 0;
            nk[j] = k[j] + d;
            rem.add_term(nk, c);
        }
        if (!rem.is_zero()) throw NotDivisible("numerator does not vanish on z_i = z_j");
        return q;
    }

    // restriction to the diagonal z_i := z_j
    ExpandedPoly substitute_equal(std::size_t i, std::size_t j) const {
        ExpandedPoly r(nvars_);
        for (const auto& [k, c] : t_) {
            Key nk = k;
            nk[j] += nk[i];
            nk[i] = 0;
            r.add_term(nk, c);
        }
        return r;
    }

    bool is_homogeneous(long* deg_out = nullptr) const {
        long d = -1;
        for (const auto& [k, c] : t_) {
            long s = 0;
            for (long e : k) s += e;
            if (d < 0) d = s;
            else if (s != d)
                return false;
        }
        if (deg_out) *deg_out = d < 0 ? 0 : d;
        return true;
    }

   private:
    std::size_t nvars_;
    std::map<Key, Scalar> t_;
};

namespace detail {
// all distinct arrangements of a multiset
inline std::vector<std::vector<long>> distinct_permutations(std::vector<long> v) {
    std::sort(v.begin(), v.end());
    std::vector<std::vector<long>> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}
}  // namespace detail

// ---------------------------------------------------------------------------
// symmetric polynomials, one coefficient per monomial orbit m_lambda

class SymmetricPoly {
   public:
    SymmetricPoly() : nvars_(0) {}
    explicit SymmetricPoly(std::size_t nvars) : nvars_(nvars) {}
    static SymmetricPoly constant(std::size_t nvars, const Scalar& c) {
        SymmetricPoly p(nvars);
        p.add_term(Partition{}, c);
        return p;
    }
    static SymmetricPoly monomial(std::size_t nvars, const Partition& lam,
                                  const Scalar& c = Scalar(1)) {
        SymmetricPoly p(nvars);
        p.add_term(lam, c);
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    const std::map<Partition, Scalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add_term(const Partition& lam, const Scalar& c) {
        if (c.is_zero()) return;
        if (lam.length() > nvars_) throw LengthMismatch("partition longer than variable count");
        auto it = t_.find(lam);
        if (it == t_.end()) {
            t_.emplace(lam, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    Scalar coeff(const Partition& lam) const {
        auto it = t_.find(lam);
        return it == t_.end() ? Scalar(0) : it->second;
    }

    void add(const SymmetricPoly& o) {
        if (nvars_ != o.nvars_) throw LengthMismatch("adding polynomials over different N");
        for (const auto& [k, c] : o.t_) add_term(k, c);
    }
    SymmetricPoly scaled(const Scalar& s) const {
        SymmetricPoly r(nvars_);
        if (s.is_zero()) return r;
        for (const auto& [k, c] : t_) r.t_.emplace(k, c * s);
        return r;
    }
    friend SymmetricPoly operator+(SymmetricPoly a, const SymmetricPoly& b) {
        a.add(b);
        return a;
    }
    friend SymmetricPoly operator-(SymmetricPoly a, const SymmetricPoly& b) {
        a.add(b.scaled(Scalar(-1)));
        return a;
    }
    friend bool operator==(const SymmetricPoly& a, const SymmetricPoly& b) {
        return a.nvars_ == b.nvars_ && a.t_ == b.t_;
    }
    friend bool operator!=(const SymmetricPoly& a, const SymmetricPoly& b) { return !(a == b); }

    ExpandedPoly expand() const {
        ExpandedPoly e(nvars_);
        for (const auto& [lam, c] : t_) {
            std::vector<long> padded(lam.parts);
            padded.resize(nvars_, 0);
            for (auto& arr : detail::distinct_permutations(padded)) e.add_term(arr, c);
        }
        return e;
    }

    bool is_homogeneous(long* deg_out = nullptr) const {
        long d = -1;
        for (const auto& [k, c] : t_) {
            if (d < 0) d = weight(k);
            else if (weight(k) != d)
                return false;
        }
        if (deg_out) *deg_out = d < 0 ? 0 : d;
        return true;
    }

   private:
    std::size_t nvars_;
    std::map<Partition, Scalar> t_;
};

// collect an expanded polynomial known to be symmetric; throws otherwise
inline SymmetricPoly collect_symmetric(const ExpandedPoly& e) {
    SymmetricPoly s(e.nvars());
    for (const auto& [k, c] : e.terms()) {
        std::vector<long> srt(k);
        std::sort(srt.rbegin(), srt.rend());
        if (srt == k) s.add_term(sort_to_partition(IntVector(k)), c);
    }
    if (!(s.expand() == e)) throw MathError("polynomial is not symmetric");
    return s;
}

inline SymmetricPoly mono_mul(const SymmetricPoly& a, const SymmetricPoly& b) {
    if (a.nvars() != b.nvars()) throw LengthMismatch("mono_mul: different variable counts");
    return collect_symmetric(a.expand() * b.expand());
}

// ---------------------------------------------------------------------------
// block-symmetric polynomials in (z_1..z_N, zt_1..zt_Ntilde)

class BiSymmetricPoly {
   public:
    BiSymmetricPoly() : n_(0), nt_(0) {}
    BiSymmetricPoly(std::size_t n, std::size_t ntilde) : n_(n), nt_(ntilde) {}
    static BiSymmetricPoly constant(std::size_t n, std::size_t ntilde, const Scalar& c) {
        BiSymmetricPoly p(n, ntilde);
        std::vector<long> zero(n + ntilde, 0);
        p.add_term(IntVector(zero), c);
        return p;
    }

    std::size_t nvars() const { return n_; }
    std::size_t nvars_tilde() const { return nt_; }
    std::size_t total_vars() const { return n_ + nt_; }
    const std::map<IntVector, Scalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    // key: exponent vector sorted decreasingly within each block
    void add_term(const IntVector& key, const Scalar& c) {
        if (c.is_zero()) return;
        if (key.size() != total_vars()) throw LengthMismatch("bad orbit key length");
        auto it = t_.find(key);
        if (it == t_.end()) {
            t_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    Scalar coeff(const IntVector& key) const {
        auto it = t_.find(key);
        return it == t_.end() ? Scalar(0) : it->second;
    }

    void add(const BiSymmetricPoly& o) {
        if (n_ != o.n_ || nt_ != o.nt_) throw LengthMismatch("adding over different blocks");
        for (const auto& [k, c] : o.t_) add_term(k, c);
    }
    BiSymmetricPoly scaled(const Scalar& s) const {
        BiSymmetricPoly r(n_, nt_);
        if (s.is_zero()) return r;
        for (const auto& [k, c] : t_) r.t_.emplace(k, c * s);
        return r;
    }
    friend BiSymmetricPoly operator+(BiSymmetricPoly a, const BiSymmetricPoly& b) {
        a.add(b);
        return a;
    }
    friend BiSymmetricPoly operator-(BiSymmetricPoly a, const BiSymmetricPoly& b) {
        a.add(b.scaled(Scalar(-1)));
        return a;
    }
    friend bool operator==(const BiSymmetricPoly& a, const BiSymmetricPoly& b) {
        return a.n_ == b.n_ && a.nt_ == b.nt_ && a.t_ == b.t_;
    }
    friend bool operator!=(const BiSymmetricPoly& a, const BiSymmetricPoly& b) {
        return !(a == b);
    }

    ExpandedPoly expand() const {
        ExpandedPoly e(total_vars());
        for (const auto& [key, c] : t_) {
            std::vector<long> blk1(key.parts.begin(), key.parts.begin() + static_cast<long>(n_));
            std::vector<long> blk2(key.parts.begin() + static_cast<long>(n_), key.parts.end());
            for (auto& a1 : detail::distinct_permutations(blk1))
                for (auto& a2 : detail::distinct_permutations(blk2)) {
                    std::vector<long> v(a1);
                    v.insert(v.end(), a2.begin(), a2.end());
                    e.add_term(v, c);
                }
        }
        return e;
    }

    bool is_homogeneous(long* deg_out = nullptr) const {
        long d = -1;
        for (const auto& [k, c] : t_) {
            if (d < 0) d = weight(k);
            else if (weight(k) != d)
                return false;
        }
        if (deg_out) *deg_out = d < 0 ? 0 : d;
        return true;
    }

   private:
    std::size_t n_, nt_;
    std::map<IntVector, Scalar> t_;
};

inline IntVector block_sorted_key(const std::vector<long>& exps, std::size_t n) {
    std::vector<long> v(exps);
    std::sort(v.begin(), v.begin() + static_cast<long>(n), std::greater<long>());
    std::sort(v.begin() + static_cast<long>(n), v.end(), std::greater<long>());
    return IntVector(std::move(v));
}

inline bool is_block_symmetric(const ExpandedPoly& e, std::size_t n, std::size_t ntilde) {
    if (e.nvars() != n + ntilde) throw LengthMismatch("variable count mismatch");
    BiSymmetricPoly s(n, ntilde);
    for (const auto& [k, c] : e.terms()) {
        IntVector key = block_sorted_key(k, n);
        if (key.parts == k) s.add_term(key, c);
    }
    return s.expand() == e;
}

// canonical orbit form of a block-symmetric expanded polynomial
inline BiSymmetricPoly block_symmetrize(const ExpandedPoly& e, std::size_t n,
                                        std::size_t ntilde) {
    if (e.nvars() != n + ntilde) throw LengthMismatch("variable count mismatch");
    BiSymmetricPoly s(n, ntilde);
    for (const auto& [k, c] : e.terms()) {
        IntVector key = block_sorted_key(k, n);
        if (key.parts == k) s.add_term(key, c);
    }
    if (!(s.expand() == e)) throw MathError("polynomial is not block-symmetric");
    return s;
}

inline BiSymmetricPoly mono_mul(const BiSymmetricPoly& a, const BiSymmetricPoly& b) {
    if (a.nvars() != b.nvars() || a.nvars_tilde() != b.nvars_tilde())
        throw LengthMismatch("mono_mul: different blocks");
    return block_symmetrize(a.expand() * b.expand(), a.nvars(), a.nvars_tilde());
}

// embeddings between the one-block and two-block forms
inline BiSymmetricPoly to_bisymmetric(const SymmetricPoly& p, std::size_t ntilde = 0) {
    BiSymmetricPoly r(p.nvars(), ntilde);
    for (const auto& [lam, c] : p.terms()) {
        std::vector<long> key(lam.parts);
        key.resize(p.nvars() + ntilde, 0);
        r.add_term(IntVector(std::move(key)), c);
    }
    return r;
}

inline SymmetricPoly to_symmetric(const BiSymmetricPoly& p) {
    if (p.nvars_tilde() != 0) throw LengthMismatch("nonzero tilde block");
    SymmetricPoly r(p.nvars());
    for (const auto& [key, c] : p.terms()) r.add_term(sort_to_partition(key), c);
    return r;
}

}  // namespace cspoly
