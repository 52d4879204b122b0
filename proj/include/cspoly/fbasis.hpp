// The g- and f-bases. g_lambda are the modified complete symmetric
// polynomials (coefficients of the Cauchy-type kernel); f_n come from the
// finite shifted-product expansion of the kernel with the Vandermonde-type
// prefactor. The deformed builder generalises both slot kinds: w-slots carry
// (1-z_j/w)^{-kappa} (1-zt_J/w) factors, wt-slots the kappa -> 1/kappa,
// z <-> zt mirror. All prefactor shifts move weight to strictly earlier
// slots, so suffix sums of n bound the enumeration.
#pragma once

#include <functional>
#include <mutex>
#include <unordered_map>

#include "matrix.hpp"
#include "model.hpp"

namespace cspoly {

namespace detail {

inline std::string vec_key(const IntVector& n) {
    std::string s;
    for (long p : n.parts) s += std::to_string(p) + ",";
    return s;
}

template <class V>
class MemoTable {
   public:
    template <class F>
    V get_or_compute(const std::string& key, F&& compute) {
        {
            std::lock_guard<std::mutex> lock(m_);
            auto it = t_.find(key);
            if (it != t_.end()) return it->second;
        }
        V v = compute();
        std::lock_guard<std::mutex> lock(m_);
        t_.emplace(key, v);
        return v;
    }

   private:
    std::mutex m_;
    std::unordered_map<std::string, V> t_;
};

}  // namespace detail

// coefficient of t^r in prod_j (1 - z_j t)^(-coupling): one coefficient per
// orbit, prod of rising binomials over the parts
inline SymmetricPoly g_row_coupled(long r, long nvars, const Scalar& coupling) {
    static detail::MemoTable<SymmetricPoly> memo;
    if (r < 0) throw MathError("g_row: negative row index");
    std::string key = coupling.key() + "|" + std::to_string(nvars) + "|" + std::to_string(r);
    return memo.get_or_compute(key, [&] {
        SymmetricPoly g(static_cast<std::size_t>(nvars));
        for (const auto& lam : partitions_of(r, nvars)) {
            Scalar c(1);
            for (long part : lam.parts) c *= scalar_rising_binomial(coupling, part);
            g.add_term(lam, c);
        }
        return g;
    });
}

inline SymmetricPoly g_row(long r, long nvars, const ModelSpec& spec) {
    return g_row_coupled(r, nvars, spec.kappa);
}

inline SymmetricPoly g_partition(const Partition& lam, long nvars, const ModelSpec& spec) {
    SymmetricPoly acc = SymmetricPoly::constant(static_cast<std::size_t>(nvars), Scalar(1));
    for (long part : lam.parts) acc = mono_mul(acc, g_row(part, nvars, spec));
    return acc;
}

namespace detail {

// elementary symmetric e_b as a partition key (1^b)
inline Partition one_column(long b) {
    return Partition(std::vector<long>(static_cast<std::size_t>(b), 1));
}

// slot series h_r (w-slots): sum_{a+b=r} (-1)^b g_a(z; kappa) e_b(zt)
inline BiSymmetricPoly slot_series(long r, const ModelSpec& spec, bool tilde_slot) {
    static MemoTable<BiSymmetricPoly> memo;
    std::string key = spec.kappa.key() + "|" + std::to_string(spec.N) + "|" +
                      std::to_string(spec.Ntilde) + "|" + std::to_string(r) +
                      (tilde_slot ? "T" : "W");
    return memo.get_or_compute(key, [&] {
        const std::size_t N = static_cast<std::size_t>(spec.N);
        const std::size_t Nt = static_cast<std::size_t>(spec.Ntilde);
        BiSymmetricPoly h(N, Nt);
        if (r < 0) return h;
        long own_vars = tilde_slot ? spec.Ntilde : spec.N;
        long other_vars = tilde_slot ? spec.N : spec.Ntilde;
        Scalar coupling = tilde_slot ? spec.kappa.inverse() : spec.kappa;
        for (long b = 0; b <= std::min(r, other_vars); ++b) {
            SymmetricPoly g = g_row_coupled(r - b, own_vars, coupling);
            Scalar sign = (b % 2 == 0) ? Scalar(1) : Scalar(-1);
            for (const auto& [lam, c] : g.terms()) {
                std::vector<long> keyv;
                if (!tilde_slot) {
                    keyv = lam.parts;
                    keyv.resize(N, 0);
                    auto col = one_column(b).parts;
                    col.resize(Nt, 0);
                    keyv.insert(keyv.end(), col.begin(), col.end());
                } else {
                    keyv = one_column(b).parts;
                    keyv.resize(N, 0);
                    auto own = lam.parts;
                    own.resize(Nt, 0);
                    keyv.insert(keyv.end(), own.begin(), own.end());
                }
                h.add_term(IntVector(std::move(keyv)), c * sign);
            }
        }
        return h;
    });
}

struct PrefactorPair {
    std::size_t a, b;  // slot indices, a < b
    int kind;          // 0: w-w (kappa), 1: wt-wt (1/kappa), 2: cross (geometric)
};

// enumerate shift tuples; for each feasible tuple report the residual slot
// exponents m >= 0 and the product of prefactor weights
inline void enumerate_shift_tuples(
    const IntVector& n, long M, long Mt, const Scalar& kappa,
    const std::function<void(const IntVector&, const Scalar&)>& emit) {
    std::vector<PrefactorPair> pairs;
    long L = M + Mt;
    for (long a = 0; a < L; ++a)
        for (long b = a + 1; b < L; ++b) {
            int kind = a < M ? (b < M ? 0 : 2) : 1;
            pairs.push_back({static_cast<std::size_t>(a), static_cast<std::size_t>(b), kind});
        }
    Scalar inv_coupling = Mt > 1 ? kappa.inverse() : Scalar(0);
    std::function<void(std::size_t, IntVector, Scalar)> rec = [&](std::size_t idx, IntVector cur,
                                                                  Scalar w) {
        if (idx == pairs.size()) {
            for (long v : cur.parts)
                if (v < 0) return;
            emit(cur, w);
            return;
        }
        const auto& pr = pairs[idx];
        for (long t = 0;; ++t) {
            IntVector shifted = cur;
            shifted[pr.a] += t;
            shifted[pr.b] -= t;
            // later shifts only lower suffix sums, so a negative suffix is final
            if (!tails_nonnegative(shifted)) break;
            Scalar weight(1);
            if (t > 0) {
                if (pr.kind == 0)
                    weight = scalar_binomial(kappa, t);
                else if (pr.kind == 1)
                    weight = scalar_binomial(inv_coupling, t);
                if (pr.kind != 2 && t % 2 == 1) weight = -weight;
            }
            if (!weight.is_zero()) rec(idx + 1, shifted, w * weight);
        }
    };
    rec(0, n, Scalar(1));
}

}  // namespace detail

// f^(M,Mt)_n as a block-symmetric polynomial over (z, zt)
inline BiSymmetricPoly f_deformed(const IntVector& n, const ModelSpec& spec, long M, long Mt) {
    static detail::MemoTable<BiSymmetricPoly> memo;
    if (static_cast<long>(n.size()) != M + Mt)
        throw LengthMismatch("f_deformed: index length != M + Mtilde");
    if (!spec.kappa.is_symbolic() && spec.kappa.as_rational().is_zero())
        throw KappaZero("f_deformed needs invertible kappa");
    std::string key = spec.kappa.key() + "|" + std::to_string(spec.N) + "," +
                      std::to_string(spec.Ntilde) + "|" + std::to_string(M) + "," +
                      std::to_string(Mt) + "|" + detail::vec_key(n);
    return memo.get_or_compute(key, [&] {
        const std::size_t N = static_cast<std::size_t>(spec.N);
        const std::size_t Nt = static_cast<std::size_t>(spec.Ntilde);
        BiSymmetricPoly acc(N, Nt);
        detail::enumerate_shift_tuples(
            n, M, Mt, spec.kappa, [&](const IntVector& m, const Scalar& w) {
                BiSymmetricPoly term = BiSymmetricPoly::constant(N, Nt, w);
                for (long s = 0; s < M + Mt; ++s) {
                    if (term.is_zero()) break;
                    term = mono_mul(
                        term, detail::slot_series(m[static_cast<std::size_t>(s)], spec, s >= M));
                }
                acc.add(term);
            });
        return acc;
    });
}

// non-deformed f_n of the kernel expansion; requires Ntilde = 0, M = N
inline SymmetricPoly f_vector(const IntVector& n, const ModelSpec& spec) {
    if (spec.Ntilde != 0) throw LengthMismatch("f_vector needs Ntilde = 0");
    if (static_cast<long>(n.size()) != spec.N) throw LengthMismatch("f_vector: length != N");
    return to_symmetric(f_deformed(n, spec, spec.N, 0));
}

// expansion u of a polynomial over the f-basis, keys padded to length N
struct FExpansion {
    long M = 0, Mt = 0;
    std::map<IntVector, Scalar> terms;
};

// transition matrix K with f_lambda = sum_mu K_{lambda mu} g_mu; rows and
// columns indexed by partitions of d with length <= N in the deterministic
// descending linear extension of the tail order
struct TransitionMatrix {
    std::vector<Partition> index;
    Matrix K;
};

inline TransitionMatrix transition_matrix_K(long d, long N, const ModelSpec& spec) {
    TransitionMatrix tm;
    tm.index = partitions_of(d, N);
    std::sort(tm.index.begin(), tm.index.end(), [&](const Partition& x, const Partition& y) {
        return linear_ext_desc(x.padded(static_cast<std::size_t>(N)),
                               y.padded(static_cast<std::size_t>(N)));
    });
    std::map<Partition, std::size_t> pos;
    for (std::size_t i = 0; i < tm.index.size(); ++i) pos.emplace(tm.index[i], i);
    tm.K.assign(tm.index.size(), std::vector<Scalar>(tm.index.size(), Scalar(0)));
    for (std::size_t r = 0; r < tm.index.size(); ++r) {
        IntVector n = tm.index[r].padded(static_cast<std::size_t>(N));
        detail::enumerate_shift_tuples(n, N, 0, spec.kappa,
                                       [&](const IntVector& m, const Scalar& w) {
                                           Partition mu = sort_to_partition(m);
                                           tm.K[r][pos.at(mu)] += w;
                                       });
    }
    return tm;
}

// coefficients c with P = sum_lambda c_lambda f_lambda, via an exact solve
// against the monomial-basis matrix of the f's
inline FExpansion expand_in_f_basis(const SymmetricPoly& P, const ModelSpec& spec) {
    long d = 0;
    if (!P.is_homogeneous(&d)) throw NotHomogeneous("expand_in_f_basis needs homogeneous input");
    std::vector<Partition> lams = partitions_of(d, spec.N);
    std::sort(lams.begin(), lams.end(), [&](const Partition& x, const Partition& y) {
        return linear_ext_desc(x.padded(static_cast<std::size_t>(spec.N)),
                               y.padded(static_cast<std::size_t>(spec.N)));
    });
    std::map<Partition, std::size_t> mu_pos;
    for (std::size_t i = 0; i < lams.size(); ++i) mu_pos.emplace(lams[i], i);

    // columns: monomial coordinates; solve A^T c = P
    Matrix At(lams.size(), std::vector<Scalar>(lams.size(), Scalar(0)));
    for (std::size_t i = 0; i < lams.size(); ++i) {
        SymmetricPoly f = f_vector(lams[i].padded(static_cast<std::size_t>(spec.N)), spec);
        for (const auto& [mu, c] : f.terms()) At[mu_pos.at(mu)][i] = c;
    }
    std::vector<Scalar> rhs(lams.size(), Scalar(0));
    for (const auto& [mu, c] : P.terms()) {
        auto it = mu_pos.find(mu);
        if (it == mu_pos.end()) throw LengthMismatch("monomial outside the degree-d basis");
        rhs[it->second] = c;
    }
    std::vector<Scalar> c = solve_linear(At, rhs);
    FExpansion out;
    out.M = spec.N;
    out.Mt = 0;
    for (std::size_t i = 0; i < lams.size(); ++i)
        if (!c[i].is_zero())
            out.terms.emplace(lams[i].padded(static_cast<std::size_t>(spec.N)), c[i]);
    return out;
}

}  // namespace cspoly
