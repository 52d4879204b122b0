// Model data: the polynomials alpha, beta, the coupling, slot counts, the
// Table-2 presets, exact eigenvalues and constants, shifted index vectors,
// and the move table realizing the triangular action on the f-basis.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sympoly.hpp"

namespace cspoly {

struct AlphaBeta {
    Scalar a2, a1, a0;  // alpha(z) = a2 z^2 + a1 z + a0
    Scalar b1, b0;      // beta(z)  = b1 z + b0

    UniPoly alpha() const { return UniPoly({a0, a1, a2}); }
    UniPoly beta() const { return UniPoly({b0, b1}); }
    UniPoly alpha_prime() const { return UniPoly({a1, a2 * Scalar(2)}); }

    void validate() const {
        if (a2.is_zero() && a1.is_zero() && a0.is_zero())
            throw MathError("alpha must not be identically zero");
    }
};

struct ModelSpec {
    AlphaBeta ab;
    Scalar kappa;  // rational (fixed mode) or the formal symbol (symbolic mode)
    long N = 0;
    long Ntilde = 0;

    ModelSpec(AlphaBeta ab_, Scalar kappa_, long N_, long Ntilde_ = 0)
        : ab(std::move(ab_)), kappa(std::move(kappa_)), N(N_), Ntilde(Ntilde_) {
        ab.validate();
        if (N < 0 || Ntilde < 0) throw MathError("negative variable count");
        if (!kappa.is_symbolic()) {
            if (kappa.as_rational().is_zero()) throw KappaZero("kappa must be nonzero");
            if (kappa.as_rational().sign() < 0)
                throw MathError("fixed-mode kappa must be positive");
        }
    }

    bool symbolic() const { return kappa.is_symbolic(); }
};

// beta_m(z) = m beta(z) + (1/2)(1-m)(1-kappa m) alpha'(z), returned as a
// linear polynomial in z
inline UniPoly beta_m(const AlphaBeta& ab, const Scalar& m, const Scalar& kappa) {
    Scalar half(Rational(1, 2));
    Scalar w = half * (Scalar(1) - m) * (Scalar(1) - kappa * m);
    return ab.beta().scaled(m) + ab.alpha_prime().scaled(w);
}

struct RationalFunction {
    UniPoly num;
    UniPoly den;  // nonzero

    Scalar eval(const Scalar& z) const {
        Scalar d = den.eval(z);
        if (d.is_zero()) throw PoleAtPoint("rational function pole");
        return num.eval(z) / d;
    }
    // cross-multiplied equality, avoids univariate gcd
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num * b.den == b.num * a.den;
    }
};

// v_m(z) = (2 beta_m - alpha')(2 beta_m - 3 alpha')/(16 alpha)
//          - alpha''/4 + beta_m'/2
inline RationalFunction v_m(const AlphaBeta& ab, const Scalar& m, const Scalar& kappa) {
    UniPoly bm = beta_m(ab, m, kappa);
    UniPoly ap = ab.alpha_prime();
    UniPoly f1 = bm.scaled(Scalar(2)) - ap;
    UniPoly f2 = bm.scaled(Scalar(2)) - ap.scaled(Scalar(3));
    // alpha'' = 2 a2, beta_m' = leading coefficient of bm
    Scalar correction = bm.coeff(1) * Scalar(Rational(1, 2)) - ab.a2 * Scalar(Rational(1, 2));
    UniPoly num = f1 * f2 + ab.alpha().scaled(correction * Scalar(16));
    return {num, ab.alpha().scaled(Scalar(16))};
}

// ---------------------------------------------------------------------------
// eigenvalues

// E_n - E_0 for the non-deformed operator, Eq.-(En) bracket
inline Scalar eigenvalue_excess(const IntVector& n, const ModelSpec& spec) {
    if (spec.Ntilde != 0) throw LengthMismatch("non-deformed eigenvalue needs Ntilde = 0");
    if (static_cast<long>(n.size()) != spec.N)
        throw LengthMismatch("eigenvalue: index length != N");
    Scalar acc(0);
    for (long j = 0; j < spec.N; ++j) {
        Scalar nj(n[static_cast<std::size_t>(j)]);
        acc += spec.ab.a2 * nj * (nj - Scalar(1)) +
               (Scalar(2) * spec.kappa * spec.ab.a2 * Scalar(spec.N - 1 - j) + spec.ab.b1) * nj;
    }
    return -acc;
}

inline Scalar groundstate_energy(const ModelSpec& spec) {
    Scalar N(spec.N);
    Scalar third(Rational(1, 3)), half(Rational(1, 2));
    return -(spec.ab.a2 * spec.kappa * spec.kappa * third) * N * (N * N - Scalar(1)) -
           spec.kappa * (spec.ab.b1 - (Scalar(1) + spec.kappa) * spec.ab.a2) * half * N *
               (N - Scalar(1));
}

inline Scalar eigenvalue(const IntVector& n, const ModelSpec& spec) {
    return groundstate_energy(spec) + eigenvalue_excess(n, spec);
}

// groundstate energy of the deformed operator
inline Scalar groundstate_energy_deformed(const ModelSpec& spec) {
    Scalar N(spec.N), Nt(spec.Ntilde);
    Scalar third(Rational(1, 3)), half(Rational(1, 2));
    Scalar kinv = spec.kappa.inverse();
    Scalar d = N - Nt * kinv;
    return -(spec.kappa * spec.kappa * spec.ab.a2 * third) *
               (d * d * d - N + Nt * kinv * kinv * kinv) -
           spec.kappa * (spec.ab.b1 - (Scalar(1) + spec.kappa) * spec.ab.a2) * half *
               (d * d - N - Nt * kinv * kinv);
}

// E^(M,Mt)_n - E_0. Second-sum linear coefficient carries Ntilde+M+1-j
// (1-based j), the form forced by the conjugation identities; see the
// representation-independence tests.
inline Scalar eigenvalue_excess_deformed(const IntVector& n, const ModelSpec& spec, long M,
                                         long Mt) {
    if (static_cast<long>(n.size()) != M + Mt)
        throw LengthMismatch("eigenvalue_deformed: index length != M + Mtilde");
    const Scalar& a2 = spec.ab.a2;
    const Scalar& b1 = spec.ab.b1;
    Scalar acc(0);
    for (long j = 0; j < M; ++j) {
        Scalar nj(n[static_cast<std::size_t>(j)]);
        acc -= a2 * nj * (nj - Scalar(1)) +
               (Scalar(2) * a2 * (spec.kappa * Scalar(spec.N - 1 - j) - Scalar(spec.Ntilde)) + b1) *
                   nj;
    }
    for (long j = M; j < M + Mt; ++j) {
        Scalar nj(n[static_cast<std::size_t>(j)]);
        acc += spec.kappa * a2 * nj * (nj + Scalar(1)) +
               (Scalar(2) * a2 *
                    (Scalar(spec.Ntilde + M - j) - spec.kappa * Scalar(spec.N - M)) -
                b1) *
                   nj;
    }
    return acc;
}

inline Scalar eigenvalue_deformed(const IntVector& n, const ModelSpec& spec, long M, long Mt) {
    return groundstate_energy_deformed(spec) + eigenvalue_excess_deformed(n, spec, M, Mt);
}

// E_lambda - E_0 for fat-hook partitions, Eq.-(EnD) bracket
inline Scalar eigenvalue_partition_excess(const Partition& lam, const ModelSpec& spec) {
    if (!in_fat_hook(lam, spec.N, spec.Ntilde))
        throw NotInFatHook("partition outside the fat hook: " + lam.str());
    Scalar acc(0);
    for (std::size_t j = 0; j < lam.length(); ++j) {
        Scalar lj(lam.parts[j]);
        acc += spec.ab.a2 * lj * (lj - Scalar(1)) +
               (Scalar(2) * spec.ab.a2 *
                    (spec.kappa * Scalar(spec.N - 1 - static_cast<long>(j)) -
                     Scalar(spec.Ntilde)) +
                spec.ab.b1) *
                   lj;
    }
    return -acc;
}

inline Scalar eigenvalue_partition_deformed(const Partition& lam, const ModelSpec& spec) {
    return groundstate_energy_deformed(spec) + eigenvalue_partition_excess(lam, spec);
}

// C_N of Corollary 2 and C_{N,Ntilde,M,Mtilde} of Corollary 4
inline Scalar constant_CN(const ModelSpec& spec) {
    return spec.kappa * (spec.ab.b1 - spec.ab.a2 * (Scalar(1) + spec.kappa)) * Scalar(spec.N);
}

inline Scalar constant_CNNMM(const ModelSpec& spec, long M, long Mt) {
    Scalar Nm = Scalar(spec.N - M), Np = Scalar(spec.N + M);
    Scalar Ntm = Scalar(spec.Ntilde - Mt), Ntp = Scalar(spec.Ntilde + Mt);
    Scalar kinv = spec.kappa.inverse();
    Scalar d = Nm - Ntm * kinv;
    Scalar third(Rational(1, 3)), half(Rational(1, 2));
    return -(spec.kappa * spec.kappa * spec.ab.a2 * third) *
               (d * d * d - Nm + Ntm * kinv * kinv * kinv) -
           spec.kappa * (spec.ab.b1 - (Scalar(1) + spec.kappa) * spec.ab.a2) * half *
               (d * d - Np - Ntp * kinv * kinv);
}

// ---------------------------------------------------------------------------
// shifted index vectors and the action move table

// kappa-affine shifts n+ of Eq. (npj) / (npjD); exact Scalars, never rounded
inline std::vector<Scalar> shifted_vector(const IntVector& n, const ModelSpec& spec, long M,
                                          long Mt) {
    if (static_cast<long>(n.size()) != M + Mt)
        throw LengthMismatch("shifted_vector: index length != M + Mtilde");
    std::vector<Scalar> out;
    out.reserve(n.size());
    for (long j = 0; j < M; ++j)
        out.push_back(Scalar(n[static_cast<std::size_t>(j)]) +
                      spec.kappa * Scalar(spec.N - j) - Scalar(spec.Ntilde));
    if (Mt > 0) {
        Scalar kinv = spec.kappa.inverse();
        for (long j = M; j < M + Mt; ++j)
            out.push_back(Scalar(n[static_cast<std::size_t>(j)]) +
                          Scalar(spec.Ntilde + M - j) * kinv - Scalar(spec.N - M));
    }
    return out;
}

struct Move {
    enum Kind { E1, E2, PAIR } kind;
    long j = 0, k = 0;  // slot indices, 0-based; PAIR has j < k
    long p = 0, nu = 0;
    IntVector target;
    Scalar coefficient;
};

namespace detail {
inline bool valid_target(const IntVector& t) { return tails_nonnegative(t); }
}  // namespace detail

// All off-diagonal terms of the action of the reduced operator on f_n:
// pairs (target, coefficient) with zero coefficients and vanishing targets
// (negative tail sums) dropped. Non-deformed callers pass M = N, Mt = 0.
inline std::vector<Move> action_moves(const IntVector& n, const ModelSpec& spec, long M,
                                      long Mt) {
    if (static_cast<long>(n.size()) != M + Mt)
        throw LengthMismatch("action_moves: index length != M + Mtilde");
    const Scalar& kp = spec.kappa;
    std::vector<Scalar> nplus = shifted_vector(n, spec, M, Mt);
    auto q = [&](long j) { return j < M ? 0 : 1; };
    // (-kappa)^e for e in {-1, 0, 1}
    auto negk = [&](long e) {
        if (e == 0) return Scalar(1);
        if (e == 1) return -kp;
        return -kp.inverse();
    };

    std::vector<Move> moves;
    long L = M + Mt;
    std::array<Scalar, 3> alpha{spec.ab.a0, spec.ab.a1, spec.ab.a2};

    for (long j = 0; j < L; ++j) {
        const Scalar& np = nplus[static_cast<std::size_t>(j)];
        // -e_j
        {
            Scalar sq = q(j) == 0 ? Scalar(1) : -kp;
            Scalar lin = q(j) == 0 ? (Scalar(1) + kp) : Scalar(0);
            Scalar c = -(sq * spec.ab.a1 * np * (np - Scalar(1)) +
                         (spec.ab.b0 - lin * spec.ab.a1) * (np - Scalar(1)));
            IntVector t = n;
            t[static_cast<std::size_t>(j)] -= 1;
            if (!c.is_zero() && detail::valid_target(t))
                moves.push_back({Move::E1, j, 0, 0, 0, t, c});
        }
        // -2 e_j
        {
            Scalar sq = q(j) == 0 ? Scalar(1) : -kp;
            Scalar c = -(spec.ab.a0 * sq * (np - Scalar(1)) * (np - Scalar(2)));
            IntVector t = n;
            t[static_cast<std::size_t>(j)] -= 2;
            if (!c.is_zero() && detail::valid_target(t))
                moves.push_back({Move::E2, j, 0, 0, 0, t, c});
        }
    }

    // pair moves: target n - E^{p,nu}_{j,k} = n + (nu-1) e_j - (1-p+nu) e_k;
    // validity is monotone in nu, so enumerate until the target leaves the cone
    for (long j = 0; j < L; ++j)
        for (long k = j + 1; k < L; ++k) {
            Scalar pref = (Scalar(1) - kp) * negk(1 - q(j) - q(k));
            for (long p = 0; p <= 2; ++p) {
                if (alpha[static_cast<std::size_t>(p)].is_zero()) continue;
                for (long nu = 1;; ++nu) {
                    IntVector t = n;
                    t[static_cast<std::size_t>(j)] += nu - 1;
                    t[static_cast<std::size_t>(k)] -= 1 - p + nu;
                    if (!detail::valid_target(t)) break;
                    Scalar c = pref * alpha[static_cast<std::size_t>(p)] * Scalar(2 * nu - p);
                    if (!c.is_zero() && t != n)
                        moves.push_back({Move::PAIR, j, k, p, nu, t, c});
                }
            }
        }
    return moves;
}

// aggregated form: coefficient with which f_target appears in H~ f_n
inline std::map<IntVector, Scalar> action_targets(const IntVector& n, const ModelSpec& spec,
                                                  long M, long Mt) {
    std::map<IntVector, Scalar> agg;
    for (const auto& mv : action_moves(n, spec, M, Mt)) {
        auto it = agg.find(mv.target);
        if (it == agg.end()) {
            agg.emplace(mv.target, mv.coefficient);
        } else {
            it->second += mv.coefficient;
            if (it->second.is_zero()) agg.erase(it);
        }
    }
    return agg;
}

// ---------------------------------------------------------------------------
// Table 2 presets

struct CasePreset {
    std::string id;  // "I".."VII"
    Rational omega{1}, a{Rational(2, 3)}, b{Rational(3, 5)}, c{Rational(1, 2)};

    AlphaBeta alpha_beta() const {
        Scalar w(omega), A(a), B(b), C(c);
        if (id == "I") return {Scalar(0), Scalar(0), Scalar(1), Scalar(-2) * w, Scalar(0)};
        if (id == "II") return {Scalar(-1), Scalar(0), Scalar(0), Scalar(-1), Scalar(0)};
        if (id == "III")
            return {Scalar(1), Scalar(0), Scalar(-1), Scalar(1) - Scalar(2) * C, Scalar(0)};
        if (id == "IV")
            return {Scalar(0), Scalar(4), Scalar(0), Scalar(-4) * w,
                    Scalar(2) + Scalar(4) * A};
        if (id == "V")
            return {Scalar(-1), Scalar(0), Scalar(1), -(Scalar(1) + Scalar(2) * A), Scalar(0)};
        if (id == "VI")
            return {Scalar(-1), Scalar(0), Scalar(1), -(Scalar(1) + A + B), B - A};
        if (id == "VII")
            return {Scalar(1), Scalar(0), Scalar(0), Scalar(1) - Scalar(2) * C,
                    Scalar(2) * w};
        throw MathError("unknown preset: " + id);
    }

    static std::vector<std::string> names() {
        return {"I", "II", "III", "IV", "V", "VI", "VII"};
    }
};

inline ModelSpec preset_spec(const std::string& id, Scalar kappa, long N, long Ntilde = 0,
                             std::optional<CasePreset> params = std::nullopt) {
    CasePreset p = params.value_or(CasePreset{});
    p.id = id;
    return ModelSpec(p.alpha_beta(), std::move(kappa), N, Ntilde);
}

}  // namespace cspoly
