// Reduced operators derived by the conjugation calculus, exact application
// to (block-)symmetric polynomials, the membership condition for the
// deformed algebra, and the variable-mass source identity checked at
// rational points.
//
// Interaction terms are grouped into divided-difference rules whose
// numerators vanish on the relevant diagonal: for a same-block pair the
// combined numerator is c alpha(z_i) d_i P - c alpha(z_j) d_j P, for a
// cross pair 2 alpha(z_j) d_j P + 2 kappa alpha(zt_J) dt_J P. The cross
// rule divides exactly precisely on the membership algebra.
#pragma once

#include "fbasis.hpp"
#include "rng.hpp"

namespace cspoly {

struct ReducedOperator {
    long N = 0, Ntilde = 0;
    UniPoly alpha;
    std::vector<Scalar> diffusion;  // slot i: diffusion * alpha(z_i) d_i^2
    std::vector<UniPoly> drift;     // slot i: drift_i(z_i) d_i
    struct PairRule {
        std::size_t i, j;
        Scalar pref_i, pref_j;  // [pref_i a(z_i) d_i P + pref_j a(z_j) d_j P]/(z_i - z_j)
    };
    std::vector<PairRule> pairs;
};

// H~_N of the non-deformed conjugation, Eq.-(redHN) shape
inline ReducedOperator build_reduced_operator(const ModelSpec& spec) {
    if (spec.Ntilde != 0) throw LengthMismatch("build_reduced_operator needs Ntilde = 0");
    ReducedOperator op;
    op.N = spec.N;
    op.Ntilde = 0;
    op.alpha = spec.ab.alpha();
    op.diffusion.assign(static_cast<std::size_t>(spec.N), Scalar(-1));
    op.drift.assign(static_cast<std::size_t>(spec.N), spec.ab.beta().scaled(Scalar(-1)));
    for (std::size_t j = 0; j < static_cast<std::size_t>(spec.N); ++j)
        for (std::size_t k = j + 1; k < static_cast<std::size_t>(spec.N); ++k)
            op.pairs.push_back({j, k, Scalar(-2) * spec.kappa, Scalar(2) * spec.kappa});
    return op;
}

// deformed reduced operator; interaction coefficients carry alpha of the
// differentiation variable and the z-block cross term enters with +2
inline ReducedOperator build_deformed_reduced_operator(const ModelSpec& spec) {
    if (!spec.kappa.is_symbolic() && spec.kappa.as_rational().is_zero())
        throw KappaZero("deformed operator needs invertible kappa");
    ReducedOperator op;
    op.N = spec.N;
    op.Ntilde = spec.Ntilde;
    op.alpha = spec.ab.alpha();
    std::size_t N = static_cast<std::size_t>(spec.N), Nt = static_cast<std::size_t>(spec.Ntilde);
    op.diffusion.assign(N + Nt, Scalar(-1));
    op.drift.assign(N + Nt, spec.ab.beta().scaled(Scalar(-1)));
    UniPoly tilde_drift =
        beta_m(spec.ab, -spec.kappa.inverse(), spec.kappa).scaled(spec.kappa);
    for (std::size_t J = 0; J < Nt; ++J) {
        op.diffusion[N + J] = spec.kappa;
        op.drift[N + J] = tilde_drift;
    }
    for (std::size_t j = 0; j < N; ++j)
        for (std::size_t k = j + 1; k < N; ++k)
            op.pairs.push_back({j, k, Scalar(-2) * spec.kappa, Scalar(2) * spec.kappa});
    for (std::size_t J = 0; J < Nt; ++J)
        for (std::size_t K = J + 1; K < Nt; ++K)
            op.pairs.push_back({N + J, N + K, Scalar(2), Scalar(-2)});
    for (std::size_t j = 0; j < N; ++j)
        for (std::size_t J = 0; J < Nt; ++J)
            op.pairs.push_back({j, N + J, Scalar(2), Scalar(2) * spec.kappa});
    return op;
}

inline ExpandedPoly apply_expanded(const ReducedOperator& op, const ExpandedPoly& P) {
    if (P.nvars() != static_cast<std::size_t>(op.N + op.Ntilde))
        throw LengthMismatch("apply: variable count mismatch");
    ExpandedPoly out(P.nvars());
    std::vector<ExpandedPoly> d1;
    d1.reserve(P.nvars());
    for (std::size_t i = 0; i < P.nvars(); ++i) d1.push_back(P.derivative(i));
    for (std::size_t i = 0; i < P.nvars(); ++i) {
        if (!op.diffusion[i].is_zero())
            out.add(d1[i].derivative(i).mul_univariate(i, op.alpha).scaled(op.diffusion[i]));
        if (!op.drift[i].is_zero()) out.add(d1[i].mul_univariate(i, op.drift[i]));
    }
    for (const auto& pr : op.pairs) {
        ExpandedPoly num = d1[pr.i].mul_univariate(pr.i, op.alpha).scaled(pr.pref_i);
        num.add(d1[pr.j].mul_univariate(pr.j, op.alpha).scaled(pr.pref_j));
        if (!num.is_zero()) out.add(num.divided_difference(pr.i, pr.j));
    }
    return out;
}

inline SymmetricPoly apply(const ReducedOperator& op, const SymmetricPoly& P) {
    return collect_symmetric(apply_expanded(op, P.expand()));
}
inline BiSymmetricPoly apply(const ReducedOperator& op, const BiSymmetricPoly& P) {
    return block_symmetrize(apply_expanded(op, P.expand()), static_cast<std::size_t>(op.N),
                            static_cast<std::size_t>(op.Ntilde));
}

// membership in Lambda_{N,Ntilde,kappa}: block symmetry plus the vanishing
// of (d_{z_j} + kappa d_{zt_J}) P on z_j = zt_J; one representative pair
// suffices by block symmetry
inline bool membership_check(const BiSymmetricPoly& P, const ModelSpec& spec) {
    if (P.nvars() != static_cast<std::size_t>(spec.N) ||
        P.nvars_tilde() != static_cast<std::size_t>(spec.Ntilde))
        throw LengthMismatch("membership_check: block mismatch");
    if (spec.N == 0 || spec.Ntilde == 0) return true;
    ExpandedPoly E = P.expand();
    ExpandedPoly D = E.derivative(0);
    D.add(E.derivative(static_cast<std::size_t>(spec.N)).scaled(spec.kappa));
    return D.substitute_equal(static_cast<std::size_t>(spec.N), 0).is_zero();
}

// all-pairs variant, used to property-test the single-pair reduction
inline bool membership_check_all_pairs(const BiSymmetricPoly& P, const ModelSpec& spec) {
    ExpandedPoly E = P.expand();
    for (std::size_t j = 0; j < static_cast<std::size_t>(spec.N); ++j)
        for (std::size_t J = 0; J < static_cast<std::size_t>(spec.Ntilde); ++J) {
            ExpandedPoly D = E.derivative(j);
            D.add(E.derivative(static_cast<std::size_t>(spec.N) + J).scaled(spec.kappa));
            if (!D.substitute_equal(static_cast<std::size_t>(spec.N) + J, j).is_zero())
                return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// source identity (variable masses), evaluated exactly at rational points

struct MassConfig {
    std::vector<Rational> masses;

    explicit MassConfig(std::vector<Rational> m) : masses(std::move(m)) {
        for (const auto& x : masses)
            if (x.is_zero()) throw MathError("mass parameters must be nonzero");
    }
    std::size_t size() const { return masses.size(); }
};

// drift field G_j(Z) = -w'_{m_j}(Z_j) + sum_{k != j} kappa m_j m_k/(Z_j - Z_k)
// with w'_m = (alpha' - 2 beta_m)/(4 alpha); poles exactly on coincident
// coordinates and zeros of alpha
class LogDerivField {
   public:
    LogDerivField(const AlphaBeta& ab, MassConfig masses, Rational kappa)
        : ab_(ab), masses_(std::move(masses)), kappa_(std::move(kappa)) {
        for (const auto& m : masses_.masses) {
            UniPoly bm = beta_m(ab_, Scalar(m), Scalar(kappa_));
            wnum_.push_back(ab_.alpha_prime() - bm.scaled(Scalar(2)));
        }
        wden_ = ab_.alpha().scaled(Scalar(4));
    }

    Scalar wprime(std::size_t j, const Scalar& z) const {
        Scalar den = wden_.eval(z);
        if (den.is_zero()) throw PoleAtPoint("alpha vanishes at evaluation point");
        return wnum_[j].eval(z) / den;
    }
    Scalar wsecond(std::size_t j, const Scalar& z) const {
        Scalar den = wden_.eval(z);
        if (den.is_zero()) throw PoleAtPoint("alpha vanishes at evaluation point");
        Scalar num = wnum_[j].derivative().eval(z) * den - wnum_[j].eval(z) * wden_.derivative().eval(z);
        return num / (den * den);
    }

    Scalar value(std::size_t j, const std::vector<Rational>& Z) const {
        Scalar g = -wprime(j, Scalar(Z[j]));
        for (std::size_t k = 0; k < masses_.size(); ++k) {
            if (k == j) continue;
            Rational diff = Z[j] - Z[k];
            if (diff.is_zero()) throw PoleAtPoint("coincident coordinates");
            g += Scalar(kappa_ * masses_.masses[j] * masses_.masses[k]) * Scalar(diff).inverse();
        }
        return g;
    }
    Scalar derivative(std::size_t j, const std::vector<Rational>& Z) const {
        Scalar g = -wsecond(j, Scalar(Z[j]));
        for (std::size_t k = 0; k < masses_.size(); ++k) {
            if (k == j) continue;
            Rational diff = Z[j] - Z[k];
            if (diff.is_zero()) throw PoleAtPoint("coincident coordinates");
            g -= Scalar(kappa_ * masses_.masses[j] * masses_.masses[k]) *
                 (Scalar(diff) * Scalar(diff)).inverse();
        }
        return g;
    }

   private:
    AlphaBeta ab_;
    MassConfig masses_;
    Rational kappa_;
    std::vector<UniPoly> wnum_;
    UniPoly wden_;
};

// two-body kernel W in z-coordinates, alpha_2 subtracted
inline Scalar interaction_W(const AlphaBeta& ab, const Scalar& z1, const Scalar& z2) {
    Scalar diff = z1 - z2;
    if (diff.is_zero()) throw PoleAtPoint("coincident coordinates in W");
    return (ab.alpha().eval(z1) + ab.alpha().eval(z2)) / (diff * diff) - ab.a2;
}

// ground-state constant of the source identity
inline Scalar source_constant(const MassConfig& masses, const AlphaBeta& ab,
                              const Rational& kappa) {
    Scalar m1(0), m2(0), m3(0);
    for (const auto& m : masses.masses) {
        m1 += Scalar(m);
        m2 += Scalar(m * m);
        m3 += Scalar(m * m * m);
    }
    Scalar k(kappa);
    Scalar third(Rational(1, 3)), half(Rational(1, 2));
    return -(k * k * ab.a2 * third) * (m1 * m1 * m1 - m3) -
           k * (ab.b1 - (Scalar(1) + k) * ab.a2) * half * (m1 * m1 - m2);
}

// Residual of (H - E_0) Phi_0 = 0 at each supplied point; all must vanish.
// R times the common denominator prod_j alpha(Z_j)^2 prod_{j<k}(Z_j - Z_k)^2
// is a polynomial of per-coordinate degree at most 2 deg(alpha) + 2N + 2, so
// vanishing on a grid exceeding that degree per coordinate would certify the
// identity deterministically; the seeded 20-point sample is the default.
inline std::vector<Rational> source_identity_residual(const MassConfig& masses,
                                                      const AlphaBeta& ab, const Rational& kappa,
                                                      const std::vector<std::vector<Rational>>& points) {
    if (kappa.is_zero()) throw KappaZero("source identity needs nonzero kappa");
    LogDerivField G(ab, masses, kappa);
    Scalar e0 = source_constant(masses, ab, kappa);
    std::vector<Rational> out;
    for (const auto& Z : points) {
        if (Z.size() != masses.size()) throw LengthMismatch("point dimension != mass count");
        Scalar r(0);
        for (std::size_t j = 0; j < masses.size(); ++j) {
            Scalar zj(Z[j]);
            Scalar gj = G.value(j, Z);
            Scalar vm = v_m(ab, Scalar(masses.masses[j]), Scalar(kappa)).eval(zj);
            Scalar one_body = vm - ab.alpha().eval(zj) * (gj * gj + G.derivative(j, Z)) -
                              Scalar(Rational(1, 2)) * ab.alpha_prime().eval(zj) * gj;
            r += one_body / Scalar(masses.masses[j]);
        }
        Scalar k(kappa), half(Rational(1, 2));
        for (std::size_t j = 0; j < masses.size(); ++j)
            for (std::size_t l = j + 1; l < masses.size(); ++l) {
                Scalar mj(masses.masses[j]), ml(masses.masses[l]);
                r += k * half * (k * mj * ml - Scalar(1)) * (mj + ml) *
                     interaction_W(ab, Scalar(Z[j]), Scalar(Z[l]));
            }
        r -= e0;
        out.push_back(r.as_rational());
    }
    return out;
}

// seeded sample of evaluation points with pairwise-distinct coordinates
// avoiding zeros of alpha; heights stay modest so residual arithmetic is fast
inline std::vector<std::vector<Rational>> sample_points(std::size_t count, std::size_t dim,
                                                        const AlphaBeta& ab,
                                                        std::uint64_t seed = 0xC5D0) {
    Rng rng(seed);
    std::vector<std::vector<Rational>> pts;
    while (pts.size() < count) {
        std::vector<Rational> Z;
        bool ok = true;
        for (std::size_t i = 0; i < dim && ok; ++i) {
            Rational z = rng.rational(1000, 50);
            if (ab.alpha().eval(Scalar(z)).is_zero()) ok = false;
            for (const auto& prev : Z)
                if (prev == z) ok = false;
            Z.push_back(z);
        }
        if (ok) pts.push_back(std::move(Z));
    }
    return pts;
}

}  // namespace cspoly
