// Independent ground-truth implementations used only for cross-validation:
// Schur polynomials by the Jacobi-Trudi determinant, monic Jack polynomials
// by Gram-Schmidt against the power-sum inner product, classical
// one-variable polynomials by their three-term recurrences, and brute-force
// truncated series extraction straight from the defining kernel expansions.
// These deliberately share no assembly code with the production builders.
#pragma once

#include <memory>

#include "solver.hpp"

namespace cspoly {

// complete homogeneous h_r in N variables
inline SymmetricPoly complete_homogeneous(long r, long N) {
    SymmetricPoly h(static_cast<std::size_t>(N));
    if (r < 0) return h;
    for (const auto& lam : partitions_of(r, N)) h.add_term(lam, Scalar(1));
    return h;
}

// s_lambda = det(h_{lambda_i - i + j}) over 1 <= i, j <= l(lambda)
inline SymmetricPoly schur(const Partition& lam, long N) {
    if (static_cast<long>(lam.length()) > N) throw LengthMismatch("schur: l(lambda) > N");
    std::size_t l = lam.length();
    if (l == 0) return SymmetricPoly::constant(static_cast<std::size_t>(N), Scalar(1));
    std::vector<std::size_t> perm(l);
    for (std::size_t i = 0; i < l; ++i) perm[i] = i;
    SymmetricPoly acc(static_cast<std::size_t>(N));
    do {
        long sign = 1;
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = i + 1; j < l; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        SymmetricPoly prod = SymmetricPoly::constant(static_cast<std::size_t>(N), Scalar(sign));
        for (std::size_t i = 0; i < l && !prod.is_zero(); ++i) {
            long idx = lam.parts[i] - static_cast<long>(i) + static_cast<long>(perm[i]);
            prod = mono_mul(prod, complete_homogeneous(idx, N));
        }
        acc.add(prod);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

// z_lambda = prod_i i^{a_i} a_i!
inline Rational z_lambda(const Partition& lam) {
    Rational z(1);
    long run = 1;
    for (std::size_t i = 0; i < lam.length(); ++i) {
        z *= Rational(lam.parts[i]);
        if (i + 1 < lam.length() && lam.parts[i + 1] == lam.parts[i]) {
            ++run;
            z *= Rational(run);
        } else {
            run = 1;
        }
    }
    return z;
}

// diagonal of the power-sum inner product: <p_lambda, p_lambda> =
// z_lambda (1/kappa)^{l(lambda)}; nonzero for every nonzero kappa
inline Scalar power_sum_norm(const Partition& lam, const Scalar& kappa) {
    if (!kappa.is_symbolic() && kappa.as_rational().is_zero())
        throw KappaZero("power-sum inner product needs nonzero kappa");
    return Scalar(z_lambda(lam)) * kappa.inverse().pow(static_cast<long>(lam.length()));
}

namespace detail {

struct JackBasis {
    std::vector<Partition> parts;                 // all partitions of d
    std::map<Partition, std::size_t> pos;
    Matrix gram;                                  // <m_mu, m_nu> at full length
};

// Gram matrix of the monomial basis of degree d under
// <p_lambda, p_mu> = delta z_lambda kappa^{-l(lambda)}, computed in d
// variables where monomials and partitions of d correspond bijectively
inline JackBasis jack_basis(long d, const Scalar& kappa) {
    static MemoTable<std::shared_ptr<JackBasis>> memo;
    std::string key = kappa.key() + "|" + std::to_string(d);
    auto ptr = memo.get_or_compute(key, [&] {
        auto jb = std::make_shared<JackBasis>();
        jb->parts = partitions_of(d, d);
        std::sort(jb->parts.begin(), jb->parts.end());
        for (std::size_t i = 0; i < jb->parts.size(); ++i) jb->pos.emplace(jb->parts[i], i);
        const std::size_t n = jb->parts.size();

        // power sums in the monomial basis (integer matrix)
        Matrix P(n, std::vector<Scalar>(n, Scalar(0)));
        for (std::size_t r = 0; r < n; ++r) {
            SymmetricPoly p = SymmetricPoly::constant(static_cast<std::size_t>(d), Scalar(1));
            for (long part : jb->parts[r].parts)
                p = mono_mul(p, SymmetricPoly::monomial(static_cast<std::size_t>(d),
                                                        Partition({part})));
            for (const auto& [mu, c] : p.terms()) P[r][jb->pos.at(mu)] = c;
        }
        // m = P^{-1} p
        Matrix Pinv(n, std::vector<Scalar>(n, Scalar(0)));
        for (std::size_t col = 0; col < n; ++col) {
            std::vector<Scalar> e(n, Scalar(0));
            e[col] = Scalar(1);
            // solve P^T x = e: x gives column of (P^T)^{-1} = rows of P^{-1}
            Matrix Pt(n, std::vector<Scalar>(n, Scalar(0)));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) Pt[i][j] = P[j][i];
            std::vector<Scalar> x = solve_linear(Pt, e);
            for (std::size_t i = 0; i < n; ++i) Pinv[col][i] = x[i];
        }
        jb->gram.assign(n, std::vector<Scalar>(n, Scalar(0)));
        for (std::size_t mu = 0; mu < n; ++mu)
            for (std::size_t nu = mu; nu < n; ++nu) {
                Scalar g(0);
                for (std::size_t rho = 0; rho < n; ++rho) {
                    if (Pinv[mu][rho].is_zero() || Pinv[nu][rho].is_zero()) continue;
                    g += Pinv[mu][rho] * Pinv[nu][rho] * power_sum_norm(jb->parts[rho], kappa);
                }
                jb->gram[mu][nu] = g;
                jb->gram[nu][mu] = g;
            }
        return jb;
    });
    return *ptr;
}

}  // namespace detail

// monic Jack polynomial: m_lambda plus dominance-lower monomials, orthogonal
// to every m_mu with mu strictly dominance-below lambda
inline SymmetricPoly jack_monic(const Partition& lam, long N, const Scalar& kappa) {
    if (static_cast<long>(lam.length()) > N) throw LengthMismatch("jack_monic: l(lambda) > N");
    if (!kappa.is_symbolic() && kappa.as_rational().is_zero())
        throw KappaZero("jack_monic needs nonzero kappa");
    long d = weight(lam);
    SymmetricPoly out(static_cast<std::size_t>(N));
    if (d == 0) return SymmetricPoly::constant(static_cast<std::size_t>(N), Scalar(1));
    detail::JackBasis jb = detail::jack_basis(d, kappa);

    std::vector<std::size_t> lower;
    for (std::size_t i = 0; i < jb.parts.size(); ++i)
        if (jb.parts[i] != lam && dominance_leq(jb.parts[i], lam)) lower.push_back(i);
    std::size_t li = jb.pos.at(lam);

    Matrix A(lower.size(), std::vector<Scalar>(lower.size(), Scalar(0)));
    std::vector<Scalar> rhs(lower.size(), Scalar(0));
    for (std::size_t r = 0; r < lower.size(); ++r) {
        for (std::size_t c = 0; c < lower.size(); ++c) A[r][c] = jb.gram[lower[c]][lower[r]];
        rhs[r] = -jb.gram[li][lower[r]];
    }
    std::vector<Scalar> coeff =
        lower.empty() ? std::vector<Scalar>{} : solve_linear(A, rhs);

    out.add_term(lam, Scalar(1));
    for (std::size_t c = 0; c < lower.size(); ++c) {
        const Partition& mu = jb.parts[lower[c]];
        if (static_cast<long>(mu.length()) <= N) out.add_term(mu, coeff[c]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// classical one-variable polynomials via three-term recurrences

struct ClassicalParams {
    Rational omega{1};
    Rational a{Rational(2, 3)};
    Rational b{Rational(3, 5)};
    Rational c{Rational(1, 2)};
};

// p_n(z) of Table 2, up to overall normalization (case I absorbs the
// sqrt(omega) rescaling into the recurrence so coefficients stay rational)
inline UniPoly classical_1var(const std::string& which, long n, const ClassicalParams& prm) {
    auto z = UniPoly({Scalar(0), Scalar(1)});
    auto cst = [](const Rational& r) { return Scalar(r); };
    UniPoly p0 = UniPoly::constant(Scalar(1));
    if (n == 0) return p0;
    UniPoly p1;
    std::function<UniPoly(long, const UniPoly&, const UniPoly&)> step;

    if (which == "I") {
        // Hermite H_n(sqrt(omega) z) / omega^{n/2}
        p1 = z.scaled(Scalar(2));
        step = [&, w = prm.omega](long m, const UniPoly& pm, const UniPoly& pm1) {
            return z.scaled(Scalar(2)) * pm - pm1.scaled(Scalar(Rational(2 * m) / w));
        };
    } else if (which == "IV") {
        // Laguerre L_n^{(a - 1/2)}(omega z)
        Rational g = prm.a - Rational(1, 2);
        UniPoly x = z.scaled(cst(prm.omega));
        p1 = UniPoly::constant(cst(g + 1)) - x;
        step = [&, g, x](long m, const UniPoly& pm, const UniPoly& pm1) {
            UniPoly t = (UniPoly::constant(cst(Rational(2 * m) + g + 1)) - x) * pm -
                        pm1.scaled(cst(Rational(m) + g));
            return t.scaled(Scalar(Rational(1, m + 1)));
        };
    } else if (which == "V") {
        // Gegenbauer C_n^{(a)}(z)
        p1 = z.scaled(cst(prm.a * 2));
        step = [&, a = prm.a](long m, const UniPoly& pm, const UniPoly& pm1) {
            UniPoly t = z.scaled(cst((Rational(m) + a) * 2)) * pm -
                        pm1.scaled(cst(Rational(m) + a * 2 - 1));
            return t.scaled(Scalar(Rational(1, m + 1)));
        };
    } else if (which == "VI") {
        // Jacobi P_n^{(a-1/2, b-1/2)}(z)
        Rational A = prm.a - Rational(1, 2), B = prm.b - Rational(1, 2);
        p1 = UniPoly::constant(cst((A - B) / 2)) + z.scaled(cst((A + B + 2) / 2));
        step = [&, A, B](long m, const UniPoly& pm, const UniPoly& pm1) {
            Rational s = A + B;
            Rational c1 = (Rational(2 * m) + s + 1) * (Rational(2 * m) + s + 2) *
                          (Rational(2 * m) + s);
            Rational c2 = (Rational(2 * m) + s + 1) * (A * A - B * B);
            Rational c3 = Rational(2) * (Rational(m) + A) * (Rational(m) + B) *
                          (Rational(2 * m) + s + 2);
            Rational den = Rational(2) * Rational(m + 1) * (Rational(m) + s + 1) *
                           (Rational(2 * m) + s);
            if (den.is_zero()) throw MathError("Jacobi recurrence pole");
            UniPoly t = (z.scaled(cst(c1)) + UniPoly::constant(cst(c2))) * pm -
                        pm1.scaled(cst(c3));
            return t.scaled(cst(den.inverse()));
        };
    } else if (which == "VII") {
        // generalized Bessel y_n(z, 1-2c, 2 omega), Krall-Frink convention
        Rational a = Rational(1) - prm.c * 2, b = prm.omega * 2;
        p1 = UniPoly::constant(Scalar(1)) + z.scaled(cst(a / b));
        step = [&, a, b](long m, const UniPoly& pm, const UniPoly& pm1) {
            Rational d1 = Rational(m) + a - 1;
            Rational d2 = Rational(2 * m) + a - 2;
            if (d1.is_zero() || d2.is_zero())
                throw MathError("Bessel recurrence pole (degenerate parameter)");
            Rational A = (Rational(2 * m) + a) * (Rational(2 * m) + a - 1) / (b * d1);
            Rational B = (a - 2) * (Rational(2 * m) + a - 1) / (d1 * d2);
            Rational C = Rational(m) * (Rational(2 * m) + a) / (d1 * d2);
            return (z.scaled(cst(A)) + UniPoly::constant(cst(B))) * pm + pm1.scaled(cst(C));
        };
    } else {
        throw MathError("classical_1var: unsupported case " + which);
    }

    UniPoly prev = p0, cur = p1;
    for (long m = 1; m < n; ++m) {
        UniPoly nxt = step(m, cur, prev);
        prev = cur;
        cur = nxt;
    }
    return cur;
}

// ---------------------------------------------------------------------------
// brute-force truncated series extraction from the defining expansions

namespace detail {

// kernel factor of one slot as a list: coefficient of w^{-r} is an expanded
// polynomial in (z, zt); built by multiplying one-variable series directly
inline std::vector<ExpandedPoly> slot_kernel_series(bool tilde_slot, long rmax,
                                                    const ModelSpec& spec) {
    std::size_t nv = static_cast<std::size_t>(spec.N + spec.Ntilde);
    std::vector<ExpandedPoly> acc(static_cast<std::size_t>(rmax) + 1, ExpandedPoly(nv));
    acc[0].add_term(std::vector<long>(nv, 0), Scalar(1));
    Scalar coupling = tilde_slot ? spec.kappa.inverse() : spec.kappa;
    for (std::size_t v = 0; v < nv; ++v) {
        bool own = tilde_slot ? v >= static_cast<std::size_t>(spec.N)
                              : v < static_cast<std::size_t>(spec.N);
        std::vector<ExpandedPoly> next(static_cast<std::size_t>(rmax) + 1, ExpandedPoly(nv));
        for (long r = 0; r <= rmax; ++r)
            for (long t = 0; t <= r; ++t) {
                // own block: (1 - z_v/w)^(-coupling); other block: (1 - z_v/w)
                Scalar wgt = own ? scalar_rising_binomial(coupling, t)
                                 : (t == 0 ? Scalar(1) : (t == 1 ? Scalar(-1) : Scalar(0)));
                if (wgt.is_zero()) continue;
                ExpandedPoly shifted(nv);
                for (const auto& [k, c] : acc[static_cast<std::size_t>(r - t)].terms()) {
                    auto nk = k;
                    nk[v] += t;
                    shifted.add_term(nk, c * wgt);
                }
                next[static_cast<std::size_t>(r)].add(shifted);
            }
        acc = std::move(next);
    }
    return acc;
}

}  // namespace detail

// the coefficient of w^{-n} in the defining kernel expansion, computed by
// truncated multiplication of every factor series; no shifted-product
// bookkeeping is shared with f_deformed
inline ExpandedPoly series_extract_f(const IntVector& n, const ModelSpec& spec, long M, long Mt,
                                     long cutoff = 12) {
    if (static_cast<long>(n.size()) != M + Mt)
        throw LengthMismatch("series_extract_f: index length != M + Mtilde");
    std::vector<long> tails = tail_sums(n);
    std::size_t nv = static_cast<std::size_t>(spec.N + spec.Ntilde);
    if (weight(n) > cutoff) throw CutoffExceeded("series_extract_f: |n| beyond cutoff");
    ExpandedPoly zero(nv);
    if (weight(n) < 0) return zero;

    long L = M + Mt;
    // prefactor: map from w-exponent vector to Scalar; a shift across the
    // pair (a, b) lowers every suffix sum strictly between them, which
    // bounds its order
    std::map<std::vector<long>, Scalar> pref;
    pref.emplace(std::vector<long>(static_cast<std::size_t>(L), 0), Scalar(1));
    for (long a = 0; a < L; ++a)
        for (long b = a + 1; b < L; ++b) {
            int kind = a < M ? (b < M ? 0 : 2) : 1;
            long tmax = tails[static_cast<std::size_t>(b)];
            for (long i = a + 1; i < b; ++i)
                tmax = std::min(tmax, tails[static_cast<std::size_t>(i)]);
            tmax = std::max(tmax, 0L);
            std::map<std::vector<long>, Scalar> nxt;
            for (long t = 0; t <= tmax; ++t) {
                Scalar wgt(1);
                if (t > 0) {
                    if (kind == 0) wgt = scalar_binomial(spec.kappa, t);
                    else if (kind == 1)
                        wgt = scalar_binomial(spec.kappa.inverse(), t);
                    if (kind != 2 && t % 2 == 1) wgt = -wgt;
                }
                if (wgt.is_zero()) continue;
                for (const auto& [k, c] : pref) {
                    auto nk = k;
                    nk[static_cast<std::size_t>(a)] += t;
                    nk[static_cast<std::size_t>(b)] -= t;
                    auto it = nxt.find(nk);
                    if (it == nxt.end()) nxt.emplace(nk, c * wgt);
                    else
                        it->second += c * wgt;
                }
            }
            pref = std::move(nxt);
        }

    // absorb slot kernels one at a time, fixing each slot's exponent
    std::map<std::vector<long>, ExpandedPoly> acc;
    for (const auto& [k, c] : pref) {
        ExpandedPoly one(nv);
        one.add_term(std::vector<long>(nv, 0), c);
        auto it = acc.find(k);
        if (it == acc.end()) acc.emplace(k, one);
        else
            it->second.add(one);
    }
    for (long s = 0; s < L; ++s) {
        long rmax = 0;
        for (const auto& [k, poly] : acc)
            rmax = std::max(rmax, n[static_cast<std::size_t>(s)] + k[static_cast<std::size_t>(s)]);
        auto kernel = detail::slot_kernel_series(s >= M, std::max(rmax, 0L), spec);
        std::map<std::vector<long>, ExpandedPoly> nxt;
        for (const auto& [k, poly] : acc) {
            long r = n[static_cast<std::size_t>(s)] + k[static_cast<std::size_t>(s)];
            if (r < 0) continue;
            ExpandedPoly prod = poly * kernel[static_cast<std::size_t>(r)];
            if (prod.is_zero()) continue;
            auto nk = k;
            nk[static_cast<std::size_t>(s)] = -n[static_cast<std::size_t>(s)];
            auto it = nxt.find(nk);
            if (it == nxt.end()) nxt.emplace(nk, prod);
            else
                it->second.add(prod);
        }
        acc = std::move(nxt);
    }
    ExpandedPoly out(nv);
    for (const auto& [k, poly] : acc) out.add(poly);
    return out;
}

// coefficient of m_lambda(w^{-1}) in the Cauchy-type kernel Pi(z, w), by the
// same brute-force route; cross-validates g_partition
inline ExpandedPoly series_extract_pi(const Partition& lam, long N, const ModelSpec& spec) {
    ModelSpec flat(spec.ab, spec.kappa, N, 0);
    IntVector n = lam.padded(static_cast<std::size_t>(N));
    // Pi has no prefactor: extract per-slot coefficients directly
    ExpandedPoly out(static_cast<std::size_t>(N));
    out.add_term(std::vector<long>(static_cast<std::size_t>(N), 0), Scalar(1));
    for (long s = 0; s < N; ++s) {
        auto kernel = detail::slot_kernel_series(false, n[static_cast<std::size_t>(s)], flat);
        out = out * kernel[static_cast<std::size_t>(n[static_cast<std::size_t>(s)])];
    }
    return out;
}

}  // namespace cspoly
