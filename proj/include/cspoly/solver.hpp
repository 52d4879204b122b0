// Triangular solve for the eigenpolynomials: close the index set under the
// action moves, walk it in the descending linear extension of the tail
// order, and divide accumulated contributions by eigenvalue gaps. Also the
// explicit case-II nested series and the (M, Mtilde) representation tools.
#pragma once

#include <set>

#include "operators.hpp"

namespace cspoly {

struct EigenResult {
    IntVector n;
    long M = 0, Mt = 0;
    FExpansion expansion;  // u with u(n) = 1
    Scalar eigenvalue;     // absolute, groundstate included
    Scalar excess;         // E - E_0
    BiSymmetricPoly monomial_form;
    // symbolic mode: positive rational kappa where some encountered gap
    // denominator vanishes (couplings where the fixed-kappa solve would fail)
    std::vector<Rational> degenerate_kappas;
};

// indices reachable from n by repeated moves, every intermediate tail-valid;
// ordered by the descending linear extension, n first
inline std::vector<IntVector> support_set(const IntVector& n, const ModelSpec& spec, long M,
                                          long Mt) {
    std::set<IntVector> seen{n};
    std::vector<IntVector> frontier{n};
    while (!frontier.empty()) {
        std::vector<IntVector> next;
        for (const auto& v : frontier)
            for (const auto& [t, c] : action_targets(v, spec, M, Mt))
                if (seen.insert(t).second) next.push_back(t);
        frontier = std::move(next);
    }
    std::vector<IntVector> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), linear_ext_desc);
    return out;
}

inline EigenResult solve_eigenfunction(const IntVector& n, const ModelSpec& spec, long M,
                                       long Mt) {
    if (static_cast<long>(n.size()) != M + Mt)
        throw LengthMismatch("solve_eigenfunction: index length != M + Mtilde");
    if (!tails_nonnegative(n))
        throw MathError("solve_eigenfunction: index has a negative tail sum " + n.str());

    std::vector<IntVector> support = support_set(n, spec, M, Mt);
    std::map<IntVector, std::size_t> pos;
    for (std::size_t i = 0; i < support.size(); ++i) pos.emplace(support[i], i);

    Scalar en = eigenvalue_excess_deformed(n, spec, M, Mt);
    std::vector<Scalar> u(support.size(), Scalar(0));
    u[0] = Scalar(1);

    // contributions flow only downward in the order, so a single pass
    // computes each u(m) before it is needed
    std::vector<Scalar> inflow(support.size(), Scalar(0));
    std::set<Rational> bad_kappas;
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (i > 0) {
            if (inflow[i].is_zero()) {
                u[i] = Scalar(0);
            } else {
                Scalar gap = en - eigenvalue_excess_deformed(support[i], spec, M, Mt);
                if (gap.is_zero())
                    throw DegenerateEigenvalue("E_n = E_m within the support, m = " +
                                               support[i].str());
                if (gap.is_symbolic())
                    for (const auto& r : positive_rational_roots(gap.as_krational().num()))
                        bad_kappas.insert(r);
                u[i] = inflow[i] / gap;
            }
        }
        if (u[i].is_zero()) continue;
        for (const auto& [t, c] : action_targets(support[i], spec, M, Mt))
            inflow[pos.at(t)] += u[i] * c;
    }

    EigenResult res;
    res.n = n;
    res.M = M;
    res.Mt = Mt;
    res.excess = en;
    res.eigenvalue = eigenvalue_deformed(n, spec, M, Mt);
    res.monomial_form = BiSymmetricPoly(static_cast<std::size_t>(spec.N),
                                        static_cast<std::size_t>(spec.Ntilde));
    res.expansion.M = M;
    res.expansion.Mt = Mt;
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (u[i].is_zero()) continue;
        res.expansion.terms.emplace(support[i], u[i]);
        res.monomial_form.add(f_deformed(support[i], spec, M, Mt).scaled(u[i]));
    }
    res.degenerate_kappas.assign(bad_kappas.begin(), bad_kappas.end());
    return res;
}

// non-deformed convenience: M = N, Mt = 0
inline EigenResult solve_eigenfunction(const IntVector& n, const ModelSpec& spec) {
    return solve_eigenfunction(n, spec, spec.N, 0);
}

// the explicit nested series of the Sutherland case: coefficients are
// products of move weights and inverse eigenvalue gaps. Move sequences are
// built from the tail, so each gap factor is the root eigenvalue against a
// suffix sum; the factor at a node depends only on that node, which lets
// the ordered-sequence sum collapse onto the reachability graph.
inline FExpansion case_II_closed_form(const IntVector& n, const ModelSpec& spec) {
    if (!(spec.ab.a2 == Scalar(-1) && spec.ab.a1.is_zero() && spec.ab.a0.is_zero() &&
          spec.ab.b1 == Scalar(-1) && spec.ab.b0.is_zero()))
        throw MathError("case_II_closed_form is specific to alpha = -z^2, beta = -z");
    if (!tails_nonnegative(n)) throw MathError("index has a negative tail sum");
    const long N = spec.N;
    Scalar en = eigenvalue_excess(n, spec);
    Scalar step = Scalar(2) * spec.kappa * (Scalar(1) - spec.kappa);

    auto each_move = [&](const IntVector& cur, const std::function<void(const IntVector&, long)>& f) {
        for (long j = 0; j < N; ++j)
            for (long k = j + 1; k < N; ++k)
                for (long nu = 1;; ++nu) {
                    IntVector next = cur;
                    next[static_cast<std::size_t>(j)] += nu;
                    next[static_cast<std::size_t>(k)] -= nu;
                    if (!tails_nonnegative(next)) break;
                    f(next, nu);
                }
    };

    // reachability closure, then one pass in the descending linear
    // extension: accumulated[v] collects, over every move sequence from n
    // to v, the product of nu-weights and gap inverses
    std::set<IntVector> seen{n};
    std::vector<IntVector> frontier{n};
    while (!frontier.empty()) {
        std::vector<IntVector> next_frontier;
        for (const auto& v : frontier)
            each_move(v, [&](const IntVector& t, long) {
                if (seen.insert(t).second) next_frontier.push_back(t);
            });
        frontier = std::move(next_frontier);
    }
    std::vector<IntVector> order(seen.begin(), seen.end());
    std::sort(order.begin(), order.end(), linear_ext_desc);

    std::map<IntVector, Scalar> accumulated;
    for (const auto& v : order) accumulated.emplace(v, Scalar(0));
    accumulated.at(n) = Scalar(1);
    for (const auto& cur : order) {
        Scalar coeff = accumulated.at(cur);
        if (coeff.is_zero()) continue;
        each_move(cur, [&](const IntVector& next, long nu) {
            Scalar gap = en - eigenvalue_excess(next, spec);
            if (gap.is_zero())
                throw DegenerateEigenvalue("zero gap in the case-II series at " + next.str());
            accumulated.at(next) += coeff * step * Scalar(nu) / gap;
        });
    }

    FExpansion out;
    out.M = N;
    out.Mt = 0;
    for (const auto& [key, c] : accumulated)
        if (!c.is_zero()) out.terms.emplace(key, c);
    return out;
}

// minimal (M, Mtilde): M = j minimizing j + lambda_{j+1}, Mtilde the part
inline std::pair<long, long> choose_representation(const Partition& lam) {
    long best_j = 0;
    long best = lam.part(0);
    for (long j = 1; j <= static_cast<long>(lam.length()); ++j) {
        long v = j + lam.part(static_cast<std::size_t>(j));
        if (v < best) {
            best = v;
            best_j = j;
        }
    }
    return {best_j, lam.part(static_cast<std::size_t>(best_j))};
}

// index vector labelling lambda in the (M, Mtilde) family: the first M rows,
// then the conjugate of what remains
inline IntVector representation_index(const Partition& lam, long M, long Mt) {
    if (lam.part(static_cast<std::size_t>(M)) > Mt)
        throw LengthMismatch("partition does not fit the (M, Mtilde) representation");
    std::vector<long> v;
    for (long j = 0; j < M; ++j) v.push_back(lam.part(static_cast<std::size_t>(j)));
    std::vector<long> rest(lam.parts.begin() + std::min<std::size_t>(lam.length(),
                                                                     static_cast<std::size_t>(M)),
                           lam.parts.end());
    Partition mu = conjugate(Partition(std::move(rest)));
    for (long j = 0; j < Mt; ++j) v.push_back(mu.part(static_cast<std::size_t>(j)));
    return IntVector(std::move(v));
}

// proportionality constant between two representations of one eigenfunction
inline Scalar representation_equivalent(const Partition& lam, const ModelSpec& spec,
                                        std::pair<long, long> rep1,
                                        std::pair<long, long> rep2) {
    if (!in_fat_hook(lam, spec.N, spec.Ntilde))
        throw NotInFatHook("partition outside the fat hook: " + lam.str());
    BiSymmetricPoly P1 =
        solve_eigenfunction(representation_index(lam, rep1.first, rep1.second), spec, rep1.first,
                            rep1.second)
            .monomial_form;
    BiSymmetricPoly P2 =
        solve_eigenfunction(representation_index(lam, rep2.first, rep2.second), spec, rep2.first,
                            rep2.second)
            .monomial_form;
    if (P1.is_zero() && P2.is_zero()) return Scalar(1);
    if (P1.is_zero() || P2.is_zero()) throw NotProportional("one representation vanishes");
    const auto& [key, c2] = *P2.terms().begin();
    Scalar c = P1.coeff(key) / c2;
    if (c.is_zero() || !(P1 == P2.scaled(c)))
        throw NotProportional("representations are not proportional for " + lam.str());
    return c;
}

}  // namespace cspoly
