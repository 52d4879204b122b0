#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cspoly/operators.hpp>
#include <cspoly/oracles.hpp>

using namespace cspoly;

namespace {
IntVector iv(std::vector<long> v) { return IntVector(std::move(v)); }
Partition pt(std::vector<long> v) { return Partition(std::move(v)); }
Scalar K() { return Scalar::kappa(); }
Scalar rb(long s) { return Scalar(KRational(rising_binomial(s))); }

ModelSpec sutherland(long N, long Ntilde = 0) { return preset_spec("II", K(), N, Ntilde); }
}  // namespace

TEST_CASE("g rows") {
    ModelSpec s = sutherland(2);
    CHECK(g_row(0, 2, s) == SymmetricPoly::constant(2, Scalar(1)));
    CHECK(g_row(1, 2, s) == SymmetricPoly::monomial(2, pt({1}), K()));
    SymmetricPoly g2(2);
    g2.add_term(pt({2}), rb(2));
    g2.add_term(pt({1, 1}), K() * K());
    CHECK(g_row(2, 2, s) == g2);
    CHECK(g_row(2, 1, sutherland(1)) == SymmetricPoly::monomial(1, pt({2}), rb(2)));
}

TEST_CASE("g partitions multiply rows") {
    ModelSpec s = sutherland(2);
    CHECK(g_partition(pt({}), 2, s) == SymmetricPoly::constant(2, Scalar(1)));
    SymmetricPoly g11(2);
    g11.add_term(pt({2}), K() * K());
    g11.add_term(pt({1, 1}), Scalar(2) * K() * K());
    CHECK(g_partition(pt({1, 1}), 2, s) == g11);
    CHECK(g_partition(pt({2}), 2, s) == g_row(2, 2, s));
}

TEST_CASE("f_vector frozen examples") {
    for (long n = 0; n <= 5; ++n)
        CHECK(f_vector(iv({n}), sutherland(1)) ==
              SymmetricPoly::monomial(1, pt({n}), rb(n)));

    CHECK(f_vector(iv({0, 1}), sutherland(2)) ==
          SymmetricPoly::monomial(2, pt({1}), K() * (Scalar(1) - K())));

    SymmetricPoly f11(2);
    f11.add_term(pt({2}), K() * K() * (Scalar(1) - K()) * Scalar(Rational(1, 2)));
    f11.add_term(pt({1, 1}), K() * K() * (Scalar(2) - K()));
    CHECK(f_vector(iv({1, 1}), sutherland(2)) == f11);

    CHECK(f_vector(iv({0, -1}), sutherland(2)).is_zero());
    CHECK(f_vector(iv({2, -1}), sutherland(2)).is_zero());
}

namespace {
// coefficients of P over the g basis of its degree, by an exact solve
std::map<Partition, Scalar> g_expansion(const SymmetricPoly& P, const ModelSpec& s) {
    long d = 0;
    REQUIRE(P.is_homogeneous(&d));
    auto lams = partitions_of(d, s.N);
    std::map<Partition, std::size_t> pos;
    for (std::size_t i = 0; i < lams.size(); ++i) pos.emplace(lams[i], i);
    Matrix A(lams.size(), std::vector<Scalar>(lams.size(), Scalar(0)));
    for (std::size_t i = 0; i < lams.size(); ++i) {
        SymmetricPoly g = g_partition(lams[i], s.N, s);
        for (const auto& [mu, c] : g.terms()) A[pos.at(mu)][i] = c;
    }
    std::vector<Scalar> rhs(lams.size(), Scalar(0));
    for (const auto& [mu, c] : P.terms()) rhs[pos.at(mu)] = c;
    auto x = solve_linear(A, rhs);
    std::map<Partition, Scalar> out;
    for (std::size_t i = 0; i < lams.size(); ++i)
        if (!x[i].is_zero()) out.emplace(lams[i], x[i]);
    return out;
}
}  // namespace

TEST_CASE("support and homogeneity of f_n") {
    for (long N = 1; N <= 3; ++N) {
        ModelSpec s = sutherland(N);
        for (const auto& n : tail_valid_vectors(N, -2, 4, false, 0)) {
            if (weight(n) > 6) continue;
            SymmetricPoly f = f_vector(n, s);
            if (!tails_nonnegative(n)) {
                CHECK(f.is_zero());
                continue;
            }
            long deg = 0;
            CHECK(f.is_homogeneous(&deg));
            if (!f.is_zero()) CHECK(deg == weight(n));
            // the triangular statement lives in the g basis: only g_mu with
            // mu tail-below n appear, and a partition n carries g_n with
            // unit coefficient
            if (f.is_zero() || weight(n) > 4) continue;
            for (const auto& [mu, c] : g_expansion(f, s))
                CHECK(tail_order_leq(mu.padded(static_cast<std::size_t>(N)), n));
        }
        for (const auto& lam : partitions_of(4, N)) {
            auto ge = g_expansion(f_vector(lam.padded(static_cast<std::size_t>(N)), s), s);
            CHECK(ge.at(lam) == Scalar(1));
        }
    }
}

TEST_CASE("deformed f: one-slot examples") {
    ModelSpec s = sutherland(1, 1);
    BiSymmetricPoly f1 = f_deformed(iv({1}), s, 1, 0);
    BiSymmetricPoly expect(1, 1);
    expect.add_term(iv({1, 0}), K());
    expect.add_term(iv({0, 1}), Scalar(-1));
    CHECK(f1 == expect);  // kappa z - zt

    BiSymmetricPoly f01 = f_deformed(iv({1}), s, 0, 1);
    BiSymmetricPoly e01(1, 1);
    e01.add_term(iv({1, 0}), Scalar(-1));
    e01.add_term(iv({0, 1}), K().inverse());
    CHECK(f01 == e01);  // zt/kappa - z

    BiSymmetricPoly f11 = f_deformed(iv({1, 1}), s, 1, 1);
    BiSymmetricPoly e11(1, 1);
    e11.add_term(iv({2, 0}), K() * (K() - Scalar(1)) * Scalar(Rational(1, 2)));
    e11.add_term(iv({1, 1}), Scalar(2) - K());
    e11.add_term(iv({0, 2}), -K().inverse());
    CHECK(f11 == e11);

    CHECK(f_deformed(iv({1, -1}), s, 1, 1).is_zero());
    CHECK_THROWS_AS(f_deformed(iv({1}), s, 1, 1), LengthMismatch);
}

TEST_CASE("deformed f reduces to f_vector when the tilde data is empty") {
    for (long N = 1; N <= 3; ++N) {
        ModelSpec s = sutherland(N);
        for (const auto& n : tail_valid_vectors(N, -1, 3, false, 0)) {
            if (weight(n) > 4 || !tails_nonnegative(n)) continue;
            CHECK(f_deformed(n, s, N, 0) == to_bisymmetric(f_vector(n, s)));
        }
    }
}

TEST_CASE("deformed f: stability in Mtilde") {
    ModelSpec s = sutherland(1, 1);
    for (auto [M, Mt] : {std::pair<long, long>{1, 0}, {0, 1}, {1, 1}, {2, 0}}) {
        for (const auto& n : tail_valid_vectors(M + Mt, -2, 4, false, 0)) {
            if (weight(n) > 4 || !tails_nonnegative(n)) continue;
            long ell = static_cast<long>(n.size());
            while (ell > 0 && n[static_cast<std::size_t>(ell - 1)] == 0) --ell;
            if (M + Mt < ell) continue;
            BiSymmetricPoly base = f_deformed(n, s, M, Mt);
            for (long Kpad : {1L, 2L}) {
                std::vector<long> padded(n.parts);
                padded.resize(static_cast<std::size_t>(M + Mt + Kpad), 0);
                CHECK(base == f_deformed(IntVector(padded), s, M, Mt + Kpad));
            }
        }
    }
}

TEST_CASE("deformed f lands in the membership algebra") {
    for (auto [N, Nt] : {std::pair<long, long>{1, 1}, {2, 1}, {1, 2}}) {
        ModelSpec s = sutherland(N, Nt);
        for (auto [M, Mt] : {std::pair<long, long>{1, 1}, {2, 0}, {0, 2}}) {
            for (const auto& n : tail_valid_vectors(M + Mt, 0, 3, false, 0)) {
                if (weight(n) > 3 || !tails_nonnegative(n)) continue;
                BiSymmetricPoly f = f_deformed(n, s, M, Mt);
                CHECK(membership_check(f, s));
                long deg = 0;
                CHECK(f.is_homogeneous(&deg));
                if (!f.is_zero()) CHECK(deg == weight(n));
            }
        }
    }
}

TEST_CASE("transition matrix K") {
    ModelSpec s = sutherland(2);
    auto t0 = transition_matrix_K(0, 2, s);
    REQUIRE(t0.index.size() == 1);
    CHECK(t0.K[0][0] == Scalar(1));
    auto t1 = transition_matrix_K(1, 2, s);
    REQUIRE(t1.index.size() == 1);
    CHECK(t1.K[0][0] == Scalar(1));

    auto t2 = transition_matrix_K(2, 2, s);
    REQUIRE(t2.index.size() == 2);
    CHECK(t2.index[0] == pt({1, 1}));  // tail-larger first in the descending order
    CHECK(t2.index[1] == pt({2}));
    CHECK(t2.K[0][0] == Scalar(1));
    CHECK(t2.K[0][1] == -K());
    CHECK(t2.K[1][0] == Scalar(0));
    CHECK(t2.K[1][1] == Scalar(1));

    // unitriangular with respect to the tail order, all d <= 5, N <= 3
    for (long N = 2; N <= 3; ++N)
        for (long d = 0; d <= 5; ++d) {
            auto tm = transition_matrix_K(d, N, sutherland(N));
            for (std::size_t r = 0; r < tm.index.size(); ++r)
                for (std::size_t c = 0; c < tm.index.size(); ++c) {
                    if (r == c) CHECK(tm.K[r][c] == Scalar(1));
                    if (!tm.K[r][c].is_zero())
                        CHECK(tail_order_leq(tm.index[c].padded(static_cast<std::size_t>(N)),
                                             tm.index[r].padded(static_cast<std::size_t>(N))));
                }
        }
}

TEST_CASE("expansion in the f basis") {
    ModelSpec s = sutherland(2);
    // round trip of a single f
    SymmetricPoly f = f_vector(iv({2, 1}), s);
    FExpansion e = expand_in_f_basis(f, s);
    REQUIRE(e.terms.size() == 1);
    CHECK(e.terms.begin()->first == iv({2, 1}));
    CHECK(e.terms.begin()->second == Scalar(1));

    // g_lambda = f_lambda + lower, unit leading coefficient
    for (long d = 1; d <= 4; ++d)
        for (const auto& lam : partitions_of(d, 2)) {
            FExpansion ge = expand_in_f_basis(g_partition(lam, 2, s), s);
            CHECK(ge.terms.at(lam.padded(2)) == Scalar(1));
            for (const auto& [m, c] : ge.terms)
                CHECK(tail_order_leq(m, lam.padded(2)));
        }

    SymmetricPoly inh(2);
    inh.add_term(pt({1}), Scalar(1));
    inh.add_term(pt({2}), Scalar(1));
    CHECK_THROWS_AS(expand_in_f_basis(inh, s), NotHomogeneous);
}

TEST_CASE("f builder against the truncated-series oracle, small") {
    for (long N = 1; N <= 2; ++N) {
        ModelSpec s = sutherland(N);
        for (const auto& n : tail_valid_vectors(N, -1, 3, false, 0)) {
            if (weight(n) > 3) continue;
            CHECK(series_extract_f(n, s, N, 0) == f_vector(n, s).expand());
        }
    }
    ModelSpec d = sutherland(1, 1);
    for (const auto& n : tail_valid_vectors(2, -1, 2, false, 0)) {
        if (weight(n) > 2) continue;
        CHECK(series_extract_f(n, d, 1, 1) == f_deformed(n, d, 1, 1).expand());
    }
}
