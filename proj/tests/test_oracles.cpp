#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cspoly/oracles.hpp>

using namespace cspoly;

namespace {
IntVector iv(std::vector<long> v) { return IntVector(std::move(v)); }
Partition pt(std::vector<long> v) { return Partition(std::move(v)); }
Scalar K() { return Scalar::kappa(); }

SymmetricPoly monic(const SymmetricPoly& p, const Partition& label) {
    return p.scaled(p.coeff(label).inverse());
}

UniPoly monic_uni(const UniPoly& p) {
    REQUIRE(!p.is_zero());
    return p.scaled(p.coeffs().back().inverse());
}

UniPoly to_unipoly(const SymmetricPoly& p) {
    REQUIRE(p.nvars() == 1);
    std::vector<Scalar> c;
    for (const auto& [lam, coeff] : p.terms()) {
        std::size_t d = static_cast<std::size_t>(lam.part(0));
        if (c.size() <= d) c.resize(d + 1, Scalar(0));
        c[d] = coeff;
    }
    return UniPoly(std::move(c));
}

// explicit hypergeometric-series form of the generalized Bessel polynomial,
// from the defining differential equation
UniPoly bessel_series(long n, const Rational& a, const Rational& b) {
    std::vector<Scalar> c(static_cast<std::size_t>(n) + 1, Scalar(0));
    Rational binom(1), poch(1), bpow(1);
    for (long k = 0; k <= n; ++k) {
        c[static_cast<std::size_t>(k)] = Scalar(binom * poch / bpow);
        binom *= Rational(n - k);
        binom /= Rational(k + 1);
        poch *= Rational(n) + a - 1 + Rational(k);
        bpow *= b;
    }
    return UniPoly(std::move(c));
}
}  // namespace

TEST_CASE("schur") {
    CHECK(schur(pt({1}), 2) == SymmetricPoly::monomial(2, pt({1})));
    SymmetricPoly s21(3);
    s21.add_term(pt({2, 1}), Scalar(1));
    s21.add_term(pt({1, 1, 1}), Scalar(2));
    CHECK(schur(pt({2, 1}), 3) == s21);
    CHECK(schur(pt({1, 1}), 2) == SymmetricPoly::monomial(2, pt({1, 1})));
    CHECK(schur(pt({}), 2) == SymmetricPoly::constant(2, Scalar(1)));
    CHECK_THROWS_AS(schur(pt({1, 1, 1}), 2), LengthMismatch);
}

TEST_CASE("power-sum inner product table") {
    CHECK(power_sum_norm(pt({2, 1, 1}), K()) ==
          Scalar(Rational(4)) * K().inverse().pow(3));
    CHECK(power_sum_norm(pt({3, 3}), Scalar(Rational(2))) == Scalar(Rational(18, 4)));
    for (const auto& lam : partitions_of(5, 5))
        CHECK_FALSE(power_sum_norm(lam, K()).is_zero());
    CHECK_THROWS_AS(power_sum_norm(pt({1}), Scalar(Rational(0))), KappaZero);
}

TEST_CASE("jack basics") {
    CHECK(jack_monic(pt({1}), 2, K()) == SymmetricPoly::monomial(2, pt({1})));
    SymmetricPoly j2(2);
    j2.add_term(pt({2}), Scalar(1));
    j2.add_term(pt({1, 1}), Scalar(2) * K() / (K() + Scalar(1)));
    CHECK(jack_monic(pt({2}), 2, K()) == j2);

    // monomial support respects dominance
    for (long d = 1; d <= 5; ++d)
        for (const auto& lam : partitions_of(d, 3)) {
            SymmetricPoly j = jack_monic(lam, 3, K());
            CHECK(j.coeff(lam) == Scalar(1));
            for (const auto& [mu, c] : j.terms()) CHECK(dominance_leq(mu, lam));
        }
}

TEST_CASE("jack at unit coupling degenerates to schur") {
    for (long N = 2; N <= 3; ++N)
        for (long d = 0; d <= 5; ++d)
            for (const auto& lam : partitions_of(d, N))
                CHECK(jack_monic(lam, N, Scalar(Rational(1))) == schur(lam, N));
}

TEST_CASE("jack satisfies the Sutherland eigen equation, independent of the solver") {
    for (long N = 2; N <= 3; ++N) {
        ModelSpec s = preset_spec("II", K(), N);
        ReducedOperator op = build_reduced_operator(s);
        for (long d = 1; d <= 5; ++d)
            for (const auto& lam : partitions_of(d, N)) {
                SymmetricPoly j = jack_monic(lam, N, K());
                CHECK(apply(op, j) ==
                      j.scaled(eigenvalue_excess(lam.padded(static_cast<std::size_t>(N)), s)));
            }
    }
    CHECK_THROWS_AS(jack_monic(pt({2}), 2, Scalar(Rational(0))), KappaZero);
}

TEST_CASE("classical recurrences: frozen low orders") {
    ClassicalParams prm;
    CHECK(classical_1var("I", 0, prm) == UniPoly::constant(Scalar(1)));
    CHECK(classical_1var("V", 0, prm) == UniPoly::constant(Scalar(1)));

    prm.omega = Rational(1);
    CHECK(classical_1var("I", 2, prm) == UniPoly({Scalar(-2), Scalar(0), Scalar(4)}));
    CHECK(classical_1var("I", 3, prm) ==
          UniPoly({Scalar(0), Scalar(-12), Scalar(0), Scalar(8)}));

    // Gegenbauer C_1^(a) = 2 a z
    CHECK(classical_1var("V", 1, prm) ==
          UniPoly({Scalar(0), Scalar(Rational(4, 3))}));

    // Laguerre L_2^(gamma)(x) = (x^2 - 2(gamma+2) x + (gamma+1)(gamma+2))/2
    Rational g = prm.a - Rational(1, 2);
    UniPoly l2 = classical_1var("IV", 2, prm);
    CHECK(l2 == UniPoly({Scalar((g + 1) * (g + 2) / Rational(2)), Scalar(-(g + 2)),
                         Scalar(Rational(1, 2))}));
}

TEST_CASE("generalized Bessel recurrence against the explicit series") {
    for (Rational c : {Rational(1, 3), Rational(-1, 2), Rational(2, 7)}) {
        ClassicalParams prm;
        prm.c = c;
        prm.omega = Rational(3, 2);
        Rational a = Rational(1) - c * 2, b = prm.omega * 2;
        for (long n = 0; n <= 6; ++n)
            CHECK(classical_1var("VII", n, prm) == bessel_series(n, a, b));
    }
    ClassicalParams degenerate;
    degenerate.c = Rational(1, 2);
    CHECK_THROWS_AS(classical_1var("VII", 2, degenerate), MathError);
}

TEST_CASE("Jacobi at equal parameters is Gegenbauer up to normalization") {
    ClassicalParams prm;
    prm.b = prm.a;
    for (long n = 1; n <= 6; ++n)
        CHECK(monic_uni(classical_1var("VI", n, prm)) ==
              monic_uni(classical_1var("V", n, prm)));
}

TEST_CASE("classical polynomials match the one-variable solver") {
    for (const std::string& id : {"I", "IV", "V", "VI", "VII"}) {
        ClassicalParams prm;
        prm.c = Rational(1, 3);  // keep case VII non-degenerate here
        CasePreset preset{id};
        preset.c = prm.c;
        ModelSpec s = preset_spec(id, K(), 1, 0, preset);
        for (long n = 0; n <= 6; ++n) {
            EigenResult r = solve_eigenfunction(iv({n}), s);
            UniPoly sol = monic_uni(to_unipoly(to_symmetric(r.monomial_form)));
            CHECK_MESSAGE(sol == monic_uni(classical_1var(id, n, prm)), "case ", id, " n=", n);
        }
    }
}

TEST_CASE("series extraction basics") {
    ModelSpec s1 = preset_spec("II", K(), 1);
    ExpandedPoly e = series_extract_f(iv({2}), s1, 1, 0);
    ExpandedPoly expect(1);
    expect.add_term({2}, Scalar(KRational(rising_binomial(2))));
    CHECK(e == expect);
    CHECK(series_extract_f(iv({0, -1}), preset_spec("II", K(), 2), 2, 0).is_zero());
    CHECK_THROWS_AS(series_extract_f(iv({13}), s1, 1, 0), CutoffExceeded);
}

TEST_CASE("kernel duality reproduces the g polynomials") {
    for (long N = 1; N <= 3; ++N) {
        ModelSpec s = preset_spec("II", K(), N);
        for (long d = 0; d <= 4; ++d)
            for (const auto& lam : partitions_of(d, N))
                CHECK(series_extract_pi(lam, N, s) == g_partition(lam, N, s).expand());
    }
}
