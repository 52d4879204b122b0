#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cspoly/rng.hpp>
#include <cspoly/solver.hpp>

using namespace cspoly;

namespace {
IntVector iv(std::vector<long> v) { return IntVector(std::move(v)); }
Partition pt(std::vector<long> v) { return Partition(std::move(v)); }
Scalar K() { return Scalar::kappa(); }

// sum of the action move terms plus the diagonal, assembled as polynomials
BiSymmetricPoly action_rhs(const IntVector& n, const ModelSpec& s, long M, long Mt) {
    BiSymmetricPoly acc =
        f_deformed(n, s, M, Mt).scaled(eigenvalue_excess_deformed(n, s, M, Mt));
    for (const auto& [t, c] : action_targets(n, s, M, Mt))
        acc.add(f_deformed(t, s, M, Mt).scaled(c));
    return acc;
}
}  // namespace

TEST_CASE("reduced operator on simple inputs") {
    ModelSpec s1 = preset_spec("I", K(), 2);
    ReducedOperator op1 = build_reduced_operator(s1);
    CHECK(apply(op1, SymmetricPoly::constant(2, Scalar(1))).is_zero());
    // case I: H~ m_(1) = 2 omega m_(1)
    SymmetricPoly m1 = SymmetricPoly::monomial(2, pt({1}));
    CHECK(apply(op1, m1) == m1.scaled(Scalar(2)));

    // case II: H~ m_(2) = (4 + 4 kappa) m_(2) + 4 kappa m_(1,1)
    ModelSpec s2 = preset_spec("II", K(), 2);
    ReducedOperator op2 = build_reduced_operator(s2);
    SymmetricPoly expect(2);
    expect.add_term(pt({2}), Scalar(4) + Scalar(4) * K());
    expect.add_term(pt({1, 1}), Scalar(4) * K());
    CHECK(apply(op2, SymmetricPoly::monomial(2, pt({2}))) == expect);
    CHECK_THROWS_AS(build_reduced_operator(preset_spec("II", K(), 1, 1)), LengthMismatch);
}

TEST_CASE("conjugation consistency: operator application reproduces the action") {
    for (const std::string& id : {"I", "II", "IV", "VI"}) {
        ModelSpec s = preset_spec(id, K(), 2);
        ReducedOperator op = build_reduced_operator(s);
        for (const auto& n : tail_valid_vectors(2, -1, 3, false, 0)) {
            if (weight(n) > 3 || !tails_nonnegative(n)) continue;
            SymmetricPoly f = f_vector(n, s);
            CHECK(to_bisymmetric(apply(op, f)) == action_rhs(n, s, 2, 0));
        }
    }
}

TEST_CASE("deformed operator on simple inputs") {
    ModelSpec s = preset_spec("II", K(), 1, 1);
    ReducedOperator op = build_deformed_reduced_operator(s);
    CHECK(apply(op, BiSymmetricPoly::constant(1, 1, Scalar(1))).is_zero());

    // pi_1 = z - zt/kappa is an eigenfunction with excess -1
    BiSymmetricPoly pi1(1, 1);
    pi1.add_term(iv({1, 0}), Scalar(1));
    pi1.add_term(iv({0, 1}), -K().inverse());
    CHECK(apply(op, pi1) == pi1.scaled(Scalar(-1)));
    CHECK(eigenvalue_partition_excess(pt({1}), s) == Scalar(-1));
}

TEST_CASE("deformed operator with an empty tilde block matches the plain one") {
    for (const std::string& id : {"II", "VII"}) {
        ModelSpec s = preset_spec(id, K(), 3);
        ReducedOperator flat = build_reduced_operator(s);
        ReducedOperator def = build_deformed_reduced_operator(s);
        for (const auto& lam : partitions_of(3, 3)) {
            SymmetricPoly P = f_vector(lam.padded(3), s);
            CHECK(to_bisymmetric(apply(flat, P)) == apply(def, to_bisymmetric(P)));
        }
    }
}

TEST_CASE("deformed conjugation consistency, one variable per block") {
    ModelSpec s = preset_spec("II", K(), 1, 1);
    ReducedOperator op = build_deformed_reduced_operator(s);
    for (auto [M, Mt] : {std::pair<long, long>{1, 0}, {0, 1}, {1, 1}}) {
        for (const auto& n : tail_valid_vectors(M + Mt, -1, 2, false, 0)) {
            if (weight(n) > 2 || !tails_nonnegative(n)) continue;
            BiSymmetricPoly f = f_deformed(n, s, M, Mt);
            CHECK(apply(op, f) == action_rhs(n, s, M, Mt));
        }
    }
}

TEST_CASE("membership") {
    ModelSpec s = preset_spec("II", K(), 2, 2);
    for (long r = 1; r <= 3; ++r) {
        BiSymmetricPoly pir(2, 2);
        std::vector<long> key(4, 0);
        key[0] = r;
        pir.add_term(iv(key), Scalar(1));
        std::vector<long> keyt(4, 0);
        keyt[2] = r;
        pir.add_term(iv(keyt), -K().inverse());
        CHECK(membership_check(pir, s));
        CHECK(membership_check_all_pairs(pir, s));
    }
    ModelSpec s11 = preset_spec("II", K(), 1, 1);
    BiSymmetricPoly z1(1, 1);
    z1.add_term(iv({1, 0}), Scalar(1));
    CHECK_FALSE(membership_check(z1, s11));

    // the one-pair reduction agrees with the all-pairs check
    Rng rng(0xBEEF);
    for (int t = 0; t < 60; ++t) {
        BiSymmetricPoly p(2, 2);
        for (int k = 0; k < 3; ++k) {
            std::vector<long> b1{rng.range(0, 2), rng.range(0, 2)};
            std::vector<long> b2{rng.range(0, 2), rng.range(0, 2)};
            std::sort(b1.rbegin(), b1.rend());
            std::sort(b2.rbegin(), b2.rend());
            b1.insert(b1.end(), b2.begin(), b2.end());
            p.add_term(iv(b1), Scalar(rng.rational(5, 2)));
        }
        CHECK(membership_check(p, s) == membership_check_all_pairs(p, s));
    }
}

TEST_CASE("cross divided differences fail exactly off the membership algebra") {
    ModelSpec s = preset_spec("II", K(), 1, 1);
    ReducedOperator op = build_deformed_reduced_operator(s);
    BiSymmetricPoly bad(1, 1);
    bad.add_term(iv({1, 0}), Scalar(1));  // z alone: block-symmetric, not a member
    CHECK_FALSE(membership_check(bad, s));
    CHECK_THROWS_AS(apply(op, bad), NotDivisible);

    // members never trip the divisibility check
    for (const auto& n : tail_valid_vectors(2, 0, 3, false, 0)) {
        if (weight(n) > 3) continue;
        BiSymmetricPoly f = f_deformed(n, s, 1, 1);
        if (f.is_zero()) continue;
        CHECK_NOTHROW(apply(op, f));
    }
}

TEST_CASE("source identity: single particle and two-group cancellations") {
    Rng rng(0x1D);
    for (int t = 0; t < 6; ++t) {
        AlphaBeta ab{Scalar(rng.rational(6, 3)), Scalar(rng.rational(6, 3)), Scalar(1),
                     Scalar(rng.rational(6, 3)), Scalar(rng.rational(6, 3))};
        Rational kap(rng.range(1, 9), rng.range(1, 4));
        // one particle of any mass: constant vanishes and the residual is zero
        MassConfig one({rng.nonzero_rational(5, 3)});
        CHECK(source_constant(one, ab, kap).is_zero());
        auto pts1 = sample_points(5, 1, ab, 0xC5D0 + static_cast<std::uint64_t>(t));
        for (const auto& r : source_identity_residual(one, ab, kap, pts1))
            CHECK(r.is_zero());
    }
}

TEST_CASE("source identity at the corollary mass patterns") {
    for (const std::string& id : {"I", "II", "IV"}) {
        AlphaBeta ab = CasePreset{id}.alpha_beta();
        for (Rational kap : {Rational(1, 2), Rational(2), Rational(3, 4)}) {
            MassConfig pair({Rational(1), Rational(-1)});
            for (const auto& r :
                 source_identity_residual(pair, ab, kap, sample_points(20, 2, ab)))
                CHECK(r.is_zero());
            MassConfig triple({Rational(1), -kap.inverse(), kap.inverse()});
            for (const auto& r :
                 source_identity_residual(triple, ab, kap, sample_points(20, 3, ab)))
                CHECK(r.is_zero());
        }
    }
}

TEST_CASE("groundstate specialization of the source identity") {
    Rng rng(0x60);
    for (int t = 0; t < 5; ++t) {
        AlphaBeta ab{Scalar(rng.rational(6, 3)), Scalar(rng.rational(6, 3)), Scalar(1),
                     Scalar(rng.rational(6, 3)), Scalar(rng.rational(6, 3))};
        Rational kap(rng.range(1, 9), rng.range(1, 4));
        long N = rng.range(1, 4);
        MassConfig ones(std::vector<Rational>(static_cast<std::size_t>(N), Rational(1)));
        ModelSpec spec(ab, Scalar(kap), N);
        CHECK(source_constant(ones, ab, kap) == groundstate_energy(spec));
        for (const auto& r : source_identity_residual(
                 ones, ab, kap, sample_points(8, static_cast<std::size_t>(N), ab)))
            CHECK(r.is_zero());
    }
}

TEST_CASE("pole handling") {
    AlphaBeta ab = CasePreset{"II"}.alpha_beta();  // alpha = -z^2 vanishes at 0
    MassConfig pair({Rational(1), Rational(-1)});
    std::vector<std::vector<Rational>> bad{{Rational(0), Rational(1)}};
    CHECK_THROWS_AS(source_identity_residual(pair, ab, Rational(1, 2), bad), PoleAtPoint);
    std::vector<std::vector<Rational>> coincident{{Rational(2), Rational(2)}};
    CHECK_THROWS_AS(source_identity_residual(pair, ab, Rational(1, 2), coincident),
                    PoleAtPoint);
}
