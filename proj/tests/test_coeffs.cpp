#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cspoly/rng.hpp>
#include <cspoly/scalar.hpp>

using namespace cspoly;

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational::parse("6/-4") == Rational(-3, 2));
    CHECK(Rational::parse("7").str() == "7");
    CHECK_THROWS_AS(Rational(1, 0), DenominatorVanishes);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), DenominatorVanishes);
}

TEST_CASE("kappa binomials") {
    CHECK(kappa_binomial(0) == KPolynomial(Rational(1)));
    CHECK(kappa_binomial(1) == KPolynomial::kappa());
    // binom(k, 2) = (k^2 - k)/2
    CHECK(kappa_binomial(2) ==
          KPolynomial(std::vector<Rational>{0, Rational(-1, 2), Rational(1, 2)}));
    CHECK(rising_binomial(0) == KPolynomial(Rational(1)));
    CHECK(rising_binomial(1) == KPolynomial::kappa());
    // binom(k+1, 2) = (k^2 + k)/2
    CHECK(rising_binomial(2) ==
          KPolynomial(std::vector<Rational>{0, Rational(1, 2), Rational(1, 2)}));
    CHECK_THROWS_AS(kappa_binomial(-1), MathError);
}

TEST_CASE("KRational canonical form and equality") {
    KPolynomial k = KPolynomial::kappa();
    // (k^2 - k)/(k - 1) canonicalizes to k
    KRational a(k * k - k, k - KPolynomial(Rational(1)));
    CHECK(a == KRational(k));
    CHECK(a.is_polynomial());
    // denominator normalized: content one, positive leading coefficient
    KRational b(KPolynomial(Rational(1)), k.scaled(Rational(-2, 3)));
    CHECK(b.den() == k);
    CHECK(b.num() == KPolynomial(Rational(-3, 2)));
    CHECK_THROWS_AS(KRational(k, KPolynomial()), DenominatorVanishes);
}

TEST_CASE("evaluate_at_kappa") {
    KRational k = KRational::kappa();
    KRational p = k / (k + KRational(Rational(1)));
    CHECK(evaluate_at_kappa(p, Rational(1)) == Rational(1, 2));
    CHECK(KRational(kappa_binomial(2)).evaluate_at_kappa(Rational(3)) == Rational(3));
    // cancellation precedes substitution
    KPolynomial kp = KPolynomial::kappa();
    KRational q(kp * kp - kp, kp - KPolynomial(Rational(1)));
    CHECK(q.evaluate_at_kappa(Rational(1)) == Rational(1));
    CHECK_THROWS_AS(p.evaluate_at_kappa(Rational(-1)), DenominatorVanishes);
}

TEST_CASE("scalar promotion and modes") {
    Scalar k = Scalar::kappa();
    Scalar mixed = Scalar(2) + k * Scalar(Rational(1, 3));
    CHECK(mixed.is_symbolic());
    CHECK(mixed.evaluate_at(Rational(3)) == Scalar(3));
    CHECK(Scalar(5).evaluate_at(Rational(7)) == Scalar(5));
    CHECK(k.pow(-2) == (k * k).inverse());
    CHECK_THROWS_AS(mixed.as_rational(), MathError);
}

TEST_CASE("field axioms on random symbolic values") {
    Rng rng(0xC5D0);
    auto rand_kr = [&]() {
        KPolynomial num(std::vector<Rational>{rng.rational(20, 5), rng.rational(20, 5)});
        KPolynomial den(std::vector<Rational>{rng.rational(20, 5), rng.rational(20, 5),
                                              Rational(rng.range(1, 3))});
        return Scalar(KRational(num, den));
    };
    for (int i = 0; i < 40; ++i) {
        Scalar a = rand_kr(), b = rand_kr(), c = rand_kr();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Scalar(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
    }
}

TEST_CASE("mode commutation: symbolic chains specialize to fixed-mode chains") {
    Rng rng(0xC5D0 ^ 0x99);
    for (int trial = 0; trial < 30; ++trial) {
        Rational kval(rng.range(1, 40), rng.range(1, 9));
        Scalar sym = Scalar::kappa();
        Scalar fix = Scalar(kval);
        for (int step = 0; step < 12; ++step) {
            Scalar cst{rng.rational(30, 7)};
            switch (rng.range(0, 3)) {
                case 0:
                    sym += cst;
                    fix += cst;
                    break;
                case 1:
                    sym -= cst;
                    fix -= cst;
                    break;
                case 2:
                    sym *= cst;
                    fix *= cst;
                    break;
                default:
                    if (!cst.is_zero()) {
                        sym /= cst;
                        fix /= cst;
                    }
            }
        }
        CHECK(sym.evaluate_at(kval) == fix);
    }
}

TEST_CASE("positive rational roots of gap polynomials") {
    // (k - 3/2)(k + 2) k
    KPolynomial k = KPolynomial::kappa();
    KPolynomial p = (k - KPolynomial(Rational(3, 2))) * (k + KPolynomial(Rational(2))) * k;
    auto roots = positive_rational_roots(p);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0] == Rational(3, 2));
    CHECK(positive_rational_roots(KPolynomial(Rational(5))).empty());
}
