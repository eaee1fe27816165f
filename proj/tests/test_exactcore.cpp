#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pn/rational.hpp"
#include "pn/unipoly.hpp"

using namespace pn;

namespace {

// Independent binomial oracle: stepwise product m(m-1)...(m-k+1)/k!, kept
// integral at every step. Deliberately avoids the library routine.
Integer binomial_oracle(const Integer& m, unsigned long k) {
    Integer acc(1);
    for (unsigned long j = 0; j < k; ++j) {
        acc *= m - Integer(j);
        acc /= Integer(j + 1);
    }
    return acc;
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(12) < Rational(64));
    CHECK(Rational(673, 24).floor() == 28);
    CHECK(Rational(673, 24).ceil() == 29);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(6, 4).str() == "3/2");
    CHECK(Rational(-6, -4).str() == "3/2");
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(0, 7).den() == 1);

    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), DomainError);
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), DomainError);
}

TEST_CASE("rational results stay coprime with positive denominator") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<long> num(-300, 300), den(1, 60);
    for (int i = 0; i < 500; ++i) {
        const Rational a(num(rng), den(rng));
        Rational b(num(rng), den(rng));
        if (b.is_zero())
            b = Rational(1, 7);
        for (const Rational& r : {a + b, a - b, a * b, a / b}) {
            CHECK(r.den() > 0);
            Integer g;
            mpz_gcd(g.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
            CHECK(g == 1);
        }
    }
}

TEST_CASE("binomial values") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(7, 2) == 21);
    CHECK(binomial(3, 5) == 0);   // 0 <= m < k
    CHECK(binomial(0, 1) == 0);
    CHECK(binomial(-1, 2) == 1);  // (-1)(-2)/2, polynomial convention
    CHECK(binomial(-3, 3) == -10);

    for (long m = -12; m <= 25; ++m)
        for (unsigned long k = 0; k <= 12; ++k)
            CHECK(binomial(Integer(m), k) == binomial_oracle(Integer(m), k));
}

TEST_CASE("half-binomial expansion matches the closed coefficients") {
    const UniPoly p = expand_half_binomial(3, 2, Rational(1));
    CHECK(p == UniPoly({Rational(3), Rational(5, 4), Rational(1, 8)}));

    const UniPoly q = expand_half_binomial(2, 2, Rational(3));
    CHECK(q == UniPoly({Rational(3), Rational(9, 4), Rational(3, 8)}));

    const UniPoly l = expand_half_binomial(1, 1, Rational(1));
    CHECK(l == UniPoly({Rational(1), Rational(1, 2)}));

    CHECK_THROWS_AS(expand_half_binomial(1, 0, Rational(1)), DomainError);
}

TEST_CASE("polynomial evaluation") {
    const UniPoly p({Rational(3), Rational(5, 4), Rational(1, 8)});
    CHECK(p.eval(Rational(2)) == Rational(6));
    CHECK(p.eval(Rational(0)) == Rational(3));
    CHECK(p.eval(Rational(4)) == Rational(binomial(5, 2)));
    CHECK(p.eval(Rational(1, 3)) == Rational(3) + Rational(5, 12) + Rational(1, 72));

    CHECK(UniPoly().eval(Rational(17)) == Rational(0));
}

TEST_CASE("expansion round-trips against the product-formula oracle") {
    const struct { long shift; Rational scale; } combos[] = {
        {3, Rational(1)}, {2, Rational(3)}, {5, Rational(7, 2)}, {0, Rational(1)}, {-1, Rational(2)},
    };
    for (const auto& c : combos) {
        for (unsigned long k = 1; k <= 20; ++k) {
            const UniPoly p = expand_half_binomial(c.shift, k, c.scale);
            CHECK(p.degree() == static_cast<int>(k));
            for (long q = 0; q <= 200; q += 2) {
                const Rational want = c.scale * Rational(binomial_oracle(Integer(q / 2 + c.shift), k));
                CHECK(p.eval(Rational(q)) == want);
            }
        }
    }
}

TEST_CASE("monotonicity certificates") {
    const auto inc = is_increasing_on_nonneg_integers(UniPoly({Rational(3), Rational(5, 4)}));
    CHECK(inc.increasing);
    CHECK(inc.certificate == MonotoneCertificate::AllCoefficientsNonnegative);

    const auto con = is_increasing_on_nonneg_integers(UniPoly::constant(Rational(7)));
    CHECK(con.increasing);
    CHECK(con.is_constant());

    const auto dec = is_increasing_on_nonneg_integers(UniPoly({Rational(1), Rational(-1)}));
    CHECK_FALSE(dec.increasing);

    // x^2 - x: a negative coefficient, but still increasing on Z>=0.
    const auto mixed = is_increasing_on_nonneg_integers(UniPoly({Rational(0), Rational(-1), Rational(1)}));
    CHECK(mixed.increasing);
    CHECK(mixed.certificate == MonotoneCertificate::ScannedToBound);

    // x^2 - 3x fails at k = 1: p(1) = -2 < 0 = p(0)... p(2) = -2, p(1) = -2 equal;
    // p(1) < p(0) decides it.
    const auto fail = is_increasing_on_nonneg_integers(UniPoly({Rational(0), Rational(-3), Rational(1)}));
    CHECK_FALSE(fail.increasing);
}

TEST_CASE("certificates agree with a long brute scan on random polynomials") {
    std::mt19937 rng(987654321);
    std::uniform_int_distribution<int> coeff(-10, 10), deg(0, 6);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rational> cs;
        const int d = deg(rng);
        for (int i = 0; i <= d; ++i)
            cs.emplace_back(coeff(rng));
        const UniPoly p(cs);

        bool brute = true;
        Rational prev = p.eval(Rational(0));
        for (long k = 1; k <= 1000; ++k) {
            const Rational cur = p.eval(Rational(k));
            if (cur < prev) {
                brute = false;
                break;
            }
            prev = cur;
        }
        CHECK(is_increasing_on_nonneg_integers(p).increasing == brute);
    }
}

TEST_CASE("polynomial printing and trimming") {
    CHECK(UniPoly({Rational(3), Rational(5, 4), Rational(1, 8)}).str() == "1/8*x^2 + 5/4*x + 3");
    CHECK(UniPoly({Rational(1), Rational(0), Rational(0)}).degree() == 0);
    CHECK(UniPoly({Rational(0)}).is_zero());
    CHECK(UniPoly().str() == "0");
    CHECK(UniPoly({Rational(0), Rational(-1)}).str() == "-x");
}
