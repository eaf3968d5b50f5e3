#include "hlrook/qlaurent.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace hlrook;

TEST_CASE("canonical zero and construction") {
    QLaurent zero;
    CHECK(zero.is_zero());
    CHECK(zero.min_exp() == 0);
    CHECK(zero.coeffs().empty());
    CHECK(QLaurent::from_coeffs(3, {0, 0}) == zero);
    CHECK(QLaurent::monomial(5, 0) == zero);

    const QLaurent p = QLaurent::from_coeffs(-2, {0, 1, 0, 2, 0});
    CHECK(p.min_exp() == -1);
    CHECK(p.max_exp() == 1);
    CHECK(p.coeff(-1) == 1);
    CHECK(p.coeff(0) == 0);
    CHECK(p.coeff(1) == 2);
    CHECK(p.coeff(7) == 0);
    CHECK_FALSE(p.is_polynomial());
}

TEST_CASE("ring arithmetic") {
    const QLaurent q = QLaurent::q();
    const QLaurent a = QLaurent(1) + q;
    CHECK(a * a == QLaurent::from_coeffs(0, {1, 2, 1}));
    CHECK(a - a == QLaurent{});
    CHECK(-a + a == QLaurent{});
    CHECK(a.pow(0) == QLaurent(1));
    CHECK(a.pow(3) == QLaurent::from_coeffs(0, {1, 3, 3, 1}));
    CHECK(a.shifted(-2) == QLaurent::from_coeffs(-2, {1, 1}));
    CHECK(QLaurent::from_coeffs(1, {1, 2}).invert_q() == QLaurent::from_coeffs(-2, {2, 1}));
    CHECK((QLaurent(1) - QLaurent::monomial(-1)) * q == q - QLaurent(1));
}

TEST_CASE("exact division") {
    const QLaurent a = QLaurent::from_coeffs(0, {1, 3, 3, 1});
    const QLaurent b = QLaurent::from_coeffs(0, {1, 1});
    CHECK(a.exact_div(b) == QLaurent::from_coeffs(0, {1, 2, 1}));
    CHECK(a.shifted(-3).exact_div(b.shifted(-1)) == QLaurent::from_coeffs(-2, {1, 2, 1}));
    CHECK_THROWS_AS(a.exact_div(QLaurent::from_coeffs(0, {1, 0, 1})), std::domain_error);
    CHECK_THROWS_AS(a.exact_div(QLaurent{}), std::domain_error);
}

TEST_CASE("evaluation") {
    const QLaurent p = QLaurent::from_coeffs(-1, {1, 2, 0, 3});
    CHECK(p.at_one() == 6);
    CHECK(p.evaluate(Rational(1, 2)) == Rational(2) + Rational(2) + Rational(3, 4));
    CHECK_THROWS_AS(p.evaluate(Rational(0)), std::domain_error);
    CHECK(QLaurent::from_coeffs(0, {4, 1}).evaluate(Rational(0)) == 4);
}

TEST_CASE("text form") {
    CHECK(QLaurent{}.to_string() == "0");
    CHECK(QLaurent::from_coeffs(-1, {1, 2, 0, 0, 1}).to_string() == "q^-1 + 2 + q^3");
    CHECK(QLaurent::from_coeffs(0, {1, 2, 1}).to_string() == "1 + 2q + q^2");
    CHECK(QLaurent::from_coeffs(1, {-1}).to_string() == "-q");
}

TEST_CASE("q-integers and factorials against inversion counts") {
    CHECK(q_int(0) == QLaurent{});
    CHECK(q_int(3) == QLaurent::from_coeffs(0, {1, 1, 1}));
    for (int n = 0; n <= 7; ++n) {
        CAPTURE(n);
        CHECK(q_factorial(n) == oracle::factorial_by_inversions(n));
        CHECK(q_factorial(n).at_one() == oracle::factorial_by_inversions(n).at_one());
        for (int k = 0; k <= n; ++k) {
            CAPTURE(k);
            CHECK(q_binomial(n, k) == oracle::binomial_by_inversions(n, k));
        }
    }
    CHECK_THROWS_AS(q_binomial(3, 4), std::domain_error);
    CHECK_THROWS_AS(q_binomial(3, -1), std::domain_error);
    CHECK_THROWS_AS(q_factorial(-1), std::domain_error);
}

TEST_CASE("falling q-factorial") {
    CHECK(q_falling(5, 0) == QLaurent(1));
    CHECK(q_falling(2, 3) == QLaurent{});
    CHECK(q_falling(0, 0) == QLaurent(1));
    for (int a = 0; a <= 6; ++a) {
        for (int k = 0; k <= a; ++k) {
            CHECK(q_falling(a, k) * q_factorial(a - k) == q_factorial(a));
        }
    }
}

TEST_CASE("large coefficients stay exact") {
    const QLaurent big = (QLaurent(1) + QLaurent::q()).pow(100);
    CHECK(big.coeff(50) == BigInt("100891344545564193334812497256"));
    CHECK(big.at_one() == BigInt(1) << 100);
}

TEST_CASE("property: ring axioms on random Laurent polynomials") {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> shift(-4, 4);
    const auto random_poly = [&] {
        std::vector<BigInt> c;
        for (int i = 0; i < 5; ++i) {
            c.emplace_back(coeff(rng));
        }
        return QLaurent::from_coeffs(shift(rng), std::move(c));
    };
    for (int trial = 0; trial < 200; ++trial) {
        const QLaurent a = random_poly();
        const QLaurent b = random_poly();
        const QLaurent c = random_poly();
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a.invert_q().invert_q() == a);
        CHECK((a * b).invert_q() == a.invert_q() * b.invert_q());
        if (!b.is_zero()) {
            CHECK((a * b).exact_div(b) == a);
        }
        CHECK((a * b).evaluate(Rational(2, 3)) == a.evaluate(Rational(2, 3)) * b.evaluate(Rational(2, 3)));
    }
}
