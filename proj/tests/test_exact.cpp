#include <catch2/catch_amalgamated.hpp>

#include "translie/radical.hpp"
#include "translie/rational.hpp"

#include <random>

using namespace translie;

TEST_CASE("factorial covers base cases and larger arguments", "[exact]") {
    REQUIRE(factorial(0) == Int(1));
    REQUIRE(factorial(1) == Int(1));
    REQUIRE(factorial(5) == Int(120));
    REQUIRE(factorial(12) == Int(479001600));
    REQUIRE_THROWS_AS(factorial(-1), std::invalid_argument);
}

TEST_CASE("binomial guards out-of-window arguments with zero", "[exact]") {
    REQUIRE(binomial(5, 2) == Int(10));
    REQUIRE(binomial(0, 0) == Int(1));
    REQUIRE(binomial(3, -1) == Int(0));
    REQUIRE(binomial(2, 5) == Int(0));
}

TEST_CASE("binomial matches the factorial quotient and is symmetric", "[exact]") {
    for (long s = 0; s <= 12; ++s)
        for (long t = 0; t <= s; ++t) {
            REQUIRE(binomial(s, t) * factorial(t) * factorial(s - t) == factorial(s));
            REQUIRE(binomial(s, t) == binomial(s, s - t));
        }
}

TEST_CASE("integer powers and parity signs", "[exact]") {
    REQUIRE(pow_int(Int(3), 4) == Int(81));
    REQUIRE(pow_int(Int(2), 0) == Int(1));
    REQUIRE(pow_int(Int(-2), 3) == Int(-8));
    REQUIRE_THROWS_AS(pow_int(Int(2), -1), std::invalid_argument);
    REQUIRE(parity_sign(0) == 1);
    REQUIRE(parity_sign(1) == -1);
    REQUIRE(parity_sign(7) == -1);
    REQUIRE(parity_sign(10) == 1);
}

TEST_CASE("rationals canonicalize on every construction path", "[exact]") {
    REQUIRE(Rational(2, 4) == Rational(1, 2));
    Rational r(1, -2);
    REQUIRE(r.num() == Int(-1));
    REQUIRE(r.den() == Int(2));
    REQUIRE(Rational(0, 7).is_zero());
    REQUIRE(Rational(6, 3).is_integer());
    REQUIRE_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic and comparisons are exact", "[exact]") {
    REQUIRE(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    REQUIRE(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    REQUIRE(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    REQUIRE(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    REQUIRE(-Rational(5, 7) == Rational(-5, 7));
    REQUIRE(Rational(1, 3) < Rational(1, 2));
    REQUIRE(Rational(-1, 2) < Rational(0));
    REQUIRE(Rational::pow(Rational(2, 3), 3) == Rational(8, 27));
    REQUIRE(Rational::pow(Rational(2, 3), -2) == Rational(9, 4));
    REQUIRE(Rational::pow(Rational(5), 0) == Rational(1));
}

TEST_CASE("rational text form round-trips", "[exact]") {
    REQUIRE(Rational(7).str() == "7");
    REQUIRE(Rational(-3, 4).str() == "-3/4");
    REQUIRE(Rational::parse("7") == Rational(7));
    REQUIRE(Rational::parse("-3/4") == Rational(-3, 4));
    REQUIRE(Rational::parse(" 3 / 4 ") == Rational(3, 4));
    REQUIRE(Rational::parse("6/4") == Rational(3, 2));
    REQUIRE_THROWS_AS(Rational::parse(""), std::invalid_argument);
    REQUIRE_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    REQUIRE_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);

    std::mt19937 gen(7u);
    for (int t = 0; t < 50; ++t) {
        long num = static_cast<long>(gen() % 2001) - 1000;
        long den = static_cast<long>(gen() % 999) + 1;
        Rational r(num, den);
        REQUIRE(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("radicals normalize to a square-free radicand", "[exact]") {
    Radical a(Rational(1), Int(12));
    REQUIRE(a.coeff() == Rational(2));
    REQUIRE(a.radicand() == Int(3));

    Radical b(Rational(3, 2), Int(1));
    REQUIRE(b.is_rational());
    REQUIRE(b.rational_value() == Rational(3, 2));

    Radical c(Rational(1), Int(0));
    REQUIRE(c.is_zero());
    REQUIRE(c.radicand() == Int(1));
    REQUIRE(c.str() == "0");

    // already square-free input is untouched
    Radical d(Rational(5, 3), Int(30));
    REQUIRE(d.coeff() == Rational(5, 3));
    REQUIRE(d.radicand() == Int(30));

    REQUIRE(Radical(Rational(1, 2), Int(3)).str() == "1/2*sqrt(3)");
    REQUIRE_THROWS_AS(Radical(Rational(1), Int(-1)), std::invalid_argument);
}

TEST_CASE("radical products collapse matching radicands", "[exact]") {
    Radical sqrt2(Rational(1), Int(2));
    REQUIRE(sqrt2 * sqrt2 == Radical(Rational(2)));
    REQUIRE(Radical(Rational(1), Int(6)) * Radical(Rational(1), Int(10)) ==
            Radical(Rational(2), Int(15)));
    REQUIRE((Rational(0) * sqrt2).is_zero());

    std::mt19937 gen(11u);
    std::vector<Radical> pool;
    for (int t = 0; t < 8; ++t) {
        long c = static_cast<long>(gen() % 9) + 1;
        long s = static_cast<long>(gen() % 40) + 1;
        pool.emplace_back(Rational(c, 3), Int(s));
    }
    for (size_t i = 0; i < pool.size(); ++i)
        for (size_t j = 0; j < pool.size(); ++j) {
            REQUIRE(pool[i] * pool[j] == pool[j] * pool[i]);
            for (size_t k = 0; k < pool.size(); ++k)
                REQUIRE((pool[i] * pool[j]) * pool[k] == pool[i] * (pool[j] * pool[k]));
        }
}

TEST_CASE("radical square roots of rationals", "[exact]") {
    REQUIRE(Radical::sqrt_of(Rational(4, 9)) == Radical(Rational(2, 3)));
    REQUIRE(Radical::sqrt_of(Rational(1, 2)) == Radical(Rational(1, 2), Int(2)));
    REQUIRE(Radical::sqrt_of(Rational(0)).is_zero());
    REQUIRE_THROWS_AS(Radical::sqrt_of(Rational(-1)), std::invalid_argument);
    // sqrt(r)^2 = r on a spread of inputs
    for (long p = 1; p <= 10; ++p)
        for (long q = 1; q <= 10; ++q) {
            Radical s = Radical::sqrt_of(Rational(p, q));
            REQUIRE((s * s).rational_value() == Rational(p, q));
        }
}
