#include <catch2/catch_amalgamated.hpp>

#include "translie/principal.hpp"

#include <random>

using namespace translie;

namespace {

GVector random_gvector(std::mt19937& gen, long n) {
    GVector v(n);
    for (long i = 1; i <= n - 1; ++i)
        for (long j = -i; j <= i; ++j)
            v.add_term(i, j, Rational(static_cast<long>(gen() % 19) - 9));
    return v;
}

}  // namespace

TEST_CASE("principal triple entries for small ranks", "[oracle]") {
    PrincipalTriple t2 = principal_triple(2);
    REQUIRE(t2.E == MatQ::unit(2, 1, 2));
    REQUIRE(t2.F == MatQ::unit(2, 2, 1));
    MatQ h2(2);
    h2.at(1, 1) = Rational(1);
    h2.at(2, 2) = Rational(-1);
    REQUIRE(t2.H == h2);

    PrincipalTriple t3 = principal_triple(3);
    REQUIRE(t3.F.at(2, 1) == Rational(2));
    REQUIRE(t3.F.at(3, 2) == Rational(2));
    REQUIRE(t3.H.at(1, 1) == Rational(2));
    REQUIRE(t3.H.at(2, 2) == Rational(0));
    REQUIRE(t3.H.at(3, 3) == Rational(-2));

    REQUIRE_THROWS_AS(principal_triple(1), std::invalid_argument);
}

TEST_CASE("principal triple satisfies the sl2 relations", "[oracle]") {
    for (long n = 2; n <= 6; ++n) {
        PrincipalTriple t = principal_triple(n);
        REQUIRE(bracket_matrix(t.H, t.E) == Rational(2) * t.E);
        REQUIRE(bracket_matrix(t.H, t.F) == Rational(-2) * t.F);
        REQUIRE(bracket_matrix(t.E, t.F) == t.H);
        REQUIRE(t.E.trace().is_zero());
        REQUIRE(t.H.trace().is_zero());
        REQUIRE(t.F.trace().is_zero());
    }
}

TEST_CASE("raising element is nilpotent of order exactly n", "[oracle]") {
    for (long n = 2; n <= 7; ++n) {
        PrincipalTriple t = principal_triple(n);
        REQUIRE_FALSE(mat_pow(t.E, n - 1).is_zero());
        REQUIRE(mat_pow(t.E, n).is_zero());
        REQUIRE_FALSE(mat_pow(t.F, n - 1).is_zero());
        REQUIRE(mat_pow(t.F, n).is_zero());
    }
}

TEST_CASE("G basis endpoints pin the normalization", "[oracle]") {
    for (long n = 3; n <= 6; ++n) {
        PrincipalTriple t = principal_triple(n);
        REQUIRE(g_basis(n, 1, 0) == Rational(-1) * t.H);
        REQUIRE(g_basis(n, 1, -1) == Rational(-2) * t.F);
        for (long i = 1; i <= n - 1; ++i) {
            REQUIRE(g_basis(n, i, i) == mat_pow(t.E, i));
            Rational c(factorial(2 * i));
            if (i % 2) c = -c;
            REQUIRE(g_basis(n, i, -i) == c * mat_pow(t.F, i));
        }
        REQUIRE_THROWS_AS(g_basis(n, n, 0), std::invalid_argument);
        REQUIRE_THROWS_AS(g_basis(n, 1, 2), std::invalid_argument);
    }
}

TEST_CASE("G basis elements are weight vectors of weight 2j", "[oracle]") {
    for (long n = 3; n <= 5; ++n) {
        const GBasis& b = g_basis_cache(n);
        for (long i = 1; i <= n - 1; ++i)
            for (long j = -i; j <= i; ++j)
                REQUIRE(bracket_matrix(b.triple().H, b.g(i, j)) == Rational(2 * j) * b.g(i, j));
    }
}

TEST_CASE("trace pairing extracts G coefficients orthogonally", "[oracle]") {
    long n = 4;
    const GBasis& b = g_basis_cache(n);
    for (long i = 1; i <= n - 1; ++i)
        for (long j = -i; j <= i; ++j)
            for (long ip = 1; ip <= n - 1; ++ip)
                for (long jp = -ip; jp <= ip; ++jp) {
                    Rational c = coeff_extract(n, b.g(i, j), ip, jp);
                    REQUIRE(c == ((i == ip && j == jp) ? Rational(1) : Rational(0)));
                }
    REQUIRE_THROWS_AS(coeff_extract(2, MatQ::identity(2), 1, 0), std::invalid_argument);
}

TEST_CASE("decomposition inverts the G expansion", "[oracle]") {
    REQUIRE(decompose(3, MatQ(3)).empty());

    PrincipalTriple t = principal_triple(4);
    GVector ef = decompose(4, t.E + t.F);
    REQUIRE(ef.coeff(1, 1) == Rational(1));
    REQUIRE(ef.coeff(1, -1) == Rational(-1, 2));
    REQUIRE(ef.terms().size() == 2);

    GVector h = decompose(4, t.H);
    REQUIRE(h.coeff(1, 0) == Rational(-1));
    REQUIRE(h.terms().size() == 1);

    std::mt19937 gen(31u);
    for (long n = 3; n <= 5; ++n)
        for (int trial = 0; trial < 5; ++trial) {
            GVector v = random_gvector(gen, n);
            REQUIRE(decompose(n, to_matrix(v)) == v);
        }
}

TEST_CASE("commutator spot values in small ranks", "[oracle]") {
    PrincipalTriple t = principal_triple(3);
    MatQ e2 = mat_pow(t.E, 2), f2 = mat_pow(t.F, 2);
    MatQ c = bracket_matrix(e2, f2);
    REQUIRE(c == Rational(2) * t.H);
    REQUIRE(coeff_extract(3, c, 1, 0) == Rational(-2));
    REQUIRE(bracket_matrix(t.E, t.E).is_zero());
}

TEST_CASE("commutator-based structure constants match pinned values", "[oracle]") {
    REQUIRE(omega_oracle(3, 2, 2, 3) == Rational(-2));
    REQUIRE(omega_oracle(4, 2, 2, 1) == Rational(2, 5));
    REQUIRE(omega_oracle(4, 3, 2, 3) == Rational(-3));
    REQUIRE(omega_oracle(5, 3, 3, 5) == Rational(216, 5));
    REQUIRE(omega_oracle(6, 5, 5, 9) == Rational(14400, 7));
    // failed triad: target component absent
    REQUIRE(omega_oracle(4, 3, 2, 1) == Rational(0));

    REQUIRE_THROWS_AS(omega_oracle(3, 2, 2, 2), std::invalid_argument);  // even order
    REQUIRE_THROWS_AS(omega_oracle(3, 3, 2, 3), std::invalid_argument);  // k out of range
    REQUIRE_THROWS_AS(omega_oracle(3, 2, 2, 5), std::invalid_argument);  // order too large
}

TEST_CASE("an index 1 on either side forces order 1 and value 1", "[oracle]") {
    for (long n = 2; n <= 6; ++n)
        for (long k = 1; k <= n - 1; ++k) {
            REQUIRE(omega_oracle(n, k, 1, 1) == Rational(1));
            REQUIRE(omega_oracle(n, 1, k, 1) == Rational(1));
        }
}

TEST_CASE("structure constants rescale linearly with the component scales", "[oracle]") {
    long n = 5, k = 3, l = 2, m = 3;
    long i = k + l - m;
    Rational ak(3, 2), al(-2, 7), ai(5, 3);
    const GBasis& b = g_basis_cache(n);
    MatQ com = bracket_matrix(ak * mat_pow(b.triple().E, k), al * mat_pow(b.triple().F, l));
    // extract against the rescaled basis element ai * G_{i,k-l}
    Rational c = coeff_extract(n, com, i, k - l) / ai;
    Rational scaled = Rational(factorial(2 * l - m)) * c;
    if (l % 2) scaled = -scaled;
    REQUIRE(scaled == ak * al / ai * omega_oracle(n, k, l, m));
}
