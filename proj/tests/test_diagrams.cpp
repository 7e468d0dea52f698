#include <catch2/catch_amalgamated.hpp>

#include "translie/cg.hpp"
#include "translie/identities.hpp"

#include <random>

using namespace translie;

namespace {

DenseTensor random_tensor(std::mt19937& gen, long rank) {
    DenseTensor t(rank);
    for (std::size_t m = 0; m < t.size(); ++m)
        t.entry(m) = Rational(static_cast<long>(gen() % 19) - 9);
    return t;
}

BinaryForm random_form(std::mt19937& gen, long deg) {
    BinaryForm f(deg);
    for (long a = 0; a <= deg; ++a) f.coeff(a) = Rational(static_cast<long>(gen() % 19) - 9);
    return f;
}

MatQ random_matrix(std::mt19937& gen, long n) {
    MatQ m(n);
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= n; ++j) m.at(i, j) = Rational(static_cast<long>(gen() % 19) - 9);
    return m;
}

HalfInt half(long twice) { return HalfInt::from_twice(twice); }

}  // namespace

TEST_CASE("epsilon and delta building blocks", "[diagrams]") {
    DenseTensor eps = epsilon();
    REQUIRE(eps.entry(0b01) == Rational(1));
    REQUIRE(eps.entry(0b10) == Rational(-1));
    REQUIRE(eps.entry(0b00).is_zero());
    REQUIRE(eps.entry(0b11).is_zero());

    // eps . eps^T over the second leg is the identity line
    REQUIRE(contract(eps, {1}, eps, {1}) == delta_line());
    // full self-pairing: sum eps_{ab} eps_{ab} = 2
    REQUIRE(contract(eps, {0, 1}, eps, {0, 1}).entry(0) == Rational(2));
    // antisymmetry dies under symmetrization
    REQUIRE(symmetrize(eps, {0, 1}).is_zero());

    REQUIRE_THROWS_AS(DenseTensor(17), std::invalid_argument);
}

TEST_CASE("delta line and identity map act as identities", "[diagrams]") {
    std::mt19937 gen(53u);
    DenseTensor t = random_tensor(gen, 2);
    REQUIRE(contract(delta_line(), {1}, t, {0}) == t);

    for (long s = 1; s <= 4; ++s) {
        std::vector<std::pair<long, long>> pairs;
        for (long u = 0; u < s; ++u) pairs.push_back({u, s + u});
        DenseTensor tr = contract_self(identity_map(s), pairs);
        REQUIRE(tr.entry(0) == Rational(pow_int(Int(2), s)));
    }
}

TEST_CASE("arrow orientation flips the sign of a contraction", "[diagrams]") {
    std::mt19937 gen(59u);
    for (int t = 0; t < 4; ++t) {
        DenseTensor a = random_tensor(gen, 3), b = random_tensor(gen, 2);
        DenseTensor plus = contract(a, {1}, b, {0}, {Arrow::Eps});
        DenseTensor minus = contract(a, {1}, b, {0}, {Arrow::EpsRev});
        REQUIRE(plus == Rational(-1) * minus);
    }
}

TEST_CASE("symmetrization is an idempotent projection that absorbs sub-symmetrizers",
          "[diagrams]") {
    std::mt19937 gen(61u);
    for (int t = 0; t < 4; ++t) {
        DenseTensor a = random_tensor(gen, 5);
        DenseTensor s = symmetrize(a, {0, 1, 2, 3});
        REQUIRE(symmetrize(s, {0, 1, 2, 3}) == s);
        REQUIRE(symmetrize(symmetrize(a, {0, 1}), {0, 1, 2, 3}) == s);
        // permuting the symmetrized legs leaves the tensor fixed
        REQUIRE(permute(s, {1, 0, 2, 3, 4}) == s);
        REQUIRE(permute(s, {2, 3, 0, 1, 4}) == s);
    }
}

TEST_CASE("forms round-trip through symmetric tensors", "[diagrams]") {
    std::mt19937 gen(67u);
    for (long d = 0; d <= 6; ++d) {
        BinaryForm f = random_form(gen, d);
        REQUIRE(to_form(to_tensor(f)) == f);
    }
    // coefficient convention: x^2 has entry 1 at the all-2 index of C(2,2)=1
    DenseTensor x2 = to_tensor(BinaryForm::monomial(2, 1));  // xy
    REQUIRE(x2.entry(0b01) == Rational(1, 2));
    REQUIRE(x2.entry(0b10) == Rational(1, 2));
    REQUIRE_THROWS_AS(to_form(epsilon()), std::invalid_argument);
}

TEST_CASE("endomorphisms round-trip through biforms", "[diagrams]") {
    std::mt19937 gen(71u);
    for (long n = 2; n <= 5; ++n)
        for (int t = 0; t < 3; ++t) {
            MatQ m = random_matrix(gen, n);
            BiForm bf = endo_to_biform(m);
            REQUIRE(bf.group_symmetric());
            REQUIRE(biform_to_endo(bf) == m);
            REQUIRE(trace_biform(bf) == m.trace());
        }
    REQUIRE(trace_biform(endo_to_biform(MatQ::identity(4))) == Rational(4));
}

TEST_CASE("biform composition mirrors matrix multiplication", "[diagrams]") {
    std::mt19937 gen(73u);
    for (long n = 2; n <= 4; ++n) {
        MatQ a = random_matrix(gen, n), b = random_matrix(gen, n), c = random_matrix(gen, n);
        BiForm ba = endo_to_biform(a), bb = endo_to_biform(b), bc = endo_to_biform(c);
        REQUIRE(compose(ba, bb) == endo_to_biform(a * b));
        REQUIRE(compose(compose(ba, bb), bc) == compose(ba, compose(bb, bc)));
        REQUIRE(compose(identity_biform(n), ba) == ba);
        REQUIRE(compose(ba, identity_biform(n)) == ba);
        REQUIRE(bf_ad(ba, bb) == endo_to_biform(bracket_matrix(a, b)));
    }
}

TEST_CASE("component projections of the identity", "[diagrams]") {
    for (long n = 2; n <= 5; ++n) {
        BiForm id = identity_biform(n);
        REQUIRE(pi_project(id, 0) == BinaryForm::monomial(0, 0, Rational(n)));
        for (long i = 1; i <= n - 1; ++i) REQUIRE(pi_project(id, i).is_zero());
    }
}

TEST_CASE("projections and sections are mutually inverse", "[diagrams]") {
    std::mt19937 gen(79u);
    for (long n = 2; n <= 4; ++n) {
        long d = n - 1;
        // section then project: delta_{ij} on every monomial
        for (long i = 0; i <= d; ++i)
            for (long xa = 0; xa <= 2 * i; ++xa) {
                BinaryForm f = BinaryForm::monomial(2 * i, xa);
                BiForm sec = pi_section(n, i, f);
                for (long j = 0; j <= d; ++j) {
                    BinaryForm expected(2 * j);
                    if (i == j) expected = f;
                    REQUIRE(pi_project(sec, j) == expected);
                }
            }
        // project then re-assemble: identity on biforms of endomorphisms
        for (int t = 0; t < 3; ++t) {
            BiForm bf = endo_to_biform(random_matrix(gen, n));
            std::map<long, BinaryForm> comps;
            for (long i = 0; i <= d; ++i) comps.emplace(i, pi_project(bf, i));
            REQUIRE(pi_inverse(n, comps) == bf);
        }
    }
}

TEST_CASE("derived 2x2 action: quadratic forms and projections", "[diagrams]") {
    REQUIRE(q_form(sl2_e()) == BinaryForm::monomial(2, 2, Rational(-1)));   // -x^2
    REQUIRE(q_form(sl2_f()) == BinaryForm::monomial(2, 0));                 //  y^2
    REQUIRE(q_form(sl2_h()) == BinaryForm::monomial(2, 1, Rational(-2)));   // -2xy

    MatQ generic(2);
    generic.at(1, 1) = Rational(3);
    generic.at(1, 2) = Rational(1);
    generic.at(2, 1) = Rational(-2);
    generic.at(2, 2) = Rational(-3);

    for (long n = 2; n <= 4; ++n) {
        REQUIRE(pi_project(dpi(sl2_e(), n), 1) ==
                Rational(n * (n + 1), 6) * q_form(sl2_e()));
        for (const MatQ& x : {sl2_e(), sl2_f(), sl2_h(), generic}) {
            REQUIRE(verify_dpi_projection(x, n));
            REQUIRE(verify_insertion_form(x, n));
        }
        REQUIRE(verify_dpi_sl2_relations(n));
    }
}

TEST_CASE("principal powers project onto single components", "[diagrams]") {
    REQUIRE(verify_power_projections(3));
    REQUIRE(verify_power_projections(4));
}

TEST_CASE("epsilon-contraction transvectant matches the classical one up to sign",
          "[diagrams]") {
    REQUIRE(transvectant_eps(BinaryForm::monomial(2, 2), BinaryForm::monomial(2, 0), 1) ==
            BinaryForm::monomial(2, 1, Rational(-1)));  // -xy
    std::mt19937 gen(83u);
    for (long a = 0; a <= 5; ++a)
        for (long b = 0; b <= 5; ++b) {
            BinaryForm f = random_form(gen, a), g = random_form(gen, b);
            for (long t = 0; t <= std::min(a, b); ++t) {
                BinaryForm expected = transvectant_classical(f, g, t);
                if (t % 2) expected = Rational(-1) * expected;
                REQUIRE(transvectant_eps(f, g, t) == expected);
            }
        }
}

TEST_CASE("join-then-split satisfies the Schur orthogonality", "[diagrams]") {
    REQUIRE(cg_schur_coeff(1, 1, 1) == Rational(2));
    REQUIRE(cg_schur_coeff(2, 2, 1) == Rational(1));
    REQUIRE(cg_schur_coeff(2, 2, 2) == Rational(3));
    REQUIRE(verify_cg_schur(1, 1, 1, 1));
    REQUIRE(verify_cg_schur(2, 2, 1, 1));
    REQUIRE(verify_cg_schur(2, 2, 1, 2));  // mismatched orders annihilate
    REQUIRE(verify_cg_schur(3, 2, 2, 2));
    REQUIRE(verify_cg_schur(3, 1, 0, 1));
}

TEST_CASE("split-rejoin sum resolves the double symmetrizer", "[diagrams]") {
    REQUIRE(verify_cg_decomp(1, 1));
    REQUIRE(verify_cg_decomp(2, 1));
    REQUIRE(verify_cg_decomp(0, 3));
    REQUIRE(verify_cg_decomp(2, 2));
}

TEST_CASE("recoupling diagram evaluates the rational 6j normalization", "[diagrams]") {
    REQUIRE(rho_via_diagram({HalfInt(0), HalfInt(0), HalfInt(0), HalfInt(0), HalfInt(0),
                             HalfInt(0)}) == Rational(1));
    REQUIRE(rho_via_diagram({half(1), half(3), half(1), half(1), half(1), half(1)}) ==
            Rational(0));

    const SixJArgs spots[] = {
        {HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(1), HalfInt(1)},
        {half(1), half(1), HalfInt(1), half(1), half(1), HalfInt(1)},
        {HalfInt(1), HalfInt(1), HalfInt(2), HalfInt(1), HalfInt(1), HalfInt(1)},
        {HalfInt(2), HalfInt(2), HalfInt(2), HalfInt(1), HalfInt(1), HalfInt(1)},
        {HalfInt(2), HalfInt(1), HalfInt(1), HalfInt(0), HalfInt(1), HalfInt(1)},
    };
    for (const SixJArgs& a : spots) REQUIRE(rho_via_diagram(a) == rho(a));
    REQUIRE_THROWS_AS(rho_via_diagram({HalfInt(3), HalfInt(3), HalfInt(3), HalfInt(3),
                                       HalfInt(3), HalfInt(3)}),
                      std::invalid_argument);
}

TEST_CASE("composition coefficients on pinned inputs", "[diagrams]") {
    for (long n = 2; n <= 5; ++n)
        for (long j = 0; j <= n - 1; ++j) REQUIRE(p_coeff(n, 0, j, j) == Rational(1, n));
    REQUIRE(p_coeff(3, 1, 1, 1) == Rational(-1, 2));
    REQUIRE(p_coeff(4, 2, 2, 2) == Rational(0));
    REQUIRE_THROWS_AS(p_coeff(4, 1, 1, 3), std::invalid_argument);  // triangle violation
}

TEST_CASE("component-wise composition matches the transvectant expansion", "[diagrams]") {
    REQUIRE(verify_composition_thm(3, 1, 1, 1));
    REQUIRE(verify_composition_thm(3, 1, 1, 2));
    REQUIRE(verify_composition_thm(3, 2, 1, 1));
    REQUIRE(verify_composition_thm(4, 2, 2, 2));
}

TEST_CASE("sl2 sections commute into first-order transvectants", "[diagrams]") {
    REQUIRE(verify_sl2_commutation_rule(3));
}

TEST_CASE("biform pipeline extracts structure constants end to end", "[diagrams]") {
    REQUIRE(omega_via_diagrams(3, 2, 2, 3) == Rational(-2));
    for (long n = 3; n <= 4; ++n)
        for (long k = 1; k <= n - 1; ++k)
            for (long l = 1; l <= n - 1; ++l)
                for (long m = 1; m <= 2 * std::min(k, l) - 1; m += 2) {
                    if (k + l - m > n - 1) continue;
                    REQUIRE(omega_via_diagrams(n, k, l, m) == omega_formula({n, k, l, m}));
                }
}
