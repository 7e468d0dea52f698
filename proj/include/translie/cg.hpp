#pragma once

// Clebsch-Gordan intertwiner blocks as explicit tensors, the Schur and
// decomposition identities built from them, and the recoupling diagram that
// evaluates rho (the rational 6j normalization) independently of the Racah
// sum.
//
// A join block maps H_a (x) H_b -> H_{a+b-2k}: symmetrize each input group,
// glue k leg pairs across the groups with eps (first index on the a side),
// symmetrize the output. A split block is its transpose with the same eps
// orientation; the m = n = k = 1 Schur value +2 = C(2,1)/(C(1,1)C(1,1))
// pins that choice.

#include "translie/sixj.hpp"
#include "translie/tensor.hpp"

#include <utility>
#include <vector>

namespace translie {

// Legs: [0,a) first input group, [a,a+b) second, [a+b, a+b+out_deg) output.
struct CGBlock {
    long a, b, k;
    DenseTensor t;
    long out_deg() const { return a + b - 2 * k; }
};

inline CGBlock join_block(long a, long b, long k) {
    require_arg(a >= 0 && b >= 0, "join_block: negative degree");
    require_arg(k >= 0 && k <= std::min(a, b), "join_block: contraction order out of range");
    DenseTensor t = identity_map(a + b);
    t = symmetrize(t, leg_range(0, a));
    t = symmetrize(t, leg_range(a, b));
    // Glue the last k strands of the a group to the first k of the b group,
    // eps oriented a-side first. Strand s has out-leg a+b+s here.
    std::vector<std::pair<long, long>> pairs;
    for (long s = 0; s < k; ++s) pairs.push_back({a + b + (a - 1 - s), a + b + a + s});
    t = contract_self(t, pairs, std::vector<Arrow>(k, Arrow::Eps));
    t = symmetrize(t, leg_range(a + b, a + b - 2 * k));
    return {a, b, k, t};
}

// Transpose of the join: legs [0, c) input (c = a+b-2k), then the a group,
// then the b group of outputs.
struct SplitBlock {
    long a, b, k;
    DenseTensor t;
    long in_deg() const { return a + b - 2 * k; }
};

inline SplitBlock split_block(long a, long b, long k) {
    CGBlock j = join_block(a, b, k);
    long c = j.out_deg();
    std::vector<long> perm(2 * (a + b) - 2 * k);
    for (long t = 0; t < c; ++t) perm[t] = a + b + t;
    for (long t = 0; t < a + b; ++t) perm[c + t] = t;
    return {a, b, k, permute(j.t, perm)};
}

// Applies a join to a state tensor whose legs listed in state_legs carry the
// two input groups (a legs then b legs, in that order). Output legs: the
// joined H_{a+b-2k} legs first, then the untouched state legs in order.
inline DenseTensor apply_join(const CGBlock& block, const DenseTensor& state,
                              const std::vector<long>& state_legs) {
    require_arg(long(state_legs.size()) == block.a + block.b, "apply_join: leg count mismatch");
    // contract(b=block, ...) would put spectator legs first; keep block first
    // so its output legs lead.
    return contract(block.t, leg_range(0, block.a + block.b), state, state_legs);
}

inline DenseTensor apply_split(const SplitBlock& block, const DenseTensor& state,
                               const std::vector<long>& state_legs) {
    require_arg(long(state_legs.size()) == block.in_deg(), "apply_split: leg count mismatch");
    return contract(block.t, leg_range(0, block.in_deg()), state, state_legs);
}

// join_l . split_k on H_{a+b-2k} equals delta_{k,l} times this scalar times
// the identity.
inline Rational cg_schur_coeff(long a, long b, long k) {
    return Rational(binomial(a + b - k + 1, k), binomial(a, k) * binomial(b, k));
}

inline bool verify_cg_schur(long m, long n, long k, long l) {
    if (k > std::min(m, n) || l > std::min(m, n) || k < 0 || l < 0) return false;
    SplitBlock split = split_block(m, n, k);
    CGBlock join = join_block(m, n, l);
    long c = m + n - 2 * k;
    for (long xpow = 0; xpow <= c; ++xpow) {
        DenseTensor u = to_tensor(BinaryForm::monomial(c, xpow));
        DenseTensor mid = apply_split(split, u, leg_range(0, c));
        DenseTensor out = apply_join(join, mid, leg_range(0, m + n));
        DenseTensor expected(m + n - 2 * l);
        if (k == l) expected = cg_schur_coeff(m, n, k) * u;
        if (!(out == expected)) return false;
    }
    return true;
}

// Resolution of the double symmetrizer: sum_k C(m,k)C(n,k)/C(m+n-k+1,k)
// times the split-rejoin map equals S_m (x) S_n, entrywise as map tensors
// (in-legs 0..m+n-1, out-legs m+n..2(m+n)-1).
inline bool verify_cg_decomp(long m, long n) {
    DenseTensor target = identity_map(m + n);
    target = symmetrize(target, leg_range(0, m));
    target = symmetrize(target, leg_range(m, n));

    DenseTensor acc(2 * (m + n));
    for (long k = 0; k <= std::min(m, n); ++k) {
        CGBlock join = join_block(m, n, k);
        SplitBlock split = split_block(m, n, k);
        long c = m + n - 2 * k;
        // (split . join)(in; out) = sum_c join(in; c) split(c; out)
        DenseTensor comp =
            contract(join.t, leg_range(m + n, c), split.t, leg_range(0, c));
        acc = acc + Rational(binomial(m, k) * binomial(n, k), binomial(m + n - k + 1, k)) * comp;
    }
    return acc == target;
}

// The recoupling diagram: split J into (j1, j23), split j23 into (j2, j3),
// join (j1, j2) into j12, join (j12, j3) back into J. The result is rho
// times the identity on H_{2J}; rho is extracted and the scalarness checked.
// Returns 0 when any of the four couplings is not constructible (a triangle
// or integrality failure).
inline Rational rho_via_diagram(const SixJArgs& args) {
    long d1 = args.j1.twice(), d2 = args.j2.twice(), d3 = args.j3.twice();
    long d12 = args.j12.twice(), d23 = args.j23.twice(), dJ = args.J.twice();
    require_arg(dJ <= 4 && d1 <= 4 && d2 <= 4 && d3 <= 4 && d12 <= 4 && d23 <= 4,
                "rho_via_diagram: desk-scale bound is spins <= 2");

    // Coupling (a, b -> c) needs a+b-c even, nonnegative, and at most 2min(a,b).
    auto coupling = [](long a, long b, long c, long& k) {
        k = a + b - c;
        if (k < 0 || k % 2 != 0) return false;
        k /= 2;
        return k <= std::min(a, b);
    };
    long k1, k2, k3, k4;
    if (!coupling(d1, d23, dJ, k1) || !coupling(d2, d3, d23, k2) ||
        !coupling(d1, d2, d12, k3) || !coupling(d12, d3, dJ, k4))
        return Rational(0);

    SplitBlock splitJ = split_block(d1, d23, k1);
    SplitBlock split23 = split_block(d2, d3, k2);
    CGBlock join12 = join_block(d1, d2, k3);
    CGBlock joinJ = join_block(d12, d3, k4);

    bool have_rho = false;
    Rational value;
    for (long xpow = 0; xpow <= dJ; ++xpow) {
        DenseTensor u = to_tensor(BinaryForm::monomial(dJ, xpow));
        // legs after each step are commented as (group, ...)
        DenseTensor s = apply_split(splitJ, u, leg_range(0, dJ));  // (j1, j23)
        s = apply_split(split23, s, leg_range(d1, d23));           // (j2, j3, j1)
        std::vector<long> j1j2 = leg_range(d2 + d3, d1);
        for (long t = 0; t < d2; ++t) j1j2.push_back(t);
        s = apply_join(join12, s, j1j2);                           // (j12, j3)
        s = apply_join(joinJ, s, leg_range(0, d12 + d3));          // back on H_2J
        for (std::size_t mask = 0; mask < s.size(); ++mask) {
            const Rational& num = s.entry(mask);
            const Rational& den = u.entry(mask);
            if (den.is_zero()) {
                internal_check(num.is_zero(), "rho_via_diagram: psi is not scalar");
                continue;
            }
            Rational ratio = num / den;
            if (!have_rho) {
                value = ratio;
                have_rho = true;
            } else {
                internal_check(ratio == value, "rho_via_diagram: psi is not scalar");
            }
        }
    }
    internal_check(have_rho, "rho_via_diagram: empty representation space");
    return value;
}

}  // namespace translie
