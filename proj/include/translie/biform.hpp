#pragma once

// Endomorphisms of the form space H_d as bi-symmetric tensors ("biforms"),
// the eps-dualization bridging them to matrices, composition and trace, the
// Pi projections onto single-degree components, and their inverse.
//
// Conventions, fixed once and verified by the test suite:
//   * A map tensor T(out; in) acts by img(out) = sum_in T(out,in) state(in).
//     Matrices are read in the monomial basis ordered by descending x-power,
//     e_a = x^{d-a} y^a (row/column a+1 in the 1-based MatQ).
//   * The biform of a map is A = T with every in-leg right-multiplied by
//     eps: A(g1; g2) = sum_in T(g1, in) prod_t eps(in_t, g2_t). Per leg this
//     collapses to a bit flip with sign -1 exactly when the in value is 2.
//   * Composition of biforms therefore carries the inverse metric
//     eps(B-value, A-value) between A's second group and B's first group,
//     and the trace glues group pairs with eps(g1-value, g2-value). The
//     identity biform of H_1 is the eps tensor itself and its trace is 2.
//   * Pi_i contracts d-i cross-group pairs with eps(g1, g2) and symmetrizes
//     the 2i survivors; Pi_0 is the trace (n on the identity).

#include "translie/matrix.hpp"
#include "translie/tensor.hpp"

#include <map>
#include <utility>
#include <vector>

namespace translie {

// Bi-symmetric tensor with dl group-1 legs [0, dl) and dr group-2 legs
// [dl, dl+dr).
struct BiForm {
    long dl, dr;
    DenseTensor t;

    BiForm(long dl_, long dr_) : dl(dl_), dr(dr_), t(dl_ + dr_) {
        require_arg(dl_ >= 0 && dr_ >= 0, "BiForm: negative bidegree");
    }
    BiForm(long dl_, long dr_, DenseTensor tensor) : dl(dl_), dr(dr_), t(std::move(tensor)) {
        require_arg(t.rank() == dl + dr, "BiForm: rank does not match bidegree");
    }

    bool group_symmetric() const {
        return t == symmetrize(symmetrize(t, leg_range(0, dl)), leg_range(dl, dr));
    }

    friend bool operator==(const BiForm& a, const BiForm& b) {
        return a.dl == b.dl && a.dr == b.dr && a.t == b.t;
    }
    friend BiForm operator+(const BiForm& a, const BiForm& b) {
        require_arg(a.dl == b.dl && a.dr == b.dr, "BiForm: bidegree mismatch");
        return {a.dl, a.dr, a.t + b.t};
    }
    friend BiForm operator-(const BiForm& a, const BiForm& b) {
        require_arg(a.dl == b.dl && a.dr == b.dr, "BiForm: bidegree mismatch");
        return {a.dl, a.dr, a.t - b.t};
    }
    friend BiForm operator*(const Rational& c, const BiForm& a) { return {a.dl, a.dr, c * a.t}; }
};

namespace detail {

// Number of 2-valued legs in the masked range [lo, lo+len) (legs, not bits).
inline long twos_in(std::size_t mask, long rank, long lo, long len) {
    long c = 0;
    for (long t = lo; t < lo + len; ++t) c += long((mask >> (rank - 1 - t)) & 1u);
    return c;
}

}  // namespace detail

// Matrix on H_d -> biform: T(out,in) = M[a,b] / C(d, d-a) where a, b are
// read off the index-2 counts (a = d - #2s(out), b = d - #2s(in)); the
// indicator duals on the in side make T group-symmetric. The in legs are
// then eps-dualized as described above.
inline BiForm endo_to_biform(const MatQ& m) {
    long d = m.n() - 1;
    require_arg(2 * d <= kMaxTensorRank, "endo_to_biform: dimension too large for tensors");
    BiForm bf(d, d);
    long rank = 2 * d;
    for (std::size_t out = 0; out < (std::size_t(1) << d); ++out) {
        long a = d - detail::twos_in(out << d, rank, 0, d);
        for (std::size_t g2 = 0; g2 < (std::size_t(1) << d); ++g2) {
            // the dualized in-mask is the bitwise flip of g2, so its 2-count
            // is d minus g2's, and the eps signs multiply to (-1)^that
            long in_twos = d - detail::twos_in(g2, d, 0, d);
            long b = d - in_twos;
            const Rational& entry = m.at(a + 1, b + 1);
            if (entry.is_zero()) continue;
            Rational v = entry / Rational(binomial(d, d - a));
            if (in_twos % 2) v = -v;
            bf.t.entry((out << d) | g2) = v;
        }
    }
    return bf;
}

inline MatQ biform_to_endo(const BiForm& a) {
    require_arg(a.dl == a.dr, "biform_to_endo: bidegree must be square");
    long d = a.dl;
    MatQ m(d + 1);
    // Undualize: T(out,in) = (-1)^{#2s(in)} A(out, flip(in)); then contract
    // with the symmetric basis tensor of e_b on the in side and the
    // indicator dual of e_row on the out side.
    for (std::size_t in = 0; in < (std::size_t(1) << d); ++in) {
        long twos = detail::twos_in(in, d, 0, d);
        long b = d - twos;
        Rational weight(1, binomial(d, d - b));
        if (twos % 2) weight = -weight;
        std::size_t g2 = ~in & ((std::size_t(1) << d) - 1);
        for (std::size_t out = 0; out < (std::size_t(1) << d); ++out) {
            const Rational& entry = a.t.entry((out << d) | g2);
            if (entry.is_zero()) continue;
            long row = d - detail::twos_in(out, d, 0, d);
            m.at(row + 1, b + 1) += weight * entry;
        }
    }
    return m;
}

inline BiForm identity_biform(long n) { return endo_to_biform(MatQ::identity(n)); }

// (A . B) as endomorphisms: glue A's group 2 to B's group 1 with the inverse
// metric, i.e. eps(B-value, A-value).
inline BiForm compose(const BiForm& a, const BiForm& b) {
    require_arg(a.dr == b.dl, "compose: inner bidegrees must match");
    DenseTensor t = contract(a.t, leg_range(a.dl, a.dr), b.t, leg_range(0, b.dl),
                             std::vector<Arrow>(a.dr, Arrow::EpsRev));
    return {a.dl, b.dr, t};
}

inline BiForm bf_ad(const BiForm& a, const BiForm& b) {
    return compose(a, b) - compose(b, a);
}

inline Rational trace_biform(const BiForm& a) {
    require_arg(a.dl == a.dr, "trace_biform: bidegree must be square");
    std::vector<std::pair<long, long>> pairs;
    for (long t = 0; t < a.dl; ++t) pairs.push_back({t, a.dl + t});
    DenseTensor s = contract_self(a.t, pairs, std::vector<Arrow>(a.dl, Arrow::Eps));
    return s.entry(0);
}

// Pi_i: d-i eps arrows across the tail legs of the two groups, then
// symmetrization of the remaining 2i legs, read as a degree-2i form.
inline BinaryForm pi_project(const BiForm& a, long i) {
    require_arg(a.dl == a.dr, "pi_project: bidegree must be square");
    long d = a.dl;
    require_arg(i >= 0 && i <= d, "pi_project: component index out of range");
    std::vector<std::pair<long, long>> pairs;
    for (long t = i; t < d; ++t) pairs.push_back({t, d + t});
    DenseTensor s = contract_self(a.t, pairs, std::vector<Arrow>(d - i, Arrow::Eps));
    s = symmetrize(s, leg_range(0, 2 * i));
    return to_form(s);
}

// Single-component section of Pi: the form's tensor on i legs of each
// group, d-i eps arrows (group-1 index first) on the rest, both groups
// symmetrized, all scaled by C(d,i)^2 / C(d+1+i, 2i+1). Pi_j of the result
// is delta_{ij} times the form (round-tripped in the tests).
inline BiForm pi_section(long n, long i, const BinaryForm& f) {
    long d = n - 1;
    require_arg(i >= 0 && i <= d, "pi_section: component index out of range");
    require_arg(f.degree() == 2 * i, "pi_section: component degree must be 2i");
    DenseTensor core = to_tensor(f);
    for (long s = 0; s < d - i; ++s) core = tensor_product(core, epsilon());
    // legs now: f's 2i legs, then (d-i) eps pairs; route into the two groups
    std::vector<long> perm(2 * d);
    for (long t = 0; t < i; ++t) perm[t] = t;                           // group 1, form part
    for (long t = i; t < d; ++t) perm[t] = 2 * i + 2 * (t - i);         // group 1, eps firsts
    for (long t = 0; t < i; ++t) perm[d + t] = i + t;                   // group 2, form part
    for (long t = i; t < d; ++t) perm[d + t] = 2 * i + 2 * (t - i) + 1; // group 2, eps seconds
    DenseTensor t = permute(core, perm);
    t = symmetrize(t, leg_range(0, d));
    t = symmetrize(t, leg_range(d, d));
    Rational w(binomial(d, i) * binomial(d, i), binomial(n + i, 2 * i + 1));
    return {d, d, w * t};
}

inline BiForm pi_inverse(long n, const std::map<long, BinaryForm>& components) {
    long d = n - 1;
    BiForm acc(d, d);
    for (const auto& [i, f] : components) acc = acc + pi_section(n, i, f);
    return acc;
}

}  // namespace translie
