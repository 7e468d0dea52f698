#pragma once

// Exact Wigner 6j symbols through Racah's single-sum formula, together with
// the rational normalization rho that the tensor-diagram route computes
// directly. Both carry the same q-sum; the 6j is irrational in general and is
// returned as a Radical.

#include "translie/half_int.hpp"
#include "translie/radical.hpp"
#include "translie/rational.hpp"

#include <algorithm>
#include <array>

namespace translie {

struct SixJArgs {
    HalfInt j1, j2, j12, j3, J, j23;
};

// (a, b, c) is a triad iff a+b+c is an integer and |a-b| <= c <= a+b.
inline bool is_triad(HalfInt a, HalfInt b, HalfInt c) {
    long ta = a.twice(), tb = b.twice(), tc = c.twice();
    if ((ta + tb + tc) % 2 != 0) return false;
    return std::abs(ta - tb) <= tc && tc <= ta + tb;
}

inline bool all_triads(const SixJArgs& a) {
    return is_triad(a.j1, a.j2, a.j12) && is_triad(a.j2, a.j3, a.j23) &&
           is_triad(a.j1, a.j23, a.J) && is_triad(a.j12, a.j3, a.J);
}

namespace detail {

struct RacahParts {
    std::array<long, 4> T;  // triangle sums (integers once triads hold)
    std::array<long, 3> S;
    Int K1, K2, K3;
};

inline long tw_sum_to_whole(long tw) {
    internal_check(tw % 2 == 0, "6j: non-integer triangle sum");
    return tw / 2;
}

inline RacahParts racah_parts(const SixJArgs& a) {
    RacahParts p;
    p.T = {tw_sum_to_whole(a.j1.twice() + a.j2.twice() + a.j12.twice()),
           tw_sum_to_whole(a.j2.twice() + a.j3.twice() + a.j23.twice()),
           tw_sum_to_whole(a.j1.twice() + a.j23.twice() + a.J.twice()),
           tw_sum_to_whole(a.j12.twice() + a.j3.twice() + a.J.twice())};
    p.S = {tw_sum_to_whole(a.j1.twice() + a.j2.twice() + a.j3.twice() + a.J.twice()),
           tw_sum_to_whole(a.j2.twice() + a.j12.twice() + a.j23.twice() + a.J.twice()),
           tw_sum_to_whole(a.j1.twice() + a.j3.twice() + a.j12.twice() + a.j23.twice())};
    p.K1 = factorial(a.j1.twice()) * factorial(a.j2.twice()) * factorial(a.j3.twice()) *
           factorial(a.j12.twice()) * factorial(a.j23.twice()) * factorial(a.J.twice());
    p.K2 = factorial(p.T[0] + 1) * factorial(p.T[1] + 1) * factorial(p.T[2] + 1) *
           factorial(p.T[3] + 1);
    auto triad_factorials = [](HalfInt x, HalfInt y, HalfInt z) -> Int {
        long tx = x.twice(), ty = y.twice(), tz = z.twice();
        return factorial((-tx + ty + tz) / 2) * factorial((tx - ty + tz) / 2) *
               factorial((tx + ty - tz) / 2);
    };
    p.K3 = triad_factorials(a.j1, a.j2, a.j12) * triad_factorials(a.j2, a.j3, a.j23) *
           triad_factorials(a.j1, a.j23, a.J) * triad_factorials(a.j12, a.j3, a.J);
    return p;
}

// sum_q (-1)^q (q+1)! / [prod (q-T_i)! prod (S_j-q)!] over the finite window
// [max T, min S]. The q+1 >= 0 constraint never binds: q >= max T >= 0.
inline Rational racah_sum(const RacahParts& p) {
    long lo = *std::max_element(p.T.begin(), p.T.end());
    long hi = *std::min_element(p.S.begin(), p.S.end());
    Rational acc;
    for (long q = lo; q <= hi; ++q) {
        Int den = factorial(q - p.T[0]) * factorial(q - p.T[1]) * factorial(q - p.T[2]) *
                  factorial(q - p.T[3]) * factorial(p.S[0] - q) * factorial(p.S[1] - q) *
                  factorial(p.S[2] - q);
        Rational term(factorial(q + 1), den);
        acc += (q % 2) ? -term : term;
    }
    return acc;
}

}  // namespace detail

// rho = (-1)^{j1+j2+j3+J} K3 / ((2J+1) K1) * racah_sum; 0 off the triads.
inline Rational rho(const SixJArgs& a) {
    if (!all_triads(a)) return Rational(0);
    auto p = detail::racah_parts(a);
    Rational r = Rational(p.K3, (a.J.twice() + 1) * p.K1) * detail::racah_sum(p);
    return (p.S[0] % 2) ? -r : r;
}

// Racah's formula sqrt(K3/K2) * sum, cross-checked against the rho route.
inline Radical sixj(const SixJArgs& a) {
    if (!all_triads(a)) return Radical();
    auto p = detail::racah_parts(a);
    Radical direct = detail::racah_sum(p) * Radical::sqrt_of(Rational(p.K3, p.K2));

    Rational r = rho(a);
    Int k2k3 = p.K2 * p.K3;
    Rational pre = Rational((a.J.twice() + 1) * p.K1, k2k3) * r;
    if (p.S[0] % 2) pre = -pre;
    Radical via_rho(pre, k2k3);  // (+-)(2J+1) K1 rho / sqrt(K2 K3)

    internal_check(direct == via_rho, "6j: Racah route and rho route disagree");
    return direct;
}

}  // namespace translie
