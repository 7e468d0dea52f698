#pragma once

// Closed-form structure constants omega_{k,l}^{(m)}(sl_n): the Q*R product
// formula, its m = 1 and m = 2l-1 special cases, the 6j-symbol route, the
// appendix-style table enumeration, and a memo cache for the bracket engine.
//
// Domain boundary: keys with k+l-m > n-1 (target component absent) answer 0;
// the formula's stray factorial is never evaluated there.

#include "translie/principal.hpp"
#include "translie/rational.hpp"
#include "translie/sixj.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace translie {

struct OmegaKey {
    long n, k, l, m;
};

inline void check_omega_key(const OmegaKey& key) {
    check_omega_indices(key.n, key.k, key.l, key.m);
}

inline bool omega_triad_holds(const OmegaKey& key) {
    return key.k + key.l - key.m <= key.n - 1;
}

// Q = 2 (-1)^{k+l+n-1} (2k+2l-2m+1) k!^2 l!^2 (n-k-l+m-1)! / (m! (n+k+l-m)!)
inline Rational omega_q_factor(const OmegaKey& key) {
    check_omega_key(key);
    require_arg(omega_triad_holds(key), "omega Q factor: triad k+l-m <= n-1 required");
    auto [n, k, l, m] = key;
    Int kf = factorial(k), lf = factorial(l);
    Rational q(Int(2 * (2 * k + 2 * l - 2 * m + 1)) * kf * kf * lf * lf *
                   factorial(n - k - l + m - 1),
               factorial(m) * factorial(n + k + l - m));
    return (parity_sign(k + l + n - 1) < 0) ? -q : q;
}

// R = sum_q (-1)^q C(q+1, 2k+2l-m+1) C(m, q-k-l+m-n+1)
//                  C(2k-m, q-l-n+1) C(2l-m, q-k-n+1),
// finitely supported via the Pascal-triangle guard; the window below is the
// intersection of the four binomial supports.
inline Int omega_r_factor(const OmegaKey& key) {
    check_omega_key(key);
    auto [n, k, l, m] = key;
    long lo = std::max({2 * k + 2 * l - m, k + l - m + n - 1, l + n - 1, k + n - 1});
    long hi = std::min({k + l + n - 1, 2 * k + l - m + n - 1, k + 2 * l - m + n - 1});
    Int acc(0);
    for (long q = lo; q <= hi; ++q) {
        Int term = binomial(q + 1, 2 * k + 2 * l - m + 1) *
                   binomial(m, q - k - l + m - n + 1) * binomial(2 * k - m, q - l - n + 1) *
                   binomial(2 * l - m, q - k - n + 1);
        if (q % 2) term = -term;
        acc += term;
    }
    return acc;
}

inline Rational omega_formula(const OmegaKey& key) {
    check_omega_key(key);
    if (!omega_triad_holds(key)) return Rational(0);
    return omega_q_factor(key) * Rational(omega_r_factor(key));
}

// omega with every out-of-domain index answered 0 (absent component).
// Convenient for symmetry identities whose transformed indices may leave the
// valid window.
inline Rational omega_or_zero(long n, long k, long l, long m) {
    if (n < 2 || k < 1 || k > n - 1 || l < 1 || l > n - 1) return Rational(0);
    if (m % 2 == 0 || m < 1 || m > 2 * std::min(k, l) - 1) return Rational(0);
    return omega_formula({n, k, l, m});
}

// m = 1: (1/2) (2k)!(2l)!/(2k+2l-2)!, independent of n. Callers apply the
// triad zeroing for their n themselves.
inline Rational omega_m1(long k, long l) {
    require_arg(k >= 1 && l >= 1, "omega_m1: k, l must be >= 1");
    return Rational(factorial(2 * k) * factorial(2 * l), Int(2) * factorial(2 * k + 2 * l - 2));
}

// m = 2l-1 (maximal): (-1)^{l+1} l (k!/(k-l+1)!)^2 C(n+k,2k+1)/C(n+k-l+1,2k-2l+3).
inline Rational omega_max(long n, long k, long l) {
    require_arg(l >= 1 && l <= k && k <= n - 1, "omega_max: need 1 <= l <= k <= n-1");
    Int ratio = factorial(k) / factorial(k - l + 1);
    Rational w = Rational(Int(l) * ratio * ratio) *
                 Rational(binomial(n + k, 2 * k + 1), binomial(n + k - l + 1, 2 * k - 2 * l + 3));
    return (l % 2 == 0) ? -w : w;
}

// Eq. route through the standard 6j symbol {k, l, k+l-m; (n-1)/2 x3}. The
// radical parts must cancel exactly; a surviving radicand is a bug.
inline Rational omega_via_sixj(const OmegaKey& key) {
    check_omega_key(key);
    require_arg(omega_triad_holds(key), "omega_via_sixj: triad k+l-m <= n-1 required");
    auto [n, k, l, m] = key;
    HalfInt half = HalfInt::from_twice(n - 1);
    Radical sj = sixj({HalfInt(k), HalfInt(l), HalfInt(k + l - m), half, half, half});

    Rational inner(factorial(2 * k - m) * factorial(2 * l - m) * factorial(n + k) *
                       factorial(n + l) * factorial(n - k - l + m - 1),
                   factorial(m) * factorial(n - k - 1) * factorial(n - l - 1) *
                       factorial(2 * k + 2 * l - m + 1) * factorial(n + k + l - m));
    Rational pre(Int(2 * (2 * k + 2 * l - 2 * m + 1)) * factorial(k) * factorial(l),
                 factorial(k + l - m));
    if (parity_sign(k + l + n - 1) < 0) pre = -pre;

    Radical value = pre * (Radical::sqrt_of(inner) * sj);
    internal_check(value.is_rational(), "omega_via_sixj: radical failed to collapse");
    return value.rational_value();
}

inline Rational omega_cached(long n, long k, long l, long m) {
    static std::mutex mu;
    static std::map<std::tuple<long, long, long, long>, Rational> cache;
    std::scoped_lock lock(mu);
    auto [it, inserted] = cache.try_emplace({n, k, l, m});
    if (inserted) it->second = omega_formula({n, k, l, m});
    return it->second;
}

struct OmegaTableEntry {
    long k, l, m;
    Rational value;
};

// Width of the appendix tables for sl_n: the longest run of odd m values
// that any diagonal (k,k) row can populate before the triad zeroes it.
inline long omega_table_width(long n) {
    long width = 0;
    for (long k = 2; k <= n - 1; ++k) {
        long lo = std::max(1L, 2 * k - n + 1);
        long count = 0;
        for (long m = 2 * k - 1; m >= lo; m -= 2) ++count;
        width = std::max(width, count);
    }
    return width;
}

// Appendix layout: rows (k,l) with k >= l >= 2 in ascending order; each row
// lists m = 2l-1, 2l-3, ... for the table width, stopping at m = 1. Zero
// values (failed triads) are kept; they are part of the published tables.
// Rows with l = 1 are omitted (omega_{k,1}^{(m)} = delta_{1,m} throughout).
inline std::vector<OmegaTableEntry> omega_table(long n) {
    require_arg(n >= 2, "omega_table: n must be >= 2");
    std::vector<OmegaTableEntry> rows;
    long width = omega_table_width(n);
    for (long k = 2; k <= n - 1; ++k)
        for (long l = 2; l <= k; ++l)
            for (long c = 0; c < width; ++c) {
                long m = 2 * l - 1 - 2 * c;
                if (m < 1) break;
                rows.push_back({k, l, m, omega_formula({n, k, l, m})});
            }
    return rows;
}

}  // namespace translie
