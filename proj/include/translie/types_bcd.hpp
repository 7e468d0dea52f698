#pragma once

// Structure constants outside type A: so_{2n+1} and sp_{2n} inherit the
// odd-index constants of their ambient sl, with even indices zeroed;
// so_{2n} additionally carries the marker index n' (the extra exponent
// n-1), whose mixed entries vanish and whose diagonal entries the source
// material leaves without a fixed normalization. G2's two nontrivial
// constants are carried as reference data only.

#include "translie/matrix.hpp"
#include "translie/omega.hpp"

#include <optional>

namespace translie {

// omega(so_{2n+1}): equal to omega(sl_{2n+1}) for odd k, l; zero otherwise.
inline Rational omega_type_b(long n, long k, long l, long m) {
    require_arg(n >= 2, "omega_type_b: rank must be >= 2");
    require_arg(k >= 1 && l >= 1 && m >= 1 && m % 2 == 1, "omega_type_b: bad indices");
    if (k % 2 == 0 || l % 2 == 0) return Rational(0);
    return omega_or_zero(2 * n + 1, k, l, m);
}

// omega(sp_{2n}): equal to omega(sl_{2n}) for odd k, l; zero otherwise.
inline Rational omega_type_c(long n, long k, long l, long m) {
    require_arg(n >= 2, "omega_type_c: rank must be >= 2");
    require_arg(k >= 1 && l >= 1 && m >= 1 && m % 2 == 1, "omega_type_c: bad indices");
    if (k % 2 == 0 || l % 2 == 0) return Rational(0);
    return omega_or_zero(2 * n, k, l, m);
}

// Index into the so_{2n} table: either an odd integer or the marker for the
// extra exponent n-1 (written n' in the tables).
struct DIndex {
    bool marker = false;
    long value = 0;

    static DIndex regular(long v) { return {false, v}; }
    static DIndex extra() { return {true, 0}; }
};

// omega(so_{2n}). Regular odd triples reduce to sl_{2n-1}. Any marker in
// the transvectant slot, or a single marker among (k, l), gives zero. A
// marker pair with a regular m has no fixed normalization in the source
// reduction and is reported as nullopt (undetermined), not an error.
inline std::optional<Rational> omega_type_d(long n, DIndex k, DIndex l, DIndex m) {
    require_arg(n >= 3, "omega_type_d: rank must be >= 3");
    auto check_regular = [](const DIndex& idx) {
        if (!idx.marker)
            require_arg(idx.value >= 1 && idx.value % 2 == 1,
                        "omega_type_d: regular indices must be odd positive");
    };
    check_regular(k);
    check_regular(l);
    check_regular(m);
    if (m.marker) return Rational(0);
    if (k.marker != l.marker) return Rational(0);
    if (k.marker && l.marker) return std::nullopt;
    return omega_or_zero(2 * n - 1, k.value, l.value, m.value);
}

// The principal nilpotent of so_{2n} in the split form used for the
// centralizer statement, and the special centralizer element S. The upper
// n x n block carries a subdiagonal of ones, the lower block a subdiagonal
// of minus ones, and two cross entries tie the blocks together.
struct TypeDMatrices {
    MatQ F, S;
};

inline TypeDMatrices type_d_matrices(long n) {
    require_arg(n >= 3, "type_d_matrices: n must be >= 3");
    long N = 2 * n;
    MatQ f(N);
    for (long j = 1; j <= n - 1; ++j) f.at(j + 1, j) = Rational(1);
    f.at(n + 1, n - 1) += Rational(1);
    f.at(n + 2, n) += Rational(-1);
    for (long j = n + 1; j <= N - 1; ++j) f.at(j + 1, j) = Rational(-1);

    MatQ s(N);
    s.at(n, 1) = Rational(1);
    s.at(n + 1, 1) = Rational(-1);
    s.at(N, n) = Rational(1);
    s.at(N, n + 1) = Rational(-1);

    internal_check(bracket_matrix(s, f).is_zero(), "type_d_matrices: S does not centralize F");
    return {f, s};
}

// The two documented nontrivial g2 constants plus the V_1 adjoint rule.
// These are reference values; nothing in this library derives them.
inline Rational g2_omega(long k, long l, long m) {
    require_arg((k == 1 || k == 5) && (l == 1 || l == 5), "g2_omega: indices must be 1 or 5");
    require_arg(m >= 1 && m % 2 == 1 && m <= 2 * std::min(k, l) - 1, "g2_omega: bad order");
    if (k == 1 || l == 1) return Rational(m == 1 ? 1 : 0);
    if (m == 9) return Rational(-27000, 7);
    if (m == 5) return Rational(-30, 7);
    return Rational(0);
}

inline constexpr const char* kG2ReferenceNote = "reference-only, not independently verified";

}  // namespace translie
