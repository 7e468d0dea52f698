#pragma once

// Matrix-level ground truth: the principal sl2-triple of sl_n, the G basis
// G_{i,j} = ad_F^{i-j}(E^i), trace-pairing coefficient extraction, and the
// commutator-based structure-constant oracle. Everything here is independent
// of the closed-form constants it is used to referee.

#include "translie/gvector.hpp"
#include "translie/matrix.hpp"
#include "translie/rational.hpp"

#include <memory>
#include <mutex>
#include <map>
#include <vector>

namespace translie {

struct PrincipalTriple {
    long n;
    MatQ E, H, F;
};

// E: superdiagonal ones. H: diag(n-2j+1). F: subdiagonal r_j = j(n-j).
inline PrincipalTriple principal_triple(long n) {
    require_arg(n >= 2, "principal_triple: n must be >= 2");
    PrincipalTriple t{n, MatQ(n), MatQ(n), MatQ(n)};
    for (long j = 1; j <= n - 1; ++j) {
        t.E.at(j, j + 1) = Rational(1);
        t.F.at(j + 1, j) = Rational(j * (n - j));
    }
    for (long j = 1; j <= n; ++j) t.H.at(j, j) = Rational(n - 2 * j + 1);
    return t;
}

// All G_{i,j} for one n, with the trace pairings tr(G_{i,j} G_{i,-j}) that
// back coefficient extraction. Built once per n and cached process-wide.
class GBasis {
public:
    explicit GBasis(long n) : triple_(principal_triple(n)) {
        rows_.reserve(n - 1);
        for (long i = 1; i <= n - 1; ++i) {
            std::vector<MatQ> row;
            row.reserve(2 * i + 1);
            MatQ cur = mat_pow(triple_.E, i);
            row.push_back(cur);  // j = i
            for (long j = i - 1; j >= -i; --j) {
                cur = bracket_matrix(triple_.F, cur);
                row.push_back(cur);
            }
            rows_.push_back(std::move(row));
        }
        pairings_.reserve(rows_.size());
        for (long i = 1; i <= n - 1; ++i) {
            std::vector<Rational> p;
            p.reserve(2 * i + 1);
            for (long j = -i; j <= i; ++j) {
                Rational tr = trace_product(g(i, j), g(i, -j));
                internal_check(!tr.is_zero(), "GBasis: degenerate trace pairing");
                p.push_back(tr);
            }
            pairings_.push_back(std::move(p));
        }
    }

    long n() const { return triple_.n; }
    const PrincipalTriple& triple() const { return triple_; }

    const MatQ& g(long i, long j) const {
        check_index(i, j);
        return rows_[i - 1][i - j];  // row stored j = i down to -i
    }

    // tr(G_{i,j} G_{i,-j})
    const Rational& pairing(long i, long j) const {
        check_index(i, j);
        return pairings_[i - 1][j + i];
    }

private:
    void check_index(long i, long j) const {
        require_arg(i >= 1 && i <= triple_.n - 1 && j >= -i && j <= i,
                    "G basis: index (i,j) out of range");
    }

    PrincipalTriple triple_;
    std::vector<std::vector<MatQ>> rows_;
    std::vector<std::vector<Rational>> pairings_;
};

inline const GBasis& g_basis_cache(long n) {
    static std::mutex mu;
    static std::map<long, std::unique_ptr<GBasis>> cache;
    std::scoped_lock lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<GBasis>(n);
    return *slot;
}

inline MatQ g_basis(long n, long i, long j) { return g_basis_cache(n).g(i, j); }

// coeff_{G_{i,j}}(x) = tr(x G_{i,-j}) / tr(G_{i,j} G_{i,-j})
inline Rational coeff_extract(long n, const MatQ& x, long i, long j) {
    require_arg(x.n() == n, "coeff_extract: dimension mismatch");
    require_arg(x.trace().is_zero(), "coeff_extract: input is not trace-free");
    const GBasis& b = g_basis_cache(n);
    return trace_product(x, b.g(i, -j)) / b.pairing(i, j);
}

inline MatQ to_matrix(const GVector& v) {
    const GBasis& b = g_basis_cache(v.n());
    MatQ x(v.n());
    for (const auto& [key, c] : v.terms()) x += c * b.g(key.first, key.second);
    return x;
}

// Full expansion of a trace-free matrix in the G basis. The recomposition is
// re-checked exactly; this routine is the ground-truth anchor, so it does not
// trust the trace formulas blindly.
inline GVector decompose(long n, const MatQ& x) {
    require_arg(x.n() == n, "decompose: dimension mismatch");
    require_arg(x.trace().is_zero(), "decompose: input is not trace-free");
    const GBasis& b = g_basis_cache(n);
    GVector v(n);
    for (long i = 1; i <= n - 1; ++i)
        for (long j = -i; j <= i; ++j) {
            Rational c = trace_product(x, b.g(i, -j)) / b.pairing(i, j);
            v.add_term(i, j, c);
        }
    internal_check(to_matrix(v) == x, "decompose: recomposition mismatch");
    return v;
}

inline void check_omega_indices(long n, long k, long l, long m) {
    require_arg(n >= 2, "omega: n must be >= 2");
    require_arg(k >= 1 && k <= n - 1 && l >= 1 && l <= n - 1,
                "omega: k, l must lie in 1..n-1");
    require_arg(m % 2 == 1 && m >= 1 && m <= 2 * std::min(k, l) - 1,
                "omega: m must be odd in 1..2*min(k,l)-1");
}

// Ground-truth structure constant from the commutator [E^k, F^l]:
// its G_{k+l-m, k-l} coefficient c gives omega = (-1)^l (2l-m)! c.
// Triads with k+l-m > n-1 are answered 0 (no such component exists).
inline Rational omega_oracle(long n, long k, long l, long m) {
    check_omega_indices(n, k, l, m);
    if (k + l - m > n - 1) return Rational(0);
    const GBasis& b = g_basis_cache(n);
    MatQ c = bracket_matrix(mat_pow(b.triple().E, k), mat_pow(b.triple().F, l));
    GVector v = decompose(n, c);
    // Eq. shape check: every component sits at (k+l-m', k-l) with m' odd.
    for (const auto& [key, coeff] : v.terms()) {
        long mp = k + l - key.first;
        internal_check(key.second == k - l && mp % 2 == 1 && mp >= 1 &&
                           mp <= 2 * std::min(k, l) - 1,
                       "omega_oracle: commutator has a component off the odd-m column");
    }
    Rational c_target = v.coeff(k + l - m, k - l);
    Rational w = Rational(factorial(2 * l - m)) * c_target;
    return (l % 2) ? -w : w;
}

}  // namespace translie
