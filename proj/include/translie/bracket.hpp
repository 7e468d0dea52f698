#pragma once

// Lie brackets in sl_n through the polynomial model: encode both sides as
// binary forms, accumulate omega-weighted transvectants per component pair,
// decode the result. Matches the matrix commutator exactly (tested).

#include "translie/binary_form.hpp"
#include "translie/gvector.hpp"
#include "translie/omega.hpp"
#include "translie/principal.hpp"

#include <algorithm>

namespace translie {

// Omega-iterate transvectant of P (degree 2k) and Q (degree 2l), evaluated
// through the classical derivative form times the bridge factor. The two
// routes agree identically (see the transvectant tests); this one avoids
// materializing the intermediate tensor pairs.
inline BinaryForm bracket_transvectant(const BinaryForm& p, const BinaryForm& q, long m) {
    return transvectant_bridge_factor(p.degree(), q.degree(), m) *
           transvectant_classical(p, q, m);
}

inline GVector lie_bracket(const GVector& u, const GVector& v) {
    require_arg(u.n() == v.n(), "lie_bracket: rank mismatch");
    long n = u.n();
    PolyComponents pu = encode(u), pv = encode(v);
    PolyComponents out;
    for (const auto& [k, pk] : pu) {
        if (pk.is_zero()) continue;
        for (const auto& [l, ql] : pv) {
            if (ql.is_zero()) continue;
            for (long m = 1; m <= 2 * std::min(k, l) - 1; m += 2) {
                if (k + l - m > n - 1) continue;
                Rational w = omega_cached(n, k, l, m);
                if (w.is_zero()) continue;
                BinaryForm contrib = w * bracket_transvectant(pk, ql, m);
                auto [it, fresh] = out.try_emplace(k + l - m, BinaryForm(2 * (k + l - m)));
                it->second = it->second + contrib;
            }
        }
    }
    return decode(n, out);
}

inline GVector from_matrix(long n, const MatQ& x) { return decompose(n, x); }

}  // namespace translie
