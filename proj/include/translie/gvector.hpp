#pragma once

// Coordinates in the G basis of sl_n (G_{i,j} = ad_F^{i-j}(E^i)) and the
// monomial encoding G_{i,j} <-> y^{i-j} x^{i+j}/(i+j)!.

#include "translie/binary_form.hpp"
#include "translie/rational.hpp"

#include <map>
#include <utility>

namespace translie {

class GVector {
public:
    using Key = std::pair<long, long>;  // (i, j)
    using Terms = std::map<Key, Rational>;

    explicit GVector(long n) : n_(n) {
        require_arg(n >= 2, "GVector: n must be >= 2");
    }

    long n() const { return n_; }
    bool empty() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    const Rational& coeff(long i, long j) const {
        static const Rational kZero(0);
        auto it = terms_.find({i, j});
        return it == terms_.end() ? kZero : it->second;
    }

    // Accumulates into (i, j); drops the entry if the sum cancels.
    void add_term(long i, long j, const Rational& c) {
        require_arg(i >= 1 && i <= n_ - 1 && j >= -i && j <= i,
                    "GVector: index (i,j) out of range");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace({i, j}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    GVector& operator+=(const GVector& o) {
        require_arg(n_ == o.n_, "GVector: rank mismatch");
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    GVector& operator-=(const GVector& o) {
        require_arg(n_ == o.n_, "GVector: rank mismatch");
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
        return *this;
    }
    GVector& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }

    friend GVector operator+(GVector a, const GVector& b) { return a += b; }
    friend GVector operator-(GVector a, const GVector& b) { return a -= b; }
    friend GVector operator*(const Rational& s, GVector v) { return v *= s; }
    friend GVector operator-(const GVector& a) { return Rational(-1) * a; }

    friend bool operator==(const GVector& a, const GVector& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const GVector& a, const GVector& b) { return !(a == b); }

private:
    long n_;
    Terms terms_;
};

// Degree-2i polynomial image of each V_i component.
using PolyComponents = std::map<long, BinaryForm>;

// Procedure step 1: component i picks up v(i,j) * y^{i-j} x^{i+j}/(i+j)!.
inline PolyComponents encode(const GVector& v) {
    PolyComponents comps;
    for (const auto& [key, c] : v.terms()) {
        auto [i, j] = key;
        auto [it, inserted] = comps.try_emplace(i, BinaryForm(2 * i));
        it->second.coeff(i + j) += c / Rational(factorial(i + j));
    }
    return comps;
}

// Procedure step 3: inverse of encode. Component i of degree 2i contributes
// coeff(x^a y^{2i-a}) * a! to G_{i, a-i}.
inline GVector decode(long n, const PolyComponents& comps) {
    GVector v(n);
    for (const auto& [i, f] : comps) {
        require_arg(i >= 1 && i <= n - 1, "decode: component index out of range");
        require_arg(f.degree() == 2 * i, "decode: component degree must be 2i");
        for (long a = 0; a <= 2 * i; ++a)
            if (!f.coeff(a).is_zero()) v.add_term(i, a - i, f.coeff(a) * Rational(factorial(a)));
    }
    return v;
}

}  // namespace translie
