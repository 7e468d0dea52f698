#pragma once

// Exact dense tensors over the two-element index set {1, 2}, the engine
// behind the graphical-calculus verifiers: delta and epsilon gluings,
// symmetrizers, and the bridge to binary forms.
//
// Layout: a rank-r tensor stores 2^r entries; leg t of a linear index mask
// occupies bit (r-1-t), so leg 0 is the most significant bit and the entry
// order is row-major in the index tuple. Index values are 1 and 2 (bit 0
// and bit 1); value 1 plays the role of y and value 2 of x when a symmetric
// tensor is read as a binary form.

#include "translie/binary_form.hpp"
#include "translie/rational.hpp"

#include <cstddef>
#include <vector>

namespace translie {

// Symmetrizing ranks much past this is pointless at desk scale and the
// dense storage would blow up, so construction rejects it outright.
inline constexpr long kMaxTensorRank = 16;

class DenseTensor {
  public:
    explicit DenseTensor(long rank) : rank_(rank) {
        require_arg(rank >= 0 && rank <= kMaxTensorRank,
                    "tensor rank must be between 0 and 16");
        entries_.resize(std::size_t(1) << rank);
    }

    static DenseTensor scalar(const Rational& c) {
        DenseTensor t(0);
        t.entries_[0] = c;
        return t;
    }

    long rank() const { return rank_; }
    std::size_t size() const { return entries_.size(); }

    Rational& entry(std::size_t mask) { return entries_[mask]; }
    const Rational& entry(std::size_t mask) const { return entries_[mask]; }

    // Value (1 or 2) carried by leg t in the given linear index.
    long leg_value(std::size_t mask, long t) const {
        return 1 + ((mask >> (rank_ - 1 - t)) & 1u);
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    friend bool operator==(const DenseTensor& a, const DenseTensor& b) {
        return a.rank_ == b.rank_ && a.entries_ == b.entries_;
    }

    friend DenseTensor operator+(const DenseTensor& a, const DenseTensor& b) {
        require_arg(a.rank_ == b.rank_, "tensor sum: rank mismatch");
        DenseTensor r(a.rank_);
        for (std::size_t i = 0; i < r.entries_.size(); ++i)
            r.entries_[i] = a.entries_[i] + b.entries_[i];
        return r;
    }

    friend DenseTensor operator-(const DenseTensor& a, const DenseTensor& b) {
        require_arg(a.rank_ == b.rank_, "tensor difference: rank mismatch");
        DenseTensor r(a.rank_);
        for (std::size_t i = 0; i < r.entries_.size(); ++i)
            r.entries_[i] = a.entries_[i] - b.entries_[i];
        return r;
    }

    friend DenseTensor operator*(const Rational& c, const DenseTensor& t) {
        DenseTensor r(t.rank_);
        for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] = c * t.entries_[i];
        return r;
    }

  private:
    long rank_;
    std::vector<Rational> entries_;
};

// Metric used when two legs are glued. Delta forces equal values; Eps
// weights the pair by eps_{a,b} and EpsRev by eps_{b,a}, where eps_{1,2} = 1,
// eps_{2,1} = -1. Every metric pairs each a-value with exactly one b-value,
// which keeps contraction loops free of dead branches.
enum class Arrow { Delta, Eps, EpsRev };

namespace detail {

// For a bound a-leg carrying value va (1 or 2), the unique b-value with
// nonzero weight and that weight's sign.
inline void arrow_partner(Arrow arrow, long va, long& vb, int& sign) {
    switch (arrow) {
        case Arrow::Delta:
            vb = va;
            sign = 1;
            return;
        case Arrow::Eps:
            vb = 3 - va;
            sign = (va == 1) ? 1 : -1;
            return;
        case Arrow::EpsRev:
            vb = 3 - va;
            sign = (va == 1) ? -1 : 1;
            return;
    }
    internal_check(false, "unreachable arrow kind");
}

inline std::vector<long> complement_legs(long rank, const std::vector<long>& bound) {
    std::vector<bool> used(rank, false);
    for (long t : bound) {
        require_arg(t >= 0 && t < rank && !used[t], "contraction legs must be distinct and in range");
        used[t] = true;
    }
    std::vector<long> free;
    for (long t = 0; t < rank; ++t)
        if (!used[t]) free.push_back(t);
    return free;
}

}  // namespace detail

inline DenseTensor epsilon() {
    DenseTensor t(2);
    t.entry(0b01) = Rational(1);   // (1,2)
    t.entry(0b10) = Rational(-1);  // (2,1)
    return t;
}

inline DenseTensor delta_line() {
    DenseTensor t(2);
    t.entry(0b00) = Rational(1);
    t.entry(0b11) = Rational(1);
    return t;
}

// Identity map on s strands: in-legs 0..s-1, out-legs s..2s-1.
inline DenseTensor identity_map(long strands) {
    DenseTensor t(2 * strands);
    for (std::size_t m = 0; m < (std::size_t(1) << strands); ++m)
        t.entry((m << strands) | m) = Rational(1);
    return t;
}

inline DenseTensor tensor_product(const DenseTensor& a, const DenseTensor& b) {
    DenseTensor r(a.rank() + b.rank());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.entry(i).is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b.entry(j).is_zero()) continue;
            r.entry((i << b.rank()) | j) = a.entry(i) * b.entry(j);
        }
    }
    return r;
}

// Output leg t carries the value of input leg perm[t].
inline DenseTensor permute(const DenseTensor& a, const std::vector<long>& perm) {
    require_arg(long(perm.size()) == a.rank(), "permute: wrong permutation size");
    detail::complement_legs(a.rank(), perm);  // validates bijectivity
    DenseTensor r(a.rank());
    long rank = a.rank();
    for (std::size_t in = 0; in < a.size(); ++in) {
        if (a.entry(in).is_zero()) continue;
        std::size_t out = 0;
        for (long t = 0; t < rank; ++t)
            out |= ((in >> (rank - 1 - perm[t])) & 1u) << (rank - 1 - t);
        r.entry(out) = a.entry(in);
    }
    return r;
}

// Pairwise gluing of a-legs with b-legs under the given metrics. Output
// legs are a's free legs in their original order followed by b's.
inline DenseTensor contract(const DenseTensor& a, const std::vector<long>& a_legs,
                            const DenseTensor& b, const std::vector<long>& b_legs,
                            const std::vector<Arrow>& arrows) {
    std::size_t p = a_legs.size();
    require_arg(b_legs.size() == p && arrows.size() == p, "contract: arity mismatch");
    std::vector<long> fa = detail::complement_legs(a.rank(), a_legs);
    std::vector<long> fb = detail::complement_legs(b.rank(), b_legs);
    DenseTensor r(long(fa.size() + fb.size()));

    long ra = a.rank(), rb = b.rank(), nfb = long(fb.size()), rr = r.rank();
    // Scatter table: packed free-b bits -> positions inside a b-mask.
    std::vector<std::size_t> spread_b(std::size_t(1) << nfb, 0);
    for (std::size_t c = 0; c < spread_b.size(); ++c)
        for (long t = 0; t < nfb; ++t)
            spread_b[c] |= ((c >> (nfb - 1 - t)) & 1u) << (rb - 1 - fb[t]);

    for (std::size_t am = 0; am < a.size(); ++am) {
        if (a.entry(am).is_zero()) continue;
        std::size_t out_hi = 0;
        for (std::size_t t = 0; t < fa.size(); ++t)
            out_hi |= ((am >> (ra - 1 - fa[t])) & 1u) << (rr - 1 - long(t));
        std::size_t b_bound = 0;
        int sign = 1;
        for (std::size_t i = 0; i < p; ++i) {
            long vb;
            int s;
            detail::arrow_partner(arrows[i], a.leg_value(am, a_legs[i]), vb, s);
            sign *= s;
            b_bound |= std::size_t(vb - 1) << (rb - 1 - b_legs[i]);
        }
        for (std::size_t c = 0; c < spread_b.size(); ++c) {
            const Rational& bv = b.entry(b_bound | spread_b[c]);
            if (bv.is_zero()) continue;
            Rational term = a.entry(am) * bv;
            if (sign < 0) term = -term;
            r.entry(out_hi | c) += term;
        }
    }
    return r;
}

inline DenseTensor contract(const DenseTensor& a, const std::vector<long>& a_legs,
                            const DenseTensor& b, const std::vector<long>& b_legs) {
    return contract(a, a_legs, b, b_legs, std::vector<Arrow>(a_legs.size(), Arrow::Delta));
}

// Gluing of leg pairs within a single tensor; output legs are the free legs
// in their original order.
inline DenseTensor contract_self(const DenseTensor& a,
                                 const std::vector<std::pair<long, long>>& pairs,
                                 const std::vector<Arrow>& arrows) {
    require_arg(pairs.size() == arrows.size(), "contract_self: arity mismatch");
    std::vector<long> bound;
    for (auto [s, t] : pairs) {
        bound.push_back(s);
        bound.push_back(t);
    }
    std::vector<long> free = detail::complement_legs(a.rank(), bound);
    DenseTensor r(long(free.size()));

    long ra = a.rank(), rr = r.rank();
    for (std::size_t am = 0; am < a.size(); ++am) {
        if (a.entry(am).is_zero()) continue;
        int sign = 1;
        bool alive = true;
        for (std::size_t i = 0; i < pairs.size() && alive; ++i) {
            long vb;
            int s;
            detail::arrow_partner(arrows[i], a.leg_value(am, pairs[i].first), vb, s);
            alive = (a.leg_value(am, pairs[i].second) == vb);
            sign *= s;
        }
        if (!alive) continue;
        std::size_t out = 0;
        for (std::size_t t = 0; t < free.size(); ++t)
            out |= ((am >> (ra - 1 - free[t])) & 1u) << (rr - 1 - long(t));
        if (sign < 0)
            r.entry(out) -= a.entry(am);
        else
            r.entry(out) += a.entry(am);
    }
    return r;
}

inline DenseTensor contract_self(const DenseTensor& a,
                                 const std::vector<std::pair<long, long>>& pairs) {
    return contract_self(a, pairs, std::vector<Arrow>(pairs.size(), Arrow::Delta));
}

// Symmetrizer over the chosen legs, i.e. the average over all their
// permutations. Entries depend only on the multiset of values on those
// legs, so instead of summing |legs|! permutations we bucket indices by
// (values elsewhere, count of 2s on the legs) and average each bucket.
inline DenseTensor symmetrize(const DenseTensor& a, const std::vector<long>& legs) {
    std::vector<long> rest = detail::complement_legs(a.rank(), legs);
    long ra = a.rank(), nl = long(legs.size()), nr = long(rest.size());
    if (nl <= 1) return a;

    auto packed_rest = [&](std::size_t mask) {
        std::size_t idx = 0;
        for (long t = 0; t < nr; ++t) idx |= ((mask >> (ra - 1 - rest[t])) & 1u) << t;
        return idx;
    };
    auto count_twos = [&](std::size_t mask) {
        long c = 0;
        for (long t = 0; t < nl; ++t) c += long((mask >> (ra - 1 - legs[t])) & 1u);
        return c;
    };

    std::vector<Rational> sums((std::size_t(1) << nr) * std::size_t(nl + 1));
    for (std::size_t m = 0; m < a.size(); ++m) {
        if (a.entry(m).is_zero()) continue;
        sums[packed_rest(m) * (nl + 1) + count_twos(m)] += a.entry(m);
    }
    DenseTensor r(ra);
    for (std::size_t m = 0; m < a.size(); ++m) {
        long c = count_twos(m);
        const Rational& s = sums[packed_rest(m) * (nl + 1) + c];
        if (!s.is_zero()) r.entry(m) = s / Rational(binomial(nl, c));
    }
    return r;
}

inline std::vector<long> leg_range(long from, long count) {
    std::vector<long> v(count);
    for (long t = 0; t < count; ++t) v[t] = from + t;
    return v;
}

// Symmetric tensor of a degree-d form: the entry at an index with w twos is
// coeff(x^w y^(d-w)) / C(d,w), so that summing over all C(d,w) index orders
// recovers the coefficient.
inline DenseTensor to_tensor(const BinaryForm& f) {
    long d = f.degree();
    require_arg(d <= kMaxTensorRank, "form degree exceeds tensor rank cap");
    DenseTensor t(d);
    std::vector<Rational> by_count(d + 1);
    for (long w = 0; w <= d; ++w) by_count[w] = f.coeff(w) / Rational(binomial(d, w));
    for (std::size_t m = 0; m < t.size(); ++m) {
        long w = 0;
        for (long i = 0; i < d; ++i) w += long((m >> i) & 1u);
        t.entry(m) = by_count[w];
    }
    return t;
}

inline BinaryForm to_form(const DenseTensor& t) {
    long d = t.rank();
    std::vector<std::size_t> canonical(d + 1, 0);
    for (long w = 1; w <= d; ++w) canonical[w] = (canonical[w - 1] << 1) | 1u;
    for (std::size_t m = 0; m < t.size(); ++m) {
        long w = 0;
        for (long i = 0; i < d; ++i) w += long((m >> i) & 1u);
        require_arg(t.entry(m) == t.entry(canonical[w]), "to_form: tensor is not symmetric");
    }
    BinaryForm f(d);
    for (long w = 0; w <= d; ++w)
        f = f + Rational(binomial(d, w)) * BinaryForm::monomial(d, w, t.entry(canonical[w]));
    return f;
}

}  // namespace translie
