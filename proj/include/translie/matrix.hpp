#pragma once

// Dense square matrices over Rational. Just enough exact linear algebra for
// the matrix-level ground truth: products, commutators, traces.

#include "translie/rational.hpp"

#include <vector>

namespace translie {

class MatQ {
public:
    explicit MatQ(long n) : n_(n), a_(n * n) {
        require_arg(n >= 1, "MatQ: size must be >= 1");
    }

    long n() const { return n_; }

    // 1-based indexing to match the E_{i,j} standard-basis notation.
    Rational& at(long i, long j) {
        require_arg(i >= 1 && i <= n_ && j >= 1 && j <= n_, "MatQ: index out of range");
        return a_[(i - 1) * n_ + (j - 1)];
    }
    const Rational& at(long i, long j) const {
        require_arg(i >= 1 && i <= n_ && j >= 1 && j <= n_, "MatQ: index out of range");
        return a_[(i - 1) * n_ + (j - 1)];
    }

    static MatQ zero(long n) { return MatQ(n); }
    static MatQ identity(long n) {
        MatQ m(n);
        for (long i = 1; i <= n; ++i) m.at(i, i) = Rational(1);
        return m;
    }
    // E_{i,j}: single 1 at row i, column j.
    static MatQ unit(long n, long i, long j) {
        MatQ m(n);
        m.at(i, j) = Rational(1);
        return m;
    }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }

    Rational trace() const {
        Rational t;
        for (long i = 1; i <= n_; ++i) t += at(i, i);
        return t;
    }

    MatQ& operator+=(const MatQ& o) {
        require_arg(n_ == o.n_, "MatQ: dimension mismatch");
        for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    MatQ& operator-=(const MatQ& o) {
        require_arg(n_ == o.n_, "MatQ: dimension mismatch");
        for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    MatQ& operator*=(const Rational& s) {
        for (auto& v : a_) v *= s;
        return *this;
    }

    friend MatQ operator+(MatQ a, const MatQ& b) { return a += b; }
    friend MatQ operator-(MatQ a, const MatQ& b) { return a -= b; }
    friend MatQ operator*(const Rational& s, MatQ m) { return m *= s; }

    friend MatQ operator*(const MatQ& a, const MatQ& b) {
        require_arg(a.n_ == b.n_, "MatQ: dimension mismatch");
        long n = a.n_;
        MatQ r(n);
        for (long i = 1; i <= n; ++i) {
            for (long k = 1; k <= n; ++k) {
                const Rational& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (long j = 1; j <= n; ++j) {
                    const Rational& bkj = b.at(k, j);
                    if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
                }
            }
        }
        return r;
    }

    friend bool operator==(const MatQ& a, const MatQ& b) { return a.n_ == b.n_ && a.a_ == b.a_; }
    friend bool operator!=(const MatQ& a, const MatQ& b) { return !(a == b); }

private:
    long n_;
    std::vector<Rational> a_;
};

inline MatQ bracket_matrix(const MatQ& a, const MatQ& b) { return a * b - b * a; }

inline MatQ mat_pow(const MatQ& a, long k) {
    require_arg(k >= 0, "mat_pow: negative exponent");
    MatQ r = MatQ::identity(a.n());
    for (long s = 0; s < k; ++s) r = r * a;
    return r;
}

inline Rational trace_product(const MatQ& a, const MatQ& b) {
    require_arg(a.n() == b.n(), "trace_product: dimension mismatch");
    Rational t;
    for (long i = 1; i <= a.n(); ++i)
        for (long k = 1; k <= a.n(); ++k)
            if (!a.at(i, k).is_zero() && !b.at(k, i).is_zero()) t += a.at(i, k) * b.at(k, i);
    return t;
}

}  // namespace translie
