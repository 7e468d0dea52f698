#pragma once

// Exact values of the form r*sqrt(s): r rational, s a positive square-free
// integer. Closed under multiplication; a product with matching radicands
// collapses back to a rational (radicand 1). Used for 6j symbols, whose
// squared values are rational but which are irrational individually.

#include "translie/rational.hpp"

namespace translie {

class Radical {
public:
    Radical() : c_(0), s_(1) {}
    Radical(Rational coeff) : c_(std::move(coeff)), s_(1) {}  // NOLINT: implicit
    Radical(Rational coeff, Int radicand) : c_(std::move(coeff)), s_(std::move(radicand)) {
        require_arg(s_ >= 0, "Radical: negative radicand");
        if (s_ == 0) c_ = Rational(0);
        normalize();
    }

    const Rational& coeff() const { return c_; }
    const Int& radicand() const { return s_; }
    bool is_zero() const { return c_.is_zero(); }
    bool is_rational() const { return s_ == 1; }

    Rational rational_value() const {
        internal_check(is_rational(), "Radical: irrational value where rational expected");
        return c_;
    }

    // sqrt(p/q) for p/q >= 0, as sqrt(p*q)/q.
    static Radical sqrt_of(const Rational& r) {
        require_arg(r.sign() >= 0, "Radical::sqrt_of: negative argument");
        if (r.is_zero()) return Radical();
        return Radical(Rational(Int(1), r.den()), r.num() * r.den());
    }

    friend Radical operator*(const Radical& a, const Radical& b) {
        if (a.is_zero() || b.is_zero()) return Radical();
        // With both radicands square-free, s_a*s_b = g^2 * (s_a/g)(s_b/g)
        // where g = gcd(s_a, s_b) and the cofactors are coprime, so the
        // result needs no re-factoring.
        Int g;
        mpz_gcd(g.get_mpz_t(), a.s_.get_mpz_t(), b.s_.get_mpz_t());
        Radical r;
        r.c_ = a.c_ * b.c_ * Rational(g);
        r.s_ = (a.s_ / g) * (b.s_ / g);
        return r;
    }

    friend Radical operator*(const Rational& a, const Radical& b) {
        if (a.is_zero() || b.is_zero()) return Radical();
        Radical r;
        r.c_ = a * b.c_;
        r.s_ = b.s_;
        return r;
    }

    friend Radical operator-(const Radical& a) {
        return Rational(-1) * a;
    }

    friend bool operator==(const Radical& a, const Radical& b) {
        return a.c_ == b.c_ && a.s_ == b.s_;
    }
    friend bool operator!=(const Radical& a, const Radical& b) { return !(a == b); }

    // "0", "p/q", or "p/q*sqrt(s)".
    std::string str() const {
        if (is_zero()) return "0";
        if (is_rational()) return c_.str();
        return c_.str() + "*sqrt(" + s_.get_str() + ")";
    }

private:
    // Pull every square factor of s_ into c_. Trial division fully factors
    // the radicand; values in scope are products of factorials, so all prime
    // factors are tiny and this terminates instantly.
    void normalize() {
        if (c_.is_zero()) { s_ = 1; return; }
        Int s = s_, sqfree = 1, root = 1;
        for (Int d = 2; d * d <= s; ++d) {
            if (s % d != 0) continue;
            long e = 0;
            while (s % d == 0) { s /= d; ++e; }
            root *= pow_int(d, e / 2);
            if (e % 2) sqfree *= d;
        }
        sqfree *= s;  // leftover factor is 1 or prime
        c_ *= Rational(root);
        s_ = sqfree;
    }

    Rational c_;
    Int s_;
};

}  // namespace translie
