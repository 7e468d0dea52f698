#pragma once

// Exact scalar kernel shared by every other header: arbitrary-precision
// integers and rationals (GMP-backed), factorials, and guarded binomials.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace translie {

using Int = mpz_class;

[[noreturn]] inline void fail_arg(const std::string& msg) {
    throw std::invalid_argument(msg);
}

inline void require_arg(bool ok, const char* msg) {
    if (!ok) fail_arg(msg);
}

// Internal invariant check; a failure is a bug in this library, not bad input.
inline void internal_check(bool ok, const char* msg) {
    if (!ok) throw std::logic_error(std::string("internal error: ") + msg);
}

// n! for n >= 0; negative arguments are a caller error.
inline Int factorial(long n) {
    require_arg(n >= 0, "factorial: negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// Binomial coefficient with the Pascal-triangle guard: C(n, k) = 0 whenever
// k < 0 or k > n. Out-of-window arguments occur routinely in the closed-form
// sums in this library and must contribute nothing.
inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

inline Int pow_int(const Int& base, long e) {
    require_arg(e >= 0, "pow_int: negative exponent");
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

inline int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

// Arbitrary-precision rational, always stored fully reduced with a positive
// denominator. Wraps mpq_class so that every construction path canonicalizes
// (raw mpq_class(num, den) does not).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}                 // NOLINT: implicit by design
    Rational(const Int& n) : v_(n) {}           // NOLINT: implicit by design
    Rational(const Int& num, const Int& den) : v_(num, den) {
        require_arg(den != 0, "Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }
    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        internal_check(o.v_ != 0, "Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // Canonical form "p/q", or just "p" when the denominator is 1.
    std::string str() const {
        std::string s = v_.get_num().get_str();
        if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
        return s;
    }

    // Accepts the same grammar str() emits (optional sign, "p" or "p/q").
    static Rational parse(const std::string& text) {
        std::string s;
        s.reserve(text.size());
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
        require_arg(!s.empty(), "Rational::parse: empty string");
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(Int(s));
            Int num(s.substr(0, slash));
            Int den(s.substr(slash + 1));
            require_arg(den != 0, "Rational::parse: zero denominator");
            return Rational(num, den);
        } catch (const std::invalid_argument&) {
            fail_arg("Rational::parse: malformed rational '" + text + "'");
        }
    }

    static Rational pow(const Rational& base, long e) {
        if (e < 0) {
            internal_check(!base.is_zero(), "Rational::pow: zero to negative power");
            return Rational(1) / pow(base, -e);
        }
        Rational r(1), b = base;
        for (long t = e; t > 0; t >>= 1) {
            if (t & 1) r *= b;
            b *= b;
        }
        return r;
    }

private:
    mpq_class v_;
};

inline Rational rat_factorial(long n) { return Rational(factorial(n)); }

}  // namespace translie
