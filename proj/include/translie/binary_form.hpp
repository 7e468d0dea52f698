#pragma once

// Binary forms (homogeneous polynomials in x, y) and the two transvectant
// conventions. A single (x, y) variable pair is used library-wide; where the
// graphical-calculus headers speak of (x1, x2), the map is x1 -> y, x2 -> x,
// so that the k-th power of the raising element corresponds to x^{2k}/(2k)!.
//
// The two conventions:
//   * transvectant_omega: iterate the Poisson-bracket map Omega m times on
//     F (x) G, then multiply out. The bracket procedure and the omega tables
//     are calibrated to this convention.
//   * transvectant_classical: the classically normalized transvectant with
//     prefactor (a-m)!(b-m)!/(a!b!), a = deg F, b = deg G.
// They differ by the factor transvectant_bridge_factor(a, b, m), asserted in
// the test suite on random forms.

#include "translie/rational.hpp"

#include <array>
#include <cctype>
#include <string>
#include <vector>

namespace translie {

class BinaryForm {
public:
    explicit BinaryForm(long degree) : deg_(degree), c_(degree + 1) {
        require_arg(degree >= 0, "BinaryForm: negative degree");
    }

    long degree() const { return deg_; }

    // Coefficient of x^a y^(degree-a).
    const Rational& coeff(long a) const {
        require_arg(a >= 0 && a <= deg_, "BinaryForm: x-power out of range");
        return c_[a];
    }
    Rational& coeff(long a) {
        require_arg(a >= 0 && a <= deg_, "BinaryForm: x-power out of range");
        return c_[a];
    }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!v.is_zero()) return false;
        return true;
    }

    static BinaryForm monomial(long degree, long xpow, const Rational& c = Rational(1)) {
        BinaryForm f(degree);
        f.coeff(xpow) = c;
        return f;
    }

    BinaryForm& operator+=(const BinaryForm& o) {
        require_arg(deg_ == o.deg_, "BinaryForm: degree mismatch in addition");
        for (long a = 0; a <= deg_; ++a) c_[a] += o.c_[a];
        return *this;
    }
    BinaryForm& operator-=(const BinaryForm& o) {
        require_arg(deg_ == o.deg_, "BinaryForm: degree mismatch in subtraction");
        for (long a = 0; a <= deg_; ++a) c_[a] -= o.c_[a];
        return *this;
    }
    BinaryForm& operator*=(const Rational& s) {
        for (auto& v : c_) v *= s;
        return *this;
    }

    friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
    friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
    friend BinaryForm operator*(const Rational& s, BinaryForm f) { return f *= s; }

    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
        BinaryForm r(a.deg_ + b.deg_);
        for (long i = 0; i <= a.deg_; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (long j = 0; j <= b.deg_; ++j)
                if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        return a.deg_ == b.deg_ && a.c_ == b.c_;
    }
    friend bool operator!=(const BinaryForm& a, const BinaryForm& b) { return !(a == b); }

private:
    long deg_;
    std::vector<Rational> c_;
};

// d^kx/dx^kx d^ky/dy^ky applied to F. Degree drops by kx+ky; forms of
// negative resulting degree come back as the zero form of degree 0.
inline BinaryForm derivative(const BinaryForm& f, long kx, long ky) {
    require_arg(kx >= 0 && ky >= 0, "derivative: negative order");
    long d = f.degree() - kx - ky;
    if (d < 0) return BinaryForm(0);
    BinaryForm r(d);
    for (long a = 0; a <= d; ++a) {
        long b = d - a;  // y-power of the result term
        // source term x^{a+kx} y^{b+ky}
        const Rational& src = f.coeff(a + kx);
        if (src.is_zero()) continue;
        Rational fac(factorial(a + kx) / factorial(a) * (factorial(b + ky) / factorial(b)));
        r.coeff(a) = src * fac;
    }
    return r;
}

// Element of C[x,y] (x) C[x,y], bidegree homogeneous: a sum of terms
// coeff * (x^a y^{dl-a} (x) x^c y^{dr-c}).
class TensorPair {
public:
    TensorPair(long degree_left, long degree_right)
        : dl_(degree_left), dr_(degree_right), c_((degree_left + 1) * (degree_right + 1)) {
        require_arg(dl_ >= 0 && dr_ >= 0, "TensorPair: negative degree");
    }

    TensorPair(const BinaryForm& f, const BinaryForm& g) : TensorPair(f.degree(), g.degree()) {
        for (long a = 0; a <= dl_; ++a)
            for (long c = 0; c <= dr_; ++c) at(a, c) = f.coeff(a) * g.coeff(c);
    }

    long degree_left() const { return dl_; }
    long degree_right() const { return dr_; }

    Rational& at(long a, long c) { return c_[a * (dr_ + 1) + c]; }
    const Rational& at(long a, long c) const { return c_[a * (dr_ + 1) + c]; }

    friend bool operator==(const TensorPair& a, const TensorPair& b) {
        return a.dl_ == b.dl_ && a.dr_ == b.dr_ && a.c_ == b.c_;
    }

private:
    long dl_, dr_;
    std::vector<Rational> c_;
};

// One application of Omega(x^a y^b (x) x^c y^d)
//   = a.d x^{a-1}y^b (x) x^c y^{d-1}  -  b.c x^a y^{b-1} (x) x^{c-1} y^d,
// extended linearly. Both bidegrees drop by one.
inline TensorPair omega_step(const TensorPair& t) {
    long dl = t.degree_left(), dr = t.degree_right();
    require_arg(dl >= 1 && dr >= 1, "omega_step: both degrees must be >= 1");
    TensorPair r(dl - 1, dr - 1);
    for (long a = 0; a <= dl; ++a) {
        for (long c = 0; c <= dr; ++c) {
            const Rational& v = t.at(a, c);
            if (v.is_zero()) continue;
            long b = dl - a, d = dr - c;
            if (a >= 1 && d >= 1) r.at(a - 1, c) += Rational(a * d) * v;
            if (b >= 1 && c >= 1) r.at(a, c - 1) -= Rational(b * c) * v;
        }
    }
    return r;
}

// The multiplication map: x^a y^b (x) x^c y^d -> x^{a+c} y^{b+d}.
inline BinaryForm mult(const TensorPair& t) {
    BinaryForm r(t.degree_left() + t.degree_right());
    for (long a = 0; a <= t.degree_left(); ++a)
        for (long c = 0; c <= t.degree_right(); ++c)
            if (!t.at(a, c).is_zero()) r.coeff(a + c) += t.at(a, c);
    return r;
}

inline void check_transvectant_order(const BinaryForm& f, const BinaryForm& g, long m) {
    require_arg(m >= 0 && m <= f.degree() && m <= g.degree(),
                "transvectant: order out of range 0..min(deg F, deg G)");
}

// mult(Omega^m(F (x) G)).
inline BinaryForm transvectant_omega(const BinaryForm& f, const BinaryForm& g, long m) {
    check_transvectant_order(f, g, m);
    TensorPair t(f, g);
    for (long s = 0; s < m; ++s) t = omega_step(t);
    return mult(t);
}

// Classically normalized transvectant:
//   (F,G)_m = (a-m)!(b-m)!/(a!b!) sum_j (-1)^j C(m,j)
//             d^m F/dx^{m-j}dy^j . d^m G/dx^j dy^{m-j}.
inline BinaryForm transvectant_classical(const BinaryForm& f, const BinaryForm& g, long m) {
    check_transvectant_order(f, g, m);
    long a = f.degree(), b = g.degree();
    BinaryForm acc(a + b - 2 * m);
    for (long j = 0; j <= m; ++j) {
        BinaryForm df = derivative(f, m - j, j);
        if (df.is_zero()) continue;
        BinaryForm dg = derivative(g, j, m - j);
        if (dg.is_zero()) continue;
        Rational term(binomial(m, j));
        if (j % 2) term = -term;
        acc += term * (df * dg);
    }
    Rational pref(factorial(a - m) * factorial(b - m), factorial(a) * factorial(b));
    return pref * acc;
}

// transvectant_omega = bridge * transvectant_classical, bridge = a!b!/((a-m)!(b-m)!).
inline Rational transvectant_bridge_factor(long a, long b, long m) {
    require_arg(m >= 0 && m <= a && m <= b, "transvectant bridge: order out of range");
    return Rational(factorial(a) * factorial(b), factorial(a - m) * factorial(b - m));
}

// F(m00 x + m01 y, m10 x + m11 y) for an integer 2x2 matrix m.
inline BinaryForm substitute(const BinaryForm& f, const std::array<std::array<long, 2>, 2>& m) {
    long d = f.degree();
    // powers of the two substituted variables
    std::vector<BinaryForm> px, py;
    BinaryForm lx(1), ly(1);
    lx.coeff(1) = Rational(m[0][0]);
    lx.coeff(0) = Rational(m[0][1]);
    ly.coeff(1) = Rational(m[1][0]);
    ly.coeff(0) = Rational(m[1][1]);
    BinaryForm one(0);
    one.coeff(0) = Rational(1);
    px.push_back(one);
    py.push_back(one);
    for (long k = 1; k <= d; ++k) {
        px.push_back(px.back() * lx);
        py.push_back(py.back() * ly);
    }
    BinaryForm r(d);
    for (long a = 0; a <= d; ++a) {
        if (f.coeff(a).is_zero()) continue;
        r += f.coeff(a) * (px[a] * py[d - a]);
    }
    return r;
}

// (gF)(x) := F(g^{-1} x); only det-1 integer matrices are supported, so the
// inverse is the adjugate.
inline BinaryForm group_act(const std::array<std::array<long, 2>, 2>& g, const BinaryForm& f) {
    long det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    require_arg(det == 1, "group_act: matrix must have determinant 1");
    std::array<std::array<long, 2>, 2> inv{{{g[1][1], -g[0][1]}, {-g[1][0], g[0][0]}}};
    return substitute(f, inv);
}

// ---- text form: sums of "c*x^a*y^b" joined by '+'/'-' ----

inline std::string format_form(const BinaryForm& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (long a = f.degree(); a >= 0; --a) {
        const Rational& c = f.coeff(a);
        if (c.is_zero()) continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        long b = f.degree() - a;
        std::string vars;
        if (a >= 1) vars += (a == 1) ? "x" : "x^" + std::to_string(a);
        if (b >= 1) {
            if (!vars.empty()) vars += "*";
            vars += (b == 1) ? "y" : "y^" + std::to_string(b);
        }
        if (vars.empty()) {
            out += mag.str();
        } else if (mag == Rational(1)) {
            out += vars;
        } else {
            out += mag.str() + "*" + vars;
        }
    }
    return out;
}

namespace detail {

struct ParsedTerm {
    Rational coeff{1};
    long xpow = 0, ypow = 0;
};

inline ParsedTerm parse_term(const std::string& term) {
    require_arg(!term.empty(), "parse_form: empty term");
    ParsedTerm t;
    size_t pos = 0;
    bool any = false;
    while (pos < term.size()) {
        size_t star = term.find('*', pos);
        std::string factor = term.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
        require_arg(!factor.empty(), "parse_form: empty factor");
        if (factor[0] == 'x' || factor[0] == 'y') {
            long e = 1;
            if (factor.size() > 1) {
                require_arg(factor[1] == '^', "parse_form: expected '^' after variable");
                try {
                    size_t used = 0;
                    e = std::stol(factor.substr(2), &used);
                    require_arg(used == factor.size() - 2 && e >= 0, "parse_form: bad exponent");
                } catch (const std::logic_error&) {
                    fail_arg("parse_form: bad exponent in '" + factor + "'");
                }
            }
            (factor[0] == 'x' ? t.xpow : t.ypow) += e;
        } else {
            t.coeff *= Rational::parse(factor);
        }
        any = true;
        if (star == std::string::npos) break;
        pos = star + 1;
    }
    require_arg(any, "parse_form: empty term");
    return t;
}

}  // namespace detail

// Parses sums of "c*x^a*y^b" terms joined by '+'/'-' into a homogeneous
// binary form; whitespace is ignored. "0" parses to the zero form of
// degree 0. Mixed total degrees are rejected.
inline BinaryForm parse_form(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    require_arg(!s.empty(), "parse_form: empty input");

    std::vector<detail::ParsedTerm> terms;
    size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            if (s[pos] == '-') sign = -sign;
            ++pos;
        }
        require_arg(pos < s.size(), "parse_form: dangling sign");
        size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        auto t = detail::parse_term(s.substr(pos, end - pos));
        if (sign < 0) t.coeff = -t.coeff;
        terms.push_back(t);
        pos = end;
    }

    long deg = -1;
    for (const auto& t : terms) {
        if (t.coeff.is_zero()) continue;
        if (deg < 0) deg = t.xpow + t.ypow;
        require_arg(t.xpow + t.ypow == deg, "parse_form: input is not homogeneous");
    }
    if (deg < 0) return BinaryForm(0);  // every term vanished
    BinaryForm f(deg);
    for (const auto& t : terms)
        if (!t.coeff.is_zero()) f.coeff(t.xpow) += t.coeff;
    return f;
}

}  // namespace translie
