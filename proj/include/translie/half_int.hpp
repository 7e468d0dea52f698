#pragma once

// Nonnegative half-integers (spins), stored as twice the value.

#include "translie/rational.hpp"

#include <compare>
#include <string>

namespace translie {

class HalfInt {
public:
    HalfInt() : tw_(0) {}
    HalfInt(long whole) : tw_(2 * whole) {  // NOLINT: implicit by design
        require_arg(whole >= 0, "HalfInt: negative spin");
    }

    static HalfInt from_twice(long twice) {
        require_arg(twice >= 0, "HalfInt: negative spin");
        HalfInt h;
        h.tw_ = twice;
        return h;
    }

    long twice() const { return tw_; }
    bool is_integer() const { return tw_ % 2 == 0; }
    // Valid only for integral values; used after integrality checks.
    long whole() const {
        internal_check(is_integer(), "HalfInt: not an integer");
        return tw_ / 2;
    }

    friend HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.tw_ + b.tw_); }
    friend auto operator<=>(const HalfInt&, const HalfInt&) = default;

    std::string str() const {
        if (is_integer()) return std::to_string(tw_ / 2);
        return std::to_string(tw_) + "/2";
    }

    // Accepts "k" or "p/2".
    static HalfInt parse(const std::string& text) {
        std::string s;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
        require_arg(!s.empty(), "HalfInt::parse: empty string");
        try {
            auto slash = s.find('/');
            size_t used = 0;
            if (slash == std::string::npos) {
                long v = std::stol(s, &used);
                require_arg(used == s.size(), "HalfInt::parse: trailing characters");
                return HalfInt(v);
            }
            require_arg(s.substr(slash + 1) == "2", "HalfInt::parse: denominator must be 2");
            long p = std::stol(s.substr(0, slash), &used);
            require_arg(used == slash, "HalfInt::parse: trailing characters");
            return from_twice(p);
        } catch (const std::logic_error&) {
            fail_arg("HalfInt::parse: malformed spin '" + text + "'");
        }
    }

private:
    long tw_;
};

}  // namespace translie
