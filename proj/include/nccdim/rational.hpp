#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "nccdim/error.hpp"

namespace nccdim {

// Exact rational number on int64 numerator/denominator, always reduced,
// denominator > 0. Intermediates run through __int128 and results are
// range-checked, so arithmetic either is exact or throws OverflowError.
class Rational {
public:
    constexpr Rational() noexcept : num_(0), den_(1) {}
    constexpr Rational(std::int64_t n) noexcept : num_(n), den_(1) {} // NOLINT(google-explicit-constructor)

    Rational(std::int64_t n, std::int64_t d) { *this = reduce(n, d); }

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    // Largest integer <= *this.
    std::int64_t floor() const noexcept {
        if (num_ >= 0) return num_ / den_;
        return -((-num_ + den_ - 1) / den_);
    }

    double to_double() const noexcept {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    // "p" for integers, "p/q" otherwise.
    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts "p" or "p/q" with optional leading '-'.
    static Rational parse(const std::string& text) {
        auto bad = [&] {
            throw ValidationError("Rational::parse", "text matches p or p/q",
                                  "cannot parse rational from \"" + text + "\"");
        };
        if (text.empty()) bad();
        std::size_t slash = text.find('/');
        try {
            std::size_t used = 0;
            std::int64_t n = std::stoll(text.substr(0, slash), &used);
            if (used != (slash == std::string::npos ? text.size() : slash)) bad();
            std::int64_t d = 1;
            if (slash != std::string::npos) {
                d = std::stoll(text.substr(slash + 1), &used);
                if (used != text.size() - slash - 1) bad();
            }
            return Rational(n, d);
        } catch (const std::invalid_argument&) {
            bad();
        } catch (const std::out_of_range&) {
            throw OverflowError("rational literal out of range: " + text);
        }
        return Rational(); // unreachable
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        using I = __int128;
        return reduce(I(a.num_) * b.den_ + I(b.num_) * a.den_, I(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        using I = __int128;
        return reduce(I(a.num_) * b.den_ - I(b.num_) * a.den_, I(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        using I = __int128;
        return reduce(I(a.num_) * b.num_, I(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw ValidationError("Rational::divide", "divisor nonzero", "division by zero");
        using I = __int128;
        return reduce(I(a.num_) * b.den_, I(a.den_) * b.num_);
    }
    Rational operator-() const noexcept {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Rational& a, const Rational& b) noexcept {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) noexcept { return !(a == b); }
    friend bool operator>(const Rational& a, const Rational& b) noexcept { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) noexcept { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) noexcept { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

    Rational abs() const noexcept { return num_ < 0 ? -*this : *this; }

    // Builds n/d from wide intermediates with reduction and range check.
    static Rational reduce(__int128 n, __int128 d) {
        if (d == 0) throw ValidationError("Rational", "denominator nonzero", "zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        unsigned __int128 g = gcd_u128(n < 0 ? static_cast<unsigned __int128>(-n)
                                             : static_cast<unsigned __int128>(n),
                                       static_cast<unsigned __int128>(d));
        if (g > 1) {
            n /= static_cast<__int128>(g);
            d /= static_cast<__int128>(g);
        }
        Rational r;
        r.num_ = narrow(n);
        r.den_ = narrow(d);
        return r;
    }

private:
    static unsigned __int128 gcd_u128(unsigned __int128 a, unsigned __int128 b) noexcept {
        while (b != 0) {
            unsigned __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    static std::int64_t narrow(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN)
            throw OverflowError("rational arithmetic overflow");
        return static_cast<std::int64_t>(v);
    }

    std::int64_t num_;
    std::int64_t den_;
};

// Checked lcm of small positive integers.
inline std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
    if (a <= 0 || b <= 0) throw ValidationError("lcm", "arguments positive", "nonpositive lcm input");
    std::int64_t g = a;
    std::int64_t r = b;
    while (r != 0) {
        std::int64_t t = g % r;
        g = r;
        r = t;
    }
    __int128 l = static_cast<__int128>(a / g) * b;
    if (l > INT64_MAX) throw OverflowError("lcm overflow");
    return static_cast<std::int64_t>(l);
}

// Nonnegative remainder of m modulo e (e > 0).
inline std::int64_t euclid_mod(std::int64_t m, std::int64_t e) noexcept {
    std::int64_t r = m % e;
    return r < 0 ? r + e : r;
}

// Floor of m/e for e > 0.
inline std::int64_t floor_div(std::int64_t m, std::int64_t e) noexcept {
    return (m - euclid_mod(m, e)) / e;
}

} // namespace nccdim
