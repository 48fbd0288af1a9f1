#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <charconv>

namespace isogr {

class overflow_error : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// Exact rational number over 64-bit integers, always kept in lowest terms
// with a positive denominator. Intermediate products go through __int128 and
// any result that does not fit back into 64 bits throws overflow_error.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(implicit)
    Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_half_integer() const { return den_ == 2; }
    int sign() const { return (num_ > 0) - (num_ < 0); }

    // floor and ceiling as integers
    std::int64_t floor() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    std::int64_t ceil() const { return -Rational(-num_, den_).floor(); }
    Rational frac() const { return *this - Rational(floor()); }

    Rational operator-() const { Rational r; r.num_ = -num_; r.den_ = den_; return r; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.den_ == b.den_) return from128(static_cast<__int128>(a.num_) + b.num_, a.den_);
        __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return from128(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.den_ == 1 && b.den_ == 1) return from128(static_cast<__int128>(a.num_) * b.num_, 1);
        return from128(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        __int128 n = static_cast<__int128>(a.num_) * b.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.num_;
        return from128(n, d);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.den_ == b.den_) return a.num_ <=> b.num_;
        __int128 l = static_cast<__int128>(a.num_) * b.den_;
        __int128 r = static_cast<__int128>(b.num_) * a.den_;
        return l < r ? std::strong_ordering::less
                     : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts "p", "-p", "p/q".
    static Rational parse(std::string_view s) {
        auto trim = [](std::string_view v) {
            while (!v.empty() && (v.front() == ' ' || v.front() == '+')) v.remove_prefix(1);
            while (!v.empty() && v.back() == ' ') v.remove_suffix(1);
            return v;
        };
        s = trim(s);
        auto slash = s.find('/');
        auto to_int = [](std::string_view v) {
            std::int64_t x = 0;
            if (v.empty()) throw std::invalid_argument("empty rational component");
            auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
            if (ec != std::errc{} || p != v.data() + v.size())
                throw std::invalid_argument("malformed rational: " + std::string(v));
            return x;
        };
        if (slash == std::string_view::npos) return Rational(to_int(s));
        std::int64_t d = to_int(trim(s.substr(slash + 1)));
        if (d == 0) throw std::invalid_argument("zero denominator");
        return Rational(to_int(trim(s.substr(0, slash))), d);
    }

    std::size_t hash() const {
        return std::hash<std::int64_t>()(num_) * 31u + std::hash<std::int64_t>()(den_);
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;

    void assign(std::int64_t n, std::int64_t d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        *this = from128(n, d);
    }

    static Rational from128(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        if (d != 1) {
            __int128 a = n < 0 ? -n : n, b = d;
            while (b != 0) { __int128 t = a % b; a = b; b = t; }
            if (a > 1) { n /= a; d /= a; }
        }
        constexpr __int128 lim = static_cast<__int128>(INT64_MAX);
        if (n > lim || n < -lim || d > lim) throw overflow_error("Rational: 64-bit overflow");
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// gcd of two nonnegative rationals: the positive generator of aZ + bZ.
inline Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a == 0) return abs(b);
    if (b == 0) return abs(a);
    std::int64_t d = std::lcm(a.den(), b.den());
    std::int64_t x = std::abs((a * Rational(d)).num());
    std::int64_t y = std::abs((b * Rational(d)).num());
    return Rational(std::gcd(x, y), d);
}

}  // namespace isogr

template <>
struct std::hash<isogr::Rational> {
    std::size_t operator()(const isogr::Rational& r) const { return r.hash(); }
};
