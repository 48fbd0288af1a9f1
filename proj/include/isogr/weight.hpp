#pragma once

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "isogr/rational.hpp"

namespace isogr {

enum class LatticeClass { integral, spin, other };

inline const char* to_string(LatticeClass c) {
    switch (c) {
        case LatticeClass::integral: return "integral";
        case LatticeClass::spin: return "spin";
        default: return "other";
    }
}

// A vector in epsilon-coordinates with exact rational entries.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::size_t n) : c_(n) {}
    Weight(std::initializer_list<Rational> xs) : c_(xs) {}
    explicit Weight(std::vector<Rational> xs) : c_(std::move(xs)) {}

    static Weight from_ints(const std::vector<long long>& xs) {
        Weight w(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) w.c_[i] = Rational(xs[i]);
        return w;
    }
    // unit vector eps_i, zero based
    static Weight unit(std::size_t n, std::size_t i, Rational scale = 1) {
        Weight w(n);
        w.c_[i] = scale;
        return w;
    }
    static Weight constant(std::size_t n, Rational v) {
        Weight w(n);
        std::fill(w.c_.begin(), w.c_.end(), v);
        return w;
    }

    std::size_t size() const { return c_.size(); }
    bool empty() const { return c_.empty(); }
    Rational& operator[](std::size_t i) { return c_[i]; }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<Rational>& coords() const { return c_; }
    std::vector<Rational>& coords() { return c_; }
    auto begin() const { return c_.begin(); }
    auto end() const { return c_.end(); }

    LatticeClass lattice_class() const {
        bool all_int = true, all_half = true;
        for (const auto& x : c_) {
            if (!x.is_integer()) all_int = false;
            if (!x.is_half_integer()) all_half = false;
        }
        if (all_int) return LatticeClass::integral;
        if (all_half) return LatticeClass::spin;
        return LatticeClass::other;
    }
    bool is_integral() const { return lattice_class() == LatticeClass::integral; }
    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
    }

    Weight slice(std::size_t from, std::size_t to) const {
        return Weight(std::vector<Rational>(c_.begin() + from, c_.begin() + to));
    }
    Weight concat(const Weight& o) const {
        Weight w(*this);
        w.c_.insert(w.c_.end(), o.c_.begin(), o.c_.end());
        return w;
    }
    Rational sum() const {
        Rational s;
        for (const auto& x : c_) s += x;
        return s;
    }

    Weight operator-() const {
        Weight w(*this);
        for (auto& x : w.c_) x = -x;
        return w;
    }
    Weight& operator+=(const Weight& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Weight& operator-=(const Weight& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(const Rational& s, Weight a) {
        for (auto& x : a.c_) x *= s;
        return a;
    }

    friend bool operator==(const Weight& a, const Weight& b) { return a.c_ == b.c_; }
    friend auto operator<=>(const Weight& a, const Weight& b) {
        return std::lexicographical_compare_three_way(a.c_.begin(), a.c_.end(), b.c_.begin(),
                                                      b.c_.end());
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ",";
            s += c_[i].str();
        }
        return s + ")";
    }

    // Comma separated rationals, optionally wrapped in parentheses; a ';' is
    // accepted as a separator too so that "(0,0,-1;1)" parses.
    static Weight parse(std::string text) {
        for (char& ch : text)
            if (ch == ';') ch = ',';
        std::string body;
        for (char ch : text)
            if (ch != '(' && ch != ')' && ch != '[' && ch != ']' && ch != ' ') body += ch;
        Weight w;
        if (body.empty()) return w;
        std::stringstream ss(body);
        std::string tok;
        while (std::getline(ss, tok, ',')) w.c_.push_back(Rational::parse(tok));
        return w;
    }

    std::size_t hash() const {
        std::size_t h = c_.size();
        for (const auto& x : c_) h = h * 1000003u ^ x.hash();
        return h;
    }

private:
    std::vector<Rational> c_;

    void check(const Weight& o) const {
        if (o.size() != size()) throw std::invalid_argument("weight rank mismatch");
    }
};

inline Rational scalar_product(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) throw std::invalid_argument("scalar_product: rank mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }

struct WeightHash {
    std::size_t operator()(const Weight& w) const { return w.hash(); }
};

}  // namespace isogr

template <>
struct std::hash<isogr::Weight> {
    std::size_t operator()(const isogr::Weight& w) const { return w.hash(); }
};
