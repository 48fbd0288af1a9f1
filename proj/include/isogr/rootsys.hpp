#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "isogr/weight.hpp"
#include "isogr/weyl_element.hpp"

namespace isogr {

enum class Series { A, B, C, D };

inline char series_char(Series s) { return "ABCD"[static_cast<int>(s)]; }

inline Series parse_series(const std::string& s) {
    if (s == "A" || s == "a") return Series::A;
    if (s == "B" || s == "b") return Series::B;
    if (s == "C" || s == "c") return Series::C;
    if (s == "D" || s == "d") return Series::D;
    throw std::invalid_argument("unknown series: " + s);
}

// One simple (or GL) factor acting on the coordinates [offset, offset+size).
// Series A factors are GL_size in GL-style coordinates.
struct Factor {
    Series series;
    std::size_t offset;
    std::size_t size;

    friend bool operator==(const Factor&, const Factor&) = default;
};

// A reductive root datum inside an ambient epsilon-space: a product of
// classical factors on disjoint coordinate blocks. Coordinates not covered by
// a factor are central directions. Used for G, for the Levi L and for the
// subgroups H_a, M_a, L_in, L_out.
class RootDatum {
public:
    RootDatum() = default;
    RootDatum(std::size_t ambient, std::vector<Factor> factors)
        : ambient_(ambient), factors_(std::move(factors)) {
        for (const auto& f : factors_) {
            if (f.offset + f.size > ambient_) throw std::invalid_argument("factor exceeds ambient rank");
            if (f.size == 0) throw std::invalid_argument("empty factor");
        }
        build();
    }

    static RootDatum simple(Series s, std::size_t coords) {
        return RootDatum(coords, {Factor{s, 0, coords}});
    }

    std::size_t ambient() const { return ambient_; }
    const std::vector<Factor>& factors() const { return factors_; }
    const std::vector<Weight>& positive_roots() const { return positive_; }
    const std::vector<Weight>& simple_roots() const { return simple_; }
    // Half-sum of positive roots for B/C/D factors; (m-1,...,1,0) on a GL_m
    // factor, which differs from the half-sum by a central vector.
    const Weight& rho() const { return rho_; }
    std::size_t num_positive_roots() const { return positive_.size(); }

    std::string key() const {
        std::string s = std::to_string(ambient_) + ":";
        for (const auto& f : factors_)
            s += series_char(f.series) + std::to_string(f.offset) + "+" + std::to_string(f.size) + ";";
        return s;
    }
    friend bool operator==(const RootDatum& a, const RootDatum& b) {
        return a.ambient_ == b.ambient_ && a.factors_ == b.factors_;
    }

    static bool is_positive_root_vector(const Weight& r) {
        for (const auto& x : r)
            if (x != 0) return x > 0;
        return false;
    }

    bool is_dominant(const Weight& lam) const {
        check(lam);
        for (const auto& f : factors_) {
            for (std::size_t i = f.offset; i + 1 < f.offset + f.size; ++i) {
                if (f.series == Series::D && i + 2 == f.offset + f.size) {
                    if (lam[i] < abs(lam[i + 1])) return false;
                } else if (lam[i] < lam[i + 1]) {
                    return false;
                }
            }
            if ((f.series == Series::B || f.series == Series::C) && lam[f.offset + f.size - 1] < 0)
                return false;
        }
        return true;
    }

    bool is_regular(const Weight& lam) const {
        check(lam);
        for (const auto& a : positive_)
            if (scalar_product(lam, a) == 0) return false;
        return true;
    }

    // #{alpha > 0 : (x, alpha) < 0}; for regular x this is the length of the
    // element taking x to the dominant chamber.
    int negative_pairings(const Weight& x) const {
        int c = 0;
        for (const auto& a : positive_)
            if (scalar_product(x, a) < 0) ++c;
        return c;
    }

    // Returns (dom, w) with w.act(lam) == dom dominant.
    std::pair<Weight, WeylElement> dominant_representative(const Weight& lam) const {
        check(lam);
        WeylElement w = WeylElement::identity(ambient_);
        std::vector<int> perm = w.perm(), sign = w.signs();
        for (const auto& f : factors_) {
            bool use_abs = f.series != Series::A;
            std::vector<std::size_t> idx(f.size);
            std::iota(idx.begin(), idx.end(), f.offset);
            auto key = [&](std::size_t i) { return use_abs ? abs(lam[i]) : lam[i]; };
            std::stable_sort(idx.begin(), idx.end(),
                             [&](std::size_t a, std::size_t b) { return key(a) > key(b); });
            int flips = 0;
            for (std::size_t pos = 0; pos < idx.size(); ++pos) {
                std::size_t i = idx[pos];
                perm[i] = static_cast<int>(f.offset + pos);
                sign[i] = (use_abs && lam[i] < 0) ? -1 : 1;
                flips += sign[i] < 0;
            }
            if (f.series == Series::D && flips % 2 == 1) sign[idx.back()] *= -1;
        }
        WeylElement out(perm, sign);
        return {out.act(lam), out};
    }
    Weight dominant(const Weight& lam) const { return dominant_representative(lam).first; }

    // Exact Weyl dimension formula; lam must be dominant.
    long long weyl_dimension(const Weight& lam) const {
        if (!is_dominant(lam)) throw std::invalid_argument("weyl_dimension: non-dominant weight " + lam.str());
        Rational num(1), den(1);
        Weight lr = lam + rho_;
        for (const auto& a : positive_) {
            num *= scalar_product(lr, a);
            den *= scalar_product(rho_, a);
        }
        Rational d = num / den;
        if (!d.is_integer()) throw std::logic_error("weyl_dimension: non-integral result");
        return d.num();
    }

    // Coefficients of z in the basis of simple roots (ordered as
    // simple_roots()); nullopt when z is not in their span.
    std::optional<std::vector<Rational>> simple_root_coefficients(const Weight& z) const {
        check(z);
        std::vector<bool> covered(ambient_, false);
        std::vector<Rational> out;
        for (const auto& f : factors_) {
            const std::size_t o = f.offset, m = f.size;
            for (std::size_t i = o; i < o + m; ++i) covered[i] = true;
            std::vector<Rational> partial(m);
            Rational s;
            for (std::size_t i = 0; i < m; ++i) partial[i] = (s += z[o + i]);
            switch (f.series) {
                case Series::A:
                    if (partial[m - 1] != 0) return std::nullopt;
                    for (std::size_t i = 0; i + 1 < m; ++i) out.push_back(partial[i]);
                    break;
                case Series::B:
                    for (std::size_t i = 0; i < m; ++i) out.push_back(partial[i]);
                    break;
                case Series::C:
                    for (std::size_t i = 0; i + 1 < m; ++i) out.push_back(partial[i]);
                    out.push_back(partial[m - 1] / 2);
                    break;
                case Series::D:
                    if (m == 1) {
                        if (z[o] != 0) return std::nullopt;
                        break;
                    }
                    for (std::size_t i = 0; i + 2 < m; ++i) out.push_back(partial[i]);
                    out.push_back((partial[m - 2] - z[o + m - 1]) / 2);
                    out.push_back(partial[m - 1] / 2);
                    break;
            }
        }
        for (std::size_t i = 0; i < ambient_; ++i)
            if (!covered[i] && z[i] != 0) return std::nullopt;
        return out;
    }

    // z is a nonnegative rational combination of simple roots.
    bool in_positive_cone(const Weight& z) const {
        auto c = simple_root_coefficients(z);
        if (!c) return false;
        return std::all_of(c->begin(), c->end(), [](const Rational& x) { return x >= 0; });
    }
    // z is a nonnegative integer combination of simple roots.
    bool in_positive_root_lattice(const Weight& z) const {
        auto c = simple_root_coefficients(z);
        if (!c) return false;
        return std::all_of(c->begin(), c->end(),
                           [](const Rational& x) { return x >= 0 && x.is_integer(); });
    }

    // The Weyl group of this datum contains w.
    bool contains(const WeylElement& w) const {
        if (w.size() != ambient_) return false;
        std::vector<bool> covered(ambient_, false);
        for (const auto& f : factors_) {
            int neg = 0;
            for (std::size_t i = f.offset; i < f.offset + f.size; ++i) {
                covered[i] = true;
                int p = w.perm()[i];
                if (p < static_cast<int>(f.offset) || p >= static_cast<int>(f.offset + f.size)) return false;
                if (w.signs()[i] < 0) {
                    if (f.series == Series::A) return false;
                    ++neg;
                }
            }
            if (f.series == Series::D && neg % 2) return false;
        }
        for (std::size_t i = 0; i < ambient_; ++i)
            if (!covered[i] && (w.perm()[i] != static_cast<int>(i) || w.signs()[i] != 1)) return false;
        return true;
    }

    bool is_root(const Weight& r) const {
        for (const auto& a : positive_)
            if (a == r || a == -r) return true;
        return false;
    }

private:
    std::size_t ambient_ = 0;
    std::vector<Factor> factors_;
    std::vector<Weight> positive_;
    std::vector<Weight> simple_;
    Weight rho_;

    void check(const Weight& w) const {
        if (w.size() != ambient_)
            throw std::invalid_argument("weight rank " + std::to_string(w.size()) + " != datum rank " +
                                        std::to_string(ambient_));
    }

    void build() {
        rho_ = Weight(ambient_);
        for (const auto& f : factors_) {
            const std::size_t o = f.offset, m = f.size;
            auto e = [&](std::size_t i) { return Weight::unit(ambient_, o + i); };
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = i + 1; j < m; ++j) {
                    positive_.push_back(e(i) - e(j));
                    if (f.series != Series::A) positive_.push_back(e(i) + e(j));
                }
            if (f.series == Series::B)
                for (std::size_t i = 0; i < m; ++i) positive_.push_back(e(i));
            if (f.series == Series::C)
                for (std::size_t i = 0; i < m; ++i) positive_.push_back(Rational(2) * e(i));

            for (std::size_t i = 0; i + 1 < m; ++i)
                if (!(f.series == Series::D && i + 2 == m)) simple_.push_back(e(i) - e(i + 1));
            if (f.series == Series::D && m >= 2) {
                simple_.push_back(e(m - 2) - e(m - 1));
                simple_.push_back(e(m - 2) + e(m - 1));
            }
            if (f.series == Series::B) simple_.push_back(e(m - 1));
            if (f.series == Series::C) simple_.push_back(Rational(2) * e(m - 1));

            for (std::size_t i = 0; i < m; ++i) {
                Rational top(static_cast<std::int64_t>(m - 1 - i));
                switch (f.series) {
                    case Series::A: rho_[o + i] = top; break;
                    case Series::B: rho_[o + i] = top + Rational(1, 2); break;
                    case Series::C: rho_[o + i] = top + 1; break;
                    case Series::D: rho_[o + i] = top; break;
                }
            }
        }
    }
};

// A simple root system of classical series in epsilon-coordinates. Type A_n
// uses n+1 GL-style coordinates.
struct RootSystem {
    Series series;
    int rank;

    RootSystem(Series s, int n) : series(s), rank(n) {
        if (n < 1) throw std::invalid_argument("rank must be positive");
        if (s == Series::D && n < 2) throw std::invalid_argument("type D needs rank >= 2");
    }

    std::size_t coords() const { return series == Series::A ? rank + 1 : rank; }
    // 1/2, 1, 0 for B, C, D; zero for A where it is not used
    Rational e() const {
        switch (series) {
            case Series::B: return Rational(1, 2);
            case Series::C: return Rational(1);
            default: return Rational(0);
        }
    }
    RootDatum datum() const { return RootDatum::simple(series, coords()); }
    std::string name() const { return std::string(1, series_char(series)) + std::to_string(rank); }
};

struct RootData {
    std::vector<Weight> simple_roots;
    std::vector<Weight> fundamental_weights;
    Weight rho;
    std::vector<Weight> positive_roots;
};

inline Weight fundamental_weight(const RootSystem& rs, int i) {
    const std::size_t n = rs.coords();
    if (i < 1 || i > rs.rank) throw std::invalid_argument("fundamental weight index out of range");
    Weight w(n);
    const int r = rs.rank;
    const bool spin_last = rs.series == Series::B && i == r;
    const bool spin_pair = rs.series == Series::D && i >= r - 1;
    if (spin_last || spin_pair) {
        for (std::size_t j = 0; j < n; ++j) w[j] = Rational(1, 2);
        if (rs.series == Series::D && i == r - 1) w[n - 1] = Rational(-1, 2);
        return w;
    }
    for (int j = 0; j < i; ++j) w[j] = 1;
    return w;
}

inline RootData root_datum(const RootSystem& rs) {
    RootDatum d = rs.datum();
    RootData out;
    out.simple_roots = d.simple_roots();
    out.positive_roots = d.positive_roots();
    for (int i = 1; i <= rs.rank; ++i) out.fundamental_weights.push_back(fundamental_weight(rs, i));
    out.rho = d.rho();
    return out;
}

inline std::pair<Weight, WeylElement> dominant_representative(const RootSystem& rs, const Weight& lam) {
    return rs.datum().dominant_representative(lam);
}
inline bool is_regular(const RootSystem& rs, const Weight& lam) { return rs.datum().is_regular(lam); }
inline long long weyl_dimension(const RootSystem& rs, const Weight& lam) {
    return rs.datum().weyl_dimension(lam);
}

}  // namespace isogr
