#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <unordered_set>
#include <vector>

#include "isogr/rootsys.hpp"

namespace isogr {

// Length with respect to the positive roots of `g`: #{alpha > 0 : w alpha < 0}.
inline int length(const RootDatum& g, const WeylElement& w) {
    int c = 0;
    for (const auto& a : g.positive_roots())
        if (!RootDatum::is_positive_root_vector(w.act(a))) ++c;
    return c;
}

inline WeylElement longest_element(const RootDatum& d) {
    return d.dominant_representative(-d.rho()).second;
}

// Enumerates every element of the Weyl group of `d` and calls f on it.
inline void for_each_element(const RootDatum& d, const std::function<void(const WeylElement&)>& f) {
    const std::size_t n = d.ambient();
    std::vector<int> perm(n), sign(n, 1);
    std::iota(perm.begin(), perm.end(), 0);
    const auto& fs = d.factors();

    std::function<void(std::size_t)> rec = [&](std::size_t fi) {
        if (fi == fs.size()) {
            f(WeylElement(perm, sign));
            return;
        }
        const Factor& fc = fs[fi];
        std::vector<int> block(fc.size);
        std::iota(block.begin(), block.end(), static_cast<int>(fc.offset));
        const bool signed_group = fc.series != Series::A;
        const std::size_t patterns = signed_group ? (std::size_t{1} << fc.size) : 1;
        do {
            for (std::size_t i = 0; i < fc.size; ++i) perm[fc.offset + i] = block[i];
            for (std::size_t mask = 0; mask < patterns; ++mask) {
                if (fc.series == Series::D && __builtin_popcountll(mask) % 2) continue;
                for (std::size_t i = 0; i < fc.size; ++i) sign[fc.offset + i] = (mask >> i) & 1 ? -1 : 1;
                rec(fi + 1);
            }
            for (std::size_t i = 0; i < fc.size; ++i) sign[fc.offset + i] = 1;
        } while (std::next_permutation(block.begin(), block.end()));
        for (std::size_t i = 0; i < fc.size; ++i) perm[fc.offset + i] = static_cast<int>(fc.offset + i);
    };
    rec(0);
}

inline std::vector<WeylElement> group_elements(const RootDatum& d) {
    std::vector<WeylElement> out;
    for_each_element(d, [&](const WeylElement& w) { out.push_back(w); });
    return out;
}

inline std::size_t group_order(const RootDatum& d) {
    std::size_t total = 1;
    for (const auto& f : d.factors()) {
        std::size_t fact = 1;
        for (std::size_t i = 2; i <= f.size; ++i) fact *= i;
        std::size_t signs = 1;
        if (f.series == Series::B || f.series == Series::C) signs = std::size_t{1} << f.size;
        if (f.series == Series::D) signs = std::size_t{1} << (f.size - 1);
        total *= fact * signs;
    }
    return total;
}

// Minimal length representatives of the cosets W_L \ W_G, characterised by
// sending the dominant chamber of G into the dominant chamber of L. Sorted by
// (length, signed images). Results are memoised per (G, L).
inline const std::vector<WeylElement>& special_representatives(const RootDatum& g, const RootDatum& l) {
    static std::mutex mu;
    static std::map<std::string, std::vector<WeylElement>> cache;
    const std::string key = g.key() + "|" + l.key();
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    std::vector<std::pair<int, WeylElement>> found;
    const Weight& rho = g.rho();
    for_each_element(g, [&](const WeylElement& w) {
        if (l.is_dominant(w.act(rho))) found.emplace_back(length(g, w), w);
    });
    std::sort(found.begin(), found.end());
    std::vector<WeylElement> out;
    out.reserve(found.size());
    for (auto& p : found) out.push_back(std::move(p.second));
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(out)).first->second;
}

// Full orbit of lam under the Weyl group of d, sorted, without duplicates.
inline std::vector<Weight> orbit(const RootDatum& d, const Weight& lam) {
    std::vector<WeylElement> refl;
    for (const auto& a : d.simple_roots()) refl.push_back(WeylElement::reflection(a));
    std::unordered_set<Weight> seen{lam};
    std::vector<Weight> frontier{lam};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& x : frontier)
            for (const auto& s : refl) {
                Weight y = s.act(x);
                if (seen.insert(y).second) next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    std::vector<Weight> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace isogr
