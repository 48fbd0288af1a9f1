#pragma once

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "isogr/weight.hpp"

namespace isogr {

// Signed permutation: eps_i is sent to sign[i] * eps_{perm[i]} (zero based).
class WeylElement {
public:
    WeylElement() = default;
    explicit WeylElement(std::size_t n) : perm_(n), sign_(n, 1) {
        std::iota(perm_.begin(), perm_.end(), 0);
    }
    WeylElement(std::vector<int> perm, std::vector<int> sign)
        : perm_(std::move(perm)), sign_(std::move(sign)) {
        validate();
    }

    static WeylElement identity(std::size_t n) { return WeylElement(n); }

    // Parse one-line signed notation: entry i is +-(image of i), one based.
    static WeylElement from_signed_images(const std::vector<int>& images) {
        std::vector<int> p(images.size()), s(images.size());
        for (std::size_t i = 0; i < images.size(); ++i) {
            if (images[i] == 0) throw std::invalid_argument("signed image 0");
            p[i] = std::abs(images[i]) - 1;
            s[i] = images[i] < 0 ? -1 : 1;
        }
        return WeylElement(p, s);
    }

    // The reflection in a root of the classical series (eps_i - eps_j,
    // eps_i + eps_j, eps_i or 2 eps_i).
    static WeylElement reflection(const Weight& root) {
        WeylElement w(root.size());
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < root.size(); ++i)
            if (root[i] != 0) support.push_back(i);
        if (support.size() == 1) {
            w.sign_[support[0]] = -1;
        } else if (support.size() == 2) {
            std::size_t i = support[0], j = support[1];
            if (abs(root[i]) != abs(root[j])) throw std::invalid_argument("not a classical root");
            w.perm_[i] = static_cast<int>(j);
            w.perm_[j] = static_cast<int>(i);
            if (root[i] == root[j]) w.sign_[i] = w.sign_[j] = -1;
        } else {
            throw std::invalid_argument("not a classical root");
        }
        return w;
    }

    std::size_t size() const { return perm_.size(); }
    const std::vector<int>& perm() const { return perm_; }
    const std::vector<int>& signs() const { return sign_; }

    int negative_count() const {
        int c = 0;
        for (int s : sign_) c += s < 0;
        return c;
    }
    bool is_identity() const {
        for (std::size_t i = 0; i < perm_.size(); ++i)
            if (perm_[i] != static_cast<int>(i) || sign_[i] != 1) return false;
        return true;
    }
    // True when coordinates outside [from, to) are fixed.
    bool fixes_outside(std::size_t from, std::size_t to) const {
        for (std::size_t i = 0; i < perm_.size(); ++i)
            if ((i < from || i >= to) && (perm_[i] != static_cast<int>(i) || sign_[i] != 1))
                return false;
        return true;
    }

    Weight act(const Weight& lam) const {
        if (lam.size() != perm_.size()) throw std::invalid_argument("act: rank mismatch");
        Weight out(lam.size());
        for (std::size_t i = 0; i < perm_.size(); ++i)
            out[perm_[i]] = sign_[i] > 0 ? lam[i] : -lam[i];
        return out;
    }
    Weight operator()(const Weight& lam) const { return act(lam); }

    // (a * b)(x) = a(b(x))
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
        if (a.size() != b.size()) throw std::invalid_argument("compose: rank mismatch");
        WeylElement c(a.size());
        for (std::size_t i = 0; i < b.size(); ++i) {
            int mid = b.perm_[i];
            c.perm_[i] = a.perm_[mid];
            c.sign_[i] = b.sign_[i] * a.sign_[mid];
        }
        return c;
    }

    WeylElement inverse() const {
        WeylElement w(size());
        for (std::size_t i = 0; i < perm_.size(); ++i) {
            w.perm_[perm_[i]] = static_cast<int>(i);
            w.sign_[perm_[i]] = sign_[i];
        }
        return w;
    }

    std::vector<int> signed_images() const {
        std::vector<int> out(perm_.size());
        for (std::size_t i = 0; i < perm_.size(); ++i) out[i] = sign_[i] * (perm_[i] + 1);
        return out;
    }

    std::string str() const {
        std::string s = "[";
        auto im = signed_images();
        for (std::size_t i = 0; i < im.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(im[i]);
        }
        return s + "]";
    }

    friend bool operator==(const WeylElement&, const WeylElement&) = default;
    friend auto operator<=>(const WeylElement& a, const WeylElement& b) {
        return a.signed_images() <=> b.signed_images();
    }

private:
    std::vector<int> perm_;
    std::vector<int> sign_;

    void validate() const {
        if (perm_.size() != sign_.size()) throw std::invalid_argument("perm/sign size mismatch");
        std::vector<bool> seen(perm_.size(), false);
        for (std::size_t i = 0; i < perm_.size(); ++i) {
            int p = perm_[i];
            if (p < 0 || p >= static_cast<int>(perm_.size()) || seen[p])
                throw std::invalid_argument("not a permutation");
            seen[p] = true;
            if (sign_[i] != 1 && sign_[i] != -1) throw std::invalid_argument("sign must be +-1");
        }
    }
};

}  // namespace isogr
