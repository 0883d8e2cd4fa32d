#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "symtc/errors.hpp"

namespace symtc {

/// A permutation of {0..n-1}. Coordinates are 0-based internally; printed
/// 1-based.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
        std::vector<char> hit(image_.size(), 0);
        for (int v : image_) {
            if (v < 0 || static_cast<std::size_t>(v) >= image_.size() || hit[v])
                throw Error(Errc::BadArity, "not a permutation");
            hit[v] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        return Permutation(std::move(img));
    }

    /// Swap of coordinates a and b (0-based).
    static Permutation transposition(int n, int a, int b) {
        auto p = identity(n);
        std::swap(p.image_[a], p.image_[b]);
        return p;
    }

    int n() const noexcept { return static_cast<int>(image_.size()); }
    int operator()(int j) const { return image_.at(j); }
    const std::vector<int>& image() const noexcept { return image_; }

    bool is_identity() const {
        for (int j = 0; j < n(); ++j)
            if (image_[j] != j) return false;
        return true;
    }

    Permutation inverse() const {
        std::vector<int> inv(image_.size());
        for (int j = 0; j < n(); ++j) inv[image_[j]] = j;
        return Permutation(std::move(inv));
    }

    /// 1-based one-line notation, e.g. "[2,1,3]".
    std::string to_string() const {
        std::string out = "[";
        for (int j = 0; j < n(); ++j) {
            if (j) out += ',';
            out += std::to_string(image_[j] + 1);
        }
        return out + "]";
    }

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> image_;
};

/// (outer o inner)(j) = outer(inner(j)).
inline Permutation compose(const Permutation& outer, const Permutation& inner) {
    if (outer.n() != inner.n()) throw Error(Errc::BadArity, "composing permutations of different degree");
    std::vector<int> img(inner.n());
    for (int j = 0; j < inner.n(); ++j) img[j] = outer(inner(j));
    return Permutation(std::move(img));
}

inline constexpr int kMaxDegree = 5;

/// All of Sigma_n in lexicographic order (identity first).
class SymmetricGroup {
public:
    explicit SymmetricGroup(int n) : n_(n) {
        if (n < 1 || n > kMaxDegree)
            throw Error(Errc::BadArity, "symmetric group degree must be in 1.." + std::to_string(kMaxDegree));
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        do {
            elements_.emplace_back(img);
        } while (std::next_permutation(img.begin(), img.end()));
        for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
    }

    int degree() const noexcept { return n_; }
    std::size_t order() const noexcept { return elements_.size(); }
    const std::vector<Permutation>& elements() const noexcept { return elements_; }
    const Permutation& operator[](std::size_t i) const { return elements_.at(i); }
    std::size_t index_of(const Permutation& g) const { return index_.at(g); }

    /// The transpositions (1 j), j = 2..n.
    std::vector<Permutation> generators() const {
        std::vector<Permutation> out;
        for (int j = 1; j < n_; ++j) out.push_back(Permutation::transposition(n_, 0, j));
        return out;
    }

    /// Generators plus the cycle j -> j+1, used as a non-generator guard.
    std::vector<std::size_t> check_set() const {
        std::vector<std::size_t> out;
        for (const auto& g : generators()) out.push_back(index_of(g));
        if (n_ >= 3) {
            std::vector<int> cyc(n_);
            for (int j = 0; j < n_; ++j) cyc[j] = (j + 1) % n_;
            out.push_back(index_of(Permutation(cyc)));
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

private:
    int n_;
    std::vector<Permutation> elements_;
    std::map<Permutation, std::size_t> index_;
};

/// Subgroup generated by {(1 g(j)) o g o (1 j)}: exactly the permutations
/// applied by "act with (1 j), then g, then (1 g(j))" under the coordinate
/// action. Every element fixes the first coordinate.
inline std::vector<Permutation> group_constraint(const SymmetricGroup& group) {
    const int n = group.degree();
    std::set<Permutation> members;
    std::vector<Permutation> gens;
    for (const auto& g : group.elements())
        for (int j = 0; j < n; ++j) {
            auto t_j = Permutation::transposition(n, 0, j);
            auto t_gj = Permutation::transposition(n, 0, g(j));
            gens.push_back(compose(t_gj, compose(g, t_j)));
        }
    std::vector<Permutation> frontier{Permutation::identity(n)};
    members.insert(frontier.front());
    while (!frontier.empty()) {
        auto h = frontier.back();
        frontier.pop_back();
        for (const auto& s : gens) {
            auto next = compose(s, h);
            if (members.insert(next).second) frontier.push_back(next);
        }
    }
    return {members.begin(), members.end()};
}

} // namespace symtc
