#pragma once

// Sigma_n acting on points of a complex or poset through explicit tables.
//
// Convention: g acts on n-tuples by (g.x)_i = x_{g(i)}. Under this action a
// tuple of maps (f_1..f_n) is equivariant when f_j(g.x) = f_{g(j)}(x), and
// acting twice composes as g'.(g.x) = (g o g').x.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "symtc/complex.hpp"
#include "symtc/errors.hpp"
#include "symtc/permutation.hpp"
#include "symtc/poset.hpp"

namespace symtc {

using Point = std::uint32_t;
using PointMap = std::vector<Point>;

template <typename T>
std::vector<T> act_tuple(const Permutation& g, const std::vector<T>& x) {
    if (static_cast<int>(x.size()) != g.n()) throw Error(Errc::BadArity, "tuple length differs from degree");
    std::vector<T> out(x.size());
    for (int i = 0; i < g.n(); ++i) out[i] = x[g(i)];
    return out;
}

/// Action of the full symmetric group on {0..points-1}.
class Action {
public:
    Action() = default;
    Action(SymmetricGroup group, std::vector<PointMap> tables) : group_(std::move(group)), tables_(std::move(tables)) {
        if (tables_.size() != group_->order()) throw Error(Errc::ValidationError, "one table per group element");
    }

    const SymmetricGroup& group() const { return *group_; }
    int degree() const { return group_->degree(); }
    std::size_t points() const { return tables_.empty() ? 0 : tables_.front().size(); }
    const std::vector<PointMap>& tables() const noexcept { return tables_; }
    const PointMap& table(std::size_t g) const { return tables_.at(g); }

    Point apply(std::size_t g, Point x) const { return tables_.at(g).at(x); }
    Point apply(const Permutation& g, Point x) const { return apply(group_->index_of(g), x); }

    /// Restriction to an invariant subset, re-indexed by position in `members`.
    Action restricted(const std::vector<Point>& members) const {
        std::vector<long> local(points(), -1);
        for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<long>(i);
        std::vector<PointMap> out;
        for (const auto& t : tables_) {
            PointMap r(members.size());
            for (std::size_t i = 0; i < members.size(); ++i) {
                long img = local[t[members[i]]];
                if (img < 0) throw Error(Errc::NotEquivariant, "restriction to a non-invariant subset");
                r[i] = static_cast<Point>(img);
            }
            out.push_back(std::move(r));
        }
        return Action(*group_, std::move(out));
    }

private:
    std::optional<SymmetricGroup> group_;
    std::vector<PointMap> tables_;
};

/// Indices of the group elements forming the constraint subgroup G.
inline std::vector<std::size_t> constraint_indices(const SymmetricGroup& group) {
    std::vector<std::size_t> out;
    for (const auto& h : group_constraint(group)) out.push_back(group.index_of(h));
    return out;
}

inline std::vector<std::size_t> all_indices(const SymmetricGroup& group) {
    std::vector<std::size_t> out(group.order());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
    return out;
}

inline std::vector<Point> orbit(const Action& action, Point x) {
    std::set<Point> seen;
    for (const auto& t : action.tables()) seen.insert(t.at(x));
    return {seen.begin(), seen.end()};
}

/// Orbit id per point under the listed group elements, ids numbered by
/// smallest member.
inline std::vector<std::size_t> orbit_ids(const Action& action, std::span<const std::size_t> elements) {
    const std::size_t n = action.points();
    std::vector<std::size_t> id(n, SIZE_MAX);
    std::size_t next = 0;
    for (Point x = 0; x < n; ++x) {
        if (id[x] != SIZE_MAX) continue;
        std::vector<Point> stack{x};
        id[x] = next;
        while (!stack.empty()) {
            Point y = stack.back();
            stack.pop_back();
            for (std::size_t g : elements) {
                Point z = action.apply(g, y);
                if (id[z] == SIZE_MAX) {
                    id[z] = next;
                    stack.push_back(z);
                }
            }
        }
        ++next;
    }
    return id;
}

inline std::vector<std::vector<Point>> orbit_partition(const Action& action, std::span<const std::size_t> elements) {
    auto id = orbit_ids(action, elements);
    std::size_t count = 0;
    for (auto i : id) count = std::max(count, i + 1);
    std::vector<std::vector<Point>> out(count);
    for (Point x = 0; x < id.size(); ++x) out[id[x]].push_back(x);
    return out;
}

inline Simplex act_simplex(const Action& action, std::size_t g, const Simplex& s) {
    Simplex out;
    out.reserve(s.size());
    for (Vertex v : s) out.push_back(action.apply(g, v));
    return normalized(std::move(out));
}

/// Smallest invariant subcomplex containing `simplices`, returned as its
/// maximal simplices.
inline std::vector<Simplex> symmetrize(const SimplicialComplex& k, const Action& action,
                                       const std::vector<Simplex>& simplices) {
    std::set<Simplex> all;
    for (const auto& s : simplices)
        for (std::size_t g = 0; g < action.tables().size(); ++g) {
            auto t = act_simplex(action, g, s);
            if (!k.contains(t)) throw Error(Errc::NotASubcomplex, "action image is not a simplex");
            all.insert(std::move(t));
        }
    std::vector<Simplex> maximal;
    for (const auto& s : all) {
        bool covered = false;
        for (const auto& t : all)
            if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                covered = true;
                break;
            }
        if (!covered) maximal.push_back(s);
    }
    return maximal;
}

/// Smallest invariant open set containing `members`.
inline DownSet symmetrize_open(const FinitePoset& p, const Action& action, std::span<const Element> members) {
    std::vector<Element> all;
    for (Element x : members)
        for (const auto& t : action.tables()) all.push_back(t.at(x));
    return down_closure(p, all);
}

/// The subcomplex generated by `facets` is invariant.
inline bool is_invariant(const Action& action, const std::vector<Simplex>& facets) {
    for (const auto& f : facets)
        for (std::size_t g = 0; g < action.tables().size(); ++g) {
            auto t = act_simplex(action, g, f);
            bool inside = std::any_of(facets.begin(), facets.end(), [&](const Simplex& h) {
                return std::includes(h.begin(), h.end(), t.begin(), t.end());
            });
            if (!inside) return false;
        }
    return true;
}

inline bool is_invariant_set(const Action& action, std::span<const Point> members) {
    std::set<Point> in(members.begin(), members.end());
    for (Point x : members)
        for (const auto& t : action.tables())
            if (!in.count(t.at(x))) return false;
    return true;
}

struct EquivarianceCheck {
    bool ok = true;
    std::optional<Permutation> g;
    Point x = 0;
    int j = 0; // 1-based component

    std::string describe() const {
        if (ok) return "equivariant";
        return "f_" + std::to_string(j) + "(g.x) != f_g(j)(x) for g=" + g->to_string() + ", x=" + std::to_string(x);
    }
};

/// f_j(g.x) = f_{g(j)}(x). Checks the generators (1 j) and a guard cycle
/// unless `exhaustive` asks for all of Sigma_n.
inline EquivarianceCheck check_equivariant_tuple(const Action& action, const std::vector<PointMap>& tuple,
                                                 bool exhaustive = false) {
    const auto& group = action.group();
    if (static_cast<int>(tuple.size()) != group.degree())
        throw Error(Errc::BadArity, "tuple length differs from the group degree");
    for (const auto& f : tuple)
        if (f.size() != action.points()) throw Error(Errc::SourceMismatch, "map is not total on the acted set");
    auto elements = exhaustive ? all_indices(group) : group.check_set();
    for (std::size_t gi : elements) {
        const auto& g = group[gi];
        for (Point x = 0; x < action.points(); ++x) {
            Point gx = action.apply(gi, x);
            for (int j = 0; j < group.degree(); ++j)
                if (tuple[j][gx] != tuple[g(j)][x]) return {false, g, x, j + 1};
        }
    }
    return {};
}

/// A map invariant under every element of the group (constant on orbits).
inline bool is_fully_invariant(const Action& action, const PointMap& f) {
    for (const auto& t : action.tables())
        for (Point x = 0; x < f.size(); ++x)
            if (f[t[x]] != f[x]) return false;
    return true;
}

struct ReducedMap {
    PointMap first;                        // f_1
    std::vector<std::size_t> constraint;   // indices of G in the group
};

/// Equivariant tuple -> its first component, which is G-invariant.
inline ReducedMap reduce_tuple(const Action& action, const std::vector<PointMap>& tuple) {
    auto check = check_equivariant_tuple(action, tuple, true);
    if (!check.ok) throw Error(Errc::NotEquivariant, check.describe());
    return {tuple.front(), constraint_indices(action.group())};
}

/// G-invariant f_1 -> (f_1, ..., f_n) with f_j(x) = f_1((1 j).x).
inline std::vector<PointMap> expand_map(const Action& action, const PointMap& first) {
    const auto& group = action.group();
    if (first.size() != action.points()) throw Error(Errc::SourceMismatch, "map is not total on the acted set");
    for (std::size_t h : constraint_indices(group))
        for (Point x = 0; x < first.size(); ++x)
            if (first[action.apply(h, x)] != first[x])
                throw Error(Errc::NotGInvariant, "first component is not invariant under " + group[h].to_string());
    std::vector<PointMap> tuple;
    for (int j = 0; j < group.degree(); ++j) {
        std::size_t swap = group.index_of(Permutation::transposition(group.degree(), 0, j));
        PointMap f(first.size());
        for (Point x = 0; x < first.size(); ++x) f[x] = first[action.apply(swap, x)];
        tuple.push_back(std::move(f));
    }
    return tuple;
}

} // namespace symtc
