#pragma once

// TC^Sigma_n of a finite space computed directly from sections of q_{n,m}.
//
// For an invariant open Q of P^n, an equivariant section over Q with fence
// length m is a sequence of equivariant tuples T_0, ..., T_m with T_0
// diagonal and invariant, T_{l-1} <= T_l for odd l and >= for even l, and
// T_m the projections. Tuples are enumerated from all monotone maps Q -> P
// and the reachable sets R_0 c R_1 c ... are computed until they stop
// growing. Nothing here uses the orbit-move search.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "symtc/certificate.hpp"
#include "symtc/complexity.hpp"
#include "symtc/constructions.hpp"
#include "symtc/errors.hpp"
#include "symtc/poset.hpp"

namespace symtc {

struct SectionPiece {
    std::vector<std::size_t> units;
    std::vector<Element> members;  // elements of P^n
    std::optional<int> min_m;      // smallest fence length with a section
};

struct SectionRouteResult {
    std::optional<std::size_t> k;                    // nullopt: no cover at any m
    std::vector<std::optional<std::size_t>> k_by_m;  // m = 0 .. stable_m
    int stable_m = 0;
    std::vector<SectionPiece> pieces;
    std::vector<SectionWitness> cover;               // witnesses at stable_m
    std::size_t maps_enumerated = 0;
};

namespace section_detail {

using Map = std::vector<Element>;

struct MapHash {
    std::size_t operator()(const Map& m) const noexcept { return boost::hash_range(m.begin(), m.end()); }
};

/// All data needed on one piece.
class PieceSpace {
public:
    PieceSpace(const FinitePoset& q, const FinitePoset& p, const SymmetricGroup& group,
               const std::vector<std::vector<Element>>& tables, std::size_t limit)
        : q_(q), p_(p), group_(group), tables_(tables) {
        maps_ = enumerate_monotone_maps(q, p, limit);
        for (std::size_t i = 0; i < maps_.size(); ++i) index_.emplace(maps_[i].values, i);
        const int n = group.degree();
        // g_j: lexicographically first element sending coordinate 0 to j.
        for (int j = 0; j < n; ++j)
            for (std::size_t g = 0; g < group.order(); ++g)
                if (group[g](0) == j) {
                    lift_.push_back(g);
                    break;
                }
        equivariant_.resize(maps_.size());
        invariant_.resize(maps_.size());
        for (std::size_t i = 0; i < maps_.size(); ++i) {
            auto t = tuple(i);
            bool eq = true;
            for (std::size_t g = 0; g < group.order() && eq; ++g)
                for (Element x = 0; x < q.size() && eq; ++x)
                    for (int j = 0; j < n && eq; ++j)
                        if (t[j][tables[g][x]] != t[group[g](j)][x]) eq = false;
            equivariant_[i] = eq;
            bool inv = true;
            for (std::size_t g = 0; g < group.order() && inv; ++g)
                for (Element x = 0; x < q.size() && inv; ++x)
                    if (maps_[i].values[tables[g][x]] != maps_[i].values[x]) inv = false;
            invariant_[i] = inv;
        }
    }

    std::size_t size() const { return maps_.size(); }
    const Map& map(std::size_t i) const { return maps_[i].values; }
    bool equivariant(std::size_t i) const { return equivariant_[i]; }
    bool invariant(std::size_t i) const { return invariant_[i]; }

    /// Pointwise order of maps i <= j.
    bool leq(std::size_t i, std::size_t j) const { return maps_leq(p_, maps_[i].values, maps_[j].values); }

    std::optional<std::size_t> find(const Map& m) const {
        auto it = index_.find(m);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// The tuple (h_1..h_n) with h_j(x) = f(g_j . x).
    std::vector<Map> tuple(std::size_t i) const {
        std::vector<Map> out;
        for (auto g : lift_) {
            Map h(q_.size());
            for (Element x = 0; x < q_.size(); ++x) h[x] = maps_[i].values[tables_[g][x]];
            out.push_back(std::move(h));
        }
        return out;
    }

    /// Up-closure (or down-closure) of `from` inside the monotone maps,
    /// by single-point moves along covers of P.
    std::vector<char> closure(const std::vector<char>& from, bool up) const {
        std::vector<char> seen = from;
        std::vector<std::size_t> stack;
        for (std::size_t i = 0; i < from.size(); ++i)
            if (from[i]) stack.push_back(i);
        auto covers = p_.covers();
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            Map f = maps_[i].values;
            for (Element x = 0; x < q_.size(); ++x) {
                const Element old = f[x];
                for (auto [a, b] : covers) {
                    if ((up ? a : b) != old) continue;
                    f[x] = up ? b : a;
                    auto j = find(f);
                    if (j && !seen[*j]) {
                        seen[*j] = 1;
                        stack.push_back(*j);
                    }
                }
                f[x] = old;
            }
        }
        return seen;
    }

private:
    const FinitePoset& q_;
    const FinitePoset& p_;
    const SymmetricGroup& group_;
    const std::vector<std::vector<Element>>& tables_;
    std::vector<MonotoneMap> maps_;
    std::unordered_map<Map, std::size_t, MapHash> index_;
    std::vector<std::size_t> lift_;
    std::vector<char> equivariant_;
    std::vector<char> invariant_;
};

struct PieceSolution {
    std::optional<int> min_m;
    std::vector<std::size_t> path; // map indices T_0 .. T_m
};

/// Layered reachability from the invariant diagonal tuples to `target`.
/// Throws BudgetExceeded when the layers still grow past max_m.
inline PieceSolution solve_piece(const PieceSpace& space, std::size_t target, int max_m) {
    std::vector<std::vector<char>> layers;
    std::vector<char> r0(space.size(), 0);
    for (std::size_t i = 0; i < space.size(); ++i) r0[i] = space.equivariant(i) && space.invariant(i);
    layers.push_back(r0);
    while (!layers.back()[target]) {
        const int l = static_cast<int>(layers.size());
        auto next = space.closure(layers.back(), l % 2 == 1);
        for (std::size_t i = 0; i < next.size(); ++i) next[i] = next[i] && space.equivariant(i);
        if (next == layers.back()) return {};
        if (l > max_m) throw Error(Errc::BudgetExceeded, "fence length above " + std::to_string(max_m));
        layers.push_back(std::move(next));
    }
    PieceSolution sol;
    sol.min_m = static_cast<int>(layers.size()) - 1;
    sol.path.assign(layers.size(), target);
    for (int l = *sol.min_m; l >= 1; --l) {
        const std::size_t cur = sol.path[l];
        for (std::size_t i = 0; i < space.size(); ++i) {
            if (!layers[l - 1][i]) continue;
            if (l % 2 == 1 ? space.leq(i, cur) : space.leq(cur, i)) {
                sol.path[l - 1] = i;
                break;
            }
        }
    }
    return sol;
}

/// Smallest number of the given sets covering `universe` units, by trying
/// every combination of increasing size.
inline std::optional<std::vector<std::size_t>> brute_force_cover(const std::vector<std::vector<char>>& sets,
                                                                  std::size_t universe) {
    std::vector<std::size_t> pick;
    std::function<bool(std::size_t, std::size_t)> choose = [&](std::size_t from, std::size_t left) -> bool {
        if (left == 0) {
            for (std::size_t u = 0; u < universe; ++u) {
                bool hit = false;
                for (auto i : pick) hit = hit || sets[i][u];
                if (!hit) return false;
            }
            return true;
        }
        for (std::size_t i = from; i < sets.size(); ++i) {
            pick.push_back(i);
            if (choose(i + 1, left - 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    for (std::size_t k = 1; k <= sets.size(); ++k) {
        pick.clear();
        if (choose(0, k)) return pick;
    }
    return std::nullopt;
}

} // namespace section_detail

/// J_{n,m+1} -> J_{n,m} collapsing (m+1)_j onto m_j, applied to a section.
inline SectionWitness extend_section(const SectionWitness& s) {
    SectionWitness out = s;
    out.m = s.m + 1;
    for (auto& path : out.paths) {
        std::vector<Element> longer = path;
        for (int j = 1; j <= s.n; ++j) {
            const std::size_t last = s.m == 0 ? 0 : 1 + static_cast<std::size_t>(s.m - 1) * s.n + (j - 1);
            longer.push_back(path[last]);
        }
        path = std::move(longer);
    }
    return out;
}

/// k = TC^Sigma_n(P) from sections over every invariant open generated by
/// orbits of maximal elements of P^n, with m raised until nothing changes.
inline SectionRouteResult tc_sigma_sections(const FinitePoset& p, int n, std::size_t max_units = 12,
                                            std::size_t map_limit = 2000000, int max_m = 64) {
    if (n < 2) throw Error(Errc::BadArity, "complexity needs n >= 2");
    if (!p.connected()) throw Error(Errc::DisconnectedPoset, "the poset is not connected");
    auto power = poset_power(p, n);
    SymmetricGroup group(n);
    auto tables = tuple_action_tables(group, power.tuples);
    const auto& x = power.poset;

    std::vector<std::vector<Element>> units;
    {
        std::vector<char> seen(x.size(), 0);
        for (Element e : x.maximal_elements()) {
            if (seen[e]) continue;
            std::set<Element> orbit;
            for (const auto& t : tables) orbit.insert(t[e]);
            for (Element o : orbit) seen[o] = 1;
            units.emplace_back(orbit.begin(), orbit.end());
        }
    }
    const std::size_t u = units.size();
    if (u > max_units) throw Error(Errc::BudgetExceeded, "too many orbits of maximal elements for the section route");

    SectionRouteResult res;
    std::vector<std::vector<std::vector<section_detail::Map>>> steps; // per piece: T_l as n maps
    for (std::size_t mask = 1; mask < (std::size_t{1} << u); ++mask) {
        SectionPiece piece;
        std::vector<Element> tops;
        for (std::size_t i = 0; i < u; ++i)
            if (mask >> i & 1) {
                piece.units.push_back(i);
                tops.insert(tops.end(), units[i].begin(), units[i].end());
            }
        piece.members = down_closure(x, tops).members;
        auto sub = induced_subposet(x, piece.members);
        std::vector<long> local(x.size(), -1);
        for (std::size_t i = 0; i < sub.to_ambient.size(); ++i) local[sub.to_ambient[i]] = static_cast<long>(i);
        std::vector<std::vector<Element>> sub_tables;
        for (const auto& t : tables) {
            std::vector<Element> r(sub.to_ambient.size());
            for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<Element>(local[t[sub.to_ambient[i]]]);
            sub_tables.push_back(std::move(r));
        }
        section_detail::PieceSpace space(sub.poset, p, group, sub_tables, map_limit);
        res.maps_enumerated += space.size();
        section_detail::Map rho1(sub.to_ambient.size());
        for (std::size_t i = 0; i < rho1.size(); ++i) rho1[i] = power.tuples[sub.to_ambient[i]][0];
        auto target = space.find(rho1);
        if (!target || !space.equivariant(*target))
            throw Error(Errc::NotEquivariant, "projections do not form an equivariant tuple");
        auto sol = section_detail::solve_piece(space, *target, max_m);
        piece.min_m = sol.min_m;
        std::vector<std::vector<section_detail::Map>> path;
        for (auto t : sol.path) path.push_back(space.tuple(t));
        res.pieces.push_back(std::move(piece));
        steps.push_back(std::move(path));
    }

    for (const auto& piece : res.pieces)
        if (piece.min_m) res.stable_m = std::max(res.stable_m, *piece.min_m);
    std::optional<std::vector<std::size_t>> best;
    for (int m = 0; m <= res.stable_m; ++m) {
        std::vector<std::vector<char>> sets;
        std::vector<std::size_t> which;
        for (std::size_t i = 0; i < res.pieces.size(); ++i) {
            const auto& piece = res.pieces[i];
            if (!piece.min_m || *piece.min_m > m) continue;
            std::vector<char> s(u, 0);
            for (auto unit : piece.units) s[unit] = 1;
            sets.push_back(std::move(s));
            which.push_back(i);
        }
        auto cover = section_detail::brute_force_cover(sets, u);
        if (cover) {
            res.k_by_m.push_back(cover->size());
            best = std::vector<std::size_t>{};
            for (auto c : *cover) best->push_back(which[c]);
        } else {
            res.k_by_m.push_back(std::nullopt);
            best.reset();
        }
    }
    if (!best) return res;
    res.k = best->size();

    auto target = std::make_shared<const FinitePoset>(p);
    for (auto i : *best) {
        const auto& piece = res.pieces[i];
        const auto& path = steps[i];
        auto sub = induced_subposet(x, piece.members);
        std::vector<long> local(x.size(), -1);
        for (std::size_t a = 0; a < sub.to_ambient.size(); ++a) local[sub.to_ambient[a]] = static_cast<long>(a);
        SectionWitness w;
        w.n = n;
        w.m = *piece.min_m;
        w.symmetric = true;
        w.source = std::make_shared<const FinitePoset>(sub.poset);
        w.target = target;
        w.group.elements = group.elements();
        for (const auto& t : tables) {
            std::vector<std::uint32_t> r(sub.to_ambient.size());
            for (std::size_t a = 0; a < r.size(); ++a) r[a] = static_cast<std::uint32_t>(local[t[sub.to_ambient[a]]]);
            w.group.tables.push_back(std::move(r));
        }
        for (int j = 0; j < n; ++j) {
            std::vector<Element> e(sub.to_ambient.size());
            for (std::size_t a = 0; a < e.size(); ++a) e[a] = power.tuples[sub.to_ambient[a]][j];
            w.endpoints.push_back(std::move(e));
        }
        const MultiFence fence(n, w.m);
        w.paths.assign(sub.to_ambient.size(), std::vector<Element>(fence.size()));
        for (Element a = 0; a < sub.to_ambient.size(); ++a) {
            w.paths[a][0] = path[0][0][a];
            for (int l = 1; l <= w.m; ++l)
                for (int j = 1; j <= n; ++j) w.paths[a][fence.point(l, j)] = path[l][j - 1][a];
        }
        res.cover.push_back(std::move(w));
    }
    return res;
}

/// TC^Sigma_n(P) through the homotopy route, i.e. cc_sigma at r = 0. Compare
/// with tc_sigma_sections.
inline ComplexityResult tc_sigma_finite(const FinitePoset& p, int n, ComplexityOptions opt = {}) {
    opt.n = n;
    opt.r = 0;
    return cc_sigma(p, opt);
}

} // namespace symtc
