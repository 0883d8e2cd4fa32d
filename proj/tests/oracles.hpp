#pragma once

// Brute-force reference computations for the tests. Nothing here calls the
// library's algorithms; inputs come in as plain vectors.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Set = std::vector<int>;

/// All nonempty subsets of the given facets.
inline std::set<Set> close_down(const std::vector<Set>& facets) {
    std::set<Set> out;
    for (const auto& f : facets) {
        const int k = static_cast<int>(f.size());
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            Set s;
            for (int i = 0; i < k; ++i)
                if (mask >> i & 1) s.push_back(f[i]);
            out.insert(s);
        }
    }
    return out;
}

inline bool subset(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

/// Number of nonempty chains of simplices under inclusion, i.e. the number of
/// simplices of the barycentric subdivision.
inline std::size_t chain_count(const std::set<Set>& simplices) {
    std::vector<Set> s(simplices.begin(), simplices.end());
    std::sort(s.begin(), s.end(), [](const Set& a, const Set& b) { return a.size() < b.size() || (a.size() == b.size() && a < b); });
    std::vector<std::size_t> ending(s.size(), 1);
    std::size_t total = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (s[j].size() < s[i].size() && subset(s[j], s[i])) ending[i] += ending[j];
        total += ending[i];
    }
    return total;
}

/// Maximal chains of simplices (flags ending in a facet).
inline std::size_t maximal_chain_count(const std::vector<Set>& facets) {
    std::size_t total = 0;
    for (const auto& f : facets) {
        std::size_t k = 1;
        for (std::size_t i = 2; i <= f.size(); ++i) k *= i;
        total += k;
    }
    return total;
}

/// Strict order as adjacency matrix, reflexive-transitive closure of pairs.
struct Order {
    int n = 0;
    std::vector<std::vector<char>> leq;

    Order(int size, const std::vector<std::pair<int, int>>& rel) : n(size), leq(size, std::vector<char>(size, 0)) {
        for (int i = 0; i < n; ++i) leq[i][i] = 1;
        for (auto [a, b] : rel) leq[a][b] = 1;
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (leq[i][k] && leq[k][j]) leq[i][j] = 1;
    }

    bool comparable(int a, int b) const { return leq[a][b] || leq[b][a]; }
};

/// Nonempty chains of an order, by subset enumeration (n <= 20).
inline std::size_t chains_by_subsets(const Order& p) {
    std::size_t count = 0;
    for (unsigned mask = 1; mask < (1u << p.n); ++mask) {
        bool ok = true;
        for (int a = 0; a < p.n && ok; ++a)
            for (int b = a + 1; b < p.n && ok; ++b)
                if ((mask >> a & 1) && (mask >> b & 1) && !p.comparable(a, b)) ok = false;
        count += ok;
    }
    return count;
}

/// Every order-preserving map q -> p, by backtracking in index order.
inline std::vector<std::vector<int>> monotone_maps(const Order& q, const Order& p) {
    std::vector<std::vector<int>> out;
    std::vector<int> f(q.n, 0);
    std::function<void(int)> go = [&](int x) {
        if (x == q.n) {
            out.push_back(f);
            return;
        }
        for (int v = 0; v < p.n; ++v) {
            bool ok = true;
            for (int y = 0; y < x && ok; ++y) {
                if (q.leq[y][x] && !p.leq[f[y]][v]) ok = false;
                if (q.leq[x][y] && !p.leq[v][f[y]]) ok = false;
            }
            if (!ok) continue;
            f[x] = v;
            go(x + 1);
        }
    };
    go(0);
    return out;
}

/// Connected posets on 1..max_size points, one per isomorphism class, each
/// as (size, strict relation pairs).
inline std::vector<std::pair<int, std::vector<std::pair<int, int>>>> connected_posets(int max_size) {
    std::vector<std::pair<int, std::vector<std::pair<int, int>>>> out;
    for (int n = 1; n <= max_size; ++n) {
        std::set<std::uint32_t> seen;
        const int pairs = n * n;
        for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
            auto rel = [&](int a, int b) { return (mask >> (a * n + b)) & 1; };
            bool ok = true;
            for (int a = 0; a < n && ok; ++a) {
                if (rel(a, a)) ok = false;
                for (int b = 0; b < n && ok; ++b) {
                    if (rel(a, b) && rel(b, a)) ok = false;
                    for (int c = 0; c < n && ok; ++c)
                        if (rel(a, b) && rel(b, c) && !rel(a, c)) ok = false;
                }
            }
            if (!ok) continue;
            std::vector<int> comp(n);
            std::iota(comp.begin(), comp.end(), 0);
            for (int round = 0; round < n; ++round)
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        if (rel(a, b) || rel(b, a)) comp[a] = comp[b] = std::min(comp[a], comp[b]);
            if (std::any_of(comp.begin(), comp.end(), [](int c) { return c != 0; })) continue;
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::uint32_t canon = UINT32_MAX;
            do {
                std::uint32_t c = 0;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        if (rel(a, b)) c |= 1u << (perm[a] * n + perm[b]);
                canon = std::min(canon, c);
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (!seen.insert(canon).second) continue;
            std::vector<std::pair<int, int>> r;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (canon >> (a * n + b) & 1) r.emplace_back(a, b);
            out.emplace_back(n, r);
        }
    }
    return out;
}

/// Orbit count by Burnside: average number of fixed points.
inline std::size_t burnside(const std::vector<std::vector<std::uint32_t>>& tables) {
    std::size_t fixed = 0;
    for (const auto& t : tables)
        for (std::size_t x = 0; x < t.size(); ++x) fixed += t[x] == x;
    return fixed / tables.size();
}

/// Smallest number of sets (bitmasks) whose union is `all`, by trying every
/// combination of increasing size. 0 when impossible.
inline int min_cover(const std::vector<std::uint32_t>& sets, std::uint32_t all) {
    const int n = static_cast<int>(sets.size());
    for (int k = 1; k <= n; ++k) {
        std::vector<int> pick(k);
        std::function<bool(int, int, std::uint32_t)> go = [&](int from, int depth, std::uint32_t acc) {
            if (depth == k) return acc == all;
            for (int i = from; i < n; ++i)
                if (go(i + 1, depth + 1, acc | sets[i])) return true;
            return false;
        };
        if (go(0, 0, 0)) return k;
    }
    return 0;
}

/// Maps between point sets with a connectivity relation, sorted, with a
/// component id per map.
struct MapGraph {
    std::vector<std::vector<int>> maps;
    std::vector<int> component;

    int find(const std::vector<int>& f) const {
        auto it = std::lower_bound(maps.begin(), maps.end(), f);
        return it != maps.end() && *it == f ? static_cast<int>(it - maps.begin()) : -1;
    }

    bool connected(const std::vector<int>& f, const std::vector<int>& g) const {
        return component.at(find(f)) == component.at(find(g));
    }

    /// Some map in the component of `start` with f(swap[x]) == f(x).
    bool reaches_fixed(const std::vector<int>& start, const std::vector<int>& swap) const {
        const int c = component.at(find(start));
        for (std::size_t i = 0; i < maps.size(); ++i) {
            if (component[i] != c) continue;
            bool fixed = true;
            for (std::size_t x = 0; x < swap.size() && fixed; ++x) fixed = maps[i][swap[x]] == maps[i][x];
            if (fixed) return true;
        }
        return false;
    }
};

/// Vertex maps sending every source facet into a target simplex, joined
/// when they differ at one vertex and f(s) u g(s) is a simplex for every
/// facet s. Those steps generate contiguity. With `start`, only its
/// component is labelled.
inline MapGraph contiguity_components(int src_vertices, const std::vector<Set>& src_facets, int tgt_vertices,
                                      const std::vector<Set>& tgt_facets, const std::vector<int>* start = nullptr) {
    std::vector<char> simplex(1u << tgt_vertices, 0);
    for (const auto& s : close_down(tgt_facets)) {
        std::uint32_t m = 0;
        for (int v : s) m |= 1u << v;
        simplex[m] = 1;
    }
    auto fits = [&](const std::vector<int>& f, const std::vector<int>& g) {
        for (const auto& facet : src_facets) {
            std::uint32_t m = 0;
            for (int v : facet) m |= (1u << f[v]) | (1u << g[v]);
            if (!simplex[m]) return false;
        }
        return true;
    };
    std::size_t total = 1;
    for (int i = 0; i < src_vertices; ++i) total *= tgt_vertices;
    auto code = [&](const std::vector<int>& f) {
        std::size_t c = 0;
        for (int i = src_vertices - 1; i >= 0; --i) c = c * tgt_vertices + f[i];
        return c;
    };
    MapGraph g;
    std::vector<int> index(total, -1);
    std::vector<std::vector<const Set*>> closing(src_vertices);
    for (const auto& facet : src_facets) closing[*std::max_element(facet.begin(), facet.end())].push_back(&facet);
    std::vector<int> f(src_vertices, 0);
    std::function<void(int)> go = [&](int x) {
        if (x == src_vertices) {
            g.maps.push_back(f);
            return;
        }
        for (int w = 0; w < tgt_vertices; ++w) {
            f[x] = w;
            bool ok = true;
            for (const Set* facet : closing[x]) {
                std::uint32_t m = 0;
                for (int v : *facet) m |= 1u << f[v];
                if (!simplex[m]) {
                    ok = false;
                    break;
                }
            }
            if (ok) go(x + 1);
        }
    };
    go(0);
    std::sort(g.maps.begin(), g.maps.end());
    for (std::size_t i = 0; i < g.maps.size(); ++i) index[code(g.maps[i])] = static_cast<int>(i);
    g.component.assign(g.maps.size(), -1);
    int next = 0;
    for (std::size_t s = 0; s < g.maps.size(); ++s) {
        if (g.component[s] >= 0) continue;
        if (start && g.maps[s] != *start) continue;
        std::vector<std::size_t> stack{s};
        g.component[s] = next;
        while (!stack.empty()) {
            auto cur = g.maps[stack.back()];
            stack.pop_back();
            for (int v = 0; v < src_vertices; ++v)
                for (int w = 0; w < tgt_vertices; ++w) {
                    auto nb = cur;
                    nb[v] = w;
                    int idx = index[code(nb)];
                    if (idx >= 0 && g.component[idx] < 0 && fits(cur, nb)) {
                        g.component[idx] = next;
                        stack.push_back(idx);
                    }
                }
        }
        ++next;
    }
    return g;
}

/// Monotone maps q -> p joined when pointwise comparable.
inline MapGraph comparability_components(const Order& q, const Order& p) {
    MapGraph g;
    g.maps = monotone_maps(q, p);
    std::sort(g.maps.begin(), g.maps.end());
    auto below = [&](const std::vector<int>& f, const std::vector<int>& h) {
        for (std::size_t x = 0; x < f.size(); ++x)
            if (!p.leq[f[x]][h[x]]) return false;
        return true;
    };
    std::vector<int> parent(g.maps.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
    for (std::size_t a = 0; a < g.maps.size(); ++a)
        for (std::size_t b = a + 1; b < g.maps.size(); ++b)
            if (root(a) != root(b) && (below(g.maps[a], g.maps[b]) || below(g.maps[b], g.maps[a])))
                parent[root(a)] = root(b);
    g.component.resize(g.maps.size());
    for (std::size_t a = 0; a < g.maps.size(); ++a) g.component[a] = root(a);
    return g;
}

} // namespace oracle
