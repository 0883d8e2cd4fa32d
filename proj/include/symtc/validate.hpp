#pragma once

// Independent checker for certificates. Re-derives every claim from the
// certificate contents with complex and poset primitives only.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "symtc/certificate.hpp"
#include "symtc/complex.hpp"
#include "symtc/permutation.hpp"
#include "symtc/poset.hpp"

namespace symtc {

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> problems;

    void fail(std::string what) {
        ok = false;
        if (problems.size() < 20) problems.push_back(std::move(what));
    }
};

namespace check {

inline std::size_t factorial(int n) {
    std::size_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
    return f;
}

/// Common checks on the group tables: all of Sigma_n, bijective tables,
/// identity acts trivially, and g'.(g.x) = (g o g').x.
inline void group_tables(const GroupData& g, int n, std::size_t points, ValidationReport& rep) {
    if (g.elements.size() != factorial(n) || g.tables.size() != g.elements.size()) {
        rep.fail("group: expected " + std::to_string(factorial(n)) + " elements with tables");
        return;
    }
    std::set<Permutation> seen;
    for (const auto& p : g.elements) {
        if (p.n() != n) {
            rep.fail("group: permutation " + p.to_string() + " has the wrong degree");
            return;
        }
        seen.insert(p);
    }
    if (seen.size() != g.elements.size()) {
        rep.fail("group: repeated permutations");
        return;
    }
    for (std::size_t i = 0; i < g.tables.size(); ++i) {
        const auto& t = g.tables[i];
        if (t.size() != points) {
            rep.fail("group: table of " + g.elements[i].to_string() + " has the wrong size");
            return;
        }
        std::vector<char> hit(points, 0);
        for (auto v : t) {
            if (v >= points || hit[v]) {
                rep.fail("group: table of " + g.elements[i].to_string() + " is not a bijection");
                return;
            }
            hit[v] = 1;
        }
        if (g.elements[i].is_identity())
            for (std::size_t x = 0; x < points; ++x)
                if (t[x] != x) {
                    rep.fail("group: identity moves point " + std::to_string(x));
                    return;
                }
    }
    auto index_of = [&](const Permutation& p) {
        return static_cast<std::size_t>(std::find(g.elements.begin(), g.elements.end(), p) - g.elements.begin());
    };
    for (std::size_t a = 0; a < g.elements.size(); ++a)
        for (std::size_t b = 0; b < g.elements.size(); ++b) {
            std::size_t ab = index_of(compose(g.elements[a], g.elements[b]));
            for (std::size_t x = 0; x < points; ++x)
                if (g.tables[b][g.tables[a][x]] != g.tables[ab][x]) {
                    rep.fail("group: tables do not form the coordinate action at " + g.elements[a].to_string() +
                             ", " + g.elements[b].to_string());
                    return;
                }
        }
}

inline bool tuple_shape(const std::vector<std::vector<std::uint32_t>>& tuple, int n, std::size_t points,
                        std::size_t target_size, const std::string& what, ValidationReport& rep) {
    if (static_cast<int>(tuple.size()) != n) {
        rep.fail(what + ": expected " + std::to_string(n) + " maps");
        return false;
    }
    for (const auto& f : tuple) {
        if (f.size() != points) {
            rep.fail(what + ": map is not total on the source");
            return false;
        }
        for (auto v : f)
            if (v >= target_size) {
                rep.fail(what + ": value outside the target");
                return false;
            }
    }
    return true;
}

/// f_j(g.x) = f_{g(j)}(x) for every g, x, j.
inline void equivariant(const GroupData& g, const std::vector<std::vector<std::uint32_t>>& tuple,
                        const std::string& what, ValidationReport& rep) {
    for (std::size_t i = 0; i < g.elements.size(); ++i) {
        const auto& p = g.elements[i];
        for (std::size_t x = 0; x < g.tables[i].size(); ++x)
            for (int j = 0; j < p.n(); ++j)
                if (tuple[j][g.tables[i][x]] != tuple[p(j)][x]) {
                    rep.fail(what + ": not equivariant at g=" + p.to_string() + ", x=" + std::to_string(x) +
                             ", j=" + std::to_string(j + 1));
                    return;
                }
    }
}

inline bool is_simplex_union(const SimplicialComplex& target, const Simplex& a, const Simplex& b) {
    Simplex u = a;
    u.insert(u.end(), b.begin(), b.end());
    return target.contains(normalized(std::move(u)));
}

inline void complex_automorphisms(const SimplicialComplex& k, const GroupData& g, ValidationReport& rep) {
    for (std::size_t i = 0; i < g.tables.size(); ++i)
        for (const auto& f : k.facets()) {
            auto img = image(g.tables[i], f);
            if (img.size() != f.size() || !k.contains(img)) {
                rep.fail("group: " + g.elements[i].to_string() + " does not map simplex " + k.simplex_label(f) +
                         " to a simplex");
                return;
            }
        }
}

inline void poset_automorphisms(const FinitePoset& p, const GroupData& g, ValidationReport& rep) {
    for (std::size_t i = 0; i < g.tables.size(); ++i)
        for (Element a = 0; a < p.size(); ++a)
            for (Element b = 0; b < p.size(); ++b)
                if (p.leq(a, b) != p.leq(g.tables[i][a], g.tables[i][b])) {
                    rep.fail("group: " + g.elements[i].to_string() + " is not an order automorphism");
                    return;
                }
}

/// J_{n,m} point for level l (0..m) of branch j (1..n).
inline std::size_t fence_point(int n, int l, int j) {
    return l == 0 ? 0 : 1 + static_cast<std::size_t>(l - 1) * n + (j - 1);
}

/// The permuted fence point t_{g(j)} for t = l_j.
inline std::size_t permuted_point(const Permutation& g, int n, std::size_t t) {
    if (t == 0) return 0;
    int l = 1 + static_cast<int>((t - 1) / n);
    int j = static_cast<int>((t - 1) % n);
    return fence_point(n, l, g(j) + 1);
}

} // namespace check

inline ValidationReport validate(const ContiguityChain& c) {
    ValidationReport rep;
    if (!c.source || !c.target) {
        rep.fail("chain: missing source or target");
        return rep;
    }
    const auto& src = *c.source;
    const auto& tgt = *c.target;
    if (c.n < 1) rep.fail("chain: n must be positive");
    if (c.levels.empty()) rep.fail("chain: no levels");
    if (!rep.ok) return rep;
    if (!check::tuple_shape(c.endpoints, c.n, src.vertex_count(), tgt.vertex_count(), "endpoints", rep)) return rep;
    for (std::size_t l = 0; l < c.levels.size(); ++l)
        if (!check::tuple_shape(c.levels[l], c.n, src.vertex_count(), tgt.vertex_count(),
                                "level " + std::to_string(l), rep))
            return rep;

    for (std::size_t l = 0; l < c.levels.size(); ++l)
        for (int j = 0; j < c.n; ++j)
            for (const auto& f : src.facets())
                if (!tgt.contains(image(c.levels[l][j], f))) {
                    rep.fail("level " + std::to_string(l) + ", map " + std::to_string(j + 1) +
                             ": not simplicial on " + src.simplex_label(f));
                    break;
                }
    for (std::size_t l = 1; l < c.levels.size(); ++l)
        for (int j = 0; j < c.n; ++j)
            for (const auto& f : src.facets())
                if (!check::is_simplex_union(tgt, image(c.levels[l - 1][j], f), image(c.levels[l][j], f))) {
                    rep.fail("levels " + std::to_string(l - 1) + "," + std::to_string(l) + ", map " +
                             std::to_string(j + 1) + ": not 1-contiguous on " + src.simplex_label(f));
                    break;
                }
    if (c.levels.back() != c.endpoints) rep.fail("last level differs from the endpoints");
    for (int j = 1; j < c.n; ++j)
        if (c.levels.front()[j] != c.levels.front()[0]) {
            rep.fail("level 0 is not diagonal");
            break;
        }
    if (!c.symmetric) return rep;

    check::group_tables(c.group, c.n, src.vertex_count(), rep);
    if (!rep.ok) return rep;
    check::complex_automorphisms(src, c.group, rep);
    for (std::size_t i = 0; i < c.group.tables.size(); ++i)
        for (Vertex v = 0; v < src.vertex_count(); ++v)
            if (c.levels.front()[0][c.group.tables[i][v]] != c.levels.front()[0][v]) {
                rep.fail("level 0 map is not invariant under " + c.group.elements[i].to_string() + " at " +
                         src.label(v));
                i = c.group.tables.size() - 1;
                break;
            }
    for (std::size_t l = 0; l < c.levels.size(); ++l)
        check::equivariant(c.group, c.levels[l], "level " + std::to_string(l), rep);
    check::equivariant(c.group, c.endpoints, "endpoints", rep);
    return rep;
}

namespace check {

/// Shared by homotopies and sections: rows[x][t] over source x J_{n,m}.
inline void fence_rows(int n, int m, bool symmetric, const FinitePoset& src, const FinitePoset& tgt,
                       const GroupData& group, const std::vector<std::vector<Element>>& endpoints,
                       const std::vector<std::vector<Element>>& rows, const std::string& what,
                       ValidationReport& rep) {
    if (n < 2 || m < 0) {
        rep.fail(what + ": bad multi-fence parameters");
        return;
    }
    const std::size_t width = 1 + static_cast<std::size_t>(n) * m;
    if (rows.size() != src.size()) {
        rep.fail(what + ": expected one row per source point");
        return;
    }
    for (const auto& r : rows) {
        if (r.size() != width) {
            rep.fail(what + ": row length differs from |J_{n,m}|");
            return;
        }
        for (auto v : r)
            if (v >= tgt.size()) {
                rep.fail(what + ": value outside the target");
                return;
            }
    }
    if (!tuple_shape(endpoints, n, src.size(), tgt.size(), "endpoints", rep)) return;
    for (const auto& f : endpoints)
        if (!is_monotone(src, tgt, f)) {
            rep.fail("endpoints: map is not monotone");
            return;
        }

    MultiFence jf(n, m);
    auto check = fence_map_check(src, tgt, jf, rows);
    if (!check.ok) rep.fail(what + ": " + check.violation);

    for (Element x = 0; x < src.size(); ++x)
        for (int j = 1; j <= n; ++j)
            if (rows[x][fence_point(n, m, j)] != endpoints[j - 1][x]) {
                rep.fail(what + ": end of branch " + std::to_string(j) + " differs from map " + std::to_string(j) +
                         " at " + src.label(x));
                return;
            }
    if (!symmetric) return;
    group_tables(group, n, src.size(), rep);
    if (!rep.ok) return;
    poset_automorphisms(src, group, rep);
    equivariant(group, endpoints, "endpoints", rep);
    for (std::size_t i = 0; i < group.tables.size(); ++i)
        for (Element x = 0; x < src.size(); ++x)
            for (std::size_t t = 0; t < width; ++t)
                if (rows[group.tables[i][x]][t] != rows[x][permuted_point(group.elements[i], n, t)]) {
                    rep.fail(what + ": H(g.x, t_j) != H(x, t_g(j)) at g=" + group.elements[i].to_string() +
                             ", x=" + src.label(x) + ", t=" + jf.poset().label(static_cast<Element>(t)));
                    return;
                }
}

} // namespace check

inline ValidationReport validate(const CombinatorialHomotopy& h) {
    ValidationReport rep;
    if (!h.source || !h.target) {
        rep.fail("homotopy: missing source or target");
        return rep;
    }
    check::fence_rows(h.n, h.m, h.symmetric, *h.source, *h.target, h.group, h.endpoints, h.table, "homotopy", rep);
    return rep;
}

/// A section s of q_{n,m}: every s(x) is a monotone fence path, s is
/// monotone in x, the branch ends reproduce the endpoints, and in the
/// symmetric case s is a Sigma_n-map.
inline ValidationReport validate(const SectionWitness& s) {
    ValidationReport rep;
    if (!s.source || !s.target) {
        rep.fail("section: missing source or target");
        return rep;
    }
    check::fence_rows(s.n, s.m, s.symmetric, *s.source, *s.target, s.group, s.endpoints, s.paths, "section", rep);
    return rep;
}

} // namespace symtc
