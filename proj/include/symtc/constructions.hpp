#pragma once

// Barycentric subdivision, ordered powers, last-element maps and the towers
// sd^r(K^n), sd^r(P^n) with their projection families.

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "symtc/complex.hpp"
#include "symtc/errors.hpp"
#include "symtc/permutation.hpp"
#include "symtc/poset.hpp"
#include "symtc/symmetry.hpp"

namespace symtc {

/// Largest vertex count for which an explicit inclusion order is stored.
inline constexpr std::size_t kMaxOrderedVertices = 8192;

/// sd(K): vertex i is the simplex k.simplices()[i], simplices are flags.
inline SimplicialComplex barycentric_subdivide(const SimplicialComplex& k,
                                               std::size_t max_simplices = Budget{}.max_simplices) {
    std::vector<std::string> labels;
    labels.reserve(k.simplices().size());
    for (const auto& s : k.simplices()) labels.push_back(k.simplex_label(s));
    if (labels.size() > max_simplices) throw Error(Errc::BudgetExceeded, "subdivision exceeds simplex cap");
    std::vector<Simplex> flags;
    for (const auto& facet : k.facets()) {
        Simplex perm = facet;
        do {
            Simplex prefix, flag;
            for (Vertex v : perm) {
                prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
                flag.push_back(static_cast<Vertex>(*k.index_of(prefix)));
            }
            flags.push_back(normalized(std::move(flag)));
            if (flags.size() > max_simplices) throw Error(Errc::BudgetExceeded, "subdivision exceeds simplex cap");
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return SimplicialComplex::from_index_facets(std::move(labels), std::move(flags), max_simplices);
}

/// Inclusion order on the vertices of sd(K).
inline Relation inclusion_order(const SimplicialComplex& k) {
    const auto& s = k.simplices();
    if (s.size() > kMaxOrderedVertices) throw Error(Errc::BudgetExceeded, "too many vertices for an explicit order");
    Relation r(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j)
            if (s[i].size() <= s[j].size() && std::includes(s[j].begin(), s[j].end(), s[i].begin(), s[i].end()))
                r.set(i, j);
    return r;
}

inline OrderedComplex barycentric_subdivide(const OrderedComplex& k,
                                            std::size_t max_simplices = Budget{}.max_simplices) {
    auto sd = barycentric_subdivide(k.complex(), max_simplices);
    auto order = inclusion_order(k.complex());
    return OrderedComplex(std::move(sd), std::move(order));
}

/// The last-element map sd(K) -> K.
inline SimplicialMap iota(const OrderedComplex& k, std::size_t max_simplices = Budget{}.max_simplices) {
    auto sd = std::make_shared<const SimplicialComplex>(barycentric_subdivide(k.complex(), max_simplices));
    VertexMap f;
    f.reserve(k.complex().simplices().size());
    for (const auto& s : k.complex().simplices()) f.push_back(k.max_vertex(s));
    return {std::move(sd), std::make_shared<const SimplicialComplex>(k.complex()), std::move(f)};
}

/// For every simplex {c_0 < ... < c_q} of sd(K): f(sigma) is a face of c_q.
inline bool carrier_condition(const SimplicialComplex& k, std::span<const Vertex> f) {
    const auto sd = barycentric_subdivide(k);
    for (const auto& chain : sd.simplices()) {
        const Simplex* top = &k.simplices()[chain.front()];
        for (Vertex c : chain)
            if (k.simplices()[c].size() > top->size()) top = &k.simplices()[c];
        auto img = image(f, chain);
        if (!std::includes(top->begin(), top->end(), img.begin(), img.end())) return false;
    }
    return true;
}

struct ProductComplex {
    OrderedComplex result;
    std::vector<std::vector<Vertex>> tuples; // vertex -> coordinates in the factor
    std::vector<VertexMap> projections;      // p_j, j = 0..n-1
};

inline std::string tuple_label(const std::vector<std::string>& labels, const std::vector<Vertex>& t) {
    std::vector<std::string> parts;
    parts.reserve(t.size());
    for (Vertex v : t) parts.push_back(labels[v]);
    return join_labels(parts, '(', ')');
}

/// All n-tuples over {0..base-1} in lexicographic order.
inline std::vector<std::vector<Vertex>> all_tuples(std::size_t base, int n, std::size_t cap) {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> t(n, 0);
    if (base == 0) return out;
    while (true) {
        out.push_back(t);
        if (out.size() > cap) throw Error(Errc::BudgetExceeded, "product exceeds simplex cap");
        int i = n - 1;
        while (i >= 0 && t[i] + 1 == base) t[i--] = 0;
        if (i < 0) break;
        ++t[i];
    }
    return out;
}

/// K^n with the componentwise order: simplices are chains of tuples whose
/// coordinate projections (deduplicated) are simplices of K.
inline ProductComplex ordered_power(const OrderedComplex& k, int n,
                                    std::size_t max_simplices = Budget{}.max_simplices) {
    if (n < 1) throw Error(Errc::BadArity, "power exponent must be positive");
    const Relation& order = k.order();
    const auto& base = k.complex();
    auto tuples = all_tuples(base.vertex_count(), n, max_simplices);
    const std::size_t count = tuples.size();
    Relation product(count);
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = 0; b < count; ++b) {
            bool le = true;
            for (int j = 0; j < n && le; ++j) le = order(tuples[a][j], tuples[b][j]);
            if (le) product.set(a, b);
        }

    std::vector<Simplex> chains;
    std::vector<Vertex> current;
    auto projections_ok = [&]() {
        for (int j = 0; j < n; ++j) {
            Simplex s;
            for (Vertex t : current) s.push_back(tuples[t][j]);
            if (!base.contains(normalized(std::move(s)))) return false;
        }
        return true;
    };
    auto extend = [&](auto&& self) -> void {
        for (Vertex next = 0; next < count; ++next) {
            if (!current.empty() && (next == current.back() || !product(current.back(), next))) continue;
            current.push_back(next);
            if (projections_ok()) {
                chains.push_back(normalized(current));
                if (chains.size() > max_simplices) throw Error(Errc::BudgetExceeded, "product exceeds simplex cap");
                self(self);
            }
            current.pop_back();
        }
    };
    extend(extend);

    std::vector<std::string> labels;
    labels.reserve(count);
    for (const auto& t : tuples) labels.push_back(tuple_label(base.labels(), t));
    auto complex = SimplicialComplex::from_index_facets(std::move(labels), std::move(chains), max_simplices);
    std::vector<VertexMap> proj(n, VertexMap(count));
    for (std::size_t v = 0; v < count; ++v)
        for (int j = 0; j < n; ++j) proj[j][v] = tuples[v][j];
    return {OrderedComplex(std::move(complex), std::move(product)), std::move(tuples), std::move(proj)};
}

/// Index of the permuted tuple in a lexicographic tuple list.
inline std::vector<PointMap> tuple_action_tables(const SymmetricGroup& group,
                                                 const std::vector<std::vector<Vertex>>& tuples) {
    std::map<std::vector<Vertex>, Point> index;
    for (std::size_t i = 0; i < tuples.size(); ++i) index.emplace(tuples[i], static_cast<Point>(i));
    std::vector<PointMap> tables;
    for (const auto& g : group.elements()) {
        PointMap t(tuples.size());
        for (std::size_t i = 0; i < tuples.size(); ++i) t[i] = index.at(act_tuple(g, tuples[i]));
        tables.push_back(std::move(t));
    }
    return tables;
}

/// Action on the simplices of a complex induced by a vertex action; the
/// result acts on the vertices of its subdivision.
inline std::vector<PointMap> induced_tables(const SimplicialComplex& k, const std::vector<PointMap>& vertex_tables) {
    std::vector<PointMap> out;
    for (const auto& t : vertex_tables) {
        PointMap r(k.simplices().size());
        for (std::size_t i = 0; i < r.size(); ++i) {
            auto img = image(t, k.simplices()[i]);
            auto idx = k.index_of(img);
            if (!idx) throw Error(Errc::NotEquivariant, "action does not preserve simplices");
            r[i] = static_cast<Point>(*idx);
        }
        out.push_back(std::move(r));
    }
    return out;
}

/// sd^r(K^n) with the last-element maps between levels and pi_j on top.
struct ComplexTower {
    OrderedComplex base;
    int n = 0;
    int r = 0;
    SymmetricGroup group{1};
    ProductComplex power;
    std::vector<std::shared_ptr<const SimplicialComplex>> levels; // levels[0] = K^n
    std::vector<VertexMap> down;                                  // down[k]: level k+1 -> level k
    std::vector<Action> actions;                                  // per level
    std::vector<VertexMap> pi;                                    // pi[j]: level r -> K

    const SimplicialComplex& top() const { return *levels.back(); }
    const Action& top_action() const { return actions.back(); }
};

inline ComplexTower build_tower(const OrderedComplex& k, int n, int r, const Budget& budget = {}) {
    if (r < 0) throw Error(Errc::BadArity, "subdivision depth must be nonnegative");
    ComplexTower t{k, n, r, SymmetricGroup(n), ordered_power(k, n, budget.max_simplices), {}, {}, {}, {}};
    t.levels.push_back(std::make_shared<const SimplicialComplex>(t.power.result.complex()));
    t.actions.emplace_back(t.group, tuple_action_tables(t.group, t.power.tuples));
    for (int level = 1; level <= r; ++level) {
        const auto& below = *t.levels.back();
        auto sd = std::make_shared<const SimplicialComplex>(barycentric_subdivide(below, budget.max_simplices));
        VertexMap last(below.simplices().size());
        for (std::size_t i = 0; i < last.size(); ++i) {
            const auto& s = below.simplices()[i];
            if (level == 1) {
                last[i] = t.power.result.max_vertex(s);
            } else {
                // Vertices of a subdivision are simplices of the level below
                // it, ordered by inclusion, hence by size along a chain.
                const auto& under = t.levels[level - 2]->simplices();
                Vertex best = s.front();
                for (Vertex v : s)
                    if (under[v].size() > under[best].size()) best = v;
                last[i] = best;
            }
        }
        t.actions.emplace_back(t.group, induced_tables(below, t.actions.back().tables()));
        t.down.push_back(std::move(last));
        t.levels.push_back(std::move(sd));
    }
    for (int j = 0; j < n; ++j) {
        VertexMap f = t.power.projections[j];
        for (int level = 0; level < r; ++level) f = compose(t.down[level], f);
        t.pi.push_back(std::move(f));
    }
    return t;
}

/// pi_j (1-based j) as a simplicial map sd^r(K^n) -> K.
inline SimplicialMap projection_pi(const ComplexTower& t, int j) {
    if (j < 1 || j > t.n) throw Error(Errc::BadArity, "projection index out of range");
    return {t.levels.back(), std::make_shared<const SimplicialComplex>(t.base.complex()), t.pi[j - 1]};
}

/// Product poset P^n, tuples in lexicographic order.
struct ProductPoset {
    FinitePoset poset;
    std::vector<std::vector<Element>> tuples;
};

inline ProductPoset poset_power(const FinitePoset& p, int n, std::size_t cap = Budget{}.max_simplices) {
    if (n < 1) throw Error(Errc::BadArity, "power exponent must be positive");
    auto tuples = all_tuples(p.size(), n, cap);
    Relation r(tuples.size());
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < tuples.size(); ++a) {
        labels.push_back(tuple_label(p.labels(), tuples[a]));
        for (std::size_t b = 0; b < tuples.size(); ++b) {
            bool le = true;
            for (int j = 0; j < n && le; ++j) le = p.leq(tuples[a][j], tuples[b][j]);
            if (le) r.set(a, b);
        }
    }
    return {FinitePoset::from_order(std::move(labels), std::move(r)), std::move(tuples)};
}

/// sd^r(P^n) with the last-element maps tau and rho_j on top.
struct PosetTower {
    FinitePoset base;
    int n = 0;
    int r = 0;
    SymmetricGroup group{1};
    ProductPoset power;
    std::vector<FinitePoset> levels;                  // levels[0] = P^n
    std::vector<std::vector<std::vector<Element>>> chains; // chains[k]: element of level k+1 -> chain of level k
    std::vector<std::vector<Element>> down;           // down[k]: level k+1 -> level k
    std::vector<Action> actions;
    std::vector<std::vector<Element>> rho;            // rho[j]: level r -> P
    std::vector<Element> tau;                         // level r -> level 0

    const FinitePoset& top() const { return levels.back(); }
    const Action& top_action() const { return actions.back(); }
};

inline PosetTower poset_tower(const FinitePoset& p, int n, int r, const Budget& budget = {}) {
    if (r < 0) throw Error(Errc::BadArity, "subdivision depth must be nonnegative");
    PosetTower t{p, n, r, SymmetricGroup(n), poset_power(p, n, budget.max_simplices), {}, {}, {}, {}, {}, {}};
    t.levels.push_back(t.power.poset);
    t.actions.emplace_back(t.group, tuple_action_tables(t.group, t.power.tuples));
    for (int level = 1; level <= r; ++level) {
        const auto& below = t.levels.back();
        if (below.size() > kMaxOrderedVertices)
            throw Error(Errc::BudgetExceeded, "poset subdivision exceeds the element cap");
        auto sd = subdivide_poset(below, budget.max_simplices);
        std::map<std::vector<Element>, Point> index;
        for (std::size_t i = 0; i < sd.chains.size(); ++i) index.emplace(sd.chains[i], static_cast<Point>(i));
        std::vector<PointMap> tables;
        for (const auto& g : t.actions.back().tables()) {
            PointMap m(sd.chains.size());
            for (std::size_t i = 0; i < sd.chains.size(); ++i) {
                std::vector<Element> c;
                for (Element e : sd.chains[i]) c.push_back(g[e]);
                std::sort(c.begin(), c.end());
                m[i] = index.at(c);
            }
            tables.push_back(std::move(m));
        }
        std::vector<Element> last(sd.chains.size());
        for (std::size_t i = 0; i < last.size(); ++i) last[i] = chain_max(below, sd.chains[i]);
        t.actions.emplace_back(t.group, std::move(tables));
        t.down.push_back(std::move(last));
        t.chains.push_back(std::move(sd.chains));
        t.levels.push_back(std::move(sd.poset));
    }
    t.tau.resize(t.levels.back().size());
    for (Element x = 0; x < t.tau.size(); ++x) {
        Element y = x;
        for (int level = r - 1; level >= 0; --level) y = t.down[level][y];
        t.tau[x] = y;
    }
    for (int j = 0; j < n; ++j) {
        std::vector<Element> f(t.tau.size());
        for (Element x = 0; x < f.size(); ++x) f[x] = t.power.tuples[t.tau[x]][j];
        t.rho.push_back(std::move(f));
    }
    return t;
}

/// rho_j (1-based j): sd^r(P^n) -> P.
inline MonotoneMap projection_rho(const PosetTower& t, int j) {
    if (j < 1 || j > t.n) throw Error(Errc::BadArity, "projection index out of range");
    return {t.rho[j - 1]};
}

inline Point act(const ComplexTower& t, int level, const Permutation& g, Point x) {
    if (level < 0 || level > t.r) throw Error(Errc::LevelMismatch, "no such tower level");
    if (g.n() != t.n) throw Error(Errc::LevelMismatch, "permutation degree differs from the tower");
    if (x >= t.levels[level]->vertex_count()) throw Error(Errc::LevelMismatch, "vertex not on this level");
    return t.actions[level].apply(g, x);
}

inline Point act(const PosetTower& t, int level, const Permutation& g, Point x) {
    if (level < 0 || level > t.r) throw Error(Errc::LevelMismatch, "no such tower level");
    if (g.n() != t.n) throw Error(Errc::LevelMismatch, "permutation degree differs from the tower");
    if (x >= t.levels[level].size()) throw Error(Errc::LevelMismatch, "element not on this level");
    return t.actions[level].apply(g, x);
}

} // namespace symtc
