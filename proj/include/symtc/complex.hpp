#pragma once

// Finite (ordered) simplicial complexes and simplicial maps.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "symtc/errors.hpp"
#include "symtc/relation.hpp"

namespace symtc {

using Vertex = std::uint32_t;
/// Vertex indices in ascending order, no duplicates.
using Simplex = std::vector<Vertex>;
using VertexMap = std::vector<Vertex>;

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept { return boost::hash_range(s.begin(), s.end()); }
};

/// Canonical order: by cardinality, then lexicographically by vertex index.
inline bool canonical_less(const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

inline Simplex normalized(Simplex s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline std::string join_labels(const std::vector<std::string>& parts, char open, char close) {
    std::string out(1, open);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += parts[i];
    }
    out += close;
    return out;
}

class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Builds the downward closure of `facets` plus every declared vertex.
    static SimplicialComplex from_facets(std::vector<std::string> vertices,
                                         const std::vector<std::vector<std::string>>& facets,
                                         std::size_t max_simplices = Budget{}.max_simplices) {
        SimplicialComplex k;
        k.set_labels(std::move(vertices));
        std::vector<Simplex> index_facets;
        index_facets.reserve(facets.size());
        for (const auto& facet : facets) {
            if (facet.empty()) throw Error(Errc::EmptyFacet, "facet with no vertices");
            Simplex s;
            for (const auto& name : facet) {
                auto v = k.find(name);
                if (!v) throw Error(Errc::UnknownVertex, "facet references undeclared vertex '" + name + "'");
                s.push_back(*v);
            }
            index_facets.push_back(normalized(std::move(s)));
        }
        k.close(std::move(index_facets), max_simplices);
        return k;
    }

    static SimplicialComplex from_index_facets(std::vector<std::string> labels, std::vector<Simplex> facets,
                                               std::size_t max_simplices = Budget{}.max_simplices) {
        SimplicialComplex k;
        k.set_labels(std::move(labels));
        for (auto& f : facets) {
            if (f.empty()) throw Error(Errc::EmptyFacet, "facet with no vertices");
            f = normalized(std::move(f));
            if (f.back() >= k.labels_.size()) throw Error(Errc::UnknownVertex, "facet vertex index out of range");
        }
        k.close(std::move(facets), max_simplices);
        return k;
    }

    std::size_t vertex_count() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(Vertex v) const { return labels_.at(v); }

    std::optional<Vertex> find(const std::string& name) const {
        auto it = by_label_.find(name);
        if (it == by_label_.end()) return std::nullopt;
        return it->second;
    }

    const std::vector<Simplex>& simplices() const noexcept { return simplices_; }
    const std::vector<Simplex>& facets() const noexcept { return facets_; }

    std::optional<std::size_t> index_of(const Simplex& s) const {
        auto it = index_.find(s);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// `s` must already be normalized.
    bool contains(const Simplex& s) const { return !s.empty() && index_.count(s) != 0; }

    int dimension() const {
        int d = -1;
        for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
        return d;
    }

    std::string simplex_label(const Simplex& s) const {
        std::vector<std::string> parts;
        parts.reserve(s.size());
        for (Vertex v : s) parts.push_back(labels_.at(v));
        return join_labels(parts, '{', '}');
    }

    /// f-vector: entry d counts d-simplices.
    std::vector<std::size_t> f_vector() const {
        std::vector<std::size_t> counts(static_cast<std::size_t>(dimension() + 1), 0);
        for (const auto& s : simplices_) ++counts[s.size() - 1];
        return counts;
    }

    /// Facets of the complex that contain vertex v.
    std::vector<std::size_t> facets_containing(Vertex v) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < facets_.size(); ++i)
            if (std::binary_search(facets_[i].begin(), facets_[i].end(), v)) out.push_back(i);
        return out;
    }

    /// Equality up to vertex indexing: same labels, same simplices by label.
    bool operator==(const SimplicialComplex& other) const {
        if (labels_.size() != other.labels_.size() || simplices_.size() != other.simplices_.size()) return false;
        std::vector<Vertex> to_other(labels_.size());
        for (Vertex v = 0; v < labels_.size(); ++v) {
            auto w = other.find(labels_[v]);
            if (!w) return false;
            to_other[v] = *w;
        }
        for (const auto& s : simplices_) {
            Simplex t;
            for (Vertex v : s) t.push_back(to_other[v]);
            if (!other.contains(normalized(std::move(t)))) return false;
        }
        return true;
    }

private:
    void set_labels(std::vector<std::string> labels) {
        labels_ = std::move(labels);
        by_label_.clear();
        for (Vertex v = 0; v < labels_.size(); ++v) {
            if (!by_label_.emplace(labels_[v], v).second)
                throw Error(Errc::ValidationError, "duplicate vertex label '" + labels_[v] + "'");
        }
    }

    void close(std::vector<Simplex> facets, std::size_t max_simplices) {
        std::unordered_set<Simplex, SimplexHash> all;
        auto add = [&](Simplex s) {
            if (all.insert(std::move(s)).second && all.size() > max_simplices)
                throw Error(Errc::BudgetExceeded, "simplex count exceeds cap of " + std::to_string(max_simplices));
        };
        for (Vertex v = 0; v < labels_.size(); ++v) add(Simplex{v});
        for (const auto& f : facets) {
            if (f.size() > 24) throw Error(Errc::BudgetExceeded, "facet dimension too large to close");
            const std::uint32_t subsets = 1u << f.size();
            for (std::uint32_t mask = 1; mask < subsets; ++mask) {
                Simplex s;
                for (std::size_t i = 0; i < f.size(); ++i)
                    if (mask & (1u << i)) s.push_back(f[i]);
                add(std::move(s));
            }
        }
        simplices_.assign(all.begin(), all.end());
        std::sort(simplices_.begin(), simplices_.end(), canonical_less);
        index_.clear();
        index_.reserve(simplices_.size());
        for (std::size_t i = 0; i < simplices_.size(); ++i) index_.emplace(simplices_[i], i);

        std::vector<char> is_face(simplices_.size(), 0);
        for (const auto& s : simplices_) {
            if (s.size() < 2) continue;
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                Simplex t;
                t.reserve(s.size() - 1);
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != drop) t.push_back(s[i]);
                is_face[index_.at(t)] = 1;
            }
        }
        facets_.clear();
        for (std::size_t i = 0; i < simplices_.size(); ++i)
            if (!is_face[i]) facets_.push_back(simplices_[i]);
        std::sort(facets_.begin(), facets_.end());
    }

    std::vector<std::string> labels_;
    std::unordered_map<std::string, Vertex> by_label_;
    std::vector<Simplex> simplices_;
    std::vector<Simplex> facets_;
    std::unordered_map<Simplex, std::size_t, SimplexHash> index_;
};

inline Simplex image(std::span<const Vertex> f, const Simplex& s) {
    Simplex out;
    out.reserve(s.size());
    for (Vertex v : s) out.push_back(f[v]);
    return normalized(std::move(out));
}

struct MapCheck {
    bool ok = true;
    std::optional<Simplex> offending; // a source simplex whose image is not a simplex
};

/// True iff every simplex of `source` maps onto a simplex of `target`.
/// Degenerate images are allowed.
inline MapCheck validate_simplicial_map(const SimplicialComplex& source, const SimplicialComplex& target,
                                        std::span<const Vertex> f) {
    if (f.size() != source.vertex_count())
        throw Error(Errc::SourceMismatch, "vertex map is not total on the source");
    for (Vertex w : f)
        if (w >= target.vertex_count()) throw Error(Errc::UnknownVertex, "vertex map leaves the target");
    for (const auto& facet : source.facets())
        if (!target.contains(image(f, facet))) return {false, facet};
    return {};
}

struct SimplicialMap {
    std::shared_ptr<const SimplicialComplex> source;
    std::shared_ptr<const SimplicialComplex> target;
    VertexMap vertex_map;

    MapCheck validate() const { return validate_simplicial_map(*source, *target, vertex_map); }
};

/// g after f.
inline VertexMap compose(std::span<const Vertex> f, std::span<const Vertex> g) {
    VertexMap out(f.size());
    for (std::size_t v = 0; v < f.size(); ++v) out[v] = g[f[v]];
    return out;
}

inline SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g) {
    return {f.source, g.target, compose(f.vertex_map, g.vertex_map)};
}

/// Label-based: every simplex of `sub` is a simplex of `ambient`.
inline bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& ambient) {
    std::vector<Vertex> to_ambient(sub.vertex_count());
    for (Vertex v = 0; v < sub.vertex_count(); ++v) {
        auto w = ambient.find(sub.label(v));
        if (!w) return false;
        to_ambient[v] = *w;
    }
    for (const auto& facet : sub.facets())
        if (!ambient.contains(image(to_ambient, facet))) return false;
    return true;
}

inline SimplicialMap restrict_map(const SimplicialMap& f, std::shared_ptr<const SimplicialComplex> sub) {
    if (!is_subcomplex(*sub, *f.source)) throw Error(Errc::NotASubcomplex, "restriction target is not a subcomplex");
    VertexMap out(sub->vertex_count());
    for (Vertex v = 0; v < sub->vertex_count(); ++v) out[v] = f.vertex_map[*f.source->find(sub->label(v))];
    return {std::move(sub), f.target, std::move(out)};
}

inline long euler_characteristic(const SimplicialComplex& k) {
    long chi = 0;
    for (const auto& s : k.simplices()) chi += (s.size() % 2 == 1) ? 1 : -1;
    return chi;
}

/// The subcomplex generated by the given facets of `ambient`, with the vertex
/// embedding back into `ambient`. Vertex order follows `ambient`.
struct InducedSubcomplex {
    SimplicialComplex complex;
    std::vector<Vertex> to_ambient;
};

inline InducedSubcomplex induced_subcomplex(const SimplicialComplex& ambient, const std::vector<Simplex>& facets) {
    std::vector<Vertex> used;
    for (const auto& f : facets) used.insert(used.end(), f.begin(), f.end());
    used = normalized(std::move(used));
    std::vector<Vertex> from_ambient(ambient.vertex_count(), 0);
    std::vector<std::string> labels;
    labels.reserve(used.size());
    for (std::size_t i = 0; i < used.size(); ++i) {
        from_ambient[used[i]] = static_cast<Vertex>(i);
        labels.push_back(ambient.label(used[i]));
    }
    std::vector<Simplex> local;
    local.reserve(facets.size());
    for (const auto& f : facets) local.push_back(image(from_ambient, f));
    return {SimplicialComplex::from_index_facets(std::move(labels), std::move(local)), std::move(used)};
}

/// A simplicial complex with a vertex partial order that is total on every
/// simplex. The order may be absent until the caller totalizes.
class OrderedComplex {
public:
    OrderedComplex() = default;
    explicit OrderedComplex(SimplicialComplex complex) : complex_(std::move(complex)) {}

    OrderedComplex(SimplicialComplex complex, Relation order) : complex_(std::move(complex)) {
        if (order.size() != complex_.vertex_count())
            throw Error(Errc::ValidationError, "vertex order has the wrong size");
        if (!order.is_reflexive() || !order.is_antisymmetric() || !order.is_transitive())
            throw Error(Errc::ValidationError, "vertex order is not a partial order");
        for (const auto& facet : complex_.facets())
            for (std::size_t i = 0; i < facet.size(); ++i)
                for (std::size_t j = i + 1; j < facet.size(); ++j)
                    if (!order(facet[i], facet[j]) && !order(facet[j], facet[i]))
                        throw Error(Errc::ValidationError, "vertex order is not total on simplex " +
                                                               complex_.simplex_label(facet));
        order_ = std::move(order);
    }

    const SimplicialComplex& complex() const noexcept { return complex_; }
    bool has_order() const noexcept { return order_.has_value(); }

    const Relation& order() const {
        if (!order_) throw Error(Errc::UnorderedInput, "complex carries no vertex order");
        return *order_;
    }

    bool leq(Vertex a, Vertex b) const { return order()(a, b); }

    Vertex max_vertex(const Simplex& s) const {
        const Relation& r = order();
        Vertex best = s.front();
        for (Vertex v : s)
            if (r(best, v)) best = v;
        return best;
    }

    bool operator==(const OrderedComplex& other) const {
        if (!(complex_ == other.complex_) || has_order() != other.has_order()) return false;
        if (!has_order()) return true;
        for (Vertex a = 0; a < complex_.vertex_count(); ++a)
            for (Vertex b = 0; b < complex_.vertex_count(); ++b) {
                Vertex oa = *other.complex_.find(complex_.label(a));
                Vertex ob = *other.complex_.find(complex_.label(b));
                if ((*order_)(a, b) != (*other.order_)(oa, ob)) return false;
            }
        return true;
    }

private:
    SimplicialComplex complex_;
    std::optional<Relation> order_;
};

/// Total order by label (lexicographic), used when no order was declared.
inline OrderedComplex totalize(const SimplicialComplex& k) {
    std::vector<Vertex> by_label(k.vertex_count());
    for (Vertex v = 0; v < k.vertex_count(); ++v) by_label[v] = v;
    std::sort(by_label.begin(), by_label.end(), [&](Vertex a, Vertex b) { return k.label(a) < k.label(b); });
    std::vector<std::size_t> rank(k.vertex_count());
    for (std::size_t i = 0; i < by_label.size(); ++i) rank[by_label[i]] = i;
    Relation order(k.vertex_count());
    for (Vertex a = 0; a < k.vertex_count(); ++a)
        for (Vertex b = 0; b < k.vertex_count(); ++b)
            if (rank[a] <= rank[b]) order.set(a, b);
    return OrderedComplex(k, std::move(order));
}

} // namespace symtc
