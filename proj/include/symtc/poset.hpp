#pragma once

// Finite posets viewed as finite T0 spaces: opens are down-sets.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "symtc/complex.hpp"
#include "symtc/errors.hpp"
#include "symtc/relation.hpp"

namespace symtc {

using Element = std::uint32_t;

class FinitePoset {
public:
    FinitePoset() = default;

    /// Reflexive-transitive closure of `generators` (pairs a <= b).
    static FinitePoset from_relations(std::vector<std::string> elements,
                                      const std::vector<std::pair<std::string, std::string>>& generators) {
        FinitePoset p;
        p.set_labels(std::move(elements));
        Relation r(p.size());
        for (const auto& [a, b] : generators) {
            auto ia = p.find(a);
            auto ib = p.find(b);
            if (!ia) throw Error(Errc::UnknownElement, "relation references unknown element '" + a + "'");
            if (!ib) throw Error(Errc::UnknownElement, "relation references unknown element '" + b + "'");
            r.set(*ia, *ib);
        }
        r.close_reflexive_transitive();
        if (!r.is_antisymmetric()) throw Error(Errc::CycleDetected, "relations contain a cycle");
        p.leq_ = std::move(r);
        return p;
    }

    /// `leq` must already be a partial order.
    static FinitePoset from_order(std::vector<std::string> labels, Relation leq) {
        FinitePoset p;
        p.set_labels(std::move(labels));
        if (leq.size() != p.size()) throw Error(Errc::ValidationError, "order matrix has the wrong size");
        if (!leq.is_reflexive() || !leq.is_transitive())
            throw Error(Errc::ValidationError, "order is not reflexive and transitive");
        if (!leq.is_antisymmetric()) throw Error(Errc::CycleDetected, "order is not antisymmetric");
        p.leq_ = std::move(leq);
        return p;
    }

    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(Element e) const { return labels_.at(e); }

    std::optional<Element> find(const std::string& name) const {
        auto it = by_label_.find(name);
        if (it == by_label_.end()) return std::nullopt;
        return it->second;
    }

    Element require(const std::string& name) const {
        auto e = find(name);
        if (!e) throw Error(Errc::UnknownElement, "unknown element '" + name + "'");
        return *e;
    }

    const Relation& relation() const noexcept { return leq_; }
    bool leq(Element a, Element b) const { return leq_(a, b); }
    bool less(Element a, Element b) const { return a != b && leq_(a, b); }
    bool comparable(Element a, Element b) const { return leq_(a, b) || leq_(b, a); }

    /// Hasse diagram: pairs (a, b) with a < b and nothing strictly between.
    std::vector<std::pair<Element, Element>> covers() const {
        std::vector<std::pair<Element, Element>> out;
        for (Element a = 0; a < size(); ++a)
            for (Element b = 0; b < size(); ++b) {
                if (!less(a, b)) continue;
                bool direct = true;
                for (Element c = 0; c < size() && direct; ++c)
                    if (less(a, c) && less(c, b)) direct = false;
                if (direct) out.emplace_back(a, b);
            }
        return out;
    }

    std::vector<Element> maximal_elements() const {
        std::vector<Element> out;
        for (Element a = 0; a < size(); ++a) {
            bool top = true;
            for (Element b = 0; b < size() && top; ++b)
                if (less(a, b)) top = false;
            if (top) out.push_back(a);
        }
        return out;
    }

    bool connected() const {
        if (size() == 0) return true;
        std::vector<char> seen(size(), 0);
        std::vector<Element> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            Element a = stack.back();
            stack.pop_back();
            for (Element b = 0; b < size(); ++b)
                if (!seen[b] && comparable(a, b)) {
                    seen[b] = 1;
                    stack.push_back(b);
                }
        }
        return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
    }

    /// Every nonempty chain as an index-sorted element list, canonical order.
    std::vector<std::vector<Element>> chains() const {
        std::vector<std::vector<Element>> out;
        std::vector<Element> current;
        auto extend = [&](auto&& self, Element from) -> void {
            for (Element e = from; e < size(); ++e) {
                bool ok = true;
                for (Element c : current)
                    if (!comparable(c, e)) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                current.push_back(e);
                out.push_back(current);
                self(self, e + 1);
                current.pop_back();
            }
        };
        extend(extend, 0);
        std::sort(out.begin(), out.end(), canonical_less);
        return out;
    }

    /// Equality by labels and order, independent of element indexing.
    bool operator==(const FinitePoset& other) const {
        if (size() != other.size()) return false;
        std::vector<Element> to_other(size());
        for (Element e = 0; e < size(); ++e) {
            auto o = other.find(labels_[e]);
            if (!o) return false;
            to_other[e] = *o;
        }
        for (Element a = 0; a < size(); ++a)
            for (Element b = 0; b < size(); ++b)
                if (leq(a, b) != other.leq(to_other[a], to_other[b])) return false;
        return true;
    }

private:
    void set_labels(std::vector<std::string> labels) {
        labels_ = std::move(labels);
        by_label_.clear();
        for (Element e = 0; e < labels_.size(); ++e)
            if (!by_label_.emplace(labels_[e], e).second)
                throw Error(Errc::ValidationError, "duplicate element label '" + labels_[e] + "'");
    }

    std::vector<std::string> labels_;
    std::unordered_map<std::string, Element> by_label_;
    Relation leq_;
};

/// Open subset of a finite space, sorted by element index.
struct DownSet {
    std::vector<Element> members;
    bool operator==(const DownSet&) const = default;
};

inline DownSet principal_down_set(const FinitePoset& p, Element x) {
    if (x >= p.size()) throw Error(Errc::UnknownElement, "element index out of range");
    DownSet out;
    for (Element y = 0; y < p.size(); ++y)
        if (p.leq(y, x)) out.members.push_back(y);
    return out;
}

inline bool is_open(const FinitePoset& p, std::span<const Element> subset) {
    std::vector<char> in(p.size(), 0);
    for (Element e : subset) {
        if (e >= p.size()) throw Error(Errc::UnknownElement, "element index out of range");
        in[e] = 1;
    }
    for (Element x : subset)
        for (Element y = 0; y < p.size(); ++y)
            if (p.leq(y, x) && !in[y]) return false;
    return true;
}

inline DownSet down_closure(const FinitePoset& p, std::span<const Element> subset) {
    std::vector<char> in(p.size(), 0);
    for (Element x : subset)
        for (Element y = 0; y < p.size(); ++y)
            if (p.leq(y, x)) in[y] = 1;
    DownSet out;
    for (Element e = 0; e < p.size(); ++e)
        if (in[e]) out.members.push_back(e);
    return out;
}

struct InducedSubposet {
    FinitePoset poset;
    std::vector<Element> to_ambient;
};

/// Induced order on `members` (any subset); element order follows `p`.
inline InducedSubposet induced_subposet(const FinitePoset& p, std::vector<Element> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    std::vector<std::string> labels;
    Relation r(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
        labels.push_back(p.label(members[i]));
        for (std::size_t j = 0; j < members.size(); ++j)
            if (p.leq(members[i], members[j])) r.set(i, j);
    }
    return {FinitePoset::from_order(std::move(labels), std::move(r)), std::move(members)};
}

inline bool is_monotone(const FinitePoset& source, const FinitePoset& target, std::span<const Element> f) {
    if (f.size() != source.size()) throw Error(Errc::SourceMismatch, "map is not total on the source");
    for (Element v : f)
        if (v >= target.size()) throw Error(Errc::UnknownElement, "map leaves the target");
    for (Element a = 0; a < source.size(); ++a)
        for (Element b = 0; b < source.size(); ++b)
            if (source.leq(a, b) && !target.leq(f[a], f[b])) return false;
    return true;
}

/// Pointwise order f <= g.
inline bool maps_leq(const FinitePoset& target, std::span<const Element> f, std::span<const Element> g) {
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!target.leq(f[i], g[i])) return false;
    return true;
}

struct MonotoneMap {
    std::vector<Element> values;
    bool operator==(const MonotoneMap&) const = default;
};

/// Lexicographic stream of all order-preserving maps source -> target.
/// Restartable; throws SizeLimitExceeded once more than `limit` maps are produced.
class MonotoneMapEnumerator {
public:
    MonotoneMapEnumerator(const FinitePoset& source, const FinitePoset& target, std::size_t limit = 1000000)
        : source_(&source), target_(&target), limit_(limit) {
        for (Element a = 0; a < source.size(); ++a) {
            below_.emplace_back();
            above_.emplace_back();
            for (Element b = 0; b < a; ++b) {
                if (source.leq(b, a)) below_[a].push_back(b);
                if (source.leq(a, b)) above_[a].push_back(b);
            }
        }
        reset();
    }

    void reset() {
        values_.assign(source_->size(), 0);
        produced_ = 0;
        started_ = false;
        done_ = target_->size() == 0 && source_->size() > 0;
    }

    std::optional<MonotoneMap> next() {
        if (done_) return std::nullopt;
        const std::size_t n = source_->size();
        const std::size_t t = target_->size();
        if (n == 0) {
            done_ = true;
            return count(MonotoneMap{});
        }
        // Resume: on the first call start at position 0 value 0, later
        // advance the last coordinate.
        long pos;
        if (!started_) {
            started_ = true;
            pos = 0;
            values_[0] = 0;
        } else {
            pos = static_cast<long>(n) - 1;
            ++values_[pos];
        }
        while (pos >= 0) {
            if (values_[pos] >= t) {
                values_[pos] = 0;
                --pos;
                if (pos >= 0) ++values_[pos];
                continue;
            }
            if (!consistent(static_cast<Element>(pos))) {
                ++values_[pos];
                continue;
            }
            if (static_cast<std::size_t>(pos) + 1 == n) return count(MonotoneMap{values_});
            ++pos;
            values_[pos] = 0;
        }
        done_ = true;
        return std::nullopt;
    }

private:
    bool consistent(Element a) const {
        for (Element b : below_[a])
            if (!target_->leq(values_[b], values_[a])) return false;
        for (Element b : above_[a])
            if (!target_->leq(values_[a], values_[b])) return false;
        return true;
    }

    MonotoneMap count(MonotoneMap m) {
        if (++produced_ > limit_)
            throw Error(Errc::SizeLimitExceeded, "monotone map enumeration exceeded " + std::to_string(limit_));
        return m;
    }

    const FinitePoset* source_;
    const FinitePoset* target_;
    std::size_t limit_;
    std::vector<std::vector<Element>> below_, above_;
    std::vector<Element> values_;
    std::size_t produced_ = 0;
    bool started_ = false;
    bool done_ = false;
};

inline std::vector<MonotoneMap> enumerate_monotone_maps(const FinitePoset& source, const FinitePoset& target,
                                                        std::size_t limit = 1000000) {
    MonotoneMapEnumerator it(source, target, limit);
    std::vector<MonotoneMap> out;
    while (auto m = it.next()) out.push_back(std::move(*m));
    return out;
}

/// The mapping space target^source with the pointwise order.
inline FinitePoset mapping_poset(const FinitePoset& source, const FinitePoset& target,
                                 std::size_t limit = 1000000) {
    auto maps = enumerate_monotone_maps(source, target, limit);
    std::vector<std::string> labels;
    Relation r(maps.size());
    for (std::size_t i = 0; i < maps.size(); ++i) {
        std::vector<std::string> parts;
        for (Element v : maps[i].values) parts.push_back(target.label(v));
        labels.push_back(join_labels(parts, '[', ']'));
        for (std::size_t j = 0; j < maps.size(); ++j)
            if (maps_leq(target, maps[i].values, maps[j].values)) r.set(i, j);
    }
    return FinitePoset::from_order(std::move(labels), std::move(r));
}

/// Vertices are the elements, simplices the nonempty chains.
inline OrderedComplex order_complex(const FinitePoset& p, std::size_t max_simplices = Budget{}.max_simplices) {
    auto chains = p.chains();
    if (chains.size() > max_simplices) throw Error(Errc::BudgetExceeded, "order complex exceeds simplex cap");
    auto k = SimplicialComplex::from_index_facets(p.labels(), chains, max_simplices);
    return OrderedComplex(std::move(k), p.relation());
}

/// Simplices of k under face inclusion, in canonical simplex order.
inline FinitePoset face_poset(const SimplicialComplex& k) {
    const auto& simplices = k.simplices();
    std::vector<std::string> labels;
    labels.reserve(simplices.size());
    for (const auto& s : simplices) labels.push_back(k.simplex_label(s));
    Relation r(simplices.size());
    for (std::size_t i = 0; i < simplices.size(); ++i)
        for (std::size_t j = 0; j < simplices.size(); ++j)
            if (simplices[i].size() <= simplices[j].size() &&
                std::includes(simplices[j].begin(), simplices[j].end(), simplices[i].begin(), simplices[i].end()))
                r.set(i, j);
    return FinitePoset::from_order(std::move(labels), std::move(r));
}

struct PosetSubdivision {
    FinitePoset poset;
    std::vector<std::vector<Element>> chains; // element i of `poset` is chains[i]
};

/// Nonempty chains of p ordered by inclusion, built directly from chain
/// enumeration.
inline PosetSubdivision subdivide_poset(const FinitePoset& p, std::size_t max_elements = Budget{}.max_simplices) {
    auto chains = p.chains();
    if (chains.size() > max_elements) throw Error(Errc::BudgetExceeded, "subdivision exceeds element cap");
    std::vector<std::string> labels;
    labels.reserve(chains.size());
    for (const auto& c : chains) {
        std::vector<std::string> parts;
        for (Element e : c) parts.push_back(p.label(e));
        labels.push_back(join_labels(parts, '{', '}'));
    }
    Relation r(chains.size());
    for (std::size_t i = 0; i < chains.size(); ++i)
        for (std::size_t j = 0; j < chains.size(); ++j)
            if (std::includes(chains[j].begin(), chains[j].end(), chains[i].begin(), chains[i].end())) r.set(i, j);
    return {FinitePoset::from_order(std::move(labels), std::move(r)), std::move(chains)};
}

inline FinitePoset sd_poset(const FinitePoset& p) { return subdivide_poset(p).poset; }

/// Last element of a chain.
inline Element chain_max(const FinitePoset& p, const std::vector<Element>& chain) {
    Element best = chain.front();
    for (Element e : chain)
        if (p.leq(best, e)) best = e;
    return best;
}

/// The fence 0 <= 1 >= 2 <= ... of length m.
inline FinitePoset fence(int m) {
    if (m < 0) throw Error(Errc::BadArity, "fence length must be nonnegative");
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> gens;
    for (int i = 0; i <= m; ++i) labels.push_back(std::to_string(i));
    for (int i = 1; i <= m; ++i) {
        if (i % 2 == 1) gens.emplace_back(std::to_string(i - 1), std::to_string(i));
        else gens.emplace_back(std::to_string(i), std::to_string(i - 1));
    }
    return FinitePoset::from_relations(std::move(labels), gens);
}

/// n fences of length m glued at 0. Element 0 is the common point; level l
/// of branch j (1-based) is element 1 + (l-1)*n + (j-1), labelled "l_j".
class MultiFence {
public:
    MultiFence(int n, int m) : n_(n), m_(m) {
        if (n < 2) throw Error(Errc::BadArity, "multi-fence needs n >= 2");
        if (m < 0) throw Error(Errc::BadArity, "multi-fence needs m >= 0");
        std::vector<std::string> labels{"0"};
        for (int l = 1; l <= m; ++l)
            for (int j = 1; j <= n; ++j) labels.push_back(std::to_string(l) + "_" + std::to_string(j));
        std::vector<std::pair<std::string, std::string>> gens;
        for (int j = 1; j <= n; ++j)
            for (int l = 1; l <= m; ++l) {
                std::string prev = l == 1 ? "0" : labels[point(l - 1, j)];
                std::string cur = labels[point(l, j)];
                if (l % 2 == 1) gens.emplace_back(prev, cur);
                else gens.emplace_back(cur, prev);
            }
        poset_ = FinitePoset::from_relations(std::move(labels), gens);
    }

    int n() const noexcept { return n_; }
    int m() const noexcept { return m_; }
    /// True when the last relation of each branch is "<=" (m odd).
    bool ends_rising() const noexcept { return m_ % 2 == 1; }
    const FinitePoset& poset() const noexcept { return poset_; }
    std::size_t size() const noexcept { return poset_.size(); }

    Element point(int level, int branch) const {
        if (level == 0) return 0;
        return static_cast<Element>(1 + (level - 1) * n_ + (branch - 1));
    }
    int level(Element t) const { return t == 0 ? 0 : 1 + static_cast<int>(t - 1) / n_; }
    /// 1-based branch; 0 for the common point.
    int branch(Element t) const { return t == 0 ? 0 : 1 + static_cast<int>(t - 1) % n_; }

private:
    int n_;
    int m_;
    FinitePoset poset_;
};

struct TableCheck {
    bool ok = true;
    std::string violation;
};

/// Order preservation of a table H[x][t] on the product order of
/// source x J_{n,m}, with values in target.
inline TableCheck fence_map_check(const FinitePoset& source, const FinitePoset& target, const MultiFence& j,
                                  const std::vector<std::vector<Element>>& table) {
    if (table.size() != source.size()) return {false, "table has wrong number of rows"};
    for (const auto& row : table) {
        if (row.size() != j.size()) return {false, "table row has wrong length"};
        for (Element v : row)
            if (v >= target.size()) return {false, "table value outside target"};
    }
    const auto& jp = j.poset();
    for (Element x = 0; x < source.size(); ++x) {
        for (Element s = 0; s < jp.size(); ++s)
            for (Element t = 0; t < jp.size(); ++t)
                if (jp.less(s, t) && !target.leq(table[x][s], table[x][t]))
                    return {false, "order broken at (" + source.label(x) + ", " + jp.label(s) + ") <= (" +
                                       source.label(x) + ", " + jp.label(t) + ")"};
        for (Element y = 0; y < source.size(); ++y) {
            if (!source.less(x, y)) continue;
            for (Element t = 0; t < jp.size(); ++t)
                if (!target.leq(table[x][t], table[y][t]))
                    return {false, "order broken at (" + source.label(x) + ", " + jp.label(t) + ") <= (" +
                                       source.label(y) + ", " + jp.label(t) + ")"};
        }
    }
    return {};
}

} // namespace symtc
