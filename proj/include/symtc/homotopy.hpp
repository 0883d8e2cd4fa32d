#pragma once

// Contiguity and combinatorial homotopy decisions with certificates, and the
// translators between the simplicial and finite-space pictures.
//
// Equivariant tuples are searched through their first component, which is a
// map invariant under the constraint subgroup G and therefore a function of
// the G-orbit. Nodes are value vectors indexed by G-orbit; an edge changes
// the value on one orbit. Any two 1-contiguous (resp. comparable) invariant
// maps are joined by such single-orbit moves, so exploring a component to
// the end is a complete decision.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "symtc/certificate.hpp"
#include "symtc/complex.hpp"
#include "symtc/errors.hpp"
#include "symtc/permutation.hpp"
#include "symtc/poset.hpp"
#include "symtc/symmetry.hpp"

namespace symtc {

enum class Verdict { Yes, No, Unknown };
enum class SearchMode { Exact, Bounded };

inline const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

struct SearchStats {
    std::size_t nodes = 0;
    bool exhausted = false; // the whole reachable component was explored
    bool capped = false;    // stopped at the node cap
};

/// True iff phi(sigma) u psi(sigma) is a simplex for every simplex sigma.
inline bool one_contiguous(const SimplicialComplex& source, const SimplicialComplex& target,
                           std::span<const Vertex> phi, std::span<const Vertex> psi) {
    if (phi.size() != source.vertex_count() || psi.size() != source.vertex_count())
        throw Error(Errc::SourceMismatch, "maps do not share the source");
    for (const auto& facet : source.facets()) {
        Simplex u;
        for (Vertex v : facet) {
            u.push_back(phi[v]);
            u.push_back(psi[v]);
        }
        if (!target.contains(normalized(std::move(u)))) return false;
    }
    return true;
}

inline GroupData group_data(const Action& action) {
    return {action.group().elements(), action.tables()};
}

namespace detail {

using Node = std::vector<Point>;

struct NodeHash {
    std::size_t operator()(const Node& n) const noexcept { return boost::hash_range(n.begin(), n.end()); }
};

/// Points grouped into blocks (G-orbits, or singletons).
struct Blocks {
    std::vector<std::size_t> block_of;
    std::vector<std::vector<Point>> blocks;

    static Blocks from_ids(const std::vector<std::size_t>& ids) {
        Blocks b;
        b.block_of = ids;
        std::size_t count = 0;
        for (auto i : ids) count = std::max(count, i + 1);
        b.blocks.resize(count);
        for (Point x = 0; x < ids.size(); ++x) b.blocks[ids[x]].push_back(x);
        return b;
    }

    static Blocks singletons(std::size_t points) {
        std::vector<std::size_t> ids(points);
        for (std::size_t i = 0; i < points; ++i) ids[i] = i;
        return from_ids(ids);
    }

    Node node_of(const PointMap& f) const {
        Node n(blocks.size());
        for (std::size_t b = 0; b < blocks.size(); ++b) n[b] = f[blocks[b].front()];
        return n;
    }

    PointMap map_of(const Node& n) const {
        PointMap f(block_of.size());
        for (Point x = 0; x < f.size(); ++x) f[x] = n[block_of[x]];
        return f;
    }
};

using MoveSink = std::function<void(std::size_t block, Point value)>;
using MoveGen = std::function<void(const Node&, const MoveSink&)>;

enum class Stop { Found, Exhausted, Capped };

/// Best-first exploration of one component. `score` orders the frontier
/// (lower first, ties by depth then discovery); `visit` returns true to stop.
class GraphSearch {
public:
    Stop run(const Node& start, const MoveGen& moves, const std::function<std::size_t(const Node&)>& score,
             const std::function<bool(std::size_t)>& visit, std::size_t max_nodes) {
        using Key = std::tuple<std::size_t, int, std::size_t>;
        std::priority_queue<Key, std::vector<Key>, std::greater<>> open;
        auto add = [&](Node n, std::size_t parent, int depth) -> bool {
            if (index_.count(n)) return true;
            if (nodes_.size() >= max_nodes) return false;
            std::size_t id = nodes_.size();
            index_.emplace(n, id);
            open.emplace(score(n), depth, id);
            nodes_.push_back(std::move(n));
            parent_.push_back(parent);
            depth_.push_back(depth);
            return true;
        };
        add(start, SIZE_MAX, 0);
        while (!open.empty()) {
            auto [s, d, id] = open.top();
            open.pop();
            if (visit(id)) return Stop::Found;
            bool full = false;
            Node current = nodes_[id];
            moves(current, [&](std::size_t block, Point value) {
                if (full) return;
                Node next = current;
                next[block] = value;
                if (!add(std::move(next), id, d + 1)) full = true;
            });
            if (full) return Stop::Capped;
        }
        return Stop::Exhausted;
    }

    const Node& node(std::size_t id) const { return nodes_[id]; }
    std::size_t size() const { return nodes_.size(); }
    std::optional<std::size_t> find(const Node& n) const {
        auto it = index_.find(n);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// Nodes from the start to `id`.
    std::vector<Node> path_to(std::size_t id) const {
        std::vector<Node> out;
        for (std::size_t cur = id; cur != SIZE_MAX; cur = parent_[cur]) out.push_back(nodes_[cur]);
        std::reverse(out.begin(), out.end());
        return out;
    }

private:
    std::vector<Node> nodes_;
    std::vector<std::size_t> parent_;
    std::vector<int> depth_;
    std::unordered_map<Node, std::size_t, NodeHash> index_;
};

/// Moves for maps between complexes: reassign a block keeping every touched
/// facet image plus the new value a simplex.
inline MoveGen simplicial_moves(const SimplicialComplex& source, const SimplicialComplex& target,
                                const Blocks& blocks) {
    std::vector<std::vector<std::size_t>> touching(blocks.blocks.size());
    const auto& facets = source.facets();
    for (std::size_t f = 0; f < facets.size(); ++f) {
        std::set<std::size_t> seen;
        for (Vertex v : facets[f]) seen.insert(blocks.block_of[v]);
        for (auto b : seen) touching[b].push_back(f);
    }
    return [&source, &target, &blocks, touching](const Node& node, const MoveSink& sink) {
        const auto& facets = source.facets();
        std::vector<Simplex> images(facets.size());
        for (std::size_t f = 0; f < facets.size(); ++f) {
            Simplex s;
            for (Vertex v : facets[f]) s.push_back(node[blocks.block_of[v]]);
            images[f] = normalized(std::move(s));
        }
        for (std::size_t b = 0; b < blocks.blocks.size(); ++b)
            for (Vertex value = 0; value < target.vertex_count(); ++value) {
                if (value == node[b]) continue;
                bool ok = true;
                for (std::size_t f : touching[b]) {
                    Simplex s = images[f];
                    s.insert(std::lower_bound(s.begin(), s.end(), value), value);
                    if (!target.contains(normalized(std::move(s)))) {
                        ok = false;
                        break;
                    }
                }
                if (ok) sink(b, value);
            }
    };
}

/// Moves for monotone maps: change a block (an antichain) to a comparable
/// value while staying monotone across the covers that touch it.
inline MoveGen poset_moves(const FinitePoset& source, const FinitePoset& target, const Blocks& blocks) {
    std::vector<std::vector<Point>> below(blocks.blocks.size()), above(blocks.blocks.size());
    for (auto [a, b] : source.covers()) {
        below[blocks.block_of[b]].push_back(a);
        above[blocks.block_of[a]].push_back(b);
    }
    for (std::size_t b = 0; b < blocks.blocks.size(); ++b) {
        const auto& members = blocks.blocks[b];
        for (Point x : members)
            for (Point y : members)
                if (x != y && source.leq(x, y))
                    throw Error(Errc::ValidationError, "orbit of a group action is not an antichain");
    }
    return [&target, &blocks, below, above](const Node& node, const MoveSink& sink) {
        for (std::size_t b = 0; b < blocks.blocks.size(); ++b) {
            const Point current = node[b];
            for (Element value = 0; value < target.size(); ++value) {
                if (value == current || !target.comparable(value, current)) continue;
                bool ok = true;
                for (Point y : below[b])
                    if (!target.leq(node[blocks.block_of[y]], value)) {
                        ok = false;
                        break;
                    }
                for (Point y : above[b]) {
                    if (!ok) break;
                    if (!target.leq(value, node[blocks.block_of[y]])) ok = false;
                }
                if (ok) sink(b, value);
            }
        }
    };
}

struct SymmetricSetup {
    Blocks blocks;                       // G-orbits
    std::vector<std::size_t> sigma_of;   // block -> Sigma_n-orbit id
    std::size_t sigma_count = 0;
};

inline SymmetricSetup symmetric_setup(const Action& action) {
    SymmetricSetup s;
    s.blocks = Blocks::from_ids(orbit_ids(action, constraint_indices(action.group())));
    auto all = orbit_ids(action, all_indices(action.group()));
    s.sigma_of.resize(s.blocks.blocks.size());
    for (std::size_t b = 0; b < s.blocks.blocks.size(); ++b) {
        s.sigma_of[b] = all[s.blocks.blocks[b].front()];
        s.sigma_count = std::max(s.sigma_count, s.sigma_of[b] + 1);
    }
    return s;
}

/// Number of Sigma_n-orbits on which the node is not constant.
inline std::size_t non_invariance(const SymmetricSetup& s, const Node& node) {
    std::vector<long> value(s.sigma_count, -1);
    std::vector<char> bad(s.sigma_count, 0);
    for (std::size_t b = 0; b < node.size(); ++b) {
        auto c = s.sigma_of[b];
        if (value[c] < 0) value[c] = node[b];
        else if (value[c] != static_cast<long>(node[b])) bad[c] = 1;
    }
    return static_cast<std::size_t>(std::count(bad.begin(), bad.end(), 1));
}

struct PathOutcome {
    Verdict verdict = Verdict::Unknown;
    std::vector<PointMap> path; // first-component maps, start to goal
    SearchStats stats;
};

inline PathOutcome symmetric_path(const SymmetricSetup& setup, const MoveGen& moves, const PointMap& start,
                                  SearchMode mode, const Budget& budget) {
    GraphSearch search;
    std::optional<std::size_t> goal;
    auto stop = search.run(
        setup.blocks.node_of(start), moves, [&](const Node& n) { return non_invariance(setup, n); },
        [&](std::size_t id) {
            if (non_invariance(setup, search.node(id)) == 0) {
                goal = id;
                return true;
            }
            return false;
        },
        budget.max_nodes);
    PathOutcome out;
    out.stats.nodes = search.size();
    if (stop == Stop::Found) {
        out.verdict = Verdict::Yes;
        for (const auto& n : search.path_to(*goal)) out.path.push_back(setup.blocks.map_of(n));
        return out;
    }
    if (stop == Stop::Exhausted) {
        out.stats.exhausted = true;
        out.verdict = Verdict::No;
        return out;
    }
    out.stats.capped = true;
    if (mode == SearchMode::Exact)
        throw Error(Errc::BudgetExceeded, "search exceeded " + std::to_string(budget.max_nodes) + " nodes");
    return out;
}

struct PlainOutcome {
    Verdict verdict = Verdict::Unknown;
    std::vector<std::vector<PointMap>> paths; // paths[j]: from f_1 to f_j
    SearchStats stats;
};

/// Best-first from f_1 towards each f_j in turn, scored by the number of
/// blocks still differing from f_j.
inline PlainOutcome plain_paths(const Blocks& blocks, const MoveGen& moves, const std::vector<PointMap>& tuple,
                                SearchMode mode, const Budget& budget) {
    PlainOutcome out;
    const Node start = blocks.node_of(tuple.front());
    out.paths.push_back({tuple.front()});
    for (std::size_t j = 1; j < tuple.size(); ++j) {
        const Node wanted = blocks.node_of(tuple[j]);
        GraphSearch search;
        std::optional<std::size_t> goal;
        auto stop = search.run(
            start, moves,
            [&](const Node& n) {
                std::size_t d = 0;
                for (std::size_t b = 0; b < n.size(); ++b) d += n[b] != wanted[b];
                return d;
            },
            [&](std::size_t id) {
                if (search.node(id) != wanted) return false;
                goal = id;
                return true;
            },
            budget.max_nodes);
        out.stats.nodes += search.size();
        if (stop == Stop::Exhausted) {
            out.stats.exhausted = true;
            out.verdict = Verdict::No;
            out.paths.clear();
            return out;
        }
        if (stop == Stop::Capped) {
            out.stats.capped = true;
            out.paths.clear();
            if (mode == SearchMode::Exact)
                throw Error(Errc::BudgetExceeded, "search exceeded " + std::to_string(budget.max_nodes) + " nodes");
            return out;
        }
        std::vector<PointMap> p;
        for (const auto& n : search.path_to(*goal)) p.push_back(blocks.map_of(n));
        out.paths.push_back(std::move(p));
    }
    out.verdict = Verdict::Yes;
    return out;
}

/// Keeps the first map, then repeatedly jumps to the farthest later map
/// still 1-contiguous with the last kept one.
inline std::vector<PointMap> compress_chain(const SimplicialComplex& source, const SimplicialComplex& target,
                                            const std::vector<PointMap>& maps) {
    std::vector<PointMap> out{maps.front()};
    std::size_t i = 0;
    while (i + 1 < maps.size()) {
        std::size_t j = maps.size() - 1;
        while (j > i + 1 && !one_contiguous(source, target, maps[i], maps[j])) --j;
        out.push_back(maps[j]);
        i = j;
    }
    return out;
}

/// Rewrites a path of pairwise comparable maps as a fence
/// S_0 <= S_1 >= S_2 <= ..., repeating S_0 when the path starts downward.
inline std::vector<PointMap> fence_form(const FinitePoset& target, const std::vector<PointMap>& maps) {
    enum Dir { Up, Down };
    std::vector<PointMap> out{maps.front()};
    std::vector<Dir> dirs;
    for (std::size_t i = 1; i < maps.size(); ++i) {
        const auto& q = maps[i];
        if (q == out.back()) continue;
        Dir d;
        if (maps_leq(target, out.back(), q)) d = Up;
        else if (maps_leq(target, q, out.back())) d = Down;
        else throw Error(Errc::ValidationError, "consecutive maps are not comparable");
        if (!dirs.empty() && dirs.back() == d) {
            out.back() = q;
            continue;
        }
        out.push_back(q);
        dirs.push_back(d);
    }
    if (!dirs.empty() && dirs.front() == Down) out.insert(out.begin(), out.front());
    return out;
}

} // namespace detail

struct ContiguityOutcome {
    Verdict verdict = Verdict::Unknown;
    std::optional<ContiguityChain> chain;
    SearchStats stats;
};

struct HomotopyOutcome {
    Verdict verdict = Verdict::Unknown;
    std::optional<CombinatorialHomotopy> homotopy;
    SearchStats stats;
};

/// Is the equivariant tuple symmetrically contiguous to a diagonal tuple of
/// one Sigma_n-invariant map?
inline ContiguityOutcome sym_contiguous(std::shared_ptr<const SimplicialComplex> source,
                                        std::shared_ptr<const SimplicialComplex> target, const Action& action,
                                        const std::vector<VertexMap>& tuple, SearchMode mode = SearchMode::Exact,
                                        const Budget& budget = {}) {
    auto check = check_equivariant_tuple(action, tuple);
    if (!check.ok) throw Error(Errc::NotEquivariant, check.describe());
    for (const auto& f : tuple) {
        auto m = validate_simplicial_map(*source, *target, f);
        if (!m.ok) throw Error(Errc::ValidationError, "tuple component is not simplicial");
    }
    auto setup = detail::symmetric_setup(action);
    auto moves = detail::simplicial_moves(*source, *target, setup.blocks);
    auto found = detail::symmetric_path(setup, moves, tuple.front(), mode, budget);
    ContiguityOutcome out{found.verdict, std::nullopt, found.stats};
    if (found.verdict != Verdict::Yes) return out;
    std::reverse(found.path.begin(), found.path.end());
    auto levels = detail::compress_chain(*source, *target, found.path);
    ContiguityChain chain{static_cast<int>(tuple.size()), true, source, target, group_data(action), tuple, {}};
    for (const auto& f : levels) chain.levels.push_back(expand_map(action, f));
    out.chain = std::move(chain);
    return out;
}

/// Do the maps of the tuple lie in one contiguity class?
inline ContiguityOutcome plain_contiguous(std::shared_ptr<const SimplicialComplex> source,
                                          std::shared_ptr<const SimplicialComplex> target,
                                          const std::vector<VertexMap>& tuple, SearchMode mode = SearchMode::Exact,
                                          const Budget& budget = {}) {
    for (const auto& f : tuple) {
        auto m = validate_simplicial_map(*source, *target, f);
        if (!m.ok) throw Error(Errc::ValidationError, "tuple component is not simplicial");
    }
    auto blocks = detail::Blocks::singletons(source->vertex_count());
    auto moves = detail::simplicial_moves(*source, *target, blocks);
    auto found = detail::plain_paths(blocks, moves, tuple, mode, budget);
    ContiguityOutcome out{found.verdict, std::nullopt, found.stats};
    if (found.verdict != Verdict::Yes) return out;
    std::vector<std::vector<PointMap>> branches;
    std::size_t length = 0;
    for (const auto& p : found.paths) {
        branches.push_back(detail::compress_chain(*source, *target, p));
        length = std::max(length, branches.back().size());
    }
    ContiguityChain chain{static_cast<int>(tuple.size()), false, source, target, {}, tuple, {}};
    for (std::size_t l = 0; l < length; ++l) {
        std::vector<VertexMap> level;
        for (const auto& b : branches) level.push_back(b[std::min(l, b.size() - 1)]);
        chain.levels.push_back(std::move(level));
    }
    out.chain = std::move(chain);
    return out;
}

/// Table over J_{n,m}: H(x, 0) = branches[.][0](x), H(x, l_j) = branches[j][l](x).
inline std::vector<std::vector<Element>> fence_table(const MultiFence& j,
                                                     const std::vector<std::vector<PointMap>>& branches) {
    const std::size_t points = branches.front().front().size();
    std::vector<std::vector<Element>> table(points, std::vector<Element>(j.size()));
    for (Point x = 0; x < points; ++x) {
        table[x][0] = branches.front().front()[x];
        for (int l = 1; l <= j.m(); ++l)
            for (int b = 1; b <= j.n(); ++b) table[x][j.point(l, b)] = branches[b - 1][l][x];
    }
    return table;
}

/// Is the equivariant tuple of monotone maps symmetrically homotopic to a
/// diagonal tuple of one Sigma_n-invariant map?
inline HomotopyOutcome sym_comb_homotopic(std::shared_ptr<const FinitePoset> source,
                                          std::shared_ptr<const FinitePoset> target, const Action& action,
                                          const std::vector<std::vector<Element>>& tuple,
                                          SearchMode mode = SearchMode::Exact, const Budget& budget = {}) {
    auto check = check_equivariant_tuple(action, tuple);
    if (!check.ok) throw Error(Errc::NotEquivariant, check.describe());
    for (const auto& f : tuple)
        if (!is_monotone(*source, *target, f)) throw Error(Errc::NotMonotone, "tuple component is not monotone");
    auto setup = detail::symmetric_setup(action);
    auto moves = detail::poset_moves(*source, *target, setup.blocks);
    auto found = detail::symmetric_path(setup, moves, tuple.front(), mode, budget);
    HomotopyOutcome out{found.verdict, std::nullopt, found.stats};
    if (found.verdict != Verdict::Yes) return out;
    std::reverse(found.path.begin(), found.path.end());
    auto fence_maps = detail::fence_form(*target, found.path);
    const int n = static_cast<int>(tuple.size());
    const int m = static_cast<int>(fence_maps.size()) - 1;
    std::vector<std::vector<PointMap>> branches(n);
    for (const auto& f : fence_maps) {
        auto expanded = expand_map(action, f);
        for (int j = 0; j < n; ++j) branches[j].push_back(std::move(expanded[j]));
    }
    MultiFence jf(n, m);
    out.homotopy = CombinatorialHomotopy{n, m, true, source, target, group_data(action), tuple,
                                         fence_table(jf, branches)};
    return out;
}

/// Are the monotone maps of the tuple in one component of the comparability
/// graph?
inline HomotopyOutcome plain_comb_homotopic(std::shared_ptr<const FinitePoset> source,
                                            std::shared_ptr<const FinitePoset> target,
                                            const std::vector<std::vector<Element>>& tuple,
                                            SearchMode mode = SearchMode::Exact, const Budget& budget = {}) {
    if (tuple.size() < 2) throw Error(Errc::BadArity, "homotopy needs at least two maps");
    for (const auto& f : tuple)
        if (!is_monotone(*source, *target, f)) throw Error(Errc::NotMonotone, "tuple component is not monotone");
    auto blocks = detail::Blocks::singletons(source->size());
    auto moves = detail::poset_moves(*source, *target, blocks);
    auto found = detail::plain_paths(blocks, moves, tuple, mode, budget);
    HomotopyOutcome out{found.verdict, std::nullopt, found.stats};
    if (found.verdict != Verdict::Yes) return out;
    std::vector<std::vector<PointMap>> branches;
    std::size_t length = 0;
    for (const auto& p : found.paths) {
        branches.push_back(detail::fence_form(*target, p));
        length = std::max(length, branches.back().size());
    }
    for (auto& b : branches) b.resize(length, b.back());
    const int n = static_cast<int>(tuple.size());
    MultiFence jf(n, static_cast<int>(length) - 1);
    out.homotopy = CombinatorialHomotopy{n, jf.m(), false, source, target, {}, tuple, fence_table(jf, branches)};
    return out;
}

inline SectionWitness section_from_homotopy(const CombinatorialHomotopy& h) {
    if (h.n < 2 || h.m < 0) throw Error(Errc::InvalidTable, "bad multi-fence parameters");
    const std::size_t width = 1 + static_cast<std::size_t>(h.n) * h.m;
    if (h.table.size() != h.source->size()) throw Error(Errc::InvalidTable, "one row per source point expected");
    for (const auto& row : h.table)
        if (row.size() != width) throw Error(Errc::InvalidTable, "row length differs from |J_{n,m}|");
    return {h.n, h.m, h.symmetric, h.source, h.target, h.group, h.endpoints, h.table};
}

inline CombinatorialHomotopy homotopy_from_section(const SectionWitness& s) {
    if (s.n < 2 || s.m < 0) throw Error(Errc::InvalidTable, "bad multi-fence parameters");
    const std::size_t width = 1 + static_cast<std::size_t>(s.n) * s.m;
    if (s.paths.size() != s.source->size()) throw Error(Errc::InvalidTable, "one path per source point expected");
    for (const auto& p : s.paths)
        if (p.size() != width) throw Error(Errc::InvalidTable, "path length differs from |J_{n,m}|");
    return {s.n, s.m, s.symmetric, s.source, s.target, s.group, s.endpoints, s.paths};
}

/// Interpolates every fence step of a homotopy between maps of posets by
/// moving the extremal points of the disagreement sets, giving a chain of
/// 1-contiguous maps between the order complexes.
inline ContiguityChain homotopy_to_contiguity(const CombinatorialHomotopy& h) {
    const auto& src = *h.source;
    const auto& tgt = *h.target;
    MultiFence jf(h.n, h.m);
    auto level_maps = [&](int l) {
        std::vector<PointMap> maps(h.n, PointMap(src.size()));
        for (int j = 0; j < h.n; ++j)
            for (Element x = 0; x < src.size(); ++x) maps[j][x] = h.table.at(x).at(jf.point(l, j + 1));
        return maps;
    };
    std::vector<std::vector<PointMap>> levels{level_maps(0)};
    for (int l = 1; l <= h.m; ++l) {
        const bool rising = l % 2 == 1;
        auto goal = level_maps(l);
        auto current = levels.back();
        while (current != goal) {
            for (int j = 0; j < h.n; ++j) {
                std::vector<Element> diff;
                for (Element x = 0; x < src.size(); ++x)
                    if (current[j][x] != goal[j][x]) diff.push_back(x);
                std::vector<Element> extremal;
                for (Element x : diff) {
                    bool ext = true;
                    for (Element y : diff)
                        if (rising ? src.less(x, y) : src.less(y, x)) {
                            ext = false;
                            break;
                        }
                    if (ext) extremal.push_back(x);
                }
                for (Element x : extremal) current[j][x] = goal[j][x];
                if (!is_monotone(src, tgt, current[j]))
                    throw Error(Errc::NotMonotone, "interpolation left the monotone maps");
            }
            levels.push_back(current);
        }
    }
    auto source = std::make_shared<const SimplicialComplex>(order_complex(src).complex());
    auto target = std::make_shared<const SimplicialComplex>(order_complex(tgt).complex());
    ContiguityChain c{h.n, h.symmetric, source, target, h.group, h.endpoints, {}};
    for (auto& lv : levels) c.levels.push_back(std::move(lv));
    return c;
}

/// Face-poset homotopy over J_{n,2c}: even levels are the chain's maps on
/// simplices, odd levels the unions of neighbouring levels.
inline CombinatorialHomotopy contiguity_to_homotopy(const ContiguityChain& c) {
    const auto& src = *c.source;
    const auto& tgt = *c.target;
    if (c.levels.empty()) throw Error(Errc::InvalidChain, "chain has no levels");
    const int steps = c.length();
    auto simplex_index = [&](const Simplex& s) -> Element {
        auto idx = tgt.index_of(s);
        if (!idx) throw Error(Errc::InvalidChain, "image is not a simplex of the target");
        return static_cast<Element>(*idx);
    };
    MultiFence jf(c.n, 2 * steps);
    const auto& simplices = src.simplices();
    std::vector<std::vector<Element>> table(simplices.size(), std::vector<Element>(jf.size()));
    for (std::size_t s = 0; s < simplices.size(); ++s) {
        table[s][0] = simplex_index(image(c.levels[0][0], simplices[s]));
        for (int l = 1; l <= steps; ++l)
            for (int j = 0; j < c.n; ++j) {
                auto before = image(c.levels[l - 1][j], simplices[s]);
                auto after = image(c.levels[l][j], simplices[s]);
                Simplex u = before;
                u.insert(u.end(), after.begin(), after.end());
                table[s][jf.point(2 * l - 1, j + 1)] = simplex_index(normalized(std::move(u)));
                table[s][jf.point(2 * l, j + 1)] = simplex_index(after);
            }
    }
    GroupData group;
    group.elements = c.group.elements;
    for (const auto& t : c.group.tables) {
        std::vector<std::uint32_t> r(simplices.size());
        for (std::size_t s = 0; s < simplices.size(); ++s) {
            auto idx = src.index_of(image(t, simplices[s]));
            if (!idx) throw Error(Errc::InvalidChain, "group table does not preserve simplices");
            r[s] = static_cast<std::uint32_t>(*idx);
        }
        group.tables.push_back(std::move(r));
    }
    std::vector<std::vector<Element>> endpoints;
    for (const auto& f : c.endpoints) {
        std::vector<Element> e(simplices.size());
        for (std::size_t s = 0; s < simplices.size(); ++s) e[s] = simplex_index(image(f, simplices[s]));
        endpoints.push_back(std::move(e));
    }
    auto source = std::make_shared<const FinitePoset>(face_poset(src));
    auto target = std::make_shared<const FinitePoset>(face_poset(tgt));
    return {c.n, 2 * steps, c.symmetric, source, target, std::move(group), std::move(endpoints), std::move(table)};
}

} // namespace symtc
