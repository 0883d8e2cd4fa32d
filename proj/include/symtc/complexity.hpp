#pragma once

// SC^r_n, SC^{Sigma,r}_n, CC^r_n and CC^{Sigma,r}_n by covers of good pieces.
//
// A piece is described by a set of units: Sigma_n-orbits of facets of
// sd^r(K^n) (resp. orbits of maximal elements of sd^r(P^n)), or single
// facets (maximal elements) in the plain variants. Any cover can be shrunk
// to one of this form without losing goodness, so covering the units is
// the whole problem.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "symtc/constructions.hpp"
#include "symtc/cover.hpp"
#include "symtc/errors.hpp"
#include "symtc/homotopy.hpp"

namespace symtc {

enum class Invariant { ScSigma, ScPlain, CcSigma, CcPlain };

inline const char* to_string(Invariant i) {
    switch (i) {
    case Invariant::ScSigma: return "sc-sigma";
    case Invariant::ScPlain: return "sc-plain";
    case Invariant::CcSigma: return "cc-sigma";
    case Invariant::CcPlain: return "cc-plain";
    }
    return "";
}

inline bool is_symmetric(Invariant i) { return i == Invariant::ScSigma || i == Invariant::CcSigma; }
inline bool is_simplicial(Invariant i) { return i == Invariant::ScSigma || i == Invariant::ScPlain; }

struct ComplexityOptions {
    int n = 2;
    int r = 0;
    SearchMode mode = SearchMode::Exact;
    Budget budget;
    /// Up to this many units every good piece is enumerated...
    std::size_t max_exact_units = 20;
    /// ...unless there are more good pieces than this.
    std::size_t max_good_pieces = 100000;
};

struct GoodPiece {
    std::vector<std::size_t> units;
    std::vector<std::string> members; // facet or maximal-element labels
    std::optional<ContiguityChain> chain;
    std::optional<CombinatorialHomotopy> homotopy;
};

struct ExhaustionRecord {
    Verdict whole_space = Verdict::Unknown;
    std::size_t whole_space_nodes = 0;
    bool whole_space_exhausted = false;
    std::size_t units = 0;
    std::size_t pieces_tested = 0;
    std::size_t good_pieces = 0;
    std::size_t maximal_good_pieces = 0;
    std::size_t cover_nodes = 0;
    bool all_pieces_enumerated = false;
    std::optional<std::size_t> bad_unit; // a unit admitting no good piece
};

struct ComplexityResult {
    Invariant invariant = Invariant::ScSigma;
    int n = 2;
    int r = 0;
    std::optional<int> m;
    std::size_t lower = 1;
    std::optional<std::size_t> upper; // best cover found
    bool infinite = false;            // no cover exists
    std::vector<GoodPiece> cover;
    ExhaustionRecord record;
    std::size_t search_nodes = 0;

    bool exact() const { return infinite || (upper && *upper == lower); }
    std::string kind() const {
        if (exact()) return "exact";
        return upper ? "upper_bound" : "lower_bound";
    }
};

namespace detail {

inline std::string unit_key(const UnitSet& s) {
    std::string out;
    boost::to_string(s, out);
    return out;
}

/// Goodness tests on unions of units of one tower level.
class PieceOracle {
public:
    virtual ~PieceOracle() = default;
    virtual std::size_t units() const = 0;
    /// Runs the decision; fills the certificate when `certify` is set.
    virtual Verdict test(const UnitSet& s, GoodPiece* certify) = 0;

    Verdict good(const UnitSet& s) {
        auto key = unit_key(s);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        ++tested_;
        Verdict v = test(s, nullptr);
        cache_.emplace(std::move(key), v);
        return v;
    }

    std::size_t tested() const { return tested_; }
    std::size_t nodes() const { return nodes_; }

    /// Points (vertices or elements) touched by each unit.
    const std::vector<std::vector<std::size_t>>& support() const { return support_; }

protected:
    std::size_t nodes_ = 0;
    std::vector<std::vector<std::size_t>> support_;

private:
    std::map<std::string, Verdict> cache_;
    std::size_t tested_ = 0;
};

/// Partition of items (facets or maximal elements) into units.
inline std::vector<std::vector<std::size_t>> unit_partition(std::size_t items, bool symmetric,
                                                             const std::function<std::size_t(std::size_t, std::size_t)>& act,
                                                             std::size_t group_order) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<char> seen(items, 0);
    for (std::size_t i = 0; i < items; ++i) {
        if (seen[i]) continue;
        std::vector<std::size_t> unit{i};
        seen[i] = 1;
        if (symmetric)
            for (std::size_t g = 0; g < group_order; ++g) {
                std::size_t j = act(g, i);
                if (!seen[j]) {
                    seen[j] = 1;
                    unit.push_back(j);
                }
            }
        std::sort(unit.begin(), unit.end());
        out.push_back(std::move(unit));
    }
    return out;
}

class ComplexPieces final : public PieceOracle {
public:
    ComplexPieces(const ComplexTower& tower, bool symmetric, SearchMode mode, const Budget& budget)
        : tower_(tower), symmetric_(symmetric), mode_(mode), budget_(budget),
          target_(std::make_shared<const SimplicialComplex>(tower.base.complex())) {
        const auto& x = tower.top();
        const auto& facets = x.facets();
        std::map<Simplex, std::size_t> index;
        for (std::size_t i = 0; i < facets.size(); ++i) index.emplace(facets[i], i);
        units_ = unit_partition(
            facets.size(), symmetric,
            [&](std::size_t g, std::size_t f) { return index.at(act_simplex(tower.top_action(), g, facets[f])); },
            tower.group.order());
        for (const auto& unit : units_) {
            std::vector<std::size_t> pts;
            for (auto f : unit) pts.insert(pts.end(), facets[f].begin(), facets[f].end());
            std::sort(pts.begin(), pts.end());
            pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
            support_.push_back(std::move(pts));
        }
    }

    std::size_t units() const override { return units_.size(); }

    Verdict test(const UnitSet& s, GoodPiece* certify) override {
        const auto& x = tower_.top();
        std::vector<Simplex> facets;
        for (std::size_t u = 0; u < units_.size(); ++u)
            if (s[u])
                for (auto f : units_[u]) facets.push_back(x.facets()[f]);
        auto sub = induced_subcomplex(x, facets);
        auto source = std::make_shared<const SimplicialComplex>(std::move(sub.complex));
        std::vector<VertexMap> tuple;
        for (const auto& p : tower_.pi) {
            VertexMap f(sub.to_ambient.size());
            for (std::size_t i = 0; i < f.size(); ++i) f[i] = p[sub.to_ambient[i]];
            tuple.push_back(std::move(f));
        }
        auto outcome = symmetric_ ? sym_contiguous(source, target_, tower_.top_action().restricted(sub.to_ambient),
                                                   tuple, mode_, budget_)
                                  : plain_contiguous(source, target_, tuple, mode_, budget_);
        nodes_ += outcome.stats.nodes;
        if (certify) {
            for (const auto& f : facets) certify->members.push_back(x.simplex_label(f));
            certify->chain = std::move(outcome.chain);
        }
        return outcome.verdict;
    }

private:
    const ComplexTower& tower_;
    bool symmetric_;
    SearchMode mode_;
    Budget budget_;
    std::shared_ptr<const SimplicialComplex> target_;
    std::vector<std::vector<std::size_t>> units_;
};

class PosetPieces final : public PieceOracle {
public:
    PosetPieces(const PosetTower& tower, bool symmetric, SearchMode mode, const Budget& budget)
        : tower_(tower), symmetric_(symmetric), mode_(mode), budget_(budget),
          target_(std::make_shared<const FinitePoset>(tower.base)) {
        maximal_ = tower.top().maximal_elements();
        std::map<Element, std::size_t> index;
        for (std::size_t i = 0; i < maximal_.size(); ++i) index.emplace(maximal_[i], i);
        units_ = unit_partition(
            maximal_.size(), symmetric,
            [&](std::size_t g, std::size_t i) { return index.at(tower.top_action().apply(g, maximal_[i])); },
            tower.group.order());
        for (std::size_t u = 0; u < units_.size(); ++u) {
            UnitSet single(units_.size());
            single.set(u);
            auto members = open_of(single);
            support_.emplace_back(members.begin(), members.end());
        }
    }

    std::size_t units() const override { return units_.size(); }

    /// Elements of the open generated by the units in `s`.
    std::vector<Element> open_of(const UnitSet& s) const {
        std::vector<Element> tops;
        for (std::size_t u = 0; u < units_.size(); ++u)
            if (s[u])
                for (auto i : units_[u]) tops.push_back(maximal_[i]);
        return down_closure(tower_.top(), tops).members;
    }

    Verdict test(const UnitSet& s, GoodPiece* certify) override {
        auto members = open_of(s);
        auto sub = induced_subposet(tower_.top(), members);
        auto source = std::make_shared<const FinitePoset>(std::move(sub.poset));
        std::vector<std::vector<Element>> tuple;
        for (const auto& p : tower_.rho) {
            std::vector<Element> f(sub.to_ambient.size());
            for (std::size_t i = 0; i < f.size(); ++i) f[i] = p[sub.to_ambient[i]];
            tuple.push_back(std::move(f));
        }
        auto outcome = symmetric_
                           ? sym_comb_homotopic(source, target_, tower_.top_action().restricted(sub.to_ambient), tuple,
                                                mode_, budget_)
                           : plain_comb_homotopic(source, target_, tuple, mode_, budget_);
        nodes_ += outcome.stats.nodes;
        if (certify) {
            for (std::size_t u = 0; u < units_.size(); ++u)
                if (s[u])
                    for (auto i : units_[u]) certify->members.push_back(tower_.top().label(maximal_[i]));
            certify->homotopy = std::move(outcome.homotopy);
        }
        return outcome.verdict;
    }

private:
    const PosetTower& tower_;
    bool symmetric_;
    SearchMode mode_;
    Budget budget_;
    std::shared_ptr<const FinitePoset> target_;
    std::vector<Element> maximal_;
    std::vector<std::vector<std::size_t>> units_;
};

/// Every good union of units, level by level: a set is tested only when
/// all its subsets with one unit fewer are good (goodness is closed under
/// shrinking).
inline std::optional<std::vector<UnitSet>> enumerate_good(PieceOracle& oracle, std::size_t cap) {
    const std::size_t u = oracle.units();
    std::vector<UnitSet> good;
    std::set<UnitSet> level;
    for (std::size_t i = 0; i < u; ++i) {
        UnitSet s(u);
        s.set(i);
        if (oracle.good(s) == Verdict::Yes) level.insert(s);
    }
    while (!level.empty()) {
        good.insert(good.end(), level.begin(), level.end());
        if (good.size() > cap) return std::nullopt;
        std::set<UnitSet> next;
        for (const auto& s : level) {
            std::size_t top = 0;
            for (std::size_t i = 0; i < u; ++i)
                if (s[i]) top = i;
            for (std::size_t i = top + 1; i < u; ++i) {
                UnitSet cand = s;
                cand.set(i);
                bool subsets_good = true;
                for (std::size_t j = 0; j < u && subsets_good; ++j) {
                    if (!cand[j] || j == i) continue;
                    UnitSet sub = cand;
                    sub.reset(j);
                    subsets_good = level.count(sub) != 0;
                }
                if (subsets_good && oracle.good(cand) == Verdict::Yes) next.insert(cand);
            }
        }
        level = std::move(next);
    }
    return good;
}

/// Greedy growth from every seed unit: repeatedly
/// add the first good unit, preferring units sharing more points with the
/// piece. Returns the sets reached.
inline std::vector<UnitSet> grow_good(PieceOracle& oracle) {
    const std::size_t u = oracle.units();
    const auto& support = oracle.support();
    std::vector<UnitSet> found;
    for (std::size_t seed = 0; seed < u; ++seed) {
        UnitSet current(u);
        current.set(seed);
        if (oracle.good(current) != Verdict::Yes) continue;
        std::vector<char> touched;
        auto mark = [&](std::size_t unit) {
            for (auto p : support[unit]) {
                if (p >= touched.size()) touched.resize(p + 1, 0);
                touched[p] = 1;
            }
        };
        mark(seed);
        std::vector<char> rejected(u, 0);
        while (true) {
            std::vector<std::pair<std::size_t, std::size_t>> order; // (-overlap, unit)
            for (std::size_t i = 0; i < u; ++i) {
                if (current[i] || rejected[i]) continue;
                std::size_t overlap = 0;
                for (auto p : support[i]) overlap += p < touched.size() && touched[p];
                order.emplace_back(SIZE_MAX - overlap, i);
            }
            std::sort(order.begin(), order.end());
            bool grown = false;
            for (auto [key, i] : order) {
                UnitSet next = current;
                next.set(i);
                if (oracle.good(next) == Verdict::Yes) {
                    current = next;
                    mark(i);
                    grown = true;
                    break;
                }
                rejected[i] = 1;
            }
            if (!grown) break;
        }
        found.push_back(current);
    }
    return found;
}

inline ComplexityResult solve_cover(PieceOracle& oracle, Invariant inv, const ComplexityOptions& opt) {
    ComplexityResult res;
    res.invariant = inv;
    res.n = opt.n;
    res.r = opt.r;
    const std::size_t u = oracle.units();
    res.record.units = u;

    UnitSet whole(u);
    whole.set();
    const std::size_t before = oracle.nodes();
    res.record.whole_space = oracle.good(whole);
    res.record.whole_space_nodes = oracle.nodes() - before;
    res.record.whole_space_exhausted = res.record.whole_space == Verdict::No;

    std::vector<UnitSet> candidates;
    if (res.record.whole_space == Verdict::Yes) {
        res.lower = 1;
        candidates.push_back(whole);
    } else {
        if (res.record.whole_space == Verdict::No) res.lower = 2;
        for (std::size_t i = 0; i < u; ++i) {
            UnitSet single(u);
            single.set(i);
            if (oracle.good(single) == Verdict::No) {
                res.record.bad_unit = i;
                res.infinite = true;
                break;
            }
        }
        if (!res.infinite) {
            std::optional<std::vector<UnitSet>> good;
            if (opt.mode == SearchMode::Exact && u <= opt.max_exact_units)
                good = enumerate_good(oracle, opt.max_good_pieces);
            if (good) {
                res.record.good_pieces = good->size();
                candidates = maximal_sets(*good);
                res.record.all_pieces_enumerated = true;
            } else {
                candidates = maximal_sets(grow_good(oracle));
            }
        }
    }
    res.record.maximal_good_pieces = candidates.size();
    res.record.pieces_tested = oracle.tested();

    if (!res.infinite) {
        auto solution = min_set_cover(candidates, u);
        if (solution) {
            res.record.cover_nodes = solution->nodes;
            res.upper = solution->chosen.size();
            if (res.record.all_pieces_enumerated) res.lower = *res.upper;
            for (auto i : solution->chosen) {
                GoodPiece piece;
                for (std::size_t b = 0; b < u; ++b)
                    if (candidates[i][b]) piece.units.push_back(b);
                oracle.test(candidates[i], &piece);
                if (piece.homotopy) res.m = std::max(res.m.value_or(0), piece.homotopy->m);
                res.cover.push_back(std::move(piece));
            }
        }
    }
    res.search_nodes = oracle.nodes();
    return res;
}

} // namespace detail

inline OrderedComplex ordered_or_total(const OrderedComplex& k) {
    return k.has_order() ? k : totalize(k.complex());
}

inline ComplexityResult simplicial_complexity(const OrderedComplex& k, Invariant inv, const ComplexityOptions& opt) {
    if (opt.n < 2) throw Error(Errc::BadArity, "complexity needs n >= 2");
    auto tower = build_tower(ordered_or_total(k), opt.n, opt.r, opt.budget);
    detail::ComplexPieces oracle(tower, is_symmetric(inv), opt.mode, opt.budget);
    return detail::solve_cover(oracle, inv, opt);
}

inline ComplexityResult combinatorial_complexity(const FinitePoset& p, Invariant inv, const ComplexityOptions& opt) {
    if (opt.n < 2) throw Error(Errc::BadArity, "complexity needs n >= 2");
    if (!p.connected()) throw Error(Errc::DisconnectedPoset, "the poset is not connected");
    auto tower = poset_tower(p, opt.n, opt.r, opt.budget);
    detail::PosetPieces oracle(tower, is_symmetric(inv), opt.mode, opt.budget);
    return detail::solve_cover(oracle, inv, opt);
}

inline ComplexityResult sc_sigma(const OrderedComplex& k, ComplexityOptions opt = {}) {
    return simplicial_complexity(k, Invariant::ScSigma, opt);
}
inline ComplexityResult sc_plain(const OrderedComplex& k, ComplexityOptions opt = {}) {
    return simplicial_complexity(k, Invariant::ScPlain, opt);
}
inline ComplexityResult cc_sigma(const FinitePoset& p, ComplexityOptions opt = {}) {
    return combinatorial_complexity(p, Invariant::CcSigma, opt);
}
inline ComplexityResult cc_plain(const FinitePoset& p, ComplexityOptions opt = {}) {
    return combinatorial_complexity(p, Invariant::CcPlain, opt);
}

} // namespace symtc
