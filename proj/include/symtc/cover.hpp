#pragma once

// Minimum set cover by branch and bound over bitsets.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace symtc {

using UnitSet = boost::dynamic_bitset<>;

struct CoverSolution {
    std::vector<std::size_t> chosen; // indices into the candidate list, ascending
    std::size_t nodes = 0;
};

/// Smallest subfamily of `sets` covering all `universe` bits, or nullopt
/// when the union misses some bit. Deterministic: candidates are tried in
/// index order, branching on the uncovered bit with fewest candidates.
inline std::optional<CoverSolution> min_set_cover(const std::vector<UnitSet>& sets, std::size_t universe) {
    UnitSet all(universe);
    for (const auto& s : sets) all |= s;
    if (all.count() != universe) return std::nullopt;

    std::vector<std::size_t> best;
    {
        UnitSet covered(universe);
        while (covered.count() != universe) {
            std::size_t pick = 0, gain = 0;
            for (std::size_t i = 0; i < sets.size(); ++i) {
                std::size_t g = (sets[i] - covered).count();
                if (g > gain) {
                    gain = g;
                    pick = i;
                }
            }
            best.push_back(pick);
            covered |= sets[pick];
        }
        std::sort(best.begin(), best.end());
    }
    std::size_t largest = 0;
    for (const auto& s : sets) largest = std::max(largest, s.count());

    CoverSolution out;
    std::vector<std::size_t> chosen;
    auto search = [&](auto&& self, const UnitSet& covered) -> void {
        ++out.nodes;
        const std::size_t missing = universe - covered.count();
        if (missing == 0) {
            if (chosen.size() < best.size()) {
                best = chosen;
                std::sort(best.begin(), best.end());
            }
            return;
        }
        const std::size_t bound = (missing + largest - 1) / largest;
        if (chosen.size() + bound >= best.size()) return;
        std::size_t pivot = universe, fewest = sets.size() + 1;
        for (std::size_t e = 0; e < universe; ++e) {
            if (covered[e]) continue;
            std::size_t c = 0;
            for (const auto& s : sets) c += s[e];
            if (c < fewest) {
                fewest = c;
                pivot = e;
            }
        }
        for (std::size_t i = 0; i < sets.size(); ++i) {
            if (!sets[i][pivot]) continue;
            chosen.push_back(i);
            self(self, covered | sets[i]);
            chosen.pop_back();
        }
    };
    search(search, UnitSet(universe));
    out.chosen = best;
    return out;
}

/// Members of `sets` not strictly contained in another member.
inline std::vector<UnitSet> maximal_sets(const std::vector<UnitSet>& sets) {
    std::vector<UnitSet> out;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < sets.size() && !dominated; ++j)
            if (i != j && sets[i].is_proper_subset_of(sets[j])) dominated = true;
        if (!dominated && std::find(out.begin(), out.end(), sets[i]) == out.end()) out.push_back(sets[i]);
    }
    return out;
}

} // namespace symtc
