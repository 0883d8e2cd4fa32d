#pragma once

// Plain data for the three certificate kinds. Each certificate carries its
// own source, target, group tables and claimed endpoints so it can be
// checked without rebuilding anything.

#include <cstdint>
#include <memory>
#include <vector>

#include "symtc/complex.hpp"
#include "symtc/permutation.hpp"
#include "symtc/poset.hpp"

namespace symtc {

/// Sigma_n acting on the points of a certificate source. tables[i] is the
/// point map of elements[i]. Empty for non-symmetric certificates.
struct GroupData {
    std::vector<Permutation> elements;
    std::vector<std::vector<std::uint32_t>> tables;
};

/// levels[l][j] is component j of tuple T^l; levels.back() should equal
/// the endpoints and levels.front() should be diagonal.
struct ContiguityChain {
    int n = 0;
    bool symmetric = true;
    std::shared_ptr<const SimplicialComplex> source;
    std::shared_ptr<const SimplicialComplex> target;
    GroupData group;
    std::vector<VertexMap> endpoints;
    std::vector<std::vector<VertexMap>> levels;

    int length() const { return static_cast<int>(levels.size()) - 1; }
};

/// table[x][t] = H(x, t) with t indexing the multi-fence J_{n,m}.
struct CombinatorialHomotopy {
    int n = 0;
    int m = 0;
    bool symmetric = true;
    std::shared_ptr<const FinitePoset> source;
    std::shared_ptr<const FinitePoset> target;
    GroupData group;
    std::vector<std::vector<Element>> endpoints;
    std::vector<std::vector<Element>> table;
};

/// paths[x] is the monotone map J_{n,m} -> target assigned to x.
struct SectionWitness {
    int n = 0;
    int m = 0;
    bool symmetric = true;
    std::shared_ptr<const FinitePoset> source;
    std::shared_ptr<const FinitePoset> target;
    GroupData group;
    std::vector<std::vector<Element>> endpoints;
    std::vector<std::vector<Element>> paths;
};

} // namespace symtc
