#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "symtc/constructions.hpp"
#include "symtc/symmetry.hpp"

using namespace symtc;

namespace {

OrderedComplex delta1() { return totalize(SimplicialComplex::from_facets({"a", "b"}, {{"a", "b"}})); }
OrderedComplex boundary() {
    return totalize(SimplicialComplex::from_facets({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}));
}
FinitePoset v_poset() { return FinitePoset::from_relations({"p", "q", "r"}, {{"p", "r"}, {"q", "r"}}); }

std::vector<std::vector<std::uint32_t>> raw(const Action& a) {
    std::vector<std::vector<std::uint32_t>> out;
    for (const auto& t : a.tables()) out.emplace_back(t.begin(), t.end());
    return out;
}

} // namespace

TEST_CASE("symmetric group order and lexicographic listing") {
    for (int n = 1; n <= kMaxDegree; ++n) {
        SymmetricGroup g(n);
        std::size_t fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        REQUIRE(g.order() == fact);
        REQUIRE(g[0].is_identity());
        for (std::size_t i = 1; i < g.order(); ++i) REQUIRE(g[i - 1].image() < g[i].image());
    }
    REQUIRE_THROWS_AS(SymmetricGroup(kMaxDegree + 1), Error);
}

TEST_CASE("coordinate action composes as a right action") {
    for (int n = 2; n <= 4; ++n) {
        SymmetricGroup group(n);
        std::vector<int> x(n);
        for (int i = 0; i < n; ++i) x[i] = 10 * i;
        for (const auto& a : group.elements())
            for (const auto& b : group.elements())
                REQUIRE(act_tuple(b, act_tuple(a, x)) == act_tuple(compose(a, b), x));
    }
}

TEST_CASE("tower tables obey the same law") {
    auto t = build_tower(delta1(), 3, 1);
    for (int level = 0; level <= 1; ++level) {
        const auto& action = t.actions[level];
        const auto& group = action.group();
        for (std::size_t a = 0; a < group.order(); ++a)
            for (std::size_t b = 0; b < group.order(); ++b) {
                auto ab = group.index_of(compose(group[a], group[b]));
                for (Point x = 0; x < action.points(); ++x)
                    REQUIRE(action.apply(b, action.apply(a, x)) == action.apply(ab, x));
            }
    }
}

TEST_CASE("constraint group is the stabiliser of the first coordinate") {
    for (int n = 2; n <= 4; ++n) {
        SymmetricGroup group(n);
        auto g = group_constraint(group);
        std::set<Permutation> expected;
        for (const auto& p : group.elements())
            if (p(0) == 0) expected.insert(p);
        REQUIRE(std::set<Permutation>(g.begin(), g.end()) == expected);
    }
    REQUIRE(group_constraint(SymmetricGroup(2)).size() == 1);
    REQUIRE(group_constraint(SymmetricGroup(3)).size() == 2);
}

TEST_CASE("orbit counts agree with Burnside") {
    for (int n = 2; n <= 3; ++n) {
        for (const auto& k : {delta1(), boundary()}) {
            auto t = build_tower(k, n, n == 2 ? 1 : 0);
            for (const auto& action : t.actions) {
                auto parts = orbit_partition(action, all_indices(action.group()));
                CHECK(parts.size() == oracle::burnside(raw(action)));
            }
        }
        auto pt = poset_tower(v_poset(), n, 1);
        for (const auto& action : pt.actions)
            CHECK(orbit_partition(action, all_indices(action.group())).size() == oracle::burnside(raw(action)));
    }
}

TEST_CASE("projection tuples are equivariant and reduce to G-invariant maps") {
    for (int n = 2; n <= 3; ++n) {
        auto t = build_tower(delta1(), n, 1);
        const auto& action = t.top_action();
        REQUIRE(check_equivariant_tuple(action, t.pi, true).ok);
        auto reduced = reduce_tuple(action, t.pi);
        for (std::size_t h : reduced.constraint) {
            REQUIRE(action.group()[h](0) == 0);
            for (Point x = 0; x < action.points(); ++x) REQUIRE(reduced.first[action.apply(h, x)] == reduced.first[x]);
        }
        REQUIRE(expand_map(action, reduced.first) == t.pi);

        auto pt = poset_tower(v_poset(), n, 1);
        REQUIRE(check_equivariant_tuple(pt.top_action(), pt.rho, true).ok);
        REQUIRE(expand_map(pt.top_action(), reduce_tuple(pt.top_action(), pt.rho).first) == pt.rho);
    }
}

TEST_CASE("a repeated projection is not equivariant") {
    auto t = build_tower(delta1(), 2, 0);
    std::vector<PointMap> twice{t.pi[0], t.pi[0]};
    auto check = check_equivariant_tuple(t.top_action(), twice, true);
    REQUIRE_FALSE(check.ok);
    REQUIRE_FALSE(check.describe().empty());
    REQUIRE_THROWS_AS(reduce_tuple(t.top_action(), twice), Error);
    auto swapped = t.pi;
    std::swap(swapped[0], swapped[1]);
    REQUIRE(check_equivariant_tuple(t.top_action(), swapped, true).ok);
}

TEST_CASE("expand rejects maps that are not G-invariant") {
    auto t = build_tower(delta1(), 3, 0);
    const auto& action = t.top_action();
    PointMap f(action.points(), 0);
    // (a,b,a) and (a,a,b) differ by the swap of coordinates 2 and 3
    for (Point x = 0; x < f.size(); ++x)
        if (t.power.tuples[x] == std::vector<Vertex>{0, 1, 0}) f[x] = 1;
    REQUIRE_THROWS_AS(expand_map(action, f), Error);
}

TEST_CASE("symmetrize and invariance") {
    auto t = build_tower(boundary(), 2, 0);
    const auto& k = t.top();
    const auto& action = t.top_action();
    const auto& facet = k.facets().front();
    auto closed = symmetrize(k, action, {facet});
    REQUIRE(is_invariant(action, closed));
    REQUIRE(closed.size() <= 2);
    if (closed.size() == 2) REQUIRE_FALSE(is_invariant(action, {facet}));

    auto pt = poset_tower(v_poset(), 2, 0);
    std::vector<Element> one{0};
    auto open = symmetrize_open(pt.top(), pt.top_action(), one);
    REQUIRE(is_open(pt.top(), open.members));
    REQUIRE(is_invariant_set(pt.top_action(), open.members));
}

TEST_CASE("restriction to a non-invariant subset fails") {
    auto pt = poset_tower(v_poset(), 2, 0);
    const auto& action = pt.top_action();
    Point off = 0;
    for (Point x = 0; x < action.points(); ++x)
        if (pt.power.tuples[x][0] != pt.power.tuples[x][1]) off = x;
    REQUIRE_THROWS_AS(action.restricted({off}), Error);
    auto orb = orbit(action, off);
    REQUIRE(orb.size() == 2);
    REQUIRE(action.restricted(orb).points() == 2);
}
