#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "symtc/constructions.hpp"

using namespace symtc;

namespace {

OrderedComplex delta1() { return totalize(SimplicialComplex::from_facets({"a", "b"}, {{"a", "b"}})); }
OrderedComplex delta2() { return totalize(SimplicialComplex::from_facets({"a", "b", "c"}, {{"a", "b", "c"}})); }
OrderedComplex boundary() {
    return totalize(SimplicialComplex::from_facets({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}));
}

FinitePoset two_chain() { return FinitePoset::from_relations({"0", "1"}, {{"0", "1"}}); }
FinitePoset v_poset() { return FinitePoset::from_relations({"p", "q", "r"}, {{"p", "r"}, {"q", "r"}}); }
FinitePoset circle() {
    return FinitePoset::from_relations({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
}

std::set<oracle::Set> simplex_sets(const SimplicialComplex& k) {
    std::set<oracle::Set> out;
    for (const auto& s : k.simplices()) out.emplace(s.begin(), s.end());
    return out;
}

/// iota: every simplex (a chain of simplices below) maps into its largest
/// member; the map commutes with every group element.
void check_complex_tower(const ComplexTower& t) {
    for (int l = 0; l < t.r; ++l) {
        const auto& below = *t.levels[l];
        const auto& above = *t.levels[l + 1];
        const auto& down = t.down[l];
        REQUIRE(validate_simplicial_map(above, below, down).ok);
        for (const auto& chain : above.simplices()) {
            const Simplex* top = &below.simplices()[chain.front()];
            for (Vertex c : chain)
                if (below.simplices()[c].size() > top->size()) top = &below.simplices()[c];
            for (Vertex c : chain) {
                CHECK(std::binary_search(top->begin(), top->end(), down[c]));
                const auto& own = below.simplices()[c];
                CHECK(std::binary_search(own.begin(), own.end(), down[c]));
            }
        }
        for (std::size_t g = 0; g < t.group.order(); ++g)
            for (Vertex x = 0; x < above.vertex_count(); ++x)
                CHECK(down[t.actions[l + 1].apply(g, x)] == t.actions[l].apply(g, down[x]));
    }
    for (int j = 0; j < t.n; ++j) REQUIRE(validate_simplicial_map(t.top(), t.base.complex(), t.pi[j]).ok);
}

void check_poset_tower(const PosetTower& t) {
    for (int l = 0; l < t.r; ++l) {
        const auto& below = t.levels[l];
        const auto& above = t.levels[l + 1];
        const auto& down = t.down[l];
        REQUIRE(is_monotone(above, below, down));
        for (Element x = 0; x < above.size(); ++x) {
            const auto& chain = t.chains[l][x];
            CHECK(std::find(chain.begin(), chain.end(), down[x]) != chain.end());
            for (Element c : chain) CHECK(below.leq(c, down[x]));
        }
        for (std::size_t g = 0; g < t.group.order(); ++g)
            for (Element x = 0; x < above.size(); ++x)
                CHECK(down[t.actions[l + 1].apply(g, x)] == t.actions[l].apply(g, down[x]));
    }
    for (const auto& rho : t.rho) REQUIRE(is_monotone(t.top(), t.base, rho));
}

} // namespace

TEST_CASE("tower sizes follow chain counts") {
    auto t = build_tower(delta1(), 2, 2);
    std::vector<std::size_t> vertices, simplices;
    for (const auto& level : t.levels) {
        vertices.push_back(level->vertex_count());
        simplices.push_back(level->simplices().size());
    }
    REQUIRE(vertices == std::vector<std::size_t>{4, 11, 45});
    for (int l = 0; l < 2; ++l) {
        CHECK(vertices[l + 1] == simplices[l]);
        CHECK(simplices[l + 1] == oracle::chain_count(simplex_sets(*t.levels[l])));
    }
    REQUIRE(simplices[2] == 233);
}

TEST_CASE("cube of an interval is the chain complex of the boolean lattice") {
    auto p = ordered_power(delta1(), 3);
    std::vector<std::pair<int, int>> rel;
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            if (a != b && (a & b) == a) rel.emplace_back(a, b);
    REQUIRE(p.result.complex().simplices().size() == oracle::chains_by_subsets(oracle::Order(8, rel)));
}

TEST_CASE("last-vertex maps on complexes") {
    for (const auto& k : {delta1(), delta2(), boundary()}) {
        auto t = build_tower(k, 2, 1);
        check_complex_tower(t);
        auto i = iota(k);
        REQUIRE(i.validate().ok);
        REQUIRE(carrier_condition(k.complex(), i.vertex_map));
    }
    check_complex_tower(build_tower(delta1(), 2, 2));
    check_complex_tower(build_tower(delta1(), 3, 1));
}

TEST_CASE("carrier condition rejects a map that leaves its carrier") {
    auto k = delta1().complex();
    // {a} -> b breaks the carrier of the vertex {a}
    VertexMap f(k.simplices().size(), 0);
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = k.simplices()[i].back();
    REQUIRE(carrier_condition(k, f));
    for (std::size_t i = 0; i < f.size(); ++i)
        if (k.simplices()[i] == Simplex{0}) f[i] = 1;
    REQUIRE_FALSE(carrier_condition(k, f));
}

TEST_CASE("last-element maps on posets") {
    for (const auto& p : {two_chain(), v_poset(), circle()}) {
        auto t = poset_tower(p, 2, 1);
        check_poset_tower(t);
        REQUIRE(t.top().size() == oracle::chains_by_subsets([&] {
                    std::vector<std::pair<int, int>> rel;
                    const auto& q = t.levels[0];
                    for (Element a = 0; a < q.size(); ++a)
                        for (Element b = 0; b < q.size(); ++b)
                            if (q.less(a, b)) rel.emplace_back(a, b);
                    return oracle::Order(static_cast<int>(q.size()), rel);
                }()));
    }
    check_poset_tower(poset_tower(v_poset(), 3, 1));
}

TEST_CASE("product poset") {
    auto c = circle();
    auto p = poset_power(c, 2);
    REQUIRE(p.poset.size() == 16);
    for (Element x = 0; x < 16; ++x)
        for (Element y = 0; y < 16; ++y) {
            bool expect = c.leq(p.tuples[x][0], p.tuples[y][0]) && c.leq(p.tuples[x][1], p.tuples[y][1]);
            CHECK(p.poset.leq(x, y) == expect);
        }
}

TEST_CASE("tower action rejects bad levels") {
    auto t = build_tower(delta1(), 2, 1);
    REQUIRE_THROWS_AS(act(t, 2, Permutation::identity(2), 0), Error);
    REQUIRE_THROWS_AS(act(t, 0, Permutation::identity(3), 0), Error);
    auto s = Permutation::transposition(2, 0, 1);
    for (Point x = 0; x < t.top().vertex_count(); ++x) REQUIRE(act(t, 1, s, act(t, 1, s, x)) == x);
}
