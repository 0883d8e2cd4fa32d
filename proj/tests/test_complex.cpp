#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "symtc/complex.hpp"
#include "symtc/constructions.hpp"

using namespace symtc;

namespace {

SimplicialComplex delta1() { return SimplicialComplex::from_facets({"a", "b"}, {{"a", "b"}}); }
SimplicialComplex delta2() { return SimplicialComplex::from_facets({"a", "b", "c"}, {{"a", "b", "c"}}); }
SimplicialComplex boundary() {
    return SimplicialComplex::from_facets({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

std::vector<oracle::Set> facet_sets(const SimplicialComplex& k) {
    std::vector<oracle::Set> out;
    for (const auto& f : k.facets()) out.emplace_back(f.begin(), f.end());
    return out;
}

} // namespace

TEST_CASE("closure matches subset enumeration") {
    auto k = SimplicialComplex::from_facets({"a", "b", "c", "d", "e"}, {{"a", "b", "c"}, {"c", "d"}, {"d", "e"}, {"b", "e"}});
    REQUIRE(k.simplices().size() == oracle::close_down(facet_sets(k)).size());
    REQUIRE(k.f_vector() == std::vector<std::size_t>{5, 6, 1});
    REQUIRE(k.facets().size() == 4);
}

TEST_CASE("declared vertices outside facets are 0-simplices") {
    auto k = SimplicialComplex::from_facets({"a", "b", "z"}, {{"a", "b"}});
    REQUIRE(k.f_vector() == std::vector<std::size_t>{3, 1});
    REQUIRE(k.facets().size() == 2);
}

TEST_CASE("bad facets are rejected") {
    REQUIRE_THROWS_AS(SimplicialComplex::from_facets({"a"}, {{"a", "q"}}), Error);
    REQUIRE_THROWS_AS(SimplicialComplex::from_facets({"a"}, {{}}), Error);
    REQUIRE_THROWS_AS(SimplicialComplex::from_facets({"a", "a"}, {{"a"}}), Error);
}

TEST_CASE("simplicial maps") {
    auto k = boundary();
    auto d = delta1();
    REQUIRE(validate_simplicial_map(d, k, VertexMap{0, 1}).ok);
    REQUIRE(validate_simplicial_map(delta2(), k, VertexMap{0, 1, 1}).ok);
    REQUIRE_FALSE(validate_simplicial_map(delta2(), k, VertexMap{0, 1, 2}).ok);
    REQUIRE_THROWS_AS(validate_simplicial_map(d, k, VertexMap{0}), Error);
}

TEST_CASE("euler characteristic") {
    REQUIRE(euler_characteristic(delta1()) == 1);
    REQUIRE(euler_characteristic(boundary()) == 0);
    REQUIRE(euler_characteristic(delta2()) == 1);
}

TEST_CASE("barycentric subdivision counts") {
    for (const auto& k : {delta1(), delta2(), boundary()}) {
        auto sd = barycentric_subdivide(k);
        auto simplices = oracle::close_down(facet_sets(k));
        CHECK(sd.vertex_count() == simplices.size());
        CHECK(sd.simplices().size() == oracle::chain_count(simplices));
        CHECK(sd.facets().size() == oracle::maximal_chain_count(facet_sets(k)));
    }
    auto sd = barycentric_subdivide(delta2());
    REQUIRE(sd.vertex_count() == 7);
    REQUIRE(sd.facets().size() == 6);
}

TEST_CASE("second subdivision vertices are the simplices of the first") {
    for (const auto& k : {delta1(), boundary()}) {
        auto sd1 = barycentric_subdivide(k);
        auto sd2 = barycentric_subdivide(sd1);
        auto simplices1 = oracle::close_down(facet_sets(sd1));
        CHECK(sd2.vertex_count() == simplices1.size());
        CHECK(sd2.simplices().size() == oracle::chain_count(simplices1));
    }
}

TEST_CASE("ordered power of an interval") {
    auto p = ordered_power(totalize(delta1()), 2);
    const auto& k = p.result.complex();
    REQUIRE(k.f_vector() == std::vector<std::size_t>{4, 5, 2});
    REQUIRE(euler_characteristic(k) == 1);
    REQUIRE(k.simplices().size() == 11);
    for (const auto& proj : p.projections) REQUIRE(validate_simplicial_map(k, delta1(), proj).ok);
}

TEST_CASE("ordered power simplices are chains with simplicial projections") {
    // oracle: subsets of vertex tuples that are chains in the product order
    // and whose coordinate sets are simplices of K
    for (const auto& base : {delta1(), delta2(), boundary()}) {
        auto ok = totalize(base);
        auto p = ordered_power(ok, 2);
        const int v = static_cast<int>(base.vertex_count());
        std::vector<std::pair<int, int>> tuples;
        for (int a = 0; a < v; ++a)
            for (int b = 0; b < v; ++b) tuples.emplace_back(a, b);
        auto simplices = oracle::close_down(facet_sets(base));
        auto leq = [&](int x, int y) { return ok.leq(x, y); };
        std::size_t count = 0;
        for (unsigned mask = 1; mask < (1u << tuples.size()); ++mask) {
            std::vector<std::pair<int, int>> chosen;
            for (std::size_t i = 0; i < tuples.size(); ++i)
                if (mask >> i & 1) chosen.push_back(tuples[i]);
            bool chain = true;
            for (std::size_t i = 0; i < chosen.size() && chain; ++i)
                for (std::size_t j = i + 1; j < chosen.size() && chain; ++j) {
                    auto [a, b] = chosen[i];
                    auto [c, d] = chosen[j];
                    bool le = leq(a, c) && leq(b, d);
                    bool ge = leq(c, a) && leq(d, b);
                    chain = le || ge;
                }
            if (!chain) continue;
            oracle::Set s1, s2;
            for (auto [a, b] : chosen) {
                s1.push_back(a);
                s2.push_back(b);
            }
            for (auto* s : {&s1, &s2}) {
                std::sort(s->begin(), s->end());
                s->erase(std::unique(s->begin(), s->end()), s->end());
            }
            if (simplices.count(s1) && simplices.count(s2)) ++count;
        }
        CHECK(p.result.complex().simplices().size() == count);
    }
}

TEST_CASE("induced subcomplex keeps labels") {
    auto k = boundary();
    auto sub = induced_subcomplex(k, {k.facets().front()});
    REQUIRE(sub.complex.vertex_count() == 2);
    REQUIRE(is_subcomplex(sub.complex, k));
    for (Vertex v = 0; v < sub.complex.vertex_count(); ++v)
        REQUIRE(sub.complex.label(v) == k.label(sub.to_ambient[v]));
}

TEST_CASE("ordered complex needs a total order on simplices") {
    Relation r = Relation::identity(2);
    REQUIRE_THROWS_AS(OrderedComplex(delta1(), r), Error);
    r.set(0, 1);
    REQUIRE_NOTHROW(OrderedComplex(delta1(), r));
    REQUIRE_THROWS_AS(OrderedComplex(delta1()).order(), Error);
}
