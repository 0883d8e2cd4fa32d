#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "symtc/complex.hpp"
#include "symtc/poset.hpp"

using namespace symtc;

namespace {

FinitePoset make(int n, const std::vector<std::pair<int, int>>& rel) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    std::vector<std::pair<std::string, std::string>> gens;
    for (auto [a, b] : rel) gens.emplace_back(std::to_string(a), std::to_string(b));
    return FinitePoset::from_relations(labels, gens);
}

FinitePoset v_poset() { return FinitePoset::from_relations({"p", "q", "r"}, {{"p", "r"}, {"q", "r"}}); }
FinitePoset circle() {
    return FinitePoset::from_relations({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
}

} // namespace

TEST_CASE("fifteen connected posets up to four points") {
    auto classes = oracle::connected_posets(4);
    REQUIRE(classes.size() == 15);
    for (const auto& [n, rel] : classes) REQUIRE(make(n, rel).connected());
}

TEST_CASE("closure, covers and maximal elements") {
    auto p = FinitePoset::from_relations({"0", "1", "2", "3"}, {{"0", "1"}, {"1", "2"}, {"2", "3"}});
    REQUIRE(p.leq(0, 3));
    REQUIRE_FALSE(p.leq(3, 0));
    REQUIRE(p.covers().size() == 3);
    REQUIRE(p.maximal_elements() == std::vector<Element>{3});
    auto c = circle();
    REQUIRE(c.maximal_elements().size() == 2);
    REQUIRE(c.covers().size() == 4);
}

TEST_CASE("cycles and unknown elements are rejected") {
    REQUIRE_THROWS_AS(FinitePoset::from_relations({"a", "b"}, {{"a", "b"}, {"b", "a"}}), Error);
    REQUIRE_THROWS_AS(FinitePoset::from_relations({"a"}, {{"a", "z"}}), Error);
}

TEST_CASE("connectedness") {
    REQUIRE(v_poset().connected());
    REQUIRE_FALSE(FinitePoset::from_relations({"a", "b"}, {}).connected());
}

TEST_CASE("chains agree with subset enumeration on all small posets") {
    for (const auto& [n, rel] : oracle::connected_posets(4)) {
        auto p = make(n, rel);
        oracle::Order o(n, rel);
        CHECK(p.chains().size() == oracle::chains_by_subsets(o));
        CHECK(sd_poset(p).size() == oracle::chains_by_subsets(o));
        CHECK(order_complex(p).complex().simplices().size() == oracle::chains_by_subsets(o));
    }
}

TEST_CASE("monotone maps agree with backtracking") {
    auto classes = oracle::connected_posets(3);
    for (const auto& [n, rel] : classes)
        for (const auto& [m, rel2] : classes) {
            auto q = make(n, rel);
            auto p = make(m, rel2);
            auto maps = enumerate_monotone_maps(q, p);
            auto expected = oracle::monotone_maps(oracle::Order(n, rel), oracle::Order(m, rel2));
            CHECK(maps.size() == expected.size());
            for (const auto& f : maps) CHECK(is_monotone(q, p, f.values));
        }
}

TEST_CASE("mapping poset is ordered pointwise") {
    auto two = make(2, {{0, 1}});
    auto maps = mapping_poset(two, two);
    REQUIRE(maps.size() == 3);
    REQUIRE(maps.covers().size() == 2);
}

TEST_CASE("down sets") {
    auto p = v_poset();
    auto r = p.require("r");
    REQUIRE(principal_down_set(p, r).members.size() == 3);
    std::vector<Element> pq{p.require("p"), p.require("q")};
    REQUIRE(is_open(p, pq));
    std::vector<Element> just_r{r};
    REQUIRE_FALSE(is_open(p, just_r));
    REQUIRE(down_closure(p, just_r).members.size() == 3);
}

TEST_CASE("subdivided poset elements are chains ordered by inclusion") {
    auto sd = subdivide_poset(circle());
    REQUIRE(sd.poset.size() == 8);
    for (Element a = 0; a < sd.poset.size(); ++a)
        for (Element b = 0; b < sd.poset.size(); ++b) {
            const auto& ca = sd.chains[a];
            const auto& cb = sd.chains[b];
            bool inc = std::includes(cb.begin(), cb.end(), ca.begin(), ca.end());
            CHECK(sd.poset.leq(a, b) == inc);
        }
}

TEST_CASE("face poset of a complex") {
    auto k = SimplicialComplex::from_facets({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    auto f = face_poset(k);
    REQUIRE(f.size() == 6);
    REQUIRE(f.covers().size() == 6);
    REQUIRE(f.maximal_elements().size() == 3);
}

TEST_CASE("multi-fence shape") {
    for (int n = 2; n <= 3; ++n)
        for (int m = 0; m <= 4; ++m) {
            MultiFence j(n, m);
            REQUIRE(j.size() == static_cast<std::size_t>(1 + n * m));
            for (int b = 1; b <= n; ++b)
                for (int l = 1; l <= m; ++l) {
                    auto prev = j.point(l - 1, b);
                    auto cur = j.point(l, b);
                    REQUIRE(j.level(cur) == l);
                    REQUIRE(j.branch(cur) == b);
                    if (l % 2 == 1)
                        REQUIRE(j.poset().less(prev, cur));
                    else
                        REQUIRE(j.poset().less(cur, prev));
                }
            if (m > 0) REQUIRE_FALSE(j.poset().comparable(j.point(1, 1), j.point(1, 2)));
        }
    REQUIRE_THROWS_AS(MultiFence(1, 2), Error);
}

TEST_CASE("fence map check") {
    auto two = make(2, {{0, 1}});
    auto pt = make(1, {});
    MultiFence j(2, 1);
    REQUIRE(fence_map_check(pt, two, j, {{0, 1, 1}}).ok);
    REQUIRE_FALSE(fence_map_check(pt, two, j, {{1, 0, 1}}).ok);
}
