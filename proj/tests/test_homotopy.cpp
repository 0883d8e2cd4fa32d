#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "symtc/constructions.hpp"
#include "symtc/homotopy.hpp"
#include "symtc/validate.hpp"

using namespace symtc;

namespace {

OrderedComplex delta1() { return totalize(SimplicialComplex::from_facets({"a", "b"}, {{"a", "b"}})); }
OrderedComplex boundary() {
    return totalize(SimplicialComplex::from_facets({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}));
}
FinitePoset two_chain_poset() { return FinitePoset::from_relations({"0", "1"}, {{"0", "1"}}); }
FinitePoset v_poset() { return FinitePoset::from_relations({"p", "q", "r"}, {{"p", "r"}, {"q", "r"}}); }
FinitePoset circle() {
    return FinitePoset::from_relations({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
}

std::vector<oracle::Set> facet_sets(const SimplicialComplex& k) {
    std::vector<oracle::Set> out;
    for (const auto& f : k.facets()) out.emplace_back(f.begin(), f.end());
    return out;
}

std::vector<int> as_ints(const std::vector<Point>& f) { return {f.begin(), f.end()}; }

oracle::Order order_of(const FinitePoset& p) {
    std::vector<std::pair<int, int>> rel;
    for (Element a = 0; a < p.size(); ++a)
        for (Element b = 0; b < p.size(); ++b)
            if (p.less(a, b)) rel.emplace_back(a, b);
    return oracle::Order(static_cast<int>(p.size()), rel);
}

std::vector<int> swap_table(const std::vector<std::vector<Element>>& tuples) {
    std::map<std::vector<Element>, int> index;
    for (std::size_t i = 0; i < tuples.size(); ++i) index[tuples[i]] = static_cast<int>(i);
    std::vector<int> out;
    for (const auto& t : tuples) out.push_back(index.at({t[1], t[0]}));
    return out;
}

} // namespace

TEST_CASE("symmetric contiguity on complexes agrees with exhaustive search") {
    for (const auto& k : {delta1(), boundary()}) {
        auto t = build_tower(k, 2, 0);
        const auto& src = t.top();
        auto g = oracle::contiguity_components(static_cast<int>(src.vertex_count()), facet_sets(src),
                                      static_cast<int>(k.complex().vertex_count()), facet_sets(k.complex()));
        auto swap = swap_table(t.power.tuples);
        bool expected = g.reaches_fixed(as_ints(t.pi[0]), swap);
        bool plain_expected = g.connected(as_ints(t.pi[0]), as_ints(t.pi[1]));

        auto target = std::make_shared<const SimplicialComplex>(k.complex());
        auto sym = sym_contiguous(t.levels.back(), target, t.top_action(), t.pi);
        CHECK((sym.verdict == Verdict::Yes) == expected);
        if (sym.verdict == Verdict::No) CHECK(sym.stats.exhausted);
        auto plain = plain_contiguous(t.levels.back(), target, t.pi);
        CHECK((plain.verdict == Verdict::Yes) == plain_expected);
        if (sym.chain) CHECK(validate(*sym.chain).ok);
        if (plain.chain) CHECK(validate(*plain.chain).ok);
    }
}

TEST_CASE("interval projections are symmetrically contiguous, circle ones are not") {
    auto t = build_tower(delta1(), 2, 0);
    auto yes = sym_contiguous(t.levels.back(), std::make_shared<const SimplicialComplex>(delta1().complex()),
                              t.top_action(), t.pi);
    REQUIRE(yes.verdict == Verdict::Yes);
    REQUIRE(yes.chain);
    auto rep = validate(*yes.chain);
    INFO((rep.problems.empty() ? std::string() : rep.problems.front()));
    REQUIRE(rep.ok);

    auto b = build_tower(boundary(), 2, 0);
    auto no = sym_contiguous(b.levels.back(), std::make_shared<const SimplicialComplex>(boundary().complex()),
                             b.top_action(), b.pi);
    REQUIRE(no.verdict == Verdict::No);
    REQUIRE_FALSE(no.chain);
}

TEST_CASE("homotopy of poset maps agrees with the comparability graph") {
    for (const auto& p : {two_chain_poset(), v_poset(), circle()}) {
        auto t = poset_tower(p, 2, 0);
        auto g = oracle::comparability_components(order_of(t.top()), order_of(p));
        auto swap = swap_table(t.power.tuples);
        auto start = std::vector<int>(t.rho[0].begin(), t.rho[0].end());
        auto other = std::vector<int>(t.rho[1].begin(), t.rho[1].end());
        bool expected = g.reaches_fixed(start, swap);
        bool plain_expected = g.connected(start, other);

        auto source = std::make_shared<const FinitePoset>(t.top());
        auto target = std::make_shared<const FinitePoset>(p);
        auto sym = sym_comb_homotopic(source, target, t.top_action(), t.rho);
        CHECK((sym.verdict == Verdict::Yes) == expected);
        auto plain = plain_comb_homotopic(source, target, t.rho);
        CHECK((plain.verdict == Verdict::Yes) == plain_expected);
        if (sym.homotopy) CHECK(validate(*sym.homotopy).ok);
        if (plain.homotopy) CHECK(validate(*plain.homotopy).ok);
    }
}

TEST_CASE("certificate translations stay valid") {
    auto t = poset_tower(v_poset(), 2, 0);
    auto source = std::make_shared<const FinitePoset>(t.top());
    auto target = std::make_shared<const FinitePoset>(v_poset());
    auto out = sym_comb_homotopic(source, target, t.top_action(), t.rho);
    REQUIRE(out.verdict == Verdict::Yes);
    const auto& h = *out.homotopy;
    REQUIRE(validate(h).ok);

    auto s = section_from_homotopy(h);
    REQUIRE(validate(s).ok);
    auto back = homotopy_from_section(s);
    REQUIRE(back.table == h.table);
    REQUIRE(back.endpoints == h.endpoints);

    auto chain = homotopy_to_contiguity(h);
    auto crep = validate(chain);
    INFO((crep.problems.empty() ? std::string() : crep.problems.front()));
    REQUIRE(crep.ok);

    auto face = contiguity_to_homotopy(chain);
    auto frep = validate(face);
    INFO((frep.problems.empty() ? std::string() : frep.problems.front()));
    REQUIRE(frep.ok);
    REQUIRE(face.m == 2 * chain.length());
}

TEST_CASE("contiguity chain becomes a face-poset homotopy") {
    auto t = build_tower(delta1(), 2, 0);
    auto out = sym_contiguous(t.levels.back(), std::make_shared<const SimplicialComplex>(delta1().complex()),
                              t.top_action(), t.pi);
    REQUIRE(out.chain);
    auto h = contiguity_to_homotopy(*out.chain);
    REQUIRE(validate(h).ok);
}

TEST_CASE("validator rejects corrupted certificates") {
    auto t = poset_tower(v_poset(), 2, 0);
    auto source = std::make_shared<const FinitePoset>(t.top());
    auto target = std::make_shared<const FinitePoset>(v_poset());
    auto h = *sym_comb_homotopic(source, target, t.top_action(), t.rho).homotopy;

    SECTION("an endpoint entry") {
        auto bad = h;
        bad.endpoints[0][0] = (bad.endpoints[0][0] + 1) % 3;
        REQUIRE_FALSE(validate(bad).ok);
    }
    SECTION("a table entry") {
        bool caught = false;
        for (std::size_t x = 0; x < h.table.size() && !caught; ++x)
            for (std::size_t c = 0; c < h.table[x].size() && !caught; ++c)
                for (Element v = 0; v < 3 && !caught; ++v) {
                    if (v == h.table[x][c]) continue;
                    auto bad = h;
                    bad.table[x][c] = v;
                    caught = !validate(bad).ok;
                }
        REQUIRE(caught);
        auto bad = h;
        bad.table[0][0] = 7;
        REQUIRE_FALSE(validate(bad).ok);
    }
    SECTION("the group tables") {
        auto bad = h;
        std::swap(bad.group.tables[1][0], bad.group.tables[1][1]);
        REQUIRE_FALSE(validate(bad).ok);
        bad = h;
        bad.group.tables.pop_back();
        REQUIRE_FALSE(validate(bad).ok);
    }
    SECTION("a truncated row") {
        auto bad = h;
        bad.table.back().pop_back();
        REQUIRE_FALSE(validate(bad).ok);
    }

    auto ct = build_tower(delta1(), 2, 0);
    auto chain = *sym_contiguous(ct.levels.back(), std::make_shared<const SimplicialComplex>(delta1().complex()),
                                 ct.top_action(), ct.pi)
                      .chain;
    SECTION("a chain whose first level is not diagonal") {
        auto bad = chain;
        bad.levels.front() = bad.endpoints;
        if (bad.levels.front()[0] != bad.levels.front()[1]) REQUIRE_FALSE(validate(bad).ok);
    }
    SECTION("a chain missing its last level") {
        auto bad = chain;
        if (bad.levels.size() > 1) {
            bad.levels.pop_back();
            REQUIRE_FALSE(validate(bad).ok);
        }
    }
}

TEST_CASE("node cap") {
    auto t = build_tower(boundary(), 2, 1);
    auto target = std::make_shared<const SimplicialComplex>(boundary().complex());
    Budget tiny{Budget{}.max_simplices, 50};
    REQUIRE_THROWS_AS(sym_contiguous(t.levels.back(), target, t.top_action(), t.pi, SearchMode::Exact, tiny), Error);
    auto bounded = sym_contiguous(t.levels.back(), target, t.top_action(), t.pi, SearchMode::Bounded, tiny);
    REQUIRE(bounded.verdict == Verdict::Unknown);
    REQUIRE(bounded.stats.capped);
}

TEST_CASE("non-equivariant and non-monotone tuples are refused") {
    auto t = poset_tower(v_poset(), 2, 0);
    auto source = std::make_shared<const FinitePoset>(t.top());
    auto target = std::make_shared<const FinitePoset>(v_poset());
    REQUIRE_THROWS_AS(sym_comb_homotopic(source, target, t.top_action(), {t.rho[0], t.rho[0]}), Error);
    auto bent = t.rho;
    for (auto& f : bent)
        for (auto& v : f) v = v == 2 ? 0 : 2;
    REQUIRE_THROWS_AS(plain_comb_homotopic(source, target, bent), Error);
}
