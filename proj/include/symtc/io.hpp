#pragma once

// JSON documents for complexes, posets, certificates and results.
//
// Everything is written by label, with labels sorted, so output does not
// depend on internal numbering. nlohmann objects keep keys sorted, which
// makes dumps byte-stable.

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "symtc/certificate.hpp"
#include "symtc/complex.hpp"
#include "symtc/complexity.hpp"
#include "symtc/errors.hpp"
#include "symtc/poset.hpp"
#include "symtc/section.hpp"
#include "symtc/stabilize.hpp"

namespace symtc {

using Json = nlohmann::json;

namespace io_detail {

[[noreturn]] inline void bad(const std::string& field, const std::string& what) {
    throw Error(Errc::ParseError, "field '" + field + "': " + what);
}

inline const Json& member(const Json& j, const std::string& key, const std::string& where) {
    if (!j.is_object()) bad(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad(where.empty() ? key : where + "." + key, "missing");
    return *it;
}

inline const Json& array(const Json& j, const std::string& field) {
    if (!j.is_array()) bad(field, "expected an array");
    return j;
}

inline std::string string(const Json& j, const std::string& field) {
    if (!j.is_string()) bad(field, "expected a string");
    return j.get<std::string>();
}

inline int integer(const Json& j, const std::string& field) {
    if (!j.is_number_integer()) bad(field, "expected an integer");
    return j.get<int>();
}

inline bool boolean(const Json& j, const std::string& field) {
    if (!j.is_boolean()) bad(field, "expected true or false");
    return j.get<bool>();
}

inline std::vector<std::string> strings(const Json& j, const std::string& field) {
    std::vector<std::string> out;
    std::size_t i = 0;
    for (const auto& e : array(j, field)) out.push_back(string(e, field + "[" + std::to_string(i++) + "]"));
    return out;
}

inline std::pair<std::string, std::string> string_pair(const Json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2) bad(field, "expected a pair");
    return {string(j[0], field + "[0]"), string(j[1], field + "[1]")};
}

inline std::vector<std::string> sorted(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
}

/// Strict cover pairs of a partial order.
inline std::vector<std::pair<std::size_t, std::size_t>> hasse(const Relation& r) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t n = r.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b || !r(a, b)) continue;
            bool direct = true;
            for (std::size_t c = 0; c < n && direct; ++c)
                if (c != a && c != b && r(a, c) && r(c, b)) direct = false;
            if (direct) out.emplace_back(a, b);
        }
    return out;
}

template <class Labels>
Json label_pairs(const std::vector<std::pair<std::size_t, std::size_t>>& pairs, const Labels& labels) {
    std::vector<std::pair<std::string, std::string>> named;
    for (auto [a, b] : pairs) named.emplace_back(labels[a], labels[b]);
    std::sort(named.begin(), named.end());
    Json out = Json::array();
    for (const auto& [a, b] : named) out.push_back({a, b});
    return out;
}

} // namespace io_detail

// ---------------------------------------------------------------- documents

inline Json to_json(const SimplicialComplex& k) {
    std::vector<std::vector<std::string>> facets;
    for (const auto& f : k.facets()) {
        std::vector<std::string> names;
        for (Vertex v : f) names.push_back(k.label(v));
        facets.push_back(io_detail::sorted(std::move(names)));
    }
    std::sort(facets.begin(), facets.end());
    Json out;
    out["vertices"] = io_detail::sorted(k.labels());
    out["facets"] = facets;
    return out;
}

inline Json to_json(const OrderedComplex& k) {
    Json out = to_json(k.complex());
    if (k.has_order()) out["order"] = io_detail::label_pairs(io_detail::hasse(k.order()), k.complex().labels());
    return out;
}

inline Json to_json(const FinitePoset& p) {
    Json out;
    out["elements"] = io_detail::sorted(p.labels());
    out["relations"] = io_detail::label_pairs(io_detail::hasse(p.relation()), p.labels());
    return out;
}

/// Reads {"vertices":[...], "order":[[u,v],...], "facets":[[...],...]}.
/// Vertices are renumbered in sorted label order.
inline OrderedComplex complex_from_json(const Json& doc, const Budget& budget = {}) {
    using namespace io_detail;
    if (!doc.is_object()) bad("", "a complex document must be an object");
    auto vertices = sorted(strings(member(doc, "vertices", ""), "vertices"));
    std::vector<std::vector<std::string>> facets;
    std::size_t i = 0;
    for (const auto& f : array(member(doc, "facets", ""), "facets")) {
        const std::string field = "facets[" + std::to_string(i++) + "]";
        facets.push_back(strings(f, field));
        if (facets.back().empty()) bad(field, "empty facet");
        for (const auto& name : facets.back())
            if (!std::binary_search(vertices.begin(), vertices.end(), name))
                bad(field, "undeclared vertex '" + name + "'");
    }
    SimplicialComplex k;
    try {
        k = SimplicialComplex::from_facets(vertices, facets, budget.max_simplices);
    } catch (const Error& e) {
        if (e.code() == Errc::SizeLimitExceeded) throw;
        throw Error(Errc::ValidationError, e.what());
    }
    auto it = doc.find("order");
    if (it == doc.end()) return OrderedComplex(std::move(k));
    Relation order(k.vertex_count());
    i = 0;
    for (const auto& pr : array(*it, "order")) {
        const std::string field = "order[" + std::to_string(i++) + "]";
        auto [a, b] = string_pair(pr, field);
        auto va = k.find(a), vb = k.find(b);
        if (!va) bad(field, "undeclared vertex '" + a + "'");
        if (!vb) bad(field, "undeclared vertex '" + b + "'");
        order.set(*va, *vb);
    }
    order.close_reflexive_transitive();
    if (!order.is_antisymmetric()) throw Error(Errc::ValidationError, "vertex order contains a cycle");
    return OrderedComplex(std::move(k), std::move(order));
}

/// Reads {"elements":[...], "relations":[[a,b],...]} with a <= b.
inline FinitePoset poset_from_json(const Json& doc) {
    using namespace io_detail;
    if (!doc.is_object()) bad("", "a poset document must be an object");
    auto elements = sorted(strings(member(doc, "elements", ""), "elements"));
    std::vector<std::pair<std::string, std::string>> rel;
    std::size_t i = 0;
    for (const auto& pr : array(member(doc, "relations", ""), "relations")) {
        const std::string field = "relations[" + std::to_string(i++) + "]";
        rel.push_back(string_pair(pr, field));
        for (const auto& name : {rel.back().first, rel.back().second})
            if (!std::binary_search(elements.begin(), elements.end(), name))
                bad(field, "unknown element '" + name + "'");
    }
    try {
        return FinitePoset::from_relations(elements, rel);
    } catch (const Error& e) {
        throw Error(Errc::ValidationError, e.what());
    }
}

inline Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw Error(Errc::ParseError, path + ": " + e.what());
    }
}

inline void write_json(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::ParseError, "cannot write '" + path + "'");
    out << j.dump(2) << '\n';
}

inline OrderedComplex parse_complex(const std::string& path, const Budget& budget = {}) {
    return complex_from_json(read_json(path), budget);
}

inline FinitePoset parse_poset(const std::string& path) { return poset_from_json(read_json(path)); }

// ------------------------------------------------------------- certificates

using Certificate = std::variant<ContiguityChain, CombinatorialHomotopy, SectionWitness>;

namespace io_detail {

template <class Space>
std::vector<std::size_t> by_label(const Space& s) {
    std::vector<std::size_t> order(s.labels().size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return s.label(a) < s.label(b); });
    return order;
}

template <class Src, class Tgt, class Map>
Json map_table(const Map& f, const Src& src, const Tgt& tgt) {
    Json out = Json::array();
    for (auto x : by_label(src)) out.push_back({src.label(x), tgt.label(f.at(x))});
    return out;
}

template <class Space>
std::uint32_t point(const Space& s, const Json& j, const std::string& field) {
    auto name = string(j, field);
    auto v = s.find(name);
    if (!v) bad(field, "unknown point '" + name + "'");
    return static_cast<std::uint32_t>(*v);
}

template <class Src, class Tgt>
std::vector<std::uint32_t> map_from(const Json& j, const Src& src, const Tgt& tgt, const std::string& field) {
    const std::size_t n = src.labels().size();
    std::vector<std::uint32_t> f(n, 0);
    std::vector<char> seen(n, 0);
    std::size_t i = 0;
    for (const auto& row : array(j, field)) {
        const std::string f_i = field + "[" + std::to_string(i++) + "]";
        if (!row.is_array() || row.size() != 2) bad(f_i, "expected [point, value]");
        auto x = point(src, row[0], f_i + "[0]");
        if (seen[x]) bad(f_i, "point listed twice");
        seen[x] = 1;
        f[x] = point(tgt, row[1], f_i + "[1]");
    }
    for (std::size_t x = 0; x < n; ++x)
        if (!seen[x]) bad(field, "no value for '" + src.labels()[x] + "'");
    return f;
}

template <class Src, class Tgt, class Map>
Json map_tables(const std::vector<Map>& fs, const Src& src, const Tgt& tgt) {
    Json out = Json::array();
    for (const auto& f : fs) out.push_back(map_table(f, src, tgt));
    return out;
}

template <class Src, class Tgt>
std::vector<std::vector<std::uint32_t>> maps_from(const Json& j, const Src& src, const Tgt& tgt,
                                                  const std::string& field) {
    std::vector<std::vector<std::uint32_t>> out;
    std::size_t i = 0;
    for (const auto& e : array(j, field)) out.push_back(map_from(e, src, tgt, field + "[" + std::to_string(i++) + "]"));
    return out;
}

template <class Src>
Json group_json(const GroupData& g, const Src& src) {
    Json out;
    out["elements"] = Json::array();
    for (const auto& p : g.elements) {
        std::vector<int> img;
        for (int v : p.image()) img.push_back(v + 1);
        out["elements"].push_back(img);
    }
    out["tables"] = map_tables(g.tables, src, src);
    return out;
}

template <class Src>
GroupData group_from(const Json& j, const Src& src, const std::string& field) {
    GroupData g;
    std::size_t i = 0;
    for (const auto& e : array(member(j, "elements", field), field + ".elements")) {
        const std::string f_i = field + ".elements[" + std::to_string(i++) + "]";
        std::vector<int> img;
        for (const auto& v : array(e, f_i)) img.push_back(integer(v, f_i) - 1);
        try {
            g.elements.emplace_back(std::move(img));
        } catch (const Error&) {
            bad(f_i, "not a permutation");
        }
    }
    g.tables = maps_from(member(j, "tables", field), src, src, field + ".tables");
    return g;
}

template <class Space>
std::shared_ptr<const Space> space_from(const Json& j, const std::string& field);

template <>
inline std::shared_ptr<const SimplicialComplex> space_from(const Json& j, const std::string& field) {
    try {
        return std::make_shared<const SimplicialComplex>(complex_from_json(j).complex());
    } catch (const Error& e) {
        bad(field, e.what());
    }
}

template <>
inline std::shared_ptr<const FinitePoset> space_from(const Json& j, const std::string& field) {
    try {
        return std::make_shared<const FinitePoset>(poset_from_json(j));
    } catch (const Error& e) {
        bad(field, e.what());
    }
}

template <class C>
Json header(const char* kind, const C& c) {
    Json out;
    out["kind"] = kind;
    out["n"] = c.n;
    out["symmetric"] = c.symmetric;
    out["source"] = to_json(*c.source);
    out["target"] = to_json(*c.target);
    if (c.symmetric) out["group"] = group_json(c.group, *c.source);
    out["endpoints"] = map_tables(c.endpoints, *c.source, *c.target);
    return out;
}

template <class C>
void read_header(const Json& j, C& c) {
    c.n = integer(member(j, "n", ""), "n");
    if (c.n < 2) bad("n", "must be at least 2");
    c.symmetric = boolean(member(j, "symmetric", ""), "symmetric");
    using Space = typename std::decay_t<decltype(*c.source)>;
    c.source = space_from<Space>(member(j, "source", ""), "source");
    c.target = space_from<Space>(member(j, "target", ""), "target");
    if (c.symmetric) c.group = group_from(member(j, "group", ""), *c.source, "group");
    c.endpoints = maps_from(member(j, "endpoints", ""), *c.source, *c.target, "endpoints");
}

} // namespace io_detail

inline Json to_json(const ContiguityChain& c) {
    Json out = io_detail::header("contiguity-chain", c);
    out["levels"] = Json::array();
    for (const auto& level : c.levels) out["levels"].push_back(io_detail::map_tables(level, *c.source, *c.target));
    return out;
}

inline Json to_json(const CombinatorialHomotopy& h) {
    Json out = io_detail::header("homotopy", h);
    out["m"] = h.m;
    MultiFence fence(h.n, h.m);
    Json table = Json::array();
    for (auto x : io_detail::by_label(*h.source))
        for (Element t = 0; t < fence.size(); ++t)
            table.push_back({h.source->label(x), fence.poset().label(t), h.target->label(h.table[x][t])});
    out["table"] = std::move(table);
    return out;
}

inline Json to_json(const SectionWitness& s) {
    Json out = io_detail::header("section", s);
    out["m"] = s.m;
    Json paths = Json::array();
    for (auto x : io_detail::by_label(*s.source)) {
        Json values = Json::array();
        for (auto v : s.paths[x]) values.push_back(s.target->label(v));
        paths.push_back({s.source->label(x), values});
    }
    out["paths"] = std::move(paths);
    return out;
}

inline Json to_json(const Certificate& c) {
    return std::visit([](const auto& v) { return to_json(v); }, c);
}

/// Parses any certificate document. Structural problems (missing fields,
/// unknown labels, wrong table sizes) raise ParseError; the mathematical
/// content is left to validate().
inline Certificate certificate_from_json(const Json& j) {
    using namespace io_detail;
    if (!j.is_object()) bad("", "a certificate must be an object");
    const auto kind = string(member(j, "kind", ""), "kind");
    if (kind == "contiguity-chain") {
        ContiguityChain c;
        read_header(j, c);
        std::size_t i = 0;
        for (const auto& level : array(member(j, "levels", ""), "levels")) {
            const std::string field = "levels[" + std::to_string(i++) + "]";
            c.levels.push_back(maps_from(level, *c.source, *c.target, field));
        }
        return c;
    }
    if (kind == "homotopy") {
        CombinatorialHomotopy h;
        read_header(j, h);
        h.m = integer(member(j, "m", ""), "m");
        if (h.m < 0) bad("m", "must be non-negative");
        MultiFence fence(h.n, h.m);
        h.table.assign(h.source->size(), std::vector<Element>(fence.size(), 0));
        std::vector<std::vector<char>> seen(h.source->size(), std::vector<char>(fence.size(), 0));
        std::size_t i = 0;
        for (const auto& row : array(member(j, "table", ""), "table")) {
            const std::string field = "table[" + std::to_string(i++) + "]";
            if (!row.is_array() || row.size() != 3) bad(field, "expected [point, fence point, value]");
            auto x = point(*h.source, row[0], field + "[0]");
            auto t = point(fence.poset(), row[1], field + "[1]");
            if (seen[x][t]) bad(field, "entry listed twice");
            seen[x][t] = 1;
            h.table[x][t] = point(*h.target, row[2], field + "[2]");
        }
        for (Element x = 0; x < h.source->size(); ++x)
            for (Element t = 0; t < fence.size(); ++t)
                if (!seen[x][t])
                    bad("table", "no value at (" + h.source->label(x) + ", " + fence.poset().label(t) + ")");
        return h;
    }
    if (kind == "section") {
        SectionWitness s;
        read_header(j, s);
        s.m = integer(member(j, "m", ""), "m");
        if (s.m < 0) bad("m", "must be non-negative");
        const std::size_t width = 1 + static_cast<std::size_t>(s.n) * s.m;
        s.paths.assign(s.source->size(), {});
        std::vector<char> seen(s.source->size(), 0);
        std::size_t i = 0;
        for (const auto& row : array(member(j, "paths", ""), "paths")) {
            const std::string field = "paths[" + std::to_string(i++) + "]";
            if (!row.is_array() || row.size() != 2) bad(field, "expected [point, [values]]");
            auto x = point(*s.source, row[0], field + "[0]");
            if (seen[x]) bad(field, "point listed twice");
            seen[x] = 1;
            std::size_t t = 0;
            for (const auto& v : array(row[1], field + "[1]"))
                s.paths[x].push_back(point(*s.target, v, field + "[1][" + std::to_string(t++) + "]"));
            if (s.paths[x].size() != width) bad(field, "path length differs from |J_{n,m}|");
        }
        for (Element x = 0; x < s.source->size(); ++x)
            if (!seen[x]) bad("paths", "no path for '" + s.source->label(x) + "'");
        return s;
    }
    bad("kind", "unknown certificate kind '" + kind + "'");
}

// ------------------------------------------------------------------ results

namespace io_detail {

inline Json optional_size(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

} // namespace io_detail

/// Certificates of the cover, in cover order.
inline std::vector<Certificate> certificates(const ComplexityResult& r) {
    std::vector<Certificate> out;
    for (const auto& piece : r.cover) {
        if (piece.chain) out.emplace_back(*piece.chain);
        if (piece.homotopy) out.emplace_back(*piece.homotopy);
    }
    return out;
}

/// With `files` the i-th certificate is referenced by path instead of
/// embedded.
inline Json to_json(const ComplexityResult& r, const std::vector<std::string>* files = nullptr) {
    Json out;
    out["invariant"] = to_string(r.invariant);
    out["n"] = r.n;
    out["r"] = r.r;
    out["m"] = r.m ? Json(*r.m) : Json(nullptr);
    out["kind"] = r.kind();
    out["lower"] = r.lower;
    out["upper"] = io_detail::optional_size(r.upper);
    out["infinite"] = r.infinite;
    out["search_nodes"] = r.search_nodes;
    const auto& e = r.record;
    out["record"] = {{"whole_space", to_string(e.whole_space)},
                     {"whole_space_nodes", e.whole_space_nodes},
                     {"whole_space_exhausted", e.whole_space_exhausted},
                     {"units", e.units},
                     {"pieces_tested", e.pieces_tested},
                     {"good_pieces", e.good_pieces},
                     {"maximal_good_pieces", e.maximal_good_pieces},
                     {"cover_nodes", e.cover_nodes},
                     {"all_pieces_enumerated", e.all_pieces_enumerated},
                     {"bad_unit", io_detail::optional_size(e.bad_unit)}};
    out["cover"] = Json::array();
    std::size_t c = 0;
    for (const auto& piece : r.cover) {
        Json p;
        p["units"] = piece.units;
        p["members"] = piece.members;
        if (piece.chain || piece.homotopy) {
            if (files)
                p["certificate_file"] = files->at(c);
            else
                p["certificate"] = piece.chain ? to_json(*piece.chain) : to_json(*piece.homotopy);
            ++c;
        }
        out["cover"].push_back(std::move(p));
    }
    return out;
}

inline Json to_json(const SectionRouteResult& s, const std::vector<std::string>* files = nullptr) {
    Json out;
    out["k"] = io_detail::optional_size(s.k);
    out["infinite"] = !s.k.has_value();
    out["stable_m"] = s.stable_m;
    out["maps_enumerated"] = s.maps_enumerated;
    out["k_by_m"] = Json::array();
    for (const auto& k : s.k_by_m) out["k_by_m"].push_back(io_detail::optional_size(k));
    out["pieces"] = Json::array();
    for (const auto& p : s.pieces)
        out["pieces"].push_back({{"units", p.units}, {"min_m", p.min_m ? Json(*p.min_m) : Json(nullptr)}});
    out["cover"] = Json::array();
    for (std::size_t i = 0; i < s.cover.size(); ++i) {
        if (files)
            out["cover"].push_back({{"certificate_file", files->at(i)}});
        else
            out["cover"].push_back({{"certificate", to_json(s.cover[i])}});
    }
    return out;
}

inline Json to_json(const StabilizeTable& t) {
    Json out;
    out["invariant"] = to_string(t.invariant);
    out["n"] = t.n;
    out["rows"] = Json::array();
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const auto& row = t.rows[i];
        Json j;
        j["r"] = row.r;
        if (row.result) {
            j["kind"] = row.result->kind();
            j["lower"] = row.result->lower;
            j["upper"] = io_detail::optional_size(row.result->upper);
            j["infinite"] = row.result->infinite;
            j["m"] = row.result->m ? Json(*row.result->m) : Json(nullptr);
        } else {
            j["kind"] = "budget_exceeded";
            j["note"] = row.note;
        }
        j["running_min"] = io_detail::optional_size(t.running_min[i]);
        out["rows"].push_back(std::move(j));
    }
    return out;
}

} // namespace symtc
