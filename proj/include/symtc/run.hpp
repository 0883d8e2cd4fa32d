#pragma once

// One run of a top-level computation: read the input, compute, write the
// certificates to their own files and re-check every file from disk.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include <boost/algorithm/string.hpp>

#include "symtc/io.hpp"
#include "symtc/section.hpp"
#include "symtc/stabilize.hpp"
#include "symtc/validate.hpp"

namespace symtc {

enum ExitCode { kExitOk = 0, kExitOther = 1, kExitInfinite = 2, kExitBudget = 3, kExitValidation = 4 };

struct RunConfig {
    std::string command = "complexity"; // complexity | tc-finite | stabilize
    Invariant invariant = Invariant::ScSigma;
    std::string input;
    std::string output;          // report path; empty for stdout only
    std::string certificate_dir; // defaults to the report directory
    std::string certificate_prefix = "certificate";
    int n = 2;
    int r = 0;
    int max_r = 1;
    int max_m = 64;
    SearchMode mode = SearchMode::Exact;
    Budget budget;
    std::size_t max_maps = 2000000;
    int verbosity = 0;
    bool timing = true;
};

struct RunReport {
    Json report;
    std::vector<std::string> certificate_files;
    int exit_code = kExitOk;
};

inline Invariant parse_invariant(const std::string& s) {
    for (auto i : {Invariant::ScSigma, Invariant::ScPlain, Invariant::CcSigma, Invariant::CcPlain})
        if (s == to_string(i)) return i;
    throw Error(Errc::ParseError, "unknown invariant '" + s + "'");
}

/// SYMTC_BUDGET is either a bare number (search nodes) or a comma list of
/// key=value with keys simplices, nodes, maps.
inline void apply_budget_env(RunConfig& cfg, const char* value) {
    if (!value || !*value) return;
    auto number = [](const std::string& s) -> std::size_t {
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(s, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != s.size() || v == 0) throw Error(Errc::ParseError, "SYMTC_BUDGET: bad number '" + s + "'");
        return static_cast<std::size_t>(v);
    };
    std::string text = value;
    if (text.find('=') == std::string::npos) {
        cfg.budget.max_nodes = number(text);
        return;
    }
    std::vector<std::string> parts;
    boost::split(parts, text, boost::is_any_of(","));
    for (auto part : parts) {
        boost::trim(part);
        auto eq = part.find('=');
        if (eq == std::string::npos) throw Error(Errc::ParseError, "SYMTC_BUDGET: expected key=value, got '" + part + "'");
        const auto key = part.substr(0, eq);
        const auto v = number(part.substr(eq + 1));
        if (key == "simplices") cfg.budget.max_simplices = v;
        else if (key == "nodes") cfg.budget.max_nodes = v;
        else if (key == "maps") cfg.max_maps = v;
        else throw Error(Errc::ParseError, "SYMTC_BUDGET: unknown key '" + key + "'");
    }
}

inline void apply_budget_env(RunConfig& cfg) { apply_budget_env(cfg, std::getenv("SYMTC_BUDGET")); }

inline ValidationReport validate(const Certificate& c) {
    return std::visit([](const auto& v) { return validate(v); }, c);
}

/// Re-reads a certificate file and checks it. Parse problems are reported
/// as failures, never thrown.
inline ValidationReport replay(const std::string& path) {
    try {
        return validate(certificate_from_json(read_json(path)));
    } catch (const Error& e) {
        ValidationReport rep;
        rep.fail(e.what());
        return rep;
    }
}

inline Json config_json(const RunConfig& c) {
    return {{"command", c.command},
            {"invariant", to_string(c.invariant)},
            {"input", c.input},
            {"n", c.n},
            {"r", c.r},
            {"max_r", c.max_r},
            {"max_m", c.max_m},
            {"mode", c.mode == SearchMode::Exact ? "exact" : "upper"},
            {"max_simplices", c.budget.max_simplices},
            {"max_nodes", c.budget.max_nodes},
            {"max_maps", c.max_maps}};
}

namespace run_detail {

inline std::filesystem::path certificate_dir(const RunConfig& cfg) {
    if (!cfg.certificate_dir.empty()) return cfg.certificate_dir;
    if (!cfg.output.empty()) {
        auto parent = std::filesystem::path(cfg.output).parent_path();
        if (!parent.empty()) return parent;
    }
    return ".";
}

/// Writes the certificates, re-reads each from disk and records the verdict.
inline std::vector<std::string> store(const RunConfig& cfg, const std::vector<Certificate>& certs,
                                      const std::string& tag, RunReport& out) {
    std::vector<std::string> files;
    if (certs.empty()) return files;
    auto dir = certificate_dir(cfg);
    std::filesystem::create_directories(dir);
    for (std::size_t i = 0; i < certs.size(); ++i) {
        auto path = (dir / (cfg.certificate_prefix + "." + tag + "." + std::to_string(i + 1) + ".json")).string();
        write_json(path, to_json(certs[i]));
        auto rep = replay(path);
        Json entry{{"file", path}, {"valid", rep.ok}};
        if (!rep.ok) {
            entry["problems"] = rep.problems;
            out.exit_code = kExitValidation;
        }
        out.report["certificates"].push_back(std::move(entry));
        files.push_back(path);
    }
    out.certificate_files.insert(out.certificate_files.end(), files.begin(), files.end());
    return files;
}

inline ComplexityOptions options(const RunConfig& cfg) {
    ComplexityOptions opt;
    opt.n = cfg.n;
    opt.r = cfg.r;
    opt.mode = cfg.mode;
    opt.budget = cfg.budget;
    return opt;
}

inline Instance load(const RunConfig& cfg) {
    if (is_simplicial(cfg.invariant)) return parse_complex(cfg.input, cfg.budget);
    return parse_poset(cfg.input);
}

} // namespace run_detail

/// Errors other than a failed certificate propagate to the caller.
inline RunReport run(const RunConfig& cfg) {
    using namespace run_detail;
    const auto start = std::chrono::steady_clock::now();
    RunReport out;
    out.report["config"] = config_json(cfg);
    out.report["certificates"] = Json::array();

    if (cfg.command == "complexity") {
        auto instance = load(cfg);
        const auto opt = options(cfg);
        ComplexityResult res;
        if (auto k = std::get_if<OrderedComplex>(&instance))
            res = cfg.invariant == Invariant::ScSigma ? sc_sigma(*k, opt) : sc_plain(*k, opt);
        else {
            const auto& p = std::get<FinitePoset>(instance);
            res = cfg.invariant == Invariant::CcSigma ? cc_sigma(p, opt) : cc_plain(p, opt);
        }
        auto files = store(cfg, certificates(res), to_string(cfg.invariant), out);
        out.report["result"] = to_json(res, &files);
        if (res.infinite && out.exit_code == kExitOk) out.exit_code = kExitInfinite;
    } else if (cfg.command == "tc-finite") {
        auto p = parse_poset(cfg.input);
        auto opt = options(cfg);
        auto homotopy = tc_sigma_finite(p, cfg.n, opt);
        auto sections = tc_sigma_sections(p, cfg.n, 12, cfg.max_maps, cfg.max_m);
        auto h_files = store(cfg, certificates(homotopy), "homotopy-route", out);
        std::vector<Certificate> s_certs(sections.cover.begin(), sections.cover.end());
        auto s_files = store(cfg, s_certs, "section-route", out);
        out.report["homotopy_route"] = to_json(homotopy, &h_files);
        out.report["section_route"] = to_json(sections, &s_files);
        if (homotopy.exact()) {
            const bool agree = homotopy.infinite ? !sections.k : sections.k == homotopy.upper;
            out.report["routes_agree"] = agree;
            if (!agree && out.exit_code == kExitOk) out.exit_code = kExitValidation;
        } else {
            out.report["routes_agree"] = nullptr;
        }
        if (homotopy.infinite && out.exit_code == kExitOk) out.exit_code = kExitInfinite;
    } else if (cfg.command == "stabilize") {
        auto table = stabilize_over_r(cfg.invariant, load(cfg), cfg.n, cfg.max_r, options(cfg));
        out.report["result"] = to_json(table);
    } else {
        throw Error(Errc::ParseError, "unknown command '" + cfg.command + "'");
    }

    if (cfg.timing) {
        const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        out.report["timing_ms"] = ms;
    }
    if (!cfg.output.empty()) write_json(cfg.output, out.report);
    return out;
}

} // namespace symtc
