// symtc command line.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "symtc/symtc.hpp"

using namespace symtc;

namespace {

struct Common {
    std::string input;
    std::string output;
    int n = 2;
    int r = 0;
    std::size_t budget = 0;
};

bool is_poset_doc(const Json& j) { return j.is_object() && j.contains("elements"); }

void emit(const Json& j, const std::string& output) {
    if (output.empty())
        std::cout << j.dump(2) << '\n';
    else
        write_json(output, j);
}

RunConfig base_config(const Common& c) {
    RunConfig cfg;
    cfg.input = c.input;
    cfg.output = c.output;
    cfg.n = c.n;
    cfg.r = c.r;
    apply_budget_env(cfg);
    if (c.budget) cfg.budget.max_nodes = c.budget;
    return cfg;
}

int finish(const RunReport& rep, const RunConfig& cfg) {
    if (cfg.output.empty()) std::cout << rep.report.dump(2) << '\n';
    return rep.exit_code;
}

int exit_code_for(const Error& e) {
    switch (e.code()) {
    case Errc::BudgetExceeded:
    case Errc::SizeLimitExceeded: return kExitBudget;
    case Errc::ValidationError:
    case Errc::InvalidChain:
    case Errc::InvalidTable: return kExitValidation;
    default: return kExitOther;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetric topological complexity of simplicial complexes and finite posets"};
    app.require_subcommand(1);
    Common c;
    bool no_timing = false;
    bool seedless = false;

    auto add_io = [&](CLI::App* sub, bool needs_output) {
        sub->add_option("--input,-i", c.input, "complex or poset JSON document")->required()->check(CLI::ExistingFile);
        sub->add_option("--output,-o", c.output, needs_output ? "output path (default stdout)" : "report path");
    };
    auto add_nr = [&](CLI::App* sub) {
        sub->add_option("--n", c.n, "number of factors")->check(CLI::Range(2, kMaxDegree));
        sub->add_option("--r", c.r, "subdivision depth")->check(CLI::NonNegativeNumber);
        sub->add_option("--budget", c.budget, "search node cap");
    };

    int iterations = 1;
    auto sd = app.add_subcommand("sd", "barycentric subdivision");
    add_io(sd, true);
    sd->add_option("--iterations", iterations)->check(CLI::NonNegativeNumber);

    auto power = app.add_subcommand("power", "ordered product K^n or product poset P^n");
    add_io(power, true);
    power->add_option("--n", c.n)->check(CLI::Range(1, kMaxDegree));

    auto oc = app.add_subcommand("order-complex", "order complex of a poset");
    add_io(oc, true);
    auto fp = app.add_subcommand("face-poset", "face poset of a complex");
    add_io(fp, true);

    auto orbits = app.add_subcommand("orbits", "Sigma_n orbits on the points of sd^r(X^n)");
    add_io(orbits, true);
    add_nr(orbits);

    bool plain = false;
    std::string certificate;
    std::string mode = "exact";
    auto symc = app.add_subcommand("sym-contiguous", "are the projections on sd^r(K^n) symmetrically contiguous");
    auto homot = app.add_subcommand("homotopic", "are the projections on sd^r(P^n) symmetrically homotopic");
    for (auto sub : {symc, homot}) {
        add_io(sub, true);
        add_nr(sub);
        sub->add_flag("--plain", plain, "drop the symmetry requirement");
        sub->add_option("--certificate", certificate, "where to write the witness");
        sub->add_option("--mode", mode)->check(CLI::IsMember({"exact", "upper"}));
    }

    auto check = app.add_subcommand("check-certificate", "re-validate a stored certificate");
    check->add_option("--certificate,certificate", certificate)->required();

    std::string cert_dir;
    auto sc = app.add_subcommand("sc", "SC^{Sigma,r}_n of a complex");
    auto cc = app.add_subcommand("cc", "CC^{Sigma,r}_n of a poset");
    for (auto sub : {sc, cc}) {
        add_io(sub, false);
        add_nr(sub);
        sub->add_flag("--plain", plain, "non-symmetric invariant");
        sub->add_option("--mode", mode)->check(CLI::IsMember({"exact", "upper"}));
        sub->add_option("--certificates", cert_dir, "directory for certificate files");
    }

    int max_m = 64;
    auto tcf = app.add_subcommand("tc-finite", "TC^Sigma_n of a finite space by two routes");
    add_io(tcf, false);
    tcf->add_option("--n", c.n)->check(CLI::Range(2, kMaxDegree));
    tcf->add_option("--max-m", max_m)->check(CLI::NonNegativeNumber);
    tcf->add_option("--certificates", cert_dir);

    std::string invariant = "sc-sigma";
    int max_r = 1;
    auto stab = app.add_subcommand("stabilize", "values for r = 0..max-r and their running minimum");
    add_io(stab, false);
    stab->add_option("--invariant", invariant)->check(CLI::IsMember({"sc-sigma", "sc-plain", "cc-sigma", "cc-plain"}));
    stab->add_option("--n", c.n)->check(CLI::Range(2, kMaxDegree));
    stab->add_option("--max-r", max_r)->check(CLI::NonNegativeNumber);
    stab->add_option("--budget", c.budget);

    for (auto sub : {sc, cc, tcf, stab}) {
        sub->add_flag("--no-timing", no_timing, "omit wall-clock fields from the report");
        sub->add_flag("--seedless", seedless, "accepted for compatibility; search order is always canonical");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitOther;
    }

    try {
        if (sd->parsed() || power->parsed() || oc->parsed() || fp->parsed() || orbits->parsed()) {
            auto cfg = base_config(c);
            const auto doc = read_json(c.input);
            if (sd->parsed()) {
                if (is_poset_doc(doc)) {
                    auto p = poset_from_json(doc);
                    for (int i = 0; i < iterations; ++i) p = subdivide_poset(p, cfg.budget.max_simplices).poset;
                    emit(to_json(p), c.output);
                } else {
                    auto k = complex_from_json(doc, cfg.budget);
                    for (int i = 0; i < iterations; ++i) k = barycentric_subdivide(k, cfg.budget.max_simplices);
                    emit(to_json(k), c.output);
                }
            } else if (power->parsed()) {
                if (is_poset_doc(doc))
                    emit(to_json(poset_power(poset_from_json(doc), c.n, cfg.budget.max_simplices).poset), c.output);
                else
                    emit(to_json(ordered_power(ordered_or_total(complex_from_json(doc, cfg.budget)), c.n).result),
                         c.output);
            } else if (oc->parsed()) {
                emit(to_json(order_complex(poset_from_json(doc), cfg.budget.max_simplices)), c.output);
            } else if (fp->parsed()) {
                emit(to_json(face_poset(complex_from_json(doc, cfg.budget).complex())), c.output);
            } else {
                Json out;
                out["n"] = c.n;
                out["r"] = c.r;
                out["orbits"] = Json::array();
                auto write = [&](const Action& action, auto label) {
                    for (const auto& o : orbit_partition(action, all_indices(action.group()))) {
                        std::vector<std::string> names;
                        for (auto x : o) names.push_back(label(x));
                        std::sort(names.begin(), names.end());
                        out["orbits"].push_back(names);
                    }
                };
                if (is_poset_doc(doc)) {
                    auto t = poset_tower(poset_from_json(doc), c.n, c.r, cfg.budget);
                    write(t.top_action(), [&](std::size_t x) { return t.top().label(x); });
                } else {
                    auto t = build_tower(complex_from_json(doc, cfg.budget), c.n, c.r, cfg.budget);
                    write(t.top_action(), [&](std::size_t x) { return t.top().label(x); });
                }
                std::sort(out["orbits"].begin(), out["orbits"].end());
                emit(out, c.output);
            }
            return kExitOk;
        }

        if (symc->parsed() || homot->parsed()) {
            auto cfg = base_config(c);
            const auto search = mode == "exact" ? SearchMode::Exact : SearchMode::Bounded;
            Json out{{"n", c.n}, {"r", c.r}, {"symmetric", !plain}};
            std::optional<Certificate> cert;
            Verdict verdict;
            std::size_t nodes = 0;
            if (symc->parsed()) {
                auto t = build_tower(parse_complex(c.input, cfg.budget), c.n, c.r, cfg.budget);
                auto target = std::make_shared<const SimplicialComplex>(t.base.complex());
                auto found = plain ? plain_contiguous(t.levels.back(), target, t.pi, search, cfg.budget)
                                   : sym_contiguous(t.levels.back(), target, t.top_action(), t.pi, search, cfg.budget);
                verdict = found.verdict;
                nodes = found.stats.nodes;
                if (found.chain) cert = *found.chain;
            } else {
                auto t = poset_tower(parse_poset(c.input), c.n, c.r, cfg.budget);
                auto source = std::make_shared<const FinitePoset>(t.top());
                auto target = std::make_shared<const FinitePoset>(t.base);
                auto found = plain ? plain_comb_homotopic(source, target, t.rho, search, cfg.budget)
                                   : sym_comb_homotopic(source, target, t.top_action(), t.rho, search, cfg.budget);
                verdict = found.verdict;
                nodes = found.stats.nodes;
                if (found.homotopy) cert = *found.homotopy;
            }
            out["verdict"] = to_string(verdict);
            out["nodes"] = nodes;
            int code = verdict == Verdict::Yes ? kExitOk : verdict == Verdict::No ? kExitInfinite : kExitBudget;
            if (cert) {
                if (!certificate.empty()) {
                    write_json(certificate, to_json(*cert));
                    auto rep = replay(certificate);
                    out["certificate"] = {{"file", certificate}, {"valid", rep.ok}};
                    if (!rep.ok) code = kExitValidation;
                } else {
                    out["certificate"] = to_json(*cert);
                }
            }
            emit(out, c.output);
            return code;
        }

        if (check->parsed()) {
            auto rep = replay(certificate);
            Json out{{"certificate", certificate}, {"valid", rep.ok}, {"problems", rep.problems}};
            std::cout << out.dump(2) << '\n';
            return rep.ok ? kExitOk : kExitValidation;
        }

        auto cfg = base_config(c);
        cfg.timing = !no_timing;
        cfg.certificate_dir = cert_dir;
        cfg.mode = mode == "exact" ? SearchMode::Exact : SearchMode::Bounded;
        cfg.max_m = max_m;
        cfg.max_r = max_r;
        if (!c.output.empty()) cfg.certificate_prefix = std::filesystem::path(c.output).stem().string();
        if (sc->parsed()) {
            cfg.invariant = plain ? Invariant::ScPlain : Invariant::ScSigma;
        } else if (cc->parsed()) {
            cfg.invariant = plain ? Invariant::CcPlain : Invariant::CcSigma;
        } else if (tcf->parsed()) {
            cfg.command = "tc-finite";
            cfg.invariant = Invariant::CcSigma;
        } else {
            cfg.command = "stabilize";
            cfg.invariant = parse_invariant(invariant);
        }
        return finish(run(cfg), cfg);
    } catch (const Error& e) {
        std::cerr << "symtc: " << e.what() << '\n';
        if (e.code() == Errc::ParseError) std::cerr << "check the input document against the README schema\n";
        if (exit_code_for(e) == kExitBudget) std::cerr << "raise the caps with --budget or SYMTC_BUDGET\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "symtc: " << e.what() << '\n';
        return kExitOther;
    }
}
