#include "aw/cli.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "aw/compass.hpp"
#include "aw/error.hpp"
#include "aw/spectra.hpp"

namespace aw {

namespace {

constexpr int kMinIndependenceNmax = 2;

int required_legs(const std::string &suite) {
    if (suite == "prop2" || suite == "master" || suite == "independence")
        return 4;
    if (suite == "aw3" || suite == "aw3-quadratic")
        return 3;
    return 2;
}

std::string k_str(const std::vector<int> &k) {
    std::string s;
    for (int v : k)
        s += (s.empty() ? "" : ",") + std::to_string(v);
    return s;
}

} // namespace

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names{"defining", "prop1",   "prop2",   "aw3",
                                                "aw3-quadratic", "master", "spectra", "independence"};
    return names;
}

RepParams default_params() { return RepParams{Rational(5, 3), {1, 2, 1, 3}, 4, 6}; }

std::vector<int> parse_k_list(const std::string &text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw InvalidConfig("malformed k list '" + text + "'");
        out.push_back(std::stoi(item));
    }
    if (out.empty())
        throw InvalidConfig("empty k list");
    return out;
}

void RunConfig::validate() const {
    params.validate();
    if (suites.empty())
        throw InvalidConfig("no suite selected");
    for (const auto &s : suites) {
        if (s == "all")
            continue;
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
            throw InvalidConfig("unknown suite '" + s + "'");
        if (params.legs < required_legs(s))
            throw InvalidConfig("suite '" + s + "' requires legs >= " + std::to_string(required_legs(s)));
        if (s == "independence" && params.nmax < kMinIndependenceNmax)
            throw InvalidConfig("independence requires nmax >= 2");
    }
}

std::vector<std::string> RunConfig::resolved_suites() const {
    const bool all = std::find(suites.begin(), suites.end(), "all") != suites.end();
    std::vector<std::string> out;
    for (const auto &s : suite_names()) {
        const bool requested = all || std::find(suites.begin(), suites.end(), s) != suites.end();
        const bool applicable = params.legs >= required_legs(s) &&
                                (s != "independence" || params.nmax >= kMinIndependenceNmax);
        if (requested && applicable)
            out.push_back(s);
    }
    return out;
}

std::vector<std::string> RunConfig::skipped_suites() const {
    const bool all = std::find(suites.begin(), suites.end(), "all") != suites.end();
    if (!all)
        return {};
    auto run = resolved_suites();
    std::vector<std::string> out;
    for (const auto &s : suite_names())
        if (std::find(run.begin(), run.end(), s) == run.end())
            out.push_back(s);
    return out;
}

std::vector<SuiteResult> run_suites(const RunConfig &cfg) {
    cfg.validate();
    const auto names = cfg.resolved_suites();
    const RepParams &p = cfg.params;
    std::optional<GeneratorRegistry> reg;
    auto registry = [&]() -> const GeneratorRegistry & {
        if (!reg)
            reg.emplace(GeneratorRegistry::build(p));
        return *reg;
    };

    std::vector<SuiteResult> results;
    for (const auto &name : names) {
        const auto start = std::chrono::steady_clock::now();
        SuiteResult r{name, {}, 0};
        auto append = [&](std::vector<RelationReport> v) {
            std::move(v.begin(), v.end(), std::back_inserter(r.checks));
        };
        if (name == "defining") {
            const auto &basis = registry().basis();
            append(check_defining_relations(p, basis));
            append(check_coassociativity(p, basis));
            append(check_casimir_centrality(p, basis));
        } else if (name == "prop1") {
            append(check_prop1(registry()));
            if (p.legs == 4)
                r.checks.push_back(check_noncommuting_cycle(registry()));
        } else if (name == "prop2") {
            append(check_prop2(registry()));
        } else if (name == "aw3") {
            for (const auto &t : enumerate_allowable())
                if (static_cast<int>(std::bit_width(t.i | t.j | t.k)) <= p.legs)
                    append(check_aw3_symmetric(registry(), t));
            append(check_aw3_linear(registry()));
        } else if (name == "aw3-quadratic") {
            RepParams p3{p.q, {p.k[0], p.k[1], p.k[2]}, 3, p.nmax};
            append(check_aw3_quadratic(p3, std::make_shared<const TruncatedBasis>(3, p.nmax)));
        } else if (name == "master") {
            append(check_master_all(registry()));
        } else if (name == "spectra") {
            append(check_spectra(registry()));
        } else if (name == "independence") {
            r.checks.push_back(check_independence(registry()));
        }
        r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        results.push_back(std::move(r));
    }
    return results;
}

bool gating_pass(const std::vector<SuiteResult> &results) {
    for (const auto &s : results)
        for (const auto &c : s.checks)
            if (!c.informational && !c.pass)
                return false;
    return true;
}

nlohmann::ordered_json report_to_json(const RelationReport &r) {
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    for (const auto &[k, v] : r.inputs)
        inputs[k] = v;
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["kind"] = r.kind;
    j["inputs"] = inputs;
    j["status"] = r.pass ? "pass" : "fail";
    j["residual_summary"] = {{"nonzero", r.residual.nonzero}, {"sample", r.residual.sample}};
    if (!r.note.empty())
        j["note"] = r.note;
    if (r.informational)
        j["informational"] = true;
    return j;
}

nlohmann::ordered_json build_report(const RunConfig &cfg, const std::vector<SuiteResult> &results) {
    nlohmann::ordered_json report;
    report["format_version"] = kReportFormatVersion;
    report["params"] = {{"q", cfg.params.q.str()},
                        {"k", cfg.params.k},
                        {"legs", cfg.params.legs},
                        {"nmax", cfg.params.nmax}};
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    nlohmann::ordered_json per_suite = nlohmann::ordered_json::object();
    nlohmann::ordered_json timings = nlohmann::ordered_json::object();
    std::size_t pass = 0, fail = 0;
    for (const auto &s : results) {
        std::size_t sp = 0, sf = 0;
        for (const auto &c : s.checks) {
            checks.push_back(report_to_json(c));
            (c.pass ? sp : sf)++;
        }
        pass += sp;
        fail += sf;
        per_suite[s.name] = {{"pass", sp}, {"fail", sf}};
        timings[s.name] = s.millis;
    }
    report["checks"] = checks;
    report["summary"] = {{"pass", pass},
                         {"fail", fail},
                         {"skipped", cfg.skipped_suites().size()},
                         {"gating_pass", gating_pass(results)},
                         {"suites", per_suite}};
    report["timings_ms"] = timings;
    return report;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    std::vector<SuiteResult> results;
    try {
        results = run_suites(cfg);
    } catch (const InvalidConfig &e) {
        err << "invalid configuration: " << e.what() << "\n";
        return kExitInvalidConfig;
    }
    out << "q=" << cfg.params.q << " k=" << k_str(cfg.params.k) << " legs=" << cfg.params.legs
        << " nmax=" << cfg.params.nmax << "\n";
    for (const auto &s : results) {
        std::size_t pass = 0, informational_fail = 0;
        for (const auto &c : s.checks) {
            pass += c.pass;
            informational_fail += c.informational && !c.pass;
        }
        out << s.name << ": " << pass << "/" << s.checks.size() << " pass";
        if (informational_fail)
            out << " (" << informational_fail << " informational)";
        out << " [" << static_cast<long>(s.millis) << " ms]\n";
        for (const auto &c : s.checks)
            if (!c.pass)
                out << "  " << (c.informational ? "INFO " : "FAIL ") << c.id << " nonzero=" << c.residual.nonzero
                    << " " << c.residual.sample << (c.note.empty() ? "" : " (" + c.note + ")") << "\n";
    }
    for (const auto &s : cfg.skipped_suites())
        out << s << ": skipped (not applicable at legs=" << cfg.params.legs << ")\n";

    if (cfg.report_path) {
        std::ofstream f(*cfg.report_path);
        if (!f) {
            err << "cannot write report to " << *cfg.report_path << "\n";
            return kExitIoError;
        }
        f << build_report(cfg, results).dump(2) << "\n";
        if (!f) {
            err << "failed writing report to " << *cfg.report_path << "\n";
            return kExitIoError;
        }
    }
    if (cfg.dot_path) {
        if (int rc = cmd_compass(cfg, *cfg.dot_path, out, err); rc != kExitOk)
            return rc;
    }
    const bool ok = gating_pass(results);
    out << (ok ? "all gating checks pass" : "gating failures present") << "\n";
    return ok ? kExitOk : kExitGatingFailure;
}

int cmd_spectrum(const RunConfig &cfg, const std::string &label, int weight, std::ostream &out, std::ostream &err) {
    try {
        cfg.params.validate();
        auto parsed = parse_label(label);
        if (!parsed)
            throw InvalidConfig("unknown label '" + label + "'");
        if (parity(*parsed) == Parity::Fermionic || *parsed == GeneratorLabel::Q0)
            throw InvalidConfig("no closed-form spectrum for " + label + " (consecutive labels only)");
        if (max_leg(*parsed) > cfg.params.legs)
            throw InvalidConfig(label + " needs more legs than configured");
        if (weight < 0 || weight > cfg.params.nmax)
            throw InvalidConfig("weight must be in [0, nmax]");
        const unsigned m = subset_mask(*parsed);
        const IntervalLabel a{std::countr_zero(m) + 1, max_leg(*parsed)};
        const auto reg = GeneratorRegistry::build(cfg.params);
        const auto values = predicted_spectrum(cfg.params, a, weight);
        out << label << " weight " << weight << " eigenvalues:";
        for (const auto &v : values)
            out << " " << v;
        out << "\n";
        const auto r = check_annihilating(reg, a, weight);
        out << "annihilating polynomial: " << (r.pass ? "pass" : "fail") << "\n";
        return r.pass ? kExitOk : kExitGatingFailure;
    } catch (const Error &e) {
        err << "invalid configuration: " << e.what() << "\n";
        return kExitInvalidConfig;
    }
}

int cmd_compass(const RunConfig &cfg, const std::string &out_path, std::ostream &out, std::ostream &err) {
    std::string dot;
    try {
        RepParams p = cfg.params;
        if (p.legs != 4)
            throw InvalidConfig("the compass needs legs = 4");
        // Commutation structure only; a small truncation suffices.
        p.nmax = std::min(p.nmax, 3);
        dot = export_dot(build_compass(GeneratorRegistry::build(p)));
    } catch (const ConsistencyError &e) {
        err << "compass inconsistency: " << e.what() << "\n";
        return kExitGatingFailure;
    } catch (const Error &e) {
        err << "invalid configuration: " << e.what() << "\n";
        return kExitInvalidConfig;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f || !(f << dot) || !f.flush()) {
        err << "cannot write " << out_path << "\n";
        return kExitIoError;
    }
    out << "wrote " << out_path << "\n";
    return kExitOk;
}

int cmd_tables(std::ostream &out) {
    auto triple = [](const std::array<GeneratorLabel, 3> &t) {
        return std::string(name(t[0])) + "," + std::string(name(t[1])) + "," + std::string(name(t[2]));
    };
    for (const auto &row : master_rows())
        out << row.id() << ": (" << triple(row.abc) << " | " << triple(row.alpha_beta_gamma) << " | "
            << triple(row.xyz) << ")\n";
    return kExitOk;
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact verification of AW(3)/AW(4) relations on U_q(su(1,1)) tensor products"};
    app.require_subcommand(1);

    std::string q_text = "5/3", k_text, suites_text = "all", report, dot = "compass.dot", label;
    int legs = 4, nmax = 6, weight = 0;
    bool dot_given = false;

    auto add_params = [&](CLI::App *sub) {
        sub->add_option("--q", q_text, "deformation parameter a/b");
        sub->add_option("--k", k_text, "lowest weights k1,k2,... (positive integers)");
        sub->add_option("--legs", legs, "number of tensor legs {2,3,4}");
        sub->add_option("--nmax", nmax, "truncation: maximal total weight");
    };
    auto *verify = app.add_subcommand("verify", "run relation suites");
    add_params(verify);
    verify->add_option("--suite", suites_text, "suite[,suite...] from defining,prop1,prop2,aw3,aw3-quadratic,"
                                               "master,spectra,independence,all");
    verify->add_option("--report", report, "write JSON report to PATH");
    verify->add_option("--dot", dot, "also write the compass graph to PATH")->each([&](const std::string &) {
        dot_given = true;
    });

    auto *spectrum = app.add_subcommand("spectrum", "predicted Casimir spectrum on one weight block");
    add_params(spectrum);
    spectrum->add_option("--label", label, "consecutive label, e.g. Q12")->required();
    spectrum->add_option("--weight", weight, "weight block");

    auto *compass = app.add_subcommand("compass", "write the symmetry compass as DOT");
    add_params(compass);
    compass->add_option("--dot", dot, "output path");

    app.add_subcommand("tables", "print the embedded master-identity rows");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        std::ostringstream o, eo;
        int rc = app.exit(e, o, eo);
        out << o.str();
        err << eo.str();
        return rc == 0 ? kExitOk : kExitInvalidConfig;
    }

    if (app.got_subcommand("tables"))
        return cmd_tables(out);

    RunConfig cfg;
    try {
        cfg.params.q = Rational::parse(q_text);
        cfg.params.legs = legs;
        cfg.params.nmax = nmax;
        if (k_text.empty()) {
            const auto defaults = default_params().k;
            const auto n = static_cast<std::size_t>(std::clamp(legs, 0, 4));
            cfg.params.k.assign(defaults.begin(), defaults.begin() + static_cast<long>(n));
        } else {
            cfg.params.k = parse_k_list(k_text);
        }
        cfg.suites.clear();
        std::stringstream ss(suites_text);
        for (std::string s; std::getline(ss, s, ',');)
            cfg.suites.push_back(s);
        if (!report.empty())
            cfg.report_path = report;
        if (dot_given)
            cfg.dot_path = dot;
        cfg.params.validate();
    } catch (const Error &e) {
        err << "invalid configuration: " << e.what() << "\n";
        return kExitInvalidConfig;
    }

    if (app.got_subcommand("verify"))
        return cmd_verify(cfg, out, err);
    if (app.got_subcommand("spectrum"))
        return cmd_spectrum(cfg, label, weight, out, err);
    return cmd_compass(cfg, dot, out, err);
}

} // namespace aw
