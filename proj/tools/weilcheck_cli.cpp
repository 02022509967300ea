// Command-line front end: admissibility and parity checks on polynomial
// files, reconstruction from point counts, composition maps, the lattice
// parity sweep, and the quadratic-unit demonstrator.
//
// Exit codes: 0 = all checks PASS or VACUOUS, 1 = some check FAILED,
// 2 = input or usage error.

#include "weilcheck/weilcheck.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

using namespace weilcheck;

namespace {

enum class OutputMode { kText, kJson, kPretty };

struct GlobalOpts {
    OutputMode mode = OutputMode::kText;
    double tol = 1e-6;
    std::uint64_t seed = 42;
};

std::string format_sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

long thread_budget(long tasks) {
    long n = static_cast<long>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("WEILCHECK_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) n = std::min(n, cap);
    }
    return std::max(1L, std::min(n, tasks));
}

void emit(const Json& report, const GlobalOpts& g) {
    if (g.mode == OutputMode::kPretty)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << report.dump() << "\n";
}

Json verdict_json(const ParityVerdict& v) {
    Json j;
    j["verdict"] = verdict_kind_str(v.kind);
    j["square_class"] = v.tested_value.str();
    j["exponent_used"] = v.exponent_used;
    j["value_at_test_point"] = rat_str(v.phi_at_test_point);
    j["tested_quantity"] = rat_str(v.tested_quantity);
    if (v.char_two_warning) j["warning"] = "p = 2 lies outside the refined theorem's hypothesis";
    return j;
}

void print_verdict_line(const std::string& name, const ParityVerdict& v) {
    std::cout << "  " << name << ": " << verdict_kind_str(v.kind);
    if (v.kind != VerdictKind::kVacuous)
        std::cout << "  class=" << v.tested_value.str() << "  value=" << rat_str(v.tested_quantity);
    std::cout << "  (test point value " << rat_str(v.phi_at_test_point) << ")";
    if (v.char_two_warning) std::cout << "  [warning: p = 2]";
    std::cout << "\n";
}

struct CheckOutcome {
    Json report;
    bool any_fail = false;
};

CheckOutcome run_full_check(const PolynomialFile& pf, const GlobalOpts& g, std::optional<long> alpha_override) {
    const FrobPolynomial& fp = pf.fp;
    CheckOutcome out;
    Json& rep = out.report;
    std::vector<std::string> failures;

    rep["input"] = polynomial_to_json(pf);
    rep["context"] = Json{{"p", fp.ctx.p.str()}, {"k", fp.ctx.k}, {"q", fp.ctx.q().str()},
                          {"dim", fp.ctx.d},     {"N", fp.ctx.N}};
    Json checks = Json::array();

    FeSign sign = functional_equation_sign(fp);
    checks.push_back(Json{{"name", "functional_equation"}, {"sign", fe_sign_str(sign)}});

    WeilBoundsReport wb = check_weil_bounds(fp, g.tol);
    {
        Json j{{"name", "weil_bounds"},
               {"verdict", wb.exact_pass ? "PASS" : "FAIL"},
               {"reversal_symmetry", wb.reversal_ok},
               {"coefficient_bounds", wb.coefficient_bounds_ok},
               {"numeric_max_deviation", format_sci(wb.max_deviation)},
               {"numeric_ok", wb.numeric_ok}};
        if (!wb.exact_pass) failures.push_back("weil_bounds");
        checks.push_back(j);
    }

    RealRootReport rr = check_real_root_multiplicity(fp);
    {
        std::string verdict = rr.theorem_applies ? (rr.both_even ? "PASS" : "FAIL") : "INFO";
        if (rr.theorem_applies && !rr.both_even) failures.push_back("real_root_multiplicity");
        checks.push_back(Json{{"name", "real_root_multiplicity"},
                              {"verdict", verdict},
                              {"mult_plus_one", rr.mult_plus_one},
                              {"mult_minus_one", rr.mult_minus_one}});
    }

    LUnitsReport lu = check_l_units(fp);
    {
        if (!lu.pass) failures.push_back("l_units");
        checks.push_back(Json{{"name", "l_units"},
                              {"verdict", lu.pass ? "PASS" : "FAIL"},
                              {"untwisted_integral", lu.integral},
                              {"untwisted_constant", lu.constant}});
    }

    std::optional<long> e_val;
    std::string e_source = "unavailable";
    if (fp.ctx.d % 2 == 0) {
        TrivialRootReport tr = check_trivial_root(fp);
        if (!tr.pass) failures.push_back("trivial_root");
        checks.push_back(Json{{"name", "trivial_root"},
                              {"verdict", tr.pass ? "PASS" : "FAIL"},
                              {"multiplicity", tr.multiplicity}});

        if (pf.hodge) {
            KatzReport kz = check_katz(fp, *pf.hodge);
            if (!kz.pass) failures.push_back("katz");
            Json j{{"name", "katz"}, {"verdict", kz.pass ? "PASS" : "FAIL"}};
            if (!kz.pass) j["first_violation_at"] = kz.first_violation;
            j["serre_symmetric"] = pf.hodge->serre_symmetric();
            checks.push_back(j);
            e_val = e_from_hodge(*pf.hodge, fp.ctx.d);
            e_source = "hodge";
        } else {
            try {
                e_val = e_from_slopes(fp);
                e_source = "slopes";
            } catch (const std::exception&) {
            }
        }

        ParityVerdict main = test_main(fp);
        if (main.failed()) failures.push_back("parity_main");
        Json jm = verdict_json(main);
        jm["name"] = "parity_main";
        checks.push_back(jm);

        if (e_val) {
            ParityVerdict m2 = test_main2(fp, *e_val);
            if (m2.failed()) failures.push_back("parity_main2");
            Json j2 = verdict_json(m2);
            j2["name"] = "parity_main2";
            j2["e"] = *e_val;
            j2["e_source"] = e_source;
            checks.push_back(j2);
        }

        if (pf.hodge) {
            try {
                long es = e_from_slopes(fp);
                checks.push_back(Json{{"name", "hodge_witt_consistency"},
                                      {"e_from_hodge", *e_val},
                                      {"e_from_slopes", es},
                                      {"verdict", es == *e_val ? "PASS" : "INFO"}});
            } catch (const std::exception&) {
            }
        }
    }

    std::optional<long> alpha_val = alpha_override;
    if (!alpha_val && pf.surface) alpha_val = alpha(*pf.surface);
    if (fp.ctx.d == 2 && alpha_val) {
        ParityVerdict at = test_artin_tate(fp, *alpha_val);
        if (at.failed()) failures.push_back("artin_tate");
        Json j = verdict_json(at);
        j["name"] = "artin_tate";
        j["alpha"] = *alpha_val;
        checks.push_back(j);
        if (e_val)
            checks.push_back(Json{{"name", "alpha_vs_e"},
                                  {"alpha", *alpha_val},
                                  {"e", *e_val},
                                  {"verdict", *alpha_val == *e_val ? "AGREE" : "DISAGREE"}});

        SquareClass disc = disc_square_class(fp, *alpha_val);
        checks.push_back(Json{{"name", "disc_square_class"}, {"value", disc.str()}});

        BaseChangeReport bc = base_change_consistency(fp, *alpha_val);
        if (bc.verdict == BaseChangeVerdict::kContradiction) failures.push_back("base_change");
        Json j2{{"name", "base_change"}, {"verdict", base_change_verdict_str(bc.verdict)}};
        if (bc.verdict != BaseChangeVerdict::kNotApplicable) {
            j2["disc_base"] = bc.disc_base.str();
            j2["disc_extended"] = bc.disc_extended.str();
            j2["ratio_class"] = bc.ratio.str();
        } else {
            j2["rank_base"] = bc.rank_base;
            j2["rank_extended"] = bc.rank_extended;
        }
        checks.push_back(j2);
    }

    rep["checks"] = checks;
    rep["conclusion"] = Json{{"overall", failures.empty() ? "PASS" : "FAIL"}, {"failed_checks", failures}};
    out.any_fail = !failures.empty();
    return out;
}

void print_check_text(const Json& rep) {
    std::cout << "context: p=" << rep["context"]["p"].get<std::string>() << " k=" << rep["context"]["k"]
              << " dim=" << rep["context"]["dim"] << " N=" << rep["context"]["N"] << "\n";
    for (const auto& c : rep["checks"]) {
        std::cout << "  " << c["name"].get<std::string>();
        if (c.contains("verdict")) std::cout << ": " << c["verdict"].get<std::string>();
        if (c.contains("sign")) std::cout << " sign=" << c["sign"].get<std::string>();
        if (c.contains("square_class")) std::cout << " class=" << c["square_class"].get<std::string>();
        if (c.contains("value")) std::cout << " value=" << c["value"].get<std::string>();
        if (c.contains("ratio_class")) std::cout << " ratio=" << c["ratio_class"].get<std::string>();
        if (c.contains("numeric_max_deviation"))
            std::cout << " max||z|-1|=" << c["numeric_max_deviation"].get<std::string>();
        if (c.contains("warning")) std::cout << " [" << c["warning"].get<std::string>() << "]";
        std::cout << "\n";
    }
    std::cout << "overall: " << rep["conclusion"]["overall"].get<std::string>() << "\n";
}

int cmd_check(const std::string& path, const GlobalOpts& g, std::optional<long> alpha_override) {
    PolynomialFile pf = load_polynomial(path);
    CheckOutcome out = run_full_check(pf, g, alpha_override);
    if (g.mode == OutputMode::kText)
        print_check_text(out.report);
    else
        emit(out.report, g);
    return out.any_fail ? 1 : 0;
}

int cmd_reconstruct(const std::string& path, const GlobalOpts& g, const std::string& emit_prefix) {
    VarietyDescriptor vd = load_descriptor(path);
    DisambiguationReport rep = disambiguate(vd, g.tol);

    Json j;
    j["name"] = vd.name;
    j["middle_degree"] = rep.middle_degree;
    Json traces = Json::array();
    for (const Rat& t : rep.traces) traces.push_back(rat_str(t));
    j["normalized_traces"] = traces;
    j["free_coefficient_count"] = rep.free_coefficient_count;
    Json cands = Json::array();
    for (const auto& cand : rep.candidates) {
        Json cj;
        cj["sign"] = cand.sign;
        Json coeffs = Json::array();
        for (long r = 0; r <= cand.phi.degree(); ++r) coeffs.push_back(rat_to_json(cand.phi[r]));
        cj["coefficients"] = coeffs;
        cj["survives"] = cand.survives;
        cj["failed_checks"] = cand.failures;
        cj["weil_bounds"] = cand.bounds.exact_pass ? "PASS" : "FAIL";
        cj["l_units"] = cand.l_units.pass ? "PASS" : "FAIL";
        cj["trivial_root_multiplicity"] = cand.trivial_root.multiplicity;
        if (cand.katz) cj["katz"] = cand.katz->pass ? "PASS" : "FAIL";
        cj["parity_main"] = verdict_json(cand.main);
        if (cand.main2) {
            cj["parity_main2"] = verdict_json(*cand.main2);
            cj["e"] = *cand.e_value;
            cj["e_source"] = cand.e_source;
        }
        cands.push_back(cj);
    }
    j["candidates"] = cands;
    j["survivor_count"] = rep.survivor_count;
    if (rep.unique_survivor) {
        j["unique_survivor_sign"] = rep.candidates[*rep.unique_survivor].sign;
    }

    if (g.mode == OutputMode::kText) {
        std::cout << "reconstruction of '" << vd.name << "': N=" << rep.middle_degree << ", "
                  << rep.candidates.size() << " candidate(s)";
        if (rep.free_coefficient_count > 0)
            std::cout << ", underdetermined (" << rep.free_coefficient_count << " free coefficients)";
        std::cout << "\n";
        for (const auto& cand : rep.candidates) {
            std::cout << " sign " << (cand.sign > 0 ? "+1" : "-1") << ": "
                      << (cand.survives ? "SURVIVES" : "ELIMINATED");
            if (!cand.failures.empty()) {
                std::cout << " (";
                for (std::size_t i = 0; i < cand.failures.size(); ++i)
                    std::cout << (i ? ", " : "") << cand.failures[i];
                std::cout << ")";
            }
            std::cout << "\n";
            print_verdict_line("parity_main", cand.main);
            if (cand.main2) print_verdict_line("parity_main2", *cand.main2);
        }
        if (rep.unique_survivor)
            std::cout << "unique survivor: sign " << (rep.candidates[*rep.unique_survivor].sign > 0 ? "+1" : "-1")
                      << "\n";
        else
            std::cout << "no unique survivor\n";
    } else {
        emit(j, g);
    }

    if (!emit_prefix.empty()) {
        for (const auto& cand : rep.candidates) {
            PolynomialFile pf{vd.name + (cand.sign > 0 ? "_plus" : "_minus"),
                              FrobPolynomial{WeilContext{vd.p, vd.k, vd.d, rep.middle_degree}, cand.phi},
                              vd.hodge, std::nullopt};
            std::string out_path = emit_prefix + (cand.sign > 0 ? "_plus.json" : "_minus.json");
            std::ofstream out(out_path);
            if (!out) throw InputError("cannot write " + out_path);
            out << polynomial_to_json(pf).dump(2) << "\n";
        }
    }
    return 0;
}

int cmd_power(const std::string& path, long k, std::optional<long> e, const std::string& out_path,
              const GlobalOpts& g) {
    PolynomialFile pf = load_polynomial(path);
    RatPoly phik = power_map(pf.fp.phi, k);
    WeilContext ctx = pf.fp.ctx;
    ctx.k = ctx.k * std::abs(k);
    PolynomialFile out{pf.name.empty() ? "" : pf.name + "^(" + std::to_string(k) + ")",
                       FrobPolynomial{ctx, phik}, pf.hodge, pf.surface};
    Json j = polynomial_to_json(out);
    if (e) {
        ParityVerdict v = base_extension_parity_check(pf.fp.phi, k, pf.fp.ctx.p, *e);
        j["base_extension_parity"] = verdict_json(v);
    }
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw InputError("cannot write " + out_path);
        f << j.dump(2) << "\n";
        std::cout << "wrote " << out_path << "\n";
    } else {
        emit(j, g.mode == OutputMode::kText ? GlobalOpts{OutputMode::kPretty, g.tol, g.seed} : g);
    }
    return 0;
}

int cmd_compose(const std::string& fpath, const std::string& gpath, std::optional<long> e1,
                std::optional<long> e2, const std::string& out_path, const GlobalOpts& g) {
    PolynomialFile pa = load_polynomial(fpath);
    PolynomialFile pb = load_polynomial(gpath);
    if (pa.fp.ctx.p != pb.fp.ctx.p || pa.fp.ctx.k != pb.fp.ctx.k)
        throw InputError("compose: inputs must live over the same field");
    long d1 = pa.fp.ctx.d, d2 = pb.fp.ctx.d;
    if ((d1 - d2) % 2 != 0) throw InputError("compose: dimension parity mismatch");

    RatPoly fu = untwist(pa.fp);
    RatPoly gu = untwist(pb.fp);
    Json j;
    RatPoly composed;
    if (e1 && e2) {
        CompositionReport rep =
            product_parity_check(fu, d1, gu, d2, pa.fp.ctx.p, pa.fp.ctx.k, *e1, *e2);
        composed = rep.result;
        j["predicted_exponent"] = rep.predicted_exponent;
        j["hypotheses_ok"] = rep.hypotheses_ok;
        if (!rep.note.empty()) j["note"] = rep.note;
        j["product_parity"] = verdict_json(rep.verdict);
    } else {
        composed = product_map(fu, d1, gu, d2, pa.fp.ctx.p, pa.fp.ctx.k);
    }
    WeilContext ctx{pa.fp.ctx.p, pa.fp.ctx.k, d1 + d2, composed.degree()};
    PolynomialFile out{pa.name + "*" + pb.name, FrobPolynomial{ctx, composed}, std::nullopt, std::nullopt};
    Json pj = polynomial_to_json(out);
    for (auto& [key, val] : j.items()) pj[key] = val;
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw InputError("cannot write " + out_path);
        f << pj.dump(2) << "\n";
        std::cout << "wrote " << out_path << "\n";
    } else {
        emit(pj, g.mode == OutputMode::kText ? GlobalOpts{OutputMode::kPretty, g.tol, g.seed} : g);
    }
    return 0;
}

int cmd_pairing_lab(const std::vector<long>& primes, const std::vector<long>& ranks, long trials,
                    std::uint64_t seed, const GlobalOpts& g) {
    std::vector<BigInt> ps;
    for (long p : primes) {
        if (p == 2) throw InputError("pairing-lab: p = 2 is excluded (the characteristic-2 route is out of scope)");
        ps.emplace_back(p);
    }
    long cells = static_cast<long>(ps.size() * ranks.size());
    SweepSummary total = pairing_sweep_parallel(ps, ranks, trials, seed, thread_budget(cells));

    Json j{{"instances", total.instances},
           {"cor_det", Json{{"holds", total.cor_det_holds}, {"violations", total.cor_det_violations}}},
           {"hilf", Json{{"holds", total.hilf_holds},
                         {"violations", total.hilf_violations},
                         {"not_applicable", total.hilf_not_applicable}}},
           {"generation_failures", total.generation_failures},
           {"failing_seeds", total.failing_seeds}};
    if (g.mode == OutputMode::kText) {
        std::cout << "pairing sweep: " << total.instances << " instances\n"
                  << "  cor_det: " << total.cor_det_holds << " hold, " << total.cor_det_violations
                  << " violations\n"
                  << "  hilf:    " << total.hilf_holds << " hold, " << total.hilf_violations << " violations, "
                  << total.hilf_not_applicable << " not applicable\n";
        if (total.generation_failures) std::cout << "  generation failures: " << total.generation_failures << "\n";
    } else {
        emit(j, g);
    }
    return (total.cor_det_violations || total.hilf_violations) ? 1 : 0;
}

int cmd_demo_quadratic(long dmax, std::optional<long> single, const GlobalOpts& g) {
    std::vector<long> ds;
    if (single) {
        ds.push_back(*single);
    } else {
        for (long d = 2; d <= dmax; ++d) {
            bool squarefree = true;
            for (long f = 2; f * f <= d; ++f)
                if (d % (f * f) == 0) squarefree = false;
            if (squarefree) ds.push_back(d);
        }
    }
    Json rows = Json::array();
    bool all_ok = true;
    for (long d : ds) {
        QuadraticUnitReport r = quadratic_unit_demo(d);
        all_ok = all_ok && r.conforms;
        Json j{{"d", r.d},
               {"disc", r.disc.str()},
               {"unit", (r.unit_denom == 2 ? "(" : "") + r.unit_a.str() + "+" + r.unit_b.str() + "*sqrt(" +
                            std::to_string(d) + ")" + (r.unit_denom == 2 ? ")/2" : "")},
               {"unit_norm", r.unit_norm},
               {"two_minus_trace", r.value.str()},
               {"square_class", r.value_class.str()},
               {"conforms", r.conforms}};
        rows.push_back(j);
        if (g.mode == OutputMode::kText)
            std::cout << "D=" << r.d << "  2-tr(eps)=" << r.value.str() << "  class=" << r.value_class.str()
                      << "  disc=" << r.disc.str() << "  " << (r.conforms ? "conforms" : "VIOLATION") << "\n";
    }
    if (g.mode != OutputMode::kText) emit(Json{{"results", rows}, {"all_conform", all_ok}}, g);
    return all_ok ? 0 : 1;
}

int cmd_artin_tate(const std::string& path, std::optional<long> alpha_flag, const GlobalOpts& g) {
    PolynomialFile pf = load_polynomial(path);
    std::optional<long> a = alpha_flag;
    if (!a && pf.surface) a = alpha(*pf.surface);
    if (!a) throw InputError("artin-tate: need --alpha or a 'surface' block in the polynomial file");
    if (pf.fp.ctx.d != 2) throw InputError("artin-tate: input must be a surface polynomial (dim = 2)");

    ParityVerdict v = test_artin_tate(pf.fp, *a);
    SquareClass disc = disc_square_class(pf.fp, *a);
    BaseChangeReport bc = base_change_consistency(pf.fp, *a);
    Json j{{"alpha", *a},
           {"artin_tate", verdict_json(v)},
           {"disc_square_class", disc.str()},
           {"base_change", Json{{"verdict", base_change_verdict_str(bc.verdict)},
                                {"disc_base", bc.verdict == BaseChangeVerdict::kNotApplicable ? "" : bc.disc_base.str()},
                                {"disc_extended",
                                 bc.verdict == BaseChangeVerdict::kNotApplicable ? "" : bc.disc_extended.str()}}}};
    if (g.mode == OutputMode::kText) {
        print_verdict_line("artin_tate (alpha=" + std::to_string(*a) + ")", v);
        std::cout << "  disc_square_class: " << disc.str() << "\n"
                  << "  base_change: " << base_change_verdict_str(bc.verdict);
        if (bc.verdict != BaseChangeVerdict::kNotApplicable)
            std::cout << "  disc_base=" << bc.disc_base.str() << " disc_extended=" << bc.disc_extended.str();
        std::cout << "\n";
    } else {
        emit(j, g);
    }
    return (v.failed() || bc.verdict == BaseChangeVerdict::kContradiction) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weilcheck: exact admissibility and square-class parity tests for Frobenius characteristic polynomials"};
    app.require_subcommand(1);

    GlobalOpts g;
    bool json_flag = false, pretty_flag = false;
    app.add_flag("--json", json_flag, "machine-readable output");
    app.add_flag("--pretty", pretty_flag, "indented JSON output");
    app.add_option("--tol", g.tol, "numeric advisory tolerance (default 1e-6)");
    app.add_option("--seed", g.seed, "master seed for randomized commands");

    std::string path, second_path, out_path, emit_prefix;
    std::optional<long> alpha_flag, e_flag, e1_flag, e2_flag;
    long power_k = 2;

    auto* check = app.add_subcommand("check", "run all applicable checks on a polynomial file");
    check->add_option("file", path)->required();
    check->add_option("--alpha", alpha_flag, "Milne alpha for the Artin-Tate layer (surfaces)");

    auto* rec = app.add_subcommand("reconstruct", "reconstruct candidates from a variety descriptor");
    rec->add_option("file", path)->required();
    rec->add_option("--emit-candidates", emit_prefix, "write each candidate as polynomial JSON with this prefix");

    auto* power = app.add_subcommand("power", "base extension: polynomial with roots z^k");
    power->add_option("file", path)->required();
    power->add_option("--k", power_k, "extension degree (nonzero; negative uses the reversal)")->required();
    power->add_option("--e", e_flag, "run the base-extension parity check with this exponent");
    power->add_option("--out", out_path, "output file (default: stdout)");

    auto* compose = app.add_subcommand("compose", "composed product of two polynomial files");
    compose->add_option("f", path)->required();
    compose->add_option("g", second_path)->required();
    compose->add_option("--e1", e1_flag, "first factor's exponent (enables the parity check)");
    compose->add_option("--e2", e2_flag, "second factor's exponent (enables the parity check)");
    compose->add_option("--out", out_path, "output file (default: stdout)");

    auto* lab = app.add_subcommand("pairing-lab", "seeded sweep over random pairing-orthogonal lattice maps");
    std::vector<long> primes{3, 5, 7, 11};
    std::vector<long> ranks{2, 4, 6};
    long trials = 100;
    lab->add_option("--primes", primes, "odd primes to localize at")->delimiter(',');
    lab->add_option("--ranks", ranks, "lattice ranks")->delimiter(',');
    lab->add_option("--trials", trials, "instances per (prime, rank) cell");

    auto* demo = app.add_subcommand("demo-quadratic", "2 - tr(eps) for fundamental units of real quadratic fields");
    long dmax = 200;
    std::optional<long> single_d;
    demo->add_option("--dmax", dmax, "sweep all squarefree 1 < D <= dmax");
    demo->add_option("--d", single_d, "single radicand");

    auto* at = app.add_subcommand("artin-tate", "Artin-Tate square class and base-change consistency (surfaces)");
    at->add_option("file", path)->required();
    at->add_option("--alpha", alpha_flag, "Milne alpha (default: derived from the file's surface block)");

    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (pretty_flag)
        g.mode = OutputMode::kPretty;
    else if (json_flag)
        g.mode = OutputMode::kJson;

    try {
        if (*check) return cmd_check(path, g, alpha_flag);
        if (*rec) return cmd_reconstruct(path, g, emit_prefix);
        if (*power) return cmd_power(path, power_k, e_flag, out_path, g);
        if (*compose) return cmd_compose(path, second_path, e1_flag, e2_flag, out_path, g);
        if (*lab) return cmd_pairing_lab(primes, ranks, trials, g.seed, g);
        if (*demo) return cmd_demo_quadratic(dmax, single_d, g);
        if (*at) return cmd_artin_tate(path, alpha_flag, g);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
