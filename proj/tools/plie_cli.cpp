// plie: construct and verify multiplicative Poisson structures on jet groups
// and the matching Lie bialgebra data on the Witt algebra, in exact rational
// arithmetic.
//
// Exit codes: 0 pass, 1 verification failure, 2 solver inconsistency,
// 3 input error.

#include "plie/bialgebra.hpp"
#include "plie/json_io.hpp"
#include "plie/report.hpp"
#include "plie/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace plie;

namespace {

constexpr int EXIT_PASS = 0;
constexpr int EXIT_VERIFY_FAIL = 1;
constexpr int EXIT_SOLVER_INCONSISTENT = 2;
constexpr int EXIT_INPUT_ERROR = 3;

std::vector<Rational> parse_rational_list(const std::string& csv) {
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(Rational::parse(item));
    }
    return out;
}

MuSeq build_mu(int d, int N, const std::vector<Rational>& free_values) {
    MuSeq m;
    m.d = d;
    m.N = N;
    m.mu.assign(N, Rational(0));
    for (std::size_t k = 0; k < free_values.size(); ++k) {
        int idx = d + 1 + static_cast<int>(k);
        if (idx > N) break;
        m.mu[idx - 1] = free_values[k];
    }
    return m;
}

ojson checks_json(const std::vector<CheckResult>& checks) {
    ojson arr = ojson::array();
    for (const CheckResult& c : checks) {
        ojson e{{"name", c.name}};
        if (!c.indices.empty()) e["indices"] = c.indices;
        e["status"] = c.pass ? "pass" : "fail";
        if (!c.residual.empty()) e["residual"] = c.residual;
        if (c.trusted >= 0) e["trusted_degree"] = c.trusted;
        arr.push_back(e);
    }
    return arr;
}

int run_gen(const std::string& family, const std::string& kind_flag, int d, int N,
            const std::string& mu_csv, const std::string& lam_str, int cap,
            const std::string& mu_mode, const std::string& out_path) {
    ojson out;
    std::string kind = kind_flag;
    MuRelationMode mode = mu_mode == "solve" ? MuRelationMode::Solve : MuRelationMode::Strict;

    if (family == "special") {
        if (kind.empty()) kind = "omega";
        if (kind != "omega") throw std::invalid_argument("family 'special' emits kind=omega");
        out = omega_to_json(omega_special(d, N), d);
    } else if (family == "mu") {
        MuSeq m = build_mu(d, N, parse_rational_list(mu_csv));
        if (kind.empty()) kind = "lambda";
        if (kind == "mu") {
            mu_validate(m);
            out = mu_to_json(m);
        } else {
            LambdaTable t = lambda_from_mu(m, mode);
            if (kind == "lambda")
                out = lambda_to_json(t, d);
            else if (kind == "omega")
                out = omega_to_json(omega_from_lambda(t), d);
            else if (kind == "phi")
                out = phi_to_json(phi_from_lambda(t));
            else if (kind == "r")
                out = rmatrix_to_json(r_from_lambda(t));
            else
                throw std::invalid_argument("family 'mu': kind must be mu|lambda|omega|phi|r");
        }
    } else if (family == "phi-lambda") {
        if (kind.empty()) kind = "phi";
        Rational lam = Rational::parse(lam_str.empty() ? "0" : lam_str);
        PhiSeries phi = phi_deformed(d, lam, 2 * N);
        out = phi_to_json(phi);
        out["d"] = d;
        out["lam_def"] = lam.str();
    } else if (family == "phi-basic") {
        if (kind.empty()) kind = "phi";
        out = phi_to_json(phi_basic(d));
        out["d"] = d;
    } else if (family == "alpha-basic") {
        out = alpha_to_json(alpha_basic_table(d, cap));
        out["d"] = d;
    } else if (family == "alpha-deformed") {
        Rational lam = Rational::parse(lam_str.empty() ? "0" : lam_str);
        out = alpha_to_json(alpha_deformed_table(d, lam, cap, 2 * cap));
        out["d"] = d;
        out["lam_def"] = lam.str();
    } else {
        throw std::invalid_argument("unknown family: " + family);
    }
    write_json_file(out_path, out);
    std::cout << "wrote " << out_path << " (kind " << structure_kind(out) << ")\n";
    return EXIT_PASS;
}

int run_verify(const std::string& in_path, const std::string& checks_csv, int sym_max, int samples,
               std::uint64_t seed, int work_ord, const std::string& out_path) {
    ojson j = load_json_file(in_path);
    std::string kind = structure_kind(j);
    std::vector<CheckResult> checks;

    auto selected = [&](const std::string& name) {
        if (checks_csv.empty() || checks_csv == "all") return true;
        std::stringstream ss(checks_csv);
        std::string item;
        while (std::getline(ss, item, ','))
            if (item == name) return true;
        return false;
    };

    auto verify_omega = [&](const OmegaTable& w) {
        if (selected("jacobi")) {
            auto v = check_jacobi(w);
            checks.insert(checks.end(), v.begin(), v.end());
        }
        if (selected("mult")) {
            if (w.N() <= sym_max) {
                auto v = check_mult_symbolic(w);
                checks.insert(checks.end(), v.begin(), v.end());
            } else {
                auto v = check_mult_random(w, seed, samples);
                checks.insert(checks.end(), v.begin(), v.end());
            }
        }
        if (selected("identity")) checks.push_back(check_omega_identity(w));
        if (selected("locality")) checks.push_back(check_omega_locality(w));
    };

    if (kind == "omega") {
        verify_omega(omega_from_json(j));
    } else if (kind == "lambda") {
        verify_omega(omega_from_lambda(lambda_from_json(j)));
    } else if (kind == "mu") {
        MuSeq m = mu_from_json(j);
        verify_omega(omega_from_lambda(lambda_from_mu(m)));
    } else if (kind == "phi") {
        PhiSeries phi = phi_from_json(j);
        checks.push_back(check_phi_invariants(phi, "input"));
        if (selected("pde10")) checks.push_back(check_phi_pde(phi, work_ord, "input"));
    } else if (kind == "r") {
        checks.push_back(check_cybe(rmatrix_from_json(j), "input"));
    } else if (kind == "alpha") {
        AlphaTable a = alpha_from_json(j);
        int mmax = a.n_cap / 2;
        if (selected("cocycle")) {
            auto v = check_cocycle(a, mmax);
            checks.insert(checks.end(), v.begin(), v.end());
        }
        if (selected("cojacobi")) {
            auto v = check_cojacobi(a, mmax);
            checks.insert(checks.end(), v.begin(), v.end());
        }
    } else {
        throw std::invalid_argument("verify: unsupported kind " + kind);
    }

    bool pass = all_pass(checks);
    ojson report{{"command", "verify"},
                 {"input", in_path},
                 {"kind", kind},
                 {"seed", seed},
                 {"pass", pass},
                 {"checks", checks_json(checks)}};
    if (!out_path.empty()) write_json_file(out_path, report);
    int fails = 0;
    for (const CheckResult& c : checks)
        if (!c.pass) {
            if (fails == 0) std::cout << "FAIL:\n";
            std::cout << "  " << c.name;
            for (int i : c.indices) std::cout << " " << i;
            if (!c.residual.empty()) std::cout << "  residual: " << c.residual;
            std::cout << "\n";
            ++fails;
        }
    std::cout << (pass ? "verify: all checks passed (" : "verify: FAILED (")
              << checks.size() << " checks, " << fails << " failures)\n";
    return pass ? EXIT_PASS : EXIT_VERIFY_FAIL;
}

int run_solve_r(const std::string& in_path, int wmax, const std::string& out_path) {
    ojson j = load_json_file(in_path);
    if (structure_kind(j) != "alpha")
        throw std::invalid_argument("solve-r expects an alpha structure file");
    AlphaTable a = alpha_from_json(j);
    SolveResult sol = solve_r_from_cocycle(a, wmax);
    ojson rep = solve_result_to_json(sol);
    if (!out_path.empty()) write_json_file(out_path, rep);
    for (const WeightReport& w : sol.weights)
        std::cout << "weight " << w.weight << ": " << (w.solved ? "solved" : "INCONSISTENT")
                  << ", kernel dim " << w.kernel_dim << "\n";
    if (!sol.consistent) {
        std::cout << "solve-r: inconsistent cocycle (first offending grade "
                  << sol.offending_grade << ")\n";
        return EXIT_SOLVER_INCONSISTENT;
    }
    std::cout << "solve-r: consistent; r has " << sol.r.entries().size() << " entries\n";
    return EXIT_PASS;
}

int run_report_cmd(const ReportConfig& cfg, const std::string& out_path, bool check_determinism) {
    ReportOutput rep = run_report(cfg);
    if (check_determinism) {
        ReportConfig small = reduced_report_config(cfg.seed);
        small.exec = cfg.exec;
        std::string a = run_report(small).payload.dump();
        std::string b = run_report(small).payload.dump();
        CriterionResult c;
        c.id = 11;
        c.title = "determinism (identical payload for identical seed)";
        c.pass = a == b;
        c.detail = "reduced-size double run, " + std::to_string(a.size()) + " bytes";
        rep.criteria.push_back(c);
        rep.payload["determinism"] = ojson{{"pass", c.pass}, {"payload_bytes", a.size()}};
        if (!c.pass) rep.all_pass = false;
        rep.payload["all_pass"] = rep.all_pass;
    }
    for (const CriterionResult& c : rep.criteria)
        std::cout << "[" << (c.pass ? "PASS" : "FAIL") << "] criterion " << c.id << ": " << c.title
                  << " (" << c.detail << ")\n";
    if (!out_path.empty()) write_json_file(out_path, rep.payload);
    std::cout << (rep.all_pass ? "report: all criteria passed\n" : "report: FAILURES present\n");
    return rep.all_pass ? EXIT_PASS : EXIT_VERIFY_FAIL;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Poisson structures on jet groups: generate and verify"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a structure file");
    std::string family, kind, mu_csv, lam_str, mu_mode = "strict", out_path = "structure.json";
    int d = 1, N = 8, cap = 12;
    gen->add_option("--family", family,
                    "special | mu | phi-lambda | phi-basic | alpha-basic | alpha-deformed")
        ->required();
    gen->add_option("--kind", kind, "output representation (family dependent)");
    gen->add_option("--d", d, "family index d >= 1");
    gen->add_option("--N", N, "group truncation order");
    gen->add_option("--mu", mu_csv, "comma list of mu_{d+1}, mu_{d+2}, ... as p/q");
    gen->add_option("--lambda", lam_str, "deformation parameter (p/q)");
    gen->add_option("--cap", cap, "grade cap for alpha tables");
    gen->add_option("--mu-mode", mu_mode, "strict | solve (dependent mu_{2d+1})");
    gen->add_option("--out", out_path, "output path");

    // verify
    auto* ver = app.add_subcommand("verify", "run residual checks on a structure file");
    std::string in_path, checks = "all", vout;
    int sym_max = 6, samples = 50, work_ord = 13;
    std::uint64_t seed = 20240915;
    ver->add_option("--in", in_path, "structure file")->required();
    ver->add_option("--checks", checks, "comma list: jacobi,mult,identity,locality,pde10,cocycle,cojacobi");
    ver->add_option("--sym-max", sym_max, "largest N verified symbolically");
    ver->add_option("--samples", samples, "random samples beyond the symbolic cap");
    ver->add_option("--seed", seed, "random seed (echoed in the report)");
    ver->add_option("--ord", work_ord, "working order for series residuals");
    ver->add_option("--out", vout, "report path");

    // solve-r
    auto* slv = app.add_subcommand("solve-r", "solve alpha(e_n) = e_n.r for r");
    std::string sin, sout;
    int wmax = 12;
    slv->add_option("--in", sin, "alpha structure file")->required();
    slv->add_option("--wmax", wmax, "largest weight solved");
    slv->add_option("--out", sout, "solver report path");

    // report
    auto* repc = app.add_subcommand("report", "run the consolidated verification suite");
    ReportConfig cfg;
    std::string rout;
    bool serial = false, skip_det = false;
    repc->add_option("--N", cfg.N, "group truncation");
    repc->add_option("--sym-N", cfg.sym_N, "symbolic multiplicativity cap");
    repc->add_option("--grade-cap", cfg.grade_cap, "bialgebra grade window");
    repc->add_option("--seed", cfg.seed, "random seed");
    repc->add_option("--samples", cfg.mult_samples, "random multiplicativity samples");
    repc->add_option("--out", rout, "report JSON path");
    repc->add_flag("--serial", serial, "disable the worker pool");
    repc->add_flag("--skip-determinism", skip_det, "skip the double-run determinism check");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return run_gen(family, kind, d, N, mu_csv, lam_str, cap, mu_mode, out_path);
        if (ver->parsed()) return run_verify(in_path, checks, sym_max, samples, seed, work_ord, vout);
        if (slv->parsed()) return run_solve_r(sin, wmax, sout);
        if (repc->parsed()) {
            if (serial) cfg.exec = Exec::Serial;
            return run_report_cmd(cfg, rout, !skip_det);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_INPUT_ERROR;
    }
    return EXIT_INPUT_ERROR;
}
