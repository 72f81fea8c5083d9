// nilfold: bifurcation analysis of the degree-4 nilpotent equilibrium family
// in two-degree-of-freedom Hamiltonian systems. Every subcommand writes
// deterministic CSV or JSON; see README.md for the output schemas.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include <nlohmann/json.hpp>

#include "nilfold/dynamics.hpp"
#include "nilfold/grid.hpp"
#include "nilfold/io.hpp"
#include "nilfold/normalform.hpp"
#include "nilfold/reduced.hpp"
#include "nilfold/unfolding.hpp"
#include "nilfold/verify.hpp"

using nlohmann::json;
using namespace nilfold;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitBadArguments = 2;

struct CommonOpts {
    double a1 = 1.0, a2 = 0.0, a3 = 0.0;
    double kappa = 0.0, mu = 0.0, nu = 0.0;
    double r = 0.0;
    double tol = 1e-9;
    std::string grid = "-0.25:0.25:40";
    std::string out;
    std::string format = "csv";
    int threads = 0;
};

CubicCoeffs cubic(const CommonOpts& o) { return {o.a1, o.a2, o.a3}; }

std::ostream& open_out(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

// Config file values become option defaults before parsing, so explicit
// flags always win. Keys match long option names without the leading dashes.
void apply_config_file(CLI::App& app, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file: " + path);
    json cfg = json::parse(in);
    for (auto& [key, value] : cfg.items()) {
        std::string name = "--" + key;
        std::string text = value.is_string() ? value.get<std::string>() : value.dump();
        if (CLI::Option* opt = app.get_option_no_throw(name)) {
            opt->default_val(text);
            continue;
        }
        for (CLI::App* sub : app.get_subcommands({})) {
            if (CLI::Option* opt = sub->get_option_no_throw(name)) opt->default_val(text);
        }
    }
}

void add_coeff_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--a1", o.a1, "cubic coefficient a1")->capture_default_str();
    cmd->add_option("--a2", o.a2, "cubic coefficient a2")->capture_default_str();
    cmd->add_option("--a3", o.a3, "cubic coefficient a3")->capture_default_str();
}

void add_output_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--out", o.out, "output path (stdout when omitted)");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

json check_report(const std::vector<verify::CheckResult>& results) {
    json checks = json::array();
    for (const auto& r : results)
        checks.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    return {{"status", verify::all_passed(results) ? "ok" : "failed"}, {"checks", checks}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"unfolding analysis of the degree-4 nilpotent Hamiltonian equilibrium"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (defaults; flags override)");

    CommonOpts o;

    // ---- verify ------------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify", "run the exact-algebra verification battery");
    bool verify_json = false;
    std::string corrupt;
    cmd_verify->add_flag("--json", verify_json, "machine-readable report");
    cmd_verify->add_option("--corrupt", corrupt,
                           "test hook: corrupt a named object (matrix_P)")
        ->check(CLI::IsMember({"matrix_P"}));

    // ---- classify ----------------------------------------------------------
    auto* cmd_classify = app.add_subcommand("classify", "equilibria and certificates at a parameter point");
    add_coeff_flags(cmd_classify, o);
    cmd_classify->add_option("--kappa", o.kappa, "parameter kappa")->capture_default_str();
    cmd_classify->add_option("--mu", o.mu, "parameter mu")->capture_default_str();
    cmd_classify->add_option("--nu", o.nu, "parameter nu")->capture_default_str();
    cmd_classify->add_option("--tol", o.tol, "surface proximity tolerance")->capture_default_str();
    bool classify_json = false;
    cmd_classify->add_flag("--json", classify_json, "machine-readable report");

    // ---- surfaces ------------------------------------------------------------
    auto* cmd_surfaces = app.add_subcommand(
        "surfaces", "sample the surface of equilibria over a (mu,nu,q0) grid");
    add_coeff_flags(cmd_surfaces, o);
    std::string grid_mu, grid_nu, grid_q0;
    cmd_surfaces->add_option("--grid", o.grid, "default min:max:steps for every axis")
        ->capture_default_str();
    cmd_surfaces->add_option("--grid-mu", grid_mu, "override for the mu axis");
    cmd_surfaces->add_option("--grid-nu", grid_nu, "override for the nu axis");
    cmd_surfaces->add_option("--grid-q0", grid_q0, "override for the q0 axis");
    cmd_surfaces->add_option("--tol", o.tol, "fold/Hopf proximity tolerance")->capture_default_str();
    cmd_surfaces->add_option("--threads", o.threads, "0 = OpenMP default")->capture_default_str();
    add_output_flags(cmd_surfaces, o);

    // ---- eigengrid -------------------------------------------------------------
    auto* cmd_eigengrid = app.add_subcommand(
        "eigengrid", "classify the linear versal chart J0 over a (mu0,nu0) grid");
    cmd_eigengrid->add_option("--grid", o.grid, "min:max:steps for both axes")->capture_default_str();
    cmd_eigengrid->add_option("--tol", o.tol, "classification tolerance")->capture_default_str();
    cmd_eigengrid->add_option("--threads", o.threads, "0 = OpenMP default")->capture_default_str();
    add_output_flags(cmd_eigengrid, o);

    // ---- reduced ---------------------------------------------------------------
    auto* cmd_reduced = app.add_subcommand(
        "reduced", "two-parameter reduced family: alpha-curves and region grid");
    cmd_reduced->add_option("--r", o.r, "reduction parameter r")->capture_default_str();
    double beta_max = 1.0;
    int beta_steps = 32;
    cmd_reduced->add_option("--beta-max", beta_max, "beta range is [-beta-max, beta-max]")
        ->capture_default_str();
    cmd_reduced->add_option("--beta-steps", beta_steps, "number of beta intervals")
        ->capture_default_str();
    cmd_reduced->add_option("--grid", o.grid, "q0 axis of the region grid")->capture_default_str();
    cmd_reduced->add_option("--threads", o.threads, "0 = OpenMP default")->capture_default_str();
    std::string what = "curves";
    cmd_reduced->add_option("--what", what, "which table to write")
        ->check(CLI::IsMember({"curves", "grid"}))
        ->capture_default_str();
    add_output_flags(cmd_reduced, o);

    // ---- normalize ---------------------------------------------------------------
    auto* cmd_normalize = app.add_subcommand(
        "normalize", "Lie normalization at a Hopf-surface point; JSON report");
    add_coeff_flags(cmd_normalize, o);
    double nf_nu = 0.1, nf_q0 = 0.0;
    int nf_degree = 6;
    cmd_normalize->add_option("--nu", nf_nu, "parameter nu (Q must be negative)")
        ->capture_default_str();
    cmd_normalize->add_option("--q0", nf_q0, "equilibrium coordinate q0")->capture_default_str();
    cmd_normalize->add_option("--max-degree", nf_degree, "graded truncation degree")
        ->capture_default_str();
    cmd_normalize->add_option("--out", o.out, "output path (stdout when omitted)");

    // ---- simulate ------------------------------------------------------------------
    auto* cmd_simulate = app.add_subcommand("simulate", "integrate a trajectory; CSV t,q1,q2,p1,p2,H");
    add_coeff_flags(cmd_simulate, o);
    int example = 0;
    double sim_mu = 0.04, dt = 1e-3, horizon = 100.0;
    std::string method = "rk4";
    std::vector<double> x0{0, 0, 0, 0};
    cmd_simulate->add_option("--example", example, "pedagogical system 1 or 2 (0 = H_{kappa,mu,nu})")
        ->check(CLI::Range(0, 2))
        ->capture_default_str();
    cmd_simulate->add_option("--kappa", o.kappa, "parameter kappa")->capture_default_str();
    cmd_simulate->add_option("--mu", sim_mu, "parameter mu")->capture_default_str();
    cmd_simulate->add_option("--nu", o.nu, "parameter nu")->capture_default_str();
    cmd_simulate->add_option("--x0", x0, "initial state q1 q2 p1 p2")->expected(4);
    cmd_simulate->add_option("--dt", dt, "time step")->capture_default_str();
    cmd_simulate->add_option("--T", horizon, "time horizon")->capture_default_str();
    cmd_simulate->add_option("--method", method, "integrator")
        ->check(CLI::IsMember({"rk4", "leapfrog-split"}))
        ->capture_default_str();
    add_output_flags(cmd_simulate, o);

    // pre-scan for --config so its values act as defaults during the real parse
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            try {
                apply_config_file(app, argv[i + 1]);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << '\n';
                return kExitBadArguments;
            }
        }
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadArguments;
    }

    try {
        if (*cmd_verify) {
            verify::Options vo;
            vo.corrupt_matrix_P = corrupt == "matrix_P";
            auto results = verify::run_battery(vo);
            if (verify_json) {
                std::cout << check_report(results).dump(2) << '\n';
            } else {
                for (const auto& r : results)
                    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name
                              << (r.detail.empty() ? "" : "  (" + r.detail + ")") << '\n';
                std::cout << (verify::all_passed(results) ? "all checks passed"
                                                          : "verification FAILED")
                          << '\n';
            }
            if (!verify::all_passed(results)) {
                for (const auto& r : results)
                    if (!r.pass) std::cerr << "failed: " << r.name << '\n';
                return kExitVerifyFailure;
            }
            return kExitOk;
        }

        if (*cmd_classify) {
            CubicCoeffs c = cubic(o);
            ParamsKMN p{o.kappa, o.mu, o.nu};
            json report;
            report["parameters"] = {{"kappa", o.kappa}, {"mu", o.mu}, {"nu", o.nu},
                                    {"a1", o.a1},       {"a2", o.a2}, {"a3", o.a3}};
            json eqs = json::array();
            std::vector<EquilibriumRecord> records;
            try {
                records = solve_equilibria(p, c);
            } catch (const std::invalid_argument& e) {
                report["error"] = e.what();
            }
            for (const auto& rec : records) {
                json e;
                e["q0"] = rec.q0;
                e["multiplicity"] = rec.multiplicity;
                e["state"] = {rec.state[0], rec.state[1], rec.state[2], rec.state[3]};
                json eigs = json::array();
                for (const auto& l : rec.eigenvalues) eigs.push_back({l.real(), l.imag()});
                e["eigenvalues"] = eigs;
                e["config"] = config_name(rec.config);
                e["Q"] = rec.Q;
                e["P"] = rec.P;
                double df = o.mu - fold_mu(o.nu, rec.q0, c);
                double dh = o.mu - hopf_mu(o.nu, rec.q0, c);
                e["fold_distance"] = df;
                e["hopf_distance"] = dh;
                e["on_fold"] = std::abs(df) <= o.tol;
                e["on_hopf"] = std::abs(dh) <= o.tol && rec.Q < 0;
                if (rec.Q < 0) {
                    double cm = cm_coefficient(o.nu, rec.q0, c);
                    e["C_m"] = cm;
                    e["hopf_type"] = cm > 0 ? "supercritical (C_m > 0)" : "subcritical (C_m < 0)";
                }
                double lambda = fold_lambda(o.nu, rec.q0, c);
                e["lambda"] = lambda;
                if (std::abs(df) <= o.tol && lambda != 0) {
                    auto branch = lambda > 0 ? FoldBranch::Hyperbolic : FoldBranch::Elliptic;
                    e["fold_branch"] = lambda > 0 ? "hyperbolic" : "elliptic";
                    e["fold_cubic_coefficient"] = fold_cubic_coefficient(o.nu, rec.q0, c, branch);
                }
                eqs.push_back(e);
            }
            report["equilibria"] = eqs;
            if (records.empty() && !report.contains("error")) report["note"] = "no equilibria";
            if (classify_json) {
                std::cout << report.dump(2) << '\n';
            } else {
                std::cout << "equilibria: " << records.size() << '\n';
                for (const auto& rec : records) {
                    std::cout << "  q0 = " << io::fmt17(rec.q0) << "  config = "
                              << config_name(rec.config);
                    if (rec.Q < 0) {
                        double cm = cm_coefficient(o.nu, rec.q0, c);
                        std::cout << (cm > 0 ? "  supercritical (C_m > 0)" : "  subcritical (C_m < 0)");
                    }
                    std::cout << '\n';
                }
                if (records.empty()) std::cout << "  no equilibria\n";
            }
            return kExitOk;
        }

        if (*cmd_surfaces) {
            auto def = grid::parse_range(o.grid);
            auto gmu = grid_mu.empty() ? def : grid::parse_range(grid_mu);
            auto gnu = grid_nu.empty() ? def : grid::parse_range(grid_nu);
            auto gq0 = grid_q0.empty() ? def : grid::parse_range(grid_q0);
            auto rows = grid::surface_sample(cubic(o), gmu, gnu, gq0, o.tol, o.threads);
            std::ofstream file;
            auto& os = open_out(o.out, file);
            if (o.format == "csv")
                io::write_surface_csv(os, rows);
            else
                io::write_surface_json(os, rows);
            return kExitOk;
        }

        if (*cmd_eigengrid) {
            auto g = grid::parse_range(o.grid);
            auto rows = grid::eigengrid(g, g, o.tol, o.threads);
            std::ofstream file;
            auto& os = open_out(o.out, file);
            if (o.format == "csv")
                io::write_eigengrid_csv(os, rows);
            else
                io::write_eigengrid_json(os, rows);
            return kExitOk;
        }

        if (*cmd_reduced) {
            grid::Range beta{-beta_max, beta_max, beta_steps};
            std::ofstream file;
            auto& os = open_out(o.out, file);
            if (what == "curves") {
                auto rows = grid::reduced_curves(beta, o.r);
                if (o.format == "csv")
                    io::write_reduced_curves_csv(os, rows);
                else
                    io::write_reduced_curves_json(os, rows);
            } else {
                auto gq0 = grid::parse_range(o.grid);
                auto rows = grid::reduced_grid(beta, gq0, o.r, o.threads);
                if (o.format == "csv")
                    io::write_reduced_grid_csv(os, rows);
                else
                    io::write_reduced_grid_json(os, rows);
            }
            return kExitOk;
        }

        if (*cmd_normalize) {
            auto res = normalform::hopf_pipeline(nf_nu, nf_q0, cubic(o), nf_degree);
            json rep;
            rep["parameters"] = {{"nu", nf_nu}, {"q0", nf_q0}, {"a1", o.a1}, {"a2", o.a2},
                                 {"a3", o.a3}, {"mu_h", res.mu_h}};
            rep["omega"] = res.omega;
            rep["coefficients"] = {{"S", res.report.S},
                                   {"N", res.report.N},
                                   {"M", res.report.M},
                                   {"M2", res.report.M2},
                                   {"SM", res.report.SM},
                                   {"S2", res.report.S2}};
            rep["closed_form_M2"] = cm_coefficient(nf_nu, nf_q0, cubic(o));
            json gens = json::array();
            for (const auto& g : res.nf.generators)
                gens.push_back({{"terms", g.term_count()},
                                {"min_graded_degree", g.min_graded_degree()},
                                {"max_abs_coeff", g.max_abs_coeff()}});
            rep["generators_summary"] = gens;
            std::ofstream file;
            auto& os = open_out(o.out, file);
            os << rep.dump(2) << '\n';
            return kExitOk;
        }

        if (*cmd_simulate) {
            PolyD H;
            if (example == 1)
                H = dynamics::example1_hamiltonian(sim_mu);
            else if (example == 2)
                H = dynamics::example2_hamiltonian(sim_mu);
            else
                H = hamiltonian(ParamsKMN{o.kappa, sim_mu, o.nu}, cubic(o));
            auto m = method == "rk4" ? dynamics::Method::Rk4 : dynamics::Method::LeapfrogSplit;
            auto traj = dynamics::integrate(H, {x0[0], x0[1], x0[2], x0[3]}, dt, horizon, m);
            std::ofstream file;
            auto& os = open_out(o.out, file);
            if (o.format == "csv")
                io::write_trajectory_csv(os, traj);
            else
                io::write_trajectory_json(os, traj);
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadArguments;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerifyFailure;
    }
    return kExitBadArguments;
}
