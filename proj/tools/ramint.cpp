// ramint: command-line front end for the Ramanujan-integral toolkit.
//
// Subcommands: eval, coeffs, asym-compare, verify, figure, scan-alpha,
// antideriv, certificate.  Exit codes: 0 success / all checks pass,
// 1 inequality violation, 2 numerical or configuration failure.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ramanujan/asymptotics.hpp"
#include "ramanujan/config.hpp"
#include "ramanujan/csv.hpp"
#include "ramanujan/integral.hpp"
#include "ramanujan/special.hpp"
#include "ramanujan/svg.hpp"
#include "ramanujan/turan.hpp"
#include "ramanujan/verify.hpp"
#include "ramanujan/version.hpp"

namespace {

namespace fs = std::filesystem;
using namespace ramanujan;

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_failure = 2;

struct GlobalOptions {
    double tol = 0.0;        // 0: keep library defaults
    std::string out_dir = ".";
    std::string format = "csv";  // csv | svg | both

    quad::QuadratureConfig quad_config() const {
        quad::QuadratureConfig cfg;
        if (tol > 0.0) {
            cfg.abs_tol = tol;
            cfg.rel_tol = tol;
        }
        return cfg;
    }

    fs::path resolved_out_dir() const {
        // environment override for the output directory only
        if (const char* env = std::getenv("RAMINT_OUTPUT_DIR"); env && *env)
            return fs::path(env);
        return fs::path(out_dir);
    }
};

std::vector<double> log_grid(double lo, double hi, int points) {
    std::vector<double> g;
    for (int i = 0; i < points; ++i)
        g.push_back(std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (points - 1)));
    return g;
}

// geometric grid that contains the point 1 exactly (the zero crossing of
// phi_1' sits there and the figure data must sample it)
std::vector<double> log_grid_through_one(double lo, double hi, int half_points) {
    auto left = log_grid(lo, 1.0, half_points);
    auto right = log_grid(1.0, hi, half_points);
    left.pop_back();
    left.insert(left.end(), right.begin(), right.end());
    return left;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path.string());
    out << content;
}

int emit(const GlobalOptions& g, const std::string& stem, const std::string& csv_text,
         const std::string& svg_text) {
    const fs::path dir = g.resolved_out_dir();
    fs::create_directories(dir);
    if (g.format == "csv" || g.format == "both")
        write_file(dir / (stem + ".csv"), csv_text);
    if (g.format == "svg" || g.format == "both")
        write_file(dir / (stem + ".svg"), svg_text);
    return exit_ok;
}

// ------------------------------------------------------------------ eval

int cmd_eval(const GlobalOptions& g, int n, const std::vector<double>& xs,
             const std::string& out_file) {
    const auto cfg = g.quad_config();
    csv::Writer w({"x", "value", "abs_error"});
    bool all_converged = true;
    for (double x : xs) {
        const auto ev = eval_derivative(n, x, cfg);
        all_converged = all_converged && ev.converged;
        w.row({csv::format(x), csv::format(ev.value), csv::format(ev.abs_error)});
    }
    if (out_file.empty())
        std::cout << w.str();
    else
        write_file(out_file, w.str());
    return all_converged ? exit_ok : exit_failure;
}

// ---------------------------------------------------------------- coeffs

int cmd_coeffs(const GlobalOptions&, const std::string& a_text, int n, int K,
               const std::string& out_file) {
    const double a = (a_text == "pi") ? asym::default_a : std::stod(a_text);
    const auto c = asym::phi_coefficients(a, n, K);
    csv::Writer w({"k", "phi_k"});
    for (int k = 0; k <= K; ++k)
        w.row({std::to_string(k), csv::format(c.coeffs[static_cast<std::size_t>(k)])});
    if (out_file.empty())
        std::cout << w.str();
    else
        write_file(out_file, w.str());
    return exit_ok;
}

// ---------------------------------------------------------- asym-compare

int cmd_asym_compare(const GlobalOptions& g, int n, double x, int K,
                     const std::string& a_text) {
    const double a = (a_text == "pi") ? asym::default_a : std::stod(a_text);
    const auto rec = asym::compare(n, x, K, g.quad_config(), a);
    if (!rec.truncation_ok) {
        std::cerr << "asym-compare: refused, K = " << K
                  << " lies past the smallest series term at x = " << x << '\n';
        return exit_failure;
    }
    csv::Writer w({"quadrature", "expansion", "rel_dev", "next_term_ratio"});
    w.row({csv::format(rec.quadrature), csv::format(rec.expansion),
           csv::format(rec.rel_dev), csv::format(rec.next_term_ratio)});
    std::cout << w.str();
    return rec.converged ? exit_ok : exit_failure;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const GlobalOptions& g, const std::string& config_path,
               const std::string& only) {
    verify::SuiteConfig cfg;
    try {
        cfg = config_path.empty()
                  ? verify::default_suite_config()
                  : verify::suite_config_from(config::parse_file(config_path));
    } catch (const std::exception& e) {
        std::cerr << "verify: configuration failure: " << e.what() << '\n';
        return exit_failure;
    }
    if (g.tol > 0.0) {
        cfg.quad.abs_tol = g.tol;
        cfg.quad.rel_tol = g.tol;
    }
    if (!only.empty()) cfg.only = only;

    const auto report = verify::run_suite(cfg);
    const fs::path dir = g.resolved_out_dir();
    fs::create_directories(dir);
    write_file(dir / "report.txt", verify::to_text(report));
    write_file(dir / "report.csv", verify::to_csv(report));

    for (const auto& r : report.results)
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.spec.name
                  << "  worst_margin=" << csv::format(r.worst_margin)
                  << (r.numerical_failure ? "  [numerical failure]" : "") << '\n';
    std::cout << "checks=" << report.results.size()
              << " passed=" << report.passed_count()
              << " violations=" << report.violation_count()
              << " numerical_failures=" << report.numerical_failure_count() << '\n';
    return report.exit_code();
}

// ---------------------------------------------------------------- figure

int cmd_figure(const GlobalOptions& g, int id) {
    const auto cfg = g.quad_config();
    switch (id) {
        case 1: {
            // phi_1'(t) on [0.05, 10]; crosses zero exactly at t = 1
            const auto grid = log_grid_through_one(0.05, 10.0, 61);
            csv::Writer w({"t", "phi1_prime"});
            svg::Series s{"phi1'", {}};
            for (double t : grid) {
                const double v = density_phi_derivative(1, t);
                w.row({csv::format(t), csv::format(v)});
                s.points.emplace_back(t, v);
            }
            return emit(g, "figure1", w.str(), svg::render("derivative of phi_1", {s}, 720, 480, true));
        }
        case 2: {
            // phi_0 and derivatives 0..5 on [0.05, 10]
            const auto grid = log_grid_through_one(0.05, 10.0, 61);
            csv::Writer w({"t", "d0", "d1", "d2", "d3", "d4", "d5"});
            std::vector<svg::Series> series(6);
            for (int k = 0; k < 6; ++k) series[static_cast<std::size_t>(k)].name = "d" + std::to_string(k);
            for (double t : grid) {
                std::vector<std::string> row{csv::format(t)};
                for (int k = 0; k < 6; ++k) {
                    double fd_err = 0.0;
                    const double v = verify::phi0_derivative(k, t, 1e-2, &fd_err);
                    row.push_back(csv::format(v));
                    series[static_cast<std::size_t>(k)].points.emplace_back(t, v);
                }
                w.row(row);
            }
            return emit(g, "figure2", w.str(), svg::render("phi_0 and derivatives", series, 720, 480, true));
        }
        case 3: {
            // g(x) on [0.1, 20], strictly decreasing
            const auto grid = log_grid(0.1, 20.0, 121);
            csv::Writer w({"x", "g"});
            svg::Series s{"g", {}};
            for (double x : grid) {
                const double v = turan::g(x);
                w.row({csv::format(x), csv::format(v)});
                s.points.emplace_back(x, v);
            }
            return emit(g, "figure3", w.str(), svg::render("g(x)", {s}, 720, 480, true));
        }
        case 4: {
            // H_3(x; 0.55) and derivatives 0..5 on [0.5, 10]
            const auto grid = log_grid(0.5, 10.0, 41);
            csv::Writer w({"x", "d0", "d1", "d2", "d3", "d4", "d5"});
            std::vector<svg::Series> series(6);
            for (int k = 0; k < 6; ++k) series[static_cast<std::size_t>(k)].name = "d" + std::to_string(k);
            bool converged = true;
            for (double x : grid) {
                std::vector<std::string> row{csv::format(x)};
                for (int m = 0; m < 6; ++m) {
                    const auto h = turan::turan_H_derivative({3, 0.55}, x, m, cfg);
                    converged = converged && h.converged;
                    row.push_back(csv::format(h.value));
                    series[static_cast<std::size_t>(m)].points.emplace_back(x, h.value);
                }
                w.row(row);
            }
            const int rc = emit(g, "figure4", w.str(),
                                svg::render("H_3(x; 0.55) and derivatives", series, 720, 480, true));
            return converged ? rc : exit_failure;
        }
        default:
            std::cerr << "figure: unknown id " << id << " (valid: 1, 2, 3, 4)\n";
            return exit_failure;
    }
}

// ------------------------------------------------------------ scan-alpha

int cmd_scan_alpha(const GlobalOptions& g, int n, std::vector<double> alphas,
                   double x_min, double x_max, int x_points, int max_order,
                   const std::string& out_file) {
    const auto cfg = g.quad_config();
    if (alphas.empty()) {
        const auto b = turan::alpha_bounds(n);
        const double w = b.necessary - b.sufficient;
        alphas = {b.sufficient + 0.2 * w, b.sufficient + 0.4 * w,
                  b.sufficient + 0.6 * w, b.sufficient + 0.8 * w};
    }
    const auto rep = turan::scan_alpha(n, alphas, log_grid(x_min, x_max, x_points),
                                       max_order, cfg);
    if (rep.alpha_outside_open_interval)
        std::cerr << "scan-alpha: warning: alpha outside the open interval "
                     "((n-2)/(n-1), (n-1)/n); results flagged\n";

    csv::Writer w({"alpha", "x", "order", "value", "abs_error", "sign_ok"});
    for (const auto& c : rep.cells)
        w.row({csv::format(c.alpha), csv::format(c.x), std::to_string(c.order),
               csv::format(c.value), csv::format(c.abs_error),
               c.sign_ok ? "true" : "false"});
    std::string text = "# label: " + rep.label +
                       " (sign-pattern scan; not a proof of complete monotonicity)\n" +
                       "# all_alternate: " + (rep.all_alternate ? "true" : "false") + "\n" +
                       w.str();
    if (out_file.empty())
        std::cout << text;
    else
        write_file(out_file, text);
    return exit_ok;
}

// ------------------------------------------------------------- antideriv

int cmd_antideriv(const GlobalOptions& g, const std::vector<double>& xs,
                  const std::string& out_file) {
    const auto cfg = g.quad_config();
    csv::Writer w({"x", "value", "abs_error"});
    bool ok = true;
    for (double x : xs) {
        const auto r = eval_antiderivative(x, cfg);
        ok = ok && r.converged;
        w.row({csv::format(x), csv::format(r.value), csv::format(r.error_estimate)});
    }
    if (out_file.empty())
        std::cout << w.str();
    else
        write_file(out_file, w.str());
    return ok ? exit_ok : exit_failure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ramanujan integral toolkit"};
    app.set_version_flag("--version", toolkit_version);
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--tol", g.tol,
                   "override both quadrature tolerances (abs_tol = rel_tol = TOL)");
    app.add_option("--out", g.out_dir, "output directory for file-producing commands");
    app.add_option("--format", g.format, "file output format: csv, svg or both")
        ->check(CLI::IsMember({"csv", "svg", "both"}));

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate I_R^(n) at points");
    int eval_n = 0;
    std::vector<double> eval_x;
    std::string eval_out;
    eval->add_option("--n", eval_n, "derivative order (>= 0)")->required();
    eval->add_option("--x", eval_x, "evaluation points (comma separated, > 0)")
        ->required()
        ->delimiter(',');
    eval->add_option("--output", eval_out, "write CSV here instead of stdout");

    // coeffs
    auto* coeffs = app.add_subcommand("coeffs", "expansion coefficients Phi_0..Phi_K");
    std::string coeffs_a = "pi";
    int coeffs_n = 1, coeffs_K = 2;
    std::string coeffs_out;
    coeffs->add_option("--a", coeffs_a, "parameter a > 0, or 'pi'");
    coeffs->add_option("--n", coeffs_n, "order n >= 0")->required();
    coeffs->add_option("--K", coeffs_K, "highest coefficient index (<= 30)")->required();
    coeffs->add_option("--output", coeffs_out, "write CSV here instead of stdout");

    // asym-compare
    auto* ac = app.add_subcommand("asym-compare",
                                  "compare direct quadrature with the truncated expansion");
    int ac_n = 1, ac_K = 2;
    double ac_x = 0.0;
    std::string ac_a = "pi";
    ac->add_option("--n", ac_n)->required();
    ac->add_option("--x", ac_x, "evaluation point (> 1)")->required();
    ac->add_option("--K", ac_K)->required();
    ac->add_option("--a", ac_a);

    // verify
    auto* ver = app.add_subcommand("verify", "run the inequality verification suite");
    std::string ver_config, ver_only;
    ver->add_option("--config", ver_config, "configuration file (key = value with [sections])");
    ver->add_option("--only", ver_only, "run only checks whose name contains this");

    // figure
    auto* fig = app.add_subcommand("figure", "emit the data behind one of the four figures");
    int fig_id = 0;
    fig->add_option("--id", fig_id, "figure id: 1..4")->required();

    // scan-alpha
    auto* scan = app.add_subcommand("scan-alpha",
                                    "sign-pattern evidence scan over the open alpha interval");
    int scan_n = 3, scan_points = 10, scan_order = 5;
    double scan_xmin = 0.5, scan_xmax = 10.0;
    std::vector<double> scan_alphas;
    std::string scan_out;
    scan->add_option("--n", scan_n, "n >= 2")->required();
    scan->add_option("--alpha", scan_alphas, "alpha values (default: interior of the open interval)")
        ->delimiter(',');
    scan->add_option("--x-min", scan_xmin);
    scan->add_option("--x-max", scan_xmax);
    scan->add_option("--x-points", scan_points);
    scan->add_option("--max-order", scan_order);
    scan->add_option("--output", scan_out, "write CSV here instead of stdout");

    // antideriv
    auto* anti = app.add_subcommand("antideriv", "evaluate the Bernstein antiderivative");
    std::vector<double> anti_x;
    std::string anti_out;
    anti->add_option("--x", anti_x, "evaluation points (> 0)")->required()->delimiter(',');
    anti->add_option("--output", anti_out, "write CSV here instead of stdout");

    // certificate
    auto* cert = app.add_subcommand("certificate",
                                    "the real-line convergence certificate (equals 1/2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_failure;  // bad arguments are a configuration failure
    }

    try {
        if (*eval) return cmd_eval(g, eval_n, eval_x, eval_out);
        if (*coeffs) return cmd_coeffs(g, coeffs_a, coeffs_n, coeffs_K, coeffs_out);
        if (*ac) return cmd_asym_compare(g, ac_n, ac_x, ac_K, ac_a);
        if (*ver) return cmd_verify(g, ver_config, ver_only);
        if (*fig) return cmd_figure(g, fig_id);
        if (*scan)
            return cmd_scan_alpha(g, scan_n, scan_alphas, scan_xmin, scan_xmax,
                                  scan_points, scan_order, scan_out);
        if (*anti) return cmd_antideriv(g, anti_x, anti_out);
        if (*cert) {
            const auto c = bernstein_certificate(g.quad_config());
            csv::Writer w({"value", "abs_error"});
            w.row({csv::format(c.value), csv::format(c.error_estimate)});
            std::cout << w.str();
            return c.converged ? exit_ok : exit_failure;
        }
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_failure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_ok;
}
