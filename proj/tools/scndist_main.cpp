// scndist: distributions of the squared scaled (Demmel) condition number
// and the minimum eigenvalue of single-spiked complex Wishart matrices.
//
// Curve subcommands write `abscissa,value` CSV over a grid; `sample`
// dumps per-draw statistics; `figure K` produces paired analytic +
// empirical datasets; `verify` runs the full verification suite.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "scn/asymptotic.hpp"
#include "scn/csv.hpp"
#include "scn/empirical.hpp"
#include "scn/ensemble.hpp"
#include "scn/exact_dist.hpp"
#include "scn/verify.hpp"

namespace {

struct GridSpec {
    double min = 0.0;
    double max = 1.0;
    int points = 2;
    bool log_spaced = false;

    std::vector<double> build() const {
        return log_spaced ? scn::logspace(min, max, points)
                          : scn::linspace(min, max, points);
    }
};

GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw CLI::ValidationError("--grid", "expected min:max:points");
    try {
        g.min = std::stod(text.substr(0, c1));
        g.max = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
        g.points = std::stoi(text.substr(c2 + 1));
    } catch (const std::exception&) {
        throw CLI::ValidationError("--grid", "expected min:max:points");
    }
    if (!(g.min < g.max) || g.points < 2)
        throw CLI::ValidationError("--grid", "needs min < max and points >= 2");
    return g;
}

scn::EvalGrid evaluate(const std::vector<double>& xs,
                       const std::function<double(double)>& f) {
    scn::EvalGrid g;
    g.abscissae = xs;
    g.values.reserve(xs.size());
    for (double x : xs) g.values.push_back(f(x));
    return g;
}

// Normalized histogram over equal-width bins, reported at bin centers.
scn::EvalGrid binned_density(const std::vector<double>& samples, double lo,
                             double hi, int bins) {
    scn::EvalGrid g;
    const double width = (hi - lo) / bins;
    std::vector<double> counts(bins, 0.0);
    std::size_t inside = 0;
    for (double s : samples) {
        if (s < lo || s >= hi) continue;
        ++counts[int((s - lo) / width)];
        ++inside;
    }
    for (int b = 0; b < bins; ++b) {
        g.abscissae.push_back(lo + (b + 0.5) * width);
        g.values.push_back(inside ? counts[b] / (samples.size() * width) : 0.0);
    }
    return g;
}

struct FigureOptions {
    int number = 1;
    std::string out_dir = ".";
    long long trials = 20000;
    uint64_t seed = 1;
    int threads = 0;
};

void write_pdf_pair(const FigureOptions& opt, const std::string& stem,
                    const scn::ExactPdfParams& p, double z_hi) {
    namespace fs = std::filesystem;
    const double n = p.dims.n;
    auto analytic = evaluate(scn::linspace(n, z_hi, 400), [&](double z) {
        return scn::pdf_kappa_sq(z, p);
    });
    scn::write_curve_csv((fs::path(opt.out_dir) / (stem + "_analytic.csv")).string(),
                         "z", "value", analytic);
    auto emp = scn::monte_carlo(p.dims, p.spike, opt.trials, opt.seed,
                                scn::Statistic::kappa_sq, opt.threads);
    scn::write_curve_csv((fs::path(opt.out_dir) / (stem + "_empirical.csv")).string(),
                         "z", "value",
                         binned_density(emp.samples(), n, z_hi, 80));
}

void run_figure(const FigureOptions& opt) {
    namespace fs = std::filesystem;
    fs::create_directories(opt.out_dir);
    switch (opt.number) {
        case 1:  // eta = 10, varied (n, m)
            for (auto [n, m] : std::vector<std::pair<int, int>>{
                     {2, 3}, {3, 5}, {5, 8}}) {
                scn::ExactPdfParams p{{n, m - n}, {10.0}};
                write_pdf_pair(opt, "fig1_n" + std::to_string(n) + "_m" +
                                        std::to_string(m), p, n + 60.0);
            }
            break;
        case 2:  // n = 5, m = 8, varied eta
            for (double eta : {0.0, 1.0, 10.0}) {
                scn::ExactPdfParams p{{5, 3}, {eta}};
                std::ostringstream stem;
                stem << "fig2_eta" << eta;
                write_pdf_pair(opt, stem.str(), p, 45.0);
            }
            break;
        case 3:  // n = 5, eta = 10, varied m
            for (int m : {6, 7, 8}) {
                scn::ExactPdfParams p{{5, m - 5}, {10.0}};
                write_pdf_pair(opt, "fig3_m" + std::to_string(m), p, 65.0);
            }
            break;
        case 4:
        case 5: {  // hard-edge laws vs finite-n samples, n = 50, eta = 1/n
            const int n = 50;
            const double n3 = double(n) * n * n;
            for (int alpha : {1, 2}) {
                const scn::AsymptoticParams ap{alpha, 1.0, 1.0};
                auto emp = scn::monte_carlo({n, alpha}, {1.0 / n}, opt.trials,
                                            opt.seed, scn::Statistic::kappa_sq,
                                            opt.threads);
                std::vector<double> scaled(emp.samples());
                for (double& v : scaled) v /= n3;
                scn::EmpiricalDistribution es(std::move(scaled));
                const std::string tag = "_alpha" + std::to_string(alpha);
                if (opt.number == 4) {
                    auto grid = scn::logspace(0.05, 50.0, 200);
                    scn::write_curve_csv(
                        (fs::path(opt.out_dir) / ("fig4" + tag + "_analytic.csv")).string(),
                        "v", "value", evaluate(grid, [&](double v) {
                            return scn::cdf_scaled_kappa(v, ap);
                        }));
                    scn::write_curve_csv(
                        (fs::path(opt.out_dir) / ("fig4" + tag + "_empirical.csv")).string(),
                        "v", "value",
                        evaluate(grid, [&](double v) { return es.ecdf(v); }));
                } else {
                    auto grid = scn::linspace(0.0, 8.0, 320);
                    scn::write_curve_csv(
                        (fs::path(opt.out_dir) / ("fig5" + tag + "_analytic.csv")).string(),
                        "v", "value", evaluate(grid, [&](double v) {
                            return scn::pdf_scaled_kappa(v, ap);
                        }));
                    scn::write_curve_csv(
                        (fs::path(opt.out_dir) / ("fig5" + tag + "_empirical.csv")).string(),
                        "v", "value", binned_density(es.samples(), 0.0, 8.0, 80));
                }
            }
            break;
        }
        default:
            throw CLI::ValidationError("figure", "figure number must be 1..5");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact, asymptotic, and Monte Carlo distributions of the "
                 "squared scaled condition number of single-spiked complex "
                 "Wishart matrices"};
    app.require_subcommand(1);

    int n = 3, alpha = 0, threads = 0;
    double eta = 0.0, mu = 1.0, rho = 0.0;
    double cdf_tol = 1e-9, mgf_tol = 1e-10;
    long long trials = 10000;
    uint64_t seed = 1;
    std::string grid_text, out = "out.csv", tol = "default";
    bool log_grid = false;

    auto add_common = [&](CLI::App* cmd, bool needs_grid) {
        if (needs_grid) {
            cmd->add_option("--grid", grid_text, "abscissa grid min:max:points")
                ->required();
            cmd->add_flag("--log-grid", log_grid, "log-spaced grid");
        }
        cmd->add_option("--out", out, "output CSV path");
        cmd->add_option("--threads", threads,
                        "worker threads (0 = SCNDIST_THREADS or hardware)");
    };
    auto add_dims = [&](CLI::App* cmd) {
        cmd->add_option("--n", n, "matrix columns n")->required();
        cmd->add_option("--alpha", alpha, "m - n")->required();
        cmd->add_option("--eta", eta, "spike strength eta >= 0");
    };

    auto* c_pdf = app.add_subcommand("pdf", "exact density of kappa_SC^2");
    add_dims(c_pdf);
    add_common(c_pdf, true);
    auto* c_cdf = app.add_subcommand("cdf", "exact CDF of kappa_SC^2");
    add_dims(c_cdf);
    add_common(c_cdf, true);
    c_cdf->add_option("--tol", cdf_tol, "quadrature tolerance");
    auto* c_mpdf = app.add_subcommand("min-eig-pdf", "density of lambda_min");
    add_dims(c_mpdf);
    add_common(c_mpdf, true);
    auto* c_mcdf = app.add_subcommand("min-eig-cdf", "CDF of lambda_min");
    add_dims(c_mcdf);
    add_common(c_mcdf, true);
    auto* c_mgf = app.add_subcommand(
        "mgf", "E[exp(-s kappa_SC^2)] over a grid of s values");
    add_dims(c_mgf);
    add_common(c_mgf, true);
    c_mgf->add_option("--tol", mgf_tol, "quadrature tolerance");

    auto* c_acdf = app.add_subcommand("asym-cdf",
                                      "limiting CDF of kappa_SC^2/(mu n^3)");
    c_acdf->add_option("--alpha", alpha, "m - n")->required();
    c_acdf->add_option("--mu", mu, "scale constant mu > 0");
    c_acdf->add_option("--rho", rho, "spike scaling eta = rho/n (provenance)");
    add_common(c_acdf, true);
    auto* c_apdf = app.add_subcommand("asym-pdf",
                                      "limiting density of kappa_SC^2/(mu n^3)");
    c_apdf->add_option("--alpha", alpha, "m - n")->required();
    c_apdf->add_option("--mu", mu, "scale constant mu > 0");
    c_apdf->add_option("--rho", rho, "spike scaling eta = rho/n (provenance)");
    add_common(c_apdf, true);

    auto* c_sample = app.add_subcommand(
        "sample", "Monte Carlo draws of (kappa_SC^2, lambda_min)");
    add_dims(c_sample);
    c_sample->add_option("--trials", trials, "number of draws")->required();
    c_sample->add_option("--seed", seed, "RNG seed");
    add_common(c_sample, false);

    FigureOptions fig;
    auto* c_fig = app.add_subcommand("figure",
                                     "paired analytic/empirical datasets");
    c_fig->add_option("number", fig.number, "figure number 1..5")->required();
    c_fig->add_option("--out-dir", fig.out_dir, "output directory");
    c_fig->add_option("--trials", fig.trials, "Monte Carlo draws per dataset");
    c_fig->add_option("--seed", fig.seed, "RNG seed");
    c_fig->add_option("--threads", fig.threads, "worker threads");

    auto* c_verify = app.add_subcommand("verify", "run the verification suite");
    c_verify->add_option("--tol", tol,
                         "'default' or a scale factor applied to every "
                         "tolerance");
    c_verify->add_option("--threads", threads, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        const scn::ExactPdfParams params{{n, alpha}, {eta}};
        const scn::AsymptoticParams aparams{alpha, mu, rho};
        if (*c_pdf) {
            GridSpec g = parse_grid(grid_text);
            g.log_spaced = log_grid;
            scn::write_curve_csv(out, "z", "value", evaluate(g.build(), [&](double z) {
                                     return scn::pdf_kappa_sq(z, params);
                                 }));
        } else if (*c_cdf) {
            GridSpec g = parse_grid(grid_text);
            g.log_spaced = log_grid;
            scn::write_curve_csv(out, "z", "value", evaluate(g.build(), [&](double z) {
                                     return scn::cdf_kappa_sq(z, params, cdf_tol);
                                 }));
        } else if (*c_mpdf) {
            GridSpec g = parse_grid(grid_text);
            g.log_spaced = log_grid;
            scn::write_curve_csv(out, "x", "value", evaluate(g.build(), [&](double x) {
                                     return scn::pdf_min_eig(x, params);
                                 }));
        } else if (*c_mcdf) {
            GridSpec g = parse_grid(grid_text);
            g.log_spaced = log_grid;
            scn::write_curve_csv(out, "x", "value", evaluate(g.build(), [&](double x) {
                                     return scn::cdf_min_eig(x, params);
                                 }));
        } else if (*c_mgf) {
            GridSpec g = parse_grid(grid_text);
            g.log_spaced = log_grid;
            scn::write_curve_csv(out, "s", "value", evaluate(g.build(), [&](double s) {
                                     return scn::mgf_kappa_sq(s, params, mgf_tol);
                                 }));
        } else if (*c_acdf) {
            GridSpec g = parse_grid(grid_text);
            g.log_spaced = log_grid;
            scn::write_curve_csv(out, "v", "value", evaluate(g.build(), [&](double v) {
                                     return scn::cdf_scaled_kappa(v, aparams);
                                 }));
        } else if (*c_apdf) {
            GridSpec g = parse_grid(grid_text);
            g.log_spaced = log_grid;
            scn::write_curve_csv(out, "v", "value", evaluate(g.build(), [&](double v) {
                                     return scn::pdf_scaled_kappa(v, aparams);
                                 }));
        } else if (*c_sample) {
            scn::write_sample_csv(
                out, scn::sample_draws(params.dims, params.spike, trials, seed,
                                       threads));
        } else if (*c_fig) {
            run_figure(fig);
        } else if (*c_verify) {
            double scale = 1.0;
            if (tol != "default") {
                try {
                    scale = std::stod(tol);
                } catch (const std::exception&) {
                    std::cerr << "--tol expects 'default' or a number\n";
                    return 2;
                }
                if (!(scale > 0.0)) {
                    std::cerr << "--tol scale must be positive\n";
                    return 2;
                }
            }
            auto results = scn::verify::run_acceptance(scale, threads, &std::cout);
            return scn::verify::all_pass(results) ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
