#include "gsw/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "gsw/error.hpp"
#include "gsw/experiment.hpp"
#include "gsw/kernels.hpp"
#include "gsw/montecarlo.hpp"

namespace gsw {

namespace {

struct Globals {
    std::uint64_t seed = 42;
    int threads = 0;
    std::string out_dir = ".";
};

struct FunctionFlags {
    std::string g = "linear";
    unsigned m = 1;
    unsigned n_layers = 1;
    double t = 1.0;
    CLI::Option* m_opt = nullptr;

    void add(CLI::App* app, const std::string& default_g) {
        g = default_g;
        app->add_option("--g", g, "Defining function")
            ->check(CLI::IsMember({"linear", "poly", "neural", "circular"}))
            ->capture_default_str();
        m_opt = app->add_option("--m", m, "Odd polynomial degree")->capture_default_str();
        app->add_option("--n-layers", n_layers, "Neural stack depth")->capture_default_str();
        app->add_option("--t", t, "Circular radius")->capture_default_str();
    }

    DefiningFunctionSpec spec() const {
        DefiningFunctionSpec s;
        if (g == "poly") {
            if (m % 2 == 0) {
                throw InvalidArgument("--m must be odd, got " + std::to_string(m));
            }
            s = DefiningFunctionSpec::polynomial(m);
        } else if (g == "neural") {
            s = DefiningFunctionSpec::neural(n_layers);
        } else if (g == "circular") {
            if (!(t > 0.0) || !std::isfinite(t)) {
                throw InvalidArgument("--t must be positive and finite");
            }
            s = DefiningFunctionSpec::circular(t);
        } else {
            s = DefiningFunctionSpec::linear();
        }
        s.validate();
        return s;
    }
};

struct GeneratorFlags {
    explicit GeneratorFlags(std::string s) : side(std::move(s)) {}

    std::string side;
    std::string gen = "gaussian";
    double mean = 0.0;
    double cov = 1.0;
    double shape = 1.0;
    double scale = 1.0;
    double alpha = 0.5;
    std::string noise = "gaussian";
    double sigma = 1.0;
    double df = 5.0;
    std::size_t burn_in = 10000;
    std::string csv;

    void add(CLI::App* app) {
        const std::string p = "--" + side + "-";
        app->add_option(p + "gen", gen, "Generator for " + side)
            ->check(CLI::IsMember({"gaussian", "gamma", "ar1", "constant", "csv"}))
            ->capture_default_str();
        app->add_option(p + "mean", mean, "Gaussian or constant value per coordinate")
            ->capture_default_str();
        app->add_option(p + "cov", cov, "Gaussian covariance scale c in c*I")
            ->capture_default_str();
        app->add_option(p + "shape", shape, "Gamma shape")->capture_default_str();
        app->add_option(p + "scale", scale, "Gamma scale")->capture_default_str();
        app->add_option(p + "alpha", alpha, "AR(1) coefficient")->capture_default_str();
        app->add_option(p + "noise", noise, "AR(1) innovations")
            ->check(CLI::IsMember({"gaussian", "student"}))
            ->capture_default_str();
        app->add_option(p + "sigma", sigma, "AR(1) Gaussian noise standard deviation")
            ->capture_default_str();
        app->add_option(p + "df", df, "AR(1) Student-t degrees of freedom")
            ->capture_default_str();
        app->add_option(p + "burn-in", burn_in, "AR(1) discarded steps")->capture_default_str();
        app->add_option(p + "csv", csv, "Sample file (rows are samples)");
    }

    GeneratorSpec spec() const {
        GeneratorSpec s;
        s.mean = mean;
        s.cov_scale = cov;
        s.shape = shape;
        s.scale = scale;
        s.ar1.alpha = alpha;
        s.ar1.noise = noise == "student" ? NoiseKind::StudentT : NoiseKind::Gaussian;
        s.ar1.sigma = sigma;
        s.ar1.df = df;
        s.ar1.burn_in = burn_in;
        if (gen == "gamma") {
            s.kind = GeneratorKind::Gamma;
        } else if (gen == "ar1") {
            s.kind = GeneratorKind::Ar1;
        } else if (gen == "constant") {
            s.kind = GeneratorKind::Constant;
        } else if (gen == "csv" || !csv.empty()) {
            if (csv.empty()) {
                throw InvalidArgument("--" + side + "-gen csv needs --" + side + "-csv");
            }
            s.kind = GeneratorKind::Csv;
            s.csv = csv;
        }
        return s;
    }
};

// Dimensions for a sweep when --dims is omitted: the largest grid whose
// monomial count stays well under the cap.
std::vector<std::size_t> default_dims(const DefiningFunctionSpec& g, bool xi) {
    if (g.kind == DefiningKind::Polynomial && g.degree >= 5) {
        return {3, 6, 9, 12, 15};
    }
    if (g.kind == DefiningKind::Polynomial && g.degree == 3) {
        return xi ? std::vector<std::size_t>{4, 8, 16, 32} : std::vector<std::size_t>{5, 10, 20, 40};
    }
    return xi ? std::vector<std::size_t>{16, 64, 256, 1024} : std::vector<std::size_t>{16, 64, 256};
}

std::vector<std::size_t> resolve_dims(const std::vector<std::size_t>& given,
                                      const DefiningFunctionSpec& g, const GeneratorSpec& mu,
                                      const GeneratorSpec& nu, bool xi) {
    if (!given.empty()) {
        return given;
    }
    for (const GeneratorSpec* gen : {&mu, &nu}) {
        if (gen->kind == GeneratorKind::Csv) {
            return {load_sample_set(gen->csv).dim()};
        }
    }
    return default_dims(g, xi);
}

std::string format_distance(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    return buf;
}

int cmd_dist(const Globals& globals, const std::vector<std::string>& files,
             const FunctionFlags& fn, const std::string& method, std::size_t projections,
             double p, std::ostream& out) {
    const DefiningFunctionSpec g = fn.spec();
    if (projections == 0) {
        throw InvalidArgument("--projections must be at least 1");
    }
    if (!(p >= 1.0) || !std::isfinite(p)) {
        throw InvalidArgument("--p must be a finite number >= 1");
    }
    const SampleSet mu = load_sample_set(files.at(0));
    const SampleSet nu = load_sample_set(files.at(1));
    double value = 0.0;
    if (method == "fast") {
        if (g.kind == DefiningKind::Circular) {
            throw InvalidArgument("--g circular --method fast: no fast approximation (open problem)");
        }
        if (p != 2.0) {
            throw InvalidArgument("--method fast approximates the p = 2 distance only; drop --p");
        }
        if (mu.dim() != nu.dim()) {
            throw DimensionMismatchError("inputs have dimensions " + std::to_string(mu.dim()) +
                                         " and " + std::to_string(nu.dim()));
        }
        value = fast_estimate(mu, nu, g).distance;
    } else {
        McConfig mc;
        mc.n_projections = projections;
        mc.p = p;
        mc.rng = derive_stream(root_stream(globals.seed), "dist", 0);
        value = mc_gsw(mu, nu, g, mc);
    }
    if (!std::isfinite(value)) {
        throw Error("distance evaluated to a non-finite value");
    }
    out << format_distance(value) << '\n';
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sliced and generalized sliced Wasserstein distances", "gsw"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals globals;
    app.add_option("--seed", globals.seed, "Master seed")->capture_default_str();
    app.add_option("--threads", globals.threads, "Worker threads (0: all cores)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app.add_option("--out-dir", globals.out_dir, "Directory for CSV and SVG outputs")
        ->capture_default_str();

    // dist
    CLI::App* dist = app.add_subcommand("dist", "Distance between two sample files");
    std::vector<std::string> files;
    FunctionFlags dist_fn;
    std::string method = "mc";
    std::size_t dist_projections = 2000;
    double p = 2.0;
    dist->add_option("files", files, "Two CSV sample files")->required()->expected(2);
    dist_fn.add(dist, "linear");
    dist->add_option("--method", method, "Monte Carlo or projection-free estimate")
        ->check(CLI::IsMember({"mc", "fast"}))
        ->capture_default_str();
    dist->add_option("--projections", dist_projections, "Monte Carlo directions")
        ->capture_default_str();
    dist->add_option("--p", p, "Wasserstein order (Monte Carlo only)")->capture_default_str();

    // experiment
    CLI::App* exp = app.add_subcommand("experiment", "Approximation error against dimension");
    FunctionFlags exp_fn;
    exp_fn.m = 3;
    GeneratorFlags exp_mu{"mu"};
    GeneratorFlags exp_nu{"nu"};
    exp_nu.mean = 1.0;
    exp_nu.cov = 2.0;
    exp_mu.scale = 2.0;
    exp_nu.scale = 3.0;
    exp_mu.alpha = 0.2;
    exp_nu.alpha = 0.8;
    std::vector<std::size_t> exp_dims;
    std::size_t exp_n = 2000;
    std::size_t repeats = 100;
    std::size_t exp_projections = 2000;
    exp_fn.add(exp, "poly");
    exp_mu.add(exp);
    exp_nu.add(exp);
    exp->add_option("--dims", exp_dims, "Strictly increasing dimensions")->delimiter(',');
    exp->add_option("--n-samples", exp_n, "Samples per side")->capture_default_str();
    exp->add_option("--repeats", repeats, "Repeats per dimension")->capture_default_str();
    exp->add_option("--projections", exp_projections, "Oracle Monte Carlo directions")
        ->capture_default_str();

    // xi
    CLI::App* xi = app.add_subcommand("xi", "Error-bound diagnostics against dimension");
    FunctionFlags xi_fn;
    GeneratorFlags xi_mu{"mu"};
    GeneratorFlags xi_nu{"nu"};
    std::vector<std::size_t> xi_dims;
    std::size_t xi_n = 4000;
    std::string pairing;
    xi_fn.add(xi, "poly");
    xi_mu.add(xi);
    xi_nu.add(xi);
    xi->add_option("--dims", xi_dims, "Strictly increasing dimensions")->delimiter(',');
    xi->add_option("--n-samples", xi_n, "Samples per side")->capture_default_str();
    xi->add_option("--pairing", pairing, "Inner-product pairing (default: by sample count)")
        ->check(CLI::IsMember({"split", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        kernels::set_thread_count(globals.threads);
        if (dist->parsed()) {
            return cmd_dist(globals, files, dist_fn, method, dist_projections, p, out);
        }
        if (exp->parsed()) {
            ExperimentConfig cfg;
            cfg.g = exp_fn.spec();
            cfg.mu = exp_mu.spec();
            cfg.nu = exp_nu.spec();
            cfg.dims = resolve_dims(exp_dims, cfg.g, cfg.mu, cfg.nu, false);
            cfg.n_samples = exp_n;
            cfg.repeats = repeats;
            cfg.projections = exp_projections;
            cfg.seed = globals.seed;
            cfg.out_dir = globals.out_dir;
            const ExperimentOutcome outcome = run_experiment(cfg, &err);
            out << "dim,count,failed,mean_abs_error,std_abs_error,median_abs_error\n";
            for (const auto& s : outcome.summary) {
                out << s.dim << ',' << s.count << ',' << s.failed << ','
                    << format_number(s.mean_abs_error) << ',' << format_number(s.std_abs_error)
                    << ',' << format_number(s.median_abs_error) << '\n';
            }
            return kExitOk;
        }
        XiConfig cfg;
        cfg.g = xi_fn.spec();
        cfg.mu = xi_mu.spec();
        cfg.nu = xi_nu.spec();
        cfg.dims = resolve_dims(xi_dims, cfg.g, cfg.mu, cfg.nu, true);
        cfg.n_samples = xi_n;
        if (pairing == "split") {
            cfg.pairing = Pairing::SplitHalves;
        } else if (pairing == "all") {
            cfg.pairing = Pairing::AllPairs;
        }
        cfg.seed = globals.seed;
        cfg.out_dir = globals.out_dir;
        const XiOutcome outcome = run_xi(cfg, &err);
        out << "dim,xi_mu,xi_nu,bound\n";
        for (const auto& row : outcome.rows) {
            out << row.dim << ',' << format_number(row.mu.xi) << ',' << format_number(row.nu.xi)
                << ',' << format_number(row.bound) << '\n';
        }
        if (outcome.fit) {
            out << "slope " << format_number(outcome.fit->slope) << '\n';
        }
        return kExitOk;
    } catch (const CapExceededError& e) {
        err << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const LayerCountError& e) {
        err << "error: --n-layers: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DimensionMismatchError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UnequalSupportError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
}

}  // namespace gsw
