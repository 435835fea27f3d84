#include "gsw/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gsw/error.hpp"
#include "gsw/montecarlo.hpp"

namespace gsw {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string format_fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

void require_increasing(const std::vector<std::size_t>& dims) {
    if (dims.empty()) {
        throw InvalidArgument("--dims must list at least one dimension");
    }
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (dims[i] == 0 || (i > 0 && dims[i] <= dims[i - 1])) {
            throw InvalidArgument("--dims must be positive and strictly increasing");
        }
    }
}

void validate_generator(const GeneratorSpec& gen, const std::vector<std::size_t>& dims,
                        const char* side) {
    switch (gen.kind) {
        case GeneratorKind::Gaussian:
            if (!(gen.cov_scale > 0.0)) {
                throw InvalidArgument(std::string("--") + side + "-cov must be positive");
            }
            break;
        case GeneratorKind::Gamma:
            if (!(gen.shape > 0.0) || !(gen.scale > 0.0)) {
                throw InvalidArgument(std::string("--") + side +
                                      "-shape and --" + side + "-scale must be positive");
            }
            break;
        case GeneratorKind::Ar1: {
            Ar1Config probe = gen.ar1;
            probe.dim = 1;
            probe.validate();
            break;
        }
        case GeneratorKind::Constant:
            if (!std::isfinite(gen.mean)) {
                throw InvalidArgument(std::string("--") + side + "-mean must be finite");
            }
            break;
        case GeneratorKind::Csv:
            if (dims.size() != 1) {
                throw InvalidArgument(std::string("--") + side +
                                      "-csv inputs fix the dimension; pass exactly one --dims");
            }
            break;
    }
}

std::filesystem::path prepare_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());
    }
    return dir;
}

RngHandle cell_stream(std::uint64_t seed, std::size_t dim, std::string_view label,
                      std::size_t index) {
    return derive_stream(derive_stream(root_stream(seed), "dim", dim), label, index);
}

}  // namespace

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

SampleSet GeneratorSpec::generate(std::size_t n, std::size_t d, const RngHandle& rng) const {
    switch (kind) {
        case GeneratorKind::Gaussian:
            return gen_gaussian(n, d, mean, cov_scale, rng);
        case GeneratorKind::Gamma:
            return gen_gamma(n, d, shape, scale, rng);
        case GeneratorKind::Ar1: {
            Ar1Config cfg = ar1;
            cfg.dim = d;
            return gen_ar1(n, cfg, rng);
        }
        case GeneratorKind::Constant:
            return SampleSet(Matrix(n, d, std::vector<double>(n * d, mean)));
        case GeneratorKind::Csv: {
            SampleSet s = load_sample_set(csv);
            if (s.dim() != d) {
                throw DimensionMismatchError("'" + csv.string() + "' has dimension " +
                                             std::to_string(s.dim()) + ", sweep asked for " +
                                             std::to_string(d));
            }
            return s;
        }
    }
    throw InvalidArgument("unknown generator");
}

std::string GeneratorSpec::describe() const {
    std::ostringstream os;
    switch (kind) {
        case GeneratorKind::Gaussian:
            os << "gaussian(mean=" << mean << ", cov=" << cov_scale << "*I)";
            break;
        case GeneratorKind::Gamma:
            os << "gamma(shape=" << shape << ", scale=" << scale << ")";
            break;
        case GeneratorKind::Ar1:
            os << "ar1(alpha=" << ar1.alpha << ", noise="
               << (ar1.noise == NoiseKind::Gaussian ? "gaussian" : "student") << ")";
            break;
        case GeneratorKind::Constant:
            os << "constant(" << mean << ")";
            break;
        case GeneratorKind::Csv:
            os << "csv(" << csv.string() << ")";
            break;
    }
    return os.str();
}

void ExperimentConfig::validate() const {
    g.validate();
    require_increasing(dims);
    if (repeats == 0) {
        throw InvalidArgument("--repeats must be at least 1");
    }
    if (projections == 0) {
        throw InvalidArgument("--projections must be at least 1");
    }
    if (n_samples == 0) {
        throw InvalidArgument("--n-samples must be at least 1");
    }
    if (g.kind == DefiningKind::Circular) {
        throw InvalidArgument("--g circular: no fast approximation (open problem)");
    }
    if (g.kind == DefiningKind::Neural && g.layers == 0) {
        throw LayerCountError("--n-layers 0 has no neural fast approximation; use --g linear");
    }
    if (g.kind == DefiningKind::Polynomial) {
        for (const std::size_t d : dims) {
            const std::uint64_t q = multi_index_count(d, g.degree);
            if (q > limits.index_cap) {
                throw CapExceededError("d = " + std::to_string(d) + ", m = " +
                                           std::to_string(g.degree) + " gives q = " +
                                           std::to_string(q) + " above the cap",
                                       q);
            }
        }
    }
    validate_generator(mu, dims, "mu");
    validate_generator(nu, dims, "nu");
}

FastResult fast_estimate(const SampleSet& mu, const SampleSet& nu, const DefiningFunctionSpec& g,
                         const ResourceLimits& limits) {
    switch (g.kind) {
        case DefiningKind::Linear:
            return hat_sw2(mu, nu);
        case DefiningKind::Polynomial:
            return hat_poly_gsw2(mu, nu, g.degree, PolyPath::Auto, limits);
        case DefiningKind::Neural:
            return hat_neural_gsw2(mu, nu, g.layers);
        case DefiningKind::Circular:
            throw InvalidArgument("no fast approximation (open problem) for the circular "
                                  "defining function");
    }
    throw InvalidArgument("unknown defining function");
}

std::string format_record(const ResultRecord& r) {
    std::string line = std::to_string(r.dim) + "," + std::to_string(r.repeat) + ",";
    if (r.failed) {
        return line + "error,error,error,,";
    }
    return line + format_number(r.fast) + "," + format_number(r.oracle) + "," +
           format_number(r.abs_error) + "," + format_fixed(r.fast_seconds, 6) + "," +
           format_fixed(r.oracle_seconds, 6);
}

std::string format_summary_row(const DimSummary& s) {
    return std::to_string(s.dim) + ",summary," + format_number(s.mean_fast) + "," +
           format_number(s.mean_oracle) + "," + format_number(s.mean_abs_error) + "," +
           format_fixed(s.mean_fast_seconds, 6) + "," + format_fixed(s.mean_oracle_seconds, 6);
}

std::vector<DimSummary> summarize_records(const std::vector<ResultRecord>& records) {
    std::vector<DimSummary> out;
    for (const auto& r : records) {
        if (out.empty() || out.back().dim != r.dim) {
            out.push_back(DimSummary{r.dim});
        }
    }
    for (auto& s : out) {
        std::vector<double> errors;
        double fast = 0.0;
        double oracle = 0.0;
        double fast_s = 0.0;
        double oracle_s = 0.0;
        for (const auto& r : records) {
            if (r.dim != s.dim) {
                continue;
            }
            if (r.failed) {
                ++s.failed;
                continue;
            }
            errors.push_back(r.abs_error);
            fast += r.fast;
            oracle += r.oracle;
            fast_s += r.fast_seconds;
            oracle_s += r.oracle_seconds;
        }
        s.count = errors.size();
        if (errors.empty()) {
            continue;
        }
        const auto k = static_cast<double>(errors.size());
        double total = 0.0;
        for (const double e : errors) {
            total += e;
        }
        s.mean_abs_error = total / k;
        double ss = 0.0;
        for (const double e : errors) {
            ss += (e - s.mean_abs_error) * (e - s.mean_abs_error);
        }
        s.std_abs_error = errors.size() > 1 ? std::sqrt(ss / (k - 1.0)) : 0.0;
        std::vector<double> sorted = errors;
        std::sort(sorted.begin(), sorted.end());
        const std::size_t mid = sorted.size() / 2;
        s.median_abs_error =
            sorted.size() % 2 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
        s.mean_fast = fast / k;
        s.mean_oracle = oracle / k;
        s.mean_fast_seconds = fast_s / k;
        s.mean_oracle_seconds = oracle_s / k;
    }
    return out;
}

std::string render_error_plot(const std::vector<DimSummary>& summary, const std::string& title) {
    constexpr double kWidth = 640.0;
    constexpr double kHeight = 400.0;
    constexpr double kLeft = 70.0;
    constexpr double kRight = 20.0;
    constexpr double kTop = 40.0;
    constexpr double kBottom = 50.0;

    std::vector<const DimSummary*> pts;
    for (const auto& s : summary) {
        if (s.count > 0) {
            pts.push_back(&s);
        }
    }
    double x_lo = 0.0;
    double x_hi = 1.0;
    double y_lo = 0.0;
    double y_hi = 1.0;
    if (!pts.empty()) {
        x_lo = static_cast<double>(pts.front()->dim);
        x_hi = static_cast<double>(pts.back()->dim);
        y_hi = 0.0;
        for (const auto* s : pts) {
            y_lo = std::min(y_lo, s->mean_abs_error - s->std_abs_error);
            y_hi = std::max(y_hi, s->mean_abs_error + s->std_abs_error);
        }
        if (x_hi == x_lo) {
            x_lo -= 1.0;
            x_hi += 1.0;
        }
        if (y_hi == y_lo) {
            y_hi = y_lo + 1.0;
        }
    }
    const auto sx = [&](double x) {
        return kLeft + (x - x_lo) / (x_hi - x_lo) * (kWidth - kLeft - kRight);
    };
    const auto sy = [&](double y) {
        return kHeight - kBottom - (y - y_lo) / (y_hi - y_lo) * (kHeight - kTop - kBottom);
    };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth
       << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
       << title << "</text>\n";
    // Axes.
    os << "<line x1=\"" << kLeft << "\" y1=\"" << kHeight - kBottom << "\" x2=\""
       << kWidth - kRight << "\" y2=\"" << kHeight - kBottom << "\" stroke=\"black\"/>\n"
       << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
       << kHeight - kBottom << "\" stroke=\"black\"/>\n"
       << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 12
       << "\" text-anchor=\"middle\" font-size=\"12\">dimension</text>\n"
       << "<text x=\"16\" y=\"" << kHeight / 2 << "\" font-size=\"12\" transform=\"rotate(-90 16 "
       << kHeight / 2 << ")\" text-anchor=\"middle\">mean |fast - oracle|</text>\n";
    for (const double y : {y_lo, y_hi}) {
        os << "<text x=\"" << kLeft - 6 << "\" y=\"" << sy(y) + 4
           << "\" text-anchor=\"end\" font-size=\"10\">" << format_fixed(y, 4) << "</text>\n";
    }
    if (!pts.empty()) {
        os << "<polygon fill=\"steelblue\" fill-opacity=\"0.2\" stroke=\"none\" points=\"";
        for (const auto* s : pts) {
            os << sx(static_cast<double>(s->dim)) << "," << sy(s->mean_abs_error + s->std_abs_error)
               << " ";
        }
        for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
            os << sx(static_cast<double>((*it)->dim)) << ","
               << sy((*it)->mean_abs_error - (*it)->std_abs_error) << " ";
        }
        os << "\"/>\n<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
        for (const auto* s : pts) {
            os << sx(static_cast<double>(s->dim)) << "," << sy(s->mean_abs_error) << " ";
        }
        os << "\"/>\n";
        for (const auto* s : pts) {
            os << "<circle cx=\"" << sx(static_cast<double>(s->dim)) << "\" cy=\""
               << sy(s->mean_abs_error) << "\" r=\"3\" fill=\"steelblue\" data-dim=\"" << s->dim
               << "\" data-mean=\"" << format_number(s->mean_abs_error) << "\" data-std=\""
               << format_number(s->std_abs_error) << "\"/>\n"
               << "<text x=\"" << sx(static_cast<double>(s->dim)) << "\" y=\""
               << kHeight - kBottom + 14 << "\" text-anchor=\"middle\" font-size=\"10\">" << s->dim
               << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

ExperimentOutcome run_experiment(const ExperimentConfig& cfg, std::ostream* log) {
    cfg.validate();
    std::ofstream results;
    if (!cfg.out_dir.empty()) {
        const auto path = prepare_dir(cfg.out_dir) / "results.csv";
        results.open(path);
        if (!results) {
            throw IoError("cannot write '" + path.string() + "'");
        }
        results << kResultsHeader << '\n' << std::flush;
    }

    ExperimentOutcome outcome;
    for (const std::size_t d : cfg.dims) {
        for (std::size_t r = 0; r < cfg.repeats; ++r) {
            ResultRecord rec;
            rec.dim = d;
            rec.repeat = r;
            try {
                const SampleSet mu = cfg.mu.generate(cfg.n_samples, d, cell_stream(cfg.seed, d, "mu", r));
                const SampleSet nu = cfg.nu.generate(cfg.n_samples, d, cell_stream(cfg.seed, d, "nu", r));
                auto start = Clock::now();
                rec.fast = fast_estimate(mu, nu, cfg.g, cfg.limits).distance;
                rec.fast_seconds = seconds_since(start);
                McConfig mc;
                mc.n_projections = cfg.projections;
                mc.p = 2.0;
                mc.rng = cell_stream(cfg.seed, d, "oracle", r);
                mc.limits = cfg.limits;
                start = Clock::now();
                rec.oracle = mc_gsw(mu, nu, cfg.g, mc);
                rec.oracle_seconds = seconds_since(start);
                rec.abs_error = std::abs(rec.fast - rec.oracle);
                if (!std::isfinite(rec.abs_error)) {
                    throw Error("non-finite distance");
                }
            } catch (const Error& e) {
                rec.failed = true;
                rec.error = e.what();
                if (log) {
                    *log << "cell dim=" << d << " repeat=" << r << " failed: " << e.what() << '\n';
                }
            }
            if (results.is_open()) {
                results << format_record(rec) << '\n' << std::flush;
            }
            outcome.records.push_back(std::move(rec));
        }
        if (log) {
            *log << "dim " << d << " done\n" << std::flush;
        }
    }

    outcome.summary = summarize_records(outcome.records);
    if (!cfg.out_dir.empty()) {
        for (const auto& s : outcome.summary) {
            results << format_summary_row(s) << '\n';
        }
        results.flush();
        std::ofstream summary(cfg.out_dir / "summary.csv");
        summary << "dim,count,failed,mean_abs_error,std_abs_error,median_abs_error,mean_fast,"
                   "mean_oracle\n";
        for (const auto& s : outcome.summary) {
            summary << s.dim << ',' << s.count << ',' << s.failed << ','
                    << format_number(s.mean_abs_error) << ',' << format_number(s.std_abs_error)
                    << ',' << format_number(s.median_abs_error) << ','
                    << format_number(s.mean_fast) << ',' << format_number(s.mean_oracle) << '\n';
        }
        std::ofstream plot(cfg.out_dir / "plot.svg");
        std::string title = to_string(cfg.g.kind);
        if (cfg.g.kind == DefiningKind::Polynomial) {
            title += " m=" + std::to_string(cfg.g.degree);
        } else if (cfg.g.kind == DefiningKind::Neural) {
            title += " n=" + std::to_string(cfg.g.layers);
        }
        title += ": " + cfg.mu.describe() + " vs " + cfg.nu.describe();
        plot << render_error_plot(outcome.summary, title);
        if (!summary || !plot) {
            throw IoError("failed writing summary outputs in '" + cfg.out_dir.string() + "'");
        }
    }
    return outcome;
}

void XiConfig::validate() const {
    g.validate();
    require_increasing(dims);
    if (n_samples < 2) {
        throw InvalidArgument("--n-samples must be at least 2");
    }
    if (g.kind == DefiningKind::Circular) {
        throw InvalidArgument("--g circular has no error-bound diagnostics");
    }
    if (g.kind == DefiningKind::Polynomial) {
        for (const std::size_t d : dims) {
            const std::uint64_t q = multi_index_count(d, g.degree);
            if (q > limits.index_cap) {
                throw CapExceededError("d = " + std::to_string(d) + " gives q = " +
                                           std::to_string(q) + " above the cap",
                                       q);
            }
        }
    }
    validate_generator(mu, dims, "mu");
    validate_generator(nu, dims, "nu");
}

XiOutcome run_xi(const XiConfig& cfg, std::ostream* log) {
    cfg.validate();
    const Pairing pairing = cfg.pairing.value_or(default_pairing(cfg.n_samples));
    XiOutcome out;
    for (const std::size_t d : cfg.dims) {
        const SampleSet mu = cfg.mu.generate(cfg.n_samples, d, cell_stream(cfg.seed, d, "xi-mu", 0));
        const SampleSet nu = cfg.nu.generate(cfg.n_samples, d, cell_stream(cfg.seed, d, "xi-nu", 0));
        const auto components = [&](const SampleSet& s, std::string_view side) {
            const RngHandle rng = cell_stream(cfg.seed, d, side, 1);
            switch (cfg.g.kind) {
                case DefiningKind::Polynomial:
                    return xi_poly(s, cfg.g.degree, pairing, rng, cfg.limits);
                case DefiningKind::Neural:
                    return xi_neural(s, cfg.g.layers, pairing, rng);
                default:
                    return xi_hat(s, pairing, rng);
            }
        };
        XiRow row;
        row.dim = d;
        row.mu = components(mu, "xi-mu");
        row.nu = components(nu, "xi-nu");
        row.bound = std::sqrt(row.mu.xi + row.nu.xi);
        out.rows.push_back(row);
        if (log) {
            *log << "dim " << d << " bound " << row.bound << '\n' << std::flush;
        }
    }

    std::vector<RatePoint> points;
    std::size_t dropped = 0;
    for (const auto& row : out.rows) {
        if (row.bound > 0.0) {
            points.push_back({static_cast<double>(row.dim), row.bound});
        } else {
            ++dropped;
        }
    }
    if (dropped > 0) {
        out.warning = std::to_string(dropped) + " zero-valued point(s) excluded from the fit";
    }
    if (points.size() >= 3) {
        out.fit = fit_rate(points);
    } else {
        out.warning += (out.warning.empty() ? "" : "; ") +
                       std::string("fit skipped: fewer than 3 positive points");
    }
    if (log && !out.warning.empty()) {
        *log << "warning: " << out.warning << '\n';
    }

    if (!cfg.out_dir.empty()) {
        const auto path = prepare_dir(cfg.out_dir) / "xi.csv";
        std::ofstream os(path);
        if (!os) {
            throw IoError("cannot write '" + path.string() + "'");
        }
        os << "dim,side,ambient_dim,m2,a_term,b1,b2,xi,bound\n";
        for (const auto& row : out.rows) {
            for (const auto& [side, c] : {std::pair{"mu", row.mu}, std::pair{"nu", row.nu}}) {
                os << row.dim << ',' << side << ',' << c.ambient_dim << ','
                   << format_number(c.m2) << ',' << format_number(c.a_term) << ','
                   << format_number(c.b1) << ',' << format_number(c.b2) << ','
                   << format_number(c.xi) << ',' << format_number(row.bound) << '\n';
            }
        }
        if (out.fit) {
            os << "# fit of log(bound) on log(dim): slope=" << format_number(out.fit->slope)
               << " intercept=" << format_number(out.fit->intercept)
               << " r_squared=" << format_number(out.fit->r_squared) << '\n';
        }
        if (!out.warning.empty()) {
            os << "# warning: " << out.warning << '\n';
        }
    }
    return out;
}

}  // namespace gsw
