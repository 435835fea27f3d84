#pragma once

// Error-versus-dimension sweeps and error-bound diagnostics behind the CLI.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gsw/core.hpp"
#include "gsw/datagen.hpp"
#include "gsw/diagnostics.hpp"
#include "gsw/fastapprox.hpp"
#include "gsw/slicer.hpp"

namespace gsw {

enum class GeneratorKind { Gaussian, Gamma, Ar1, Constant, Csv };

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::Gaussian;
    double mean = 0.0;       // Gaussian and Constant, broadcast to every coordinate
    double cov_scale = 1.0;  // Gaussian
    double shape = 1.0;      // Gamma
    double scale = 1.0;      // Gamma
    Ar1Config ar1;           // Ar1; dim is overridden per sweep point
    std::filesystem::path csv;

    SampleSet generate(std::size_t n, std::size_t d, const RngHandle& rng) const;
    std::string describe() const;
};

struct ExperimentConfig {
    GeneratorSpec mu;
    GeneratorSpec nu;
    DefiningFunctionSpec g = DefiningFunctionSpec::polynomial(3);
    std::vector<std::size_t> dims{5, 10, 20, 40};
    std::size_t n_samples = 2000;
    std::size_t repeats = 100;
    std::size_t projections = 2000;
    std::uint64_t seed = 42;
    std::filesystem::path out_dir;  // empty: keep results in memory only
    ResourceLimits limits;

    void validate() const;
};

struct ResultRecord {
    std::size_t dim = 0;
    std::size_t repeat = 0;
    double fast = 0.0;
    double oracle = 0.0;
    double abs_error = 0.0;
    double fast_seconds = 0.0;
    double oracle_seconds = 0.0;
    bool failed = false;
    std::string error;
};

struct DimSummary {
    std::size_t dim = 0;
    std::size_t count = 0;
    std::size_t failed = 0;
    double mean_abs_error = 0.0;
    double std_abs_error = 0.0;
    double median_abs_error = 0.0;
    double mean_fast = 0.0;
    double mean_oracle = 0.0;
    double mean_fast_seconds = 0.0;
    double mean_oracle_seconds = 0.0;
};

struct ExperimentOutcome {
    std::vector<ResultRecord> records;
    std::vector<DimSummary> summary;
};

inline constexpr const char* kResultsHeader =
    "dim,repeat,fast,oracle,abs_error,fast_seconds,oracle_seconds";

// The projection-free estimate matching `g`. Circular has none and throws
// InvalidArgument; neural with n = 0 throws LayerCountError.
FastResult fast_estimate(const SampleSet& mu, const SampleSet& nu, const DefiningFunctionSpec& g,
                         const ResourceLimits& limits = {});

// Runs every (dim, repeat) cell in order. With an out_dir, writes
// results.csv (flushed per row), summary.csv and plot.svg.
ExperimentOutcome run_experiment(const ExperimentConfig& cfg, std::ostream* log = nullptr);

std::vector<DimSummary> summarize_records(const std::vector<ResultRecord>& records);
std::string format_record(const ResultRecord& r);
std::string format_summary_row(const DimSummary& s);
std::string render_error_plot(const std::vector<DimSummary>& summary, const std::string& title);

struct XiConfig {
    GeneratorSpec mu;
    GeneratorSpec nu;
    DefiningFunctionSpec g;
    std::vector<std::size_t> dims{16, 64, 256, 1024};
    std::size_t n_samples = 4000;
    std::optional<Pairing> pairing;  // default_pairing(n_samples) when unset
    std::uint64_t seed = 42;
    std::filesystem::path out_dir;
    ResourceLimits limits;

    void validate() const;
};

struct XiRow {
    std::size_t dim = 0;
    XiComponents mu;
    XiComponents nu;
    double bound = 0.0;  // sqrt(xi_mu + xi_nu)
};

struct XiOutcome {
    std::vector<XiRow> rows;
    std::optional<RateFit> fit;
    std::string warning;
};

XiOutcome run_xi(const XiConfig& cfg, std::ostream* log = nullptr);

std::string format_number(double v);

}  // namespace gsw
