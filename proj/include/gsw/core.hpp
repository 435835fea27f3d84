#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gsw/matrix.hpp"

namespace gsw {

// N samples in d dimensions (rows are samples). Immutable; copies share
// the underlying storage.
class SampleSet {
public:
    // Throws InvalidArgument when empty or when any entry is not finite.
    explicit SampleSet(Matrix data);

    std::size_t n_samples() const noexcept { return data_->rows(); }
    std::size_t dim() const noexcept { return data_->cols(); }
    const Matrix& data() const noexcept { return *data_; }
    std::span<const double> row(std::size_t j) const { return data_->row(j); }

private:
    std::shared_ptr<const Matrix> data_;
};

enum class DefiningKind { Linear, Polynomial, Neural, Circular };

// Which defining function g(x, theta) slices the measures.
struct DefiningFunctionSpec {
    DefiningKind kind = DefiningKind::Linear;
    unsigned degree = 1;   // Polynomial: odd, >= 1
    unsigned layers = 0;   // Neural
    double radius = 1.0;   // Circular: > 0

    static DefiningFunctionSpec linear();
    static DefiningFunctionSpec polynomial(unsigned m);
    static DefiningFunctionSpec neural(unsigned n);
    static DefiningFunctionSpec circular(double t);

    // Re-checks the invariants (useful after aggregate initialisation).
    void validate() const;
};

std::string to_string(DefiningKind kind);

// Per-column running sums over the rows of a matrix, accumulated in
// ascending row order.
struct ColumnMoments {
    std::size_t n_rows = 0;
    std::vector<double> sum;
    std::vector<double> sum_sq;
};

struct MomentSummary {
    std::vector<double> mean;
    double second_moment = 0.0;
    double centered_second_moment = 0.0;
};

// Clamp applied to the centered second moment before it is square-rooted.
inline constexpr double kMomentTolerance = 1e-9;

MomentSummary summarize(const ColumnMoments& moments);
MomentSummary moment_summary(const SampleSet& s);

struct CsvOptions {
    char delimiter = ',';
};

SampleSet load_sample_set(const std::filesystem::path& path, const CsvOptions& options = {});
SampleSet parse_sample_set(std::string_view text, const CsvOptions& options = {});
void write_sample_set(const std::filesystem::path& path, const SampleSet& s);

}  // namespace gsw
