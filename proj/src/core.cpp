#include "gsw/core.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gsw/error.hpp"
#include "gsw/kernels.hpp"

namespace gsw {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) {
        throw InvalidArgument("matrix storage does not match its shape");
    }
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

SampleSet::SampleSet(Matrix data) {
    if (data.rows() == 0 || data.cols() == 0) {
        throw InvalidArgument("sample set needs at least one sample and one dimension");
    }
    for (const double v : data.values()) {
        if (!std::isfinite(v)) {
            throw InvalidArgument("sample set entries must be finite");
        }
    }
    data_ = std::make_shared<const Matrix>(std::move(data));
}

DefiningFunctionSpec DefiningFunctionSpec::linear() { return {}; }

DefiningFunctionSpec DefiningFunctionSpec::polynomial(unsigned m) {
    DefiningFunctionSpec g;
    g.kind = DefiningKind::Polynomial;
    g.degree = m;
    g.validate();
    return g;
}

DefiningFunctionSpec DefiningFunctionSpec::neural(unsigned n) {
    DefiningFunctionSpec g;
    g.kind = DefiningKind::Neural;
    g.layers = n;
    return g;
}

DefiningFunctionSpec DefiningFunctionSpec::circular(double t) {
    DefiningFunctionSpec g;
    g.kind = DefiningKind::Circular;
    g.radius = t;
    g.validate();
    return g;
}

void DefiningFunctionSpec::validate() const {
    if (kind == DefiningKind::Polynomial && (degree == 0 || degree % 2 == 0)) {
        throw InvalidArgument("polynomial degree must be an odd positive integer, got " +
                              std::to_string(degree));
    }
    if (kind == DefiningKind::Circular && !(radius > 0.0 && std::isfinite(radius))) {
        throw InvalidArgument("circular radius t must be positive");
    }
}

std::string to_string(DefiningKind kind) {
    switch (kind) {
        case DefiningKind::Linear: return "linear";
        case DefiningKind::Polynomial: return "poly";
        case DefiningKind::Neural: return "neural";
        case DefiningKind::Circular: return "circular";
    }
    return "unknown";
}

MomentSummary summarize(const ColumnMoments& moments) {
    MomentSummary out;
    const auto n = static_cast<double>(moments.n_rows);
    const std::size_t d = moments.sum.size();
    out.mean.resize(d);
    double second = 0.0;
    double centered = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        const double mean = moments.sum[i] / n;
        const double raw = moments.sum_sq[i] / n;
        out.mean[i] = mean;
        second += raw;
        centered += raw - mean * mean;
    }
    out.second_moment = second;
    // Per-column variances can round slightly below zero.
    out.centered_second_moment = std::max(centered, 0.0);
    return out;
}

MomentSummary moment_summary(const SampleSet& s) {
    return summarize(kernels::column_moments(s.data()));
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line, char delim) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(delim, start);
        if (pos == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            return fields;
        }
        fields.push_back(trim(line.substr(start, pos - start)));
        start = pos + 1;
    }
}

bool parse_number(std::string_view field, double& out) {
    if (field.empty()) {
        return false;
    }
    if (field.front() == '+') {
        field.remove_prefix(1);
    }
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, out);
    return ec == std::errc() && ptr == end;
}

}  // namespace

SampleSet parse_sample_set(std::string_view text, const CsvOptions& options) {
    std::vector<double> values;
    std::size_t cols = 0;
    std::size_t rows = 0;
    std::size_t line_no = 0;
    bool first_content = true;

    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        const std::string_view line = trim(text.substr(start, end - start));
        start = end + 1;
        ++line_no;
        if (line.empty()) {
            if (end == text.size()) {
                break;
            }
            continue;
        }
        const auto fields = split(line, options.delimiter);
        if (first_content) {
            first_content = false;
            double scratch = 0.0;
            const bool any_numeric = std::any_of(fields.begin(), fields.end(), [&](auto f) {
                return parse_number(f, scratch);
            });
            if (!any_numeric) {
                continue;  // header row
            }
        }
        if (cols == 0) {
            cols = fields.size();
        } else if (fields.size() != cols) {
            throw ParseError("row " + std::to_string(line_no) + " has " +
                                 std::to_string(fields.size()) + " fields, expected " +
                                 std::to_string(cols),
                             line_no, 0);
        }
        for (std::size_t c = 0; c < fields.size(); ++c) {
            double v = 0.0;
            if (!parse_number(fields[c], v)) {
                throw ParseError("row " + std::to_string(line_no) + ", column " +
                                     std::to_string(c + 1) + ": not a number: '" +
                                     std::string(fields[c]) + "'",
                                 line_no, c + 1);
            }
            if (!std::isfinite(v)) {
                throw ParseError("row " + std::to_string(line_no) + ", column " +
                                     std::to_string(c + 1) + ": non-finite value",
                                 line_no, c + 1);
            }
            values.push_back(v);
        }
        ++rows;
        if (end == text.size()) {
            break;
        }
    }
    if (rows == 0) {
        throw ParseError("no data rows", line_no, 0);
    }
    return SampleSet(Matrix(rows, cols, std::move(values)));
}

SampleSet load_sample_set(const std::filesystem::path& path, const CsvOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw IoError("failed reading '" + path.string() + "'");
    }
    return parse_sample_set(buffer.str(), options);
}

void write_sample_set(const std::filesystem::path& path, const SampleSet& s) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write '" + path.string() + "'");
    }
    char buf[32];
    for (std::size_t j = 0; j < s.n_samples(); ++j) {
        const auto row = s.row(j);
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::snprintf(buf, sizeof buf, "%.17g", row[c]);
            out << (c ? "," : "") << buf;
        }
        out << '\n';
    }
}

}  // namespace gsw
