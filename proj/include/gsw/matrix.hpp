#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gsw {

// Dense row-major matrix of doubles.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::span<double> values() noexcept { return data_; }
    std::span<const double> values() const noexcept { return data_; }

    Matrix transposed() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// Non-owning view of a row-major block with an explicit row stride.
struct ConstMatrixView {
    const double* data = nullptr;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t stride = 0;

    ConstMatrixView() = default;
    ConstMatrixView(const double* d, std::size_t r, std::size_t c, std::size_t s)
        : data(d), rows(r), cols(c), stride(s) {}
    ConstMatrixView(const Matrix& m)  // NOLINT(google-explicit-constructor)
        : data(m.values().data()), rows(m.rows()), cols(m.cols()), stride(m.cols()) {}

    const double* row(std::size_t r) const { return data + r * stride; }
    ConstMatrixView row_block(std::size_t first, std::size_t count) const {
        return {data + first * stride, count, cols, stride};
    }
};

struct MatrixView {
    double* data = nullptr;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t stride = 0;

    MatrixView() = default;
    MatrixView(double* d, std::size_t r, std::size_t c, std::size_t s)
        : data(d), rows(r), cols(c), stride(s) {}
    MatrixView(Matrix& m)  // NOLINT(google-explicit-constructor)
        : data(m.values().data()), rows(m.rows()), cols(m.cols()), stride(m.cols()) {}

    double* row(std::size_t r) const { return data + r * stride; }
    MatrixView row_block(std::size_t first, std::size_t count) const {
        return {data + first * stride, count, cols, stride};
    }
};

}  // namespace gsw
