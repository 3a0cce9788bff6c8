#include "curskel/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "curskel/index_set.hpp"

namespace curskel {

namespace {

void check_dims(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("matrix dimensions must be positive, got " +
                                    std::to_string(rows) + "x" + std::to_string(cols));
    }
}

void check_finite(const std::vector<double>& entries) {
    for (double x : entries) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument("matrix entries must be finite");
        }
    }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    check_dims(rows, cols);
    if (data_.size() != rows_ * cols_) {
        throw std::invalid_argument("entry count " + std::to_string(data_.size()) +
                                    " does not match " + std::to_string(rows_) + "x" +
                                    std::to_string(cols_));
    }
    check_finite(data_);
}

Matrix Matrix::zeros(std::size_t rows, std::size_t cols) {
    check_dims(rows, cols);
    return Matrix(rows, cols, std::vector<double>(rows * cols, 0.0));
}

Matrix Matrix::identity(std::size_t n) {
    check_dims(n, n);
    std::vector<double> entries(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = 1.0;
    return Matrix(n, n, std::move(entries));
}

Matrix Matrix::from_data(std::size_t rows, std::size_t cols, std::vector<double> entries) {
    return Matrix(rows, cols, std::move(entries));
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    if (rows.size() == 0) throw std::invalid_argument("matrix needs at least one row");
    const std::size_t cols = rows.begin()->size();
    std::vector<double> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& row : rows) {
        if (row.size() != cols) throw std::invalid_argument("rows have unequal lengths");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return Matrix(rows.size(), cols, std::move(entries));
}

Matrix Matrix::transposed() const {
    std::vector<double> entries(rows_ * cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) entries[j * rows_ + i] = data_[i * cols_ + j];
    return Matrix(cols_, rows_, std::move(entries));
}

Matrix Matrix::gather_rows(const IndexSet& rows) const {
    rows.validate_bound(rows_, "row");
    std::vector<double> entries;
    entries.reserve(rows.size() * cols_);
    for (std::size_t i : rows.indices()) {
        entries.insert(entries.end(), data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    return Matrix(rows.size(), cols_, std::move(entries));
}

Matrix Matrix::gather_cols(const IndexSet& cols) const {
    cols.validate_bound(cols_, "column");
    std::vector<double> entries(rows_ * cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            entries[i * cols.size() + j] = data_[i * cols_ + cols[j]];
    return Matrix(rows_, cols.size(), std::move(entries));
}

namespace {

void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("shape mismatch: " + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                                    "x" + std::to_string(b.cols()));
    }
}

}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    std::vector<double> entries(a.data_.size());
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] = a.data_[i] + b.data_[i];
    return Matrix(a.rows_, a.cols_, std::move(entries));
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    std::vector<double> entries(a.data_.size());
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] = a.data_[i] - b.data_[i];
    return Matrix(a.rows_, a.cols_, std::move(entries));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("product shape mismatch: " + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + " * " + std::to_string(b.rows()) +
                                    "x" + std::to_string(b.cols()));
    }
    std::vector<double> entries(a.rows_ * b.cols_, 0.0);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const double aik = a.data_[i * a.cols_ + k];
            if (aik == 0.0) continue;
            const double* brow = &b.data_[k * b.cols_];
            double* crow = &entries[i * b.cols_];
            for (std::size_t j = 0; j < b.cols_; ++j) crow[j] += aik * brow[j];
        }
    }
    return Matrix(a.rows_, b.cols_, std::move(entries));
}

Matrix operator*(double s, const Matrix& a) {
    std::vector<double> entries(a.data_.size());
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] = s * a.data_[i];
    return Matrix(a.rows_, a.cols_, std::move(entries));
}

}  // namespace curskel
