#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace curskel {

class IndexSet;

/// Dense real matrix with value semantics. Entries are stored row-major and
/// are immutable once constructed; every factory rejects NaN/Inf entries and
/// zero dimensions, so any Matrix in flight is finite and nonempty.
class Matrix {
public:
    static Matrix zeros(std::size_t rows, std::size_t cols);
    static Matrix identity(std::size_t n);
    /// Takes ownership of `entries` (row-major, rows*cols values).
    static Matrix from_data(std::size_t rows, std::size_t cols, std::vector<double> entries);
    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /// Row-major view of all entries.
    std::span<const double> data() const { return data_; }

    Matrix transposed() const;

    /// Row/column gather: repeats and arbitrary order are preserved.
    Matrix gather_rows(const IndexSet& rows) const;
    Matrix gather_cols(const IndexSet& cols) const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(double s, const Matrix& a);

    bool operator==(const Matrix& other) const = default;

private:
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> data_;
};

}  // namespace curskel
