#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "curskel/matrix.hpp"

namespace curskel::cli {

/// File-level failure; messages carry the 1-based line number.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

enum class MatrixFormat { Auto, Csv, MatrixMarket };

/// Auto means detect from the extension (.csv / .mtx).
MatrixFormat detect_format(const std::filesystem::path& path, MatrixFormat requested);

inline constexpr std::size_t kDefaultDenseCap = 4'000'000;

/// Loads a dense matrix. CSV: rectangular comma-separated decimals with an
/// optional single leading '#' header line. MatrixMarket: "array real
/// general" (column-major values) or "coordinate real general" (densified;
/// throws budget_exceeded_error past dense_cap entries).
Matrix load_matrix(const std::filesystem::path& path, MatrixFormat format = MatrixFormat::Auto,
                   std::size_t dense_cap = kDefaultDenseCap);

Matrix load_csv(std::istream& in);
Matrix load_matrix_market(std::istream& in, std::size_t dense_cap = kDefaultDenseCap);

/// Writes CSV with round-trip (17 significant digit) formatting.
void write_csv(const Matrix& a, std::ostream& out);
void write_csv(const Matrix& a, const std::filesystem::path& path);

}  // namespace curskel::cli
