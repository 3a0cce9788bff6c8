#include "matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "curskel/errors.hpp"

namespace curskel::cli {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

double parse_value(std::string_view token, std::size_t line_no) {
    token = trim(token);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw parse_error("line " + std::to_string(line_no) + ": not a decimal literal: '" +
                          std::string(token) + "'");
    }
    if (!std::isfinite(value)) {
        throw parse_error("line " + std::to_string(line_no) + ": non-finite value: '" +
                          std::string(token) + "'");
    }
    return value;
}

std::size_t parse_dim(std::string_view token, std::size_t line_no, const char* what) {
    token = trim(token);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw parse_error("line " + std::to_string(line_no) + ": bad " + what + ": '" +
                          std::string(token) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

std::vector<std::string_view> whitespace_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

}  // namespace

MatrixFormat detect_format(const std::filesystem::path& path, MatrixFormat requested) {
    if (requested != MatrixFormat::Auto) return requested;
    const std::string ext = lower(path.extension().string());
    if (ext == ".csv") return MatrixFormat::Csv;
    if (ext == ".mtx") return MatrixFormat::MatrixMarket;
    throw parse_error("cannot detect matrix format from '" + path.string() +
                      "'; pass --format csv or --format mtx");
}

Matrix load_csv(std::istream& in) {
    std::vector<double> entries;
    std::size_t cols = 0;
    std::size_t rows = 0;
    std::string line;
    std::size_t line_no = 0;
    bool header_allowed = true;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view trimmed = trim(line);
        if (trimmed.empty()) continue;
        if (header_allowed && trimmed.front() == '#') {
            header_allowed = false;
            continue;
        }
        header_allowed = false;
        const auto fields = split(trimmed, ',');
        if (cols == 0) {
            cols = fields.size();
        } else if (fields.size() != cols) {
            throw parse_error("line " + std::to_string(line_no) + ": expected " +
                              std::to_string(cols) + " fields, got " +
                              std::to_string(fields.size()));
        }
        for (const auto& field : fields) entries.push_back(parse_value(field, line_no));
        ++rows;
    }
    if (rows == 0) throw parse_error("no matrix rows found");
    return Matrix::from_data(rows, cols, std::move(entries));
}

namespace {

Matrix load_mm_array(std::istream& in, std::size_t& line_no) {
    std::string line;
    std::size_t m = 0, n = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view t = trim(line);
        if (t.empty() || t.front() == '%') continue;
        const auto dims = whitespace_tokens(t);
        if (dims.size() != 2) {
            throw parse_error("line " + std::to_string(line_no) +
                              ": array size line must be 'rows cols'");
        }
        m = parse_dim(dims[0], line_no, "row count");
        n = parse_dim(dims[1], line_no, "column count");
        break;
    }
    if (m == 0 || n == 0) throw parse_error("line " + std::to_string(line_no) + ": bad dimensions");

    // Array values run down the columns.
    std::vector<double> entries(m * n, 0.0);
    std::size_t count = 0;
    while (count < m * n && std::getline(in, line)) {
        ++line_no;
        const std::string_view t = trim(line);
        if (t.empty() || t.front() == '%') continue;
        for (const auto& token : whitespace_tokens(t)) {
            if (count >= m * n) {
                throw parse_error("line " + std::to_string(line_no) + ": extra values after " +
                                  std::to_string(m * n));
            }
            const std::size_t i = count % m;
            const std::size_t j = count / m;
            entries[i * n + j] = parse_value(token, line_no);
            ++count;
        }
    }
    if (count != m * n) {
        throw parse_error("unexpected end of file: read " + std::to_string(count) + " of " +
                          std::to_string(m * n) + " values");
    }
    return Matrix::from_data(m, n, std::move(entries));
}

Matrix load_mm_coordinate(std::istream& in, std::size_t& line_no, std::size_t dense_cap) {
    std::string line;
    std::size_t m = 0, n = 0, nnz = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view t = trim(line);
        if (t.empty() || t.front() == '%') continue;
        const auto dims = whitespace_tokens(t);
        if (dims.size() != 3) {
            throw parse_error("line " + std::to_string(line_no) +
                              ": coordinate size line must be 'rows cols nnz'");
        }
        m = parse_dim(dims[0], line_no, "row count");
        n = parse_dim(dims[1], line_no, "column count");
        nnz = parse_dim(dims[2], line_no, "entry count");
        break;
    }
    if (m == 0 || n == 0) throw parse_error("line " + std::to_string(line_no) + ": bad dimensions");
    if (m > dense_cap / n) {
        throw budget_exceeded_error("densifying " + std::to_string(m) + "x" + std::to_string(n) +
                                    " exceeds the cap of " + std::to_string(dense_cap) +
                                    " entries");
    }

    std::vector<double> entries(m * n, 0.0);
    std::vector<bool> seen(m * n, false);
    std::size_t count = 0;
    while (count < nnz && std::getline(in, line)) {
        ++line_no;
        const std::string_view t = trim(line);
        if (t.empty() || t.front() == '%') continue;
        const auto fields = whitespace_tokens(t);
        if (fields.size() != 3) {
            throw parse_error("line " + std::to_string(line_no) + ": expected 'i j value'");
        }
        const std::size_t i = parse_dim(fields[0], line_no, "row index");
        const std::size_t j = parse_dim(fields[1], line_no, "column index");
        if (i < 1 || i > m || j < 1 || j > n) {
            throw parse_error("line " + std::to_string(line_no) + ": index (" + std::to_string(i) +
                              ", " + std::to_string(j) + ") outside " + std::to_string(m) + "x" +
                              std::to_string(n));
        }
        const std::size_t flat = (i - 1) * n + (j - 1);
        if (seen[flat]) {
            throw parse_error("line " + std::to_string(line_no) + ": duplicate entry (" +
                              std::to_string(i) + ", " + std::to_string(j) + ")");
        }
        seen[flat] = true;
        entries[flat] = parse_value(fields[2], line_no);
        ++count;
    }
    if (count != nnz) {
        throw parse_error("unexpected end of file: read " + std::to_string(count) + " of " +
                          std::to_string(nnz) + " entries");
    }
    return Matrix::from_data(m, n, std::move(entries));
}

}  // namespace

Matrix load_matrix_market(std::istream& in, std::size_t dense_cap) {
    std::string banner;
    if (!std::getline(in, banner)) throw parse_error("empty file");
    std::size_t line_no = 1;
    const auto tokens = whitespace_tokens(banner);
    if (tokens.size() < 5 || lower(std::string(tokens[0])) != "%%matrixmarket" ||
        lower(std::string(tokens[1])) != "matrix") {
        throw parse_error("line 1: expected '%%MatrixMarket matrix <format> real general'");
    }
    const std::string format = lower(std::string(tokens[2]));
    const std::string field = lower(std::string(tokens[3]));
    const std::string symmetry = lower(std::string(tokens[4]));
    if (field != "real" || symmetry != "general") {
        throw parse_error("line 1: only 'real general' matrices are supported");
    }
    if (format == "array") return load_mm_array(in, line_no);
    if (format == "coordinate") return load_mm_coordinate(in, line_no, dense_cap);
    throw parse_error("line 1: unknown MatrixMarket format '" + format + "'");
}

Matrix load_matrix(const std::filesystem::path& path, MatrixFormat format, std::size_t dense_cap) {
    const MatrixFormat resolved = detect_format(path, format);
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path.string() + "'");
    try {
        return resolved == MatrixFormat::Csv ? load_csv(in) : load_matrix_market(in, dense_cap);
    } catch (const parse_error& e) {
        throw parse_error(path.string() + ": " + e.what());
    }
}

void write_csv(const Matrix& a, std::ostream& out) {
    char buffer[64];
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            std::snprintf(buffer, sizeof(buffer), "%.17g", a(i, j));
            out << buffer << (j + 1 < a.cols() ? "," : "");
        }
        out << '\n';
    }
}

void write_csv(const Matrix& a, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open '" + path.string() + "' for writing");
    write_csv(a, out);
}

}  // namespace curskel::cli
