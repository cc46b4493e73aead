#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace toriglue {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;

/// Dense row-major matrix over an exact scalar (mpz_class or mpq_class).
/// All arithmetic is exact; there are no overflow semantics anywhere.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw std::invalid_argument("matrix: ragged initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }
    bool operator!=(const Matrix& other) const { return !(*this == other); }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }

    std::vector<T> column(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    void append_row(const std::vector<T>& r) {
        if (rows_ == 0 && cols_ == 0) cols_ = r.size();
        if (r.size() != cols_) throw std::invalid_argument("matrix: row length mismatch");
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;

inline IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

template <typename T>
Matrix<T> transpose(const Matrix<T>& m) {
    Matrix<T> t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            t(j, i) = m(i, j);
    return t;
}

/// Horizontal concatenation (A | B); row counts must agree.
template <typename T>
Matrix<T> hcat(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row count mismatch");
    Matrix<T> m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

template <typename T>
Matrix<T> select_columns(const Matrix<T>& m, const std::vector<std::size_t>& cols) {
    Matrix<T> s(m.rows(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] >= m.cols()) throw std::invalid_argument("select_columns: index out of range");
        for (std::size_t i = 0; i < m.rows(); ++i) s(i, j) = m(i, cols[j]);
    }
    return s;
}

template <typename T>
Matrix<T> delete_column(const Matrix<T>& m, std::size_t col) {
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (j != col) keep.push_back(j);
    return select_columns(m, keep);
}

template <typename T>
Matrix<T> delete_row(const Matrix<T>& m, std::size_t row) {
    Matrix<T> s(m.rows() - 1, m.cols());
    for (std::size_t i = 0, k = 0; i < m.rows(); ++i) {
        if (i == row) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) s(k, j) = m(i, j);
        ++k;
    }
    return s;
}

inline bool is_nonnegative(const IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) < 0) return false;
    return true;
}

inline Int min_entry(const IntMatrix& m) {
    if (m.empty()) throw std::invalid_argument("min_entry: empty matrix");
    Int best = m(0, 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) < best) best = m(i, j);
    return best;
}

inline IntVector column_sums(const IntMatrix& m) {
    IntVector s(m.cols(), 0);
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            s[j] += m(i, j);
    return s;
}

/// gcd of all entries of a vector (nonnegative; 0 for the zero vector).
inline Int content(const IntVector& v) {
    Int g = 0;
    for (const Int& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

// ---------------------------------------------------------------------------
// Shared matrix text format: first line "rows cols", then `rows` lines of
// `cols` space-separated integers; '#' starts a comment line.  A JSON object
// {"rows":n,"cols":p,"entries":[[...],...]} is accepted interchangeably.
// ---------------------------------------------------------------------------

inline Int int_from_json(const nlohmann::json& v) {
    if (v.is_number_integer()) return Int(static_cast<long>(v.get<long long>()));
    if (v.is_string()) return Int(v.get<std::string>());
    throw std::runtime_error("matrix json: entry is not an integer");
}

inline IntMatrix matrix_from_json(const nlohmann::json& j) {
    const std::size_t rows = j.at("rows").get<std::size_t>();
    const std::size_t cols = j.at("cols").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (entries.size() != rows) throw std::runtime_error("matrix json: row count mismatch");
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (entries[i].size() != cols) throw std::runtime_error("matrix json: column count mismatch");
        for (std::size_t jx = 0; jx < cols; ++jx) m(i, jx) = int_from_json(entries[i][jx]);
    }
    return m;
}

inline IntMatrix read_matrix(std::istream& in) {
    // peek past leading whitespace/comments to decide between JSON and text
    std::string body, line;
    while (std::getline(in, line)) {
        std::size_t k = line.find_first_not_of(" \t\r");
        if (k == std::string::npos || line[k] == '#') continue;
        body += line;
        body += '\n';
    }
    std::size_t k = body.find_first_not_of(" \t\n");
    if (k == std::string::npos) throw std::runtime_error("matrix: empty input");
    if (body[k] == '{') return matrix_from_json(nlohmann::json::parse(body));

    std::istringstream ss(body);
    std::size_t rows, cols;
    if (!(ss >> rows >> cols)) throw std::runtime_error("matrix: bad header line");
    if (rows == 0 || cols == 0) throw std::runtime_error("matrix: dimensions must be positive");
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            std::string tok;
            if (!(ss >> tok)) throw std::runtime_error("matrix: not enough entries");
            try {
                m(i, j) = Int(tok);
            } catch (const std::invalid_argument&) {
                throw std::runtime_error("matrix: bad integer '" + tok + "'");
            }
        }
    std::string rest;
    if (ss >> rest) throw std::runtime_error("matrix: trailing data '" + rest + "'");
    return m;
}

inline IntMatrix parse_matrix(const std::string& text) {
    std::istringstream ss(text);
    return read_matrix(ss);
}

inline std::string to_text(const IntMatrix& m) {
    std::ostringstream out;
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << m(i, j);
        }
        out << '\n';
    }
    return out.str();
}

inline nlohmann::json matrix_to_json(const IntMatrix& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).fits_slong_p())
                row.push_back(m(i, j).get_si());
            else
                row.push_back(m(i, j).get_str());
        }
        entries.push_back(std::move(row));
    }
    return nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

}  // namespace toriglue
