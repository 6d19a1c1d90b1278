#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace crideal {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows) {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> column(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    void swap_columns(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    bool operator<(const Matrix& o) const {
        if (rows_ != o.rows_) return rows_ < o.rows_;
        if (cols_ != o.cols_) return cols_ < o.cols_;
        for (std::size_t k = 0; k < data_.size(); ++k) {
            if (data_[k] < o.data_[k]) return true;
            if (o.data_[k] < data_[k]) return false;
        }
        return false;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

// Column Hermite normal form: A * U = [H | 0], H lower triangular with positive
// pivots and entries left of each pivot reduced into [0, pivot).
struct HermiteResult {
    IntMatrix h;          // n x m, columns >= rank are zero
    IntMatrix transform;  // m x m unimodular
    std::size_t rank = 0;
};

HermiteResult hermite_form(const IntMatrix& a);

RatMatrix to_rational(const IntMatrix& a);
Rat determinant(RatMatrix a);
std::optional<RatMatrix> inverse(const RatMatrix& a);
std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b);
RatVec mat_vec(const RatMatrix& a, const RatVec& v);

// Solves H y = v for lower-triangular H with nonzero diagonal.
RatVec solve_lower(const IntMatrix& h, const RatVec& v);

Int gcd_of(const IntVec& v);
Int lcm_of_denominators(const RatVec& v);
bool is_integral(const RatVec& v);
Int floor_div(const Rat& q);

std::string to_string(const Rat& q);
std::string to_string(const RatVec& v);

}  // namespace crideal
