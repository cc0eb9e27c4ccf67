#pragma once

// Dense storage and symmetric tridiagonal eigensolvers used by eigensolve.

#include <cstddef>
#include <span>
#include <vector>

namespace sjj::linalg {

// Column-major dense matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t r, std::size_t c) { return data_[r + c * rows_]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r + c * rows_]; }

    std::span<double> column(std::size_t c) { return {data_.data() + c * rows_, rows_}; }
    std::span<const double> column(std::size_t c) const { return {data_.data() + c * rows_, rows_}; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

struct TridiagonalEigen {
    std::vector<double> values;  // unsorted, as produced by the QL sweeps
    Matrix vectors;              // column k belongs to values[k]; empty if not requested
};

// Implicit QL with Wilkinson shifts. offdiag[i] couples rows i and i+1.
// Throws NumericalError after max_iterations sweeps on a single eigenvalue.
TridiagonalEigen tridiagonal_ql(std::span<const double> diag, std::span<const double> offdiag,
                                bool want_vectors, int max_iterations = 50);

// Eigenvector for a known eigenvalue via the twisted factorization
// LDL^T / UDU^T of (T - shift). Components are computed as products of
// ratios, so entries far below machine epsilon relative to the largest one
// keep their relative accuracy. Requires every offdiag entry to be nonzero
// and shift to be an isolated eigenvalue. Normalized, largest entry positive.
std::vector<double> twisted_eigenvector(std::span<const double> diag, std::span<const double> offdiag,
                                        double shift);

}  // namespace sjj::linalg
