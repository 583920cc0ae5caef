#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "p1n/exact.hpp"

namespace p1n {

using cdouble = std::complex<double>;

/// Dense complex double-precision matrix (row major). Construction rejects
/// non-finite entries; all heavy numerics (eigendecomposition, exponential)
/// live here.
class NumericMatrix {
public:
    NumericMatrix() = default;
    NumericMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    NumericMatrix(std::size_t rows, std::size_t cols, std::vector<cdouble> entries);

    static NumericMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    cdouble& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const cdouble& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    const std::vector<cdouble>& entries() const { return e_; }

    NumericMatrix operator+(const NumericMatrix& o) const;
    NumericMatrix operator-(const NumericMatrix& o) const;
    NumericMatrix operator*(const NumericMatrix& o) const;
    NumericMatrix scaled(cdouble s) const;
    NumericMatrix conj_transpose() const;

    /// Largest entry magnitude.
    double max_abs() const;
    /// Frobenius norm.
    double frobenius() const;
    /// max_abs distance from Hermitian / anti-Hermitian / unitary.
    double hermiticity_defect() const;
    double antihermiticity_defect() const;
    double unitarity_defect() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cdouble> e_;
};

NumericMatrix commutator(const NumericMatrix& A, const NumericMatrix& B);

/// Entrywise nearest-double conversion of an exact matrix.
NumericMatrix to_numeric(const ExactMatrix& A);

/// Eigendecomposition of a Hermitian matrix: eigenvalues ascending,
/// eigenvector columns deterministically phase-fixed (largest-magnitude
/// component made real positive). Throws contract_error if the input is not
/// Hermitian within 1e-12 (max-abs) or not finite.
std::pair<std::vector<double>, NumericMatrix> eigh(const NumericMatrix& A);

/// exp(A) for anti-Hermitian A by scaling-and-squaring with a Taylor core;
/// the result is unitary within 1e-12 (checked). Throws contract_error if A
/// is not anti-Hermitian within 1e-12.
NumericMatrix expm_antihermitian(const NumericMatrix& A);

}  // namespace p1n
