#include "p1n/numeric.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace p1n {

namespace {

Eigen::MatrixXcd to_eigen(const NumericMatrix& m) {
    Eigen::MatrixXcd r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m.at(i, j);
    return r;
}

NumericMatrix from_eigen(const Eigen::MatrixXcd& m) {
    NumericMatrix r(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) r.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
    return r;
}

void require_finite(const std::vector<cdouble>& entries) {
    for (const auto& v : entries) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw contract_error("NumericMatrix: non-finite entry");
        }
    }
}

}  // namespace

NumericMatrix::NumericMatrix(std::size_t rows, std::size_t cols, std::vector<cdouble> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_) throw shape_error("NumericMatrix: entry count mismatch");
    require_finite(e_);
}

NumericMatrix NumericMatrix::identity(std::size_t n) {
    NumericMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

NumericMatrix NumericMatrix::operator+(const NumericMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw shape_error("matrix addition: size mismatch");
    NumericMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

NumericMatrix NumericMatrix::operator-(const NumericMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw shape_error("matrix subtraction: size mismatch");
    NumericMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

NumericMatrix NumericMatrix::operator*(const NumericMatrix& o) const {
    if (cols_ != o.rows_) throw shape_error("matrix product: inner dimension mismatch");
    return from_eigen(to_eigen(*this) * to_eigen(o));
}

NumericMatrix NumericMatrix::scaled(cdouble s) const {
    NumericMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
    return r;
}

NumericMatrix NumericMatrix::conj_transpose() const {
    NumericMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = std::conj(at(i, j));
    return r;
}

double NumericMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : e_) m = std::max(m, std::abs(v));
    return m;
}

double NumericMatrix::frobenius() const {
    double s = 0.0;
    for (const auto& v : e_) s += std::norm(v);
    return std::sqrt(s);
}

double NumericMatrix::hermiticity_defect() const {
    if (!is_square()) throw shape_error("hermiticity_defect: non-square matrix");
    return (*this - conj_transpose()).max_abs();
}

double NumericMatrix::antihermiticity_defect() const {
    if (!is_square()) throw shape_error("antihermiticity_defect: non-square matrix");
    return (*this + conj_transpose()).max_abs();
}

double NumericMatrix::unitarity_defect() const {
    if (!is_square()) throw shape_error("unitarity_defect: non-square matrix");
    return (conj_transpose() * (*this) - identity(rows_)).max_abs();
}

NumericMatrix commutator(const NumericMatrix& A, const NumericMatrix& B) {
    if (!A.is_square() || !B.is_square() || A.rows() != B.rows()) {
        throw shape_error("commutator: operands must be square and of equal size");
    }
    return A * B - B * A;
}

NumericMatrix to_numeric(const ExactMatrix& A) {
    NumericMatrix r(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) {
            const ExactScalar& v = A.at(i, j);
            r.at(i, j) = cdouble(v.re.convert_to<double>(), v.im.convert_to<double>());
        }
    return r;
}

std::pair<std::vector<double>, NumericMatrix> eigh(const NumericMatrix& A) {
    if (!A.is_square()) throw shape_error("eigh: non-square matrix");
    if (A.hermiticity_defect() > 1e-12) {
        throw contract_error("eigh: input is not Hermitian within 1e-12");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(A));
    if (solver.info() != Eigen::Success) throw contract_error("eigh: eigensolver failed");
    Eigen::VectorXd vals = solver.eigenvalues();   // ascending
    Eigen::MatrixXcd vecs = solver.eigenvectors();
    // Deterministic column phases: rotate so the largest-magnitude component
    // (first occurrence on ties) is real positive.
    for (Eigen::Index c = 0; c < vecs.cols(); ++c) {
        Eigen::Index arg = 0;
        double best = -1.0;
        for (Eigen::Index r = 0; r < vecs.rows(); ++r) {
            double a = std::abs(vecs(r, c));
            if (a > best + 1e-14) {
                best = a;
                arg = r;
            }
        }
        cdouble pivot = vecs(arg, c);
        if (std::abs(pivot) > 0) vecs.col(c) *= std::conj(pivot) / std::abs(pivot);
    }
    std::vector<double> eigenvalues(vals.data(), vals.data() + vals.size());
    return {std::move(eigenvalues), from_eigen(vecs)};
}

NumericMatrix expm_antihermitian(const NumericMatrix& A) {
    if (!A.is_square()) throw shape_error("expm_antihermitian: non-square matrix");
    if (A.antihermiticity_defect() > 1e-12) {
        throw contract_error("expm_antihermitian: input is not anti-Hermitian within 1e-12");
    }
    // Scaling and squaring: scale below 1/4, expand a Taylor series to
    // machine precision, square back up.
    const std::size_t n = A.rows();
    double norm = A.max_abs() * static_cast<double>(n);
    int s = 0;
    while (norm > 0.25) {
        norm *= 0.5;
        ++s;
    }
    NumericMatrix B = A.scaled(std::pow(0.5, s));
    NumericMatrix result = NumericMatrix::identity(n);
    NumericMatrix term = NumericMatrix::identity(n);
    for (int k = 1; k <= 40; ++k) {
        term = (term * B).scaled(1.0 / k);
        result = result + term;
        if (term.max_abs() < 1e-20) break;
    }
    for (int k = 0; k < s; ++k) result = result * result;
    if (result.unitarity_defect() > 1e-12) {
        throw contract_error("expm_antihermitian: result failed the unitarity check");
    }
    return result;
}

}  // namespace p1n
