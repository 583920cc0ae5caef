#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "p1n/errors.hpp"

namespace p1n {

/// Arbitrary-precision rational; always stored in canonical reduced form.
using Rational = boost::multiprecision::cpp_rational;

/// Exact complex scalar with rational real and imaginary parts.
/// Closed under +, -, *, / (conjugate trick); no rounding ever occurs.
struct ExactScalar {
    Rational re{0};
    Rational im{0};

    ExactScalar() = default;
    ExactScalar(int v) : re(v) {}                       // NOLINT(google-explicit-constructor)
    ExactScalar(Rational r) : re(std::move(r)) {}       // NOLINT(google-explicit-constructor)
    ExactScalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    /// The imaginary unit.
    static ExactScalar i() { return ExactScalar{Rational(0), Rational(1)}; }
    /// num/den as a real rational scalar.
    static ExactScalar frac(long long num, long long den) {
        return ExactScalar{Rational(num) / den};
    }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    ExactScalar conj() const { return {re, -im}; }

    ExactScalar operator-() const { return {-re, -im}; }
    ExactScalar operator+(const ExactScalar& o) const { return {re + o.re, im + o.im}; }
    ExactScalar operator-(const ExactScalar& o) const { return {re - o.re, im - o.im}; }
    ExactScalar operator*(const ExactScalar& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    ExactScalar operator/(const ExactScalar& o) const;
    ExactScalar& operator+=(const ExactScalar& o) { re += o.re; im += o.im; return *this; }
    ExactScalar& operator-=(const ExactScalar& o) { re -= o.re; im -= o.im; return *this; }
    ExactScalar& operator*=(const ExactScalar& o) { *this = *this * o; return *this; }

    bool operator==(const ExactScalar& o) const { return re == o.re && im == o.im; }
    bool operator!=(const ExactScalar& o) const { return !(*this == o); }

    /// Render as "0", "3/4", "-1/2+1i", "1i", ... (exact, human-readable).
    std::string str() const;
};

/// Dense matrix of exact complex scalars; equality is entrywise exact.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    /// Build from nested initializer lists of integers (row major).
    static ExactMatrix from_ints(std::initializer_list<std::initializer_list<int>> rows);
    static ExactMatrix identity(std::size_t n);
    static ExactMatrix zero(std::size_t rows, std::size_t cols);
    /// Diagonal matrix from the given exact entries.
    static ExactMatrix diag(const std::vector<ExactScalar>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    ExactScalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const ExactScalar& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator-() const;
    bool operator==(const ExactMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    ExactMatrix scaled(const ExactScalar& s) const;
    ExactMatrix conj_transpose() const;
    ExactScalar trace() const;
    bool is_zero() const;
    bool is_hermitian() const { return *this == conj_transpose(); }

    /// Exact inverse by Gauss-Jordan elimination; throws shape_error if
    /// non-square, construction_error if singular.
    ExactMatrix inverse() const;
    /// Rank over the rationals (exact Gaussian elimination).
    std::size_t rank() const;
    /// Characteristic polynomial coefficients c_0..c_n of det(xI - A)
    /// = x^n + c_{n-1} x^{n-1} + ... + c_0, via the Faddeev-LeVerrier
    /// recurrence (exact).
    std::vector<ExactScalar> char_poly() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<ExactScalar> e_;
};

/// AB - BA, exact. Throws shape_error unless both are square and equal size.
ExactMatrix commutator(const ExactMatrix& A, const ExactMatrix& B);
/// AB + BA, exact. Throws shape_error unless both are square and equal size.
ExactMatrix anticommutator(const ExactMatrix& A, const ExactMatrix& B);
/// Kronecker product, (rA*rB) x (cA*cB), exact.
ExactMatrix kron(const ExactMatrix& A, const ExactMatrix& B);

/// An ordered list of index labels with a +1/-1 diagonal metric entry each,
/// e.g. (0..4; +,-,-,-,-) for the Lorentz-type sections and (1..5; +,+,+,+,+)
/// for the all-plus trilinear-algebra section.
struct MetricSignature {
    std::vector<int> labels;
    std::vector<int> diag;

    /// (+1, -1 x num_spatial) with labels 0..num_spatial.
    static MetricSignature lorentz(int num_spatial);
    /// all +1 with labels first..first+count-1.
    static MetricSignature all_plus(int count, int first_label = 1);

    /// Metric entry for a pair of labels (0 off the diagonal).
    int g(int label_a, int label_b) const;
    int size() const { return static_cast<int>(labels.size()); }
};

}  // namespace p1n
