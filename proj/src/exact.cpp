#include "p1n/exact.hpp"

#include <sstream>

namespace p1n {

ExactScalar ExactScalar::operator/(const ExactScalar& o) const {
    Rational denom = o.re * o.re + o.im * o.im;
    if (denom == 0) {
        throw contract_error("ExactScalar division by zero");
    }
    return {(re * o.re + im * o.im) / denom, (im * o.re - re * o.im) / denom};
}

namespace {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace

std::string ExactScalar::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (re != 0) out = rational_str(re);
    if (im != 0) {
        if (!out.empty() && im > 0) out += "+";
        out += rational_str(im) + "i";
    }
    return out;
}

ExactMatrix ExactMatrix::from_ints(std::initializer_list<std::initializer_list<int>> rows) {
    ExactMatrix m(rows.size(), rows.begin()->size());
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != m.cols_) {
            throw shape_error("from_ints: ragged initializer");
        }
        std::size_t c = 0;
        for (int v : row) m.at(r, c++) = ExactScalar(v);
        ++r;
    }
    return m;
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ExactScalar(1);
    return m;
}

ExactMatrix ExactMatrix::zero(std::size_t rows, std::size_t cols) {
    return ExactMatrix(rows, cols);
}

ExactMatrix ExactMatrix::diag(const std::vector<ExactScalar>& d) {
    ExactMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw shape_error("matrix addition: size mismatch");
    ExactMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw shape_error("matrix subtraction: size mismatch");
    ExactMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw shape_error("matrix product: inner dimension mismatch");
    ExactMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const ExactScalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const ExactScalar& bkj = o.at(k, j);
                if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
            }
        }
    }
    return r;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
    return r;
}

ExactMatrix ExactMatrix::scaled(const ExactScalar& s) const {
    ExactMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
    return r;
}

ExactMatrix ExactMatrix::conj_transpose() const {
    ExactMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
    return r;
}

ExactScalar ExactMatrix::trace() const {
    if (!is_square()) throw shape_error("trace: non-square matrix");
    ExactScalar t;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool ExactMatrix::is_zero() const {
    for (const auto& v : e_)
        if (!v.is_zero()) return false;
    return true;
}

ExactMatrix ExactMatrix::inverse() const {
    if (!is_square()) throw shape_error("inverse: non-square matrix");
    const std::size_t n = rows_;
    ExactMatrix a = *this;
    ExactMatrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw construction_error("inverse: singular matrix");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        ExactScalar p = a.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) = a.at(col, j) / p;
            inv.at(col, j) = inv.at(col, j) / p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            ExactScalar f = a.at(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(r, j) -= f * a.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::size_t ExactMatrix::rank() const {
    ExactMatrix a = *this;
    std::size_t rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t pivot = row;
        while (pivot < rows_ && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(a.at(pivot, j), a.at(row, j));
        ExactScalar p = a.at(row, col);
        for (std::size_t r = row + 1; r < rows_; ++r) {
            if (a.at(r, col).is_zero()) continue;
            ExactScalar f = a.at(r, col) / p;
            for (std::size_t j = col; j < cols_; ++j) a.at(r, j) -= f * a.at(row, j);
        }
        ++row;
        ++rank;
    }
    return rank;
}

std::vector<ExactScalar> ExactMatrix::char_poly() const {
    if (!is_square()) throw shape_error("char_poly: non-square matrix");
    const std::size_t n = rows_;
    // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr M_1;
    // M_{k+1} = A (M_k + c_{n-k} I), c_{n-k-1} = -tr(M_{k+1})/(k+1).
    std::vector<ExactScalar> c(n + 1);
    c[n] = ExactScalar(1);
    ExactMatrix M = *this;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            ExactMatrix shifted = M;
            for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) += c[n - k + 1];
            M = (*this) * shifted;
        }
        c[n - k] = -(M.trace() / ExactScalar(static_cast<int>(k)));
    }
    return c;
}

ExactMatrix commutator(const ExactMatrix& A, const ExactMatrix& B) {
    if (!A.is_square() || !B.is_square() || A.rows() != B.rows()) {
        throw shape_error("commutator: operands must be square and of equal size");
    }
    return A * B - B * A;
}

ExactMatrix anticommutator(const ExactMatrix& A, const ExactMatrix& B) {
    if (!A.is_square() || !B.is_square() || A.rows() != B.rows()) {
        throw shape_error("anticommutator: operands must be square and of equal size");
    }
    return A * B + B * A;
}

ExactMatrix kron(const ExactMatrix& A, const ExactMatrix& B) {
    ExactMatrix r(A.rows() * B.rows(), A.cols() * B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) {
            const ExactScalar& a = A.at(i, j);
            if (a.is_zero()) continue;
            for (std::size_t k = 0; k < B.rows(); ++k)
                for (std::size_t l = 0; l < B.cols(); ++l) {
                    const ExactScalar& b = B.at(k, l);
                    if (!b.is_zero()) r.at(i * B.rows() + k, j * B.cols() + l) = a * b;
                }
        }
    return r;
}

MetricSignature MetricSignature::lorentz(int num_spatial) {
    MetricSignature m;
    m.labels.push_back(0);
    m.diag.push_back(+1);
    for (int k = 1; k <= num_spatial; ++k) {
        m.labels.push_back(k);
        m.diag.push_back(-1);
    }
    return m;
}

MetricSignature MetricSignature::all_plus(int count, int first_label) {
    MetricSignature m;
    for (int k = 0; k < count; ++k) {
        m.labels.push_back(first_label + k);
        m.diag.push_back(+1);
    }
    return m;
}

int MetricSignature::g(int label_a, int label_b) const {
    if (label_a != label_b) return 0;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label_a) return diag[i];
    throw shape_error("MetricSignature::g: unknown index label");
}

}  // namespace p1n
