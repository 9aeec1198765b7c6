#include "hoi/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hoi {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

ComplexMatrix::ComplexMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols, Complex{0.0, 0.0}) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
}

ComplexMatrix::ComplexMatrix(int rows, int cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
    if (entries_.size() != static_cast<size_t>(rows) * cols)
        throw std::invalid_argument("entry count does not match dimensions");
    check_finite();
}

void ComplexMatrix::check_finite() const {
    for (const Complex& z : entries_)
        if (!finite(z)) throw std::invalid_argument("non-finite matrix entry");
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& d) {
    ComplexMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    m.check_finite();
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = std::conj(at(i, j));
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

ComplexMatrix ComplexMatrix::conj() const {
    ComplexMatrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = std::conj(at(i, j));
    return m;
}

Complex ComplexMatrix::trace() const {
    Complex t{0.0, 0.0};
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& z : entries_) s += std::norm(z);
    return std::sqrt(s);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    for (size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    for (size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (Complex& z : entries_) z *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch");
    ComplexMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Complex aik = a.at(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (int j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (int ia = 0; ia < a.rows(); ++ia)
        for (int ja = 0; ja < a.cols(); ++ja) {
            const Complex f = a.at(ia, ja);
            for (int ib = 0; ib < b.rows(); ++ib)
                for (int jb = 0; jb < b.cols(); ++jb)
                    c.at(ia * b.rows() + ib, ja * b.cols() + jb) = f * b.at(ib, jb);
        }
    return c;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_a, int dim_b, Factor keep) {
    if (dim_a <= 0 || dim_b <= 0 || !m.square() || m.rows() != dim_a * dim_b)
        throw std::invalid_argument("incompatible factorization");
    if (keep == Factor::First) {
        ComplexMatrix out(dim_a, dim_a);
        for (int a = 0; a < dim_a; ++a)
            for (int ap = 0; ap < dim_a; ++ap) {
                Complex s{0.0, 0.0};
                for (int b = 0; b < dim_b; ++b) s += m.at(a * dim_b + b, ap * dim_b + b);
                out.at(a, ap) = s;
            }
        return out;
    }
    ComplexMatrix out(dim_b, dim_b);
    for (int b = 0; b < dim_b; ++b)
        for (int bp = 0; bp < dim_b; ++bp) {
            Complex s{0.0, 0.0};
            for (int a = 0; a < dim_a; ++a) s += m.at(a * dim_b + b, a * dim_b + bp);
            out.at(b, bp) = s;
        }
    return out;
}

bool is_hermitian(const ComplexMatrix& h, double tol) {
    if (!h.square()) return false;
    return (h - h.adjoint()).frobenius_norm() <= tol;
}

bool is_unitary(const ComplexMatrix& u, double tol) {
    if (!u.square()) throw std::invalid_argument("is_unitary requires a square matrix");
    return (u.adjoint() * u - ComplexMatrix::identity(u.rows())).frobenius_norm() <= tol;
}

namespace {

double offdiag_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a.at(i, j));
    return std::sqrt(s);
}

}  // namespace

EigenDecomposition eig_hermitian(const ComplexMatrix& h) {
    if (!h.square()) throw std::invalid_argument("not Hermitian");
    const double scale = std::max(1.0, h.frobenius_norm());
    if ((h - h.adjoint()).frobenius_norm() > 1e-10 * scale)
        throw std::invalid_argument("not Hermitian");

    const int n = h.rows();
    ComplexMatrix a = h;
    // Symmetrize so the iteration works on an exactly Hermitian matrix.
    for (int i = 0; i < n; ++i) {
        a.at(i, i) = Complex{a.at(i, i).real(), 0.0};
        for (int j = i + 1; j < n; ++j) {
            const Complex m = 0.5 * (a.at(i, j) + std::conj(a.at(j, i)));
            a.at(i, j) = m;
            a.at(j, i) = std::conj(m);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const int max_sweeps = 100;
    const double target = 1e-14 * scale;
    for (int sweep = 0; sweep < max_sweeps && offdiag_norm(a) > target; ++sweep) {
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = a.at(p, q);
                const double m = std::abs(apq);
                if (m <= 1e-300) continue;
                const Complex phase = apq / m;  // apq = m * e^{i phi}
                const double app = a.at(p, p).real();
                const double aqq = a.at(q, q).real();
                const double tau = (aqq - app) / (2.0 * m);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex sp = s * phase;
                // Column update: A <- A U with U = [[c, s e^{i phi}], [-s e^{-i phi}, c]]
                for (int k = 0; k < n; ++k) {
                    const Complex akp = a.at(k, p), akq = a.at(k, q);
                    a.at(k, p) = c * akp - std::conj(sp) * akq;
                    a.at(k, q) = sp * akp + c * akq;
                }
                // Row update: A <- U^dag A
                for (int k = 0; k < n; ++k) {
                    const Complex apk = a.at(p, k), aqk = a.at(q, k);
                    a.at(p, k) = c * apk - sp * aqk;
                    a.at(q, k) = std::conj(sp) * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const Complex vkp = v.at(k, p), vkq = v.at(k, q);
                    v.at(k, p) = c * vkp - std::conj(sp) * vkq;
                    v.at(k, q) = sp * vkp + c * vkq;
                }
            }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a.at(i, i).real() > a.at(j, j).real(); });

    EigenDecomposition d;
    d.eigenvalues.resize(n);
    d.eigenvectors = ComplexMatrix(n, n);
    for (int j = 0; j < n; ++j) {
        d.eigenvalues[j] = a.at(order[j], order[j]).real();
        for (int i = 0; i < n; ++i) d.eigenvectors.at(i, j) = v.at(i, order[j]);
    }
    return d;
}

}  // namespace hoi
