#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace hoi {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. All stored entries are finite;
/// construction throws std::invalid_argument otherwise. Values are
/// immutable by convention after they leave the builder functions,
/// so instances are safe to share across threads.
class ComplexMatrix {
public:
    ComplexMatrix() : rows_(0), cols_(0) {}
    ComplexMatrix(int rows, int cols);
    ComplexMatrix(int rows, int cols, std::vector<Complex> entries);

    static ComplexMatrix identity(int n);
    static ComplexMatrix diagonal(const std::vector<Complex>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Complex& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const Complex& at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    Complex& operator()(int i, int j) { return at(i, j); }
    const Complex& operator()(int i, int j) const { return at(i, j); }

    const std::vector<Complex>& data() const { return entries_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conj() const;
    Complex trace() const;
    double frobenius_norm() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(Complex s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

    /// Throws if any entry is NaN or infinite.
    void check_finite() const;

private:
    int rows_, cols_;
    std::vector<Complex> entries_;
};

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // sorted descending
    ComplexMatrix eigenvectors;       // columns, unitary
};

/// Kronecker product. Composite basis ordering is row-major,
/// |ij> -> i*dimB + j; every higher-level module relies on this.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Factor { First, Second };

/// Marginal of a (dimA*dimB)-dimensional operator on the kept factor.
/// Throws std::invalid_argument("incompatible factorization") on a
/// dimension mismatch.
ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_a, int dim_b, Factor keep);

/// Cyclic Jacobi eigensolver for Hermitian matrices. Deterministic for a
/// fixed input. Throws std::invalid_argument("not Hermitian") when the
/// input fails ||H - H'||_F <= 1e-10 * max(1, ||H||_F).
EigenDecomposition eig_hermitian(const ComplexMatrix& h);

bool is_unitary(const ComplexMatrix& u, double tol);
bool is_hermitian(const ComplexMatrix& h, double tol);

inline constexpr double kDefaultTol = 1e-10;

}  // namespace hoi
