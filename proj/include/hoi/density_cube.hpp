#pragma once

#include <array>
#include <string>
#include <vector>

#include "hoi/linalg.hpp"

namespace hoi::dc {

/// 3x3x3 complex tensor. Externally the entries follow the 1-based paper
/// convention where rho_{ijk} is the (j,k) entry of the i-th matrix of a
/// displayed triple; internally indices are 0-based.
struct Cube {
    std::array<Complex, 27> entries{};

    Complex& at(int i, int j, int k) { return entries[static_cast<size_t>(i) * 9 + j * 3 + k]; }
    const Complex& at(int i, int j, int k) const {
        return entries[static_cast<size_t>(i) * 9 + j * 3 + k];
    }

    Cube& operator+=(const Cube& o);
    Cube& operator-=(const Cube& o);
    Cube& operator*=(Complex s);
    friend Cube operator+(Cube a, const Cube& b) { return a += b; }
    friend Cube operator-(Cube a, const Cube& b) { return a -= b; }
    friend Cube operator*(Complex s, Cube a) { return a *= s; }
};

/// Coordinates (a1..a5) in the orthonormal C-basis C^(1)..C^(5). Hermitian
/// cubes correspond to a1..a3 real and a5 = conj(a4); normalized ones have
/// a1 + a2 + a3 = 1.
struct CVec {
    std::array<Complex, 5> a{};

    Complex& operator[](size_t i) { return a[i]; }
    const Complex& operator[](size_t i) const { return a[i]; }
};

/// omega = e^{2 pi i / 3}.
Complex omega();

/// Full 27-term contraction (rho, sigma) = sum conj(rho_ijk) sigma_ijk.
Complex cube_inner(const Cube& rho, const Cube& sigma);

/// Checks the four Hermitian-cube conditions (index-permutation ties,
/// third-order conjugation cycle, unit trace, nonnegative diagonal) and
/// reports each failed one.
bool is_hermitian_cube(const Cube& rho, double tol, std::vector<std::string>* violations = nullptr);

struct CanonicalCubes {
    std::array<Cube, 3> rho;    // the displayed pure states rho^(1..3)
    std::array<CVec, 3> q;      // basis D0 in C-coordinates
    std::array<CVec, 3> rho_c;  // basis D = {rho_1..rho_3} in C-coordinates
};

CanonicalCubes canonical_cubes();

Cube cvec_to_cube(const CVec& v);

/// Inverse of cvec_to_cube on Span[C^(i)]. Throws
/// std::invalid_argument("not in C-span") when entries outside the
/// diagonal and {1,2,3}-permutation positions exceed tol, or when tied
/// positions disagree beyond tol.
CVec cube_to_cvec(const Cube& rho, double tol = 1e-10);

/// True iff the three cubes are pairwise orthonormal under cube_inner and
/// sum entrywise to the diagonal unit cube.
bool is_physical_basis(const std::array<Cube, 3>& set, double tol);

CVec apply_cvec_transform(const ComplexMatrix& m, const CVec& v);

/// The 5x5 unitary T with T q_i = rho_i, and the T' that satisfies the
/// same axioms but breaks Hermiticity of states.
ComplexMatrix constant_T();
ComplexMatrix constant_Tprime();

struct TransformReport {
    bool unitary = false;
    bool maps_physical_basis = false;        // image of D0 is a physical basis
    bool preserves_hermitian_form = false;   // images stay of the form (r1,r2,r3,w,w*)
    std::vector<size_t> violating_samples;
};

TransformReport validate_transformation(const ComplexMatrix& m, const std::vector<CVec>& samples,
                                        double tol = 1e-10);

/// Inner-product preserving embedding of qutrit density matrices into the
/// Hermitian cubes. Throws std::invalid_argument("not a quantum state")
/// for an invalid density matrix.
Cube embed_quantum(const ComplexMatrix& rho_qt);

/// Splits a cube into its third-order part (indices pairwise distinct) and
/// the rest; the two summands reconstruct the input exactly.
std::pair<Cube, Cube> split_orders(const Cube& rho);

/// Linear hyper-decoherence: kills the third-order part and inverts the
/// embedding on the (2,1)-part. Left inverse and adjoint of embed_quantum.
ComplexMatrix hyperdecohere(const Cube& rho);

struct Counterexample {
    CVec c;
    CVec v;
    double inner;  // cube_inner(c, v), negative
};

/// The two mutually negative states that witness the underdetermination of
/// the Density Cube state space.
Counterexample counterexample_cv();

struct ParameterCount {
    int unnormalized;  // real dimension of the Hermitian-cube space (11)
    int normalized;    // after the unit-trace constraint (10)
};

/// Dimension counts obtained from the numerical rank of vectorized random
/// Hermitian cubes.
ParameterCount dc_parameter_count(std::uint64_t seed = 42);

}  // namespace hoi::dc
