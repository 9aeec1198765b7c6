#pragma once

#include <array>

#include "hoi/density_cube.hpp"
#include "hoi/linalg.hpp"

namespace hoi::collision {

/// One of the 8 functions f : {0,1,2} -> {0,1}.
struct TritBitFunction {
    std::array<int, 3> values{};

    bool all_equal() const { return values[0] == values[1] && values[1] == values[2]; }
    int sum() const { return values[0] + values[1] + values[2]; }
};

std::array<TritBitFunction, 8> all_functions();

/// A density-cube state of the collision fragment: a pure qutrit vector
/// plus the higher-order tag n (mod 3, indexing omega^n).
struct TaggedDCState {
    ComplexMatrix psi;  // 3 x 1, unit norm
    int n = 0;
};

/// Sign-flip oracle |i> -> (-1)^{f(i)} |i>.
ComplexMatrix qt_oracle(const TritBitFunction& f, const ComplexMatrix& psi);

/// Worst-case squared overlap with the constant-f state after one query
/// from the uniform superposition: 1/9.
double qt_collision_error();

ComplexMatrix uniform_superposition();

/// Density cube associated to a tagged state, per the displayed -1/sqrt(6)
/// association with the rest filled in by the Hermiticity conditions.
dc::Cube dc_associate(const TaggedDCState& s);

/// Inner product of two associated cubes, computed both by the 27-term
/// contraction and by the closed form
/// 1/4 (1 + |<phi|psi>|^2) + 1/2 cos(2 pi (n - m) / 3).
struct DcPairInner {
    double tensor;       // authoritative path
    double closed_form;
};

DcPairInner dc_pair_inner(const ComplexMatrix& phi, int n, const ComplexMatrix& psi, int m);

/// (psi, n) -> (O_f psi, n + sum f(i) mod 3).
TaggedDCState dc_oracle(const TritBitFunction& f, const TaggedDCState& s);

/// Worst-case post-query inner product with the constant-f cube, from the
/// tensor contraction.
double dc_collision_error();

/// Same quantity from the paper's closed form (for the dual-path check).
double dc_collision_error_closed_form();

}  // namespace hoi::collision
