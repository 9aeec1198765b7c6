#pragma once

#include <cstdint>

#include "hoi/linalg.hpp"
#include "hoi/rng.hpp"
#include "hoi/sorkin.hpp"

namespace hoi::qqt {

/// An N-level QQT state is an N^2 x N^2 density matrix whose largest
/// eigenvalue is at most 1/N (the convex hull of the unitary orbit of the
/// flat-spectrum state (1/N) I (x) |0><0|).
bool is_qqt_state(const ComplexMatrix& rho, int n, double tol = 1e-10);

/// Closed-form effect validity: extreme states are rank-N projectors
/// scaled by 1/N, so the pairing range of a Hermitian e is
/// [sum of N smallest eigenvalues, sum of N largest] / N. Throws
/// std::invalid_argument("not Hermitian") on a non-Hermitian input.
bool is_qqt_effect(const ComplexMatrix& e, int n, double tol = 1e-10);

/// Pairing range [min, max] of trace(e s) over the QQT state space,
/// computed in closed form from the extreme eigenvalues of e.
std::pair<double, double> effect_pairing_range(const ComplexMatrix& e, int n);

enum class SlitVariant { Superquantum, Quantum };

/// N-slit experiment with E = sum |ij><ij|, faces {(1/N)|i><i| (x) I},
/// e_I = P_I (x) I for |I| >= 2, and singleton effects N|ii><ii|
/// (superquantum) or P_i (x) I (quantum). Valid for 2 <= N <= 6.
sorkin::SlitExperiment qqt_slit_experiment(int n, SlitVariant variant);

sorkin::TheoryPairing qqt_pairing(int n);

/// (1/N) sum_i |ii><ii|: a valid QQT state at which the superquantum
/// variant shows Nth-order interference.
ComplexMatrix qqt_witness_state(int n);

/// I_N of the chosen variant evaluated on the witness state by full
/// subset enumeration.
double qqt_interference(int n, SlitVariant variant);

/// Hyper-decoherence: partial trace over the second tensor factor.
ComplexMatrix qqt_hyperdecohere(const ComplexMatrix& rho, int n);

struct SwapReport {
    ComplexMatrix marginal;
    double lambda_max;
    bool is_valid;
};

/// The composite counterexample: swapping the two middle factors of
/// (1/N^2) |0><0| (x) I (x) |0><0| (x) I and discarding the second half
/// leaves |00><00|, which is too pure to be a QQT state.
SwapReport qqt_swap_counterexample(int n);

/// Numerical rank of the span of sampled QQT states (unitary-orbit points
/// plus mixtures); equals N^4.
int qqt_parameter_count(int n, std::uint64_t seed = 42);

/// Deterministic random QQT state: a mixture of unitary-orbit points of
/// the flat-spectrum initial state.
ComplexMatrix random_qqt_state(Rng& rng, int n, int mixture_terms = 3);

/// The flat-spectrum initial state (1/N) I (x) |0><0|.
ComplexMatrix initial_state(int n);

}  // namespace hoi::qqt
