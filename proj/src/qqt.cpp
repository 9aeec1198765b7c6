#include "hoi/qqt.hpp"

#include <bit>
#include <cmath>
#include <numeric>

namespace hoi::qqt {

namespace {

void check_dims(const ComplexMatrix& m, int n) {
    if (n < 2) throw std::invalid_argument("QQT needs N >= 2");
    if (!m.square() || m.rows() != n * n)
        throw std::invalid_argument("QQT operators are N^2 x N^2");
}

/// |ij><ij| projector in the composite N^2 space, |ij> = i*N + j.
ComplexMatrix ketbra_ij(int n, int i, int j) {
    ComplexMatrix p(n * n, n * n);
    p.at(i * n + j, i * n + j) = 1.0;
    return p;
}

}  // namespace

ComplexMatrix initial_state(int n) {
    ComplexMatrix ket0(n, n);
    ket0.at(0, 0) = 1.0;
    ComplexMatrix id = ComplexMatrix::identity(n);
    id *= 1.0 / n;
    return tensor_product(id, ket0);
}

bool is_qqt_state(const ComplexMatrix& rho, int n, double tol) {
    check_dims(rho, n);
    if (!is_hermitian(rho, tol * std::max(1.0, rho.frobenius_norm()))) return false;
    if (std::abs(rho.trace() - Complex{1.0, 0.0}) > tol) return false;
    const EigenDecomposition d = eig_hermitian(rho);
    return d.eigenvalues.front() <= 1.0 / n + tol && d.eigenvalues.back() >= -tol;
}

std::pair<double, double> effect_pairing_range(const ComplexMatrix& e, int n) {
    check_dims(e, n);
    if (!is_hermitian(e, 1e-10 * std::max(1.0, e.frobenius_norm())))
        throw std::invalid_argument("not Hermitian");
    const EigenDecomposition d = eig_hermitian(e);
    double lo = 0.0, hi = 0.0;
    for (int k = 0; k < n; ++k) {
        hi += d.eigenvalues[static_cast<size_t>(k)];
        lo += d.eigenvalues[d.eigenvalues.size() - 1 - static_cast<size_t>(k)];
    }
    return {lo / n, hi / n};
}

bool is_qqt_effect(const ComplexMatrix& e, int n, double tol) {
    const auto [lo, hi] = effect_pairing_range(e, n);
    return lo >= -tol && hi <= 1.0 + tol;
}

sorkin::TheoryPairing qqt_pairing(int n) {
    sorkin::TheoryPairing t;
    t.contains = [n](const sorkin::StateHandle& s) { return is_qqt_state(s, n); };
    return t;
}

sorkin::SlitExperiment qqt_slit_experiment(int n, SlitVariant variant) {
    if (n < 2 || n > 6) throw std::invalid_argument("subset enumeration limit");

    sorkin::SlitExperiment exp;
    exp.n = n;

    const ComplexMatrix e_global = ComplexMatrix::identity(n * n);
    exp.global_effect = [e_global](const sorkin::StateHandle& s) {
        return (e_global * s).trace().real();
    };

    for (int i = 0; i < n; ++i) {
        ComplexMatrix proj(n, n);
        proj.at(i, i) = 1.0;
        ComplexMatrix face = tensor_product(proj, ComplexMatrix::identity(n));
        face *= 1.0 / n;
        exp.faces.push_back({face});
    }

    const sorkin::SubsetMask full = (sorkin::SubsetMask{1} << n) - 1;
    for (sorkin::SubsetMask mask = 1; mask <= full; ++mask) {
        if (mask == full) {
            exp.subset_effects[mask] = exp.global_effect;
            continue;
        }
        ComplexMatrix eff(n * n, n * n);
        if (std::popcount(mask) == 1 && variant == SlitVariant::Superquantum) {
            const int i = std::countr_zero(mask);
            eff = ketbra_ij(n, i, i);
            eff *= static_cast<double>(n);
        } else {
            for (int i = 0; i < n; ++i) {
                if (!((mask >> i) & 1)) continue;
                for (int j = 0; j < n; ++j) eff += ketbra_ij(n, i, j);
            }
        }
        exp.subset_effects[mask] = [eff](const sorkin::StateHandle& s) {
            return (eff * s).trace().real();
        };
    }
    return exp;
}

ComplexMatrix qqt_witness_state(int n) {
    if (n < 2) throw std::invalid_argument("QQT needs N >= 2");
    ComplexMatrix w(n * n, n * n);
    for (int i = 0; i < n; ++i) w.at(i * n + i, i * n + i) = 1.0 / n;
    return w;
}

double qqt_interference(int n, SlitVariant variant) {
    const sorkin::SlitExperiment exp = qqt_slit_experiment(n, variant);
    return sorkin::sorkin_I(n, exp, qqt_witness_state(n), qqt_pairing(n)).value;
}

ComplexMatrix qqt_hyperdecohere(const ComplexMatrix& rho, int n) {
    check_dims(rho, n);
    return partial_trace(rho, n, n, Factor::First);
}

SwapReport qqt_swap_counterexample(int n) {
    if (n < 2) throw std::invalid_argument("QQT needs N >= 2");
    const int d2 = n * n, d4 = d2 * d2;

    ComplexMatrix ket0(n, n);
    ket0.at(0, 0) = 1.0;
    ComplexMatrix id = ComplexMatrix::identity(n);
    ComplexMatrix s = tensor_product(tensor_product(ket0, id), tensor_product(ket0, id));
    s *= 1.0 / d2;

    // Permutation unitary exchanging factors 2 and 3 of (a, b, c, d).
    ComplexMatrix u(d4, d4);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d)
                    u.at(((a * n + c) * n + b) * n + d, ((a * n + b) * n + c) * n + d) = 1.0;

    const ComplexMatrix swapped = u * s * u.adjoint();
    SwapReport r;
    r.marginal = partial_trace(swapped, d2, d2, Factor::First);
    r.lambda_max = eig_hermitian(r.marginal).eigenvalues.front();
    r.is_valid = is_qqt_state(r.marginal, n);
    return r;
}

ComplexMatrix random_qqt_state(Rng& rng, int n, int mixture_terms) {
    const ComplexMatrix s0 = initial_state(n);
    ComplexMatrix mix(n * n, n * n);
    std::vector<double> w(static_cast<size_t>(mixture_terms));
    double total = 0.0;
    for (double& x : w) {
        x = rng.uniform() + 1e-12;
        total += x;
    }
    for (double x : w) {
        const ComplexMatrix u = random_unitary(rng, n * n);
        ComplexMatrix term = u * s0 * u.adjoint();
        term *= x / total;
        mix += term;
    }
    return mix;
}

int qqt_parameter_count(int n, std::uint64_t seed) {
    if (n < 2 || n > 3) throw std::invalid_argument("parameter count supported for N = 2, 3");
    Rng rng(seed);
    const int d = n * n;
    const int real_dim = d * d;  // Hermitian d x d matrices
    const int samples = 4 * real_dim;

    std::vector<std::vector<double>> vecs;
    vecs.reserve(static_cast<size_t>(samples));
    const ComplexMatrix s0 = initial_state(n);
    for (int k = 0; k < samples; ++k) {
        ComplexMatrix s(d, d);
        if (k % 4 == 3) {
            s = random_qqt_state(rng, n, 3);
        } else {
            const ComplexMatrix u = random_unitary(rng, d);
            s = u * s0 * u.adjoint();
        }
        std::vector<double> x;
        x.reserve(static_cast<size_t>(real_dim));
        for (int i = 0; i < d; ++i) {
            x.push_back(s.at(i, i).real());
            for (int j = i + 1; j < d; ++j) {
                x.push_back(s.at(i, j).real());
                x.push_back(s.at(i, j).imag());
            }
        }
        vecs.push_back(std::move(x));
    }

    ComplexMatrix gram(real_dim, real_dim);
    for (const auto& x : vecs)
        for (int i = 0; i < real_dim; ++i)
            for (int j = 0; j < real_dim; ++j)
                gram.at(i, j) += x[static_cast<size_t>(i)] * x[static_cast<size_t>(j)];
    const EigenDecomposition dec = eig_hermitian(gram);
    const double top = std::max(dec.eigenvalues.front(), 1e-300);
    int rank = 0;
    for (double ev : dec.eigenvalues)
        if (ev > 1e-8 * top) ++rank;
    return rank;
}

}  // namespace hoi::qqt
