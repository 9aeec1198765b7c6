#include "hoi/sorkin.hpp"

#include <bit>
#include <cmath>

namespace hoi::sorkin {

std::vector<Violation> validate_experiment(const SlitExperiment& exp, const TheoryPairing& theory,
                                           double tol) {
    std::vector<Violation> out;
    const SubsetMask full = (SubsetMask{1} << exp.n) - 1;

    // Pairwise disjointness via the singleton effects: (e_i|s) = 0 for s in F_j.
    for (int i = 0; i < exp.n; ++i) {
        const auto it = exp.subset_effects.find(SubsetMask{1} << i);
        if (it == exp.subset_effects.end()) continue;
        for (int j = 0; j < exp.n; ++j) {
            if (j == i) continue;
            for (size_t k = 0; k < exp.faces[j].size(); ++k) {
                const double p = theory.pair(it->second, exp.faces[j][k]);
                if (std::abs(p) > tol)
                    out.push_back({SubsetMask{1} << i, j + 1, static_cast<int>(k), std::abs(p),
                                   Violation::Kind::FacesNotDisjoint});
            }
        }
    }

    for (const auto& [mask, effect] : exp.subset_effects) {
        for (int i = 0; i < exp.n; ++i) {
            const bool in_subset = (mask >> i) & 1;
            for (size_t k = 0; k < exp.faces[i].size(); ++k) {
                const StateHandle& s = exp.faces[i][k];
                if (in_subset) {
                    const double d =
                        std::abs(theory.pair(effect, s) - theory.pair(exp.global_effect, s));
                    if (d > tol)
                        out.push_back({mask, i + 1, static_cast<int>(k), d,
                                       Violation::Kind::FaceMismatch});
                } else {
                    const double p = theory.pair(effect, s);
                    if (std::abs(p) > tol)
                        out.push_back({mask, i + 1, static_cast<int>(k), std::abs(p),
                                       Violation::Kind::NotBlocked});
                }
            }
        }
    }
    (void)full;
    return out;
}

InterferenceValue sorkin_I(int n, const SlitExperiment& exp, const StateHandle& s,
                           const TheoryPairing& theory) {
    if (n < 2 || n > 12 || n != exp.n)
        throw std::invalid_argument("subset enumeration limit");
    double total = 0.0;
    const SubsetMask full = (SubsetMask{1} << n) - 1;
    for (SubsetMask mask = 1; mask <= full; ++mask) {
        const int size = std::popcount(mask);
        const double sign = ((n - size) % 2 == 0) ? 1.0 : -1.0;
        const EffectHandle& e =
            (mask == full) ? exp.global_effect : exp.subset_effects.at(mask);
        total += sign * theory.pair(e, s);
    }
    return {n, total};
}

namespace {

ComplexMatrix subset_projector(int n, SubsetMask mask) {
    ComplexMatrix p(n, n);
    for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1) p.at(i, i) = 1.0;
    return p;
}

}  // namespace

SlitExperiment quantum_slit_experiment(int n, const ComplexMatrix& e) {
    if (n < 2 || n > 12) throw std::invalid_argument("subset enumeration limit");
    if (!e.square() || e.rows() != n || !is_hermitian(e, 1e-10))
        throw std::invalid_argument("invalid effect");
    {
        const EigenDecomposition d = eig_hermitian(e);
        if (d.eigenvalues.front() > 1.0 + 1e-10 || d.eigenvalues.back() < -1e-10)
            throw std::invalid_argument("invalid effect");
    }

    SlitExperiment exp;
    exp.n = n;
    exp.global_effect = [e](const StateHandle& rho) { return (e * rho).trace().real(); };
    for (int i = 0; i < n; ++i) {
        ComplexMatrix proj(n, n);
        proj.at(i, i) = 1.0;
        exp.faces.push_back({proj});
    }
    const SubsetMask full = (SubsetMask{1} << n) - 1;
    for (SubsetMask mask = 1; mask <= full; ++mask) {
        if (mask == full) {
            exp.subset_effects[mask] = exp.global_effect;
            continue;
        }
        const ComplexMatrix p = subset_projector(n, mask);
        exp.subset_effects[mask] = [e, p](const StateHandle& rho) {
            return (e * p * rho * p).trace().real();
        };
    }
    return exp;
}

SlitExperiment quantum_slit_experiment(int n) {
    ComplexMatrix e(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) e.at(i, j) = 1.0 / n;
    return quantum_slit_experiment(n, e);
}

TheoryPairing quantum_pairing() { return TheoryPairing{}; }

}  // namespace hoi::sorkin
