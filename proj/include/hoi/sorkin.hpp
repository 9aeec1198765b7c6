#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "hoi/linalg.hpp"

namespace hoi::sorkin {

/// States are carried around as density-matrix-like operators; what an
/// effect does with them is up to the hosting theory.
using StateHandle = ComplexMatrix;
using EffectHandle = std::function<double(const StateHandle&)>;

/// Nonempty subset of slits {1..n} as a bitmask (bit i-1 = slit i).
using SubsetMask = std::uint32_t;

/// Pairing (e|s) of a hosting theory, plus its state-membership predicate.
struct TheoryPairing {
    std::function<double(const EffectHandle&, const StateHandle&)> pair =
        [](const EffectHandle& e, const StateHandle& s) { return e(s); };
    std::function<bool(const StateHandle&)> contains = [](const StateHandle&) { return true; };
};

/// An n-slit experiment: the global effect E, one finite face per slit,
/// and one effect e_I per nonempty subset I, with e_{1..n} = E.
struct SlitExperiment {
    int n = 0;
    EffectHandle global_effect;
    std::vector<std::vector<StateHandle>> faces;        // size n
    std::map<SubsetMask, EffectHandle> subset_effects;  // all 2^n - 1 nonempty masks
};

struct Violation {
    SubsetMask subset;
    int face;        // 1-based slit index
    int state;       // index within the face list
    double magnitude;
    enum class Kind { FaceMismatch, NotBlocked, FacesNotDisjoint } kind;
};

/// Checks the two defining conditions on every listed face state: e_I
/// agrees with E on F_I, and vanishes on states of faces disjoint from I.
/// Also checks pairwise face disjointness through the singleton effects.
/// Violations are data, not errors.
std::vector<Violation> validate_experiment(const SlitExperiment& exp, const TheoryPairing& theory,
                                           double tol);

struct InterferenceValue {
    int order;
    double value;
};

/// I_n = sum over nonempty I of (-1)^(n-|I|) (e_I|s). Subset enumeration
/// is capped at n = 12; out-of-range n throws
/// std::invalid_argument("subset enumeration limit").
InterferenceValue sorkin_I(int n, const SlitExperiment& exp, const StateHandle& s,
                           const TheoryPairing& theory);

/// Quantum n-slit experiment: faces {|i><i|}, e_I(rho) = Tr(E P_I rho P_I)
/// with P_I the projector onto span{|i> : i in I}. E must be an effect
/// (Hermitian, 0 <= E <= I); otherwise std::invalid_argument("invalid effect").
SlitExperiment quantum_slit_experiment(int n, const ComplexMatrix& e);

/// Same, with the default E = |eta><eta|, eta the uniform superposition.
SlitExperiment quantum_slit_experiment(int n);

TheoryPairing quantum_pairing();

}  // namespace hoi::sorkin
