#include "hoi/claims.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hoi/collision.hpp"
#include "hoi/density_cube.hpp"
#include "hoi/linalg.hpp"
#include "hoi/qqt.hpp"
#include "hoi/rng.hpp"
#include "hoi/sorkin.hpp"

namespace hoi::claims {

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::Paper: return "PAPER";
        case Provenance::Trivial: return "TRIVIAL";
        case Provenance::Derived: return "DERIVED";
    }
    return "?";
}

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Discrepancy: return "DISCREPANCY";
    }
    return "?";
}

namespace {

ClaimReport make(const Options& opt, std::string id, std::string desc, std::string loc,
                 nlohmann::json computed, nlohmann::json expected, Provenance prov, double tol,
                 bool ok) {
    ClaimReport r;
    r.id = std::move(id);
    r.description = std::move(desc);
    r.paper_location = std::move(loc);
    r.computed = std::move(computed);
    r.expected = std::move(expected);
    r.provenance = prov;
    r.tolerance = tol;
    r.status = ok ? Status::Pass
                  : (opt.discrepancy_whitelist.count(r.id) ? Status::Discrepancy : Status::Fail);
    return r;
}

ClaimReport numeric(const Options& opt, std::string id, std::string desc, std::string loc,
                    double computed, double expected, Provenance prov, double tol) {
    const bool ok = std::abs(computed - expected) <= tol;
    return make(opt, std::move(id), std::move(desc), std::move(loc), computed, expected, prov, tol,
                ok);
}

ClaimReport boolean(const Options& opt, std::string id, std::string desc, std::string loc,
                    bool computed, bool expected, Provenance prov) {
    return make(opt, std::move(id), std::move(desc), std::move(loc), computed, expected, prov, 0.0,
                computed == expected);
}

}  // namespace

std::vector<ClaimReport> run_sorkin_suite(const Options& opt) {
    using namespace hoi::sorkin;
    std::vector<ClaimReport> out;
    Rng rng(opt.seed ^ 0x5041u);
    const TheoryPairing qt = quantum_pairing();

    {
        const SlitExperiment exp = quantum_slit_experiment(2);
        ComplexMatrix eta(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) eta.at(i, j) = 0.5;
        const double i2 = sorkin_I(2, exp, eta, qt).value;
        out.push_back(numeric(opt, "SORKIN-I2",
                              "Quantum two-slit interference on the uniform superposition",
                              "Eq. (4)", i2, 0.5, Provenance::Derived, opt.tol));
    }

    for (int n : {3, 4}) {
        const SlitExperiment exp = quantum_slit_experiment(n);
        double worst = 0.0;
        for (int k = 0; k < 100; ++k)
            worst = std::max(worst,
                             std::abs(sorkin_I(n, exp, random_density(rng, n), qt).value));
        out.push_back(numeric(opt, "SORKIN-I" + std::to_string(n) + "-QUANTUM",
                              "Quantum I_" + std::to_string(n) +
                                  " vanishes over 100 random states (worst case)",
                              "Sec. 2", worst, 0.0, Provenance::Paper, 1e-12));
    }

    {
        double worst = 0.0;
        for (int n = 3; n <= 6; ++n) {
            const SlitExperiment exp = quantum_slit_experiment(n);
            for (int k = 0; k < 20; ++k)
                worst = std::max(worst,
                                 std::abs(sorkin_I(n, exp, random_density(rng, n), qt).value));
        }
        out.push_back(numeric(opt, "SORKIN-HEREDITY",
                              "Quantum I_k = 0 for k = 3..6 (hereditary vanishing, worst case)",
                              "Sec. 2", worst, 0.0, Provenance::Paper, 1e-12));
    }

    {
        // Independent literal expansions of the n = 2 and n = 3 sums.
        double worst = 0.0;
        const SlitExperiment e2 = quantum_slit_experiment(2);
        const SlitExperiment e3 = quantum_slit_experiment(3);
        for (int k = 0; k < 50; ++k) {
            const ComplexMatrix s2 = random_density(rng, 2);
            const double lit2 = qt.pair(e2.global_effect, s2) - qt.pair(e2.subset_effects.at(1), s2) -
                                qt.pair(e2.subset_effects.at(2), s2);
            worst = std::max(worst, std::abs(sorkin_I(2, e2, s2, qt).value - lit2));
            const ComplexMatrix s3 = random_density(rng, 3);
            const double lit3 = qt.pair(e3.global_effect, s3) - qt.pair(e3.subset_effects.at(3), s3) -
                                qt.pair(e3.subset_effects.at(6), s3) -
                                qt.pair(e3.subset_effects.at(5), s3) +
                                qt.pair(e3.subset_effects.at(1), s3) +
                                qt.pair(e3.subset_effects.at(2), s3) +
                                qt.pair(e3.subset_effects.at(4), s3);
            worst = std::max(worst, std::abs(sorkin_I(3, e3, s3, qt).value - lit3));
        }
        out.push_back(numeric(opt, "SORKIN-EXPANSION",
                              "Subset-sum I_2, I_3 agree with their literal expansions",
                              "Eq. (4)-(5)", worst, 0.0, Provenance::Derived, 1e-14));
    }

    {
        const SlitExperiment exp = quantum_slit_experiment(3);
        const auto violations = validate_experiment(exp, qt, opt.tol);
        out.push_back(numeric(opt, "SORKIN-VALIDATE-Q3",
                              "Quantum three-slit experiment satisfies the face conditions "
                              "(violation count)",
                              "Eq. (1)-(2)", static_cast<double>(violations.size()), 0.0,
                              Provenance::Paper, 0.0));
    }
    return out;
}

std::vector<ClaimReport> run_dc_suite(const Options& opt) {
    using namespace hoi::dc;
    std::vector<ClaimReport> out;
    Rng rng(opt.seed ^ 0x4443u);
    const CanonicalCubes canon = canonical_cubes();

    {
        double worst = 0.0;
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) {
                const double expect = (i == j) ? 1.0 : 0.0;
                worst = std::max(worst,
                                 std::abs(cube_inner(canon.rho[i], canon.rho[j]) -
                                          Complex{expect, 0.0}));
            }
        out.push_back(numeric(opt, "DC-ORTHO",
                              "Displayed density cubes are orthonormal (worst deviation)",
                              "Sec. 3.1", worst, 0.0, Provenance::Paper, 1e-12));
    }

    {
        bool herm = true;
        for (const Cube& c : canon.rho) herm = herm && is_hermitian_cube(c, opt.tol);
        out.push_back(boolean(opt, "DC-HERMITIAN",
                              "Displayed density cubes satisfy the Hermitian-cube conditions",
                              "Sec. 3.1", herm, true, Provenance::Trivial));
    }

    {
        std::array<Cube, 3> d0, d;
        for (size_t i = 0; i < 3; ++i) {
            d0[i] = cvec_to_cube(canon.q[i]);
            d[i] = cvec_to_cube(canon.rho_c[i]);
        }
        const bool ok = is_physical_basis(d0, opt.tol) && is_physical_basis(d, opt.tol);
        out.push_back(boolean(opt, "DC-PHYS-BASIS", "D0 and D are physical bases", "Sec. 3.1-3.2",
                              ok, true, Provenance::Derived));
    }

    const ComplexMatrix t = constant_T();
    out.push_back(boolean(opt, "DC-T-UNITARY", "The transformation T is unitary", "Eq. (7)",
                          is_unitary(t, opt.tol), true, Provenance::Paper));

    {
        double worst = 0.0;
        for (size_t i = 0; i < 3; ++i) {
            const CVec img = apply_cvec_transform(t, canon.q[i]);
            for (size_t k = 0; k < 5; ++k)
                worst = std::max(worst, std::abs(img[k] - canon.rho_c[i][k]));
        }
        out.push_back(numeric(opt, "DC-T-MAP", "T maps q_i to rho_i (worst entry deviation)",
                              "Eq. (7)", worst, 0.0, Provenance::Paper, 1e-14));
    }

    const ComplexMatrix tp = constant_Tprime();
    {
        std::vector<CVec> basis_samples(canon.q.begin(), canon.q.end());
        const TransformReport rep = validate_transformation(tp, basis_samples, opt.tol);
        out.push_back(boolean(opt, "DC-TPRIME-AXIOMS",
                              "T' is unitary and maps the physical basis D0 to a physical basis",
                              "Sec. 3.5.2", rep.unitary && rep.maps_physical_basis, true,
                              Provenance::Paper));
    }
    {
        std::vector<CVec> samples(canon.rho_c.begin(), canon.rho_c.end());
        const TransformReport rep = validate_transformation(tp, samples, opt.tol);
        out.push_back(boolean(opt, "DC-TPRIME-NONHERM",
                              "T' breaks the Hermitian form of at least one canonical state",
                              "Sec. 3.5.2", !rep.preserves_hermitian_form, true,
                              Provenance::Paper));
    }
    {
        const CVec img = apply_cvec_transform(tp, canon.rho_c[0]);
        const std::array<Complex, 5> display = {Complex{0.933, 0.0}, Complex{0.034, -0.217},
                                                Complex{0.034, 0.217}, Complex{0.092, 0.0},
                                                Complex{-0.171, 0.0}};
        double worst = 0.0;
        for (size_t k = 0; k < 5; ++k) worst = std::max(worst, std::abs(img[k] - display[k]));
        out.push_back(numeric(opt, "DC-TPRIME-IMAGE",
                              "T'(rho_1) matches the rounded display (worst entry deviation)",
                              "Sec. 3.5.2", worst, 0.0, Provenance::Paper, 5e-2));
    }

    {
        double worst = 0.0;
        for (int k = 0; k < 1000; ++k) {
            const ComplexMatrix a = random_density(rng, 3);
            const ComplexMatrix b = random_density(rng, 3);
            const Complex qt_inner = (a.adjoint() * b).trace();
            const Complex dc_inner = cube_inner(embed_quantum(a), embed_quantum(b));
            worst = std::max(worst, std::abs(qt_inner - dc_inner));
        }
        out.push_back(numeric(opt, "DC-EMBED-ISO",
                              "Embedding preserves the inner product over 1000 random pairs",
                              "Sec. 3.3", worst, 0.0, Provenance::Paper, 1e-12));
    }

    {
        double worst = 0.0;
        for (int k = 0; k < 1000; ++k) {
            const ComplexMatrix a = random_density(rng, 3);
            worst = std::max(worst, (hyperdecohere(embed_quantum(a)) - a).frobenius_norm());
        }
        out.push_back(numeric(opt, "DC-HYPERDEC-ID",
                              "Hyper-decoherence inverts the embedding over 1000 random states",
                              "Sec. 3.3", worst, 0.0, Provenance::Paper, 1e-12));
    }

    {
        // rho drawn from the D basis and random mixtures of it, sigma random.
        double worst = 0.0;
        std::vector<Cube> cubes;
        for (size_t i = 0; i < 3; ++i) cubes.push_back(cvec_to_cube(canon.rho_c[i]));
        for (int k = 0; k < 100; ++k) {
            double w[3], total = 0.0;
            for (double& x : w) {
                x = rng.uniform();
                total += x;
            }
            Cube mix;
            for (size_t i = 0; i < 3; ++i) mix += Complex{w[i] / total, 0.0} * cubes[i];
            cubes.push_back(mix);
        }
        for (const Cube& rho : cubes) {
            const ComplexMatrix sigma = random_density(rng, 3);
            const Complex lhs = (hyperdecohere(rho).adjoint() * sigma).trace();
            const Complex rhs = cube_inner(rho, embed_quantum(sigma));
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        out.push_back(numeric(opt, "DC-ADJOINT",
                              "Embedding is the adjoint of hyper-decoherence on sampled pairs",
                              "Sec. 3.3", worst, 0.0, Provenance::Paper, 1e-12));
    }

    {
        const ComplexMatrix img = hyperdecohere(cvec_to_cube(canon.rho_c[0]));
        const ComplexMatrix expect =
            ComplexMatrix::diagonal({Complex{0.0}, Complex{0.5}, Complex{0.5}});
        out.push_back(numeric(opt, "DC-HYPERDEC-RHO1",
                              "Hyper-decoherence of rho_1 is diag(0, 1/2, 1/2)", "Sec. 3.3",
                              (img - expect).frobenius_norm(), 0.0, Provenance::Derived, 1e-12));
    }

    const Counterexample cx = counterexample_cv();
    out.push_back(numeric(opt, "DC-CV", "Inner product of the states c and v", "Sec. 3.5.1",
                          cx.inner, -55.0 / 256.0, Provenance::Derived, 1e-12));

    {
        double worst = 1.0;
        const Cube cc = cvec_to_cube(cx.c), cv = cvec_to_cube(cx.v);
        for (int k = 0; k < 1000; ++k) {
            const Cube emb = embed_quantum(random_density(rng, 3));
            worst = std::min(worst, cube_inner(cc, emb).real());
            worst = std::min(worst, cube_inner(cv, emb).real());
        }
        out.push_back(make(opt, "DC-CV-POSITIVE",
                           "c and v stay nonnegative against 1000 embedded quantum states "
                           "(worst inner product)",
                           "Sec. 3.5.1", worst, ">= 0", Provenance::Derived, 1e-12,
                           worst >= -1e-12));
    }

    {
        const ParameterCount pc = dc_parameter_count(opt.seed);
        const bool ok = pc.unnormalized == 11 && pc.normalized == 10;
        out.push_back(make(opt, "DC-PARAMS",
                           "Hermitian-cube dimension 11 and normalized parameter count 10",
                           "Sec. 3.1, Sec. 4", nlohmann::json{pc.unnormalized, pc.normalized},
                           nlohmann::json{11, 10}, Provenance::Paper, 0.0, ok));
    }
    return out;
}

std::vector<ClaimReport> run_collision_suite(const Options& opt) {
    using namespace hoi::collision;
    std::vector<ClaimReport> out;
    Rng rng(opt.seed ^ 0x434fu);

    out.push_back(numeric(opt, "COLL-QT-ERR", "Quantum one-query error of the three collision "
                                              "problem",
                          "Sec. 3.4", qt_collision_error(), 1.0 / 9.0, Provenance::Paper, 1e-12));

    {
        double worst = 0.0;
        double lowest = 1.0;
        for (int k = 0; k < 1000; ++k) {
            const ComplexMatrix phi = random_pure_state(rng, 3);
            const ComplexMatrix psi = random_pure_state(rng, 3);
            const int n = static_cast<int>(rng.next_u64() % 3);
            const int m = static_cast<int>(rng.next_u64() % 3);
            const DcPairInner p = dc_pair_inner(phi, n, psi, m);
            worst = std::max(worst, std::abs(p.tensor - p.closed_form));
            lowest = std::min(lowest, p.tensor);
        }
        out.push_back(numeric(opt, "COLL-DUAL",
                              "Tensor contraction agrees with the closed-form inner product "
                              "over 1000 random pairs",
                              "Sec. 3.4", worst, 0.0, Provenance::Derived, 1e-12));
        out.push_back(make(opt, "COLL-INNER-POS",
                           "Associated-cube inner products are nonnegative (worst over 1000 "
                           "random pairs)",
                           "Sec. 3.4", lowest, ">= 0", Provenance::Derived, 1e-12,
                           lowest >= -1e-12));
    }

    {
        const double dc_err = dc_collision_error();
        const double closed = dc_collision_error_closed_form();
        // The printed value 1/32 disagrees with the closed form evaluated at
        // overlap 1/9, which both of our computation paths reproduce; the
        // claim is whitelisted as a known inconsistency.
        const bool matches_print = std::abs(dc_err - 1.0 / 32.0) <= 1e-12;
        out.push_back(make(opt, "COLL-ERR",
                           "Density-cube one-query error (tensor path; closed form gives " +
                               std::to_string(closed) + ")",
                           "Sec. 3.4", dc_err, 1.0 / 32.0, Provenance::Paper, 1e-12,
                           matches_print));
        out.push_back(numeric(opt, "COLL-ERR-DUAL",
                              "Tensor-path and closed-form collision errors agree", "Sec. 3.4",
                              dc_err - closed, 0.0, Provenance::Derived, 1e-12));
        const double margin = qt_collision_error() - dc_err;
        out.push_back(make(opt, "COLL-ADVANTAGE",
                           "Density-cube error beats the quantum error by a margin > 0.05",
                           "Sec. 3.4", margin, "> 0.05", Provenance::Paper, 0.0, margin > 0.05));
    }
    return out;
}

std::vector<ClaimReport> run_qqt_suite(const Options& opt) {
    using namespace hoi::qqt;
    std::vector<ClaimReport> out;
    Rng rng(opt.seed ^ 0x5151u);

    {
        ComplexMatrix mm = ComplexMatrix::identity(9);
        mm *= 1.0 / 9.0;
        out.push_back(boolean(opt, "QQT-STATE-MIXED", "Maximally mixed I/N^2 is a QQT state",
                              "Sec. 4.1", is_qqt_state(mm, 3, opt.tol), true,
                              Provenance::Trivial));
    }
    {
        ComplexMatrix pure(4, 4);
        pure.at(0, 0) = 1.0;
        out.push_back(boolean(opt, "QQT-STATE-PURE",
                              "|00><00| is too pure to be a QQT state", "Sec. 4.3",
                              is_qqt_state(pure, 2, opt.tol), false, Provenance::Paper));
    }
    {
        ComplexMatrix e(4, 4);
        e.at(0, 0) = 2.0;  // N |00><00| for N = 2
        out.push_back(boolean(opt, "QQT-EFFECT-SUPER",
                              "The super-quantum effect N|00><00| is a valid QQT effect",
                              "Sec. 4.1", is_qqt_effect(e, 2, opt.tol), true, Provenance::Paper));
    }

    {
        // Closed-form pairing range vs a 10^4-state sampling oracle.
        double excess = 0.0;
        for (int n : {2, 3}) {
            std::vector<ComplexMatrix> effects;
            ComplexMatrix super(n * n, n * n);
            super.at(0, 0) = static_cast<double>(n);
            effects.push_back(super);
            for (int k = 0; k < 3; ++k) effects.push_back(random_hermitian(rng, n * n));
            for (const ComplexMatrix& e : effects) {
                const auto [lo, hi] = effect_pairing_range(e, n);
                double smin = 1e300, smax = -1e300;
                const int samples = n == 2 ? 10000 : 2000;
                for (int k = 0; k < samples; ++k) {
                    const ComplexMatrix s = random_qqt_state(rng, n);
                    const double p = (e * s).trace().real();
                    smin = std::min(smin, p);
                    smax = std::max(smax, p);
                }
                excess = std::max({excess, smax - hi, lo - smin});
            }
        }
        out.push_back(make(opt, "QQT-EFFECT-RANGE",
                           "Sampled pairings never exceed the closed-form effect bounds "
                           "(worst excess)",
                           "Sec. 4.1", excess, "<= 0", Provenance::Derived, 1e-9,
                           excess <= 1e-9));
    }

    out.push_back(numeric(opt, "QQT-I3", "Super-quantum third-order interference at N = 3",
                          "Sec. 4.2", qqt_interference(3, SlitVariant::Superquantum), 2.0,
                          Provenance::Derived, 1e-10));

    {
        double worst = 0.0;
        for (int n : {2, 3, 4}) {
            const double expect = ((n % 2 == 0) ? 1.0 : -1.0) * (1.0 - n);
            worst = std::max(worst,
                             std::abs(qqt_interference(n, SlitVariant::Superquantum) - expect));
        }
        out.push_back(numeric(opt, "QQT-IN-SUPER",
                              "Super-quantum I_N = (-1)^N (1 - N) for N = 2, 3, 4 (worst "
                              "deviation)",
                              "Sec. 4.2", worst, 0.0, Provenance::Derived, 1e-10));
    }
    {
        double worst = 0.0;
        for (int n : {2, 3, 4})
            worst = std::max(worst, std::abs(qqt_interference(n, SlitVariant::Quantum)));
        out.push_back(numeric(opt, "QQT-IN-QUANTUM",
                              "Quantum-variant I_N vanishes for N = 2, 3, 4 (worst case)",
                              "Sec. 4.2", worst, 0.0, Provenance::Paper, 1e-12));
    }

    {
        size_t violations = 0;
        for (int n = 2; n <= 5; ++n)
            for (SlitVariant v : {SlitVariant::Superquantum, SlitVariant::Quantum})
                violations +=
                    sorkin::validate_experiment(qqt_slit_experiment(n, v), qqt_pairing(n), opt.tol)
                        .size();
        out.push_back(numeric(opt, "QQT-VALIDATE",
                              "Both slit-effect variants satisfy the face conditions for "
                              "N = 2..5 (violation count)",
                              "Sec. 4.2", static_cast<double>(violations), 0.0,
                              Provenance::Derived, 0.0));
    }

    {
        const int p2 = qqt_parameter_count(2, opt.seed);
        const int p3 = qqt_parameter_count(3, opt.seed);
        out.push_back(make(opt, "QQT-PARAMS", "Tomographic parameter counts K = N^4", "Sec. 4",
                           nlohmann::json{p2, p3}, nlohmann::json{16, 81}, Provenance::Paper, 0.0,
                           p2 == 16 && p3 == 81));
    }

    {
        const SwapReport r = qqt_swap_counterexample(2);
        const bool ok = !r.is_valid && std::abs(r.lambda_max - 1.0) <= 1e-10;
        out.push_back(make(opt, "QQT-SWAP",
                           "Swapping middle factors and discarding half leaves an invalid "
                           "marginal (lambda_max)",
                           "Sec. 4.3", r.lambda_max, 1.0, Provenance::Paper, 1e-10, ok));
    }

    {
        double worst = 0.0;
        double min_eig = 1.0;
        for (int k = 0; k < 100; ++k) {
            const ComplexMatrix rho = random_density(rng, 3);
            ComplexMatrix id3 = ComplexMatrix::identity(3);
            id3 *= 1.0 / 3.0;
            worst = std::max(
                worst, (qqt_hyperdecohere(tensor_product(rho, id3), 3) - rho).frobenius_norm());
            const ComplexMatrix img = qqt_hyperdecohere(random_qqt_state(rng, 3), 3);
            const EigenDecomposition d = eig_hermitian(img);
            min_eig = std::min(min_eig, d.eigenvalues.back());
            worst = std::max(worst, std::abs((img.trace() - Complex{1.0, 0.0})));
        }
        const bool ok = worst <= 1e-12 && min_eig >= -1e-10;
        out.push_back(make(opt, "QQT-HYPERDEC",
                           "Partial trace inverts the embedding and yields valid density "
                           "matrices (worst residual)",
                           "Sec. 4.1", worst, 0.0, Provenance::Paper, 1e-12, ok));
    }
    return out;
}

std::vector<ClaimReport> run_suite(const std::string& suite, const Options& opt) {
    std::vector<ClaimReport> out;
    if (suite == "sorkin" || suite == "all") {
        auto v = run_sorkin_suite(opt);
        out.insert(out.end(), v.begin(), v.end());
    }
    if (suite == "dc" || suite == "all") {
        auto v = run_dc_suite(opt);
        out.insert(out.end(), v.begin(), v.end());
    }
    if (suite == "collision" || suite == "all") {
        auto v = run_collision_suite(opt);
        out.insert(out.end(), v.begin(), v.end());
    }
    if (suite == "qqt" || suite == "all") {
        auto v = run_qqt_suite(opt);
        out.insert(out.end(), v.begin(), v.end());
    }
    if (out.empty()) throw std::invalid_argument("unknown suite: " + suite);
    std::sort(out.begin(), out.end(),
              [](const ClaimReport& a, const ClaimReport& b) { return a.id < b.id; });
    return out;
}

nlohmann::json to_json(const std::vector<ClaimReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ClaimReport& r : reports) {
        arr.push_back({{"id", r.id},
                       {"description", r.description},
                       {"paper_location", r.paper_location},
                       {"computed", r.computed},
                       {"expected", r.expected},
                       {"provenance", to_string(r.provenance)},
                       {"tolerance", r.tolerance},
                       {"status", to_string(r.status)}});
    }
    return arr;
}

std::string to_markdown(const std::vector<ClaimReport>& reports) {
    std::ostringstream os;
    os << "| id | description | paper_location | computed | expected | provenance | tolerance | "
          "status |\n";
    os << "|---|---|---|---|---|---|---|---|\n";
    for (const ClaimReport& r : reports) {
        os << "| " << r.id << " | " << r.description << " | " << r.paper_location << " | "
           << r.computed.dump() << " | " << r.expected.dump() << " | "
           << to_string(r.provenance) << " | " << r.tolerance << " | " << to_string(r.status)
           << " |\n";
    }
    return os.str();
}

bool any_failed(const std::vector<ClaimReport>& reports) {
    for (const ClaimReport& r : reports)
        if (r.status == Status::Fail) return true;
    return false;
}

std::vector<ChecklistRow> checklist() {
    return {
        {"States s in Omega_N", "yes", "DC-ORTHO, DC-HERMITIAN, DC-CV",
         "not uniquely fixed by the stated constraints (c and v cannot both be admitted)", "yes",
         "QQT-STATE-MIXED, QQT-STATE-PURE", ""},
        {"Effects e in E_N", "yes", "DC-PHYS-BASIS", "", "yes",
         "QQT-EFFECT-SUPER, QQT-EFFECT-RANGE", ""},
        {"Transformations T : Omega_N -> Omega_N", "?",
         "DC-TPRIME-AXIOMS, DC-TPRIME-NONHERM",
         "the stated axioms admit transformations that take states out of the state space",
         "yes", "QQT-VALIDATE", ""},
        {"Composite systems Omega_N x Omega_M = Omega_NM", "no", "",
         "parameter count N^2 + 2 C(N,3) breaks tomographic locality (DC-PARAMS)", "?",
         "QQT-SWAP", "marginals escape the state space unless dynamics are limited to local "
                     "transformations"},
        {"Higher-order interference", "yes", "COLL-ERR, COLL-ADVANTAGE", "", "?",
         "QQT-I3, QQT-IN-SUPER, QQT-IN-QUANTUM",
         "Nth-order interference for all N, an artifact of the effect ambiguity in the "
         "interference definition"},
        {"Hyperdecoherence", "yes", "DC-HYPERDEC-ID, DC-ADJOINT", "", "yes", "QQT-HYPERDEC", ""},
    };
}

nlohmann::json checklist_json() {
    nlohmann::json arr = nlohmann::json::array();
    for (const ChecklistRow& row : checklist()) {
        arr.push_back({{"desideratum", row.desideratum},
                       {"density_cubes", {{"verdict", row.dc_verdict},
                                          {"claims", row.dc_claims},
                                          {"note", row.dc_note}}},
                       {"quartic_quantum_theory", {{"verdict", row.qqt_verdict},
                                                   {"claims", row.qqt_claims},
                                                   {"note", row.qqt_note}}}});
    }
    return arr;
}

std::string checklist_markdown() {
    std::ostringstream os;
    os << "| Desiderata | Density cubes | Quartic quantum theory |\n";
    os << "|---|---|---|\n";
    int footnote = 1;
    std::vector<std::string> notes;
    auto cell = [&](const std::string& verdict, const std::string& claims,
                    const std::string& note) {
        std::string mark = verdict == "yes" ? "✓" : (verdict == "no" ? "×" : "?");
        if (!note.empty()) {
            mark += " [" + std::to_string(footnote) + "]";
            notes.push_back("[" + std::to_string(footnote) + "] " + note);
            ++footnote;
        }
        if (!claims.empty()) mark += " (" + claims + ")";
        return mark;
    };
    for (const ChecklistRow& row : checklist()) {
        os << "| " << row.desideratum << " | " << cell(row.dc_verdict, row.dc_claims, row.dc_note)
           << " | " << cell(row.qqt_verdict, row.qqt_claims, row.qqt_note) << " |\n";
    }
    os << "\n";
    for (const std::string& n : notes) os << n << "\n";
    return os.str();
}

}  // namespace hoi::claims
