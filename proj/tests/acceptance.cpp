// Acceptance gate: the eight end-to-end criteria, one verdict line each.
// argv[1] is the path to the command-line binary (used by criterion 8).
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <json.hpp>

#include "hoi/claims.hpp"
#include "hoi/collision.hpp"
#include "hoi/density_cube.hpp"
#include "hoi/qqt.hpp"
#include "hoi/rng.hpp"
#include "hoi/sorkin.hpp"

using namespace hoi;

namespace {

int g_failed = 0;

void verdict(int number, const std::string& name, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << name << "\n";
    if (!ok) ++g_failed;
}

bool quantum_baseline() {
    const sorkin::TheoryPairing qt = sorkin::quantum_pairing();
    Rng rng(42);
    for (int n : {3, 4}) {
        const sorkin::SlitExperiment exp = sorkin::quantum_slit_experiment(n);
        for (int k = 0; k < 100; ++k)
            if (std::abs(sorkin::sorkin_I(n, exp, random_density(rng, n), qt).value) > 1e-12)
                return false;
    }
    ComplexMatrix eta(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) eta.at(i, j) = 0.5;
    const double i2 = sorkin::sorkin_I(2, sorkin::quantum_slit_experiment(2), eta, qt).value;
    return std::abs(i2 - 0.5) <= 1e-12;
}

bool dc_algebra() {
    const dc::CanonicalCubes canon = dc::canonical_cubes();
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            const double expect = i == j ? 1.0 : 0.0;
            if (std::abs(dc::cube_inner(canon.rho[i], canon.rho[j]) - Complex{expect, 0.0}) >
                1e-12)
                return false;
        }

    std::array<dc::Cube, 3> d;
    for (size_t i = 0; i < 3; ++i) d[i] = dc::cvec_to_cube(canon.rho_c[i]);
    if (!dc::is_physical_basis(d, 1e-12)) return false;

    const ComplexMatrix t = dc::constant_T();
    if (!is_unitary(t, 1e-12)) return false;
    for (size_t i = 0; i < 3; ++i) {
        const dc::CVec img = dc::apply_cvec_transform(t, canon.q[i]);
        for (size_t k = 0; k < 5; ++k)
            if (std::abs(img[k] - canon.rho_c[i][k]) > 1e-14) return false;
    }

    const ComplexMatrix tp = dc::constant_Tprime();
    const dc::TransformReport r = dc::validate_transformation(tp, {canon.rho_c[0]}, 1e-10);
    if (!r.unitary || !r.maps_physical_basis || r.preserves_hermitian_form) return false;
    const dc::CVec img = dc::apply_cvec_transform(tp, canon.rho_c[0]);
    const std::array<Complex, 5> display = {Complex{0.933, 0.0}, Complex{0.034, -0.217},
                                            Complex{0.034, 0.217}, Complex{0.092, 0.0},
                                            Complex{-0.171, 0.0}};
    for (size_t k = 0; k < 5; ++k)
        if (std::abs(img[k] - display[k]) > 5e-2) return false;
    return true;
}

bool embedding_hyperdecoherence() {
    Rng rng(42);
    for (int k = 0; k < 1000; ++k) {
        const ComplexMatrix a = random_density(rng, 3);
        const ComplexMatrix b = random_density(rng, 3);
        const Complex qt = (a.adjoint() * b).trace();
        if (std::abs(qt - dc::cube_inner(dc::embed_quantum(a), dc::embed_quantum(b))) > 1e-12)
            return false;
        if ((dc::hyperdecohere(dc::embed_quantum(a)) - a).frobenius_norm() > 1e-12) return false;
    }

    const dc::CanonicalCubes canon = dc::canonical_cubes();
    for (int k = 0; k < 200; ++k) {
        dc::Cube rho;
        double w[3], total = 0.0;
        for (double& x : w) {
            x = rng.uniform();
            total += x;
        }
        for (size_t i = 0; i < 3; ++i)
            rho += Complex{w[i] / total, 0.0} * dc::cvec_to_cube(canon.rho_c[i]);
        const ComplexMatrix sigma = random_density(rng, 3);
        const Complex lhs = (dc::hyperdecohere(rho).adjoint() * sigma).trace();
        const Complex rhs = dc::cube_inner(rho, dc::embed_quantum(sigma));
        if (std::abs(lhs - rhs) > 1e-12) return false;
    }

    const ComplexMatrix img = dc::hyperdecohere(dc::cvec_to_cube(canon.rho_c[0]));
    return (img - ComplexMatrix::diagonal({0.0, 0.5, 0.5})).frobenius_norm() <= 1e-12;
}

bool counterexample() {
    const dc::Counterexample cx = dc::counterexample_cv();
    if (std::abs(cx.inner - (-55.0 / 256.0)) > 1e-12) return false;
    Rng rng(42);
    for (int k = 0; k < 1000; ++k) {
        const dc::Cube emb = dc::embed_quantum(random_density(rng, 3));
        if (dc::cube_inner(dc::cvec_to_cube(cx.c), emb).real() < -1e-12) return false;
        if (dc::cube_inner(dc::cvec_to_cube(cx.v), emb).real() < -1e-12) return false;
    }
    return true;
}

bool collision_problem() {
    const double qt = collision::qt_collision_error();
    if (std::abs(qt - 1.0 / 9.0) > 1e-12) return false;
    const double tensor = collision::dc_collision_error();
    const double closed = collision::dc_collision_error_closed_form();
    if (std::abs(tensor - closed) > 1e-12) return false;
    if (!(qt - tensor > 0.05)) return false;

    claims::Options opt;
    for (const claims::ClaimReport& r : claims::run_collision_suite(opt))
        if (r.id == "COLL-ERR") return r.status == claims::Status::Discrepancy;
    return false;
}

bool qqt_interference() {
    for (int n : {2, 3, 4}) {
        const double expected = (n % 2 == 0 ? 1.0 : -1.0) * (1.0 - n);
        if (std::abs(qqt::qqt_interference(n, qqt::SlitVariant::Superquantum) - expected) > 1e-10)
            return false;
        if (std::abs(qqt::qqt_interference(n, qqt::SlitVariant::Quantum)) > 1e-12) return false;
        for (qqt::SlitVariant v : {qqt::SlitVariant::Superquantum, qqt::SlitVariant::Quantum})
            if (!sorkin::validate_experiment(qqt::qqt_slit_experiment(n, v), qqt::qqt_pairing(n),
                                             1e-9)
                     .empty())
                return false;
    }
    return true;
}

bool qqt_structure() {
    for (int n : {2, 3}) {
        const int d = n * n;
        ComplexMatrix pure(d, d);
        pure.at(0, 0) = 1.0;
        if (qqt::is_qqt_state(pure, n)) return false;
        ComplexMatrix mixed = ComplexMatrix::identity(d);
        mixed *= 1.0 / d;
        if (!qqt::is_qqt_state(mixed, n)) return false;
        ComplexMatrix single(d, d);
        single.at(0, 0) = static_cast<double>(n);
        if (!qqt::is_qqt_effect(single, n)) return false;
    }

    // Closed-form pairing ranges vs sampled bounds.
    Rng rng(42);
    for (int k = 0; k < 5; ++k) {
        const ComplexMatrix e = random_hermitian(rng, 4);
        const auto [lo, hi] = qqt::effect_pairing_range(e, 2);
        for (int s = 0; s < 2000; ++s) {
            const double p = (e * qqt::random_qqt_state(rng, 2)).trace().real();
            if (p < lo - 1e-9 || p > hi + 1e-9) return false;
        }
    }

    if (qqt::qqt_parameter_count(2) != 16) return false;
    if (qqt::qqt_parameter_count(3) != 81) return false;

    const qqt::SwapReport sr = qqt::qqt_swap_counterexample(2);
    return std::abs(sr.lambda_max - 1.0) <= 1e-10 && sr.lambda_max > 0.5 && !sr.is_valid;
}

std::pair<int, std::string> run_cli(const std::string& cmd) {
    std::string out;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return {-1, out};
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool determinism(const std::string& hoi) {
    const std::string cmd = hoi + " reproduce all --seed 42 --format json";
    const auto [code1, out1] = run_cli(cmd);
    const auto [code2, out2] = run_cli(cmd);
    if (code1 != 0 || code2 != 0 || out1 != out2 || out1.empty()) return false;
    const nlohmann::json j = nlohmann::json::parse(out1, nullptr, false);
    if (j.is_discarded() || !j.is_array()) return false;
    int discrepancies = 0;
    for (const auto& item : j)
        if (item["status"] == "DISCREPANCY") ++discrepancies;
    return discrepancies == 1;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-binary>\n";
        return 2;
    }

    verdict(1, "quantum baseline (I2 = 1/2, I3 = I4 = 0)", quantum_baseline());
    verdict(2, "density-cube algebra (bases, T, T')", dc_algebra());
    verdict(3, "embedding and hyper-decoherence", embedding_hyperdecoherence());
    verdict(4, "negative-inner-product counterexample", counterexample());
    verdict(5, "collision-problem advantage and dual path", collision_problem());
    verdict(6, "QQT Nth-order interference", qqt_interference());
    verdict(7, "QQT state/effect structure", qqt_structure());
    verdict(8, "deterministic reproduction", determinism(argv[1]));

    if (g_failed == 0) {
        std::cout << "acceptance: all 8 criteria passed\n";
        return 0;
    }
    std::cerr << "acceptance: " << g_failed << " criterion(s) failed\n";
    return 1;
}
