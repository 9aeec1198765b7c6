#include <doctest.h>

#include <cmath>

#include "hoi/qqt.hpp"
#include "hoi/rng.hpp"
#include "hoi/sorkin.hpp"

using namespace hoi;
using namespace hoi::qqt;

TEST_CASE("state membership") {
    for (int n : {2, 3}) {
        CHECK(is_qqt_state(initial_state(n), n));

        ComplexMatrix mixed = ComplexMatrix::identity(n * n);
        mixed *= 1.0 / (n * n);
        CHECK(is_qqt_state(mixed, n));

        ComplexMatrix pure(n * n, n * n);
        pure.at(0, 0) = 1.0;
        CHECK_FALSE(is_qqt_state(pure, n));

        Rng rng(71);
        for (int k = 0; k < 50; ++k) CHECK(is_qqt_state(random_qqt_state(rng, n), n));
    }
}

TEST_CASE("random QQT states are genuine density matrices") {
    Rng rng(73);
    for (int k = 0; k < 20; ++k) {
        const ComplexMatrix rho = random_qqt_state(rng, 3);
        CHECK(std::abs(rho.trace() - Complex{1.0, 0.0}) <= 1e-10);
        CHECK(is_hermitian(rho, 1e-10));
        const EigenDecomposition d = eig_hermitian(rho);
        for (double ev : d.eigenvalues) CHECK(ev >= -1e-10);
        CHECK(d.eigenvalues.front() <= 1.0 / 3.0 + 1e-10);
    }
}

TEST_CASE("effect membership and pairing range") {
    for (int n : {2, 3}) {
        const int d = n * n;
        CHECK(is_qqt_effect(ComplexMatrix::identity(d), n));
        const auto [lo, hi] = effect_pairing_range(ComplexMatrix::identity(d), n);
        CHECK(lo == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(hi == doctest::Approx(1.0).epsilon(1e-12));

        // The superquantum singleton effect N |ii><ii| peaks at exactly 1.
        ComplexMatrix single(d, d);
        single.at(0, 0) = static_cast<double>(n);
        CHECK(is_qqt_effect(single, n));
        const auto [slo, shi] = effect_pairing_range(single, n);
        CHECK(slo == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(shi == doctest::Approx(1.0).epsilon(1e-12));

        ComplexMatrix twice = ComplexMatrix::identity(d);
        twice *= 2.0;
        CHECK_FALSE(is_qqt_effect(twice, n));

        ComplexMatrix neg(d, d);
        neg.at(0, 0) = -1.0;
        CHECK_FALSE(is_qqt_effect(neg, n));

        ComplexMatrix nonherm(d, d);
        nonherm.at(0, 1) = 1.0;
        CHECK_THROWS_WITH_AS(is_qqt_effect(nonherm, n), "not Hermitian", std::invalid_argument);
    }
}

TEST_CASE("sampled pairings stay inside the closed-form range") {
    Rng rng(79);
    for (int n : {2, 3}) {
        const ComplexMatrix e = random_hermitian(rng, n * n);
        const auto [lo, hi] = effect_pairing_range(e, n);
        for (int k = 0; k < 500; ++k) {
            const ComplexMatrix rho = random_qqt_state(rng, n);
            const double p = (e * rho).trace().real();
            CHECK(p >= lo - 1e-9);
            CHECK(p <= hi + 1e-9);
        }
    }
}

TEST_CASE("witness state") {
    for (int n : {2, 3, 4}) {
        const ComplexMatrix w = qqt_witness_state(n);
        CHECK(is_qqt_state(w, n));
        const EigenDecomposition d = eig_hermitian(w);
        CHECK(d.eigenvalues.front() == doctest::Approx(1.0 / n).epsilon(1e-12));
    }
}

TEST_CASE("slit experiments validate against the QQT pairing") {
    for (int n : {2, 3}) {
        for (SlitVariant v : {SlitVariant::Superquantum, SlitVariant::Quantum}) {
            const auto violations =
                sorkin::validate_experiment(qqt_slit_experiment(n, v), qqt_pairing(n), 1e-9);
            CHECK(violations.empty());
        }
    }
    CHECK_THROWS_AS(qqt_slit_experiment(7, SlitVariant::Quantum), std::invalid_argument);
}

TEST_CASE("Nth-order interference") {
    CHECK(qqt_interference(2, SlitVariant::Superquantum) == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(qqt_interference(3, SlitVariant::Superquantum) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(qqt_interference(4, SlitVariant::Superquantum) == doctest::Approx(-3.0).epsilon(1e-10));
    for (int n : {2, 3, 4})
        CHECK(std::abs(qqt_interference(n, SlitVariant::Quantum)) <= 1e-10);
}

TEST_CASE("hyper-decoherence") {
    for (int n : {2, 3}) {
        ComplexMatrix flat = ComplexMatrix::identity(n);
        flat *= 1.0 / n;
        CHECK((qqt_hyperdecohere(initial_state(n), n) - flat).frobenius_norm() <= 1e-12);

        Rng rng(83);
        for (int k = 0; k < 20; ++k) {
            const ComplexMatrix out = qqt_hyperdecohere(random_qqt_state(rng, n), n);
            CHECK(out.rows() == n);
            CHECK(std::abs(out.trace() - Complex{1.0, 0.0}) <= 1e-10);
            const EigenDecomposition d = eig_hermitian(out);
            for (double ev : d.eigenvalues) CHECK(ev >= -1e-10);
        }
    }
}

TEST_CASE("composite swap counterexample") {
    const SwapReport r = qqt_swap_counterexample(2);
    CHECK(r.lambda_max == doctest::Approx(1.0).epsilon(1e-10));
    CHECK_FALSE(r.is_valid);
    ComplexMatrix pure(4, 4);
    pure.at(0, 0) = 1.0;
    CHECK((r.marginal - pure).frobenius_norm() <= 1e-10);
}

TEST_CASE("parameter counts") {
    CHECK(qqt_parameter_count(2) == 16);
    CHECK(qqt_parameter_count(3) == 81);
    CHECK(qqt_parameter_count(2, 7) == 16);
}
