#pragma once

#include <cmath>
#include <cstdint>

#include "hoi/linalg.hpp"

namespace hoi {

/// Seeded xoshiro256++ generator with hand-rolled distributions, so that
/// sampled values depend only on the seed (standard-library distributions
/// are implementation defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& w : s_) {
            // splitmix64 seeding
            x += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            w = z ^ (z >> 31);
        }
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    Complex gaussian_complex() {
        const double re = gaussian();
        const double im = gaussian();
        return {re, im};
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t s_[4];
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Ginibre matrix of iid standard complex Gaussians.
inline ComplexMatrix random_ginibre(Rng& rng, int n) {
    ComplexMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.at(i, j) = rng.gaussian_complex();
    return g;
}

/// Haar-random unitary: modified Gram-Schmidt on a Ginibre matrix.
inline ComplexMatrix random_unitary(Rng& rng, int n) {
    ComplexMatrix g = random_ginibre(rng, n);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < j; ++k) {
            Complex dot{0.0, 0.0};
            for (int i = 0; i < n; ++i) dot += std::conj(g.at(i, k)) * g.at(i, j);
            for (int i = 0; i < n; ++i) g.at(i, j) -= dot * g.at(i, k);
        }
        double norm = 0.0;
        for (int i = 0; i < n; ++i) norm += std::norm(g.at(i, j));
        norm = std::sqrt(norm);
        for (int i = 0; i < n; ++i) g.at(i, j) /= norm;
    }
    return g;
}

inline ComplexMatrix random_hermitian(Rng& rng, int n) {
    ComplexMatrix h(n, n);
    for (int i = 0; i < n; ++i) {
        h.at(i, i) = rng.gaussian();
        for (int j = i + 1; j < n; ++j) {
            const Complex z = rng.gaussian_complex();
            h.at(i, j) = z;
            h.at(j, i) = std::conj(z);
        }
    }
    return h;
}

/// Normalized Haar-random pure state vector, returned as an n x 1 matrix.
inline ComplexMatrix random_pure_state(Rng& rng, int n) {
    ComplexMatrix v(n, 1);
    double norm = 0.0;
    for (int i = 0; i < n; ++i) {
        v.at(i, 0) = rng.gaussian_complex();
        norm += std::norm(v.at(i, 0));
    }
    norm = std::sqrt(norm);
    for (int i = 0; i < n; ++i) v.at(i, 0) /= norm;
    return v;
}

/// Full-rank random density matrix: mixture of n Haar-random pure states
/// with uniform random weights.
inline ComplexMatrix random_density(Rng& rng, int n) {
    ComplexMatrix rho(n, n);
    double total = 0.0;
    std::vector<double> w(static_cast<size_t>(n));
    for (double& x : w) {
        x = rng.uniform() + 1e-12;
        total += x;
    }
    for (int k = 0; k < n; ++k) {
        const ComplexMatrix v = random_pure_state(rng, n);
        const double p = w[static_cast<size_t>(k)] / total;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) rho.at(i, j) += p * v.at(i, 0) * std::conj(v.at(j, 0));
    }
    return rho;
}

}  // namespace hoi
