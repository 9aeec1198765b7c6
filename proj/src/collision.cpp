#include "hoi/collision.hpp"

#include <cmath>

namespace hoi::collision {

namespace {

Complex overlap(const ComplexMatrix& phi, const ComplexMatrix& psi) {
    Complex s{0.0, 0.0};
    for (int i = 0; i < 3; ++i) s += std::conj(phi.at(i, 0)) * psi.at(i, 0);
    return s;
}

void check_state(const ComplexMatrix& psi) {
    if (psi.rows() != 3 || psi.cols() != 1) throw std::invalid_argument("state must be 3x1");
    double norm = 0.0;
    for (int i = 0; i < 3; ++i) norm += std::norm(psi.at(i, 0));
    if (std::abs(norm - 1.0) > 1e-10) throw std::invalid_argument("state not normalized");
}

}  // namespace

std::array<TritBitFunction, 8> all_functions() {
    std::array<TritBitFunction, 8> fs;
    for (int b = 0; b < 8; ++b) fs[static_cast<size_t>(b)].values = {b & 1, (b >> 1) & 1, (b >> 2) & 1};
    return fs;
}

ComplexMatrix qt_oracle(const TritBitFunction& f, const ComplexMatrix& psi) {
    check_state(psi);
    ComplexMatrix out(3, 1);
    for (int i = 0; i < 3; ++i)
        out.at(i, 0) = (f.values[static_cast<size_t>(i)] ? -1.0 : 1.0) * psi.at(i, 0);
    return out;
}

ComplexMatrix uniform_superposition() {
    ComplexMatrix phi(3, 1);
    const double a = 1.0 / std::sqrt(3.0);
    for (int i = 0; i < 3; ++i) phi.at(i, 0) = a;
    return phi;
}

double qt_collision_error() {
    const ComplexMatrix phi = uniform_superposition();
    double worst = 0.0;
    for (const TritBitFunction& f : all_functions()) {
        if (f.all_equal()) continue;
        worst = std::max(worst, std::norm(overlap(phi, qt_oracle(f, phi))));
    }
    return worst;
}

dc::Cube dc_associate(const TaggedDCState& s) {
    check_state(s.psi);
    dc::Cube cube;
    const double f = -1.0 / std::sqrt(6.0);
    for (int i = 0; i < 3; ++i)
        cube.at(i, i, i) = 0.5 * (1.0 - std::norm(s.psi.at(i, 0)));
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const Complex cc = std::conj(s.psi.at(i, 0)) * s.psi.at(j, 0);
            // rho_iij = -Re(c_i* c_j)/sqrt(6), rho_ijj = -Im(c_i* c_j)/sqrt(6),
            // tied arrangements by Hermiticity.
            const int a_pos[3][3] = {{i, i, j}, {i, j, i}, {j, i, i}};
            const int b_pos[3][3] = {{i, j, j}, {j, i, j}, {j, j, i}};
            for (const auto& p : a_pos) cube.at(p[0], p[1], p[2]) = f * cc.real();
            for (const auto& p : b_pos) cube.at(p[0], p[1], p[2]) = f * cc.imag();
        }
    const Complex third = std::pow(dc::omega(), ((s.n % 3) + 3) % 3) / (2.0 * std::sqrt(3.0));
    const int even[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    const int odd[3][3] = {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
    for (const auto& p : even) cube.at(p[0], p[1], p[2]) = third;
    for (const auto& p : odd) cube.at(p[0], p[1], p[2]) = std::conj(third);
    return cube;
}

DcPairInner dc_pair_inner(const ComplexMatrix& phi, int n, const ComplexMatrix& psi, int m) {
    const dc::Cube a = dc_associate({phi, n});
    const dc::Cube b = dc_associate({psi, m});
    DcPairInner r;
    r.tensor = dc::cube_inner(a, b).real();
    r.closed_form = 0.25 * (1.0 + std::norm(overlap(phi, psi))) +
                    0.5 * std::cos(2.0 * M_PI * (n - m) / 3.0);
    return r;
}

TaggedDCState dc_oracle(const TritBitFunction& f, const TaggedDCState& s) {
    return {qt_oracle(f, s.psi), (s.n + f.sum()) % 3};
}

namespace {

template <typename Pick>
double worst_case_error(Pick pick) {
    const ComplexMatrix phi = uniform_superposition();
    const TaggedDCState start{phi, 0};
    double worst = 0.0;
    for (const TritBitFunction& f : all_functions()) {
        if (f.all_equal()) continue;
        const TaggedDCState after = dc_oracle(f, start);
        worst = std::max(worst, pick(dc_pair_inner(phi, 0, after.psi, after.n)));
    }
    return worst;
}

}  // namespace

double dc_collision_error() {
    return worst_case_error([](const DcPairInner& p) { return p.tensor; });
}

double dc_collision_error_closed_form() {
    return worst_case_error([](const DcPairInner& p) { return p.closed_form; });
}

}  // namespace hoi::collision
