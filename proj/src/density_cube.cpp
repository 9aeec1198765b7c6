#include "hoi/density_cube.hpp"

#include <cmath>

#include "hoi/rng.hpp"

namespace hoi::dc {

namespace {

const double kSqrt3 = std::sqrt(3.0);

// Even permutations of (0,1,2); the third-order positions carrying rho_123.
constexpr int kEvenPerm[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
constexpr int kOddPerm[3][3] = {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}};

// The three arrangements of the multiset {i,i,j}.
void two_equal_positions(int i, int j, int out[3][3]) {
    const int p[3][3] = {{i, i, j}, {i, j, i}, {j, i, i}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) out[r][c] = p[r][c];
}

}  // namespace

Complex omega() { return {-0.5, kSqrt3 / 2.0}; }

Cube& Cube::operator+=(const Cube& o) {
    for (size_t i = 0; i < 27; ++i) entries[i] += o.entries[i];
    return *this;
}

Cube& Cube::operator-=(const Cube& o) {
    for (size_t i = 0; i < 27; ++i) entries[i] -= o.entries[i];
    return *this;
}

Cube& Cube::operator*=(Complex s) {
    for (size_t i = 0; i < 27; ++i) entries[i] *= s;
    return *this;
}

Complex cube_inner(const Cube& rho, const Cube& sigma) {
    Complex p{0.0, 0.0};
    for (size_t i = 0; i < 27; ++i) p += std::conj(rho.entries[i]) * sigma.entries[i];
    return p;
}

bool is_hermitian_cube(const Cube& rho, double tol, std::vector<std::string>* violations) {
    std::vector<std::string> v;

    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            int pos[3][3];
            two_equal_positions(i, j, pos);
            const Complex base = rho.at(pos[0][0], pos[0][1], pos[0][2]);
            if (std::abs(base.imag()) > tol)
                v.push_back("condition 1: rho_" + std::to_string(i + 1) + std::to_string(i + 1) +
                            std::to_string(j + 1) + " not real");
            for (int r = 1; r < 3; ++r)
                if (std::abs(rho.at(pos[r][0], pos[r][1], pos[r][2]) - base) > tol)
                    v.push_back("condition 1: permutations of {" + std::to_string(i + 1) + "," +
                                std::to_string(i + 1) + "," + std::to_string(j + 1) + "} differ");
        }

    const Complex w = rho.at(0, 1, 2);
    for (int r = 1; r < 3; ++r)
        if (std::abs(rho.at(kEvenPerm[r][0], kEvenPerm[r][1], kEvenPerm[r][2]) - w) > tol)
            v.push_back("condition 2: cyclic permutations of rho_123 differ");
    for (const auto& p : kOddPerm)
        if (std::abs(rho.at(p[0], p[1], p[2]) - std::conj(w)) > tol)
            v.push_back("condition 2: odd permutations of rho_123 not conjugated");

    Complex tr{0.0, 0.0};
    for (int i = 0; i < 3; ++i) tr += rho.at(i, i, i);
    if (std::abs(tr - Complex{1.0, 0.0}) > tol) v.push_back("condition 3: trace != 1");

    for (int i = 0; i < 3; ++i) {
        const Complex d = rho.at(i, i, i);
        if (d.real() < -tol || std::abs(d.imag()) > tol)
            v.push_back("condition 4: rho_" + std::to_string(i + 1) + std::to_string(i + 1) +
                        std::to_string(i + 1) + " not a probability");
    }

    if (violations) *violations = v;
    return v.empty();
}

CanonicalCubes canonical_cubes() {
    CanonicalCubes c;
    const Complex w = omega();
    for (int j = 0; j < 3; ++j) {
        Cube& cube = c.rho[static_cast<size_t>(j)];
        const Complex phase = std::pow(w, j);  // omega^{j-1} with paper's j = j+1
        const Complex third = phase / (2.0 * kSqrt3);
        for (int i = 0; i < 3; ++i) cube.at(i, i, i) = (i == j) ? 0.0 : 0.5;
        for (const auto& p : kEvenPerm) cube.at(p[0], p[1], p[2]) = third;
        for (const auto& p : kOddPerm) cube.at(p[0], p[1], p[2]) = std::conj(third);

        c.q[static_cast<size_t>(j)][static_cast<size_t>(j)] = 1.0;
    }
    c.rho_c[0].a = {Complex{0}, Complex{0.5}, Complex{0.5}, Complex{0.5}, Complex{0.5}};
    c.rho_c[1].a = {Complex{0.5}, Complex{0}, Complex{0.5}, 0.5 * w, 0.5 * std::conj(w)};
    c.rho_c[2].a = {Complex{0.5}, Complex{0.5}, Complex{0}, 0.5 * std::conj(w), 0.5 * w};
    return c;
}

Cube cvec_to_cube(const CVec& v) {
    Cube cube;
    for (int i = 0; i < 3; ++i) cube.at(i, i, i) = v[static_cast<size_t>(i)];
    for (const auto& p : kEvenPerm) cube.at(p[0], p[1], p[2]) = v[3] / kSqrt3;
    for (const auto& p : kOddPerm) cube.at(p[0], p[1], p[2]) = v[4] / kSqrt3;
    return cube;
}

CVec cube_to_cvec(const Cube& rho, double tol) {
    CVec v;
    for (int i = 0; i < 3; ++i) v[static_cast<size_t>(i)] = rho.at(i, i, i);

    Complex even{0.0, 0.0}, odd{0.0, 0.0};
    for (const auto& p : kEvenPerm) even += rho.at(p[0], p[1], p[2]);
    for (const auto& p : kOddPerm) odd += rho.at(p[0], p[1], p[2]);
    even /= 3.0;
    odd /= 3.0;
    for (const auto& p : kEvenPerm)
        if (std::abs(rho.at(p[0], p[1], p[2]) - even) > tol)
            throw std::invalid_argument("not in C-span");
    for (const auto& p : kOddPerm)
        if (std::abs(rho.at(p[0], p[1], p[2]) - odd) > tol)
            throw std::invalid_argument("not in C-span");
    v[3] = kSqrt3 * even;
    v[4] = kSqrt3 * odd;

    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            int pos[3][3];
            two_equal_positions(i, j, pos);
            for (const auto& p : pos)
                if (std::abs(rho.at(p[0], p[1], p[2])) > tol)
                    throw std::invalid_argument("not in C-span");
        }
    return v;
}

bool is_physical_basis(const std::array<Cube, 3>& set, double tol) {
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            const Complex p = cube_inner(set[i], set[j]);
            const double expect = (i == j) ? 1.0 : 0.0;
            if (std::abs(p - Complex{expect, 0.0}) > tol) return false;
        }
    Cube sum = set[0];
    sum += set[1];
    sum += set[2];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                const double expect = (i == j && j == k) ? 1.0 : 0.0;
                if (std::abs(sum.at(i, j, k) - Complex{expect, 0.0}) > tol) return false;
            }
    return true;
}

CVec apply_cvec_transform(const ComplexMatrix& m, const CVec& v) {
    if (m.rows() != 5 || m.cols() != 5)
        throw std::invalid_argument("C-basis transformations are 5x5");
    CVec out;
    for (size_t i = 0; i < 5; ++i) {
        Complex s{0.0, 0.0};
        for (size_t j = 0; j < 5; ++j) s += m.at(static_cast<int>(i), static_cast<int>(j)) * v[j];
        out[i] = s;
    }
    return out;
}

ComplexMatrix constant_T() {
    const Complex w = omega();
    const Complex ws = std::conj(w);
    const Complex o{1.0, 0.0}, z{0.0, 0.0};
    std::vector<Complex> e = {
        z, o, o, o,  o,   //
        o, z, o, ws, w,   //
        o, o, z, w,  ws,  //
        o, w, ws, o, z,   //
        o, ws, w, z, o,
    };
    ComplexMatrix t(5, 5, std::move(e));
    t *= 0.5;
    return t;
}

ComplexMatrix constant_Tprime() {
    const Complex w = omega();
    const Complex ws = std::conj(w);
    const double r3 = kSqrt3;
    const Complex o{1.0, 0.0}, z{0.0, 0.0};
    std::vector<Complex> e = {
        z, o, o, 0.5 * (1.0 + r3), 0.5 * (-1.0 + r3),          //
        o, z, o, 0.5 * (ws + r3 * w), 0.5 * (-w + r3 * ws),    //
        o, o, z, 0.5 * (w + r3 * ws), 0.5 * (-ws + r3 * w),    //
        o, w, ws, Complex{0.5, 0.0}, Complex{r3 / 2.0, 0.0},   //
        o, ws, w, Complex{r3 / 2.0, 0.0}, Complex{-0.5, 0.0},
    };
    ComplexMatrix t(5, 5, std::move(e));
    t *= 0.5;
    return t;
}

TransformReport validate_transformation(const ComplexMatrix& m, const std::vector<CVec>& samples,
                                        double tol) {
    TransformReport r;
    r.unitary = is_unitary(m, tol);

    const CanonicalCubes canon = canonical_cubes();
    std::array<Cube, 3> image;
    for (size_t i = 0; i < 3; ++i) image[i] = cvec_to_cube(apply_cvec_transform(m, canon.q[i]));
    r.maps_physical_basis = is_physical_basis(image, tol);

    for (size_t k = 0; k < samples.size(); ++k) {
        const CVec out = apply_cvec_transform(m, samples[k]);
        bool ok = std::abs(out[4] - std::conj(out[3])) <= tol;
        for (size_t i = 0; i < 3 && ok; ++i) ok = std::abs(out[i].imag()) <= tol;
        if (!ok) r.violating_samples.push_back(k);
    }
    r.preserves_hermitian_form = r.violating_samples.empty();
    return r;
}

Cube embed_quantum(const ComplexMatrix& rho_qt) {
    if (!rho_qt.square() || rho_qt.rows() != 3)
        throw std::invalid_argument("not a quantum state");
    if (!is_hermitian(rho_qt, 1e-9) || std::abs(rho_qt.trace() - Complex{1.0, 0.0}) > 1e-9)
        throw std::invalid_argument("not a quantum state");
    const EigenDecomposition d = eig_hermitian(rho_qt);
    if (d.eigenvalues.back() < -1e-9) throw std::invalid_argument("not a quantum state");

    const double f = std::sqrt(2.0 / 3.0);
    Cube cube;
    for (int i = 0; i < 3; ++i) cube.at(i, i, i) = rho_qt.at(i, i).real();
    // The displayed entries give, for i<j, the real part of rho_ij on the
    // {i,i,j} positions and the imaginary part on {i,j,j}; the remaining
    // arrangements follow from the Hermiticity conditions.
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const double re = f * rho_qt.at(i, j).real();
            const double im = f * rho_qt.at(i, j).imag();
            int pos[3][3];
            two_equal_positions(i, j, pos);
            for (const auto& p : pos) cube.at(p[0], p[1], p[2]) = re;
            two_equal_positions(j, i, pos);
            for (const auto& p : pos) cube.at(p[0], p[1], p[2]) = im;
        }
    return cube;
}

std::pair<Cube, Cube> split_orders(const Cube& rho) {
    Cube third, rest;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                if (i != j && j != k && i != k)
                    third.at(i, j, k) = rho.at(i, j, k);
                else
                    rest.at(i, j, k) = rho.at(i, j, k);
            }
    return {third, rest};
}

ComplexMatrix hyperdecohere(const Cube& rho) {
    // Adjoint of the embedding: project onto its image (average the tied
    // arrangements, drop the third-order part) and invert the sqrt(2/3)
    // scaling.
    const double f = std::sqrt(3.0 / 2.0);
    ComplexMatrix out(3, 3);
    for (int i = 0; i < 3; ++i) out.at(i, i) = rho.at(i, i, i).real();
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            int pos[3][3];
            double re = 0.0, im = 0.0;
            two_equal_positions(i, j, pos);
            for (const auto& p : pos) re += rho.at(p[0], p[1], p[2]).real();
            two_equal_positions(j, i, pos);
            for (const auto& p : pos) im += rho.at(p[0], p[1], p[2]).real();
            re *= f / 3.0;
            im *= f / 3.0;
            out.at(i, j) = Complex{re, im};
            out.at(j, i) = Complex{re, -im};
        }
    return out;
}

Counterexample counterexample_cv() {
    Counterexample cx;
    cx.c.a = {Complex{0.5}, Complex{0.5}, Complex{0.0}, Complex{0.5}, Complex{0.5}};
    const double s = std::sqrt(595.0);
    cx.v.a = {Complex{10.0 / 256.0}, Complex{10.0 / 256.0}, Complex{236.0 / 256.0},
              Complex{-65.0 / 256.0, -s / 256.0}, Complex{-65.0 / 256.0, s / 256.0}};
    cx.inner = cube_inner(cvec_to_cube(cx.c), cvec_to_cube(cx.v)).real();
    return cx;
}

namespace {

Cube random_hermitian_cube(Rng& rng, bool normalized) {
    Cube cube;
    double sum = 0.0;
    for (int i = 0; i < 3; ++i) {
        cube.at(i, i, i) = rng.gaussian();
        sum += cube.at(i, i, i).real();
    }
    if (normalized)
        for (int i = 0; i < 3; ++i) cube.at(i, i, i) += (1.0 - sum) / 3.0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            int pos[3][3];
            const double a = rng.gaussian();
            two_equal_positions(i, j, pos);
            for (const auto& p : pos) cube.at(p[0], p[1], p[2]) = a;
            const double b = rng.gaussian();
            two_equal_positions(j, i, pos);
            for (const auto& p : pos) cube.at(p[0], p[1], p[2]) = b;
        }
    const Complex w = rng.gaussian_complex();
    for (const auto& p : kEvenPerm) cube.at(p[0], p[1], p[2]) = w;
    for (const auto& p : kOddPerm) cube.at(p[0], p[1], p[2]) = std::conj(w);
    return cube;
}

int numerical_rank(const std::vector<std::array<double, 54>>& vecs) {
    ComplexMatrix gram(54, 54);
    for (const auto& x : vecs)
        for (int i = 0; i < 54; ++i)
            for (int j = 0; j < 54; ++j)
                gram.at(i, j) += x[static_cast<size_t>(i)] * x[static_cast<size_t>(j)];
    const EigenDecomposition d = eig_hermitian(gram);
    const double top = std::max(d.eigenvalues.front(), 1e-300);
    int rank = 0;
    for (double ev : d.eigenvalues)
        if (ev > 1e-8 * top) ++rank;
    return rank;
}

std::array<double, 54> vectorize(const Cube& c) {
    std::array<double, 54> x{};
    for (size_t i = 0; i < 27; ++i) {
        x[2 * i] = c.entries[i].real();
        x[2 * i + 1] = c.entries[i].imag();
    }
    return x;
}

}  // namespace

ParameterCount dc_parameter_count(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::array<double, 54>> vecs;
    for (int k = 0; k < 200; ++k) vecs.push_back(vectorize(random_hermitian_cube(rng, false)));
    const int unnormalized = numerical_rank(vecs);

    std::vector<Cube> normed;
    for (int k = 0; k < 200; ++k) normed.push_back(random_hermitian_cube(rng, true));
    vecs.clear();
    for (size_t k = 1; k < normed.size(); ++k) vecs.push_back(vectorize(normed[k] - normed[0]));
    const int normalized = numerical_rank(vecs);

    return {unnormalized, normalized};
}

}  // namespace hoi::dc
