#pragma once

// Shared helpers for the test suites: deterministic random elements and the
// clock-and-shift matrix oracle used to validate the torus phase arithmetic
// at rational deformation angles.

#include <complex>
#include <random>
#include <vector>

#include "s3theta/s3theta.hpp"

namespace s3theta::testing {

using Matrix = std::vector<std::vector<Complex>>;

inline Matrix mat_zero(int n) { return Matrix(static_cast<std::size_t>(n), std::vector<Complex>(static_cast<std::size_t>(n))); }

inline Matrix mat_identity(int n) {
    Matrix m = mat_zero(n);
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1.0;
    return m;
}

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
    const int n = static_cast<int>(a.size());
    Matrix c = mat_zero(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j)
                c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                    b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    return c;
}

inline Matrix mat_adjoint(const Matrix& a) {
    const int n = static_cast<int>(a.size());
    Matrix c = mat_zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                std::conj(a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
    return c;
}

inline double mat_distance(const Matrix& a, const Matrix& b) {
    double d = 0.0;
    const int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            d = std::max(d, std::abs(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                                     b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
    return d;
}

/// Clock matrix diag(1, w, ..., w^{N-1}) and cyclic shift; they satisfy
/// C S = w S C with w = e^{2 pi i/N}, the rational-angle model of u, v.
inline Matrix clock_matrix(int N, int power) {
    Matrix c = mat_zero(N);
    for (int j = 0; j < N; ++j)
        c[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] =
            std::polar(1.0, 2.0 * kPi * j * power / N);
    return c;
}

inline Matrix shift_matrix(int N, int power) {
    Matrix s = mat_zero(N);
    const int p = ((power % N) + N) % N;
    for (int j = 0; j < N; ++j)
        s[static_cast<std::size_t>((j + p) % N)][static_cast<std::size_t>(j)] = 1.0;
    return s;
}

/// Matrix image of an element at theta = 1/N and fixed psi: u -> clock,
/// v -> shift, trig coefficients -> scalars.
inline Matrix to_matrix(const AlgElement& x, int N, double psi) {
    Matrix acc = mat_zero(N);
    for (const auto& [mode, f] : x.modes()) {
        const Complex scalar = f.evaluate(psi);
        const Matrix word = mat_mul(clock_matrix(N, mode.first), shift_matrix(N, mode.second));
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                acc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                    scalar * word[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return acc;
}

inline Complex random_unit(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    return {dist(rng), dist(rng)};
}

/// Largest stored coefficient magnitude across all modes.
inline double coefficient_scale(const AlgElement& x) {
    double s = 0.0;
    for (const auto& [m, f] : x.modes()) s = std::max(s, f.max_abs());
    return s;
}

/// Random element with the given number of modes in a small box; honest
/// nonnegative trig factors can be layered on top of the canonical monomials.
inline AlgElement random_element(ContextPtr ctx, std::mt19937_64& rng, int n_modes,
                                 int box = 3, bool extra_trig = false) {
    std::uniform_int_distribution<int> mode_dist(-box, box);
    std::uniform_int_distribution<int> trig_dist(0, 2);
    AlgElement x(ctx);
    for (int i = 0; i < n_modes; ++i) {
        const int p = mode_dist(rng), q = mode_dist(rng);
        AlgElement term = AlgElement::monomial(ctx, p, q, random_unit(rng));
        if (extra_trig) term = term * TrigCoeff::monomial(trig_dist(rng), trig_dist(rng));
        x += term;
    }
    return x;
}

/// Self-adjoint left factor a0 + a1 M_(m,n) + conj(a1) M_(-m,-n) in the
/// reversed monomial order, paired with a single-mode right factor.
struct CanonicalPair {
    AlgElement a;
    AlgElement b;
    int p, q;          // right-factor mode
    Complex a_coeff;   // coefficient of the (p, q) reversed monomial in a
    Complex b_coeff;
    double a_const;
};

inline CanonicalPair random_canonical_pair(ContextPtr ctx, std::mt19937_64& rng, int box = 3,
                                           bool matching = true) {
    std::uniform_int_distribution<int> mode_dist(-box, box);
    std::uniform_real_distribution<double> real_dist(-1.0, 1.0);
    CanonicalPair cp;
    do {
        cp.p = mode_dist(rng);
        cp.q = mode_dist(rng);
    } while (cp.p == 0 && cp.q == 0);
    int am = cp.p, an = cp.q;
    if (!matching) {
        do {
            am = mode_dist(rng);
            an = mode_dist(rng);
        } while (am == cp.p && an == cp.q);
    }
    cp.a_coeff = random_unit(rng);
    cp.b_coeff = random_unit(rng);
    cp.a_const = real_dist(rng);
    cp.a = AlgElement::scalar(ctx, {cp.a_const, 0.0}) +
           reversed_monomial(ctx, am, an, cp.a_coeff) +
           reversed_monomial(ctx, -am, -an, std::conj(cp.a_coeff));
    cp.b = AlgElement::monomial(ctx, cp.p, cp.q, cp.b_coeff);
    return cp;
}

}  // namespace s3theta::testing
