#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "s3theta/context.hpp"

namespace s3theta {

namespace detail {

// B_2, B_4, ..., B_28
inline constexpr std::array<double, 14> kBernoulli = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
};

inline Complex cpow_real_base(double base, Complex expo) {
    // base > 0
    return std::exp(-expo * std::log(base));  // base^{-expo}
}

}  // namespace detail

namespace detail {

/// Euler-Maclaurin continuation of the Hurwitz series.  Accurate near and to
/// the right of the critical strip; for deeply negative real parts the direct
/// block cancels, so callers go through the functional equation instead.
inline Complex hurwitz_em(Complex s, double a) {
    if (a <= 0.0) throw std::domain_error("hurwitz_zeta: a must be positive");
    if (std::abs(s - Complex{1.0, 0.0}) < 1e-14)
        throw std::domain_error("hurwitz_zeta: pole at s = 1");

    constexpr int N = 48;  // directly summed terms
    constexpr int J = 12;  // Euler-Maclaurin correction order

    Complex acc{0.0, 0.0};
    for (int n = 0; n < N; ++n) acc += cpow_real_base(n + a, s);

    const double M = N + a;
    acc += cpow_real_base(M, s - 1.0) / (s - 1.0);
    acc += 0.5 * cpow_real_base(M, s);

    // sum_j B_{2j}/(2j)! * s(s+1)...(s+2j-2) * M^{-s-2j+1}
    Complex rising = s;          // (s)_1
    double factorial = 2.0;      // (2j)!
    for (int j = 1; j <= J; ++j) {
        acc += kBernoulli[j - 1] / factorial * rising *
               cpow_real_base(M, s + static_cast<double>(2 * j - 1));
        rising *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j));
        factorial *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    }
    return acc;
}

Complex log_gamma_fwd(Complex z);

}  // namespace detail

/// Riemann zeta with the functional equation covering the left half plane.
/// The direct continuation stays accurate through the critical strip; the
/// reflection takes over where its sine factor is safely away from the pole
/// of zeta(1 - s).
inline Complex riemann_zeta(Complex s) {
    if (s.real() >= -0.25) return detail::hurwitz_em(s, 1.0);
    // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
    const Complex one_minus = 1.0 - s;
    return std::pow(2.0, s) * std::pow(kPi, s - 1.0) * std::sin(kPi * s / 2.0) *
           std::exp(detail::log_gamma_fwd(one_minus)) * detail::hurwitz_em(one_minus, 1.0);
}

/// Hurwitz zeta.  The half-integer offsets used by the spectral sums reduce
/// exactly to the Riemann function:
///   zeta_H(s, 3/2) = (2^s - 1) zeta(s) - 2^s,
/// valid for all s != 1; other offsets use the Euler-Maclaurin continuation.
inline Complex hurwitz_zeta(Complex s, double a) {
    if (std::abs(s - Complex{1.0, 0.0}) < 1e-14)
        throw std::domain_error("hurwitz_zeta: pole at s = 1");
    if (a == 1.0) return riemann_zeta(s);
    if (a == 1.5) {
        const Complex p = std::pow(2.0, s);
        return (p - 1.0) * riemann_zeta(s) - p;
    }
    if (a == 0.5) return (std::pow(2.0, s) - 1.0) * riemann_zeta(s);
    return detail::hurwitz_em(s, a);
}

/// zeta_R'(0) = -log(2 pi)/2, obtained here by complex-step differentiation
/// of the continued series (no cancellation, machine accurate).
inline double riemann_zeta_deriv0() {
    const double h = 1e-20;
    return detail::hurwitz_em(Complex{0.0, h}, 1.0).imag() / h;
}

/// sin(pi x) with argument reduction, keeping full accuracy for large x.
inline double sin_pi(double x) {
    double r = std::fmod(x, 2.0);
    if (r > 1.0)
        r -= 2.0;
    else if (r < -1.0)
        r += 2.0;
    return std::sin(kPi * r);
}

inline double cos_pi(double x) {
    double r = std::fmod(x, 2.0);
    if (r > 1.0)
        r -= 2.0;
    else if (r < -1.0)
        r += 2.0;
    return std::cos(kPi * r);
}

/// sin(pi z) for complex z with the real part reduced mod 2 first.
inline Complex sin_pi_complex(Complex z) {
    const double x = z.real(), y = z.imag();
    return {sin_pi(x) * std::cosh(kPi * y), cos_pi(x) * std::sinh(kPi * y)};
}

namespace detail {

/// Lanczos log-gamma (g = 7), valid for Re z >= 0.5.
inline Complex log_gamma_fwd(Complex z) {
    static const std::array<double, 9> c = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    };
    z -= 1.0;
    Complex x = c[0];
    for (int i = 1; i < 9; ++i) x += c[i] / (z + static_cast<double>(i));
    const Complex t = z + 7.5;
    return 0.918938533204672741780329736406 /* log sqrt(2 pi) */
           + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace detail

/// Complex log-gamma; reflection with reduced sine handles Re z < 1/2.
inline Complex log_gamma(Complex z) {
    if (z.real() < 0.5)
        return std::log(kPi) - std::log(sin_pi_complex(z)) - detail::log_gamma_fwd(1.0 - z);
    return detail::log_gamma_fwd(z);
}

inline Complex gamma_fn(Complex z) { return std::exp(log_gamma(z)); }

/// Residue of f at s0 via a trapezoid contour integral on |s - s0| = radius.
/// Exact for meromorphic integrands once the node count resolves them.
template <typename F>
Complex contour_residue(F&& f, Complex s0, double radius = 0.25, int nodes = 64) {
    Complex acc{0.0, 0.0};
    for (int k = 0; k < nodes; ++k) {
        const double t = 2.0 * kPi * k / nodes;
        const Complex z = s0 + std::polar(radius, t);
        acc += f(z) * (z - s0);  // f(z) * r e^{it}; dz = i r e^{it} dt
    }
    return acc / static_cast<double>(nodes);
}

}  // namespace s3theta
