#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "s3theta/dirac.hpp"
#include "s3theta/spin_matrix.hpp"
#include "s3theta/zeta.hpp"

namespace s3theta {

/// Noncommutative integral at inverse power n:
///   Res_{z=0} Tr( X |D|^{-n-z} )
/// realized as zero mode of the pointwise 2x2 trace times the residue factor
/// of the Dirac choice.  Returns a trig coefficient; constant for all D1
/// integrands arising in the closed actions, psi-dependent allowed otherwise.
inline TrigCoeff nc_integral(const Dirac& D, const SpinMatrix& X, int n) {
    const auto powers = D.supported_powers();
    if (std::find(powers.begin(), powers.end(), n) == powers.end())
        throw std::invalid_argument("unsupported inverse power for this Dirac operator");
    return zero_mode(X.spin_trace()) * Complex{D.trace_residue_factor(n), 0.0};
}

/// Scalar integrand, lifted as x * I.
inline TrigCoeff nc_integral(const Dirac& D, const AlgElement& x, int n) {
    const auto powers = D.supported_powers();
    if (std::find(powers.begin(), powers.end(), n) == powers.end())
        throw std::invalid_argument("unsupported inverse power for this Dirac operator");
    return zero_mode(x) * Complex{2.0 * D.trace_residue_factor(n), 0.0};
}

/// tau_k = Res_{z=0} z^k Tr( X |D|^{-n-z} ), evaluated by a contour integral
/// of the trace zeta form around z = 0.  Independent of the stored residue
/// weight table, so tau_0 cross-checks nc_integral.
inline Complex tau_k(const Dirac& D, const SpinMatrix& X, int n, int k) {
    const TrigCoeff zm = zero_mode(X.spin_trace());
    if (zm.empty()) return {0.0, 0.0};
    // constant part of the zero mode; psi-dependent residues keep their value
    // at the evaluation point of the trace convention (constant for D1 words)
    const Complex c0 = zm.evaluate(kPi / 4.0);
    const Complex res = contour_residue(
        [&](Complex z) { return pow(z, static_cast<double>(k)) * D.trace_zeta(z + static_cast<double>(n)); },
        Complex{0.0, 0.0}, 0.25, 128);
    return c0 * res;
}

inline Complex tau_k(const Dirac& D, const AlgElement& x, int n, int k) {
    SpinMatrix m(x.context());
    m.at(0, 0) = x;
    m.at(1, 1) = x;
    return tau_k(D, m, n, k);
}

/// One located pole of a zeta closed form.
struct Pole {
    double position;
    int order;
    Complex residue;
};

/// Numerically locate the poles of the spectral zeta closed form inside the
/// window (positions to 1e-6, orders checked to be simple).  A pole shows up
/// as a zero of 1/f on the real axis; grid minima of 1/|f| are refined by
/// secant iteration, then residue and order come from small contour integrals.
inline std::vector<Pole> dimension_spectrum_probe(const Dirac& D, double lo, double hi) {
    auto f = [&](Complex z) { return D.zeta_closed_form(z); };
    auto inv_abs = [&](double s) -> double {
        try {
            return 1.0 / std::abs(f(Complex{s, 0.0}));
        } catch (const std::domain_error&) {
            return 0.0;  // sampled the pole itself
        }
    };

    const double step = 1e-2;
    const int count = static_cast<int>((hi - lo) / step);
    std::vector<double> grid(static_cast<std::size_t>(count) + 1);
    std::vector<double> inv(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        grid[i] = lo + step * static_cast<double>(i);
        inv[i] = inv_abs(grid[i]);
    }

    std::vector<Pole> poles;
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        if (!(inv[i] < 0.1 && inv[i] <= inv[i - 1] && inv[i] <= inv[i + 1])) continue;
        double x0 = grid[i - 1], x1 = grid[i + 1];
        for (int it = 0; it < 100; ++it) {
            double g0, g1;
            try {
                g0 = (1.0 / f(Complex{x0, 0.0})).real();
                g1 = (1.0 / f(Complex{x1, 0.0})).real();
            } catch (const std::domain_error&) {
                break;  // landed exactly on the pole; x1 is the answer
            }
            if (std::abs(g1 - g0) < 1e-300) break;
            const double x2 = x1 - g1 * (x1 - x0) / (g1 - g0);
            x0 = x1;
            x1 = std::clamp(x2, grid[i] - 2.0 * step, grid[i] + 2.0 * step);
            if (std::abs(x1 - x0) < 1e-13) break;
        }
        const double p = x1;
        const bool known = std::any_of(poles.begin(), poles.end(),
                                       [&](const Pole& q) { return std::abs(q.position - p) < 1e-4; });
        if (known || p <= lo || p >= hi) continue;
        const Complex res = contour_residue(f, Complex{p, 0.0}, 0.05, 96);
        if (std::abs(res) < 1e-8) continue;
        // residue of (z - p) f(z) vanishes iff the pole is simple
        const Complex second =
            contour_residue([&](Complex z) { return (z - p) * f(z); }, Complex{p, 0.0}, 0.05, 96);
        poles.push_back({p, std::abs(second) > 1e-6 ? 2 : 1, res});
    }
    std::sort(poles.begin(), poles.end(),
              [](const Pole& a, const Pole& b) { return a.position < b.position; });
    return poles;
}

/// Residue of Tr |D|^{-n-z} at z = 0 extracted from truncated spectral sums:
/// the truncation S(N) grows like a N^2 + b N + c + w log N + d/N + e/N^2,
/// and the log coefficient w is the residue.  Exact solve on a cutoff ladder;
/// the first neglected 1/N^3 correction bounds the error at ~1e-6.
inline double residue_weight_from_truncated_sums(const Dirac& D, int n) {
    const std::array<int, 6> cutoffs = {40, 80, 160, 320, 640, 1280};
    constexpr int kRows = 6, kCols = 6;
    double A[kRows][kCols];
    double y[kRows];
    for (int r = 0; r < kRows; ++r) {
        const double N = cutoffs[static_cast<std::size_t>(r)];
        A[r][0] = N * N;
        A[r][1] = N;
        A[r][2] = 1.0;
        A[r][3] = std::log(N);
        A[r][4] = 1.0 / N;
        A[r][5] = 1.0 / (N * N);
        y[r] = D.truncated_trace(static_cast<double>(n), cutoffs[static_cast<std::size_t>(r)]);
    }
    // direct Gaussian elimination on the square system
    for (int col = 0; col < kCols; ++col) {
        int piv = col;
        for (int r = col + 1; r < kRows; ++r)
            if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
        std::swap(A[piv], A[col]);
        std::swap(y[piv], y[col]);
        for (int r = col + 1; r < kRows; ++r) {
            const double fct = A[r][col] / A[col][col];
            for (int c2 = col; c2 < kCols; ++c2) A[r][c2] -= fct * A[col][c2];
            y[r] -= fct * y[col];
        }
    }
    double sol[kCols];
    for (int r = kRows - 1; r >= 0; --r) {
        double acc = y[r];
        for (int c2 = r + 1; c2 < kCols; ++c2) acc -= A[r][c2] * sol[c2];
        sol[r] = acc / A[r][r];
    }
    return sol[3];
}

}  // namespace s3theta
