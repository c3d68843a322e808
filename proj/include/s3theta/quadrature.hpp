#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace s3theta {

namespace detail {

/// Nodes and weights of the 64-point Gauss-Legendre rule on [-1, 1],
/// generated once by Newton iteration on the Legendre recurrence.
struct GaussLegendre64 {
    std::array<double, 64> node{};
    std::array<double, 64> weight{};

    GaussLegendre64() {
        constexpr int n = 64;
        for (int i = 0; i < (n + 1) / 2; ++i) {
            // Chebyshev-based initial guess for the i-th root of P_n.
            double x = std::cos(3.14159265358979323846 * (i + 0.75) / (n + 0.5));
            double pp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = 0.0;
                for (int j = 0; j < n; ++j) {
                    double p2 = p1;
                    p1 = p0;
                    p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
                }
                pp = n * (x * p0 - p1) / (x * x - 1.0);
                double dx = p0 / pp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            node[i] = -x;
            node[n - 1 - i] = x;
            weight[i] = 2.0 / ((1.0 - x * x) * pp * pp);
            weight[n - 1 - i] = weight[i];
        }
    }
};

inline const GaussLegendre64& gl64() {
    static const GaussLegendre64 rule;
    return rule;
}

}  // namespace detail

/// Integrate f over [a, b] with the fixed 64-node Gauss-Legendre rule.
template <typename F>
auto gauss_legendre_64(double a, double b, F&& f) -> decltype(f(0.0)) {
    const auto& rule = detail::gl64();
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    decltype(f(0.0)) acc{};
    for (int i = 0; i < 64; ++i) acc += rule.weight[i] * f(mid + half * rule.node[i]);
    return half * acc;
}

}  // namespace s3theta
