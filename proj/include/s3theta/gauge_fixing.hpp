#pragma once

#include <array>
#include <map>
#include <vector>

#include "s3theta/chern_simons.hpp"
#include "s3theta/connection.hpp"
#include "s3theta/residue.hpp"

namespace s3theta {

/// Divergence of a connection: d^mu A_mu = sum_k d_k(A_k), the derivative
/// symbols applied to the cached components.  On a single generating pair
/// a [D1, b] this expands to
///   sum 2 (p+q) u a u* b_pq  +  sum (p+q)(m+p+n+q) a_mn b_pq.
inline AlgElement gauge_divergence(const Dirac& D, const Connection& conn) {
    AlgElement out(D.context());
    for (int k = 1; k <= 3; ++k) out += D.d(k, conn.components[static_cast<std::size_t>(k - 1)]);
    return out;
}

/// The displayed mode expansion of the divergence, assembled termwise from
/// the coefficient families; cross-checks gauge_divergence.
inline AlgElement gauge_divergence_modewise(ContextPtr ctx, const AlgElement& a,
                                            const AlgElement& b) {
    const auto A = extract_coefficients(a, ModeOrder::ReversedPQ);
    const auto B = extract_coefficients(b, ModeOrder::DirectPQ);
    const AlgElement u = AlgElement::u(ctx);
    const AlgElement uau = mul(u, mul(a, star(u)));

    AlgElement out(ctx);
    for (const auto& [mb, bc] : B) {
        const int p = mb.first, q = mb.second;
        out += (2.0 * (p + q) * bc) * mul(uau, AlgElement::monomial(ctx, p, q));
        for (const auto& [ma, ac] : A) {
            const int m = ma.first, n = ma.second;
            const double w = static_cast<double>(p + q) * (m + p + n + q);
            if (w == 0.0) continue;
            out += (w * ac * bc) *
                   mul(reversed_monomial(ctx, m, n), AlgElement::monomial(ctx, p, q));
        }
    }
    return out;
}

/// Gauge-fixing quadratic term (1/(2 xi)) integral (d.A)^2 |D|^-3.
inline TrigCoeff gauge_term_quadratic(const Dirac& D, const Connection& conn, double xi) {
    const AlgElement div = gauge_divergence(D, conn);
    return Complex{1.0 / (2.0 * xi), 0.0} * nc_integral(D, mul(div, div), 3);
}

/// Quadratic weight of one gauge mode (p, q), kept in factored form so the
/// exact phase identity at xi = 1/(pi k) is visible:
///   w = cs_scale * cs_lambda + gauge_scale * gauge_lambda
///     = -8 pi k (p+q)^2 lambda^{-q}  +  (8/xi) (p+q)^2 lambda^{-2q}.
struct GaugeModeWeight {
    int p = 0;
    int q = 0;
    Complex cs_lambda;     // -lambda^{-q}
    Complex gauge_lambda;  // +lambda^{-2q}
    double cs_scale = 0.0;
    double gauge_scale = 0.0;

    Complex total() const { return cs_scale * cs_lambda + gauge_scale * gauge_lambda; }
    bool degenerate(double eps = 1e-12) const { return std::abs(total()) < eps; }
};

/// Per-mode weight tables of the gauge-fixed quadratic action.
struct ModeWeights {
    std::map<std::pair<int, int>, GaugeModeWeight> gauge_modes;  // p + q != 0
    std::map<std::pair<int, int>, double> ghost_modes;           // m + n != 0
    std::map<std::array<int, 4>, Complex> ghost_interaction;
};

/// Combined Chern-Simons + gauge-fixing weights on the mode box |p|,|q| <= N.
/// At xi = 1/(pi k) the two scales coincide and the lambda parts combine to
/// the exact difference lambda^{-2q} - lambda^{-q}.
inline ModeWeights effective_quadratic(const DeformationContext& ctx, int k, double xi, int N) {
    if (k < 1) throw std::invalid_argument("level k must be a positive integer");
    if (!(xi > 0.0)) throw std::invalid_argument("gauge parameter xi must be positive");
    ModeWeights w;
    for (int p = -N; p <= N; ++p)
        for (int q = -N; q <= N; ++q) {
            if (p + q == 0) continue;
            GaugeModeWeight gw;
            gw.p = p;
            gw.q = q;
            const double pq2 = static_cast<double>(p + q) * (p + q);
            gw.cs_lambda = -ctx.lambda_power(-q);
            gw.gauge_lambda = ctx.lambda_power(-2LL * q);
            gw.cs_scale = 8.0 * kPi * k * pq2;
            gw.gauge_scale = 8.0 / xi * pq2;
            w.gauge_modes.emplace(std::make_pair(p, q), gw);
        }
    return w;
}

/// Ghost sector of the gauge-fixed action: quadratic weights -2 (m+n)^2 on
/// the box (modes with m + n = 0 excluded), and the interaction couplings
/// 2 (m+n)(p+q) conj(a_pq) b_pq read off the connection coefficients.
inline ModeWeights ghost_bilinear(const AlgElement& a, const AlgElement& b, int N) {
    ModeWeights w;
    for (int m = -N; m <= N; ++m)
        for (int n = -N; n <= N; ++n) {
            if (m + n == 0) continue;
            w.ghost_modes.emplace(std::make_pair(m, n), -2.0 * (m + n) * (m + n));
        }
    const auto A = extract_coefficients(a, ModeOrder::ReversedPQ);
    const auto B = extract_coefficients(b, ModeOrder::DirectPQ);
    for (const auto& [mg, gw] : w.ghost_modes) {
        for (const auto& [mb, bc] : B) {
            auto ac = A.find(mb);
            if (ac == A.end()) continue;
            const Complex coupling = 2.0 * static_cast<double>(mg.first + mg.second) *
                                     static_cast<double>(mb.first + mb.second) *
                                     std::conj(ac->second) * bc;
            if (std::abs(coupling) > 1e-14)
                w.ghost_interaction.emplace(
                    std::array<int, 4>{mg.first, mg.second, mb.first, mb.second}, coupling);
        }
    }
    return w;
}

}  // namespace s3theta
