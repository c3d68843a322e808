#pragma once

#include <cmath>
#include <stdexcept>

#include "s3theta/alg_element.hpp"
#include "s3theta/dirac.hpp"
#include "s3theta/spin_matrix.hpp"

namespace s3theta {

/// Index (m, l, j) of a deformed Peter-Weyl matrix coefficient,
/// 0 <= l, j <= m.
struct PWIndex {
    int m = 0;
    int l = 0;
    int j = 0;

    void validate() const {
        if (m < 0 || l < 0 || l > m || j < 0 || j > m)
            throw std::out_of_range("Peter-Weyl index out of range");
    }
};

namespace detail {

inline double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace detail

/// Deformed matrix coefficient
///   phi^m_{l,j} = c^m_{l,j} sum_{s+t=l} b^{m,j}_{s,t} (-1)^{j-t}
///                 u^{l+j-m} v^{l-j} cos^{m-j-s+t} sin^{j-t+s}
/// with b^{m,j}_{s,t} = C(m-j,s) C(j,t) and the unitary normalization
/// c^m_{l,j} = sqrt(C(m,j) / C(m,l)), the one under which the family is
/// orthogonal with squared norm 1/(m+1).  The l-ratio of c^m_{l,j}, and with
/// it every ladder and eigenspinor relation, is unchanged by the choice.
/// All terms share one torus mode; trig powers are honest (nonnegative).
inline AlgElement peter_weyl(ContextPtr ctx, const PWIndex& idx) {
    idx.validate();
    const int m = idx.m, l = idx.l, j = idx.j;
    const double norm = std::sqrt(detail::binom(m, j) / detail::binom(m, l));
    TrigCoeff f;
    for (int s = 0; s <= l; ++s) {
        const int t = l - s;
        const double b = detail::binom(m - j, s) * detail::binom(j, t);
        if (b == 0.0) continue;
        const double sign = ((j - t) % 2 == 0) ? 1.0 : -1.0;
        f.add_term(m - j - s + t, j - t + s, norm * b * sign);
    }
    AlgElement x(ctx);
    x.set_mode(l + j - m, l - j, f);
    return x;
}

/// Vertical field of the Hopf action: Z = i (delta1 + delta2).
/// Z phi^m_{l,j} = i (2l - m) phi^m_{l,j}.
inline AlgElement hopf_vertical(const AlgElement& x) {
    return Complex{0.0, 1.0} * (delta1(x) + delta2(x));
}

/// Raising ladder, the -i plus_symbol of the first Dirac operator:
/// L+ phi^m_{l,j} = 2i sqrt(l+1) sqrt(m-l) phi^m_{l+1,j}.
inline AlgElement ladder_raise(const Dirac& d1, const AlgElement& x) {
    return Complex{0.0, -1.0} * d1.plus_symbol(x);
}

/// Lowering ladder: L- phi^m_{l,j} = 2i sqrt(l) sqrt(m-l+1) phi^m_{l-1,j}.
inline AlgElement ladder_lower(const Dirac& d1, const AlgElement& x) {
    return Complex{0.0, -1.0} * d1.minus_symbol(x);
}

/// Scalar c with x = c * y (sampled); throws if x is not proportional to y.
inline Complex proportionality_coefficient(const AlgElement& x, const AlgElement& y) {
    const DeformationContext& ctx = *y.context();
    // locate the (mode, psi) where y is largest, divide there, then verify
    double best_psi = 0.0;
    Complex best_val{0.0, 0.0};
    AlgElement::Mode best_mode{0, 0};
    for (const auto& [mode, f] : y.modes())
        for (double psi : ctx.sample_points()) {
            const Complex v = f.evaluate(psi);
            if (std::abs(v) > std::abs(best_val)) {
                best_val = v;
                best_psi = psi;
                best_mode = mode;
            }
        }
    if (std::abs(best_val) < 1e-8)
        throw validation_error("cannot extract coefficient against a null element");
    const Complex c = x.mode(best_mode.first, best_mode.second).evaluate(best_psi) / best_val;
    if (sampled_distance(x, c * y) > 10.0 * ctx.tol)
        throw validation_error("elements are not proportional");
    return c;
}

/// Eigen and ladder coefficients of one Peter-Weyl element under the
/// vertical field, the two ladders and the Dirac Laplacian.
struct LadderReport {
    Complex z_coefficient;        // expected i (2l - m)
    Complex raise_coefficient;    // expected 2i sqrt(l+1) sqrt(m-l)
    Complex lower_coefficient;    // expected 2i sqrt(l) sqrt(m-l+1)
    Complex laplacian_eigenvalue; // expected m (m + 2)
};

inline LadderReport ladder_check(ContextPtr ctx, const PWIndex& idx) {
    idx.validate();
    const Dirac d1(DiracId::D1, ctx);
    const AlgElement phi = peter_weyl(ctx, idx);

    LadderReport rep{};
    rep.z_coefficient = proportionality_coefficient(hopf_vertical(phi), phi);
    rep.laplacian_eigenvalue = proportionality_coefficient(d1.laplacian(phi), phi);

    const AlgElement raised = ladder_raise(d1, phi);
    if (idx.l == idx.m) {
        if (sampled_distance(raised, AlgElement::zero(ctx)) > 1e3 * ctx->tol)
            throw validation_error("ladder top should annihilate");
        rep.raise_coefficient = {0.0, 0.0};
    } else {
        rep.raise_coefficient =
            proportionality_coefficient(raised, peter_weyl(ctx, {idx.m, idx.l + 1, idx.j}));
    }

    const AlgElement lowered = ladder_lower(d1, phi);
    if (idx.l == 0) {
        if (sampled_distance(lowered, AlgElement::zero(ctx)) > 1e3 * ctx->tol)
            throw validation_error("ladder bottom should annihilate");
        rep.lower_coefficient = {0.0, 0.0};
    } else {
        rep.lower_coefficient =
            proportionality_coefficient(lowered, peter_weyl(ctx, {idx.m, idx.l - 1, idx.j}));
    }
    return rep;
}

/// Eigenspinors of the first Dirac operator.
///   sign = +1:  ( -sqrt(k) phi^m_{m-k+1,l} ; sqrt(m-k+1) phi^m_{m-k,l} ),
///               0 <= k <= m+1, 0 <= l <= m, eigenvalue m under D1'.
///   sign = -1:  ( sqrt(m-k+1) phi^{m+1}_{m-k+1,l} ; sqrt(k+1) phi^{m+1}_{m-k,l} ),
///               0 <= k <= m, 0 <= l <= m+1, eigenvalue -(m+3).
inline SpinorPair eigenspinor(ContextPtr ctx, int sign, int m, int k, int l) {
    if (m < 0) throw std::out_of_range("eigenspinor: m must be nonnegative");
    auto pw_or_zero = [&](int mm, int ll, int jj, double coeff) -> AlgElement {
        if (coeff == 0.0 || ll < 0 || ll > mm) return AlgElement::zero(ctx);
        return coeff * peter_weyl(ctx, {mm, ll, jj});
    };
    if (sign >= 0) {
        if (k < 0 || k > m + 1 || l < 0 || l > m)
            throw std::out_of_range("eigenspinor index out of range");
        return {pw_or_zero(m, m - k + 1, l, -std::sqrt(static_cast<double>(k))),
                pw_or_zero(m, m - k, l, std::sqrt(static_cast<double>(m - k + 1)))};
    }
    if (k < 0 || k > m || l < 0 || l > m + 1)
        throw std::out_of_range("eigenspinor index out of range");
    return {pw_or_zero(m + 1, m - k + 1, l, std::sqrt(static_cast<double>(m - k + 1))),
            pw_or_zero(m + 1, m - k, l, std::sqrt(static_cast<double>(k + 1)))};
}

}  // namespace s3theta
