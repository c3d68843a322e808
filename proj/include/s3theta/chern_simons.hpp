#pragma once

#include <array>

#include "s3theta/connection.hpp"
#include "s3theta/dirac.hpp"
#include "s3theta/residue.hpp"

namespace s3theta {

namespace detail {

inline constexpr int kEpsilon[3][3][3] = {
    {{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
    {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
    {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}},
};

}  // namespace detail

/// Scalar epsilon contraction sum_{ijk} eps^{ijk} A_i dA[j][k] of the
/// component symbols against a table of their derivative images.
inline AlgElement epsilon_contract(const std::array<AlgElement, 3>& A,
                                   const std::array<std::array<AlgElement, 3>, 3>& dA) {
    AlgElement out(A[0].context() ? A[0].context() : A[1].context());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                const int sign = detail::kEpsilon[i][j][k];
                if (sign == 0) continue;
                AlgElement term = mul(A[static_cast<std::size_t>(i)],
                                      dA[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]);
                out += sign > 0 ? term : -term;
            }
    return out;
}

/// Cubic contraction sum eps^{ijk} A_i A_j A_k; vanishes identically for
/// connections whose components satisfy a linear relation over the trig ring,
/// which all three Dirac choices produce.
inline AlgElement epsilon_cubic(const std::array<AlgElement, 3>& A) {
    AlgElement out(A[0].context() ? A[0].context() : A[1].context());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                const int sign = detail::kEpsilon[i][j][k];
                if (sign == 0) continue;
                AlgElement term = mul(A[static_cast<std::size_t>(i)],
                                      mul(A[static_cast<std::size_t>(j)], A[static_cast<std::size_t>(k)]));
                out += sign > 0 ? term : -term;
            }
    return out;
}

/// Derivative table d_j(A_k) of the cached components.
inline std::array<std::array<AlgElement, 3>, 3> derivative_table(
    const Dirac& D, const std::array<AlgElement, 3>& A) {
    std::array<std::array<AlgElement, 3>, 3> dA;
    for (int j = 1; j <= 3; ++j)
        for (int k = 1; k <= 3; ++k)
            dA[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)] =
                D.d(j, A[static_cast<std::size_t>(k - 1)]);
    return dA;
}

/// Chern-Simons action through the residue-trace engine:
///   S = (i/6) Res Tr eps^{ijk} (3 A_i [d_j, A_k] + 2 A_i A_j A_k) |D|^{-3-z}.
/// Defined for arbitrary (multi-pair) connections.
inline TrigCoeff cs_action_engine(const Dirac& D, const Connection& conn) {
    const auto dA = derivative_table(D, conn.components);
    const AlgElement eps_dA = epsilon_contract(conn.components, dA);
    const AlgElement eps_cubic = epsilon_cubic(conn.components);
    const Complex i6{0.0, 1.0 / 6.0};
    TrigCoeff total = i6 * (3.0 * nc_integral(D, eps_dA, 3) + 2.0 * nc_integral(D, eps_cubic, 3));
    return total;
}

/// The same action assembled through explicit 2x2 words, tracing
/// sigma_i sigma_j sigma_k instead of contracting with the epsilon tensor:
///   S = (1/12) Res Tr (tr_2 (3 A dA + 2 A^3)) |D|^{-3-z};
/// the pointwise matrix trace is taken first and the resulting scalar is
/// integrated with the same functional as the epsilon route.
inline TrigCoeff cs_action_matrix_route(const Dirac& D, const Connection& conn) {
    const auto& A = conn.components;
    const SpinMatrix Amat = SpinMatrix::from_pauli(A[0], A[1], A[2]);
    SpinMatrix dAmat(D.context());
    for (int j = 1; j <= 3; ++j) {
        const SpinMatrix Nj = SpinMatrix::from_pauli(D.d(j, A[0]), D.d(j, A[1]), D.d(j, A[2]));
        dAmat += pauli(D.context(), j) * Nj;
    }
    const SpinMatrix word = Complex{3.0, 0.0} * (Amat * dAmat) +
                            Complex{2.0, 0.0} * (Amat * (Amat * Amat));
    return Complex{1.0 / 12.0, 0.0} * nc_integral(D, word.spin_trace(), 3);
}

/// Closed-form action for a single generating pair A = a [D, b] with the
/// coefficient self-adjointness condition on a.  Constant for the first
/// Dirac operator, psi-dependent for the other two:
///   D1: -2 sum conj(lambda)^q (p'+q')(p+q) conj(a_{p'q'}) b_{p'q'} conj(a_{pq}) b_{pq}
///   D2: -2 sum (p'q csc^2 + p q' sec^2) (same coefficient product)
///   D3: -2 sum (p'+q') (p sec^2 + q csc^2) (same coefficient product)
inline TrigCoeff cs_action_closed(const Dirac& D, const AlgElement& a, const AlgElement& b) {
    a.require_same_context(b);
    if (!coefficients_self_adjoint(a, D.context()->tol))
        throw validation_error(
            "closed-form action requires the coefficient condition a_{-m,-n} = conj(a_{mn})");

    const auto A = extract_coefficients(a, ModeOrder::ReversedPQ);
    const auto B = extract_coefficients(b, ModeOrder::DirectPQ);

    TrigCoeff out;
    for (const auto& [m1, b1] : B) {
        const int pp = m1.first, qp = m1.second;  // (p', q')
        auto a1 = A.find(m1);
        if (a1 == A.end()) continue;
        for (const auto& [m2, b2] : B) {
            const int p = m2.first, q = m2.second;
            auto a2 = A.find(m2);
            if (a2 == A.end()) continue;
            const Complex coeff =
                std::conj(a1->second) * b1 * std::conj(a2->second) * b2;
            switch (D.id()) {
                case DiracId::D1: {
                    const Complex w = D.context()->lambda_power(-q) *
                                      static_cast<double>((pp + qp) * (p + q));
                    out.add_term(0, 0, -2.0 * w * coeff);
                    break;
                }
                case DiracId::D2:
                    out.add_term(0, -2, -2.0 * coeff * static_cast<double>(pp * q));
                    out.add_term(-2, 0, -2.0 * coeff * static_cast<double>(p * qp));
                    break;
                case DiracId::D3:
                    out.add_term(-2, 0, -2.0 * coeff * static_cast<double>((pp + qp) * p));
                    out.add_term(0, -2, -2.0 * coeff * static_cast<double>((pp + qp) * q));
                    break;
            }
        }
    }
    return out;
}

}  // namespace s3theta
