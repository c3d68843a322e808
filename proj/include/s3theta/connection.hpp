#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "s3theta/alg_element.hpp"
#include "s3theta/dirac.hpp"

namespace s3theta {

/// Mode monomial in the reversed order beta^n alpha^m; adjacent to a direct
/// monomial alpha^p beta^q it pairs phase-free, which is why left factors of
/// one-forms are decomposed this way.
inline AlgElement reversed_monomial(ContextPtr ctx, int m, int n, Complex coeff = {1.0, 0.0}) {
    return coeff * mul(AlgElement::monomial(ctx, 0, n), AlgElement::monomial(ctx, m, 0));
}

/// Which monomial order a coefficient family refers to.
enum class ModeOrder { DirectPQ, ReversedPQ };

/// Coefficient of f against the canonical trig monomial c^p s^q, if f is a
/// scalar multiple of it (sampled test); nullopt otherwise.
inline std::optional<Complex> canonical_coefficient(const TrigCoeff& f, int p, int q,
                                                    const DeformationContext& ctx) {
    const TrigCoeff target = TrigCoeff::monomial(p, q);
    double best_psi = ctx.sample_points().front();
    double best_mag = 0.0;
    for (double psi : ctx.sample_points()) {
        const double m = std::abs(target.evaluate(psi));
        if (m > best_mag) {
            best_mag = m;
            best_psi = psi;
        }
    }
    const Complex c = f.evaluate(best_psi) / target.evaluate(best_psi);
    if (sampled_distance(f, c * target, ctx) > 1e3 * ctx.tol) return std::nullopt;
    return c;
}

/// Extract the per-mode coefficient family of x, requiring every mode to be a
/// scalar multiple of its canonical monomial.  For ReversedPQ the reordering
/// phase lambda^{-mn} of beta^n alpha^m is divided back out.
inline std::map<AlgElement::Mode, Complex> extract_coefficients(const AlgElement& x,
                                                                ModeOrder order) {
    const DeformationContext& ctx = *x.context();
    std::map<AlgElement::Mode, Complex> out;
    for (const auto& [mode, f] : x.modes()) {
        auto c = canonical_coefficient(f, mode.first, mode.second, ctx);
        if (!c)
            throw validation_error("element is not a combination of canonical mode monomials");
        Complex coeff = *c;
        if (order == ModeOrder::ReversedPQ)
            coeff *= x.context()->lambda_power(static_cast<long long>(mode.first) * mode.second);
        if (std::abs(coeff) > 1e-14) out.emplace(mode, coeff);
    }
    return out;
}

/// Coefficient self-adjointness rule for left factors of a connection:
/// a_{-m,-n} = conj(a_{mn}) on all modes, in the reversed-order family.
inline bool coefficients_self_adjoint(const AlgElement& a, double tol) {
    std::map<AlgElement::Mode, Complex> coeffs;
    try {
        coeffs = extract_coefficients(a, ModeOrder::ReversedPQ);
    } catch (const validation_error&) {
        return false;
    }
    for (const auto& [mode, c] : coeffs) {
        auto it = coeffs.find({-mode.first, -mode.second});
        const Complex mirror = it == coeffs.end() ? Complex{0.0, 0.0} : it->second;
        if (std::abs(mirror - std::conj(c)) > tol) return false;
    }
    return true;
}

/// Connection one-form A = sum_i a_i [D, b_i] with cached scalar components.
struct Connection {
    std::vector<std::pair<AlgElement, AlgElement>> pairs;
    std::array<AlgElement, 3> components;
    bool self_adjoint = false;
    DiracId dirac = DiracId::D1;
    ContextPtr ctx;
};

inline Connection make_connection(std::vector<std::pair<AlgElement, AlgElement>> pairs,
                                  const Dirac& D) {
    Connection conn;
    conn.dirac = D.id();
    conn.ctx = D.context();
    conn.components = {AlgElement(D.context()), AlgElement(D.context()), AlgElement(D.context())};
    conn.self_adjoint = true;
    for (auto& [a, b] : pairs) {
        if ((a.context() && a.context() != D.context()) ||
            (b.context() && b.context() != D.context()))
            throw context_mismatch{};
        const auto comp = D.component_symbols(a, b);
        for (int k = 0; k < 3; ++k) conn.components[static_cast<std::size_t>(k)] += comp[static_cast<std::size_t>(k)];
        if (!coefficients_self_adjoint(a, D.context()->tol)) conn.self_adjoint = false;
    }
    conn.pairs = std::move(pairs);
    return conn;
}

/// Gauge transformation A -> u* A u + u* [D, u], expressed again through
/// generating pairs:  u* a [D, b] u = (u* a)[D, b u] - (u* a b)[D, u].
inline Connection gauge_transform(const Connection& conn, const AlgElement& u, const Dirac& D) {
    const AlgElement one = AlgElement::one(D.context());
    const AlgElement us = star(u);
    if (!function_equal(mul(us, u), one) || !function_equal(mul(u, us), one))
        throw validation_error("gauge transformation requires a unitary element");

    std::vector<std::pair<AlgElement, AlgElement>> pairs;
    pairs.reserve(2 * conn.pairs.size() + 1);
    for (const auto& [a, b] : conn.pairs) {
        pairs.emplace_back(mul(us, a), mul(b, u));
        pairs.emplace_back(-mul(us, mul(a, b)), u);
    }
    pairs.emplace_back(us, u);
    return make_connection(std::move(pairs), D);
}

}  // namespace s3theta
