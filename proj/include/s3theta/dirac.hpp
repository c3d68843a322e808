#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "s3theta/alg_element.hpp"
#include "s3theta/spin_matrix.hpp"
#include "s3theta/zeta.hpp"

namespace s3theta {

enum class DiracId { D1, D2, D3 };

inline std::string to_string(DiracId id) {
    switch (id) {
        case DiracId::D1: return "d1";
        case DiracId::D2: return "d2";
        case DiracId::D3: return "d3";
    }
    return "?";
}

/// One of the three Dirac operators, bundled with its derivation symbols,
/// Laplacian symbol, spectrum generator and residue weights.
///
/// D1 acts on the spinor bundle through the twisted ladder symbols
///   plus(x)  =  u . (dpsi + tan d1 - cot d2)(x) . v
///   minus(x) = -u* . (dpsi - tan d1 + cot d2)(x) . v*
/// with left and right torus factors multiplied inside the algebra; D2 and D3
/// are built from honest derivations.
class Dirac {
  public:
    Dirac(DiracId id, ContextPtr ctx) : id_(id), ctx_(std::move(ctx)) {}

    DiracId id() const { return id_; }
    const ContextPtr& context() const { return ctx_; }

    /// Constant added to the first operator (3/2); zero for the others.
    double constant_shift() const { return id_ == DiracId::D1 ? 1.5 : 0.0; }

    // --- symbol maps ---------------------------------------------------------

    /// Twisted raising symbol of D1.
    AlgElement plus_symbol(const AlgElement& x) const {
        AlgElement t = dpsi(x) + tan_() * delta1(x) - cot_() * delta2(x);
        return mul(mul(AlgElement::u(ctx_), t), AlgElement::v(ctx_));
    }

    /// Twisted lowering symbol of D1.
    AlgElement minus_symbol(const AlgElement& x) const {
        AlgElement t = dpsi(x) - tan_() * delta1(x) + cot_() * delta2(x);
        return -mul(mul(AlgElement::u(ctx_, -1), t), AlgElement::v(ctx_, -1));
    }

    /// k-th derivation symbol entering commutators, k in {1,2,3}.
    AlgElement d(int k, const AlgElement& x) const {
        const Complex i{0.0, 1.0};
        switch (id_) {
            case DiracId::D1:
                switch (k) {
                    case 1: return 0.5 * (plus_symbol(x) + minus_symbol(x));
                    case 2: return (0.5 * i) * (plus_symbol(x) - minus_symbol(x));
                    case 3: return -(delta1(x) + delta2(x));
                }
                break;
            case DiracId::D2:
                switch (k) {
                    case 1: return sec_() * delta1(x);
                    case 2: return csc_() * delta2(x);
                    case 3: return i * dpsi(x);
                }
                break;
            case DiracId::D3:
                switch (k) {
                    case 1: return i * dpsi(x);
                    case 2: return cot_() * delta2(x) - tan_() * delta1(x);
                    case 3: return -(delta1(x) + delta2(x));
                }
                break;
        }
        throw std::invalid_argument("symbol index must be 1..3");
    }

    /// [D, a] as a 2x2 matrix symbol: sum_k d_k(a) sigma_k.
    /// Linear, vanishes on constants.
    SpinMatrix commutator(const AlgElement& a) const {
        return SpinMatrix::from_pauli(d(1, a), d(2, a), d(3, a));
    }

    /// Scalar components (A1, A2, A3) of the one-form a [D, b].
    std::array<AlgElement, 3> component_symbols(const AlgElement& a, const AlgElement& b) const {
        a.require_same_context(b);
        return {mul(a, d(1, b)), mul(a, d(2, b)), mul(a, d(3, b))};
    }

    /// Action of D' (constant shift omitted) on a column spinor.
    SpinorPair apply(const SpinorPair& s) const {
        const Complex i{0.0, 1.0};
        if (id_ == DiracId::D1) {
            AlgElement d3f = -(delta1(s.upper) + delta2(s.upper));
            AlgElement d3g = -(delta1(s.lower) + delta2(s.lower));
            return {d3f + plus_symbol(s.lower), minus_symbol(s.upper) - d3g};
        }
        // sigma-assembled action; D2 keeps its zeroth-order sigma_3 part.
        auto act = [&](int k, const AlgElement& x) -> AlgElement {
            if (id_ == DiracId::D2 && k == 3)
                return i * (dpsi(x) + 0.5 * (cot_() - tan_()) * x);
            return d(k, x);
        };
        AlgElement up = act(3, s.upper) + act(1, s.lower) - i * act(2, s.lower);
        AlgElement low = act(1, s.upper) + i * act(2, s.upper) - act(3, s.lower);
        return {up, low};
    }

    /// Scalar Dirac-Laplacian symbol (constant term dropped):
    ///   sec^2 d1^2 + csc^2 d2^2 - dpsi^2 - 2 cot(2 psi) dpsi.
    /// The first-order term is the volume factor of the round metric; without
    /// it the operator does not have the eigenvalues m(m+2) on the basis.
    AlgElement laplacian(const AlgElement& x) const {
        return sec2_() * delta1(delta1(x)) + csc2_() * delta2(delta2(x)) -
               dpsi(dpsi(x)) + (tan_() - cot_()) * dpsi(x);
    }

    // --- spectrum ------------------------------------------------------------

    /// Spectral data per level m: D1 lists the pair +-(m + 3/2) with
    /// multiplicity (m+1)(m+2) each; D2/D3 list the Laplacian eigenvalue
    /// m(m+2) with multiplicity (m+1)^2.
    struct Level {
        double eigenvalue;
        long multiplicity;
        int family;  // +1 / -1 for D1; +1 for Laplacian rows
    };

    std::vector<Level> spectrum(int m_max) const {
        std::vector<Level> rows;
        for (int m = 0; m <= m_max; ++m) {
            if (id_ == DiracId::D1) {
                const long mult = static_cast<long>(m + 1) * (m + 2);
                rows.push_back({m + 1.5, mult, +1});
                rows.push_back({-(m + 1.5), mult, -1});
            } else {
                rows.push_back({static_cast<double>(m) * (m + 2), static_cast<long>(m + 1) * (m + 1), +1});
            }
        }
        return rows;
    }

    /// Truncated trace sum_{m <= N} mult * |eigenvalue|^{-s} over the full
    /// representation space (both families / the augmented doubling).
    double truncated_trace(double s, int m_max) const {
        double acc = 0.0;
        for (int m = 0; m <= m_max; ++m) {
            if (id_ == DiracId::D1) {
                acc += 2.0 * (m + 1.0) * (m + 2.0) * std::pow(m + 1.5, -s);
            } else {
                if (m == 0) continue;  // kernel of the Laplacian
                acc += 2.0 * (m + 1.0) * (m + 1.0) * std::pow(m * (m + 2.0), -s / 2.0);
            }
        }
        return acc;
    }

    // --- zeta closed forms and residue weights --------------------------------

    /// Closed form of Tr |D|^{-z} over the full representation space.
    /// D1: 2 [zeta_H(z-2, 3/2) - zeta_H(z, 3/2)/4]; D2/D3 retain the leading
    /// binomial term of their expansions, 2 zeta_R(z-2).
    Complex zeta_closed_form(Complex z) const {
        if (id_ == DiracId::D1)
            return 2.0 * (hurwitz_zeta(z - 2.0, 1.5) - 0.25 * hurwitz_zeta(z, 1.5));
        return 2.0 * riemann_zeta(z - 2.0);
    }

    std::vector<int> supported_powers() const {
        if (id_ == DiracId::D1) return {1, 3, 5};
        return {3};
    }

    /// Residue of Tr |D|^{-n-z} at z = 0 (the stored weight table).
    double residue_weight(int n) const {
        if (id_ == DiracId::D1) {
            switch (n) {
                case 1: return -0.5;
                case 3: return 2.0;
                case 5: return 0.0;
            }
        } else if (n == 3) {
            return 2.0;
        }
        throw std::invalid_argument("unsupported inverse power for this Dirac operator");
    }

    /// Factor multiplying the zero mode of the pointwise 2x2 trace inside
    /// residue traces.  For the spinor triple the two sign families are what
    /// the matrix trace runs over, so the full weight splits in half; the
    /// augmented triples use the full weight, matching the trace evaluations
    /// in the action computations.
    double trace_residue_factor(int n) const {
        const double w = residue_weight(n);
        return id_ == DiracId::D1 ? 0.5 * w : w;
    }

    /// Zeta form whose residue at the n-shift equals trace_residue_factor(n).
    Complex trace_zeta(Complex z) const {
        if (id_ == DiracId::D1)
            return hurwitz_zeta(z - 2.0, 1.5) - 0.25 * hurwitz_zeta(z, 1.5);
        return 2.0 * riemann_zeta(z - 2.0);
    }

  private:
    TrigCoeff tan_() const { return TrigCoeff::monomial(-1, 1); }
    TrigCoeff cot_() const { return TrigCoeff::monomial(1, -1); }
    TrigCoeff sec_() const { return TrigCoeff::monomial(-1, 0); }
    TrigCoeff csc_() const { return TrigCoeff::monomial(0, -1); }
    TrigCoeff sec2_() const { return TrigCoeff::monomial(-2, 0); }
    TrigCoeff csc2_() const { return TrigCoeff::monomial(0, -2); }

    DiracId id_;
    ContextPtr ctx_;
};

}  // namespace s3theta
