#pragma once

#include <array>
#include <map>

#include "s3theta/dirac.hpp"
#include "s3theta/residue.hpp"
#include "s3theta/spin_matrix.hpp"

namespace s3theta {

/// Differential-operator symbol sum_mu X_mu d1^i d2^j dpsi^k with algebra
/// coefficients; multi-index mu = (i, j, k).  Just enough calculus to form
/// iterated commutators with the Dirac Laplacian.
class PdoSymbol {
  public:
    using Mu = std::array<int, 3>;

    PdoSymbol() = default;

    static PdoSymbol from_element(const AlgElement& x) {
        PdoSymbol s;
        s.add({0, 0, 0}, x);
        return s;
    }

    const std::map<Mu, AlgElement>& terms() const { return terms_; }

    void add(Mu mu, const AlgElement& x) {
        if (x.is_zero()) return;
        auto it = terms_.find(mu);
        if (it == terms_.end()) {
            terms_.emplace(mu, x);
        } else {
            it->second += x;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    PdoSymbol& operator+=(const PdoSymbol& o) {
        for (const auto& [mu, x] : o.terms_) add(mu, x);
        return *this;
    }
    PdoSymbol& operator-=(const PdoSymbol& o) {
        for (const auto& [mu, x] : o.terms_) add(mu, -x);
        return *this;
    }
    friend PdoSymbol operator+(PdoSymbol a, const PdoSymbol& b) { return a += b; }
    friend PdoSymbol operator-(PdoSymbol a, const PdoSymbol& b) { return a -= b; }

    PdoSymbol operator-() const {
        PdoSymbol s;
        for (const auto& [mu, x] : terms_) s.terms_.emplace(mu, -x);
        return s;
    }

    friend PdoSymbol left_mul(const AlgElement& a, const PdoSymbol& s) {
        PdoSymbol out;
        for (const auto& [mu, x] : s.terms_) out.add(mu, mul(a, x));
        return out;
    }

    /// Zeroth-order (multiplication) part.
    AlgElement order_zero() const {
        auto it = terms_.find({0, 0, 0});
        return it == terms_.end() ? AlgElement{} : it->second;
    }

    bool is_zero() const {
        for (const auto& [mu, x] : terms_)
            if (!x.is_zero()) return false;
        return true;
    }

    int max_dpsi_order() const {
        int k = 0;
        for (const auto& [mu, x] : terms_) k = std::max(k, mu[2]);
        return k;
    }

  private:
    std::map<Mu, AlgElement> terms_;
};

/// Commutator [D'^2, S] of the scalar Dirac Laplacian with a symbol of
/// dpsi-order at most one.  For a multiplication operator X,
///   [D'^2, X] = D'^2(X) + 2 sec^2 d1(X) d1 + 2 csc^2 d2(X) d2 - 2 dpsi(X) dpsi,
/// and the dpsi-conjugation terms
///   [D'^2, dpsi] = -(d/dpsi sec^2) d1^2 - (d/dpsi csc^2) d2^2 - 4 csc^2(2psi) dpsi
/// enter when S itself carries a dpsi.
inline PdoSymbol laplacian_commutator(const Dirac& D, const PdoSymbol& S) {
    if (S.max_dpsi_order() > 1)
        throw std::invalid_argument("laplacian_commutator supports dpsi-order <= 1");

    const TrigCoeff sec2 = TrigCoeff::monomial(-2, 0);
    const TrigCoeff csc2 = TrigCoeff::monomial(0, -2);
    // d/dpsi of sec^2 and csc^2
    const TrigCoeff dsec2 = sec2.dpsi();
    const TrigCoeff dcsc2 = csc2.dpsi();
    // csc^2(2 psi) = sec^2 csc^2 / 4
    const TrigCoeff csc2_2psi = TrigCoeff::monomial(-2, -2, {0.25, 0.0});

    PdoSymbol out;
    for (const auto& [mu, X] : S.terms()) {
        // [Lap, X] * d^mu
        out.add(mu, D.laplacian(X));
        out.add({mu[0] + 1, mu[1], mu[2]}, 2.0 * (sec2 * delta1(X)));
        out.add({mu[0], mu[1] + 1, mu[2]}, 2.0 * (csc2 * delta2(X)));
        out.add({mu[0], mu[1], mu[2] + 1}, Complex{-2.0, 0.0} * dpsi(X));

        if (mu[2] == 1) {
            // X * [Lap, dpsi] * d1^i d2^j
            out.add({mu[0] + 2, mu[1], 0}, -(X * dsec2));
            out.add({mu[0], mu[1] + 2, 0}, -(X * dcsc2));
            out.add({mu[0], mu[1], 1}, Complex{-4.0, 0.0} * (X * csc2_2psi));
        }
    }
    return out;
}

/// 2x2 matrix of operator symbols; only what the odd cochain needs.
struct PdoMatrix {
    std::array<PdoSymbol, 4> e{};

    PdoSymbol& at(int r, int c) { return e[static_cast<std::size_t>(2 * r + c)]; }
    const PdoSymbol& at(int r, int c) const { return e[static_cast<std::size_t>(2 * r + c)]; }

    static PdoMatrix from_pauli(const PdoSymbol& x1, const PdoSymbol& x2, const PdoSymbol& x3) {
        const Complex i{0.0, 1.0};
        PdoMatrix m;
        m.at(0, 0) = x3;
        m.at(0, 1) = x1 - scaled(x2, i);
        m.at(1, 0) = x1 + scaled(x2, i);
        m.at(1, 1) = -x3;
        return m;
    }

    static PdoSymbol scaled(const PdoSymbol& s, Complex c) {
        PdoSymbol out;
        for (const auto& [mu, x] : s.terms()) out.add(mu, c * x);
        return out;
    }

    PdoSymbol spin_trace() const { return at(0, 0) + at(1, 1); }
};

/// First cochain of the local index cocycle in the simple-dimension-spectrum
/// form,
///   phi_1(a0, a1) = integral a0 da1 |D|^-1 - 1/4 integral a0 nabla(da1) |D|^-3
///                   + 1/8 integral a0 nabla^2(da1) |D|^-5
/// with nabla = [D'^2, .].  Every term keeps the Pauli grading of da1, so the
/// pointwise matrix trace cancels exactly and the value vanishes on this
/// geometry; the cancellation is computed, not assumed.
inline Complex phi1(const Dirac& D, const AlgElement& a0, const AlgElement& a1) {
    a0.require_same_context(a1);

    const std::array<AlgElement, 3> comp = {D.d(1, a1), D.d(2, a1), D.d(3, a1)};
    std::array<PdoSymbol, 3> graded = {PdoSymbol::from_element(comp[0]),
                                       PdoSymbol::from_element(comp[1]),
                                       PdoSymbol::from_element(comp[2])};

    const std::array<double, 3> weights = {1.0, -0.25, 0.125};
    const std::array<int, 3> powers = {1, 3, 5};

    Complex total{0.0, 0.0};
    for (int term = 0; term < 3; ++term) {
        if (term > 0)
            for (auto& g : graded) g = laplacian_commutator(D, g);

        PdoMatrix integrand = PdoMatrix::from_pauli(left_mul(a0, graded[0]),
                                                    left_mul(a0, graded[1]),
                                                    left_mul(a0, graded[2]));
        PdoSymbol traced = integrand.spin_trace();
        if (traced.is_zero()) continue;  // the generic outcome: sigma-graded words

        // a surviving multiplication part would integrate as usual; symbols of
        // positive order have no residue-trace rule here and are rejected
        const AlgElement word = traced.order_zero();
        PdoSymbol rest = traced;
        rest -= PdoSymbol::from_element(word);
        if (!rest.is_zero())
            throw validation_error("phi1: nonvanishing operator-order trace component");
        const TrigCoeff value = zero_mode(word) * Complex{2.0 * D.trace_residue_factor(powers[static_cast<std::size_t>(term)]), 0.0};
        total += weights[static_cast<std::size_t>(term)] * value.evaluate(kPi / 4.0);
    }
    return total;
}

/// Third cochain: phi_3(a0, a1, a2, a3) = (1/12) integral a0 da1 da2 da3 |D|^-3.
inline TrigCoeff phi3(const Dirac& D, const AlgElement& a0, const AlgElement& a1,
                      const AlgElement& a2, const AlgElement& a3) {
    const SpinMatrix word = a0 * (D.commutator(a1) * (D.commutator(a2) * D.commutator(a3)));
    return Complex{1.0 / 12.0, 0.0} * nc_integral(D, word, 3);
}

}  // namespace s3theta
