#pragma once

#include <array>
#include <string>

#include "s3theta/alg_element.hpp"

namespace s3theta {

/// 2x2 matrix over the coordinate algebra; carries Dirac commutators,
/// one-forms and spinor-endomorphism words.  Entries share one context.
class SpinMatrix {
  public:
    SpinMatrix() = default;
    explicit SpinMatrix(ContextPtr ctx)
        : e_{AlgElement(ctx), AlgElement(ctx), AlgElement(ctx), AlgElement(ctx)} {}

    static SpinMatrix zero(ContextPtr ctx) { return SpinMatrix(std::move(ctx)); }

    static SpinMatrix identity(ContextPtr ctx) {
        SpinMatrix m(ctx);
        m.at(0, 0) = AlgElement::one(ctx);
        m.at(1, 1) = AlgElement::one(ctx);
        return m;
    }

    /// x0*I + x1*sigma1 + x2*sigma2 + x3*sigma3.
    static SpinMatrix from_pauli(const AlgElement& x1, const AlgElement& x2,
                                 const AlgElement& x3) {
        SpinMatrix m;
        const Complex i{0.0, 1.0};
        m.at(0, 0) = x3;
        m.at(0, 1) = x1 - i * x2;
        m.at(1, 0) = x1 + i * x2;
        m.at(1, 1) = -x3;
        return m;
    }

    AlgElement& at(int r, int c) { return e_[static_cast<std::size_t>(2 * r + c)]; }
    const AlgElement& at(int r, int c) const { return e_[static_cast<std::size_t>(2 * r + c)]; }

    SpinMatrix& operator+=(const SpinMatrix& o) {
        for (int k = 0; k < 4; ++k) e_[k] += o.e_[k];
        return *this;
    }
    SpinMatrix& operator-=(const SpinMatrix& o) {
        for (int k = 0; k < 4; ++k) e_[k] -= o.e_[k];
        return *this;
    }
    friend SpinMatrix operator+(SpinMatrix a, const SpinMatrix& b) { return a += b; }
    friend SpinMatrix operator-(SpinMatrix a, const SpinMatrix& b) { return a -= b; }

    SpinMatrix operator-() const {
        SpinMatrix m;
        for (int k = 0; k < 4; ++k) m.e_[k] = -e_[k];
        return m;
    }

    friend SpinMatrix operator*(Complex c, const SpinMatrix& m) {
        SpinMatrix r;
        for (int k = 0; k < 4; ++k) r.e_[k] = c * m.e_[k];
        return r;
    }

    /// Matrix product with noncommutative entry multiplication.
    friend SpinMatrix operator*(const SpinMatrix& a, const SpinMatrix& b) {
        SpinMatrix r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r.at(i, j) = mul(a.at(i, 0), b.at(0, j)) + mul(a.at(i, 1), b.at(1, j));
        return r;
    }

    /// Left multiplication by a scalar algebra element.
    friend SpinMatrix operator*(const AlgElement& a, const SpinMatrix& m) {
        SpinMatrix r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.at(i, j) = mul(a, m.at(i, j));
        return r;
    }
    friend SpinMatrix operator*(const SpinMatrix& m, const AlgElement& a) {
        SpinMatrix r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.at(i, j) = mul(m.at(i, j), a);
        return r;
    }

    AlgElement spin_trace() const { return at(0, 0) + at(1, 1); }

    bool is_zero() const {
        for (const auto& e : e_)
            if (!e.is_zero()) return false;
        return true;
    }

    std::string str() const {
        return "[[" + at(0, 0).str() + ", " + at(0, 1).str() + "], [" + at(1, 0).str() +
               ", " + at(1, 1).str() + "]]";
    }

  private:
    std::array<AlgElement, 4> e_{};
};

inline double sampled_distance(const SpinMatrix& a, const SpinMatrix& b) {
    double d = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) d = std::max(d, sampled_distance(a.at(i, j), b.at(i, j)));
    return d;
}

inline bool function_equal(const SpinMatrix& a, const SpinMatrix& b) {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (!function_equal(a.at(i, j), b.at(i, j))) return false;
    return true;
}

/// Constant Pauli matrix as a SpinMatrix, k in {1,2,3}; k = 0 gives I.
inline SpinMatrix pauli(ContextPtr ctx, int k) {
    SpinMatrix m(ctx);
    const AlgElement one = AlgElement::one(ctx);
    const Complex i{0.0, 1.0};
    switch (k) {
        case 0:
            m.at(0, 0) = one;
            m.at(1, 1) = one;
            break;
        case 1:
            m.at(0, 1) = one;
            m.at(1, 0) = one;
            break;
        case 2:
            m.at(0, 1) = -i * one;
            m.at(1, 0) = i * one;
            break;
        case 3:
            m.at(0, 0) = one;
            m.at(1, 1) = -one;
            break;
        default:
            throw std::invalid_argument("pauli index must be 0..3");
    }
    return m;
}

/// Column spinor (upper; lower) in the trivialized bundle.
struct SpinorPair {
    AlgElement upper;
    AlgElement lower;

    SpinorPair() = default;
    SpinorPair(AlgElement up, AlgElement low) : upper(std::move(up)), lower(std::move(low)) {
        upper.require_same_context(lower);
    }

    SpinorPair operator*(Complex c) const { return {c * upper, c * lower}; }
    SpinorPair operator+(const SpinorPair& o) const { return {upper + o.upper, lower + o.lower}; }
    SpinorPair operator-(const SpinorPair& o) const { return {upper - o.upper, lower - o.lower}; }
};

inline double sampled_distance(const SpinorPair& a, const SpinorPair& b) {
    return std::max(sampled_distance(a.upper, b.upper), sampled_distance(a.lower, b.lower));
}

}  // namespace s3theta
