#pragma once

#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "s3theta/context.hpp"

namespace s3theta {

/// Laurent polynomial in c = cos(psi), s = sin(psi) with complex coefficients.
///
/// Negative exponents are allowed; they carry the sec/csc/tan/cot prefactors
/// of the localized monomial calculus.  Coefficients below 1e-15 in magnitude
/// are pruned.  Because c^2 + s^2 = 1, the representation is not unique, so
/// equality is decided by sampled evaluation (see function_equal).
class TrigCoeff {
  public:
    using Key = std::pair<int, int>;  // (a, b) -> coeff * c^a * s^b
    static constexpr double kPrune = 1e-15;

    TrigCoeff() = default;

    static TrigCoeff zero() { return {}; }

    static TrigCoeff constant(Complex v) {
        TrigCoeff t;
        t.add_term(0, 0, v);
        return t;
    }

    static TrigCoeff monomial(int a, int b, Complex v = {1.0, 0.0}) {
        TrigCoeff t;
        t.add_term(a, b, v);
        return t;
    }

    const std::map<Key, Complex>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add_term(int a, int b, Complex v) {
        auto it = terms_.find({a, b});
        if (it == terms_.end()) {
            if (std::abs(v) >= kPrune) terms_.emplace(Key{a, b}, v);
        } else {
            it->second += v;
            if (std::abs(it->second) < kPrune) terms_.erase(it);
        }
    }

    TrigCoeff& operator+=(const TrigCoeff& o) {
        for (const auto& [k, v] : o.terms_) add_term(k.first, k.second, v);
        return *this;
    }
    TrigCoeff& operator-=(const TrigCoeff& o) {
        for (const auto& [k, v] : o.terms_) add_term(k.first, k.second, -v);
        return *this;
    }
    friend TrigCoeff operator+(TrigCoeff a, const TrigCoeff& b) { return a += b; }
    friend TrigCoeff operator-(TrigCoeff a, const TrigCoeff& b) { return a -= b; }

    TrigCoeff operator-() const {
        TrigCoeff t;
        for (const auto& [k, v] : terms_) t.terms_.emplace(k, -v);
        return t;
    }

    friend TrigCoeff operator*(const TrigCoeff& x, const TrigCoeff& y) {
        TrigCoeff t;
        for (const auto& [ka, va] : x.terms_)
            for (const auto& [kb, vb] : y.terms_)
                t.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
        return t;
    }

    friend TrigCoeff operator*(Complex c, const TrigCoeff& x) {
        TrigCoeff t;
        for (const auto& [k, v] : x.terms_) t.add_term(k.first, k.second, c * v);
        return t;
    }
    friend TrigCoeff operator*(const TrigCoeff& x, Complex c) { return c * x; }

    /// Multiply by c^da * s^db (e.g. tan = c^-1 s, sec^2 = c^-2).
    TrigCoeff shifted(int da, int db) const {
        TrigCoeff t;
        for (const auto& [k, v] : terms_) t.add_term(k.first + da, k.second + db, v);
        return t;
    }

    /// Complex-conjugate coefficients; c, s are real so this is the involution.
    TrigCoeff conj() const {
        TrigCoeff t;
        for (const auto& [k, v] : terms_) t.terms_.emplace(k, std::conj(v));
        return t;
    }

    /// d/dpsi with the signed-exponent rule d(c^a s^b) = (b cot - a tan) c^a s^b,
    /// i.e. b c^{a+1} s^{b-1} - a c^{a-1} s^{b+1}; uniform over all of Z^2.
    TrigCoeff dpsi() const {
        TrigCoeff t;
        for (const auto& [k, v] : terms_) {
            if (k.second != 0) t.add_term(k.first + 1, k.second - 1, static_cast<double>(k.second) * v);
            if (k.first != 0) t.add_term(k.first - 1, k.second + 1, -static_cast<double>(k.first) * v);
        }
        return t;
    }

    Complex evaluate(double psi) const {
        const double c = std::cos(psi), s = std::sin(psi);
        Complex acc{0.0, 0.0};
        for (const auto& [k, v] : terms_)
            acc += v * std::pow(c, k.first) * std::pow(s, k.second);
        return acc;
    }

    /// Largest coefficient magnitude; cheap zero-test before sampling.
    double max_abs() const {
        double m = 0.0;
        for (const auto& [k, v] : terms_) m = std::max(m, std::abs(v));
        return m;
    }

    bool has_negative_powers() const {
        for (const auto& [k, v] : terms_)
            if (k.first < 0 || k.second < 0) return true;
        return false;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, v] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i)";
            if (k.first != 0) os << "*c^" << k.first;
            if (k.second != 0) os << "*s^" << k.second;
        }
        return os.str();
    }

  private:
    std::map<Key, Complex> terms_;
};

/// Sup over the sample grid of |x - y| relative to the pointwise magnitude
/// (floored at 1).  Localized inverses reach huge values near the interval
/// ends, so agreement is judged against the local scale.
inline double sampled_distance(const TrigCoeff& x, const TrigCoeff& y,
                               const DeformationContext& ctx) {
    double d = 0.0;
    for (double psi : ctx.sample_points()) {
        const Complex a = x.evaluate(psi), b = y.evaluate(psi);
        const double scale = std::max({1.0, std::abs(a), std::abs(b)});
        d = std::max(d, std::abs(a - b) / scale);
    }
    return d;
}

/// Sampled pointwise agreement on the context grid within tol.
inline bool function_equal(const TrigCoeff& x, const TrigCoeff& y,
                           const DeformationContext& ctx) {
    return sampled_distance(x, y, ctx) <= ctx.tol;
}

}  // namespace s3theta
