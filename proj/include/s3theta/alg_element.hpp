#pragma once

#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "s3theta/context.hpp"
#include "s3theta/quadrature.hpp"
#include "s3theta/trig_coeff.hpp"

namespace s3theta {

/// Element of the localized coordinate algebra of the deformed 3-sphere:
/// a finitely supported sum  sum_{(p,q)} f_pq(cos psi, sin psi) u^p v^q
/// with u, v the torus generators, u v = lambda v u.
///
/// Monomial convention: the mode monomial of bidegree (p, q) is realized as
/// c^p s^q u^p v^q with signed trig exponents.  Negative powers of the sphere
/// generators denote localized inverses (alpha^{-1} = sec psi u^{-1}), so the
/// derivative rule of TrigCoeff::dpsi holds uniformly over Z^2.  Adjoints stay
/// expressible: alpha^* = c^2 alpha^{-1}.
class AlgElement {
  public:
    using Mode = std::pair<int, int>;

    AlgElement() = default;
    explicit AlgElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    const ContextPtr& context() const { return ctx_; }
    const std::map<Mode, TrigCoeff>& modes() const { return modes_; }
    bool is_zero() const {
        for (const auto& [m, f] : modes_)
            if (!f.empty()) return false;
        return true;
    }

    void set_mode(int p, int q, TrigCoeff f) {
        if (f.empty())
            modes_.erase({p, q});
        else
            modes_[{p, q}] = std::move(f);
    }

    void add_mode(int p, int q, const TrigCoeff& f) {
        auto it = modes_.find({p, q});
        if (it == modes_.end()) {
            if (!f.empty()) modes_.emplace(Mode{p, q}, f);
        } else {
            it->second += f;
            if (it->second.empty()) modes_.erase(it);
        }
    }

    TrigCoeff mode(int p, int q) const {
        auto it = modes_.find({p, q});
        return it == modes_.end() ? TrigCoeff{} : it->second;
    }

    // --- constructors for the standard elements -------------------------------

    static AlgElement zero(ContextPtr ctx) { return AlgElement(std::move(ctx)); }

    static AlgElement one(ContextPtr ctx) {
        AlgElement x(std::move(ctx));
        x.set_mode(0, 0, TrigCoeff::constant({1.0, 0.0}));
        return x;
    }

    static AlgElement scalar(ContextPtr ctx, Complex v) {
        AlgElement x(std::move(ctx));
        x.set_mode(0, 0, TrigCoeff::constant(v));
        return x;
    }

    /// Torus generator u (no trig content).
    static AlgElement u(ContextPtr ctx, int power = 1) {
        AlgElement x(std::move(ctx));
        x.set_mode(power, 0, TrigCoeff::constant({1.0, 0.0}));
        return x;
    }

    /// Torus generator v.
    static AlgElement v(ContextPtr ctx, int power = 1) {
        AlgElement x(std::move(ctx));
        x.set_mode(0, power, TrigCoeff::constant({1.0, 0.0}));
        return x;
    }

    /// Canonical localized monomial of bidegree (p, q): c^p s^q u^p v^q.
    static AlgElement monomial(ContextPtr ctx, int p, int q, Complex coeff = {1.0, 0.0}) {
        AlgElement x(std::move(ctx));
        x.set_mode(p, q, TrigCoeff::monomial(p, q, coeff));
        return x;
    }

    /// alpha = u cos psi.
    static AlgElement alpha(ContextPtr ctx) { return monomial(std::move(ctx), 1, 0); }
    /// beta = v sin psi.
    static AlgElement beta(ContextPtr ctx) { return monomial(std::move(ctx), 0, 1); }

    // --- ring structure --------------------------------------------------------

    AlgElement& operator+=(const AlgElement& o) {
        require_same_context(o);
        if (!ctx_) ctx_ = o.ctx_;
        for (const auto& [m, f] : o.modes_) add_mode(m.first, m.second, f);
        return *this;
    }
    AlgElement& operator-=(const AlgElement& o) {
        require_same_context(o);
        if (!ctx_) ctx_ = o.ctx_;
        for (const auto& [m, f] : o.modes_) add_mode(m.first, m.second, -f);
        return *this;
    }
    friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
    friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }

    AlgElement operator-() const {
        AlgElement x(ctx_);
        for (const auto& [m, f] : modes_) x.modes_.emplace(m, -f);
        return x;
    }

    friend AlgElement operator*(Complex c, const AlgElement& x) {
        AlgElement y(x.ctx_);
        for (const auto& [m, f] : x.modes_) {
            TrigCoeff g = c * f;
            if (!g.empty()) y.modes_.emplace(m, std::move(g));
        }
        return y;
    }
    friend AlgElement operator*(const AlgElement& x, Complex c) { return c * x; }

    friend AlgElement operator*(const AlgElement& x, const TrigCoeff& f) {
        AlgElement y(x.ctx_);
        for (const auto& [m, g] : x.modes_) {
            TrigCoeff h = g * f;
            if (!h.empty()) y.modes_.emplace(m, std::move(h));
        }
        return y;
    }
    friend AlgElement operator*(const TrigCoeff& f, const AlgElement& x) { return x * f; }

    void require_same_context(const AlgElement& o) const {
        if (ctx_ && o.ctx_ && ctx_ != o.ctx_) throw context_mismatch{};
    }

    std::string str() const {
        if (modes_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, f] : modes_) {
            if (!first) os << "  +  ";
            first = false;
            os << "[" << f.str() << "]";
            if (m.first != 0) os << " u^" << m.first;
            if (m.second != 0) os << " v^" << m.second;
        }
        return os.str();
    }

  private:
    std::map<Mode, TrigCoeff> modes_;
    ContextPtr ctx_;
};

/// Product with the torus exchange phase: u^p v^q . u^{p'} v^{q'} =
/// lambda^{-q p'} u^{p+p'} v^{q+q'}; trig coefficients multiply commutatively.
inline AlgElement mul(const AlgElement& x, const AlgElement& y) {
    x.require_same_context(y);
    ContextPtr ctx = x.context() ? x.context() : y.context();
    AlgElement out(ctx);
    for (const auto& [mx, fx] : x.modes())
        for (const auto& [my, fy] : y.modes()) {
            const long long k = -static_cast<long long>(mx.second) * my.first;
            const Complex phase = ctx->lambda_power(k);
            out.add_mode(mx.first + my.first, mx.second + my.second, phase * (fx * fy));
        }
    return out;
}

/// Involution: (f u^p v^q)^* = conj(f) lambda^{-pq} u^{-p} v^{-q}.
inline AlgElement star(const AlgElement& x) {
    AlgElement out(x.context());
    for (const auto& [m, f] : x.modes()) {
        const long long k = -static_cast<long long>(m.first) * m.second;
        out.add_mode(-m.first, -m.second, x.context()->lambda_power(k) * f.conj());
    }
    return out;
}

/// Canonical torus derivations: delta1 scales mode (p,q) by p, delta2 by q.
inline AlgElement delta1(const AlgElement& x) {
    AlgElement out(x.context());
    for (const auto& [m, f] : x.modes())
        if (m.first != 0) out.add_mode(m.first, m.second, static_cast<double>(m.first) * f);
    return out;
}

inline AlgElement delta2(const AlgElement& x) {
    AlgElement out(x.context());
    for (const auto& [m, f] : x.modes())
        if (m.second != 0) out.add_mode(m.first, m.second, static_cast<double>(m.second) * f);
    return out;
}

/// Angular derivative, acting per mode on the trig coefficient.
inline AlgElement dpsi(const AlgElement& x) {
    AlgElement out(x.context());
    for (const auto& [m, f] : x.modes()) out.add_mode(m.first, m.second, f.dpsi());
    return out;
}

/// Fourier coefficient at (0,0); the only mode surviving the basis trace.
inline TrigCoeff zero_mode(const AlgElement& x) { return x.mode(0, 0); }

/// Normalized invariant state: h(x) = 2 int_0^{pi/2} f_00 cos sin dpsi.
/// The integrand of every honest element is a trig polynomial, so the fixed
/// 64-node Gauss-Legendre rule is exact to machine precision.
inline Complex haar_state(const AlgElement& x) {
    const TrigCoeff f = zero_mode(x);
    if (f.empty()) return {0.0, 0.0};
    return gauss_legendre_64(0.0, kPi / 2.0, [&](double psi) {
        return 2.0 * f.evaluate(psi) * std::cos(psi) * std::sin(psi);
    });
}

/// Pointwise value in the commutative limit: u -> e^{i phi1}, v -> e^{i phi2}.
inline Complex evaluate_classical(const AlgElement& x, double psi, double phi1, double phi2) {
    if (x.context() && x.context()->theta != 0.0)
        throw validation_error("classical evaluation requires theta = 0");
    Complex acc{0.0, 0.0};
    for (const auto& [m, f] : x.modes())
        acc += f.evaluate(psi) * std::polar(1.0, m.first * phi1 + m.second * phi2);
    return acc;
}

/// Mode-wise sampled equality within the shared context tolerance.
inline bool function_equal(const AlgElement& x, const AlgElement& y) {
    x.require_same_context(y);
    const DeformationContext& ctx = *(x.context() ? x.context() : y.context());
    auto keys = x.modes();
    for (const auto& [m, f] : y.modes()) keys.try_emplace(m);
    for (const auto& [m, unused] : keys)
        if (!function_equal(x.mode(m.first, m.second), y.mode(m.first, m.second), ctx))
            return false;
    return true;
}

/// Sup over modes of the sampled coefficient distance.
inline double sampled_distance(const AlgElement& x, const AlgElement& y) {
    x.require_same_context(y);
    const DeformationContext& ctx = *(x.context() ? x.context() : y.context());
    auto keys = x.modes();
    for (const auto& [m, f] : y.modes()) keys.try_emplace(m);
    double d = 0.0;
    for (const auto& [m, unused] : keys)
        d = std::max(d, sampled_distance(x.mode(m.first, m.second), y.mode(m.first, m.second), ctx));
    return d;
}

inline bool is_function_zero(const AlgElement& x) {
    const DeformationContext& ctx = *x.context();
    for (const auto& [m, f] : x.modes())
        if (!function_equal(f, TrigCoeff::zero(), ctx)) return false;
    return true;
}

}  // namespace s3theta
