#pragma once

#include <cmath>
#include <complex>
#include <memory>
#include <stdexcept>
#include <vector>

namespace s3theta {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Deformation data shared by every element of one algebra instance.
///
/// theta is the deformation angle, lambda = e^{2 pi i theta} the unit phase
/// entering the exchange relation u v = lambda v u.  tol and sample_count
/// control sampled function-equality of trigonometric coefficients.
struct DeformationContext {
    double theta = 0.0;
    Complex lambda{1.0, 0.0};
    double tol = 1e-9;
    int sample_count = 17;
    std::uint64_t rng_seed = 0;

    DeformationContext(double theta_, double tol_ = 1e-9, int samples = 17,
                       std::uint64_t seed = 0)
        : theta(theta_),
          lambda(std::polar(1.0, 2.0 * kPi * theta_)),
          tol(tol_),
          sample_count(samples),
          rng_seed(seed) {
        if (!(tol > 0.0) || tol > 1e-6)
            throw std::invalid_argument("tolerance must lie in (0, 1e-6]");
        if (sample_count < 9)
            throw std::invalid_argument("sample_count must be at least 9");
        if (std::abs(std::abs(lambda) - 1.0) > tol)
            throw std::invalid_argument("|lambda| must be 1");
    }

    /// lambda^k with the integer exponent applied inside one exponential,
    /// so long words do not accumulate per-factor rounding.
    Complex lambda_power(long long k) const {
        double arg = 2.0 * kPi * std::fmod(theta * static_cast<double>(k), 1.0);
        return {std::cos(arg), std::sin(arg)};
    }

    /// Interior sampling grid on (0.05, pi/2 - 0.05); avoids the poles of
    /// localized inverses at psi = 0, pi/2.
    std::vector<double> sample_points() const {
        std::vector<double> pts;
        pts.reserve(static_cast<std::size_t>(sample_count));
        const double lo = 0.05, hi = kPi / 2.0 - 0.05;
        for (int i = 0; i < sample_count; ++i)
            pts.push_back(lo + (hi - lo) * (i + 0.5) / sample_count);
        return pts;
    }
};

using ContextPtr = std::shared_ptr<const DeformationContext>;

inline ContextPtr make_context(double theta, double tol = 1e-9, int samples = 17,
                               std::uint64_t seed = 0) {
    return std::make_shared<const DeformationContext>(theta, tol, samples, seed);
}

/// Thrown when two elements from distinct algebra instances are combined.
struct context_mismatch : std::invalid_argument {
    context_mismatch() : std::invalid_argument("elements belong to different deformation contexts") {}
};

/// Thrown when an input fails a structural validation rule.
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace s3theta
