#include <doctest.h>

#include "test_support.hpp"

using namespace s3theta;
using namespace s3theta::testing;

namespace {
const double kGolden = (std::sqrt(5.0) - 1.0) / 2.0;
}

TEST_CASE("classical benchmark values and large-level scaling") {
    CHECK(std::abs(classical_partition(1) - std::sqrt(2.0) / 2.0) < 1e-12);
    CHECK(std::abs(classical_partition(0) - 1.0) < 1e-12);
    const double k = 100;
    const double asym = kPi * std::sqrt(2.0) * std::pow(k + 2.0, -1.5);
    CHECK(std::abs(classical_partition(100) / asym - 1.0) < 0.01);
    CHECK_THROWS_AS((void)classical_partition(-1), std::invalid_argument);
}

TEST_CASE("per-factor identity chain") {
    const IdentityChainReport rep = identity_chain(kGolden, 50);
    CHECK(rep.rows.size() == 50);
    CHECK(rep.max_mismatch < 1e-12);

    // explicit instance at theta = 1/2, n = 1: i / (2 sin(pi/2)) = i/2
    const IdentityChainReport half = identity_chain(0.5, 1);
    CHECK(std::abs(half.rows[0].factor_sine - Complex{0.0, 0.5}) < 1e-14);
    CHECK(std::abs(half.rows[0].factor_lambda - Complex{0.0, 0.5}) < 1e-14);

    CHECK_THROWS_AS((void)identity_chain(0.5, 2), validation_error);  // 2 theta = 1
}

TEST_CASE("closed truncated partition function") {
    // k = 1, theta = 1/2, N = 1: half-power assembly e^{i pi/4} 2 pi (i/2)
    const ClosedPartition z = partition_closed_truncated(1, 0.5, 1);
    const Complex expect = std::polar(1.0, kPi / 4.0) * 2.0 * kPi * Complex{0.0, 0.5};
    CHECK(std::abs(z.half_power_value - expect) < 1e-12);

    // symmetric-assembly prefactor at k = 4 is e^{i 3 pi/4} pi
    const ClosedPartition z4 = partition_closed_truncated(4, kGolden, 5);
    CHECK(std::abs(z4.prefactor_symmetric - std::polar(1.0, 3.0 * kPi / 4.0) * kPi) < 1e-12);

    // at theta = 1/2, N = 1 the two assemblies coincide
    CHECK(std::abs(z.symmetric_value - z.half_power_value) < 1e-12);
    CHECK(std::abs(std::abs(z.phase_discrepancy) - 1.0) < 1e-12);
}

TEST_CASE("mode weights: factored phases, gauge collapse, degeneracy") {
    const DeformationContext ctx(kGolden);
    const int k = 3;
    const double xi = 1.0 / (kPi * k);
    const ModeWeights w = effective_quadratic(ctx, k, xi, 4);

    // q = 0 modes are exactly degenerate: lambda^0 - lambda^0
    const auto& flat = w.gauge_modes.at({1, 0});
    CHECK(flat.total() == Complex{0.0, 0.0});
    CHECK(flat.degenerate());

    // mode (0, 1): exact difference form, no tolerance
    const auto& gw = w.gauge_modes.at({0, 1});
    const Complex lambda_sum = gw.cs_lambda + gw.gauge_lambda;
    const Complex expect = ctx.lambda_power(-2) - ctx.lambda_power(-1);
    CHECK(lambda_sum.real() == expect.real());
    CHECK(lambda_sum.imag() == expect.imag());
    CHECK(gw.cs_scale == doctest::Approx(gw.gauge_scale).epsilon(1e-14));

    // away from the collapsing gauge both parts keep distinct prefactors
    const ModeWeights w2 = effective_quadratic(ctx, k, 2.0 * xi, 4);
    const auto& gw2 = w2.gauge_modes.at({0, 1});
    CHECK(gw2.cs_scale != gw2.gauge_scale);

    CHECK_THROWS_AS((void)effective_quadratic(ctx, 0, xi, 3), std::invalid_argument);
}

TEST_CASE("ghost sector weights and interaction couplings") {
    auto ctx = make_context(kGolden);
    const Complex a10{0.35, -0.2}, b10{0.8, 0.45};
    const AlgElement a = reversed_monomial(ctx, 1, 0, a10) + reversed_monomial(ctx, -1, 0, std::conj(a10));
    const AlgElement b = AlgElement::monomial(ctx, 1, 0, b10);
    const ModeWeights w = ghost_bilinear(a, b, 3);

    CHECK(w.ghost_modes.count({1, -1}) == 0);  // m + n = 0 excluded
    CHECK(w.ghost_modes.at({1, 0}) == doctest::Approx(-2.0));
    CHECK(w.ghost_modes.at({2, 1}) == doctest::Approx(-18.0));

    const Complex coupling = w.ghost_interaction.at({1, 0, 1, 0});
    CHECK(std::abs(coupling - 2.0 * std::conj(a10) * b10) < 1e-13);
}

TEST_CASE("gauge divergence: displayed expansion and quadratic term") {
    auto ctx = make_context(kGolden);
    std::mt19937_64 rng(167);
    const Dirac D(DiracId::D1, ctx);

    // zero connection
    const Connection zero = make_connection({{AlgElement::one(ctx), AlgElement::one(ctx)}}, D);
    CHECK(gauge_divergence(D, zero).is_zero());

    // a = 1, b = b10 alpha: divergence = 2 b10 u alpha u^* + b10 alpha
    const Complex b10{0.6, -0.3};
    const AlgElement one = AlgElement::one(ctx);
    const AlgElement b = AlgElement::monomial(ctx, 1, 0, b10);
    const Connection simple = make_connection({{one, b}}, D);
    const AlgElement div = gauge_divergence(D, simple);
    const AlgElement expected = 3.0 * b10 * AlgElement::monomial(ctx, 1, 0);  // u alpha u^* = alpha
    CHECK(sampled_distance(div, expected) < 1e-12);

    // the direct symbol route equals the displayed mode expansion
    for (int rep = 0; rep < 10; ++rep) {
        const CanonicalPair cp = random_canonical_pair(ctx, rng);
        const Connection conn = make_connection({{cp.a, cp.b}}, D);
        CHECK(sampled_distance(gauge_divergence(D, conn),
                               gauge_divergence_modewise(ctx, cp.a, cp.b)) < 1e-11);
    }

    // (1/2 xi) integral (d.A)^2 |D|^-3 = 4/xi sum (p+q)^2 lambda^{-2q} (conj(a) b)^2
    const double xi = 0.37;
    for (int rep = 0; rep < 10; ++rep) {
        const CanonicalPair cp = random_canonical_pair(ctx, rng);
        const Connection conn = make_connection({{cp.a, cp.b}}, D);
        const TrigCoeff lhs = gauge_term_quadratic(D, conn, xi);
        const Complex diag = std::conj(cp.a_coeff) * cp.b_coeff;
        const Complex expect = 4.0 / xi * static_cast<double>((cp.p + cp.q) * (cp.p + cp.q)) *
                               ctx->lambda_power(-2LL * cp.q) * diag * diag;
        CHECK(std::abs(lhs.evaluate(0.8) - expect) < 1e-10);
    }
}

TEST_CASE("modewise partition function against the closed truncation") {
    const int k = 2;

    // ratio to the closed symmetric assembly is a mode-independent constant in N
    std::vector<Complex> ratios;
    for (int N : {10, 20, 40}) {
        const PartitionResult mw = partition_modewise(k, kGolden, N);
        const ClosedPartition cl = partition_closed_truncated(k, kGolden, N);
        ratios.push_back(mw.value / cl.symmetric_value);
    }
    CHECK(std::abs(ratios[0] - ratios[1]) < 1e-9);
    CHECK(std::abs(ratios[1] - ratios[2]) < 1e-9);
    CHECK(std::abs(ratios[0] - Complex{1.0, 0.0}) < 1e-9);

    // substitution ledger: ghost product -> 2 pi, one prefactor copy
    const PartitionResult mw = partition_modewise(k, kGolden, 10);
    CHECK(std::abs(mw.ghost_factor - 2.0 * kPi) < 1e-15);
    CHECK(std::abs(mw.prefactor - std::polar(1.0, 3.0 * kPi / 4.0) / std::sqrt(2.0)) < 1e-14);
    CHECK(mw.regularized_constants.size() == 4);
    CHECK(mw.excluded_degenerate_modes == 20);  // the q = 0 line, p in [-10,10], p != 0
    CHECK(std::abs(std::exp(-riemann_zeta_deriv0()) - std::sqrt(2.0 * kPi)) < 1e-12);

    // theta = 1/2, k = 1, N = 1: gauge pair collapses to modulus 1/2
    const PartitionResult half = partition_modewise(1, 0.5, 1);
    CHECK(std::abs(std::abs(half.gauge_factor) - 0.5) < 1e-13);
    CHECK(std::abs(half.value - partition_closed_truncated(1, 0.5, 1).symmetric_value) < 1e-12);
}

TEST_CASE("prefactor law |Z(k2)/Z(k1)| = sqrt(k1/k2)") {
    for (int N : {5, 15}) {
        const PartitionResult z1 = partition_modewise(1, kGolden, N);
        const PartitionResult z4 = partition_modewise(4, kGolden, N);
        const PartitionResult z9 = partition_modewise(9, kGolden, N);
        CHECK(std::abs(std::abs(z4.value) / std::abs(z1.value) - 0.5) < 1e-12);
        CHECK(std::abs(std::abs(z9.value) / std::abs(z1.value) - 1.0 / 3.0) < 1e-12);
    }
}
