#include <doctest.h>

#include "test_support.hpp"

using namespace s3theta;
using namespace s3theta::testing;

namespace {
const double kGolden = (std::sqrt(5.0) - 1.0) / 2.0;
}

TEST_CASE("Peter-Weyl elements at small index") {
    auto ctx = make_context(kGolden);

    CHECK(sampled_distance(peter_weyl(ctx, {0, 0, 0}), AlgElement::one(ctx)) < 1e-14);

    AlgElement z1bar(ctx);  // u^{-1} cos psi
    z1bar.set_mode(-1, 0, TrigCoeff::monomial(1, 0));
    CHECK(sampled_distance(peter_weyl(ctx, {1, 0, 0}), z1bar) < 1e-14);

    CHECK(sampled_distance(peter_weyl(ctx, {1, 1, 0}), AlgElement::beta(ctx)) < 1e-14);

    CHECK_THROWS_AS((void)peter_weyl(ctx, {2, 3, 0}), std::out_of_range);
}

TEST_CASE("ladder and eigen relations for every index with m <= 8") {
    auto ctx = make_context(kGolden);
    for (int m = 0; m <= 8; ++m)
        for (int l = 0; l <= m; ++l)
            for (int j = 0; j <= m; ++j) {
                const LadderReport rep = ladder_check(ctx, {m, l, j});
                CHECK(std::abs(rep.z_coefficient - Complex{0.0, static_cast<double>(2 * l - m)}) <
                      1e-10);
                CHECK(std::abs(rep.laplacian_eigenvalue -
                               Complex{static_cast<double>(m) * (m + 2), 0.0}) < 1e-10);
                const Complex raise_expect =
                    Complex{0.0, 2.0} * std::sqrt(static_cast<double>(l + 1)) *
                    std::sqrt(static_cast<double>(m - l));
                const Complex lower_expect =
                    Complex{0.0, 2.0} * std::sqrt(static_cast<double>(l)) *
                    std::sqrt(static_cast<double>(m - l + 1));
                CHECK(std::abs(rep.raise_coefficient - raise_expect) < 1e-10);
                CHECK(std::abs(rep.lower_coefficient - lower_expect) < 1e-10);
            }

    // quoted instances
    const LadderReport r100 = ladder_check(ctx, {1, 0, 0});
    CHECK(std::abs(r100.z_coefficient - Complex{0.0, -1.0}) < 1e-12);
    const LadderReport r211 = ladder_check(ctx, {2, 1, 1});
    CHECK(std::abs(r211.laplacian_eigenvalue - 8.0) < 1e-12);
    const LadderReport rtop = ladder_check(ctx, {3, 3, 1});
    CHECK(std::abs(rtop.raise_coefficient) < 1e-12);
}

TEST_CASE("second operator Laplacian shares the eigenvalues") {
    auto ctx = make_context(kGolden);
    const Dirac D2(DiracId::D2, ctx);
    for (int m = 0; m <= 5; ++m)
        for (int l = 0; l <= m; ++l) {
            const AlgElement phi = peter_weyl(ctx, {m, l, (l + m) % (m + 1)});
            CHECK(sampled_distance(D2.laplacian(phi),
                                   static_cast<double>(m) * (m + 2) * phi) < 1e-9);
        }
}

TEST_CASE("eigenspinors: base cases and Dirac eigenvalues up to m = 5") {
    auto ctx = make_context(kGolden);
    const Dirac D(DiracId::D1, ctx);

    // (+, 0, 0, 0) = (0; 1)
    const SpinorPair base = eigenspinor(ctx, +1, 0, 0, 0);
    CHECK(base.upper.is_zero());
    CHECK(sampled_distance(base.lower, AlgElement::one(ctx)) < 1e-14);

    // (-, 0, 0, 0) has eigenvalue -3
    const SpinorPair neg = eigenspinor(ctx, -1, 0, 0, 0);
    CHECK(sampled_distance(D.apply(neg), neg * Complex{-3.0, 0.0}) < 1e-10);

    for (int m = 0; m <= 5; ++m) {
        for (int k = 0; k <= m + 1; ++k)
            for (int l = 0; l <= m; ++l) {
                const SpinorPair s = eigenspinor(ctx, +1, m, k, l);
                CHECK(sampled_distance(D.apply(s), s * Complex{static_cast<double>(m), 0.0}) <
                      1e-10);
            }
        for (int k = 0; k <= m; ++k)
            for (int l = 0; l <= m + 1; ++l) {
                const SpinorPair s = eigenspinor(ctx, -1, m, k, l);
                CHECK(sampled_distance(D.apply(s), s * Complex{-(m + 3.0), 0.0}) < 1e-10);
            }
    }

    CHECK_THROWS_AS((void)eigenspinor(ctx, +1, 2, 4, 0), std::out_of_range);
}

TEST_CASE("squared symbol gives m(m+2) on scalars for m <= 6") {
    auto ctx = make_context(kGolden);
    const Dirac D(DiracId::D1, ctx);
    for (int m = 0; m <= 6; ++m)
        for (int l = 0; l <= m; ++l)
            for (int j = 0; j <= m; ++j) {
                const AlgElement phi = peter_weyl(ctx, {m, l, j});
                CHECK(sampled_distance(D.laplacian(phi),
                                       static_cast<double>(m) * (m + 2) * phi) < 1e-9);
            }
}

TEST_CASE("spectrum rows") {
    auto ctx = make_context(kGolden);
    const Dirac D1(DiracId::D1, ctx);
    const auto rows = D1.spectrum(3);
    REQUIRE(rows.size() == 8);
    CHECK(rows[0].eigenvalue == doctest::Approx(1.5));
    CHECK(rows[0].multiplicity == 2);
    CHECK(rows[1].eigenvalue == doctest::Approx(-1.5));
    CHECK(rows[6].multiplicity == 20);  // m = 3: 4 * 5

    const Dirac D3(DiracId::D3, ctx);
    const auto lap = D3.spectrum(1);
    REQUIRE(lap.size() == 2);
    CHECK(lap[0].eigenvalue == doctest::Approx(0.0));
    CHECK(lap[0].multiplicity == 1);
    CHECK(lap[1].eigenvalue == doctest::Approx(3.0));
    CHECK(lap[1].multiplicity == 4);
}

TEST_CASE("dimension spectrum probe") {
    auto ctx = make_context(kGolden);
    const auto p1 = dimension_spectrum_probe(Dirac(DiracId::D1, ctx), 0.2, 4.8);
    REQUIRE(p1.size() == 2);
    CHECK(std::abs(p1[0].position - 1.0) < 1e-6);
    CHECK(std::abs(p1[1].position - 3.0) < 1e-6);
    CHECK(p1[0].order == 1);
    CHECK(p1[1].order == 1);

    for (DiracId id : {DiracId::D2, DiracId::D3}) {
        const auto p = dimension_spectrum_probe(Dirac(id, ctx), 0.2, 4.8);
        REQUIRE(p.size() == 1);
        CHECK(std::abs(p[0].position - 3.0) < 1e-6);
        CHECK(p[0].order == 1);
    }
}

TEST_CASE("noncommutative integral at the supported powers") {
    auto ctx = make_context(kGolden);
    const Dirac D(DiracId::D1, ctx);
    const SpinMatrix I = SpinMatrix::identity(ctx);

    CHECK(std::abs(nc_integral(D, I, 3).evaluate(0.8) - 2.0) < 1e-13);
    CHECK(nc_integral(D, AlgElement::alpha(ctx) * TrigCoeff::constant({1.0, 0.0}), 3).empty());
    CHECK(nc_integral(D, I, 5).empty());
    CHECK(std::abs(nc_integral(D, I, 1).evaluate(0.8) - (-0.5)) < 1e-13);

    const Dirac D2(DiracId::D2, ctx);
    CHECK_THROWS_AS((void)nc_integral(D2, I, 1), std::invalid_argument);
}

TEST_CASE("tau functionals: simple poles kill higher orders") {
    auto ctx = make_context(kGolden);
    const Dirac D(DiracId::D1, ctx);
    const SpinMatrix I = SpinMatrix::identity(ctx);

    CHECK(std::abs(tau_k(D, I, 3, 1)) < 1e-10);
    CHECK(std::abs(tau_k(D, I, 3, 2)) < 1e-10);
    CHECK(std::abs(tau_k(D, I, 1, 1)) < 1e-10);
    CHECK(std::abs(tau_k(D, I, 5, 2)) < 1e-10);

    // tau_0 against the stored weight table on random constant-zero-mode words
    std::mt19937_64 rng(107);
    for (int rep = 0; rep < 5; ++rep) {
        SpinMatrix X(ctx);
        const Complex c00 = random_unit(rng), c11 = random_unit(rng);
        X.at(0, 0) = AlgElement::scalar(ctx, c00) + random_element(ctx, rng, 2);
        X.at(1, 1) = AlgElement::scalar(ctx, c11) + random_element(ctx, rng, 2);
        X.at(0, 1) = random_element(ctx, rng, 2);
        for (int n : {1, 3, 5}) {
            const Complex via_tau = tau_k(D, X, n, 0);
            const Complex via_weights = nc_integral(D, X, n).evaluate(kPi / 4.0);
            CHECK(std::abs(via_tau - via_weights) < 1e-10);
        }
    }
}

TEST_CASE("tau_0 is tracial: products commute under the zero mode") {
    auto ctx = make_context(kGolden);
    const Dirac D(DiracId::D1, ctx);
    std::mt19937_64 rng(211);
    for (int rep = 0; rep < 20; ++rep) {
        const AlgElement x = random_element(ctx, rng, 4, 3, true);
        const AlgElement y = random_element(ctx, rng, 4, 3, true);
        // the exchange phases cancel pairwise on the (0,0) mode
        CHECK(sampled_distance(zero_mode(mul(x, y)), zero_mode(mul(y, x)), *ctx) < 1e-12);
        const Complex txy = tau_k(D, mul(x, y), 3, 0);
        const Complex tyx = tau_k(D, mul(y, x), 3, 0);
        CHECK(std::abs(txy - tyx) < 1e-10 * std::max(1.0, std::abs(txy)));
    }
}

TEST_CASE("residue weights recovered from truncated spectral sums") {
    auto ctx = make_context(kGolden);
    const Dirac D1(DiracId::D1, ctx);
    CHECK(std::abs(residue_weight_from_truncated_sums(D1, 1) - (-0.5)) < 1e-4);
    CHECK(std::abs(residue_weight_from_truncated_sums(D1, 3) - 2.0) < 1e-4);
    CHECK(std::abs(residue_weight_from_truncated_sums(D1, 5) - 0.0) < 1e-4);
    for (DiracId id : {DiracId::D2, DiracId::D3})
        CHECK(std::abs(residue_weight_from_truncated_sums(Dirac(id, ctx), 3) - 2.0) < 1e-4);
}

TEST_CASE("orthogonality of the Peter-Weyl family under the invariant state") {
    auto ctx = make_context(kGolden);
    struct Entry {
        PWIndex idx;
        AlgElement el;
    };
    std::vector<Entry> basis;
    for (int m = 0; m <= 4; ++m)
        for (int i = 0; i <= m; ++i)
            for (int j = 0; j <= m; ++j) basis.push_back({{m, i, j}, peter_weyl(ctx, {m, i, j})});

    for (const auto& x : basis)
        for (const auto& y : basis) {
            const Complex h = haar_state(mul(x.el, star(y.el)));
            const bool diag = x.idx.m == y.idx.m && x.idx.l == y.idx.l && x.idx.j == y.idx.j;
            const double expect = diag ? 1.0 / (x.idx.m + 1) : 0.0;
            CHECK(std::abs(h - expect) < 1e-8);
        }
}

TEST_CASE("first cochain vanishes") {
    auto ctx = make_context(kGolden);
    const Dirac D(DiracId::D1, ctx);

    CHECK(std::abs(phi1(D, star(AlgElement::alpha(ctx)), AlgElement::alpha(ctx))) < 1e-12);
    std::mt19937_64 rng(109);
    CHECK(std::abs(phi1(D, AlgElement::one(ctx), random_element(ctx, rng, 3))) < 1e-12);
    for (int rep = 0; rep < 50; ++rep) {
        const AlgElement a0 = random_element(ctx, rng, 3, 3, true);
        const AlgElement a1 = random_element(ctx, rng, 3, 3, true);
        CHECK(std::abs(phi1(D, a0, a1)) < 1e-9);
    }
}

TEST_CASE("third cochain: degenerate arguments and the truncated-trace oracle") {
    auto ctx = make_context(kGolden);
    const Dirac D(DiracId::D1, ctx);
    const AlgElement one = AlgElement::one(ctx);
    const AlgElement a = AlgElement::alpha(ctx);
    const AlgElement b = AlgElement::beta(ctx);
    const AlgElement as = star(a), bs = star(b);

    std::mt19937_64 rng(113);
    CHECK(phi3(D, random_element(ctx, rng, 2), one, one, one).empty());

    // the alternating alpha word traces away: the matrix trace collapses to
    // 4 (alpha beta beta^* - beta^* beta alpha) = 0 since beta beta^* is central
    CHECK(phi3(D, as, a, as, a).max_abs() < 1e-14);

    // a mixed word with a genuinely nonzero value:
    // phi_3(beta^*, alpha, alpha^*, beta) = -(lambda c^2 + s^2) s^2 / 3
    const TrigCoeff val = phi3(D, bs, a, as, b);
    CHECK_FALSE(val.empty());
    TrigCoeff expect;
    expect.add_term(2, 2, -ctx->lambda / 3.0);
    expect.add_term(0, 4, {-1.0 / 3.0, 0.0});
    CHECK(sampled_distance(val, expect, *ctx) < 1e-12);

    // oracle: same spin-trace zero mode, residue factor re-extracted from
    // truncated spectral sums instead of the stored table
    const SpinMatrix word = bs * (D.commutator(a) * (D.commutator(as) * D.commutator(b)));
    const Complex zm = zero_mode(word.spin_trace()).evaluate(kPi / 4.0);
    const double extracted = residue_weight_from_truncated_sums(D, 3) / 2.0;
    const Complex oracle = zm * extracted / 12.0;
    CHECK(std::abs(val.evaluate(kPi / 4.0) - oracle) < 1e-4 * std::max(1.0, std::abs(oracle)));
}
