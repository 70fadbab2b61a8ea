#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "stablefrac/tanaka.hpp"
#include "stablefrac/rng.hpp"

using namespace stablefrac;

TEST_CASE("tanaka_constants closed forms") {
    {
        // symmetric alpha = 3/2: cos(alpha pi) = 0 and
        // Gamma(3/2) Gamma(-3/2) = 2 pi / 3, so kappa = 3 / (4 pi c)
        const double c = 2.0;
        const auto k = tanaka_constants(StableParams(1.5, c, c));
        CHECK(k.kappa_minus == doctest::Approx(3.0 / (4.0 * M_PI * c)).epsilon(1e-13));
        CHECK(k.kappa_plus == doctest::Approx(k.kappa_minus).epsilon(1e-14));
    }
    {
        const StableParams p(1.3, 0.0, 2.0);
        const auto k = tanaka_constants(p);
        CHECK(k.kappa_minus == 0.0);
        const double gg = std::tgamma(1.3) * oracles::gamma_recursion(-1.3);
        CHECK(k.kappa_plus == doctest::Approx(1.0 / (gg * 2.0)).epsilon(1e-13));
    }
    {
        // kappa is homogeneous of degree -1 in (c_-, c_+)
        const auto k1 = tanaka_constants(StableParams(1.7, 0.5, 1.5));
        const auto k3 = tanaka_constants(StableParams(1.7, 1.5, 4.5));
        CHECK(3.0 * k3.kappa_minus == doctest::Approx(k1.kappa_minus).epsilon(1e-13));
        CHECK(3.0 * k3.kappa_plus == doctest::Approx(k1.kappa_plus).epsilon(1e-13));
    }
    CHECK_THROWS_AS(tanaka_constants(StableParams(0.8, 1.0, 1.0)),
                    std::domain_error);
}

TEST_CASE("tanaka_F crossed pairing and continuity") {
    const StableParams p(1.5, 1.0, 3.0);
    const auto k = tanaka_constants(p);
    CHECK(tanaka_F(p, 4.0) == doctest::Approx(k.kappa_minus * 2.0).epsilon(1e-14));
    CHECK(tanaka_F(p, -4.0) == doctest::Approx(k.kappa_plus * 2.0).epsilon(1e-14));
    CHECK(tanaka_F(p, 0.0) == 0.0);
    // alpha - 1 > 0, so F is continuous at the origin
    CHECK(std::abs(tanaka_F(p, 1e-12)) < 1e-6);
    CHECK(std::abs(tanaka_F(p, -1e-12)) < 1e-6);
    CHECK(tanaka_F(p, 1.0) > 0.0);
}

TEST_CASE("class_C_eval on atomic measures") {
    const StableParams p(1.6, 1.0, 2.0);
    SignedMeasure one;
    one.atoms = {{0.5, 2.0}};
    for (double x : {-1.0, 0.2, 3.0})
        CHECK(class_C_eval(p, one, x) ==
              doctest::Approx(2.0 * tanaka_F(p, x - 0.5)).epsilon(1e-14));

    SignedMeasure cancel;
    cancel.atoms = {{1.0, 1.0}, {1.0, -1.0}};
    CHECK(class_C_eval(p, cancel, 0.3) == doctest::Approx(0.0));

    SignedMeasure pair;
    pair.atoms = {{-1.0, 1.0}, {1.0, 1.0}};
    const StableParams sym(1.6, 1.5, 1.5);
    // symmetric process, symmetric atoms: even image
    CHECK(class_C_eval(sym, pair, 0.7) ==
          doctest::Approx(class_C_eval(sym, pair, -0.7)).epsilon(1e-13));
}

TEST_CASE("class_C_eval density part against direct convolution") {
    const StableParams p(1.5, 1.0, 3.0);
    GridFunction rho;
    rho.x0 = -2.0;
    rho.dx = 4.0 / 1024.0;
    rho.values.resize(1025);
    for (std::size_t i = 0; i < rho.values.size(); ++i) {
        const double y = rho.x0 + rho.dx * static_cast<double>(i);
        rho.values[i] = std::exp(-y * y);
    }
    SignedMeasure mu;
    mu.density = rho;

    for (double x : {-0.8, 0.0, 1.3}) {
        // fine trapezoid on the sampled support; F is Holder continuous so
        // plain refinement converges
        const std::size_t m = 200000;
        const double lo = rho.x0, hi = rho.x0 + rho.dx * 1024.0;
        const double h = (hi - lo) / static_cast<double>(m);
        double acc = 0.0;
        for (std::size_t j = 0; j <= m; ++j) {
            const double y = lo + h * static_cast<double>(j);
            const double w = (j == 0 || j == m) ? 0.5 : 1.0;
            acc += w * tanaka_F(p, x - y) * std::exp(-y * y);
        }
        acc *= h;
        CAPTURE(x);
        CHECK(class_C_eval(p, mu, x) == doctest::Approx(acc).epsilon(2e-3));
    }
}

TEST_CASE("power_constants: symmetry, the critical zero, and the triangle") {
    {
        const auto k = power_constants(StableParams(1.5, 2.0, 2.0), 1.2);
        CHECK(k.k_minus == doctest::Approx(k.k_plus).epsilon(1e-13));
    }
    {
        const StableParams p(1.5, 1.0, 3.0);
        const double beta = critical_beta(p).beta_crit;
        const auto k = power_constants(p, beta);
        CHECK(std::abs(k.k_plus) < 1e-10);
        CHECK(k.k_minus > 0.0);
    }
    // k_pm agree with the sum of the one-sided power images
    Rng rng(31);
    for (int i = 0; i < 40; ++i) {
        const double alpha = rng.uniform(1.05, 1.95);
        const double gamma = rng.uniform(alpha - 1.0 + 0.02, alpha - 0.02);
        const StableParams p(alpha, rng.uniform(0.1, 2.0), rng.uniform(0.1, 2.0));
        const auto k = power_constants(p, gamma);
        const auto l = generator_on_power(p, gamma, Side::Left);
        const auto r = generator_on_power(p, gamma, Side::Right);
        const double scale = std::abs(k.k_plus) + std::abs(k.k_minus);
        CHECK(std::abs(k.k_plus - (l.coef_plus + r.coef_plus)) < 1e-12 * scale);
        CHECK(std::abs(k.k_minus - (l.coef_minus + r.coef_minus)) < 1e-12 * scale);
    }
}

TEST_CASE("power_constants against the jump-integral oracle") {
    const StableParams p(1.5, 1.0, 3.0);
    const double gamma = 1.2;
    const auto k = power_constants(p, gamma);
    for (double x : {0.7, 2.0}) {
        // L|.|^gamma at x > 0: drift density k_plus x^{gamma-alpha} ... but the
        // oracle evaluates the jump integral of |y|^gamma directly
        const double oracle = oracles::nu_power_abs(p, gamma, x);
        const double predict = k.k_plus * std::pow(x, gamma - p.alpha);
        CHECK(predict == doctest::Approx(oracle).epsilon(1e-6));
        const double oracle_neg = oracles::nu_power_abs(p, gamma, -x);
        const double predict_neg = k.k_minus * std::pow(x, gamma - p.alpha);
        CHECK(predict_neg == doctest::Approx(oracle_neg).epsilon(1e-6));
    }
}

TEST_CASE("critical_beta closed forms and range") {
    {
        const auto c = critical_beta(StableParams(1.4, 1.0, 1.0));
        CHECK(c.beta_crit == doctest::Approx(0.4).epsilon(1e-12));
        CHECK(c.c == 1.0);
    }
    CHECK(critical_beta(StableParams(1.5, 1.0, 3.0)).beta_crit ==
          doctest::Approx(0.7951672353008665).epsilon(1e-12));
    Rng rng(17);
    for (int i = 0; i < 60; ++i) {
        const double alpha = rng.uniform(1.05, 1.95);
        const StableParams p(alpha, rng.uniform(0.05, 2.0), rng.uniform(0.05, 2.0));
        const double b = critical_beta(p).beta_crit;
        CHECK(b > alpha - 1.0 - 1e-12);
        CHECK(b < 1.0);
    }
    // maximal asymmetry pushes the critical exponent toward 1
    CHECK(critical_beta(StableParams(1.5, 1e-9, 1.0)).beta_crit ==
          doctest::Approx(1.0).epsilon(1e-4));
    // invariant under swapping the two jump weights
    CHECK(critical_beta(StableParams(1.7, 0.3, 1.1)).beta_crit ==
          doctest::Approx(critical_beta(StableParams(1.7, 1.1, 0.3)).beta_crit)
              .epsilon(1e-14));
}

TEST_CASE("classify splits at the critical exponent") {
    const StableParams p(1.5, 1.0, 3.0);
    const double b = critical_beta(p).beta_crit;
    CHECK(classify(p, b + 0.01) == MartingaleClass::Submartingale);
    CHECK(classify(p, b) == MartingaleClass::Submartingale);
    CHECK(classify(p, b - 0.01) == MartingaleClass::SemimartingaleNonMonotone);
}

TEST_CASE("h_functions: anchors and periodicity") {
    const StableParams p(1.5, 1.0, 3.0);
    const auto at0 = h_functions(p, 0.0);
    CHECK(std::abs(at0.h_minus) < 1e-14);
    const double c = critical_beta(p).c;
    const auto at_edge = h_functions(p, p.alpha - 1.0);
    CHECK(at_edge.h_minus ==
          doctest::Approx(std::sin(-p.alpha * M_PI) * (1.0 - c)).epsilon(1e-12));
    for (double g : {0.3, 0.9, 1.4}) {
        const auto a = h_functions(p, g);
        const auto b = h_functions(p, g + 2.0);
        CHECK(a.h_minus == doctest::Approx(b.h_minus).epsilon(1e-12));
        CHECK(a.h_plus == doctest::Approx(b.h_plus).epsilon(1e-12));
    }
}

TEST_CASE("sign pattern of the drift weights across the gamma range") {
    Rng rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const double alpha = rng.uniform(1.05, 1.95);
        const double lo = rng.uniform(0.05, 1.0);
        const double hi = lo * rng.uniform(1.5, 8.0);
        const StableParams p(alpha, lo, hi); // c_- < c_+
        const double beta = critical_beta(p).beta_crit;
        for (int j = 1; j < 200; ++j) {
            const double g = alpha - 1.0 +
                             static_cast<double>(j) / 200.0 * (1.0 - 1e-6);
            if (std::abs(g - beta) < 1e-3)
                continue;
            const auto k = power_constants(p, g);
            CAPTURE(alpha);
            CAPTURE(g);
            CHECK(k.k_minus > 0.0);
            CHECK((g > beta ? k.k_plus > 0.0 : k.k_plus < 0.0));
        }
    }
}
