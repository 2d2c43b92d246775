#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <random>

#include "dzlab/zeta.hpp"

using namespace dzlab;

// Reference values computed independently with 20+ digit arithmetic.
namespace {
constexpr double kZetaHalfSq = 2.1326352914004896;       // zeta(1/2)^2
constexpr double kZ2At1e5 = 34.569607597779332;          // |zeta(1/2 + i 1e5)|^2
constexpr double kFirstZero = 14.134725141734693790;
constexpr double kE2 = 3.5979381196300492;
constexpr double kE10 = 3.7913410740413333;
constexpr double kE100 = 3.4626541165379698;
}  // namespace

TEST_CASE("critical line values", "[zeta]") {
    CHECK(abs_zeta_half_sq(0.0) == Catch::Approx(kZetaHalfSq).epsilon(1e-10));
    CHECK(abs_zeta_half_sq(kFirstZero) < 1e-8);
    CriticalLineConfig order2{.rs_correction_order = 2};
    CHECK(abs_zeta_half_sq(1e5, order2) == Catch::Approx(kZ2At1e5).epsilon(1e-9));
    CHECK(abs_zeta_half_sq(1e5, order2) ==
          Catch::Approx(abs_zeta_sq_euler_maclaurin(1e5)).epsilon(1e-6));
    CHECK_THROWS_AS(abs_zeta_half_sq(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(abs_zeta_half_sq(10.0, CriticalLineConfig{.rs_correction_order = 3}),
                    std::invalid_argument);
}

TEST_CASE("Riemann-Siegel matches Euler-Maclaurin across the range", "[zeta][slow]") {
    std::mt19937_64 rng(314159);
    std::uniform_real_distribution<double> dist(50.0, 1e5);
    CriticalLineConfig cfg{.rs_correction_order = 2};
    for (int i = 0; i < 200; ++i) {
        const double u = dist(rng);
        const double rs = z2_riemann_siegel(u, cfg.rs_correction_order);
        const double em = abs_zeta_sq_euler_maclaurin(u);
        REQUIRE(std::abs(rs - em) <= 1e-5 * std::max({1.0, rs, em}));
    }
}

TEST_CASE("nonnegativity", "[zeta]") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(0.0, 2e4);
    for (int i = 0; i < 300; ++i) CHECK(abs_zeta_half_sq(dist(rng)) >= 0.0);
}

TEST_CASE("cached integral of |zeta|^2", "[zeta]") {
    CriticalLineConfig cfg{.rs_correction_order = 2};
    IntegralCache cache(cfg);
    cache.ensure(120.0);
    // strictly increasing cumulative grid
    double prev = -1.0;
    for (std::size_t k = 0; k <= cache.panels(); ++k) {
        const double v = cache.cumulative(k);
        REQUIRE(v > prev);
        prev = v;
    }
    CHECK(big_e_exact(2.0, cfg, cache) == Catch::Approx(kE2).margin(2e-4));
    CHECK(big_e_exact(10.0, cfg, cache) == Catch::Approx(kE10).margin(2e-4));
    CHECK(big_e_exact(100.0, cfg, cache) == Catch::Approx(kE100).margin(2e-4));

    // additivity: E(t2) - E(t1) equals the panel integral minus the smooth part
    const double t1 = 100.0, t2 = 101.0;
    const double lhs = big_e_exact(t2, cfg, cache) - big_e_exact(t1, cfg, cache);
    const double mid = gauss_panels(gauss_rule(8), t1, t2, 4, [&](double u) {
        return abs_zeta_half_sq(u, cfg);
    });
    const double smooth = t2 * std::log(t2 / (2 * M_PI)) - t1 * std::log(t1 / (2 * M_PI)) +
                          (2 * MathConstants::euler_gamma - 1) * (t2 - t1);
    CHECK(lhs == Catch::Approx(mid - smooth).margin(1e-3));

    CHECK_THROWS_AS(big_e_exact(50.0, CriticalLineConfig{.rs_correction_order = 1}, cache),
                    state_error);
}

TEST_CASE("cache persistence round-trip", "[zeta]") {
    CriticalLineConfig cfg{.rs_correction_order = 2};
    IntegralCache cache(cfg);
    cache.ensure(40.0);
    const std::string path = "eint_test.cache";
    cache.save(path);
    auto back = IntegralCache::load(path, cfg);
    REQUIRE(back.panels() == cache.panels());
    for (std::size_t k = 0; k <= cache.panels(); ++k)
        REQUIRE(back.cumulative(k) == cache.cumulative(k));
    CHECK_THROWS_AS(IntegralCache::load(path, CriticalLineConfig{.rs_correction_order = 0}),
                    state_error);
    std::remove(path.c_str());
}

TEST_CASE("Atkinson building blocks", "[zeta]") {
    // g at pi n / 2t = 1/4 is arsinh(1/2)
    CHECK(atkinson_g(2.0 * M_PI, 1.0) ==
          Catch::Approx(0.4812118250596035).epsilon(1e-12));

    // N = t  =>  N' = 0.0195027 t
    const double t = 1000.0;
    CHECK(atkinson_n_prime(t, t) / t == Catch::Approx(0.0195027).margin(1e-6));

    // phase asymptotics: |f(t,n) - (2^{3/2} sqrt(pi n t) - pi/4)| < 10 n^{3/2}/sqrt(t)
    const double tt = 1e6;
    for (double n : {1.0, 10.0}) {
        const double approx = std::pow(2.0, 1.5) * std::sqrt(M_PI * n * tt) - M_PI / 4.0;
        CHECK(std::abs(atkinson_f(tt, n) - approx) < 10.0 * n * std::sqrt(n / tt));
    }
}

TEST_CASE("h alternates in sign and obeys the amplitude bound", "[zeta]") {
    auto table = sieve_divisors(4000);
    const double t = 2000.0;
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        const double h = atkinson_h(t, static_cast<double>(n), table.d[n]);
        if (n & 1) CHECK(h < 0.0);
        else CHECK(h > 0.0);
        const double bound = 4.0 * table.d[n] * std::pow(static_cast<double>(n), -0.75) *
                             std::pow(t, 0.25);
        REQUIRE(std::abs(h) <= bound);
    }
}

TEST_CASE("Atkinson approximates E within a log^2 band", "[zeta][slow]") {
    auto table = sieve_divisors(2100);
    CriticalLineConfig cfg{.rs_correction_order = 2};
    IntegralCache cache(cfg);
    const double t = 1000.0;
    const double exact = big_e_exact(t, cfg, cache);
    const double l2 = std::log(t) * std::log(t);

    const auto ev = atkinson_terms(t, static_cast<std::uint64_t>(t), table);
    CHECK(ev.approx_e == ev.sigma1 + ev.sigma2);
    CHECK(ev.n_prime > 0.0);
    CHECK(ev.n_prime < 0.02 * t);
    CHECK(std::abs(ev.approx_e - exact) <= 10.0 * l2);

    // robustness in the window: N = t/2 lands in the same band
    const double half = big_e_atkinson(t, static_cast<std::uint64_t>(t / 2), table);
    CHECK(std::abs(half - exact) <= 10.0 * l2);

    CHECK_THROWS_AS(atkinson_terms(t, 100, table), std::invalid_argument);
    CHECK_THROWS_AS(atkinson_terms(t, 4000, table), std::invalid_argument);
}
