#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dzlab/voronoi.hpp"

using namespace dzlab;

namespace {
const double g2 = 2.0 * MathConstants::euler_gamma;
}

TEST_CASE("delta exact values", "[voronoi]") {
    auto t = sieve_divisors(100);
    CHECK(delta_exact(10.0, t) ==
          Catch::Approx(27.0 - 10.0 * (std::log(10.0) + g2 - 1.0)).epsilon(1e-14));
    CHECK(delta_exact(10.0, t) == Catch::Approx(2.42984).margin(1e-5));
    CHECK(delta_exact(1.0, t) == Catch::Approx(1.0 - (g2 - 1.0)).epsilon(1e-14));
    CHECK(delta_exact(1.0, t) == Catch::Approx(0.845569).margin(1e-6));
    CHECK(delta_exact(2.5, t) ==
          Catch::Approx(3.0 - 2.5 * (std::log(2.5) + g2 - 1.0)).epsilon(1e-14));
    CHECK(delta_exact(2.5, t) == Catch::Approx(0.3231949).margin(1e-6));
    CHECK_THROWS_AS(delta_exact(101.0, t), std::out_of_range);
}

TEST_CASE("delta star exact values", "[voronoi]") {
    auto t = sieve_divisors(100);
    CHECK(delta_star_exact(5.0, t) == Catch::Approx(2.18065).margin(1e-5));
    CHECK(delta_star_exact(1.0, t) == Catch::Approx(0.845569).margin(1e-6));
    CHECK(delta_star_exact(0.25, t) == Catch::Approx(-0.192034).margin(1e-6));
    CHECK_THROWS_AS(delta_star_exact(30.0, t), std::out_of_range);
}

TEST_CASE("jumps at integers have size d(n)", "[voronoi]") {
    auto t = sieve_divisors(5000);
    for (std::uint64_t n : {2ull, 12ull, 100ull, 4096ull}) {
        const double below = delta_exact(static_cast<double>(n) - 1e-9, t);
        const double above = delta_exact(static_cast<double>(n) + 1e-9, t);
        CHECK(above - below == Catch::Approx(static_cast<double>(t.d[n])).margin(1e-6));
    }
}

TEST_CASE("single-term truncations", "[voronoi]") {
    auto t = sieve_divisors(10000);
    // 4 pi sqrt(10^4) = 400 pi, a multiple of 2 pi
    CHECK(delta_voronoi({1e4, 1}, t) == Catch::Approx(10.0 / (2.0 * M_PI)).epsilon(1e-9));
    CHECK(delta_star_voronoi(1e4, 1, t) ==
          Catch::Approx(-10.0 / (2.0 * M_PI)).epsilon(1e-9));
    CHECK(delta_star_voronoi(123.4, 0, t) == 0.0);
}

TEST_CASE("parameter validation", "[voronoi]") {
    auto t = sieve_divisors(100);
    CHECK_THROWS_AS(delta_voronoi({50.0, 60}, t), std::invalid_argument);
    CHECK_THROWS_AS(delta_voronoi({50.0, 0}, t), std::invalid_argument);
}

TEST_CASE("at integer x the series lands on the jump midpoint", "[voronoi][slow]") {
    auto t = sieve_divisors(20000);
    // pointwise the truncated series tends to Delta(x) - d(x)/2 at integer x
    for (std::uint64_t n : {10000ull, 12167ull, 16384ull}) {
        const double x = static_cast<double>(n);
        const double v = delta_voronoi({x, n}, t);
        const double mid = delta_exact(x, t) - 0.5 * t.d[n];
        CHECK(std::abs(v - mid) < std::abs(v - delta_exact(x, t)) + 1e-12);
        CHECK(std::abs(v - mid) < 6.0);
    }
    // the alternating variant has the same tail scale
    CHECK(std::abs(delta_star_voronoi(2499.875, 2000, t) -
                   delta_star_exact(2499.875, t)) < 10.0);
}

TEST_CASE("mean-square error decreases with the truncation length",
          "[voronoi][slow]") {
    const std::uint64_t X = 100000;
    auto t = sieve_divisors(2 * X);
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> dist(static_cast<double>(X),
                                                2.0 * static_cast<double>(X));
    std::vector<double> xs(200);
    for (auto& x : xs) x = dist(rng);
    double prev = 1e300;
    for (std::uint64_t N : {static_cast<std::uint64_t>(std::sqrt(double(X))),
                            static_cast<std::uint64_t>(std::pow(double(X), 0.75)), X}) {
        double ms = 0.0;
        for (double x : xs) {
            const double e = delta_exact(x, t) - delta_voronoi({x, N}, t);
            ms += e * e;
        }
        ms /= xs.size();
        REQUIRE(ms < prev);
        prev = ms;
    }
    // the tail identity makes the terminal RMS ~5; 6.0 is the frozen bound
    CHECK(std::sqrt(prev) <= 6.0);
}
