#include <catch2/catch_amalgamated.hpp>

#include "dzlab/moments.hpp"
#include "dzlab/voronoi.hpp"

using namespace dzlab;

namespace {

// Independent oracle: midpoint rule on a very fine grid.
template <typename F>
double midpoint_moment(double T, double H, double U, int p, double step, F&& f) {
    double acc = 0.0;
    const auto n = static_cast<std::uint64_t>(H / step);
    for (std::uint64_t k = 0; k < n; ++k) {
        const double x = T + (static_cast<double>(k) + 0.5) * step;
        acc += detail::ipow(f(x + U) - f(x), p) * step;
    }
    return acc;
}

}  // namespace

TEST_CASE("zero shift gives a zero moment", "[moments]") {
    auto table = sieve_divisors(500);
    MomentSpec spec{MomentFamily::delta, 2, 100.0, 50.0, 0.0};
    CHECK(moment_integral(spec, table).direct_value == 0.0);
}

TEST_CASE("direct delta moment matches a midpoint oracle", "[moments]") {
    auto table = sieve_divisors(500);
    MomentSpec spec{MomentFamily::delta, 2, 100.0, 10.0, 1.0};
    auto rep = moment_integral(spec, table);
    auto delta = [&](double x) { return delta_exact(x, table); };
    const double oracle = midpoint_moment(100.0, 10.0, 1.0, 2, 1e-4, delta);
    CHECK(rep.direct_value == Catch::Approx(oracle).epsilon(1e-6));
    CHECK(rep.panel_count >= 10);
}

TEST_CASE("non-integer shifts split the unit cells", "[moments]") {
    auto table = sieve_divisors(500);
    MomentSpec spec{MomentFamily::delta, 2, 100.0, 10.0, 0.6};
    auto rep = moment_integral(spec, table);
    auto delta = [&](double x) { return delta_exact(x, table); };
    const double oracle = midpoint_moment(100.0, 10.0, 0.6, 2, 1e-4, delta);
    CHECK(rep.direct_value == Catch::Approx(oracle).epsilon(1e-6));
}

TEST_CASE("delta_star moment matches a midpoint oracle", "[moments]") {
    auto table = sieve_divisors(2000);
    MomentSpec spec{MomentFamily::delta_star, 4, 100.0, 10.0, 2.0};
    auto rep = moment_integral(spec, table);
    auto ds = [&](double t) { return delta_star_exact(t, table); };
    const double oracle = midpoint_moment(100.0, 10.0, 2.0, 4, 1e-4, ds);
    CHECK(rep.direct_value == Catch::Approx(oracle).epsilon(1e-5));
}

TEST_CASE("quadrature order invariance on the delta family", "[moments]") {
    auto table = sieve_divisors(4000);
    MomentSpec spec{MomentFamily::delta, 4, 2000.0, 500.0, 7.0};
    MomentOptions o8, o16;
    o16.gauss_order = 16;
    const double v8 = moment_integral(spec, table, o8).direct_value;
    const double v16 = moment_integral(spec, table, o16).direct_value;
    CHECK(v8 == Catch::Approx(v16).epsilon(1e-6));
}

TEST_CASE("doubling H roughly doubles an even moment", "[moments]") {
    auto table = sieve_divisors(9000);
    MomentSpec a{MomentFamily::delta, 2, 4000.0, 1000.0, 5.0};
    MomentSpec b{MomentFamily::delta, 2, 4000.0, 2000.0, 5.0};
    const double va = moment_integral(a, table).direct_value;
    const double vb = moment_integral(b, table).direct_value;
    CHECK(vb / va > 1.5);
    CHECK(vb / va < 2.5);
}

TEST_CASE("jutila mean-square main term", "[moments]") {
    auto table = sieve_divisors(4000);
    // single-term check: T/2U = 1 keeps only n = 1
    MomentSpec spec{MomentFamily::delta, 2, 1000.0, 100.0, 500.0};
    const double main = jutila_ms_main(spec, table);
    const double oracle =
        (1.0 / (4.0 * M_PI * M_PI)) *
        gauss_panels(gauss_rule(16), 1000.0, 1100.0, 64, [&](double x) {
            const double s = std::sin(M_PI * 500.0 / std::sqrt(x));
            return std::sqrt(x) * 4.0 * s * s;
        });
    CHECK(main == Catch::Approx(oracle).epsilon(1e-10));

    // U = 0: no shift, zero main term
    MomentSpec tiny{MomentFamily::delta, 2, 1000.0, 100.0, 0.0};
    CHECK(jutila_ms_main(tiny, table) == 0.0);
}

TEST_CASE("second moment is within a factor two of its main term",
          "[moments][slow]") {
    auto table = sieve_divisors(1101000);
    MomentSpec spec{MomentFamily::delta, 2, 1e6, 1e5, 500.0};
    const double direct = moment_integral(spec, table).direct_value;
    const double main = jutila_ms_main(spec, table);
    CHECK(direct / main > 0.5);
    CHECK(direct / main < 2.0);
}

TEST_CASE("main terms: single-family reduction and the diagonal convention",
          "[moments]") {
    auto table = sieve_divisors(4000);
    MomentSpec spec{MomentFamily::delta, 4, 2000.0, 400.0, 40.0};
    spec.y_const = 1.9 / std::pow(spec.T / spec.U, 0.25);  // y in [1, 2)
    REQUIRE(spec.y() >= 1.0);
    REQUIRE(spec.y() < 2.0);

    auto fams = enumerate_two_two(static_cast<std::uint64_t>(spec.y()));
    REQUIRE(fams.size() == 1);
    const double mq = main_quadruple(spec, fams, table);
    const double md = main_diagonal(spec, table);
    // only (1,1,1,1): diagonal counts it under both matchings
    CHECK(md == Catch::Approx(2.0 * mq).epsilon(1e-12));

    const double oracle =
        (3.0 / (2.0 * std::pow(M_PI, 4))) *
        gauss_panels(gauss_rule(16), 2000.0, 2400.0, 128, [&](double x) {
            const double s = std::sin(M_PI * 40.0 / std::sqrt(x));
            return x * s * s * s * s;
        });
    CHECK(mq == Catch::Approx(oracle).epsilon(1e-9));
}

TEST_CASE("diagonal-only range: md exceeds mq by exactly the matching correction",
          "[moments]") {
    auto table = sieve_divisors(4000);
    MomentSpec spec{MomentFamily::delta, 4, 2000.0, 400.0, 40.0};
    spec.y_const = 8.9 / std::pow(spec.T / spec.U, 0.25);  // y < 9: no off-diagonal
    const auto y = static_cast<std::uint64_t>(spec.y());
    REQUIRE(y == 8);
    auto fams = enumerate_two_two(y);
    for (const auto& f : fams) REQUIRE(f.diagonal());

    const double mq = main_quadruple(spec, fams, table);
    const double md = main_diagonal(spec, table);

    // md - mq = (3/2pi^4) sum_n d^4(n) n^{-3} int x sin^4
    double diag4 = 0.0;
    for (std::uint64_t n = 1; n <= y; ++n) {
        const double dn = table.d[n];
        const double x = static_cast<double>(n);
        const double w = dn * dn * dn * dn / (x * x * x);
        diag4 += w * gauss_panels(gauss_rule(16), 2000.0, 2400.0, 128, [&](double xx) {
            const double s = std::sin(M_PI * 40.0 * std::sqrt(x) / std::sqrt(xx));
            return xx * s * s * s * s;
        });
    }
    const double expect_md = mq + (3.0 / (2.0 * std::pow(M_PI, 4))) * diag4;
    CHECK(md == Catch::Approx(expect_md).epsilon(1e-9));
    CHECK(std::abs(mq - md) / md < 0.5);
}

TEST_CASE("off-diagonal families enter the quadruple form", "[moments]") {
    auto table = sieve_divisors(4000);
    MomentSpec spec{MomentFamily::delta, 4, 2000.0, 400.0, 40.0};
    spec.y_const = 9.0 / std::pow(spec.T / spec.U, 0.25);  // exactly reaches {1,9}={4,4}
    auto all = enumerate_two_two(static_cast<std::uint64_t>(spec.y()));
    std::vector<QuadrupleFamily> off;
    for (const auto& f : all)
        if (!f.diagonal()) off.push_back(f);
    REQUIRE(off.size() == 1);

    const double with_off = main_quadruple(spec, all, table);
    const double without = main_quadruple(spec, {}, table);
    CHECK(with_off != without);
    // the difference is the single family integral
    const auto& f = off[0];
    double coeff = f.multiplicity;
    for (auto n : f.ns)
        coeff *= table.d[n] / std::pow(static_cast<double>(n), 0.75);
    const double integral =
        gauss_panels(gauss_rule(16), 2000.0, 2400.0, 256, [&](double x) {
            double prod = x;
            for (auto n : f.ns)
                prod *= std::sin(M_PI * 40.0 * std::sqrt(static_cast<double>(n)) /
                                 std::sqrt(x));
            return prod;
        });
    CHECK(with_off - without ==
          Catch::Approx(3.0 / (2.0 * std::pow(M_PI, 4)) * coeff * integral)
              .epsilon(1e-8));
}

TEST_CASE("main-term input validation", "[moments]") {
    auto table = sieve_divisors(100);
    MomentSpec spec{MomentFamily::delta, 4, 2000.0, 400.0, 40.0};
    spec.y_const = 0.1 / std::pow(spec.T / spec.U, 0.25);  // y < 1
    CHECK_THROWS_AS(main_diagonal(spec, table), std::invalid_argument);
    CHECK_THROWS_AS(main_quadruple(spec, {}, table), std::invalid_argument);
    MomentSpec p2 = spec;
    p2.p = 2;
    CHECK_THROWS_AS(main_diagonal(p2, table), std::invalid_argument);
    MomentSpec ds{MomentFamily::delta_star, 4, 2000.0, 400.0, 40.0};
    CHECK_THROWS_AS(main_diagonal(ds, table), std::invalid_argument);
}

TEST_CASE("admissibility margins", "[moments]") {
    // T = 1e6, H = T, U = T^{0.45} passes (2.1)
    MomentSpec good{MomentFamily::delta, 4, 1e6, 1e6, std::pow(1e6, 0.45)};
    CHECK(check_admissibility(good, AdmissibilityId::thm1_21).passes());

    // U = T^{0.40} fails the lower bound 3/7
    MomentSpec low{MomentFamily::delta, 4, 1e6, 1e6, std::pow(1e6, 0.40)};
    auto c = check_admissibility(low, AdmissibilityId::thm1_21);
    CHECK_FALSE(c.passes());
    CHECK(c.margins[0] < 0.0);

    // H = T^{0.9} fails the T^{205/227} bound of the second theorem window
    MomentSpec h9{MomentFamily::zeta_e, 4, 1e6, std::pow(1e6, 0.9), std::pow(1e6, 0.48)};
    auto c2 = check_admissibility(h9, AdmissibilityId::thm2);
    CHECK_FALSE(c2.passes());
    CHECK(c2.margins.back() < 0.0);

    // remark-2b variant uses the 16/36/31 exponents
    auto c3 = check_admissibility(good, AdmissibilityId::thm1_remark2b);
    CHECK(c3.condition_names.back() == std::string("H^16 U^36 >> T^31"));
    CHECK(c3.passes());
}

TEST_CASE("E-family moment runs on a shared grid", "[moments][slow]") {
    auto table = sieve_divisors(4500);
    MomentSpec spec{MomentFamily::zeta_e, 2, 2000.0, 200.0, 20.0};
    MomentOptions opts;
    opts.zeta_panel = 2.0;  // U = 10 panels: shared grid path
    auto rep = moment_integral(spec, table, opts);
    CHECK(rep.direct_value > 0.0);
    CHECK(rep.evaluator_error_budget > 0.0);

    // against a direct (unshared) evaluation with an offset panel length
    MomentOptions odd;
    odd.zeta_panel = 1.7;
    auto rep2 = moment_integral(spec, table, odd);
    CHECK(rep.direct_value == Catch::Approx(rep2.direct_value).epsilon(2e-3));
}

TEST_CASE("classical mean-square ratio for delta approaches one", "[moments][slow]") {
    auto table = sieve_divisors(1000000);
    const double r3 = classical_ms_ratio_delta(1e3, table);
    const double r6 = classical_ms_ratio_delta(1e6, table);
    CHECK(std::abs(r6 - 1.0) < std::abs(r3 - 1.0));
    CHECK(r6 == Catch::Approx(1.0).margin(0.15));
}

TEST_CASE("report ratios are recomputed from fields", "[moments]") {
    MomentReport r;
    r.spec = {MomentFamily::delta, 4, 100.0, 50.0, 2.0};
    r.direct_value = 10.0;
    r.normalizer = 5.0;
    CHECK(r.ratio_direct_to_normalizer() == 2.0);
    CHECK_FALSE(r.ratio_direct_to_diagonal().has_value());
    r.main_diagonal = 4.0;
    r.main_quadruple = 3.0;
    CHECK(*r.ratio_direct_to_diagonal() == 2.5);
    CHECK(*r.ratio_quadruple_to_diagonal() == 0.75);
}
