#pragma once

// The desk-verification suite: twelve numbered checks covering exact
// enumeration, the trigonometric identities, truncated-series accuracy,
// the classical mean-square constants, the explicit E(t) expansion, the
// counting bounds, the quadruple-sum constants, and the fourth-moment
// consistency of the short-interval machinery.  Each check prints one
// PASS/FAIL line; run_suite returns the number of failures.
//
// The fourth-moment checks (10 and 12) evaluate the main terms with the
// spectral-complete truncation y = T/(2U) (the same cutoff the mean-square
// main terms use).  With the default small y-constant the truncated
// spectral sum would capture only a few percent of the saturated variance
// at desk scale, so the comparison is made at the cutoff where the main
// term is spectrally complete; the c used is printed in the detail line.

#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dzlab/arith.hpp"
#include "dzlab/common.hpp"
#include "dzlab/moments.hpp"
#include "dzlab/quadruples.hpp"
#include "dzlab/special_sums.hpp"
#include "dzlab/trig.hpp"
#include "dzlab/voronoi.hpp"
#include "dzlab/zeta.hpp"

namespace dzlab {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

class AcceptanceSuite {
public:
    static constexpr int kCriteria = 12;

    explicit AcceptanceSuite(unsigned threads = default_threads())
        : threads_(threads) {}

    CriterionResult run(int id) {
        const auto t0 = std::chrono::steady_clock::now();
        CriterionResult r;
        r.id = id;
        switch (id) {
            case 1: r = quadruple_completeness(); break;
            case 2: r = trig_identities(); break;
            case 3: r = voronoi_accuracy(); break;
            case 4: r = tong_constant(); break;
            case 5: r = meurman_constant(); break;
            case 6: r = atkinson_band(); break;
            case 7: r = counting_order(); break;
            case 8: r = gap_certificates(); break;
            case 9: r = special_sum_checks(); break;
            case 10: r = theorem1_consistency(); break;
            case 11: r = corollary1_order(); break;
            case 12: r = theorem2_consistency(); break;
            default: throw std::invalid_argument("criterion id must be 1..12");
        }
        r.id = id;
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                        .count();
        return r;
    }

    // Runs the listed criteria (all twelve when empty); returns #failures.
    int run_suite(std::vector<int> ids = {}, std::FILE* out = stdout) {
        if (ids.empty())
            for (int i = 1; i <= kCriteria; ++i) ids.push_back(i);
        int failures = 0;
        for (int id : ids) {
            const auto r = run(id);
            std::fprintf(out, "%s criterion %2d: %s  [%s]  (%.1f s)\n",
                         r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                         r.detail.c_str(), r.seconds);
            std::fflush(out);
            if (!r.pass) ++failures;
        }
        std::fprintf(out, "%d/%zu criteria passed\n", static_cast<int>(ids.size()) - failures,
                     ids.size());
        return failures;
    }

private:
    unsigned threads_;
    std::optional<DivisorTable> table_;

    static constexpr std::uint64_t kTableLimit = 10000000;

    const DivisorTable& table() {
        if (!table_) table_ = sieve_divisors(kTableLimit);
        return *table_;
    }

    static std::string fmt(const char* f, ...) {
        char buf[512];
        va_list args;
        va_start(args, f);
        std::vsnprintf(buf, sizeof(buf), f, args);
        va_end(args);
        return buf;
    }

    // -- 1 -------------------------------------------------------------
    // Kernel enumeration equals the exact-oracle brute force over
    // [1,y]^4 at y = 1500, as ordered-quadruple sets.  Each quadruple
    // carries its own max(n_j), so set equality at 1500 settles every
    // y <= 1500 at once.
    CriterionResult quadruple_completeness() {
        const std::uint32_t y = 1500;
        auto pack = [](std::uint64_t a, std::uint64_t b, std::uint64_t c,
                       std::uint64_t d) {
            return (a << 48) | (b << 32) | (c << 16) | d;
        };
        std::vector<std::uint64_t> expanded;
        for_each_two_two(y, [&](const QuadrupleFamily& f) {
            for_each_ordered_arrangement(
                f, [&](std::uint64_t a, std::uint64_t b, std::uint64_t c,
                       std::uint64_t d) { expanded.push_back(pack(a, b, c, d)); });
        });
        std::sort(expanded.begin(), expanded.end());

        std::vector<std::pair<double, std::pair<std::uint32_t, std::uint32_t>>> pairs;
        pairs.reserve(static_cast<std::size_t>(y) * (y + 1) / 2);
        for (std::uint32_t a = 1; a <= y; ++a)
            for (std::uint32_t b = a; b <= y; ++b)
                pairs.push_back({std::sqrt(double(a)) + std::sqrt(double(b)), {a, b}});
        std::sort(pairs.begin(), pairs.end());
        std::vector<std::uint64_t> brute;
        brute.reserve(expanded.size());
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            for (std::size_t j = i; j < pairs.size(); ++j) {
                if (pairs[j].first - pairs[i].first > 1e-9) break;
                const auto [a, b] = pairs[i].second;
                const auto [c, d] = pairs[j].second;
                if (exact_sqrt_relation(a, b, c, d) != SqrtRelation::equal) continue;
                for (auto [x, yy] : {std::pair(a, b), std::pair(b, a)})
                    for (auto [z, w] : {std::pair(c, d), std::pair(d, c)}) {
                        brute.push_back(pack(x, yy, z, w));
                        if (i != j) brute.push_back(pack(z, w, x, yy));
                    }
            }
        }
        std::sort(brute.begin(), brute.end());
        brute.erase(std::unique(brute.begin(), brute.end()), brute.end());

        CriterionResult r;
        r.name = "quadruple enumeration completeness (y <= 1500)";
        r.pass = expanded == brute;
        r.detail = fmt("enumerated %zu ordered quadruples, oracle %zu, %s",
                       expanded.size(), brute.size(),
                       r.pass ? "set-equal" : "MISMATCH");
        return r;
    }

    // -- 2 -------------------------------------------------------------
    CriterionResult trig_identities() {
        std::mt19937_64 rng(0x5bd1e995);
        std::uniform_real_distribution<double> dist(-10.0, 10.0);
        double worst_closed = 0.0, worst_rec = 0.0;
        bool pass = true;
        for (std::size_t k = 1; k <= 10; ++k) {
            const double tol = std::ldexp(1e-12, static_cast<int>(k));
            for (int rep = 0; rep < 1000; ++rep) {
                std::vector<double> a(k);
                for (auto& v : a) v = dist(rng);
                auto [sd, cd] = si_co_definitional(a);
                auto [sc, cc] = si_co_closed(a);
                const double err =
                    std::max(std::abs(sd - sc), std::abs(cd - cc)) / std::ldexp(1.0, k);
                worst_closed = std::max(worst_closed, err);
                if (std::abs(sd - sc) > tol || std::abs(cd - cc) > tol) pass = false;
                if (k >= 2) {
                    const std::size_t m = 1 + (rep % (k - 1));
                    std::vector<double> head(a.begin(), a.begin() + m);
                    std::vector<double> tail(a.begin() + m, a.end());
                    auto [sm, cm] = si_co_definitional(head);
                    auto [sl, cl] = si_co_definitional(tail);
                    const double e1 = std::abs(sd - (sm * cl + cm * sl));
                    const double e2 = std::abs(cd - (cm * cl - sm * sl));
                    worst_rec = std::max({worst_rec, e1, e2});
                    if (e1 > tol || e2 > tol) pass = false;
                }
            }
        }
        CriterionResult r;
        r.name = "trig identities (closed forms and split recurrences, k <= 10)";
        r.pass = pass;
        r.detail = fmt("max closed-form err %.2e * 2^k, max recurrence err %.2e",
                       worst_closed, worst_rec);
        return r;
    }

    // -- 3 -------------------------------------------------------------
    CriterionResult voronoi_accuracy() {
        const std::uint64_t X = 100000;
        std::mt19937_64 rng(0xA5A5A5A5);
        std::uniform_real_distribution<double> dist(double(X), 2.0 * double(X));
        std::vector<double> xs(200);
        for (auto& x : xs) x = dist(rng);
        const auto& t = table();
        std::vector<double> rms;
        for (std::uint64_t N : {std::uint64_t(316), std::uint64_t(5623), X}) {
            auto parts = run_blocks<double>(xs.size(), threads_, [&](std::size_t i) {
                const double e = delta_exact(xs[i], t) - delta_voronoi({xs[i], N}, t);
                return e * e;
            });
            KahanSum ms;
            for (double p : parts) ms.add(p);
            rms.push_back(std::sqrt(ms.value() / xs.size()));
        }
        CriterionResult r;
        r.name = "truncated-series accuracy at X = 1e5";
        // terminal bound frozen from the tail identity: the mean square of
        // the omitted terms alone is (sqrt x/4pi^2) * tail(N) ~ 25-31 here
        r.pass = rms[0] > rms[1] && rms[1] > rms[2] && rms[2] <= 6.0;
        r.detail = fmt("RMS %.2f -> %.2f -> %.2f along N = {X^1/2, X^3/4, X} (bound 6.0)",
                       rms[0], rms[1], rms[2]);
        return r;
    }

    // -- 4 -------------------------------------------------------------
    CriterionResult tong_constant() {
        MomentOptions opts;
        opts.threads = threads_;
        const double ratio = classical_ms_ratio_delta(1e7, table(), opts);
        CriterionResult r;
        r.name = "divisor mean-square constant at T = 1e7";
        r.pass = ratio >= 0.85 && ratio <= 1.15;
        r.detail = fmt("ratio %.4f in [0.85, 1.15], constant %.5f", ratio,
                       MathConstants::tong_const());
        return r;
    }

    // -- 5 -------------------------------------------------------------
    CriterionResult meurman_constant() {
        MomentOptions opts;
        opts.threads = threads_;
        const double ratio = classical_ms_ratio_zeta(5e4, table(), opts);
        CriterionResult r;
        r.name = "zeta mean-square constant at T = 5e4";
        r.pass = ratio >= 0.8 && ratio <= 1.2;
        r.detail = fmt("ratio %.4f in [0.8, 1.2], constant %.4f", ratio,
                       MathConstants::meurman_const());
        return r;
    }

    // -- 6 -------------------------------------------------------------
    CriterionResult atkinson_band() {
        CriticalLineConfig cfg{.rs_correction_order = 2};
        IntegralCache cache(cfg);
        cache.ensure(10000.0, threads_);
        std::mt19937_64 rng(0xC0FFEE);
        std::uniform_real_distribution<double> dist(1e3, 1e4);
        const auto& t = table();
        double C = 0.0;
        for (int i = 0; i < 50; ++i) {
            const double tt = dist(rng);
            const double exact = big_e_exact(tt, cfg, cache, threads_);
            const double atk = big_e_atkinson(tt, static_cast<std::uint64_t>(tt), t);
            C = std::max(C, std::abs(exact - atk) / (std::log(tt) * std::log(tt)));
        }
        CriterionResult r;
        r.name = "explicit E(t) expansion error band on [1e3, 1e4]";
        r.pass = C <= 10.0;
        r.detail = fmt("recorded C = %.4f (|E - Sigma1 - Sigma2| <= C ln^2 t, C <= 10)", C);
        return r;
    }

    // -- 7 -------------------------------------------------------------
    CriterionResult counting_order() {
        double bound = 0.0, growth = 0.0;
        double prev[4] = {0, 0, 0, 0};
        bool pass = true;
        for (std::uint64_t N = 16; N <= 256; N *= 2) {
            for (int e = 0; e < 4; ++e) {
                const double delta = std::pow(double(N), double(e - 3));
                const double A = static_cast<double>(count_inequality(N, delta));
                const double B = A / (delta * std::pow(double(N), 3.5) + double(N) * N);
                bound = std::max(bound, B);
                if (N > 16) {
                    const double g = B / prev[e];
                    growth = std::max(growth, g);
                    if (g > std::pow(double(N) / 2.0, 0.1)) pass = false;
                }
                prev[e] = B;
            }
        }
        if (bound > 8.0) pass = false;
        CriterionResult r;
        r.name = "near-equality counting order over N in {16..256}";
        r.pass = pass;
        r.detail = fmt("max A/(Delta N^3.5 + N^2) = %.3f (<= 8), max dyadic growth %.3f",
                       bound, growth);
        return r;
    }

    // -- 8 -------------------------------------------------------------
    CriterionResult gap_certificates() {
        auto scan = [&]() {
            const std::uint64_t M = 200;
            std::vector<double> roots(M + 1);
            for (std::uint64_t n = 1; n <= M; ++n) roots[n] = std::sqrt(double(n));
            auto parts = run_blocks<double>(M, threads_, [&](std::size_t blk) {
                const std::uint64_t n1 = blk + 1;
                double best = 1e300;
                // + + - - with n1<=n2, n3<=n4, (n1,n2) <= (n3,n4)
                for (std::uint64_t n2 = n1; n2 <= M; ++n2)
                    for (std::uint64_t n3 = n1; n3 <= M; ++n3)
                        for (std::uint64_t n4 = std::max(n3, n1 == n3 ? n2 : n3);
                             n4 <= M; ++n4) {
                            const double a = roots[n1] + roots[n2] - roots[n3] - roots[n4];
                            if (std::abs(a) < 1e-9) {
                                if (exact_sqrt_relation(n1, n2, n3, n4) ==
                                    SqrtRelation::equal)
                                    continue;
                            }
                            const double mx = double(std::max({n1, n2, n3, n4}));
                            const double prod = double(n1) * double(n2) * double(n3) *
                                                double(n4);
                            const double ratio =
                                std::abs(a) * mx * std::sqrt(mx) * std::sqrt(prod);
                            best = std::min(best, ratio);
                        }
                // + + + - with n1<=n2<=n3
                for (std::uint64_t n2 = n1; n2 <= M; ++n2)
                    for (std::uint64_t n3 = n2; n3 <= M; ++n3)
                        for (std::uint64_t n4 = 1; n4 <= M; ++n4) {
                            const double a = roots[n1] + roots[n2] + roots[n3] - roots[n4];
                            if (std::abs(a) < 1e-9) {
                                if (exact_three_one_relation(n1, n2, n3, n4) ==
                                    SqrtRelation::equal)
                                    continue;
                            }
                            const double mx = double(std::max({n1, n2, n3, n4}));
                            const double prod = double(n1) * double(n2) * double(n3) *
                                                double(n4);
                            const double ratio =
                                std::abs(a) * mx * std::sqrt(mx) * std::sqrt(prod);
                            best = std::min(best, ratio);
                        }
                return best;
            });
            double best = 1e300;
            for (double p : parts) best = std::min(best, p);
            return best;
        };
        const double first = scan();
        const double second = scan();
        CriterionResult r;
        r.name = "signed root-sum gap certificates (n_j <= 200)";
        r.pass = first > 0.0 && first == second;
        r.detail = fmt("min |alpha*| max^1.5 (prod n)^0.5 = %.17g, rerun identical: %s",
                       first, first == second ? "yes" : "NO");
        return r;
    }

    // -- 9 -------------------------------------------------------------
    CriterionResult special_sum_checks() {
        const auto& t = table();
        bool pass = true;
        const double c1v = compute_c1(10, t).value;
        if (std::abs(c1v - std::sqrt(3.0)) > 1e-12) pass = false;
        double worst_split = 0.0;
        for (std::uint64_t z : {10ull, 100ull, 1000ull}) {
            const double prime = compute_c2(z, t, C2Variant::prime).value;
            const double c21 = compute_c2(z, t, C2Variant::c21).value;
            const double c22 = compute_c2(z, t, C2Variant::c22).value;
            const double rel = std::abs(prime - (2 * c21 + c22)) / prime;
            worst_split = std::max(worst_split, rel);
            if (rel > 1e-12) pass = false;
        }
        double lo = 1e300, hi = 0.0;
        for (std::uint64_t z : {16ull, 64ull, 256ull}) {
            const auto rep = compute_c_zu(z, z * z, t);
            const double scaled = rep.value / rep.bound_form;
            lo = std::min(lo, scaled);
            hi = std::max(hi, scaled);
        }
        if (!(hi / lo <= 4.0)) pass = false;
        CriterionResult r;
        r.name = "quadruple-sum constants (c1, c2 split, c(z,u) scaling)";
        r.pass = pass;
        r.detail = fmt("c1(10)-sqrt3 = %.1e, split err %.1e, c(z,z^2) z^1.5 in [%.3f, %.3f]",
                       c1v - std::sqrt(3.0), worst_split, lo, hi);
        return r;
    }

    // shared by criteria 10 and 12: main terms at the spectral-complete
    // truncation y = T/(2U)
    static double complete_y_const(double T, double U) {
        return (T / (2.0 * U)) / std::pow(T / U, 0.25);
    }

    // -- 10 ------------------------------------------------------------
    CriterionResult theorem1_consistency() {
        const double T = 4e6;
        const double U = std::floor(std::pow(T, 0.45));
        MomentSpec spec{MomentFamily::delta, 4, T, T, U};
        spec.y_const = complete_y_const(T, U);
        MomentOptions opts;
        opts.threads = threads_;

        CriterionResult r;
        r.name = "fourth-moment consistency for the divisor error term";
        if (!check_admissibility(spec, AdmissibilityId::thm1_21).passes()) {
            r.pass = false;
            r.detail = "hypothesis check failed for (T, H, U)";
            return r;
        }
        const auto& tab = table();
        const auto y = static_cast<std::uint64_t>(spec.y());
        std::vector<QuadrupleFamily> fams;
        for_each_two_two_offdiag(y, [&](const QuadrupleFamily& f) { fams.push_back(f); });
        const double mq = main_quadruple(spec, fams, tab, opts);
        const double md = main_diagonal(spec, tab, opts);
        const double direct = moment_integral(spec, tab, opts).direct_value;
        const double gap = std::abs(mq - md) / md;
        const double ratio = direct / md;
        r.pass = gap <= 0.2 && ratio >= 0.5 && ratio <= 2.0;
        r.detail = fmt("U=%.0f y=%llu (c=%.1f): |mq-md|/md = %.4f (<=0.2), direct/md = %.3f in [0.5,2]",
                       U, static_cast<unsigned long long>(y), spec.y_const, gap, ratio);
        return r;
    }

    // -- 11 ------------------------------------------------------------
    // The grid spans T at the fixed admissible exponent U = T^{0.45}; at
    // desk scale ln(T/U^2) is only ~1.5, so pushing the exponent toward
    // 1/2 instead would collapse the ln^6 normalizer and test nothing.
    CriterionResult corollary1_order() {
        struct Point {
            double T, uexp;
        };
        const Point grid[3] = {{1e6, 0.45}, {2e6, 0.45}, {4e6, 0.45}};
        std::vector<double> ratios;
        MomentOptions opts;
        opts.threads = threads_;
        bool admissible = true;
        for (const auto& p : grid) {
            const double U = std::floor(std::pow(p.T, p.uexp));
            MomentSpec spec{MomentFamily::delta, 4, p.T, p.T, U};
            if (!check_admissibility(spec, AdmissibilityId::cor1_24).passes())
                admissible = false;
            const auto rep = moment_integral(spec, table(), opts);
            ratios.push_back(rep.direct_value / rep.normalizer);
        }
        std::vector<double> sorted = ratios;
        std::sort(sorted.begin(), sorted.end());
        const double med = sorted[1];
        double worst = 1.0;
        bool banded = true;
        for (double v : ratios) {
            worst = std::max(worst, std::max(v / med, med / v));
            if (v < 1e-2 || v > 1e2) banded = false;
        }
        CriterionResult r;
        r.name = "fourth-moment order H U^2 ln^6(T/U^2) across an admissible grid";
        r.pass = admissible && banded && worst <= 4.0;
        r.detail = fmt("ratios %.4f / %.4f / %.4f, max spread vs median %.2f (<= 4)",
                       ratios[0], ratios[1], ratios[2], worst);
        return r;
    }

    // -- 12 ------------------------------------------------------------
    CriterionResult theorem2_consistency() {
        const double T = 5e4;
        const double U = std::floor(std::pow(T, 0.45));
        MomentSpec spec{MomentFamily::zeta_e, 4, T, T, U};
        spec.y_const = complete_y_const(T, U);
        MomentOptions opts;
        opts.threads = threads_;
        opts.zeta_panel = 2.0;

        CriterionResult r;
        r.name = "fourth-moment consistency for the zeta mean-square error term";
        if (!check_admissibility(spec, AdmissibilityId::thm2).passes()) {
            r.pass = false;
            r.detail = "hypothesis check failed for (T, H, U)";
            return r;
        }
        const auto& tab = table();
        const auto rep = moment_integral(spec, tab, opts);
        const double md = main_diagonal(spec, tab, opts);
        const double ratio = rep.direct_value / md;
        r.pass = ratio >= 1.0 / 3.0 && ratio <= 3.0;
        r.detail = fmt("U=%.0f y=%llu: direct/diagonal = %.3f in [1/3, 3], evaluator budget %.2e",
                       U, static_cast<unsigned long long>(spec.y()), ratio,
                       rep.evaluator_error_budget);
        return r;
    }
};

}  // namespace dzlab
