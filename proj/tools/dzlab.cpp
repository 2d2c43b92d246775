// Command-line front end: sieving, error-term evaluation, short-interval
// moments and their main terms, exact quadruple enumeration, inequality
// counts, the quadruple-sum constants, trig identity spot checks,
// hypothesis checking, and the verification suite.
//
// Exit codes: 0 success, 1 validation error, 2 resource error.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "dzlab/dzlab.hpp"
#include "dzlab/verify.hpp"

namespace {

using namespace dzlab;

// --H / --U values are either plain reals or "autoNN", meaning T^{0.NN}
// (auto45 -> T^0.45, auto100 -> T).
double resolve_auto(const std::string& text, double T, const char* flag) {
    if (text.rfind("auto", 0) == 0) {
        const std::string digits = text.substr(4);
        if (digits.empty() || digits.size() > 3)
            throw CLI::ValidationError(flag, "autoNN needs 1-3 digits");
        const double exp = std::stod(digits) / 100.0;
        return std::floor(std::pow(T, exp));
    }
    return std::stod(text);
}

std::string cache_path(const std::string& name) {
    if (name.find('/') != std::string::npos) return name;
    const char* dir = std::getenv("DZLAB_CACHE_DIR");
    if (dir && *dir) return std::string(dir) + "/" + name;
    return name;
}

RunManifest make_manifest(const std::string& command,
                          std::map<std::string, std::string> params,
                          std::uint64_t seed) {
    RunManifest m;
    m.command = command;
    m.params = std::move(params);
    m.seed = seed;
    m.started = iso_timestamp_now();
    return m;
}

void finish_manifest(RunManifest& m, const std::string& out_path,
                     std::chrono::steady_clock::time_point t0) {
    m.ended = iso_timestamp_now();
    m.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!out_path.empty()) write_file(out_path + ".manifest.json", m.to_json() + "\n");
}

MomentFamily parse_family(const std::string& name) {
    if (name == "delta") return MomentFamily::delta;
    if (name == "delta-star" || name == "delta_star") return MomentFamily::delta_star;
    if (name == "zeta-e" || name == "zeta_e") return MomentFamily::zeta_e;
    throw CLI::ValidationError("--family", "expected delta, delta-star or zeta-e");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for divisor and zeta mean-square error terms"};
    app.require_subcommand(1);
    unsigned threads = default_threads();
    std::uint64_t seed = 0;
    app.add_option("--threads", threads, "worker threads for interval integrals");
    app.add_option("--seed", seed, "seed for randomized diagnostics");

    // ---- sieve ----
    auto* sieve_cmd = app.add_subcommand("sieve", "build the divisor table cache");
    std::uint64_t sieve_limit = 1000000;
    std::string sieve_out;
    sieve_cmd->add_option("--limit", sieve_limit, "sieve limit")->required();
    sieve_cmd->add_option("--out", sieve_out, "cache file to write");

    // ---- delta ----
    auto* delta_cmd = app.add_subcommand("delta", "evaluate the divisor error term");
    double delta_x = 100.0;
    std::uint64_t delta_trunc = 0;
    std::uint64_t delta_limit = 0;
    std::string delta_cache;
    bool delta_star_flag = false;
    delta_cmd->add_option("--x", delta_x, "evaluation point")->required();
    delta_cmd->add_option("--trunc", delta_trunc,
                          "also evaluate the truncated series with N terms");
    delta_cmd->add_option("--limit", delta_limit, "sieve limit (default: as needed)");
    delta_cmd->add_option("--cache", delta_cache, "load the divisor table from a cache");
    delta_cmd->add_flag("--star", delta_star_flag, "alternating-sign variant");

    // ---- ezeta ----
    auto* ezeta_cmd = app.add_subcommand("ezeta", "evaluate the zeta mean-square error term");
    double ez_t = 1000.0;
    std::uint64_t ez_ncap = 0;
    bool ez_exact = false;
    std::string ez_cache;
    ezeta_cmd->add_option("--t", ez_t, "evaluation point")->required();
    ezeta_cmd->add_option("--n-cap", ez_ncap, "explicit-expansion cap (default floor t)");
    ezeta_cmd->add_flag("--exact", ez_exact, "also integrate |zeta(1/2+iu)|^2 directly");
    ezeta_cmd->add_option("--cache", ez_cache,
                          "persistent integral grid file (created if missing)");

    // ---- moment ----
    auto* mom_cmd = app.add_subcommand("moment", "short-interval moment integral");
    std::string mom_family = "delta", mom_H = "auto100", mom_U = "1", mom_main = "none";
    std::string mom_format = "json", mom_out;
    int mom_p = 2;
    double mom_T = 1e6;
    double mom_yconst = 0.1;
    mom_cmd->add_option("--family", mom_family, "delta | delta-star | zeta-e");
    mom_cmd->add_option("--p", mom_p, "power (1, 2 or 4)");
    mom_cmd->add_option("--T", mom_T, "interval start")->required();
    mom_cmd->add_option("--H", mom_H, "interval length (real or autoNN = T^0.NN)");
    mom_cmd->add_option("--U", mom_U, "shift (real or autoNN)");
    mom_cmd->add_option("--y-const", mom_yconst, "c in y = c (T/U)^{1/4}");
    mom_cmd->add_option("--main", mom_main, "none | quadruple | diagonal | both");
    mom_cmd->add_option("--format", mom_format, "json | csv");
    mom_cmd->add_option("--out", mom_out, "output path (stdout if omitted)");

    // ---- main-term ----
    auto* main_cmd = app.add_subcommand("main-term", "fourth-moment main terms only");
    std::string mt_family = "delta", mt_H = "auto100", mt_U = "auto45";
    double mt_T = 1e6, mt_yconst = 0.1;
    main_cmd->add_option("--family", mt_family, "delta | zeta-e");
    main_cmd->add_option("--T", mt_T, "interval start")->required();
    main_cmd->add_option("--H", mt_H, "interval length");
    main_cmd->add_option("--U", mt_U, "shift");
    main_cmd->add_option("--y-const", mt_yconst, "c in y = c (T/U)^{1/4}");

    // ---- count ----
    auto* count_cmd = app.add_subcommand("count", "near-equality inequality counts");
    std::uint64_t cnt_N = 64, cnt_N1 = 0, cnt_N2 = 0, cnt_N3 = 0, cnt_N4 = 0;
    double cnt_delta = 0.01;
    std::string cnt_sign, cnt_out;
    count_cmd->add_option("--N", cnt_N, "dyadic level (n_j in (N, 2N])");
    count_cmd->add_option("--delta", cnt_delta, "inequality width")->required();
    count_cmd->add_option("--signed", cnt_sign, "plus | minus (third-root sign)");
    count_cmd->add_option("--N1", cnt_N1, "per-slot level (signed form)");
    count_cmd->add_option("--N2", cnt_N2, "per-slot level");
    count_cmd->add_option("--N3", cnt_N3, "per-slot level");
    count_cmd->add_option("--N4", cnt_N4, "per-slot level");
    count_cmd->add_option("--out", cnt_out, "CSV path (appends)");

    // ---- enumerate ----
    auto* enum_cmd = app.add_subcommand("enumerate", "exact quadruple families");
    std::uint64_t en_y = 100;
    std::string en_rel = "two-two", en_out;
    bool en_offdiag = false;
    enum_cmd->add_option("--y", en_y, "bound on n_j")->required();
    enum_cmd->add_option("--relation", en_rel, "two-two | three-one");
    enum_cmd->add_flag("--offdiag-only", en_offdiag, "skip equal-pair families");
    enum_cmd->add_option("--out", en_out, "CSV path");

    // ---- sums ----
    auto* sums_cmd = app.add_subcommand("sums", "quadruple-sum constants");
    std::string sums_which = "c1", sums_format = "json", sums_out;
    std::uint64_t sums_z = 100, sums_u = 0;
    sums_cmd->add_option("--which", sums_which,
                         "c1 | c2 | c2-prime | c21 | c22 | czu");
    sums_cmd->add_option("--z", sums_z, "bound z")->required();
    sums_cmd->add_option("--u", sums_u, "bound u (czu only)");
    sums_cmd->add_option("--format", sums_format, "json | csv");
    sums_cmd->add_option("--out", sums_out, "output path");

    // ---- trig-check ----
    auto* trig_cmd = app.add_subcommand("trig-check", "definitional vs closed forms");
    std::size_t tr_k = 6;
    int tr_samples = 1000;
    trig_cmd->add_option("--k", tr_k, "vector length (1..16)");
    trig_cmd->add_option("--samples", tr_samples, "random vectors");

    // ---- admissible ----
    auto* adm_cmd = app.add_subcommand("admissible", "hypothesis margins for (T,H,U)");
    std::string adm_case = "thm1-21", adm_H = "auto100", adm_U = "auto45";
    double adm_T = 1e6;
    adm_cmd->add_option("--case", adm_case,
                        "thm1-21 | thm1-remark2a | thm1-remark2b | cor1-24 | thm2 | cor2");
    adm_cmd->add_option("--T", adm_T, "T")->required();
    adm_cmd->add_option("--H", adm_H, "H (real or autoNN)");
    adm_cmd->add_option("--U", adm_U, "U (real or autoNN)");

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
    std::string verify_suite = "all";
    verify_cmd->add_option("--suite", verify_suite, "all | quick | comma-separated ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 1;
    }

    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (sieve_cmd->parsed()) {
            auto table = sieve_divisors(sieve_limit);
            if (!sieve_out.empty()) save_divisor_table(table, cache_path(sieve_out));
            std::printf("limit %llu  prefix %lld  alt_prefix %lld%s%s\n",
                        static_cast<unsigned long long>(table.limit),
                        static_cast<long long>(table.prefix[table.limit]),
                        static_cast<long long>(table.alt_prefix[table.limit]),
                        sieve_out.empty() ? "" : "  cache ",
                        sieve_out.empty() ? "" : cache_path(sieve_out).c_str());
        } else if (delta_cmd->parsed()) {
            const auto need = static_cast<std::uint64_t>(
                std::ceil(delta_star_flag ? 4.0 * delta_x : delta_x));
            auto table =
                !delta_cache.empty()
                    ? load_divisor_table(cache_path(delta_cache))
                    : sieve_divisors(delta_limit ? delta_limit
                                                 : std::max(need, std::uint64_t(8)));
            if (delta_star_flag) {
                std::printf("delta_star_exact(%.6f) = %.10f\n", delta_x,
                            delta_star_exact(delta_x, table));
                if (delta_trunc)
                    std::printf("delta_star_voronoi(N=%llu) = %.10f\n",
                                static_cast<unsigned long long>(delta_trunc),
                                delta_star_voronoi(delta_x, delta_trunc, table));
            } else {
                std::printf("delta_exact(%.6f) = %.10f\n", delta_x,
                            delta_exact(delta_x, table));
                if (delta_trunc)
                    std::printf("delta_voronoi(N=%llu) = %.10f\n",
                                static_cast<unsigned long long>(delta_trunc),
                                delta_voronoi({delta_x, delta_trunc}, table));
            }
        } else if (ezeta_cmd->parsed()) {
            const auto cap =
                ez_ncap ? ez_ncap : static_cast<std::uint64_t>(std::floor(ez_t));
            auto table = sieve_divisors(std::max<std::uint64_t>(cap, 8));
            const auto ev = atkinson_terms(ez_t, cap, table);
            std::printf("t %.6f  n_cap %llu  n_prime %.4f\n", ez_t,
                        static_cast<unsigned long long>(cap), ev.n_prime);
            std::printf("sigma1 %.8f  sigma2 %.8f  E_expansion %.8f\n", ev.sigma1,
                        ev.sigma2, ev.approx_e);
            if (ez_exact) {
                CriticalLineConfig cfg{.rs_correction_order = 2};
                const std::string path = ez_cache.empty() ? "" : cache_path(ez_cache);
                std::FILE* probe = path.empty() ? nullptr : std::fopen(path.c_str(), "rb");
                IntegralCache cache = probe ? (std::fclose(probe), IntegralCache::load(path, cfg))
                                            : IntegralCache(cfg);
                const double exact = big_e_exact(ez_t, cfg, cache, threads);
                std::printf("E_quadrature %.8f  difference %.3e\n", exact,
                            exact - ev.approx_e);
                if (!path.empty()) cache.save(path);
            }
        } else if (mom_cmd->parsed()) {
            MomentSpec spec;
            spec.family = parse_family(mom_family);
            spec.p = mom_p;
            spec.T = mom_T;
            spec.H = resolve_auto(mom_H, mom_T, "--H");
            spec.U = resolve_auto(mom_U, mom_T, "--U");
            spec.y_const = mom_yconst;
            spec.validate();
            MomentOptions opts;
            opts.threads = threads;
            const double reach = spec.family == MomentFamily::delta_star
                                     ? 4.0 * (spec.T + spec.H + spec.U)
                                     : spec.T + spec.H + spec.U;
            auto table = sieve_divisors(static_cast<std::uint64_t>(std::ceil(reach)) + 1);
            auto report = moment_integral(spec, table, opts);
            const bool want_quad = mom_main == "quadruple" || mom_main == "both";
            const bool want_diag = mom_main == "diagonal" || mom_main == "both";
            if ((want_quad || want_diag) && spec.y() < 1.0) {
                std::fprintf(stderr,
                             "note: y = %.4f < 1 leaves the main-term sums empty; "
                             "raise --y-const to evaluate them\n",
                             spec.y());
            } else {
                if (want_quad) {
                    std::vector<QuadrupleFamily> fams;
                    for_each_two_two_offdiag(static_cast<std::uint64_t>(spec.y()),
                                             [&](const QuadrupleFamily& f) {
                                                 fams.push_back(f);
                                             });
                    report.main_quadruple = main_quadruple(spec, fams, table, opts);
                }
                if (want_diag) report.main_diagonal = main_diagonal(spec, table, opts);
            }
            auto manifest = make_manifest(
                "moment",
                {{"family", mom_family},
                 {"p", std::to_string(mom_p)},
                 {"T", std::to_string(mom_T)},
                 {"H", mom_H},
                 {"U", mom_U},
                 {"y_const", std::to_string(mom_yconst)},
                 {"main", mom_main}},
                seed);
            const std::string payload = mom_format == "csv"
                                            ? to_csv_row(report, manifest.id())
                                            : to_json(report, manifest.id());
            if (mom_out.empty()) {
                std::printf("%s\n", payload.c_str());
            } else if (mom_format == "csv") {
                append_csv_row(mom_out, kMomentCsvHeader, payload);
            } else {
                write_file(mom_out, payload + "\n");
            }
            finish_manifest(manifest, mom_out, t0);
        } else if (main_cmd->parsed()) {
            MomentSpec spec;
            spec.family = parse_family(mt_family);
            spec.p = 4;
            spec.T = mt_T;
            spec.H = resolve_auto(mt_H, mt_T, "--H");
            spec.U = resolve_auto(mt_U, mt_T, "--U");
            spec.y_const = mt_yconst;
            spec.validate();
            MomentOptions opts;
            opts.threads = threads;
            auto table = sieve_divisors(
                std::max<std::uint64_t>(static_cast<std::uint64_t>(spec.y()) + 1, 8));
            std::vector<QuadrupleFamily> fams;
            for_each_two_two_offdiag(static_cast<std::uint64_t>(spec.y()),
                                     [&](const QuadrupleFamily& f) { fams.push_back(f); });
            std::printf("y = %.4f (%llu terms, %zu off-diagonal families)\n", spec.y(),
                        static_cast<unsigned long long>(spec.y()), fams.size());
            std::printf("main_quadruple = %.8e\n",
                        main_quadruple(spec, fams, table, opts));
            std::printf("main_diagonal  = %.8e\n", main_diagonal(spec, table, opts));
        } else if (count_cmd->parsed()) {
            std::uint64_t count;
            double bound_ratio;
            if (!cnt_sign.empty()) {
                const ThirdSign sign =
                    cnt_sign == "plus" ? ThirdSign::plus : ThirdSign::minus;
                const std::uint64_t n1 = cnt_N1 ? cnt_N1 : cnt_N;
                const std::uint64_t n2 = cnt_N2 ? cnt_N2 : cnt_N;
                const std::uint64_t n3 = cnt_N3 ? cnt_N3 : cnt_N;
                const std::uint64_t n4 = cnt_N4 ? cnt_N4 : cnt_N;
                count = count_inequality_signed(n1, n2, n3, n4, cnt_delta, sign);
                double prod = 1.0;
                for (std::uint64_t n : {n1, n2, n3, n4})
                    prod *= std::pow(cnt_delta, 0.25) * std::pow(double(n), 7.0 / 8.0) +
                            std::sqrt(double(n));
                bound_ratio = count / prod;
            } else {
                count = count_inequality(cnt_N, cnt_delta);
                bound_ratio = count / (cnt_delta * std::pow(double(cnt_N), 3.5) +
                                       double(cnt_N) * cnt_N);
            }
            std::printf("N %llu  delta %.6g  count %llu  bound_ratio %.6f\n",
                        static_cast<unsigned long long>(cnt_N), cnt_delta,
                        static_cast<unsigned long long>(count), bound_ratio);
            if (!cnt_out.empty()) {
                char row[160];
                std::snprintf(row, sizeof(row), "%llu,%.17g,%llu,%.17g",
                              static_cast<unsigned long long>(cnt_N), cnt_delta,
                              static_cast<unsigned long long>(count), bound_ratio);
                append_csv_row(cnt_out, "N,delta,count,bound_ratio", row);
            }
        } else if (enum_cmd->parsed()) {
            std::uint64_t families = 0, quadruples = 0;
            auto emit = [&](const QuadrupleFamily& f) {
                ++families;
                quadruples += f.multiplicity;
                if (!en_out.empty())
                    append_csv_row(en_out, kFamilyCsvHeader, to_csv_row(f));
            };
            if (en_rel == "three-one") {
                for_each_three_one(en_y, emit);
            } else if (en_offdiag) {
                for_each_two_two_offdiag(en_y, emit);
            } else {
                for_each_two_two(en_y, emit);
            }
            std::printf("y %llu  relation %s  families %llu  ordered quadruples %llu\n",
                        static_cast<unsigned long long>(en_y), en_rel.c_str(),
                        static_cast<unsigned long long>(families),
                        static_cast<unsigned long long>(quadruples));
        } else if (sums_cmd->parsed()) {
            const std::uint64_t need = sums_which == "czu" ? sums_u : sums_z;
            auto table = sieve_divisors(std::max<std::uint64_t>(need, 8));
            SumReport rep;
            if (sums_which == "c1") rep = compute_c1(sums_z, table);
            else if (sums_which == "c2") rep = compute_c2(sums_z, table, C2Variant::weighted);
            else if (sums_which == "c2-prime") rep = compute_c2(sums_z, table, C2Variant::prime);
            else if (sums_which == "c21") rep = compute_c2(sums_z, table, C2Variant::c21);
            else if (sums_which == "c22") rep = compute_c2(sums_z, table, C2Variant::c22);
            else if (sums_which == "czu") rep = compute_c_zu(sums_z, sums_u, table);
            else throw CLI::ValidationError("--which", "unknown sum kind");
            auto manifest = make_manifest("sums",
                                          {{"which", sums_which},
                                           {"z", std::to_string(sums_z)},
                                           {"u", std::to_string(sums_u)}},
                                          seed);
            const std::string payload = sums_format == "csv"
                                            ? to_csv_row(rep, manifest.id())
                                            : to_json(rep, manifest.id());
            if (sums_out.empty()) std::printf("%s\n", payload.c_str());
            else if (sums_format == "csv") append_csv_row(sums_out, kSumCsvHeader, payload);
            else write_file(sums_out, payload + "\n");
            finish_manifest(manifest, sums_out, t0);
        } else if (trig_cmd->parsed()) {
            std::mt19937_64 rng(seed ? seed : 0x5bd1e995);
            std::uniform_real_distribution<double> dist(-10.0, 10.0);
            double worst = 0.0;
            for (int rep = 0; rep < tr_samples; ++rep) {
                std::vector<double> a(tr_k);
                for (auto& v : a) v = dist(rng);
                auto [sd, cd] = si_co_definitional(a);
                auto [sc, cc] = si_co_closed(a);
                worst = std::max({worst, std::abs(sd - sc), std::abs(cd - cc)});
            }
            const double tol = std::ldexp(1e-12, static_cast<int>(tr_k));
            std::printf("k %zu  samples %d  max |definitional - closed| = %.3e (tol %.1e)\n",
                        tr_k, tr_samples, worst, tol);
            return worst <= tol ? 0 : 1;
        } else if (adm_cmd->parsed()) {
            MomentSpec spec;
            spec.p = 4;
            spec.T = adm_T;
            spec.H = resolve_auto(adm_H, adm_T, "--H");
            spec.U = resolve_auto(adm_U, adm_T, "--U");
            AdmissibilityId id;
            if (adm_case == "thm1-21") id = AdmissibilityId::thm1_21;
            else if (adm_case == "thm1-remark2a") id = AdmissibilityId::thm1_remark2a;
            else if (adm_case == "thm1-remark2b") id = AdmissibilityId::thm1_remark2b;
            else if (adm_case == "cor1-24") id = AdmissibilityId::cor1_24;
            else if (adm_case == "thm2") id = AdmissibilityId::thm2;
            else if (adm_case == "cor2") id = AdmissibilityId::cor2;
            else throw CLI::ValidationError("--case", "unknown case id");
            const auto result = check_admissibility(spec, id);
            std::printf("case %s  T %.6g  H %.6g  U %.6g\n",
                        admissibility_name(result.case_id), spec.T, spec.H, spec.U);
            for (std::size_t i = 0; i < result.margins.size(); ++i)
                std::printf("  %-24s margin %+.4f\n", result.condition_names[i].c_str(),
                            result.margins[i]);
            std::printf("%s\n", result.passes() ? "admissible" : "NOT admissible");
            return result.passes() ? 0 : 1;
        } else if (verify_cmd->parsed()) {
            AcceptanceSuite acc(threads);
            std::vector<int> ids;
            if (verify_suite == "quick") ids = {1, 2, 3, 6, 7, 8, 9};
            else if (verify_suite != "all") {
                std::string cur;
                for (char c : verify_suite + ",") {
                    if (c == ',') {
                        if (!cur.empty()) ids.push_back(std::stoi(cur));
                        cur.clear();
                    } else cur += c;
                }
            }
            return acc.run_suite(ids) == 0 ? 0 : 1;
        }
    } catch (const resource_error& e) {
        std::fprintf(stderr, "resource error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
