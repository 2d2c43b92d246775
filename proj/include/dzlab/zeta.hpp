#pragma once

// |zeta(1/2+iu)|^2 on the critical line (Riemann-Siegel main sum with up
// to two correction terms for large u, Euler-Maclaurin below the
// crossover), the mean-square error term E(t) by cached quadrature, and
// the explicit two-sum expansion of E(t) with arsinh phases.

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "dzlab/arith.hpp"
#include "dzlab/common.hpp"
#include "dzlab/gauss.hpp"
#include "dzlab/rs_remainder.hpp"

namespace dzlab {

struct CriticalLineConfig {
    int rs_correction_order = 1;      // 0, 1 or 2
    double target_rel_err = 1e-8;     // for u >= 50

    void validate() const {
        if (rs_correction_order < 0 || rs_correction_order > 2)
            throw std::invalid_argument("CriticalLineConfig: rs_correction_order in {0,1,2}");
    }
    std::uint64_t hash() const {
        return 0x9e3779b97f4a7c15ull * (static_cast<std::uint64_t>(rs_correction_order) + 1) ^
               static_cast<std::uint64_t>(target_rel_err * 1e12);
    }
};

namespace detail {

// Riemann-Siegel theta from the Stirling series of log Gamma(1/4 + iu/2),
// five correction terms; good to ~u^{-11} for u >= 20.
inline double rs_theta(double u) {
    const double u2 = u * u;
    return 0.5 * u * std::log(u / (2.0 * M_PI)) - 0.5 * u - M_PI / 8.0 +
           1.0 / (48.0 * u) + 7.0 / (5760.0 * u * u2) +
           31.0 / (80640.0 * u * u2 * u2) + 127.0 / (430080.0 * u * u2 * u2 * u2) +
           511.0 / (1216512.0 * u * u2 * u2 * u2 * u2);
}

inline constexpr double kRsEmCrossover = 50.0;

}  // namespace detail

// Z(u)^2 via the Riemann-Siegel main sum plus cfg.rs_correction_order
// remainder terms.  Intended for u >= 50.
inline double z2_riemann_siegel(double u, int order) {
    const double tau = std::sqrt(u / (2.0 * M_PI));
    const auto nu = static_cast<std::uint64_t>(tau);
    const double p = tau - static_cast<double>(nu);
    const double th = detail::rs_theta(u);
    KahanSum acc;
    for (std::uint64_t n = 1; n <= nu; ++n) {
        const double dn = static_cast<double>(n);
        acc.add(std::cos(th - u * std::log(dn)) / std::sqrt(dn));
    }
    double z = 2.0 * acc.value();
    double corr = 0.0;
    if (order >= 0) corr += detail::rs_psi(p);
    if (order >= 1) corr += -detail::rs_psi3(p) / (96.0 * M_PI * M_PI) / tau;
    if (order >= 2)
        corr += (detail::rs_psi2(p) / (64.0 * M_PI * M_PI) +
                 detail::rs_psi6(p) / (18432.0 * M_PI * M_PI * M_PI * M_PI)) /
                (tau * tau);
    const double sign = (nu & 1) ? 1.0 : -1.0;  // (-1)^{nu+1}
    z += sign * corr / std::sqrt(tau);
    return z * z;
}

// |zeta(1/2+iu)|^2 by Euler-Maclaurin with 12 Bernoulli correction terms.
// Slow but accurate at any u >= 0; serves as the small-u branch and as the
// independent oracle for the Riemann-Siegel branch.
inline double abs_zeta_sq_euler_maclaurin(double u) {
    using C = std::complex<double>;
    const C s(0.5, u);
    const auto M = static_cast<std::uint64_t>(std::max(24.0, 0.5 * u + 24.0));
    C sum(0.0, 0.0);
    for (std::uint64_t n = 1; n < M; ++n) {
        const double dn = static_cast<double>(n);
        sum += std::exp(-0.5 * std::log(dn)) *
               std::polar(1.0, -u * std::log(dn));
    }
    const double dM = static_cast<double>(M);
    const C Ms = std::polar(std::pow(dM, -0.5), -u * std::log(dM));  // M^{-s}
    sum += Ms * dM / (s - 1.0);  // M^{1-s}/(s-1)
    sum += 0.5 * Ms;
    // Bernoulli tail: B_{2k}/(2k)! * s(s+1)...(s+2k-2) * M^{-s-2k+1}
    static const double kB2k[] = {1.0 / 6,      -1.0 / 30,     1.0 / 42,
                                  -1.0 / 30,    5.0 / 66,      -691.0 / 2730,
                                  7.0 / 6,      -3617.0 / 510, 43867.0 / 798,
                                  -174611.0 / 330, 854513.0 / 138, -236364091.0 / 2730};
    C pochhammer = s;
    C Mpow = Ms / dM;  // M^{-s-1}
    double fact = 2.0;  // (2k)!
    for (int k = 1; k <= 12; ++k) {
        sum += kB2k[k - 1] / fact * pochhammer * Mpow;
        // extend s(s+1)...(s+2k-2) -> ...(s+2k), (2k)! -> (2k+2)!
        pochhammer *= (s + C(2.0 * k - 1.0)) * (s + C(2.0 * k));
        fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
        Mpow /= dM * dM;
    }
    return std::norm(sum);
}

// Z(u)^2 = |zeta(1/2+iu)|^2: Euler-Maclaurin below u = 50, Riemann-Siegel
// above.  Always >= 0.
inline double abs_zeta_half_sq(double u, const CriticalLineConfig& cfg = {}) {
    if (!(u >= 0.0)) throw std::invalid_argument("abs_zeta_half_sq: u must be >= 0");
    cfg.validate();
    if (u < detail::kRsEmCrossover) return abs_zeta_sq_euler_maclaurin(u);
    return z2_riemann_siegel(u, cfg.rs_correction_order);
}

// ---------------------------------------------------------------------------
// IntegralCache: cumulative integral of Z(u)^2 from 0 on a fixed grid so
// that nearby t reuse work.  Extension is single-writer; lookups on the
// frozen prefix are concurrent.  Quadrature: one 8-node Gauss-Legendre
// panel per grid step (absolute error target 1e-4 * t^{1/4}, dominated by
// the evaluator, not the rule).
// ---------------------------------------------------------------------------

class IntegralCache {
public:
    explicit IntegralCache(CriticalLineConfig cfg = {.rs_correction_order = 2},
                           double step = 0.5)
        : cfg_(cfg), step_(step) {
        cfg_.validate();
        cum_.push_back(0.0);
    }
    IntegralCache(IntegralCache&& other) noexcept
        : cfg_(other.cfg_), step_(other.step_), cum_(std::move(other.cum_)) {}
    IntegralCache(const IntegralCache&) = delete;
    IntegralCache& operator=(const IntegralCache&) = delete;

    const CriticalLineConfig& config() const { return cfg_; }
    double step() const { return step_; }

    // Cumulative integral up to grid index k (thread-safe for k below the
    // already-extended range).
    double cumulative(std::size_t k) const {
        std::shared_lock lock(mutex_);
        return cum_.at(k);
    }
    std::size_t panels() const {
        std::shared_lock lock(mutex_);
        return cum_.size() - 1;
    }

    // Extends the grid to cover [0, t].
    void ensure(double t, unsigned threads = default_threads()) {
        const auto need = static_cast<std::size_t>(std::ceil(t / step_)) + 1;
        {
            std::shared_lock lock(mutex_);
            if (cum_.size() > need) return;
        }
        std::unique_lock lock(mutex_);
        if (cum_.size() > need) return;
        const std::size_t first = cum_.size() - 1;
        const std::size_t count = need - cum_.size() + 1;
        const GaussRule rule = gauss_rule(8);
        auto vals = run_blocks<double>(count, threads, [&](std::size_t b) {
            const double a = (first + b) * step_;
            return gauss_panel(rule, a, a + step_,
                               [&](double u) { return abs_zeta_half_sq(u, cfg_); });
        });
        KahanSum acc;
        acc.add(cum_.back());
        for (double v : vals) {
            acc.add(v);
            cum_.push_back(acc.value());
        }
    }

    // Integral of Z^2 over [0, t]; extends the grid if needed.
    double integral_to(double t, unsigned threads = default_threads()) {
        ensure(t, threads);
        std::shared_lock lock(mutex_);
        const auto k = static_cast<std::size_t>(t / step_);
        double base = cum_[k];
        const double lo = k * step_;
        if (t > lo)
            base += gauss_panel(gauss_rule(8), lo, t,
                                [&](double u) { return abs_zeta_half_sq(u, cfg_); });
        return base;
    }

    // Versioned persistence: header {magic "EINT", version, cfg hash,
    // grid step}, then (t, cumulative) float64 pairs, little-endian.
    void save(const std::string& path) const {
        std::shared_lock lock(mutex_);
        detail::FilePtr f(std::fopen(path.c_str(), "wb"));
        if (!f) throw std::runtime_error("IntegralCache::save: cannot open " + path);
        const std::uint64_t magic = 0x544e4945ull;  // "EINT"
        const std::uint64_t version = 1;
        const std::uint64_t cfg_hash = cfg_.hash();
        if (std::fwrite(&magic, 8, 1, f.get()) != 1 ||
            std::fwrite(&version, 8, 1, f.get()) != 1 ||
            std::fwrite(&cfg_hash, 8, 1, f.get()) != 1 ||
            std::fwrite(&step_, 8, 1, f.get()) != 1)
            throw std::runtime_error("IntegralCache::save: short write");
        for (std::size_t k = 0; k < cum_.size(); ++k) {
            const double pair[2] = {k * step_, cum_[k]};
            if (std::fwrite(pair, sizeof(pair), 1, f.get()) != 1)
                throw std::runtime_error("IntegralCache::save: short write");
        }
    }

    static IntegralCache load(const std::string& path, CriticalLineConfig cfg = {
                                  .rs_correction_order = 2}) {
        detail::FilePtr f(std::fopen(path.c_str(), "rb"));
        if (!f) throw std::runtime_error("IntegralCache::load: cannot open " + path);
        std::uint64_t magic, version, cfg_hash;
        double step;
        if (std::fread(&magic, 8, 1, f.get()) != 1 || magic != 0x544e4945ull)
            throw std::runtime_error("IntegralCache::load: bad magic in " + path);
        if (std::fread(&version, 8, 1, f.get()) != 1 || version != 1)
            throw std::runtime_error("IntegralCache::load: unsupported version");
        if (std::fread(&cfg_hash, 8, 1, f.get()) != 1 ||
            std::fread(&step, 8, 1, f.get()) != 1)
            throw std::runtime_error("IntegralCache::load: truncated header");
        if (cfg_hash != cfg.hash())
            throw state_error("IntegralCache::load: cache built with a different config");
        IntegralCache cache(cfg, step);
        cache.cum_.clear();
        double pair[2];
        while (std::fread(pair, sizeof(pair), 1, f.get()) == 1)
            cache.cum_.push_back(pair[1]);
        if (cache.cum_.empty()) cache.cum_.push_back(0.0);
        return cache;
    }

private:
    CriticalLineConfig cfg_;
    double step_;
    std::vector<double> cum_;
    mutable std::shared_mutex mutex_;
};

// E(t) = int_0^t |zeta(1/2+iu)|^2 du - t log(t/2pi) - (2 gamma - 1) t.
inline double big_e_exact(double t, const CriticalLineConfig& cfg, IntegralCache& cache,
                          unsigned threads = default_threads()) {
    if (!(t >= 2.0)) throw std::invalid_argument("big_e_exact: t must be >= 2");
    if (cfg.hash() != cache.config().hash())
        throw state_error("big_e_exact: config differs from the cache grid");
    const double integral = cache.integral_to(t, threads);
    return integral - t * std::log(t / (2.0 * M_PI)) -
           (2.0 * MathConstants::euler_gamma - 1.0) * t;
}

// ---------------------------------------------------------------------------
// Explicit expansion E(t) ~ Sigma1(t) + Sigma2(t):
//   Sigma1 = (1/sqrt2) sum_{n<=N} h(t,n) cos(f(t,n)),
//   Sigma2 = -2 sum_{n<=N'} d(n) n^{-1/2} (log t/2pi n)^{-1}
//                cos(t log(t/2pi n) - t + pi/4),
// with g = arsinh sqrt(pi n / 2t),
//      f = 2 t g + sqrt(2 pi n t + pi^2 n^2) - pi/4,
//      h = (-1)^n d(n) n^{-1/2} (t/2pi n + 1/4)^{-1/4} / g,
//      N' = t/2pi + N/2 - sqrt(N^2/4 + N t/2pi),  t/2 <= N <= 2t.
// ---------------------------------------------------------------------------

struct AtkinsonEval {
    double t = 0.0;
    std::uint64_t n_cap = 0;
    double n_prime = 0.0;
    double sigma1 = 0.0;
    double sigma2 = 0.0;
    double approx_e = 0.0;  // sigma1 + sigma2
};

inline double atkinson_g(double t, double n) {
    return std::asinh(std::sqrt(M_PI * n / (2.0 * t)));
}
inline double atkinson_f(double t, double n) {
    return 2.0 * t * atkinson_g(t, n) +
           std::sqrt(2.0 * M_PI * n * t + M_PI * M_PI * n * n) - M_PI / 4.0;
}
inline double atkinson_h(double t, double n, double dn) {
    const double sign = (static_cast<std::uint64_t>(n) & 1) ? -1.0 : 1.0;
    const double base = t / (2.0 * M_PI * n) + 0.25;
    return sign * dn / std::sqrt(n) / std::sqrt(std::sqrt(base)) / atkinson_g(t, n);
}
inline double atkinson_n_prime(double t, double n_cap) {
    return t / (2.0 * M_PI) + 0.5 * n_cap -
           std::sqrt(0.25 * n_cap * n_cap + n_cap * t / (2.0 * M_PI));
}

inline AtkinsonEval atkinson_terms(double t, std::uint64_t n_cap,
                                   const DivisorTable& table) {
    if (!(t >= 2.0)) throw std::invalid_argument("atkinson_terms: t must be >= 2");
    const double nc = static_cast<double>(n_cap);
    if (nc < 0.5 * t - 1.0 || nc > 2.0 * t)
        throw std::invalid_argument("atkinson_terms: n_cap outside [t/2, 2t]");
    if (n_cap > table.limit)
        throw std::out_of_range("atkinson_terms: n_cap exceeds the sieve");

    AtkinsonEval ev;
    ev.t = t;
    ev.n_cap = n_cap;
    ev.n_prime = atkinson_n_prime(t, nc);

    KahanSum s1;
    for (std::uint64_t n = 1; n <= n_cap; ++n) {
        const double dn = static_cast<double>(n);
        s1.add(atkinson_h(t, dn, table.d[n]) * std::cos(atkinson_f(t, dn)));
    }
    ev.sigma1 = s1.value() / std::sqrt(2.0);

    const auto np = static_cast<std::uint64_t>(ev.n_prime);
    KahanSum s2;
    for (std::uint64_t n = 1; n <= np; ++n) {
        const double dn = static_cast<double>(n);
        const double lg = std::log(t / (2.0 * M_PI * dn));
        s2.add(table.d[n] / std::sqrt(dn) / lg *
               std::cos(t * lg - t + M_PI / 4.0));
    }
    ev.sigma2 = -2.0 * s2.value();
    ev.approx_e = ev.sigma1 + ev.sigma2;
    return ev;
}

// Convenience overload that sieves internally; for interval work pass a
// shared DivisorTable instead.
inline AtkinsonEval atkinson_terms(double t, std::uint64_t n_cap) {
    const DivisorTable table = sieve_divisors(std::max<std::uint64_t>(n_cap, 8));
    return atkinson_terms(t, n_cap, table);
}

inline double big_e_atkinson(double t, std::uint64_t n_cap, const DivisorTable& table) {
    return atkinson_terms(t, n_cap, table).approx_e;
}
inline double big_e_atkinson(double t, std::uint64_t n_cap) {
    return atkinson_terms(t, n_cap).approx_e;
}

}  // namespace dzlab
