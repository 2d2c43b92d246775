#pragma once

// Short-interval moment integrals of Delta, Delta* and E; the mean-square
// main terms; the fourth-moment main terms in quadruple and diagonal form;
// hypothesis (admissibility) checking; and the classical mean-square ratio
// diagnostics.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dzlab/arith.hpp"
#include "dzlab/common.hpp"
#include "dzlab/gauss.hpp"
#include "dzlab/quadruples.hpp"
#include "dzlab/zeta.hpp"

namespace dzlab {

enum class MomentFamily { delta, delta_star, zeta_e };

inline const char* family_name(MomentFamily f) {
    switch (f) {
        case MomentFamily::delta: return "delta";
        case MomentFamily::delta_star: return "delta_star";
        default: return "zeta_e";
    }
}

struct MomentSpec {
    MomentFamily family = MomentFamily::delta;
    int p = 2;              // 1, 2 or 4
    double T = 2.0;
    double H = 1.0;
    double U = 1.0;
    double y_const = 0.1;   // c in y = c (T/U)^{1/4}

    double y() const { return y_const * std::pow(T / U, 0.25); }

    void validate() const {
        if (!(T >= 2.0)) throw std::invalid_argument("MomentSpec: T must be >= 2");
        if (!(H > 0.0) || H > T)
            throw std::invalid_argument("MomentSpec: need 0 < H <= T");
        if (!(U >= 0.0)) throw std::invalid_argument("MomentSpec: U must be >= 0");
        if (p != 1 && p != 2 && p != 4)
            throw std::invalid_argument("MomentSpec: p must be 1, 2 or 4");
    }
};

struct MomentOptions {
    unsigned threads = default_threads();
    int gauss_order = 8;       // for the piecewise direct integrals
    double zeta_panel = 2.0;   // panel length for E-family quadrature
    double atkinson_cap_ratio = 1.0;  // n_cap = floor(cap_ratio * t)
};

struct MomentReport {
    MomentSpec spec;
    double direct_value = 0.0;
    std::optional<double> main_quadruple;
    std::optional<double> main_diagonal;
    double normalizer = 0.0;            // H U^2 ln^6(T/U^2)
    double evaluator_error_budget = 0.0;
    std::uint64_t panel_count = 0;

    // Ratios are always recomputed from the stored fields.
    double ratio_direct_to_normalizer() const {
        return normalizer > 0 ? direct_value / normalizer : 0.0;
    }
    std::optional<double> ratio_direct_to_diagonal() const {
        if (!main_diagonal || *main_diagonal == 0.0) return std::nullopt;
        return direct_value / *main_diagonal;
    }
    std::optional<double> ratio_quadruple_to_diagonal() const {
        if (!main_quadruple || !main_diagonal || *main_diagonal == 0.0)
            return std::nullopt;
        return *main_quadruple / *main_diagonal;
    }
};

inline double moment_normalizer(const MomentSpec& spec) {
    const double l = std::log(spec.T / (spec.U * spec.U));
    return spec.H * spec.U * spec.U * std::pow(l, 6);
}

// ---------------------------------------------------------------------------
// Direct short-interval moments  int_T^{T+H} (F(x+U) - F(x))^p dx.
//
// For delta / delta_star the integrand is piecewise smooth with jumps at
// the points where floor(x) or floor(x+U) (resp. floor(4t), floor(4(t+U)))
// changes; every smooth piece is integrated with a fixed Gauss-Legendre
// rule, pieces are reduced in ascending order with compensated summation,
// and blocks are distributed over threads with a decomposition that does
// not depend on the thread count.
// ---------------------------------------------------------------------------

namespace detail {

inline double ipow(double v, int p) {
    switch (p) {
        case 1: return v;
        case 2: return v * v;
        default: { double v2 = v * v; return v2 * v2; }
    }
}

// Integrates (F(x+U)-F(x))^p over [T, T+H] where F has jumps on the
// lattice (1/den) * Z; smooth part x (log x + 2 gamma - 1) scaled for
// delta_star by den = 4 on the prefix argument.
template <typename Diff>
double piecewise_moment(double T, double H, double U, int p, int den,
                        const GaussRule& rule, unsigned threads,
                        std::uint64_t* panel_count, Diff&& diff) {
    // Breakpoints: k/den and k/den - U for integer k.  When U*den is an
    // integer the two lattices coincide.
    const double udden = U * den;
    const bool aligned = std::abs(udden - std::round(udden)) < 1e-12;
    const double frac = aligned ? 0.0 : (std::ceil(udden) - udden) / den;

    const std::int64_t k0 = static_cast<std::int64_t>(std::floor(T * den));
    const std::int64_t k1 = static_cast<std::int64_t>(std::floor((T + H) * den));
    const std::int64_t cells = k1 - k0 + 1;
    const std::int64_t cells_per_block = 1 << 14;
    const std::size_t nblocks = (cells + cells_per_block - 1) / cells_per_block;
    std::uint64_t pieces = 0;

    auto integrate_cell = [&](std::int64_t k, KahanSum& acc) -> std::uint64_t {
        const double lo = std::max(T, static_cast<double>(k) / den);
        const double hi = std::min(T + H, static_cast<double>(k + 1) / den);
        if (!(hi > lo)) return 0;
        std::uint64_t n = 0;
        auto add_piece = [&](double a, double b) {
            if (b > a) {
                acc.add(gauss_panel(rule, a, b, [&](double x) { return ipow(diff(x), p); }));
                ++n;
            }
        };
        if (aligned || frac == 0.0) {
            add_piece(lo, hi);
        } else {
            const double split = (static_cast<double>(k) + frac * den) / den;
            if (split <= lo || split >= hi) {
                add_piece(lo, hi);
            } else {
                add_piece(lo, split);
                add_piece(split, hi);
            }
        }
        return n;
    };

    auto results = run_blocks<std::pair<double, std::uint64_t>>(
        nblocks, threads, [&](std::size_t b) {
            KahanSum acc;
            std::uint64_t n = 0;
            const std::int64_t lo = k0 + static_cast<std::int64_t>(b) * cells_per_block;
            const std::int64_t hi = std::min<std::int64_t>(lo + cells_per_block, k1 + 1);
            for (std::int64_t k = lo; k < hi; ++k) n += integrate_cell(k, acc);
            return std::make_pair(acc.value(), n);
        });
    KahanSum total;
    for (const auto& [v, n] : results) {
        total.add(v);
        pieces += n;
    }
    if (panel_count) *panel_count = pieces;
    return total.value();
}

inline double smooth_main(double x) {
    return x * (std::log(x) + 2.0 * MathConstants::euler_gamma - 1.0);
}

}  // namespace detail

inline MomentReport moment_integral(const MomentSpec& spec, const DivisorTable& table,
                                    const MomentOptions& opts = {}) {
    spec.validate();
    MomentReport report;
    report.spec = spec;
    report.normalizer = moment_normalizer(spec);
    if (spec.U == 0.0) return report;  // identical arguments

    const GaussRule rule = gauss_rule(opts.gauss_order);
    const double T = spec.T, H = spec.H, U = spec.U;

    if (spec.family == MomentFamily::delta) {
        if (static_cast<double>(table.limit) < std::ceil(T + H + U))
            throw std::out_of_range("moment_integral: sieve must cover T+H+U");
        auto diff = [&](double x) {
            const auto a = static_cast<std::uint64_t>(x);
            const auto b = static_cast<std::uint64_t>(x + U);
            return static_cast<double>(table.prefix[b] - table.prefix[a]) -
                   (detail::smooth_main(x + U) - detail::smooth_main(x));
        };
        report.direct_value = detail::piecewise_moment(
            T, H, U, spec.p, 1, rule, opts.threads, &report.panel_count, diff);
    } else if (spec.family == MomentFamily::delta_star) {
        if (static_cast<double>(table.limit) < std::ceil(4.0 * (T + H + U)))
            throw std::out_of_range("moment_integral: sieve must cover 4(T+H+U)");
        auto diff = [&](double t) {
            const auto a = static_cast<std::uint64_t>(4.0 * t);
            const auto b = static_cast<std::uint64_t>(4.0 * (t + U));
            return 0.5 * static_cast<double>(table.alt_prefix[b] - table.alt_prefix[a]) -
                   (detail::smooth_main(t + U) - detail::smooth_main(t));
        };
        report.direct_value = detail::piecewise_moment(
            T, H, U, spec.p, 4, rule, opts.threads, &report.panel_count, diff);
    } else {
        // E-family: sample the Atkinson evaluator on a fixed panel grid
        // (no integer breakpoints).  When U is a multiple of the panel
        // length the nodes at t and t+U coincide, so E is evaluated once
        // per node on the extended range.
        const double h = opts.zeta_panel;
        const auto npanels = static_cast<std::size_t>(std::ceil(H / h));
        const bool shared = std::abs(U / h - std::round(U / h)) < 1e-12;
        const std::size_t shift = shared ? static_cast<std::size_t>(std::round(U / h)) : 0;
        const std::size_t total_panels = npanels + (shared ? shift : 0);
        if (static_cast<double>(table.limit) <
            opts.atkinson_cap_ratio * (T + H + U) + 1)
            throw std::out_of_range("moment_integral: sieve must cover the Atkinson cap");

        auto eval_e = [&](double t) {
            const auto cap = static_cast<std::uint64_t>(opts.atkinson_cap_ratio * t);
            return big_e_atkinson(t, cap, table);
        };

        const int ord = rule.order;
        std::vector<double> nodes(total_panels * ord);
        auto node_at = [&](std::size_t k, int j) {
            return T + h * (static_cast<double>(k) + 0.5 + 0.5 * rule.nodes[j]);
        };
        run_blocks<int>(total_panels, opts.threads, [&](std::size_t k) {
            for (int j = 0; j < ord; ++j) nodes[k * ord + j] = eval_e(node_at(k, j));
            return 0;
        });
        std::vector<double> nodes_u;
        if (!shared) {
            nodes_u.resize(npanels * ord);
            run_blocks<int>(npanels, opts.threads, [&](std::size_t k) {
                for (int j = 0; j < ord; ++j)
                    nodes_u[k * ord + j] = eval_e(node_at(k, j) + U);
                return 0;
            });
        }
        KahanSum acc;
        for (std::size_t k = 0; k < npanels; ++k) {
            const double lo = T + h * static_cast<double>(k);
            const double hi = std::min(T + H, lo + h);
            const double half = 0.5 * (hi - lo);
            // last panel may be short; fall back to direct evaluation there
            const bool full = std::abs((hi - lo) - h) < 1e-9;
            KahanSum panel;
            for (int j = 0; j < ord; ++j) {
                double du, dl;
                if (full) {
                    dl = nodes[k * ord + j];
                    du = shared ? nodes[(k + shift) * ord + j] : nodes_u[k * ord + j];
                } else {
                    const double t = 0.5 * (lo + hi) + half * rule.nodes[j];
                    dl = eval_e(t);
                    du = eval_e(t + U);
                }
                panel.add(rule.weights[j] * detail::ipow(du - dl, spec.p));
            }
            acc.add(panel.value() * half);
        }
        report.direct_value = acc.value();
        report.panel_count = npanels;
        const double lt = std::log(T + H);
        report.evaluator_error_budget = 10.0 * lt * lt * H;
    }
    return report;
}

// ---------------------------------------------------------------------------
// Mean-square main terms (p = 2):
//   delta / delta_star:
//     (1/4pi^2) sum_{n<=T/2U} d^2(n) n^{-3/2}
//         int_T^{T+H} x^{1/2} * 4 sin^2(pi U sqrt(n/x)) dx
//   zeta_e:
//     (1/sqrt(2pi)) sum_{n<=T/2U} d^2(n) n^{-3/2}
//         int_T^{T+H} t^{1/2} * 4 sin^2(U sqrt(pi n / 2t)) dt
// |exp(i theta)-1|^2 is evaluated as 4 sin^2(theta/2).  The x-integral uses
// 16-node Gauss-Legendre on at most 10^3 panels (the integrand is smooth).
// The alternating sign of delta_star squares away, so it shares the delta
// form.
// ---------------------------------------------------------------------------

inline double jutila_ms_main(const MomentSpec& spec, const DivisorTable& table,
                             const MomentOptions& opts = {}) {
    spec.validate();
    if (spec.U <= 0.0) return 0.0;
    const auto ncut = static_cast<std::uint64_t>(spec.T / (2.0 * spec.U));
    if (ncut > table.limit)
        throw std::out_of_range("jutila_ms_main: sieve must cover T/2U");
    if (ncut == 0) return 0.0;

    std::vector<double> w(ncut + 1), sq(ncut + 1);
    for (std::uint64_t n = 1; n <= ncut; ++n) {
        const double dn = table.d[n];
        const double x = static_cast<double>(n);
        w[n] = dn * dn / (x * std::sqrt(x));
        sq[n] = std::sqrt(x);
    }
    const bool zeta = spec.family == MomentFamily::zeta_e;
    auto integrand = [&](double x) {
        const double amp = zeta ? spec.U * std::sqrt(M_PI / (2.0 * x))
                                : M_PI * spec.U / std::sqrt(x);
        KahanSum s;
        for (std::uint64_t n = 1; n <= ncut; ++n) {
            const double sn = std::sin(amp * sq[n]);
            s.add(w[n] * sn * sn);
        }
        return std::sqrt(x) * 4.0 * s.value();
    };
    const std::size_t panels = 1000;
    const double integral = reduce_blocks(panels, opts.threads, [&](std::size_t k) {
        const double h = spec.H / panels;
        const double lo = spec.T + h * static_cast<double>(k);
        return gauss_panel(gauss_rule(16), lo, lo + h, integrand);
    });
    const double c = zeta ? 1.0 / std::sqrt(2.0 * M_PI)
                          : 1.0 / (4.0 * M_PI * M_PI);
    return c * integral;
}

// ---------------------------------------------------------------------------
// Fourth-moment main terms.
//   quadruple form over two_two solutions n_j <= y:
//     delta:  (3/2pi^4) sum Prod d(n_j) (Prod n_j)^{-3/4}
//                 int_T^{T+H} x Prod sin(pi U sqrt(n_j)/sqrt(x)) dx
//     zeta_e: (12/pi)   sum ... int t Prod sin(U sqrt(pi n_j)/sqrt(2t)) dt
//   diagonal form:
//     delta:  (3/pi^4)  int x ( sum_{n<=y} d^2(n) n^{-3/2}
//                               sin^2(pi U sqrt n / sqrt x) )^2 dx
//     zeta_e: (24/pi)   int t ( sum sin^2(U sqrt(pi n)/sqrt(2t)) )^2 dt
// Each ordered quadruple counts once; the diagonal double sum follows the
// per-matching convention (the all-equal quadruple appears under both
// matchings).
// ---------------------------------------------------------------------------

namespace detail {

// Panel count adapted to the total phase sweep of the slowest-decaying
// oscillator over [T, T+H].
inline std::size_t sweep_panels(double max_arg_at_T, double T, double H) {
    const double sweep = max_arg_at_T * (1.0 - std::sqrt(T / (T + H)));
    return std::clamp<std::size_t>(static_cast<std::size_t>(2.0 * sweep) + 16, 16, 4096);
}

}  // namespace detail

// Sum over every ordered two_two solution with n_j <= y.  The equal-pair
// (diagonal) quadruples collapse pointwise to 2 S2(x)^2 - S4(x) with
//   S2(x) = sum_{n<=y} d^2(n) n^{-3/2} sin^2(arg_n),
//   S4(x) = sum_{n<=y} d^4(n) n^{-3}  sin^4(arg_n),
// so they are integrated in closed form; `families` supplies the
// off-diagonal solutions (diagonal entries in the list are skipped).
inline double main_quadruple(const MomentSpec& spec,
                             const std::vector<QuadrupleFamily>& families,
                             const DivisorTable& table,
                             const MomentOptions& opts = {}) {
    spec.validate();
    if (spec.p != 4)
        throw std::invalid_argument("main_quadruple: p must be 4");
    if (spec.family == MomentFamily::delta_star)
        throw std::invalid_argument("main_quadruple: no quadruple form for delta_star");
    const double y = spec.y();
    if (y < 1.0)
        throw std::invalid_argument("main_quadruple: y < 1 leaves an empty sum");
    const auto ycut = static_cast<std::uint64_t>(y);
    if (ycut > table.limit)
        throw std::out_of_range("main_quadruple: sieve must cover y");

    const bool zeta = spec.family == MomentFamily::zeta_e;
    const double T = spec.T, H = spec.H, U = spec.U;
    const GaussRule rule = gauss_rule(16);
    auto amp_of = [&](double n) {
        return zeta ? U * std::sqrt(M_PI * n / 2.0) : M_PI * U * std::sqrt(n);
    };

    // diagonal part
    std::vector<double> w2(ycut + 1), w4(ycut + 1), amp(ycut + 1);
    for (std::uint64_t n = 1; n <= ycut; ++n) {
        const double dn = table.d[n];
        const double x = static_cast<double>(n);
        w2[n] = dn * dn / (x * std::sqrt(x));
        w4[n] = w2[n] * w2[n];
        amp[n] = amp_of(x);
    }
    const std::size_t dpanels =
        detail::sweep_panels(2.0 * amp[ycut] / std::sqrt(T), T, H);
    const double diag = reduce_blocks(dpanels, opts.threads, [&](std::size_t k) {
        const double h = H / dpanels;
        const double lo = T + h * static_cast<double>(k);
        return gauss_panel(rule, lo, lo + h, [&](double x) {
            const double r = 1.0 / std::sqrt(x);
            KahanSum s2, s4;
            for (std::uint64_t n = 1; n <= ycut; ++n) {
                const double sn = std::sin(amp[n] * r);
                const double sn2 = sn * sn;
                s2.add(w2[n] * sn2);
                s4.add(w4[n] * sn2 * sn2);
            }
            const double v2 = s2.value();
            return x * (2.0 * v2 * v2 - s4.value());
        });
    });

    // off-diagonal families
    auto parts = run_blocks<double>(families.size(), opts.threads, [&](std::size_t i) {
        const QuadrupleFamily& f = families[i];
        if (f.diagonal()) return 0.0;
        double coeff = static_cast<double>(f.multiplicity);
        double max_amp = 0.0;
        double a[4];
        for (int k = 0; k < 4; ++k) {
            const double n = static_cast<double>(f.ns[k]);
            coeff *= table.d[f.ns[k]] / (std::sqrt(n) * std::sqrt(std::sqrt(n)));
            a[k] = amp_of(n);
            max_amp = std::max(max_amp, a[k]);
        }
        const std::size_t panels = detail::sweep_panels(max_amp / std::sqrt(T), T, H);
        const double integral = gauss_panels(rule, T, T + H, panels, [&](double x) {
            const double r = 1.0 / std::sqrt(x);
            return x * std::sin(a[0] * r) * std::sin(a[1] * r) *
                   std::sin(a[2] * r) * std::sin(a[3] * r);
        });
        return coeff * integral;
    });
    KahanSum acc;
    acc.add(diag);
    for (double v : parts) acc.add(v);
    const double c = zeta ? 12.0 / M_PI : 3.0 / (2.0 * std::pow(M_PI, 4));
    return c * acc.value();
}

inline double main_diagonal(const MomentSpec& spec, const DivisorTable& table,
                            const MomentOptions& opts = {}) {
    spec.validate();
    if (spec.p != 4)
        throw std::invalid_argument("main_diagonal: p must be 4");
    if (spec.family == MomentFamily::delta_star)
        throw std::invalid_argument("main_diagonal: no diagonal form for delta_star");
    const double y = spec.y();
    if (y < 1.0)
        throw std::invalid_argument("main_diagonal: y < 1 leaves an empty sum");
    const auto ycut = static_cast<std::uint64_t>(y);
    if (ycut > table.limit)
        throw std::out_of_range("main_diagonal: sieve must cover y");

    const bool zeta = spec.family == MomentFamily::zeta_e;
    const double T = spec.T, H = spec.H, U = spec.U;
    std::vector<double> w(ycut + 1), amp(ycut + 1);
    double max_amp = 0.0;
    for (std::uint64_t n = 1; n <= ycut; ++n) {
        const double dn = table.d[n];
        const double x = static_cast<double>(n);
        w[n] = dn * dn / (x * std::sqrt(x));
        amp[n] = zeta ? U * std::sqrt(M_PI * x / 2.0) : M_PI * U * std::sqrt(x);
        max_amp = std::max(max_amp, amp[n]);
    }
    const std::size_t panels = detail::sweep_panels(2.0 * max_amp / std::sqrt(T), T, H);
    const double integral = reduce_blocks(panels, opts.threads, [&](std::size_t k) {
        const double h = H / panels;
        const double lo = T + h * static_cast<double>(k);
        return gauss_panel(gauss_rule(16), lo, lo + h, [&](double x) {
            const double r = 1.0 / std::sqrt(x);
            KahanSum s;
            for (std::uint64_t n = 1; n <= ycut; ++n) {
                const double sn = std::sin(amp[n] * r);
                s.add(w[n] * sn * sn);
            }
            const double inner = s.value();
            return x * inner * inner;
        });
    });
    const double c = zeta ? 24.0 / M_PI : 3.0 / std::pow(M_PI, 4);
    return c * integral;
}

// ---------------------------------------------------------------------------
// Classical mean-square ratios:
//   delta:  (1/T^{3/2}) int_1^T Delta^2(x) dx   / tong_const
//   zeta_e: (1/T^{3/2}) int_2^T E^2(t) dt       / meurman_const
// The E integral uses the Atkinson evaluator with n_cap = floor(t).
// ---------------------------------------------------------------------------

inline double classical_ms_ratio_delta(double T, const DivisorTable& table,
                                       const MomentOptions& opts = {}) {
    if (static_cast<double>(table.limit) < T)
        throw std::out_of_range("classical_ms_ratio: sieve must cover T");
    const auto units = static_cast<std::uint64_t>(T) - 1;
    const std::uint64_t per_block = 1 << 15;
    const std::size_t nblocks = (units + per_block - 1) / per_block;
    const GaussRule rule = gauss_rule(8);
    const double integral = reduce_blocks(nblocks, opts.threads, [&](std::size_t b) {
        KahanSum acc;
        const std::uint64_t lo = 1 + b * per_block;
        const std::uint64_t hi = std::min<std::uint64_t>(lo + per_block, units + 1);
        for (std::uint64_t n = lo; n < hi; ++n) {
            const double pref = static_cast<double>(table.prefix[n]);
            acc.add(gauss_panel(rule, static_cast<double>(n), static_cast<double>(n + 1),
                                [&](double x) {
                                    const double v = pref - detail::smooth_main(x);
                                    return v * v;
                                }));
        }
        return acc.value();
    });
    // remainder [floor(T), T] is at most one partial unit
    KahanSum total;
    total.add(integral);
    const double ft = std::floor(T);
    if (T > ft && ft >= 1.0) {
        const double pref = static_cast<double>(table.prefix[static_cast<std::uint64_t>(ft)]);
        total.add(gauss_panel(rule, ft, T, [&](double x) {
            const double v = pref - detail::smooth_main(x);
            return v * v;
        }));
    }
    return total.value() / std::pow(T, 1.5) / MathConstants::tong_const();
}

inline double classical_ms_ratio_zeta(double T, const DivisorTable& table,
                                      const MomentOptions& opts = {}) {
    if (static_cast<double>(table.limit) < T)
        throw std::out_of_range("classical_ms_ratio: sieve must cover T (Atkinson cap)");
    const double a = 2.0;
    const double panel = 4.0;
    const auto npanels = static_cast<std::size_t>(std::ceil((T - a) / panel));
    const GaussRule rule = gauss_rule(8);
    const double integral = reduce_blocks(npanels, opts.threads, [&](std::size_t k) {
        const double lo = a + panel * static_cast<double>(k);
        const double hi = std::min(T, lo + panel);
        if (!(hi > lo)) return 0.0;
        return gauss_panel(rule, lo, hi, [&](double t) {
            const double e = big_e_atkinson(t, static_cast<std::uint64_t>(t), table);
            return e * e;
        });
    });
    return integral / std::pow(T, 1.5) / MathConstants::meurman_const();
}

// ---------------------------------------------------------------------------
// Admissibility of (T, H, U) for the various hypothesis sets.  Every
// A << B is rendered as the log-scale margin ln B - ln A >= 0 with the
// implicit constants set to 1 and epsilon = 0.01.
// ---------------------------------------------------------------------------

enum class AdmissibilityId {
    thm1_21,        // T^{3/7} << U << T^{1/2}, H <= T, H^8 U^21 >> T^17
    thm1_remark2a,  // thm1_21 plus T^{5/6} << H
    thm1_remark2b,  // T^{3/7} << U << T^{1/2}, H <= T, H^16 U^36 >> T^31
    cor1_24,        // T^{3/7} << U << T^{1/2-eps}, H <= T, H^8 U^21 >> T^{17+eps}
    thm2,           // thm1_21 plus T^{205/227} << H
    cor2,           // cor1_24 plus T^{205/227} << H
};

inline const char* admissibility_name(AdmissibilityId id) {
    switch (id) {
        case AdmissibilityId::thm1_21: return "thm1_21";
        case AdmissibilityId::thm1_remark2a: return "thm1_remark2a";
        case AdmissibilityId::thm1_remark2b: return "thm1_remark2b";
        case AdmissibilityId::cor1_24: return "cor1_24";
        case AdmissibilityId::thm2: return "thm2";
        default: return "cor2";
    }
}

struct AdmissibilityCase {
    AdmissibilityId case_id = AdmissibilityId::thm1_21;
    std::vector<std::string> condition_names;
    std::vector<double> margins;  // >= 0 means the condition holds

    bool passes() const {
        for (double m : margins)
            if (m < 0.0) return false;
        return true;
    }
};

inline AdmissibilityCase check_admissibility(const MomentSpec& spec,
                                             AdmissibilityId id) {
    constexpr double eps = 0.01;
    const double lT = std::log(spec.T), lH = std::log(spec.H), lU = std::log(spec.U);
    AdmissibilityCase out;
    out.case_id = id;
    auto cond = [&](const char* name, double margin) {
        out.condition_names.emplace_back(name);
        out.margins.push_back(margin);
    };
    cond("U >> T^{3/7}", lU - (3.0 / 7.0) * lT);
    const bool u_eps = id == AdmissibilityId::cor1_24 || id == AdmissibilityId::cor2;
    cond(u_eps ? "U << T^{1/2-eps}" : "U << T^{1/2}",
         (0.5 - (u_eps ? eps : 0.0)) * lT - lU);
    cond("H <= T", lT - lH);
    if (id == AdmissibilityId::thm1_remark2b) {
        cond("H^16 U^36 >> T^31", 16.0 * lH + 36.0 * lU - 31.0 * lT);
    } else {
        const bool t_eps = u_eps;
        cond(t_eps ? "H^8 U^21 >> T^{17+eps}" : "H^8 U^21 >> T^17",
             8.0 * lH + 21.0 * lU - (17.0 + (t_eps ? eps : 0.0)) * lT);
    }
    if (id == AdmissibilityId::thm1_remark2a)
        cond("H >> T^{5/6}", lH - (5.0 / 6.0) * lT);
    if (id == AdmissibilityId::thm2 || id == AdmissibilityId::cor2)
        cond("H >> T^{205/227}", lH - (205.0 / 227.0) * lT);
    return out;
}

}  // namespace dzlab
