#pragma once

// The divisor error term Delta(x), its alternating variant Delta*(t), and
// their truncated oscillating-series approximations.

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "dzlab/arith.hpp"
#include "dzlab/common.hpp"
#include "dzlab/dd.hpp"

namespace dzlab {

struct VoronoiParams {
    double x = 2.0;
    std::uint64_t trunc = 1;

    void validate() const {
        if (!(x >= 1.0)) throw std::invalid_argument("VoronoiParams: x must be >= 1");
        if (trunc < 1 || static_cast<double>(trunc) > x)
            throw std::invalid_argument("VoronoiParams: need 1 <= trunc <= x");
    }
};

// Delta(x) = sum_{n<=x} d(n) - x(log x + 2 gamma - 1).  Exact up to one
// floating rounding of the smooth part.  Integer x use the inclusive
// (right-limit) convention of the prefix sums.
inline double delta_exact(double x, const DivisorTable& table) {
    if (!(x >= 1.0)) throw std::invalid_argument("delta_exact: x must be >= 1");
    const auto fx = static_cast<std::uint64_t>(std::floor(x));
    if (fx > table.limit) throw std::out_of_range("delta_exact: x exceeds the sieve");
    const double smooth = x * (std::log(x) + 2.0 * MathConstants::euler_gamma - 1.0);
    return static_cast<double>(table.prefix[fx]) - smooth;
}

// Delta*(t) = (1/2) sum_{n<=4t} (-1)^n d(n) - t(log t + 2 gamma - 1).
inline double delta_star_exact(double t, const DivisorTable& table) {
    if (!(4.0 * t >= 1.0))
        throw std::invalid_argument("delta_star_exact: need 4t >= 1");
    const auto f4t = static_cast<std::uint64_t>(std::floor(4.0 * t));
    if (f4t > table.limit)
        throw std::out_of_range("delta_star_exact: 4t exceeds the sieve");
    const double smooth = t * (std::log(t) + 2.0 * MathConstants::euler_gamma - 1.0);
    return 0.5 * static_cast<double>(table.alt_prefix[f4t]) - smooth;
}

namespace detail {

// Phases above this threshold are reduced mod 2*pi in double-double;
// below it, plain double reduction already keeps ~1e-9 rad accuracy.
inline constexpr double kDDPhaseThreshold = 1.0e8;

inline double cos_phase(double nx_product, double offset) {
    // cos(4*pi*sqrt(nx) - offset)
    const double root = std::sqrt(nx_product);
    const double phase = 4.0 * M_PI * root;
    if (phase < kDDPhaseThreshold) return std::cos(phase - offset);
    DD r = dd_sqrt(nx_product);
    DD arg = dd_mul(dd_mul(kDD2Pi, 2.0), r);  // 4*pi*sqrt(nx)
    return std::cos(dd_mod_2pi(arg) - offset);
}

}  // namespace detail

// Truncated main sum
//   (x^{1/4} / (pi sqrt 2)) sum_{n<=N} d(n) n^{-3/4} cos(4 pi sqrt(nx) - pi/4)
// without any remainder model; callers compare against delta_exact.
inline double delta_voronoi(const VoronoiParams& params, const DivisorTable& table) {
    params.validate();
    if (params.trunc > table.limit)
        throw std::out_of_range("delta_voronoi: trunc exceeds the sieve");
    KahanSum acc;
    for (std::uint64_t n = 1; n <= params.trunc; ++n) {
        const double nn = static_cast<double>(n);
        const double coeff = table.d[n] / (std::sqrt(nn) * std::sqrt(std::sqrt(nn)));
        acc.add(coeff * detail::cos_phase(nn * params.x, M_PI / 4.0));
    }
    return std::sqrt(std::sqrt(params.x)) / (M_PI * std::sqrt(2.0)) * acc.value();
}

// Alternating variant with the (-1)^n weight:
//   (t^{1/4} / (sqrt 2 pi)) sum_{n<=N} (-1)^n d(n) n^{-3/4} cos(4 pi sqrt(nt) - pi/4).
// N = 0 is the empty sum.
inline double delta_star_voronoi(double t, std::uint64_t trunc,
                                 const DivisorTable& table) {
    if (!(t >= 1.0)) throw std::invalid_argument("delta_star_voronoi: t must be >= 1");
    if (static_cast<double>(trunc) > t)
        throw std::invalid_argument("delta_star_voronoi: need trunc <= t");
    if (trunc > table.limit)
        throw std::out_of_range("delta_star_voronoi: trunc exceeds the sieve");
    KahanSum acc;
    for (std::uint64_t n = 1; n <= trunc; ++n) {
        const double nn = static_cast<double>(n);
        const double sign = (n & 1) ? -1.0 : 1.0;
        const double coeff =
            sign * table.d[n] / (std::sqrt(nn) * std::sqrt(std::sqrt(nn)));
        acc.add(coeff * detail::cos_phase(nn * t, M_PI / 4.0));
    }
    return std::sqrt(std::sqrt(t)) / (std::sqrt(2.0) * M_PI) * acc.value();
}

}  // namespace dzlab
