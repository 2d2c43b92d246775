#pragma once

// Alternating 2^k-term sine/cosine sums: the definitional evaluation, the
// split recurrences, and the closed product forms.

#include <bit>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dzlab/common.hpp"

namespace dzlab {

// SI_k(a1..ak) = sum over j in {0,1}^k of (-1)^{|j|} sin(j.a),
// CO_k likewise with cos.  Full 2^k-term evaluation; k <= 16.
inline std::pair<double, double> si_co_definitional(std::span<const double> alphas) {
    const std::size_t k = alphas.size();
    if (k == 0) throw std::invalid_argument("si_co_definitional: k must be >= 1");
    if (k > 16) throw std::invalid_argument("si_co_definitional: k must be <= 16");
    KahanSum si, co;
    const std::uint32_t total = 1u << k;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        double arg = 0.0;
        for (std::size_t j = 0; j < k; ++j)
            if (mask & (1u << j)) arg += alphas[j];
        const double sgn = (std::popcount(mask) & 1) ? -1.0 : 1.0;
        si.add(sgn * std::sin(arg));
        co.add(sgn * std::cos(arg));
    }
    return {si.value(), co.value()};
}

// Closed forms: with P = prod sin(a_j/2) and S = (a1+...+ak)/2,
//   k = 1 mod 4:  SI = -2^k P cos S,  CO =  2^k P sin S
//   k = 2 mod 4:  SI = -2^k P sin S,  CO = -2^k P cos S
//   k = 3 mod 4:  SI =  2^k P cos S,  CO = -2^k P sin S
//   k = 0 mod 4:  SI =  2^k P sin S,  CO =  2^k P cos S
// The product is tracked in log space for k > 20 so long vectors do not
// underflow.  k <= 60.
inline std::pair<double, double> si_co_closed(std::span<const double> alphas) {
    const std::size_t k = alphas.size();
    if (k == 0) throw std::invalid_argument("si_co_closed: k must be >= 1");
    if (k > 60) throw std::invalid_argument("si_co_closed: k must be <= 60");

    KahanSum half_sum;
    double prod = 1.0;
    double log_mag = 0.0;
    int sign = 1;
    bool zero = false;
    const bool log_space = k > 20;
    for (double a : alphas) {
        half_sum.add(0.5 * a);
        const double s = std::sin(0.5 * a);
        if (s == 0.0) zero = true;
        if (log_space) {
            if (!zero) {
                log_mag += std::log(std::abs(s));
                if (s < 0.0) sign = -sign;
            }
        } else {
            prod *= s;
        }
    }
    double p;
    if (zero)
        p = 0.0;
    else if (log_space)
        p = sign * std::exp(log_mag + static_cast<double>(k) * std::log(2.0));
    else
        p = std::ldexp(prod, static_cast<int>(k));
    const double S = half_sum.value();
    const double c = std::cos(S), s = std::sin(S);
    switch (k % 4) {
        case 1: return {-p * c, p * s};
        case 2: return {-p * s, -p * c};
        case 3: return {p * c, -p * s};
        default: return {p * s, p * c};
    }
}

inline std::pair<double, double> si_co_definitional(const std::vector<double>& a) {
    return si_co_definitional(std::span<const double>(a));
}
inline std::pair<double, double> si_co_closed(const std::vector<double>& a) {
    return si_co_closed(std::span<const double>(a));
}

}  // namespace dzlab
