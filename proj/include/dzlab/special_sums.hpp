#pragma once

// The quadruple-sum constants over exact root relations: c1(z) over
// three_one solutions, the c2 family over two_two solutions with its
// diagonal/off-diagonal split, and the weighted off-diagonal sum c(z,u).
// Everything is evaluated from exact family enumeration, never from
// floating near-equality detection; series are ordered by kernel then
// m-vector for reproducible compensated summation.

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "dzlab/arith.hpp"
#include "dzlab/common.hpp"
#include "dzlab/quadruples.hpp"

namespace dzlab {

enum class SumKind { c1, c2, c2_prime, c21, c22, c_zu };

inline const char* sum_kind_name(SumKind k) {
    switch (k) {
        case SumKind::c1: return "c1";
        case SumKind::c2: return "c2";
        case SumKind::c2_prime: return "c2_prime";
        case SumKind::c21: return "c21";
        case SumKind::c22: return "c22";
        default: return "c_zu";
    }
}

struct SumReport {
    SumKind which = SumKind::c1;
    std::uint64_t z = 0;
    std::optional<std::uint64_t> u;    // c_zu only
    double value = 0.0;
    std::uint64_t family_count = 0;    // families enumerated
    double bound_form = 1.0;           // the comparison quantity of the bound
};

// c1(z) = sum over sqrt(n1)+sqrt(n2)+sqrt(n3)=sqrt(n4), n_j <= z, of
//   d(n1)d(n2)d(n3)d(n4) / ((n1 n2 n3)^{3/4} n4^{1/4});
// ordered over the first three slots (the weight is symmetric there, so
// each family contributes multiplicity * weight).
inline SumReport compute_c1(std::uint64_t z, const DivisorTable& table) {
    if (z > table.limit) throw std::out_of_range("compute_c1: sieve must cover z");
    SumReport rep;
    rep.which = SumKind::c1;
    rep.z = z;
    KahanSum acc;
    for_each_three_one(z, [&](const QuadrupleFamily& f) {
        ++rep.family_count;
        double weight = 1.0;
        for (int k = 0; k < 3; ++k) {
            const double n = static_cast<double>(f.ns[k]);
            weight *= table.d[f.ns[k]] / (std::sqrt(n) * std::sqrt(std::sqrt(n)));
        }
        const double n4 = static_cast<double>(f.ns[3]);
        weight *= table.d[f.ns[3]] / std::sqrt(std::sqrt(n4));
        acc.add(f.multiplicity * weight);
    });
    rep.value = acc.value();
    rep.bound_form = 1.0;
    return rep;
}

enum class C2Variant { weighted, prime, c21, c22 };

// The two_two family of constants:
//   weighted: sum Prod d * (sqrt n1+...+sqrt n4) / (Prod n)^{3/4}
//   prime:    sum Prod d / ((n1 n2 n3)^{3/4} n4^{1/4}); the diagonal part
//             follows the per-matching convention, so the all-equal
//             quadruple (n,n,n,n) carries both matchings and the split
//             prime = 2*c21 + c22 is an identity.
//   c21:      (sum_{n<=z} d^2(n)/n^{3/2}) * (sum_{m<=z} d^2(m)/m)
//   c22:      the off-diagonal restriction (n1 != n3, n1 != n4) of prime.
inline SumReport compute_c2(std::uint64_t z, const DivisorTable& table,
                            C2Variant variant) {
    if (z > table.limit) throw std::out_of_range("compute_c2: sieve must cover z");
    SumReport rep;
    rep.z = z;
    rep.bound_form = std::pow(std::log(static_cast<double>(std::max<std::uint64_t>(z, 2))), 4);

    if (variant == C2Variant::c21) {
        rep.which = SumKind::c21;
        KahanSum a, b;
        for (std::uint64_t n = 1; n <= z; ++n) {
            const double dn = table.d[n];
            const double x = static_cast<double>(n);
            a.add(dn * dn / (x * std::sqrt(x)));
            b.add(dn * dn / x);
        }
        rep.value = a.value() * b.value();
        return rep;
    }

    const bool off_diag_only = variant == C2Variant::c22;
    rep.which = variant == C2Variant::weighted
                    ? SumKind::c2
                    : (off_diag_only ? SumKind::c22 : SumKind::c2_prime);
    KahanSum acc;
    auto handle = [&](const QuadrupleFamily& f) {
        const bool diagonal = f.diagonal();
        ++rep.family_count;
        if (variant == C2Variant::weighted) {
            double dprod = 1.0, nprod = 1.0;
            KahanSum roots;
            for (int k = 0; k < 4; ++k) {
                const double n = static_cast<double>(f.ns[k]);
                dprod *= table.d[f.ns[k]];
                nprod *= n;
                roots.add(std::sqrt(n));
            }
            const double w = dprod * roots.value() / std::pow(nprod, 0.75);
            acc.add(f.multiplicity * w);
        } else {
            // slot-asymmetric weight; expand the ordered arrangements
            const bool all_equal = diagonal && f.ns[0] == f.ns[1];
            for_each_ordered_arrangement(f, [&](std::uint64_t n1, std::uint64_t n2,
                                                std::uint64_t n3, std::uint64_t n4) {
                const double a = static_cast<double>(n1);
                const double b = static_cast<double>(n2);
                const double c = static_cast<double>(n3);
                const double d4 = static_cast<double>(n4);
                double w = table.d[n1] * table.d[n2] * table.d[n3] * table.d[n4];
                w /= std::pow(a * b * c, 0.75) * std::sqrt(std::sqrt(d4));
                if (!off_diag_only && all_equal) w *= 2.0;  // both matchings
                acc.add(w);
            });
        }
    };
    if (off_diag_only)
        for_each_two_two_offdiag(z, handle);
    else
        for_each_two_two(z, handle);
    rep.value = acc.value();
    return rep;
}

// c(z,u): off-diagonal two_two solutions with n_j <= u, weight
//   (n1 n2 n3 n4)^{-3/4} Prod min(sqrt n_j / sqrt z, 1);
// no divisor factors appear.  Bound form z^{-3/2}.
inline SumReport compute_c_zu(std::uint64_t z, std::uint64_t u,
                              const DivisorTable& table) {
    if (u <= z) throw std::invalid_argument("compute_c_zu: need u > z");
    if (z < 10) throw std::invalid_argument("compute_c_zu: need z >= 10");
    if (u > table.limit) throw std::out_of_range("compute_c_zu: sieve must cover u");
    SumReport rep;
    rep.which = SumKind::c_zu;
    rep.z = z;
    rep.u = u;
    rep.bound_form = 1.0 / (static_cast<double>(z) * std::sqrt(static_cast<double>(z)));
    const double sz = std::sqrt(static_cast<double>(z));
    KahanSum acc;
    for_each_two_two_offdiag(u, [&](const QuadrupleFamily& f) {
        ++rep.family_count;
        double w = 1.0;
        for (int k = 0; k < 4; ++k) {
            const double n = static_cast<double>(f.ns[k]);
            w *= std::pow(n, -0.75) * std::min(std::sqrt(n) / sz, 1.0);
        }
        acc.add(f.multiplicity * w);
    });
    rep.value = acc.value();
    return rep;
}

}  // namespace dzlab
