#pragma once

// Exact enumeration of additive square-root quadruples via square-free
// kernels, an exact integer oracle for root-sum equality, gap certificates
// for nonvanishing signed root sums, and counters for the near-equality
// inequalities.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <queue>
#include <string>
#include <vector>

#include "dzlab/arith.hpp"
#include "dzlab/common.hpp"
#include "dzlab/dd.hpp"

namespace dzlab {

// ---------------------------------------------------------------------------
// 256-bit helpers for the double-squaring criterion.  Inputs are <= 2^32,
// so r^2 and 64*a*b*c*d need up to 135 bits.
// ---------------------------------------------------------------------------

namespace detail {

using u128 = unsigned __int128;
using i128 = __int128;

struct U256 {
    u128 hi = 0, lo = 0;
    friend bool operator==(const U256& a, const U256& b) {
        return a.hi == b.hi && a.lo == b.lo;
    }
};

inline U256 mul_u128(u128 a, u128 b) {
    const u128 mask = (~static_cast<u128>(0)) >> 64;
    u128 a0 = a & mask, a1 = a >> 64;
    u128 b0 = b & mask, b1 = b >> 64;
    u128 p00 = a0 * b0;
    u128 p01 = a0 * b1;
    u128 p10 = a1 * b0;
    u128 p11 = a1 * b1;
    u128 mid = p01 + p10;           // < 2^129; track carry
    u128 carry = (mid < p01) ? (static_cast<u128>(1) << 64) : 0;
    u128 lo = p00 + (mid << 64);
    u128 hi = p11 + (mid >> 64) + carry + (lo < p00 ? 1 : 0);
    return {hi, lo};
}

inline U256 shl6(U256 v) {
    U256 r;
    r.hi = (v.hi << 6) | (v.lo >> 122);
    r.lo = v.lo << 6;
    return r;
}

inline int sign_of(i128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace detail

enum class SqrtRelation { equal, not_equal };

// Decides sqrt(a)+sqrt(b) = sqrt(c)+sqrt(d) exactly.  With
// q = c+d-a-b and r = 4ab+4cd-q^2, equality holds iff r >= 0,
// r^2 = 64abcd and sign(q) = sign(ab-cd) (both zero allowed).
inline SqrtRelation exact_sqrt_relation(std::uint64_t a, std::uint64_t b,
                                        std::uint64_t c, std::uint64_t d) {
    using namespace detail;
    if (a == 0 || b == 0 || c == 0 || d == 0)
        throw std::invalid_argument("exact_sqrt_relation: inputs must be >= 1");
    if (a > (1ull << 32) || b > (1ull << 32) || c > (1ull << 32) || d > (1ull << 32))
        throw std::invalid_argument("exact_sqrt_relation: inputs must be <= 2^32");

    const u128 ab = static_cast<u128>(a) * b;
    const u128 cd = static_cast<u128>(c) * d;
    const i128 q = static_cast<i128>(c) + d - a - b;
    if (sign_of(q) != sign_of(static_cast<i128>(ab) - static_cast<i128>(cd)))
        return SqrtRelation::not_equal;
    const i128 r = 4 * static_cast<i128>(ab) + 4 * static_cast<i128>(cd) - q * q;
    if (r < 0) return SqrtRelation::not_equal;
    const U256 r2 = mul_u128(static_cast<u128>(r), static_cast<u128>(r));
    const U256 prod64 = shl6(mul_u128(ab, cd));
    return r2 == prod64 ? SqrtRelation::equal : SqrtRelation::not_equal;
}

// Decides sqrt(a)+sqrt(b)+sqrt(c) = sqrt(d) exactly by the same
// double-squaring chain applied to sqrt(a)+sqrt(b) = sqrt(d)-sqrt(c).
inline SqrtRelation exact_three_one_relation(std::uint64_t a, std::uint64_t b,
                                             std::uint64_t c, std::uint64_t d) {
    using namespace detail;
    if (a == 0 || b == 0 || c == 0 || d == 0)
        throw std::invalid_argument("exact_three_one_relation: inputs must be >= 1");
    if (a > (1ull << 32) || b > (1ull << 32) || c > (1ull << 32) || d > (1ull << 32))
        throw std::invalid_argument("exact_three_one_relation: inputs must be <= 2^32");
    if (d < c) return SqrtRelation::not_equal;
    const u128 ab = static_cast<u128>(a) * b;
    const u128 cd = static_cast<u128>(c) * d;
    const i128 q = static_cast<i128>(d) + c - a - b;  // = 2 sqrt(ab) + 2 sqrt(cd)
    if (q < 0) return SqrtRelation::not_equal;
    const i128 r = q * q - 4 * static_cast<i128>(ab) - 4 * static_cast<i128>(cd);
    if (r < 0) return SqrtRelation::not_equal;
    const U256 r2 = mul_u128(static_cast<u128>(r), static_cast<u128>(r));
    const U256 prod64 = shl6(mul_u128(ab, cd));
    return r2 == prod64 ? SqrtRelation::equal : SqrtRelation::not_equal;
}

// ---------------------------------------------------------------------------
// Quadruple families.  The nontrivial two_two solutions (sides that are
// distinct multisets) all live on a common square-free kernel l with
// n_j = l m_j^2 and m1+m2 = m3+m4; three_one solutions likewise with
// m1+m2+m3 = m4.  The trivial two_two solutions are the equal-pair
// quadruples {a,b} = {a,b}; when a and b have different kernels no common
// l exists and the family is stored with kernel == 0 and each slot's own
// square part in ms.  Canonical form stores each side as a sorted pair
// (lexicographically smaller pair first) or the first three slots sorted
// (three_one); `multiplicity` is the number of ordered quadruples the
// family expands to.
// ---------------------------------------------------------------------------

enum class RelationKind { two_two, three_one };

struct QuadrupleFamily {
    std::uint64_t kernel = 1;  // 0 marks an equal-pair family without a common kernel
    std::array<std::uint32_t, 4> ms{};
    RelationKind relation = RelationKind::two_two;
    std::array<std::uint64_t, 4> ns{};
    std::uint32_t multiplicity = 1;

    bool diagonal() const {
        return relation == RelationKind::two_two && ns[0] == ns[2] && ns[1] == ns[3];
    }
};

namespace detail {

inline std::vector<bool> squarefree_mask(std::uint64_t limit) {
    std::vector<bool> sf(limit + 1, true);
    sf[0] = false;
    for (std::uint64_t p = 2; p * p <= limit; ++p)
        for (std::uint64_t m = p * p; m <= limit; m += p * p) sf[m] = false;
    return sf;
}

inline std::uint64_t isqrt_u64(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while ((r + 1) * (r + 1) <= n) ++r;
    while (r * r > n) --r;
    return r;
}

}  // namespace detail

// Streams the common-kernel two_two families with all n_j <= y, kernels
// ascending, once per unordered family.  This covers every solution whose
// sides are distinct multisets, plus the equal-pair solutions that happen
// to share a kernel; the remaining equal-pair solutions stream from
// for_each_two_two (complete) below.
template <typename Callback>
void for_each_two_two_kernel(std::uint64_t y, Callback&& cb) {
    if (y == 0) return;
    const auto sf = detail::squarefree_mask(y);
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> by_sum;
    for (std::uint64_t l = 1; l <= y; ++l) {
        if (!sf[l]) continue;
        const std::uint64_t M = detail::isqrt_u64(y / l);
        if (M == 0) continue;
        by_sum.assign(2 * M + 1, {});
        for (std::uint32_t a = 1; a <= M; ++a)
            for (std::uint32_t b = a; b <= M; ++b)
                by_sum[a + b].emplace_back(a, b);
        for (std::uint64_t s = 2; s <= 2 * M; ++s) {
            const auto& pairs = by_sum[s];
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                for (std::size_t j = i; j < pairs.size(); ++j) {
                    QuadrupleFamily f;
                    f.kernel = l;
                    f.relation = RelationKind::two_two;
                    f.ms = {pairs[i].first, pairs[i].second,
                            pairs[j].first, pairs[j].second};
                    for (int k = 0; k < 4; ++k)
                        f.ns[k] = l * static_cast<std::uint64_t>(f.ms[k]) * f.ms[k];
                    const std::uint32_t w1 = pairs[i].first == pairs[i].second ? 1 : 2;
                    const std::uint32_t w2 = pairs[j].first == pairs[j].second ? 1 : 2;
                    f.multiplicity = (i == j) ? w1 * w2 : 2 * w1 * w2;
                    cb(f);
                }
            }
        }
    }
}

// Streams only the families whose sides are distinct multisets (the
// off-diagonal solutions); these always have a common kernel.
template <typename Callback>
void for_each_two_two_offdiag(std::uint64_t y, Callback&& cb) {
    for_each_two_two_kernel(y, [&](const QuadrupleFamily& f) {
        if (!f.diagonal()) cb(f);
    });
}

// Streams every two_two family with all n_j <= y, once per unordered
// family: the common-kernel families first, then the equal-pair families
// whose two members have different kernels.
template <typename Callback>
void for_each_two_two(std::uint64_t y, Callback&& cb) {
    if (y == 0) return;
    for_each_two_two_kernel(y, cb);
    // kernels of 1..y
    SpfTable spf = SpfTable::build(y);
    std::vector<std::uint32_t> kern(y + 1), sqpart(y + 1);
    for (std::uint64_t n = 1; n <= y; ++n) {
        const auto k = kernel_decompose(n, spf);
        kern[n] = static_cast<std::uint32_t>(k.l);
        sqpart[n] = static_cast<std::uint32_t>(k.m);
    }
    for (std::uint64_t a = 1; a <= y; ++a)
        for (std::uint64_t b = a + 1; b <= y; ++b) {
            if (kern[a] == kern[b]) continue;  // already in a kernel family
            QuadrupleFamily f;
            f.kernel = 0;
            f.relation = RelationKind::two_two;
            f.ms = {sqpart[a], sqpart[b], sqpart[a], sqpart[b]};
            f.ns = {a, b, a, b};
            f.multiplicity = 4;
            cb(f);
        }
}

// Streams every three_one family with all n_j <= y (so l*m4^2 <= y).
// Linear independence of the roots forces a common kernel here, so the
// kernel parametrization is already complete.
template <typename Callback>
void for_each_three_one(std::uint64_t y, Callback&& cb) {
    if (y == 0) return;
    const auto sf = detail::squarefree_mask(y);
    for (std::uint64_t l = 1; l <= y; ++l) {
        if (!sf[l]) continue;
        const std::uint64_t M4 = detail::isqrt_u64(y / l);
        if (M4 < 3) continue;
        for (std::uint32_t m1 = 1; 3ull * m1 <= M4; ++m1)
            for (std::uint32_t m2 = m1; static_cast<std::uint64_t>(m1) + 2 * m2 <= M4; ++m2)
                for (std::uint32_t m3 = m2;
                     static_cast<std::uint64_t>(m1) + m2 + m3 <= M4; ++m3) {
                    const std::uint32_t m4 = m1 + m2 + m3;
                    QuadrupleFamily f;
                    f.kernel = l;
                    f.relation = RelationKind::three_one;
                    f.ms = {m1, m2, m3, m4};
                    for (int k = 0; k < 4; ++k)
                        f.ns[k] = l * static_cast<std::uint64_t>(f.ms[k]) * f.ms[k];
                    if (m1 == m3) f.multiplicity = 1;       // all three equal
                    else if (m1 == m2 || m2 == m3) f.multiplicity = 3;
                    else f.multiplicity = 6;
                    cb(f);
                }
    }
}

inline std::vector<QuadrupleFamily> enumerate_two_two(std::uint64_t y) {
    std::vector<QuadrupleFamily> out;
    for_each_two_two(y, [&](const QuadrupleFamily& f) { out.push_back(f); });
    return out;
}

inline std::vector<QuadrupleFamily> enumerate_three_one(std::uint64_t y) {
    std::vector<QuadrupleFamily> out;
    for_each_three_one(y, [&](const QuadrupleFamily& f) { out.push_back(f); });
    return out;
}

// Calls cb(n1,n2,n3,n4) once for each ordered quadruple the family
// represents; the number of calls equals f.multiplicity.
template <typename Callback>
void for_each_ordered_arrangement(const QuadrupleFamily& f, Callback&& cb) {
    if (f.relation == RelationKind::two_two) {
        const std::pair<std::uint64_t, std::uint64_t> p1{f.ns[0], f.ns[1]};
        const std::pair<std::uint64_t, std::uint64_t> p2{f.ns[2], f.ns[3]};
        auto emit_side = [&](std::pair<std::uint64_t, std::uint64_t> left,
                             std::pair<std::uint64_t, std::uint64_t> right) {
            const int lo = left.first == left.second ? 1 : 2;
            const int ro = right.first == right.second ? 1 : 2;
            for (int i = 0; i < lo; ++i)
                for (int j = 0; j < ro; ++j) {
                    const std::uint64_t a = i ? left.second : left.first;
                    const std::uint64_t b = i ? left.first : left.second;
                    const std::uint64_t c = j ? right.second : right.first;
                    const std::uint64_t d = j ? right.first : right.second;
                    cb(a, b, c, d);
                }
        };
        emit_side(p1, p2);
        if (p1 != p2) emit_side(p2, p1);
    } else {
        const std::uint64_t l = f.kernel;
        auto nval = [l](std::uint32_t m) {
            return l * static_cast<std::uint64_t>(m) * m;
        };
        std::array<std::uint32_t, 3> m{f.ms[0], f.ms[1], f.ms[2]};
        std::sort(m.begin(), m.end());
        do {
            cb(nval(m[0]), nval(m[1]), nval(m[2]), nval(f.ms[3]));
        } while (std::next_permutation(m.begin(), m.end()));
    }
}

// ---------------------------------------------------------------------------
// Gap certificates: alpha* = sqrt(n1)+sqrt(n2) +- sqrt(n3) - sqrt(n4),
// with the lower bound max(n)^{-3/2} (n1 n2 n3 n4)^{-1/2} when alpha* != 0.
// ---------------------------------------------------------------------------

enum class SignPattern {
    pp_mm,  // + + - -  (two_two shape)
    pp_pm,  // + + + -  (three_one shape)
};

struct GapCertificate {
    std::array<std::uint64_t, 4> ns{};
    SignPattern signs = SignPattern::pp_mm;
    double alpha_star = 0.0;
    bool is_zero = false;
    double lower_bound = 0.0;

    double ratio() const { return std::abs(alpha_star) / lower_bound; }
};

inline GapCertificate alpha_star_gap(const std::array<std::uint64_t, 4>& ns,
                                     SignPattern signs) {
    for (auto n : ns)
        if (n == 0) throw std::invalid_argument("alpha_star_gap: n_j must be >= 1");
    GapCertificate cert;
    cert.ns = ns;
    cert.signs = signs;
    DD a = dd_add(dd_sqrt(static_cast<double>(ns[0])),
                  dd_sqrt(static_cast<double>(ns[1])));
    DD s3 = dd_sqrt(static_cast<double>(ns[2]));
    a = (signs == SignPattern::pp_mm) ? dd_sub(a, s3) : dd_add(a, s3);
    a = dd_sub(a, dd_sqrt(static_cast<double>(ns[3])));
    cert.alpha_star = a.value();
    // zero is decided exactly, never by floating comparison
    cert.is_zero = (signs == SignPattern::pp_mm)
                       ? exact_sqrt_relation(ns[0], ns[1], ns[2], ns[3]) ==
                             SqrtRelation::equal
                       : exact_three_one_relation(ns[0], ns[1], ns[2], ns[3]) ==
                             SqrtRelation::equal;
    if (cert.is_zero) cert.alpha_star = 0.0;
    const double mx = static_cast<double>(*std::max_element(ns.begin(), ns.end()));
    double prod = 1.0;
    for (auto n : ns) prod *= static_cast<double>(n);
    cert.lower_bound = 1.0 / (mx * std::sqrt(mx) * std::sqrt(prod));
    return cert;
}

// ---------------------------------------------------------------------------
// Inequality counters.
//   count_inequality:        |sqrt n1 + sqrt n2 - sqrt n3 - sqrt n4| < Delta,
//                            n_j in (N, 2N].
//   count_inequality_signed: |sqrt n1 + sqrt n2 +- sqrt n3 - sqrt n4| < Delta,
//                            n_j in (N_j, 2N_j].
// Sorted two-sum tables with a sliding window; falls back to heap-merged
// streams when the table would exceed the memory budget.
// ---------------------------------------------------------------------------

struct CountOptions {
    std::uint64_t memory_budget_bytes = 2ull << 30;  // 2 GiB
};

namespace detail {

// Counts ordered (a, b) in sorted vectors with b in (a - delta, a + delta).
inline std::uint64_t window_count(const std::vector<double>& A,
                                  const std::vector<double>& B, double delta) {
    std::uint64_t count = 0;
    std::size_t lo = 0, hi = 0;
    for (double a : A) {
        while (hi < B.size() && B[hi] < a + delta) ++hi;
        while (lo < B.size() && B[lo] <= a - delta) ++lo;
        count += hi - lo;
    }
    return count;
}

// Ascending stream of sqrt(i)+sqrt(j) over i,j in (N, 2N] using an N-way
// merge; O(N) memory.
class PairSumStream {
public:
    explicit PairSumStream(std::uint64_t N) : N_(N) {
        roots_.resize(N);
        for (std::uint64_t k = 0; k < N; ++k)
            roots_[k] = std::sqrt(static_cast<double>(N + 1 + k));
        for (std::uint64_t i = 0; i < N; ++i)
            heap_.push({roots_[i] + roots_[0], i, 0});
    }
    bool empty() const { return heap_.empty(); }
    double peek() const { return heap_.top().value; }
    void pop() {
        Entry e = heap_.top();
        heap_.pop();
        if (e.j + 1 < N_) heap_.push({roots_[e.i] + roots_[e.j + 1], e.i, e.j + 1});
    }

private:
    struct Entry {
        double value;
        std::uint64_t i, j;
        bool operator>(const Entry& o) const { return value > o.value; }
    };
    std::uint64_t N_;
    std::vector<double> roots_;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap_;
};

inline std::uint64_t blocked_count(std::uint64_t N, double delta) {
    PairSumStream main(N), hi(N), lo(N);
    std::uint64_t count = 0, hi_seen = 0, lo_seen = 0;
    while (!main.empty()) {
        double a = main.peek();
        main.pop();
        while (!hi.empty() && hi.peek() < a + delta) { hi.pop(); ++hi_seen; }
        while (!lo.empty() && lo.peek() <= a - delta) { lo.pop(); ++lo_seen; }
        count += hi_seen - lo_seen;
    }
    return count;
}

}  // namespace detail

inline std::uint64_t count_inequality(std::uint64_t N, double delta,
                                      const CountOptions& opts = {}) {
    if (N < 2) throw std::invalid_argument("count_inequality: N must be >= 2");
    if (!(delta > 0)) throw std::invalid_argument("count_inequality: delta must be > 0");
    const std::uint64_t table_bytes = N * N * sizeof(double);
    if (table_bytes > opts.memory_budget_bytes) {
        // O(N) memory, O(N^2 log N) time
        if (N * 64 > opts.memory_budget_bytes)
            throw resource_error("count_inequality: N too large even for the "
                                 "streamed path under budget " +
                                 std::to_string(opts.memory_budget_bytes) + " bytes");
        return detail::blocked_count(N, delta);
    }
    std::vector<double> roots(N);
    for (std::uint64_t k = 0; k < N; ++k)
        roots[k] = std::sqrt(static_cast<double>(N + 1 + k));
    std::vector<double> sums;
    sums.reserve(N * N);
    for (std::uint64_t i = 0; i < N; ++i)
        for (std::uint64_t j = 0; j < N; ++j) sums.push_back(roots[i] + roots[j]);
    std::sort(sums.begin(), sums.end());
    return detail::window_count(sums, sums, delta);
}

enum class ThirdSign { plus, minus };

inline std::uint64_t count_inequality_signed(std::uint64_t N1, std::uint64_t N2,
                                             std::uint64_t N3, std::uint64_t N4,
                                             double delta, ThirdSign sign,
                                             const CountOptions& opts = {}) {
    if (N1 < 2 || N2 < 2 || N3 < 2 || N4 < 2)
        throw std::invalid_argument("count_inequality_signed: N_j must be >= 2");
    if (!(delta > 0))
        throw std::invalid_argument("count_inequality_signed: delta must be > 0");

    auto root_range = [](std::uint64_t N) {
        std::vector<double> r(N);
        for (std::uint64_t k = 0; k < N; ++k)
            r[k] = std::sqrt(static_cast<double>(N + 1 + k));
        return r;
    };
    const auto r1 = root_range(N1), r2 = root_range(N2), r3 = root_range(N3),
               r4 = root_range(N4);

    std::vector<double> left, right;
    if (sign == ThirdSign::minus) {
        // |(sqrt n1 + sqrt n2) - (sqrt n3 + sqrt n4)| < Delta
        if ((N1 * N2 + N3 * N4) * sizeof(double) > opts.memory_budget_bytes)
            throw resource_error("count_inequality_signed: pair tables exceed budget " +
                                 std::to_string(opts.memory_budget_bytes) + " bytes");
        left.reserve(N1 * N2);
        for (double a : r1)
            for (double b : r2) left.push_back(a + b);
        right.reserve(N3 * N4);
        for (double c : r3)
            for (double d : r4) right.push_back(c + d);
    } else {
        // |(sqrt n1 + sqrt n2 + sqrt n3) - sqrt n4| < Delta
        if ((N1 * N2 * N3 + N4) * sizeof(double) > opts.memory_budget_bytes)
            throw resource_error("count_inequality_signed: triple table exceeds budget " +
                                 std::to_string(opts.memory_budget_bytes) + " bytes");
        left.reserve(N1 * N2 * N3);
        for (double a : r1)
            for (double b : r2)
                for (double c : r3) left.push_back(a + b + c);
        right = r4;
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    return detail::window_count(left, right, delta);
}

}  // namespace dzlab
