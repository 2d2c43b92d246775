#pragma once

// Divisor-function sieving, square-free kernel decomposition, and the
// d^2(n) partial sums used by every spectral truncation bound.

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "dzlab/common.hpp"

namespace dzlab {

// d(n), D(m) = sum_{n<=m} d(n) and D*(m) = sum_{n<=m} (-1)^n d(n) for
// 1 <= n <= limit.  Immutable after construction; safe to share across
// threads.
struct DivisorTable {
    std::uint64_t limit = 0;
    std::vector<std::uint32_t> d;        // d[n], index 0 unused
    std::vector<std::int64_t> prefix;    // prefix[m] = D(m)
    std::vector<std::int64_t> alt_prefix;

    std::uint32_t dn(std::uint64_t n) const { return d[n]; }
};

// Increment-at-multiples sieve: for each q <= limit add 1 to d at all
// multiples of q.  O(limit log limit) time, linear memory; sieving is
// single-threaded (memory-bandwidth bound).
inline DivisorTable sieve_divisors(std::uint64_t limit) {
    if (limit == 0) throw std::invalid_argument("sieve_divisors: limit must be >= 1");
    if (limit >= (1ull << 31))
        throw std::invalid_argument("sieve_divisors: limit >= 2^31 not supported");

    DivisorTable t;
    t.limit = limit;
    try {
        t.d.assign(limit + 1, 0);
        t.prefix.assign(limit + 1, 0);
        t.alt_prefix.assign(limit + 1, 0);
    } catch (const std::bad_alloc&) {
        throw resource_error("sieve_divisors: allocation failed for limit " +
                             std::to_string(limit) + " (~" +
                             std::to_string((limit + 1) * 20 / (1 << 20)) + " MiB)");
    }
    for (std::uint64_t q = 1; q <= limit; ++q)
        for (std::uint64_t m = q; m <= limit; m += q) ++t.d[m];

    // Sum d(n) < 2e8 for limit 1e7; int64 prefix sums cannot overflow below 2^31.
    std::int64_t p = 0, a = 0;
    for (std::uint64_t n = 1; n <= limit; ++n) {
        p += t.d[n];
        a += (n & 1) ? -static_cast<std::int64_t>(t.d[n])
                     : static_cast<std::int64_t>(t.d[n]);
        t.prefix[n] = p;
        t.alt_prefix[n] = a;
    }
    return t;
}

// ---------------------------------------------------------------------------
// Binary cache: header of three little-endian u64 {magic "DIVT", version,
// limit}, then d as u32 little-endian.  Prefix arrays are recomputed on load.
// ---------------------------------------------------------------------------

namespace detail {
inline constexpr std::uint64_t kDivTableMagic = 0x54564944ull;  // "DIVT"
inline constexpr std::uint64_t kDivTableVersion = 1;

struct FileCloser {
    void operator()(std::FILE* f) const { if (f) std::fclose(f); }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;
}  // namespace detail

inline void save_divisor_table(const DivisorTable& t, const std::string& path) {
    detail::FilePtr f(std::fopen(path.c_str(), "wb"));
    if (!f) throw std::runtime_error("save_divisor_table: cannot open " + path);
    std::uint64_t header[3] = {detail::kDivTableMagic, detail::kDivTableVersion, t.limit};
    if (std::fwrite(header, sizeof(header), 1, f.get()) != 1 ||
        std::fwrite(t.d.data() + 1, sizeof(std::uint32_t), t.limit, f.get()) != t.limit)
        throw std::runtime_error("save_divisor_table: short write to " + path);
}

inline DivisorTable load_divisor_table(const std::string& path) {
    detail::FilePtr f(std::fopen(path.c_str(), "rb"));
    if (!f) throw std::runtime_error("load_divisor_table: cannot open " + path);
    std::uint64_t header[3];
    if (std::fread(header, sizeof(header), 1, f.get()) != 1 ||
        header[0] != detail::kDivTableMagic)
        throw std::runtime_error("load_divisor_table: bad magic in " + path);
    if (header[1] != detail::kDivTableVersion)
        throw std::runtime_error("load_divisor_table: unsupported version in " + path);

    DivisorTable t;
    t.limit = header[2];
    t.d.assign(t.limit + 1, 0);
    if (std::fread(t.d.data() + 1, sizeof(std::uint32_t), t.limit, f.get()) != t.limit)
        throw std::runtime_error("load_divisor_table: truncated data in " + path);
    t.prefix.assign(t.limit + 1, 0);
    t.alt_prefix.assign(t.limit + 1, 0);
    std::int64_t p = 0, a = 0;
    for (std::uint64_t n = 1; n <= t.limit; ++n) {
        p += t.d[n];
        a += (n & 1) ? -static_cast<std::int64_t>(t.d[n])
                     : static_cast<std::int64_t>(t.d[n]);
        t.prefix[n] = p;
        t.alt_prefix[n] = a;
    }
    return t;
}

// ---------------------------------------------------------------------------
// Square-free kernel decomposition n = l * m^2, mu(l) != 0.
// ---------------------------------------------------------------------------

struct KernelDecomp {
    std::uint64_t n = 0;
    std::uint64_t l = 0;  // square-free kernel
    std::uint64_t m = 0;  // maximal square part root
};

// Smallest-prime-factor table for fast repeated decomposition.
struct SpfTable {
    std::uint64_t limit = 0;
    std::vector<std::uint32_t> spf;

    static SpfTable build(std::uint64_t limit) {
        SpfTable t;
        t.limit = limit;
        t.spf.assign(limit + 1, 0);
        for (std::uint64_t i = 2; i <= limit; ++i) {
            if (t.spf[i] == 0)
                for (std::uint64_t m = i; m <= limit; m += i)
                    if (t.spf[m] == 0) t.spf[m] = static_cast<std::uint32_t>(i);
        }
        return t;
    }
};

inline KernelDecomp kernel_decompose(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("kernel_decompose: n must be >= 1");
    std::uint64_t l = 1, m = 1, rest = n;
    for (std::uint64_t p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
        if (rest % p) continue;
        unsigned e = 0;
        while (rest % p == 0) { rest /= p; ++e; }
        for (unsigned k = 0; k + 1 < e; k += 2) m *= p;
        if (e & 1) l *= p;
    }
    l *= rest;  // leftover prime (exponent 1)
    return {n, l, m};
}

inline KernelDecomp kernel_decompose(std::uint64_t n, const SpfTable& spf) {
    if (n == 0) throw std::invalid_argument("kernel_decompose: n must be >= 1");
    if (n > spf.limit) return kernel_decompose(n);
    std::uint64_t l = 1, m = 1, rest = n;
    while (rest > 1) {
        std::uint64_t p = spf.spf[rest];
        unsigned e = 0;
        while (rest % p == 0) { rest /= p; ++e; }
        for (unsigned k = 0; k + 1 < e; k += 2) m *= p;
        if (e & 1) l *= p;
    }
    return {n, l, m};
}

// ---------------------------------------------------------------------------
// Partial sums of d^2(n):
//   head: sum_{n<=z} d^2(n) / sqrt(n)          (~ sqrt(z) log^3 z)
//   tail: sum_{z<n<=limit} d^2(n) / n^{3/2}    (~ z^{-1/2} log^3 z)
// The tail is truncated at table.limit.  Fixed ascending order, compensated.
// ---------------------------------------------------------------------------

enum class D2SumMode { head, tail };

inline double d2_partial_sums(std::uint64_t z, const DivisorTable& table,
                              D2SumMode mode) {
    if (z == 0) throw std::invalid_argument("d2_partial_sums: z must be >= 1");
    KahanSum acc;
    if (mode == D2SumMode::head) {
        if (z > table.limit)
            throw std::out_of_range("d2_partial_sums: head needs table.limit >= z");
        for (std::uint64_t n = 1; n <= z; ++n) {
            double dn = table.d[n];
            acc.add(dn * dn / std::sqrt(static_cast<double>(n)));
        }
    } else {
        for (std::uint64_t n = z + 1; n <= table.limit; ++n) {
            double dn = table.d[n];
            double x = static_cast<double>(n);
            acc.add(dn * dn / (x * std::sqrt(x)));
        }
    }
    return acc.value();
}

}  // namespace dzlab
