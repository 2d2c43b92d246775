#pragma once

// Shared utilities: error types, mathematical constants, compensated
// summation, and the deterministic block-parallel reduction used by all
// interval integrators.

#include <atomic>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace dzlab {

inline constexpr const char* kToolVersion = "0.1.0";

// Raised when a computation would exceed a configured resource budget.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when persistent state (caches) disagrees with the requested config.
class state_error : public std::runtime_error {
public:
    explicit state_error(const std::string& what) : std::runtime_error(what) {}
};

// Euler's constant and the zeta values everything else is derived from.
struct MathConstants {
    static constexpr double euler_gamma = 0.57721566490153286;
    static constexpr double zeta_3_2    = 2.6123753486854883;  // zeta(3/2)
    static constexpr double zeta_3      = 1.2020569031595943;  // zeta(3)

    // zeta^4(3/2) / (6 pi^2 zeta(3)), the mean-square constant for the
    // divisor error term.  ~0.654284
    static double tong_const() {
        const double z4 = zeta_3_2 * zeta_3_2 * zeta_3_2 * zeta_3_2;
        return z4 / (6.0 * M_PI * M_PI * zeta_3);
    }
    // 2 zeta^4(3/2) / (3 zeta(3) sqrt(2 pi)), the analogue for E(t).
    // ~10.3047
    static double meurman_const() {
        const double z4 = zeta_3_2 * zeta_3_2 * zeta_3_2 * zeta_3_2;
        return 2.0 * z4 / (3.0 * zeta_3 * std::sqrt(2.0 * M_PI));
    }
};

// Neumaier-compensated accumulator.  Summation order is part of every
// caller's contract, so results are reproducible across runs and thread
// counts as long as the order of add() calls is fixed.
class KahanSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    void add(const KahanSum& other) {
        add(other.sum_);
        add(other.comp_);
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline unsigned default_threads() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

// Runs f(block) for block = 0..nblocks-1 on `threads` workers and returns
// the per-block results in block order.  The block decomposition is chosen
// by the caller and does not depend on the thread count, so reducing the
// returned vector in index order gives bitwise-reproducible totals.
template <typename T, typename F>
std::vector<T> run_blocks(std::size_t nblocks, unsigned threads, F&& f) {
    std::vector<T> results(nblocks);
    if (nblocks == 0) return results;
    threads = std::max(1u, std::min<unsigned>(threads, nblocks));
    if (threads == 1) {
        for (std::size_t b = 0; b < nblocks; ++b) results[b] = f(b);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                std::size_t b = next.fetch_add(1);
                if (b >= nblocks) break;
                results[b] = f(b);
            }
        });
    }
    for (auto& t : pool) t.join();
    return results;
}

// Sum of f(block) over blocks, reduced in ascending block order with
// compensated accumulation.
template <typename F>
double reduce_blocks(std::size_t nblocks, unsigned threads, F&& f) {
    auto parts = run_blocks<double>(nblocks, threads, std::forward<F>(f));
    KahanSum acc;
    for (double p : parts) acc.add(p);
    return acc.value();
}

}  // namespace dzlab
