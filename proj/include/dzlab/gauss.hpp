#pragma once

// Fixed-order Gauss-Legendre rules (8 and 16 nodes) and a panel driver.

#include <array>
#include <cstddef>

#include "dzlab/common.hpp"

namespace dzlab {

struct GaussRule {
    const double* nodes;    // on [-1, 1]
    const double* weights;
    int order;
};

namespace detail {
inline constexpr std::array<double, 8> kGL8Nodes = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
    -0.1834346424956498,  0.1834346424956498,  0.5255324099163290,
     0.7966664774136267,  0.9602898564975363};
inline constexpr std::array<double, 8> kGL8Weights = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
    0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
    0.2223810344533745, 0.1012285362903763};

inline constexpr std::array<double, 16> kGL16Nodes = {
    -0.9894009349916499, -0.9445750230732326, -0.8656312023878318,
    -0.7554044083550030, -0.6178762444026438, -0.4580167776572274,
    -0.2816035507792589, -0.0950125098376374,  0.0950125098376374,
     0.2816035507792589,  0.4580167776572274,  0.6178762444026438,
     0.7554044083550030,  0.8656312023878318,  0.9445750230732326,
     0.9894009349916499};
inline constexpr std::array<double, 16> kGL16Weights = {
    0.0271524594117541, 0.0622535239386479, 0.0951585116824928,
    0.1246289712555339, 0.1495959888165767, 0.1691565193950025,
    0.1826034150449236, 0.1894506104550685, 0.1894506104550685,
    0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479,
    0.0271524594117541};
}  // namespace detail

inline GaussRule gauss_rule(int order) {
    if (order == 16)
        return {detail::kGL16Nodes.data(), detail::kGL16Weights.data(), 16};
    return {detail::kGL8Nodes.data(), detail::kGL8Weights.data(), 8};
}

// Integral of f over [a, b] with one application of the rule.
template <typename F>
double gauss_panel(const GaussRule& rule, double a, double b, F&& f) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    KahanSum acc;
    for (int j = 0; j < rule.order; ++j)
        acc.add(rule.weights[j] * f(mid + half * rule.nodes[j]));
    return acc.value() * half;
}

// Integral of f over [a, b] split into npanels equal panels, reduced in
// panel order.
template <typename F>
double gauss_panels(const GaussRule& rule, double a, double b,
                    std::size_t npanels, F&& f) {
    const double h = (b - a) / static_cast<double>(npanels);
    KahanSum acc;
    for (std::size_t k = 0; k < npanels; ++k) {
        double lo = a + h * static_cast<double>(k);
        acc.add(gauss_panel(rule, lo, lo + h, f));
    }
    return acc.value();
}

}  // namespace dzlab
