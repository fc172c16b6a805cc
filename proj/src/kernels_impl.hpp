#pragma once

// Per-row bodies shared by the serial and OpenMP kernels. Keeping one body
// guarantees identical floating-point summation order in both variants.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "framecast/error.hpp"
#include "framecast/kernels.hpp"

namespace framecast::kernels::detail {

struct GemmShape {
    std::size_t rows;
    std::size_t inner;
    std::size_t cols;
};

inline GemmShape gemm_shape(const ComplexMatrix& a, Op op_a, const ComplexMatrix& b, Op op_b)
{
    const std::size_t ar = op_a == Op::None ? a.rows() : a.cols();
    const std::size_t ac = op_a == Op::None ? a.cols() : a.rows();
    const std::size_t br = op_b == Op::None ? b.rows() : b.cols();
    const std::size_t bc = op_b == Op::None ? b.cols() : b.rows();
    if (ac != br) {
        throw FrameError(ErrorKind::ShapeMismatch,
                         "gemm: inner dimensions " + std::to_string(ac) + " and " +
                             std::to_string(br) + " differ");
    }
    return {ar, ac, bc};
}

// c.row(i) = sum_k A'(i,k) * B'(k,:), accumulated in k order.
inline void gemm_row(const ComplexMatrix& a, Op op_a, const ComplexMatrix& b, Op op_b,
                     const GemmShape& s, std::size_t i, ComplexMatrix& c)
{
    auto out = c.row(i);
    for (std::size_t k = 0; k < s.inner; ++k) {
        const Complex aik = op_a == Op::None ? a(i, k) : std::conj(a(k, i));
        if (aik == Complex{}) continue;
        if (op_b == Op::None) {
            auto brow = b.row(k);
            for (std::size_t j = 0; j < s.cols; ++j) out[j] += aik * brow[j];
        } else {
            for (std::size_t j = 0; j < s.cols; ++j) out[j] += aik * std::conj(b(j, k));
        }
    }
}

inline void exponential_row(std::span<const Point2> nodes, const Point2& freq,
                            std::span<const double> node_scale, std::span<Complex> out)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t p = 0; p < nodes.size(); ++p) {
        const double phase = two_pi * (nodes[p][0] * freq[0] + nodes[p][1] * freq[1]);
        const double scale = node_scale.empty() ? 1.0 : node_scale[p];
        out[p] = Complex(scale * std::cos(phase), scale * std::sin(phase));
    }
}

inline double nearest_site_distance(const Point2& probe, std::span<const Point2> sites)
{
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : sites) {
        const double dx = probe[0] - s[0];
        const double dy = probe[1] - s[1];
        best = std::min(best, dx * dx + dy * dy);
    }
    return std::sqrt(best);
}

inline void check_scale(std::span<const Point2> nodes, std::span<const double> node_scale)
{
    if (!node_scale.empty() && node_scale.size() != nodes.size()) {
        throw FrameError(ErrorKind::ShapeMismatch, "exponential_samples: scale length mismatch");
    }
}

} // namespace framecast::kernels::detail
