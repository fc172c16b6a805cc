#pragma once

// Data-parallel inner loops. Each kernel has a serial reference in
// kernels::serial and an OpenMP version in kernels::parallel. Every output
// element is computed by one thread in the same summation order as the
// serial code, so both variants return bit-identical results.
//
// The unqualified kernels::* entry points pick the parallel variant when
// OpenMP is available and the problem is large enough to amortise the fork.

#include <array>
#include <span>

#include "framecast/complex_matrix.hpp"

namespace framecast {

using Point2 = std::array<double, 2>;

namespace kernels {

enum class Op { None, Adjoint };

namespace serial {
ComplexMatrix gemm(const ComplexMatrix& a, Op op_a, const ComplexMatrix& b, Op op_b);
ComplexMatrix exponential_samples(std::span<const Point2> nodes, std::span<const Point2> freqs,
                                  std::span<const double> node_scale);
double max_min_distance(std::span<const Point2> probes, std::span<const Point2> sites);
} // namespace serial

namespace parallel {
ComplexMatrix gemm(const ComplexMatrix& a, Op op_a, const ComplexMatrix& b, Op op_b);
ComplexMatrix exponential_samples(std::span<const Point2> nodes, std::span<const Point2> freqs,
                                  std::span<const double> node_scale);
double max_min_distance(std::span<const Point2> probes, std::span<const Point2> sites);
} // namespace parallel

/// True when the library was built with OpenMP.
bool parallel_available() noexcept;

ComplexMatrix gemm(const ComplexMatrix& a, Op op_a, const ComplexMatrix& b, Op op_b);

/// Row j, column p holds node_scale[p] * exp(2 pi i <node_p, freq_j>).
/// An empty node_scale means unit scale.
ComplexMatrix exponential_samples(std::span<const Point2> nodes, std::span<const Point2> freqs,
                                  std::span<const double> node_scale = {});

/// max over probes of the Euclidean distance to the nearest site.
double max_min_distance(std::span<const Point2> probes, std::span<const Point2> sites);

} // namespace kernels
} // namespace framecast
