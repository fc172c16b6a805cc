#include "kernels_impl.hpp"

#include <cstdint>

#ifdef FRAMECAST_HAVE_OPENMP
#include <omp.h>
#endif

namespace framecast::kernels {

bool parallel_available() noexcept
{
#ifdef FRAMECAST_HAVE_OPENMP
    return true;
#else
    return false;
#endif
}

namespace parallel {

ComplexMatrix gemm(const ComplexMatrix& a, Op op_a, const ComplexMatrix& b, Op op_b)
{
    const auto s = detail::gemm_shape(a, op_a, b, op_b);
    ComplexMatrix c(s.rows, s.cols);
    const auto rows = static_cast<std::int64_t>(s.rows);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < rows; ++i)
        detail::gemm_row(a, op_a, b, op_b, s, static_cast<std::size_t>(i), c);
    return c;
}

ComplexMatrix exponential_samples(std::span<const Point2> nodes, std::span<const Point2> freqs,
                                  std::span<const double> node_scale)
{
    detail::check_scale(nodes, node_scale);
    ComplexMatrix out(freqs.size(), nodes.size());
    // parallel over nodes: freqs is usually short (a handful of lambdas)
    const auto count = static_cast<std::int64_t>(nodes.size());
    const std::size_t nf = freqs.size();
#pragma omp parallel for schedule(static)
    for (std::int64_t p = 0; p < count; ++p) {
        const auto pi = static_cast<std::size_t>(p);
        for (std::size_t j = 0; j < nf; ++j) {
            Complex value;
            detail::exponential_row(nodes.subspan(pi, 1), freqs[j],
                                    node_scale.empty() ? node_scale : node_scale.subspan(pi, 1),
                                    std::span<Complex>(&value, 1));
            out(j, pi) = value;
        }
    }
    return out;
}

double max_min_distance(std::span<const Point2> probes, std::span<const Point2> sites)
{
    double worst = 0.0;
    const auto count = static_cast<std::int64_t>(probes.size());
#pragma omp parallel for schedule(static) reduction(max : worst)
    for (std::int64_t p = 0; p < count; ++p)
        worst = std::max(worst,
                         detail::nearest_site_distance(probes[static_cast<std::size_t>(p)], sites));
    return worst;
}

} // namespace parallel
} // namespace framecast::kernels
