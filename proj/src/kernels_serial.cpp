#include "kernels_impl.hpp"

namespace framecast::kernels {

namespace serial {

ComplexMatrix gemm(const ComplexMatrix& a, Op op_a, const ComplexMatrix& b, Op op_b)
{
    const auto s = detail::gemm_shape(a, op_a, b, op_b);
    ComplexMatrix c(s.rows, s.cols);
    for (std::size_t i = 0; i < s.rows; ++i) detail::gemm_row(a, op_a, b, op_b, s, i, c);
    return c;
}

ComplexMatrix exponential_samples(std::span<const Point2> nodes, std::span<const Point2> freqs,
                                  std::span<const double> node_scale)
{
    detail::check_scale(nodes, node_scale);
    ComplexMatrix out(freqs.size(), nodes.size());
    for (std::size_t j = 0; j < freqs.size(); ++j)
        detail::exponential_row(nodes, freqs[j], node_scale, out.row(j));
    return out;
}

double max_min_distance(std::span<const Point2> probes, std::span<const Point2> sites)
{
    double worst = 0.0;
    for (const auto& p : probes) worst = std::max(worst, detail::nearest_site_distance(p, sites));
    return worst;
}

} // namespace serial

namespace {
// Below this many multiply-adds the fork/join overhead dominates.
constexpr std::size_t parallel_gemm_threshold = std::size_t{1} << 16;
constexpr std::size_t parallel_sample_threshold = std::size_t{1} << 12;
} // namespace

ComplexMatrix gemm(const ComplexMatrix& a, Op op_a, const ComplexMatrix& b, Op op_b)
{
    const auto s = detail::gemm_shape(a, op_a, b, op_b);
    if (parallel_available() && s.rows > 1 && s.rows * s.inner * s.cols >= parallel_gemm_threshold)
        return parallel::gemm(a, op_a, b, op_b);
    return serial::gemm(a, op_a, b, op_b);
}

ComplexMatrix exponential_samples(std::span<const Point2> nodes, std::span<const Point2> freqs,
                                  std::span<const double> node_scale)
{
    if (parallel_available() && nodes.size() * freqs.size() >= parallel_sample_threshold)
        return parallel::exponential_samples(nodes, freqs, node_scale);
    return serial::exponential_samples(nodes, freqs, node_scale);
}

double max_min_distance(std::span<const Point2> probes, std::span<const Point2> sites)
{
    if (parallel_available() && probes.size() * sites.size() >= parallel_sample_threshold)
        return parallel::max_min_distance(probes, sites);
    return serial::max_min_distance(probes, sites);
}

} // namespace framecast::kernels
