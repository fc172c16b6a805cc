#include <cmath>
#include <numbers>
#include <string>

#include "framecast/error.hpp"
#include "framecast/kernels.hpp"
#include "framecast/spiral.hpp"

namespace framecast {

double sinc(double x) noexcept
{
    if (x == 0.0) return 1.0;
    const double px = std::numbers::pi * x;
    return std::sin(px) / px;
}

IntervalFrame interval_exponential_frame(std::span<const double> lambdas, double halfwidth)
{
    if (lambdas.empty()) {
        throw FrameError(ErrorKind::InvalidArgument, "no frequencies given");
    }
    if (!(halfwidth > 0.0)) {
        throw FrameError(ErrorKind::InvalidArgument, "interval half-width must be positive");
    }
    const std::size_t m = lambdas.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (lambdas[i] == lambdas[j]) {
                throw FrameError(ErrorKind::DuplicateLambda,
                                 "lambda " + std::to_string(lambdas[i]) + " repeats at indices " +
                                     std::to_string(i) + " and " + std::to_string(j));
            }

    const double width = 2.0 * halfwidth;
    ComplexMatrix gram(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) gram(i, j) = width * sinc(width * (lambdas[i] - lambdas[j]));

    // G = L L^T; a pivot lost to rounding leaves a zero column, i.e. a
    // numerically dependent exponential.
    std::vector<double> l(m * m, 0.0);
    const double floor = 1e-14 * width;
    for (std::size_t j = 0; j < m; ++j) {
        double d = gram(j, j).real();
        for (std::size_t k = 0; k < j; ++k) d -= l[j * m + k] * l[j * m + k];
        const double pivot = d > floor ? std::sqrt(d) : 0.0;
        l[j * m + j] = pivot;
        for (std::size_t i = j + 1; i < m; ++i) {
            double s = gram(i, j).real();
            for (std::size_t k = 0; k < j; ++k) s -= l[i * m + k] * l[j * m + k];
            l[i * m + j] = pivot > 0.0 ? s / pivot : 0.0;
        }
    }

    IntervalFrame out{Frame{ComplexMatrix(m, m), {}, {}}, std::move(gram)};
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j <= i; ++j) out.frame.vectors(i, j) = l[i * m + j];
        out.frame.labels.push_back({lambdas[i]});
    }
    out.frame.basis_note = "exponentials on [-" + std::to_string(halfwidth) + ", " +
                           std::to_string(halfwidth) + "], Cholesky coordinates of the sinc Gram matrix";
    return out;
}

DiskGrid make_disk_grid(double radius, std::size_t n, bool weighted)
{
    if (!(radius > 0.0) || n == 0) {
        throw FrameError(ErrorKind::InvalidArgument, "disk grid needs radius > 0 and N >= 1");
    }
    DiskGrid g{radius, n, GridLayout::Polar, weighted, {}, {}};
    const double dr = radius / static_cast<double>(n);
    const double dt = 2.0 * std::numbers::pi / static_cast<double>(n);
    g.nodes.reserve(n * n);
    g.weights.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = (static_cast<double>(i) + 0.5) * dr;
        for (std::size_t j = 0; j < n; ++j) {
            const double t = (static_cast<double>(j) + 0.5) * dt;
            g.nodes.push_back({r * std::cos(t), r * std::sin(t)});
            g.weights.push_back(r * dr * dt);
        }
    }
    return g;
}

DiskGrid make_square_grid(double side, std::size_t n, bool weighted)
{
    if (!(side > 0.0) || n == 0) {
        throw FrameError(ErrorKind::InvalidArgument, "square grid needs side > 0 and N >= 1");
    }
    DiskGrid g{side, n, GridLayout::Square, weighted, {}, {}};
    const double h = side / static_cast<double>(n);
    g.nodes.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g.nodes.push_back({(static_cast<double>(i) + 0.5) * h, (static_cast<double>(j) + 0.5) * h});
    g.weights.assign(n * n, h * h);
    return g;
}

Frame disk_grid_frame(const SamplePointSet& points, const DiskGrid& grid)
{
    if (points.dim != 2) {
        throw FrameError(ErrorKind::DimensionMismatch, "disk-grid frames need 2-D frequency points");
    }
    if (points.points.empty()) {
        throw FrameError(ErrorKind::InvalidArgument, "no frequency points");
    }
    std::vector<double> scale;
    if (grid.weighted) {
        scale.reserve(grid.weights.size());
        for (double w : grid.weights) scale.push_back(std::sqrt(w));
    }
    Frame f{kernels::exponential_samples(grid.nodes, points.points, scale), {}, {}};
    for (const auto& p : points.points) f.labels.push_back({p[0], p[1]});
    f.basis_note = std::string(grid.layout == GridLayout::Polar ? "disk" : "square") +
                   "-grid samples, N=" + std::to_string(grid.n) +
                   (grid.weighted ? ", area-weighted" : "");
    return f;
}

} // namespace framecast
