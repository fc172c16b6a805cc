#pragma once

// Archimedean spiral A_c = {(c t cos 2 pi t, c t sin 2 pi t) : t >= 0},
// greedy arc-length sampling of it, covering-radius estimates, and the two
// concrete Fourier frames: exponentials on an interval (through their exact
// sinc Gram matrix) and exponentials sampled on a disk grid.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "framecast/complex_matrix.hpp"
#include "framecast/frame.hpp"
#include "framecast/kernels.hpp"

namespace framecast {

struct SpiralSpec {
    double c = 1.0;     // pitch
    double R = 0.25;    // signal-domain ball radius
    double delta = 0.25; // arc-length half-gap
};

enum class Admissibility {
    Admissible,
    NonPositiveParameter, // c, R, delta > 0
    PitchTooLarge,        // R c < 1/2
    CoveringViolated,     // (c/2 + delta) R < 1/4
};

/// First violated condition, checked in the order listed above.
Admissibility check_admissible(const SpiralSpec& spec) noexcept;
std::string_view describe(Admissibility a) noexcept;
/// Throws InadmissibleSpec naming the violated inequality.
void require_admissible(const SpiralSpec& spec);

Point2 spiral_point(double c, double theta);

enum class ArcLengthMode {
    /// c [(t2 - t1) + (4/3) pi^2 (t2^3 - t1^3)], the integral of c (1 + 4 pi^2 t^2).
    Paper,
    /// Integral of c sqrt(1 + 4 pi^2 t^2), adaptive Simpson to 1e-10.
    Exact,
};

/// Curve length between parameters theta1 <= theta2 (BadInterval otherwise).
double arc_length(double c, double theta1, double theta2, ArcLengthMode mode = ArcLengthMode::Paper);

struct SamplePointSet {
    /// 1 or 2; 1-D points keep their coordinate in [0] and 0 in [1].
    std::size_t dim = 2;
    std::vector<Point2> points;
    /// Spiral parameters of the points (empty when not spiral-derived).
    std::vector<double> thetas;
    /// gaps[0] is the arc length from the origin to the first point,
    /// gaps[k] the arc length between points k-1 and k.
    std::vector<double> gaps;
    /// Smallest pairwise Euclidean distance; infinity for a single point.
    double min_separation = 0.0;
    /// Extra radius the points are meant to cover beyond max |lambda|.
    double margin = 0.0;
};

double min_pairwise_distance(std::span<const Point2> points);

struct SpiralTarget {
    /// Number of points to place, or
    std::optional<std::size_t> count;
    /// keep marching until |lambda| >= stop_radius (that point included).
    std::optional<double> stop_radius;
};

/// Greedy march along the spiral. Every gap, including the offset of the
/// first point from the origin, equals 0.9 * 2 delta in the chosen arc-length
/// mode (found by bisection), so each is strictly below 2 delta.
SamplePointSet select_spiral_points(const SpiralSpec& spec, const SpiralTarget& target,
                                    ArcLengthMode mode = ArcLengthMode::Paper);

struct Box {
    double xmin, xmax, ymin, ymax;
};

struct CoveringOptions {
    std::size_t grid_density = 200;
    /// Disk region radius; defaults to max |lambda| + points.margin.
    std::optional<double> region_radius;
    /// Rectangular region instead of a disk.
    std::optional<Box> box;
};

struct CoveringReport {
    double rho = 0.0;
    double ball_R = 0.0;
    bool beurling_ok = false; // ball_R * rho < 1/4
    std::size_t probes = 0;
};

/// Grid estimate of sup over the region of the distance to the points.
/// InvalidArgument if grid_density < 10.
CoveringReport covering_radius(const SamplePointSet& points, double ball_R,
                               const CoveringOptions& options = {});

struct IntervalFrame {
    Frame frame;
    /// G(j,k) = <e_j, e_k> = 2h sinc(2h (lambda_j - lambda_k)).
    ComplexMatrix gram;
};

/// sin(pi x) / (pi x), 1 at x = 0.
double sinc(double x) noexcept;

/// Exponentials e^{2 pi i lambda x} on [-h, h], represented by the rows of
/// the Cholesky factor of their Gram matrix. DuplicateLambda on repeats.
IntervalFrame interval_exponential_frame(std::span<const double> lambdas, double halfwidth);

enum class GridLayout {
    /// Midpoints (r_i, t_j) = ((i + 1/2) R / N, (j + 1/2) 2 pi / N).
    Polar,
    /// Midpoints ((i + 1/2) s / N, (j + 1/2) s / N) of [0, s)^2, s = radius.
    Square,
};

struct DiskGrid {
    double radius = 0.25;
    std::size_t n = 50;
    GridLayout layout = GridLayout::Polar;
    bool weighted = false;
    /// Node i * n + j, Cartesian coordinates.
    std::vector<Point2> nodes;
    /// Quadrature area element of each node (r dr dt, or cell area).
    std::vector<double> weights;
};

DiskGrid make_disk_grid(double radius, std::size_t n, bool weighted = false);
DiskGrid make_square_grid(double side, std::size_t n, bool weighted = false);

/// Row j holds e^{2 pi i <node, lambda_j>} over the grid nodes, scaled by
/// sqrt(weight) in weighted mode. DimensionMismatch for 1-D points.
Frame disk_grid_frame(const SamplePointSet& points, const DiskGrid& grid);

} // namespace framecast
