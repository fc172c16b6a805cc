#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "framecast/error.hpp"
#include "framecast/quadrature.hpp"
#include "framecast/spiral.hpp"

namespace framecast {

namespace {

constexpr double pi = std::numbers::pi;
constexpr std::size_t max_march_steps = 1'000'000;

// Largest theta in [from, from + budget / c] with arc_length(from, theta) <= gap.
double advance_by_arc(double c, double from, double gap, ArcLengthMode mode)
{
    double lo = from;
    double hi = from + gap / c; // the integrand is at least c
    for (int it = 0; it < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (arc_length(c, from, mid, mode) <= gap) lo = mid;
        else hi = mid;
    }
    return lo;
}

} // namespace

Admissibility check_admissible(const SpiralSpec& spec) noexcept
{
    if (!(spec.c > 0.0) || !(spec.R > 0.0) || !(spec.delta > 0.0)) {
        return Admissibility::NonPositiveParameter;
    }
    if (!(spec.R * spec.c < 0.5)) return Admissibility::PitchTooLarge;
    if (!((0.5 * spec.c + spec.delta) * spec.R < 0.25)) return Admissibility::CoveringViolated;
    return Admissibility::Admissible;
}

std::string_view describe(Admissibility a) noexcept
{
    switch (a) {
    case Admissibility::Admissible: return "admissible";
    case Admissibility::NonPositiveParameter: return "c > 0, R > 0, delta > 0 violated";
    case Admissibility::PitchTooLarge: return "R*c < 1/2 violated";
    case Admissibility::CoveringViolated: return "(c/2 + delta)*R < 1/4 violated";
    }
    return "unknown";
}

void require_admissible(const SpiralSpec& spec)
{
    const Admissibility a = check_admissible(spec);
    if (a != Admissibility::Admissible) {
        throw FrameError(ErrorKind::InadmissibleSpec, std::string(describe(a)));
    }
}

Point2 spiral_point(double c, double theta)
{
    if (!(theta >= 0.0)) {
        throw FrameError(ErrorKind::InvalidArgument, "spiral parameter must be nonnegative");
    }
    const double r = c * theta;
    return {r * std::cos(2.0 * pi * theta), r * std::sin(2.0 * pi * theta)};
}

double arc_length(double c, double theta1, double theta2, ArcLengthMode mode)
{
    if (!(theta1 <= theta2)) {
        throw FrameError(ErrorKind::BadInterval,
                         "theta2 = " + std::to_string(theta2) + " precedes theta1 = " +
                             std::to_string(theta1));
    }
    if (theta1 == theta2) return 0.0;
    if (mode == ArcLengthMode::Paper) {
        return c * ((theta2 - theta1) +
                    (4.0 / 3.0) * pi * pi * (theta2 * theta2 * theta2 - theta1 * theta1 * theta1));
    }
    return adaptive_simpson(
        [c](double t) { return c * std::sqrt(1.0 + 4.0 * pi * pi * t * t); }, theta1, theta2, 1e-10);
}

double min_pairwise_distance(std::span<const Point2> points)
{
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            best = std::min(best, std::hypot(points[i][0] - points[j][0], points[i][1] - points[j][1]));
    return best;
}

SamplePointSet select_spiral_points(const SpiralSpec& spec, const SpiralTarget& target,
                                    ArcLengthMode mode)
{
    require_admissible(spec);
    if (target.count.has_value() == target.stop_radius.has_value()) {
        throw FrameError(ErrorKind::InvalidArgument, "give exactly one of count and stop radius");
    }
    if (target.count && *target.count == 0) {
        throw FrameError(ErrorKind::InvalidArgument, "point count must be positive");
    }
    if (target.stop_radius && !(*target.stop_radius >= 0.0)) {
        throw FrameError(ErrorKind::InvalidArgument, "stop radius must be nonnegative");
    }

    const double gap = 0.9 * 2.0 * spec.delta;
    SamplePointSet out;
    out.margin = 2.0 * spec.delta;
    double theta = 0.0;
    for (std::size_t step = 0;; ++step) {
        if (target.count && out.points.size() == *target.count) break;
        if (target.stop_radius && !out.points.empty() && spec.c * theta >= *target.stop_radius) break;
        if (step == max_march_steps) {
            throw FrameError(ErrorKind::InvalidArgument, "stop radius needs too many points");
        }
        const double next = advance_by_arc(spec.c, theta, gap, mode);
        out.gaps.push_back(arc_length(spec.c, theta, next, mode));
        out.thetas.push_back(next);
        out.points.push_back(spiral_point(spec.c, next));
        theta = next;
    }
    out.min_separation = min_pairwise_distance(out.points);
    return out;
}

CoveringReport covering_radius(const SamplePointSet& points, double ball_R,
                               const CoveringOptions& options)
{
    if (options.grid_density < 10) {
        throw FrameError(ErrorKind::InvalidArgument, "grid density must be at least 10");
    }
    if (points.points.empty()) {
        throw FrameError(ErrorKind::InvalidArgument, "covering radius of an empty point set");
    }
    const std::size_t g = options.grid_density;
    std::vector<Point2> probes;
    auto axis = [g](double lo, double hi, std::size_t i) {
        return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(g - 1);
    };

    if (options.box) {
        const Box& b = *options.box;
        const std::size_t ny = points.dim == 1 ? 1 : g;
        probes.reserve(g * ny);
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < ny; ++j)
                probes.push_back({axis(b.xmin, b.xmax, i), ny == 1 ? 0.0 : axis(b.ymin, b.ymax, j)});
    } else {
        double radius = 0.0;
        if (options.region_radius) {
            radius = *options.region_radius;
        } else {
            for (const auto& p : points.points) radius = std::max(radius, std::hypot(p[0], p[1]));
            radius += points.margin;
        }
        if (points.dim == 1) {
            for (std::size_t i = 0; i < g; ++i) probes.push_back({axis(-radius, radius, i), 0.0});
        } else {
            const double r2 = radius * radius * (1.0 + 1e-12);
            for (std::size_t i = 0; i < g; ++i) {
                for (std::size_t j = 0; j < g; ++j) {
                    const Point2 q{axis(-radius, radius, i), axis(-radius, radius, j)};
                    if (q[0] * q[0] + q[1] * q[1] <= r2) probes.push_back(q);
                }
            }
            // the farthest point often sits on the rim, which the square grid misses
            const std::size_t rim = 4 * g;
            for (std::size_t k = 0; k < rim; ++k) {
                const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(rim);
                probes.push_back({radius * std::cos(t), radius * std::sin(t)});
            }
        }
        if (probes.empty()) probes.push_back({0.0, 0.0});
    }

    CoveringReport out;
    out.rho = kernels::max_min_distance(probes, points.points);
    out.ball_R = ball_R;
    out.beurling_ok = ball_R * out.rho < 0.25;
    out.probes = probes.size();
    return out;
}

} // namespace framecast
