#include "framecast/smooth_corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "framecast/error.hpp"
#include "framecast/quadrature.hpp"

namespace framecast {

namespace {

double binomial(int n, int k)
{
    double out = 1.0;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

// (2j)! / (2j - k)!
double falling(int top, int k)
{
    double out = 1.0;
    for (int i = 0; i < k; ++i) out *= top - i;
    return out;
}

} // namespace

Bump::Bump(int p, double R, double center) : p_(p), R_(R), center_(center)
{
    if (p < 1 || !(R > 0.0)) {
        throw FrameError(ErrorKind::InvalidArgument, "bump needs p >= 1 and R > 0");
    }
}

double Bump::derivative(double t, int k) const
{
    if (k < 0) throw FrameError(ErrorKind::InvalidArgument, "negative derivative order");
    const double u = (t - center_) / R_;
    if (std::abs(u) > 1.0) return 0.0;
    // (1 - u^2)^p = sum_j C(p, j) (-1)^j u^{2j}
    double acc = 0.0;
    for (int j = 0; j <= p_; ++j) {
        if (2 * j < k) continue;
        const double sign = j % 2 == 0 ? 1.0 : -1.0;
        acc += sign * binomial(p_, j) * falling(2 * j, k) * std::pow(u, 2 * j - k);
    }
    return acc / std::pow(R_, k);
}

double Bump::derivative_l1(int k) const
{
    // integrate between sign changes so every piece is a smooth polynomial
    constexpr int samples = 4096;
    std::vector<double> cuts{left()};
    const auto f = [&](double t) { return derivative(t, k); };
    // sign changes are bracketed from the last nonzero sample, so exact
    // zeros on the sampling grid are not skipped
    double prev_t = left();
    double prev_v = 0.0;
    for (int i = 1; i <= samples; ++i) {
        const double t = left() + 2.0 * R_ * i / samples;
        const double v = f(t);
        if (v == 0.0) continue;
        if (prev_v != 0.0 && (prev_v < 0.0) != (v < 0.0)) {
            double lo = prev_t;
            double hi = t;
            for (int it = 0; it < 200 && hi - lo > 1e-15 * R_; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (f(mid) != 0.0 && (f(mid) < 0.0) == (prev_v < 0.0)) lo = mid;
                else hi = mid;
            }
            cuts.push_back(0.5 * (lo + hi));
        }
        prev_t = t;
        prev_v = v;
    }
    cuts.push_back(right());

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        total += std::abs(integrate_real(f, cuts[i], cuts[i + 1]));
    return total;
}

double Bump::l2_norm() const
{
    return std::sqrt(integrate_real([&](double t) { return derivative(t) * derivative(t); }, left(), right()));
}

std::complex<double> Bump::fourier_transform(double lambda) const
{
    QuadratureOptions opts;
    opts.nodes_per_unit = std::max<std::size_t>(
        64, static_cast<std::size_t>(16.0 * std::abs(lambda) * 2.0 * R_));
    return integrate(
               [&](double t) {
                   return derivative(t) * std::polar(1.0, -2.0 * std::numbers::pi * lambda * t);
               },
               left(), right(), opts)
        .value;
}

} // namespace framecast
