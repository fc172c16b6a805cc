#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "framecast/error.hpp"
#include "framecast/quadrature.hpp"
#include "framecast/recon.hpp"

namespace framecast {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

void require(bool ok, const std::string& what)
{
    if (!ok) throw FrameError(ErrorKind::InvalidArgument, what);
}

} // namespace

std::string_view to_string(BoundFormula f) noexcept
{
    switch (f) {
    case BoundFormula::Thm32: return "thm32";
    case BoundFormula::Eq35: return "eq35";
    case BoundFormula::HighDim: return "highdim";
    }
    return "unknown";
}

double fourier_decay_bound(int k, double deriv_l1, double lambda_abs)
{
    require(k >= 1, "decay order k must be at least 1");
    require(lambda_abs > 0.0, "|lambda| must be positive");
    require(deriv_l1 >= 0.0, "derivative L1 norm must be nonnegative");
    return deriv_l1 / std::pow(two_pi * lambda_abs, k);
}

double highdim_decay_bound(int n_dim, int k, double partial_l1, double lambda_norm)
{
    require(n_dim >= 1, "dimension must be at least 1");
    require(k >= 1, "decay order k must be at least 1");
    require(lambda_norm > 0.0, "|lambda| must be positive");
    require(partial_l1 >= 0.0, "derivative L1 norm must be nonnegative");
    return std::pow(std::sqrt(static_cast<double>(n_dim)) / two_pi, k) * partial_l1 /
           std::pow(lambda_norm, k);
}

ErrorBoundReport truncation_bound(const TruncationBoundInput& in, BoundFormula formula)
{
    require(in.k >= 2, "k = " + std::to_string(in.k) + " < 2: the tail integral diverges");
    require(in.deriv_l1 > 0.0 && in.A > 0.0 && in.R > 0.0 && in.lambda_scale > 0.0,
            "deriv_l1, A, R and lambda_scale must be positive");
    require(in.n_tilde >= 1, "N_tilde must be at least 1");

    const double k = static_cast<double>(in.k);
    const double n1 = static_cast<double>(in.n_tilde) + 1.0;
    ErrorBoundReport out;
    out.input = in;
    out.formula = formula;
    switch (formula) {
    case BoundFormula::Thm32:
        out.bound = std::sqrt(2.0 * in.R) / in.A * in.deriv_l1 / std::pow(two_pi, k) * 2.0 /
                    ((k - 1.0) * std::pow(n1, k - 1.0));
        break;
    case BoundFormula::Eq35:
        require(in.k == 2 && in.A == 1.0 && in.R == 0.5,
                "the harmonic special case needs k = 2, A = 1, R = 1/2");
        out.bound = in.deriv_l1 / (two_pi * two_pi) * 2.0 / n1;
        break;
    case BoundFormula::HighDim:
        throw FrameError(ErrorKind::InvalidArgument, "use highdim_report for the decay estimate");
    }
    out.bound /= std::pow(in.lambda_scale, k);
    return out;
}

ErrorBoundReport highdim_report(int n_dim, int k, double partial_l1, double lambda_norm)
{
    ErrorBoundReport out;
    out.bound = highdim_decay_bound(n_dim, k, partial_l1, lambda_norm);
    out.formula = BoundFormula::HighDim;
    out.input.k = k;
    out.input.deriv_l1 = partial_l1;
    out.n_dim = n_dim;
    out.lambda_norm = lambda_norm;
    return out;
}

double tail_sum(std::span<const double> labels, std::span<const Complex> fhat, std::size_t cutoff)
{
    if (labels.size() != fhat.size()) {
        throw FrameError(ErrorKind::ShapeMismatch, "labels and transform values differ in length");
    }
    for (std::size_t i = 1; i < labels.size(); ++i) {
        require(std::abs(labels[i - 1]) <= std::abs(labels[i]), "labels must be sorted by |lambda|");
    }
    double sum = 0.0;
    for (std::size_t i = cutoff; i < fhat.size(); ++i) sum += std::abs(fhat[i]);
    return sum;
}

std::vector<double> harmonic_labels(std::size_t count)
{
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double n = static_cast<double>((i + 1) / 2);
        out.push_back(i % 2 == 1 ? n : -n);
    }
    if (!out.empty()) out[0] = 0.0;
    return out;
}

SeriesResidual exponential_series_residual(const std::function<double(double)>& f, double a,
                                           std::span<const double> lambdas)
{
    for (double l : lambdas) require(l == std::round(l), "harmonic frequencies must be integers");
    const double b = a + 1.0;
    QuadratureOptions opts;
    SeriesResidual out;
    out.coefficients.reserve(lambdas.size());
    for (double l : lambdas) {
        const auto integrand = [&](double t) {
            return f(t) * std::polar(1.0, -two_pi * l * t);
        };
        out.coefficients.push_back(integrate(integrand, a, b, opts).value);
    }

    // Enough panels to resolve the highest retained frequency before doubling.
    double top = 1.0;
    for (double l : lambdas) top = std::max(top, std::abs(l));
    opts.nodes_per_unit = std::max<std::size_t>(64, static_cast<std::size_t>(16.0 * top));
    // the residual can be tiny, so converge relative to its own size; below
    // about 1e-9 rounding in the partial sum keeps successive estimates from
    // agreeing to tol, so cap the doublings (the start already takes 16 nodes
    // per period of the top frequency)
    opts.scale_floor = 1e-30;
    opts.max_doublings = 4;
    const auto residual_sq = [&](double t) {
        Complex partial = 0.0;
        for (std::size_t n = 0; n < lambdas.size(); ++n)
            partial += out.coefficients[n] * std::polar(1.0, two_pi * lambdas[n] * t);
        return std::norm(f(t) - partial);
    };
    out.residual_l2 = std::sqrt(integrate_real(residual_sq, a, b, opts));
    out.f_l2 = std::sqrt(integrate_real([&](double t) { return f(t) * f(t); }, a, b, opts));
    return out;
}

} // namespace framecast
