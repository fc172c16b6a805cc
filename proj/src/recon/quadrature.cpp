#include <algorithm>
#include <cmath>
#include <numbers>

#include "framecast/error.hpp"
#include "framecast/quadrature.hpp"

namespace framecast {

namespace {

constexpr std::size_t panel_nodes = 16;

const GaussLegendreRule& panel_rule()
{
    static const GaussLegendreRule rule = gauss_legendre_rule(panel_nodes);
    return rule;
}

double simpson_step(const std::function<double(double)>& f, double a, double b, double fa,
                    double fm, double fb, double whole, double tol, int depth)
{
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace

GaussLegendreRule gauss_legendre_rule(std::size_t n)
{
    if (n == 0) throw FrameError(ErrorKind::InvalidArgument, "Gauss-Legendre rule needs n >= 1");
    GaussLegendreRule rule{std::vector<double>(n), std::vector<double>(n)};
    const double dn = static_cast<double>(n);
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (dn + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                const double dk = static_cast<double>(k);
                const double p2 = ((2.0 * dk - 1.0) * x * p1 - (dk - 1.0) * p0) / dk;
                p0 = p1;
                p1 = p2;
            }
            dp = dn * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

Complex composite_gauss_legendre(const std::function<Complex(double)>& f, double a, double b,
                                 std::size_t panels, const GaussLegendreRule& rule)
{
    const double h = (b - a) / static_cast<double>(panels);
    Complex total = 0.0;
    for (std::size_t p = 0; p < panels; ++p) {
        const double mid = a + (static_cast<double>(p) + 0.5) * h;
        Complex acc = 0.0;
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) acc += rule.weights[k] * f(mid + 0.5 * h * rule.nodes[k]);
        total += 0.5 * h * acc;
    }
    return total;
}

QuadratureResult integrate(const std::function<Complex(double)>& f, double a, double b,
                           const QuadratureOptions& options)
{
    if (a == b) return {0.0, 0.0, 0, true};
    const double len = std::abs(b - a);
    const std::size_t per_unit = std::max<std::size_t>(1, options.nodes_per_unit / panel_nodes);
    std::size_t panels = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(len * static_cast<double>(per_unit))));

    QuadratureResult out;
    out.value = composite_gauss_legendre(f, a, b, panels, panel_rule());
    out.panels = panels;
    for (int d = 0; d < options.max_doublings; ++d) {
        panels *= 2;
        const Complex next = composite_gauss_legendre(f, a, b, panels, panel_rule());
        out.error_estimate = std::abs(next - out.value);
        out.value = next;
        out.panels = panels;
        if (out.error_estimate <= options.tol * std::max(options.scale_floor, std::abs(next))) {
            out.converged = true;
            break;
        }
    }
    return out;
}

double integrate_real(const std::function<double(double)>& f, double a, double b,
                      const QuadratureOptions& options)
{
    return integrate([&f](double t) { return Complex(f(t)); }, a, b, options).value.real();
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth)
{
    if (a == b) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

Complex integrate_2d(const std::function<Complex(double, double)>& f, double ax, double bx,
                     double ay, double by, std::size_t panels)
{
    const GaussLegendreRule& rule = panel_rule();
    const double hy = (by - ay) / static_cast<double>(panels);
    Complex total = 0.0;
    for (std::size_t p = 0; p < panels; ++p) {
        const double mid = ay + (static_cast<double>(p) + 0.5) * hy;
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
            const double y = mid + 0.5 * hy * rule.nodes[k];
            const Complex inner =
                composite_gauss_legendre([&](double x) { return f(x, y); }, ax, bx, panels, rule);
            total += 0.5 * hy * rule.weights[k] * inner;
        }
    }
    return total;
}

} // namespace framecast
