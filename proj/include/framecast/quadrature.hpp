#pragma once

// One-dimensional quadrature used by the arc-length, Fourier-decay and
// truncation-error computations.

#include <cstddef>
#include <functional>
#include <vector>

#include "framecast/complex_matrix.hpp"

namespace framecast {

struct GaussLegendreRule {
    std::vector<double> nodes;   // on [-1, 1], ascending
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule via Newton iteration on P_n.
GaussLegendreRule gauss_legendre_rule(std::size_t n);

struct QuadratureOptions {
    /// Starting density; 16-point panels, so 4 panels per unit length.
    std::size_t nodes_per_unit = 64;
    /// Panels double until successive estimates differ by at most
    /// tol * max(scale_floor, |estimate|).
    double tol = 1e-10;
    double scale_floor = 1.0;
    int max_doublings = 14;
};

struct QuadratureResult {
    Complex value;
    double error_estimate = 0.0;
    std::size_t panels = 0;
    bool converged = false;
};

/// Composite Gauss-Legendre with panel doubling.
QuadratureResult integrate(const std::function<Complex(double)>& f, double a, double b,
                           const QuadratureOptions& options = {});
double integrate_real(const std::function<double(double)>& f, double a, double b,
                      const QuadratureOptions& options = {});

/// Fixed composite rule: `panels` equal panels of `rule`.
Complex composite_gauss_legendre(const std::function<Complex(double)>& f, double a, double b,
                                 std::size_t panels, const GaussLegendreRule& rule);

/// Adaptive Simpson to absolute tolerance `tol`.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-10, int max_depth = 50);

/// Tensor-product composite Gauss-Legendre on [ax, bx] x [ay, by] with
/// `panels` panels of 16 nodes per axis.
Complex integrate_2d(const std::function<Complex(double, double)>& f, double ax, double bx,
                     double ay, double by, std::size_t panels);

} // namespace framecast
