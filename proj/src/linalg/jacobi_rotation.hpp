#pragma once

#include <cmath>
#include <complex>

namespace framecast::detail {

//
// Rotation that diagonalises the Hermitian 2x2 block
//
//   [     a  g ]      a = |x|^2, b = |y|^2, g = x^H y
//   [ conj(g) b ]
//
// applied on the right to the column pair (x, y):
//
//   x' = c x - s e y
//   y' = s conj(e) x + c y,      e = conj(g) / |g|
//
// after which x'^H y' = 0. Requires g != 0.
//
struct JacobiRotation {
    double c;
    double s;
    std::complex<double> e;
};

inline JacobiRotation make_jacobi_rotation(double a, double b, std::complex<double> g)
{
    const double abs_g = std::abs(g);
    const double zeta = (b - a) / (2.0 * abs_g);
    const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    return {c, c * t, std::conj(g) / abs_g};
}

} // namespace framecast::detail
