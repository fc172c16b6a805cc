#pragma once

// Compactly supported test functions (1 - ((t - t0)/R)^2)^p with closed-form
// derivatives: f and its first p - 1 derivatives vanish at t0 +- R.

#include <complex>

namespace framecast {

class Bump {
public:
    Bump(int p, double R, double center = 0.0);

    int power() const noexcept { return p_; }
    double radius() const noexcept { return R_; }
    double center() const noexcept { return center_; }
    double left() const noexcept { return center_ - R_; }
    double right() const noexcept { return center_ + R_; }

    /// k-th derivative, zero outside the support.
    double derivative(double t, int k = 0) const;
    double operator()(double t) const { return derivative(t, 0); }

    /// |f^(k)|_{L1} over the support, by quadrature.
    double derivative_l1(int k) const;
    double l2_norm() const;

    /// f^(lambda) = integral f(t) e^{-2 pi i lambda t} dt, by quadrature.
    std::complex<double> fourier_transform(double lambda) const;

private:
    int p_;
    double R_;
    double center_;
};

} // namespace framecast
