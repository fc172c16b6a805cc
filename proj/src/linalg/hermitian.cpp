#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "framecast/error.hpp"
#include "framecast/linalg.hpp"
#include "jacobi_rotation.hpp"

namespace framecast {

namespace {

constexpr int max_jacobi_sweeps = 60;

// A <- J^H A J on the (p, q) plane, V <- V J.
void apply_two_sided(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q,
                     const detail::JacobiRotation& r)
{
    const std::size_t n = a.rows();
    const Complex se = r.s * r.e;
    const Complex sec = r.s * std::conj(r.e);
    for (std::size_t k = 0; k < n; ++k) {
        const Complex x = a(k, p);
        const Complex y = a(k, q);
        a(k, p) = r.c * x - se * y;
        a(k, q) = sec * x + r.c * y;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex x = a(p, k);
        const Complex y = a(q, k);
        a(p, k) = r.c * x - sec * y;
        a(q, k) = se * x + r.c * y;
    }
    a(p, q) = a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
    for (std::size_t k = 0; k < n; ++k) {
        const Complex x = v(k, p);
        const Complex y = v(k, q);
        v(k, p) = r.c * x - se * y;
        v(k, q) = sec * x + r.c * y;
    }
}

} // namespace

HermitianEigen herm_eig(const ComplexMatrix& s, double hermitian_tol)
{
    if (s.rows() != s.cols()) {
        throw FrameError(ErrorKind::ShapeMismatch, "herm_eig: matrix is not square");
    }
    const ComplexMatrix sh = s.adjoint();
    if ((s - sh).frobenius_norm() > hermitian_tol * s.frobenius_norm()) {
        throw FrameError(ErrorKind::NotHermitian, "herm_eig: |s - s^H| exceeds tolerance");
    }

    const std::size_t n = s.rows();
    ComplexMatrix a = 0.5 * (s + sh);
    ComplexMatrix v = ComplexMatrix::identity(n);
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double tiny = std::numeric_limits<double>::min();

    bool converged = n == 1;
    for (int sweep = 0; sweep < max_jacobi_sweeps && !converged; ++sweep) {
        bool rotated = false;
        for (std::size_t q = 1; q < n; ++q) {
            for (std::size_t p = 0; p < q; ++p) {
                const Complex g = a(p, q);
                const double ap = a(p, p).real();
                const double aq = a(q, q).real();
                const double abs_g = std::abs(g);
                if (abs_g <= tiny || abs_g <= eps * std::sqrt(std::abs(ap) * std::abs(aq))) continue;
                apply_two_sided(a, v, p, q, detail::make_jacobi_rotation(ap, aq, g));
                rotated = true;
            }
        }
        converged = !rotated;
    }
    if (!converged) {
        throw FrameError(ErrorKind::NoConvergence, "Jacobi eigenvalue iteration did not converge");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

    HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

ComplexMatrix spectral_function(const HermitianEigen& eig, const std::function<double(double)>& f)
{
    const std::size_t n = eig.values.size();
    ComplexMatrix scaled = eig.vectors;
    for (std::size_t k = 0; k < n; ++k) {
        const double fk = f(eig.values[k]);
        for (std::size_t i = 0; i < n; ++i) scaled(i, k) *= fk;
    }
    ComplexMatrix out = multiply_adjoint(scaled, eig.vectors);
    // exact Hermitian symmetry
    for (std::size_t i = 0; i < n; ++i) {
        out(i, i) = out(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (out(i, j) + std::conj(out(j, i)));
            out(i, j) = avg;
            out(j, i) = std::conj(avg);
        }
    }
    return out;
}

ComplexMatrix herm_inv_sqrt(const ComplexMatrix& s, double tol_psd)
{
    const auto eig = herm_eig(s);
    if (eig.values.front() <= tol_psd) {
        throw FrameError(ErrorKind::NotPositiveDefinite,
                         "smallest eigenvalue " + std::to_string(eig.values.front()) +
                             " is not above " + std::to_string(tol_psd));
    }
    return spectral_function(eig, [](double x) { return 1.0 / std::sqrt(x); });
}

IsometryCheck is_partial_isometry(const ComplexMatrix& w, double tol)
{
    const ComplexMatrix wwh = multiply_adjoint(w, w);
    IsometryCheck out;
    out.defect = (wwh * w - w).frobenius_norm();
    out.coisometry_defect = (wwh - ComplexMatrix::identity(w.rows())).frobenius_norm();
    out.is_partial_isometry = out.defect <= tol * w.frobenius_norm();
    return out;
}

} // namespace framecast
