#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "framecast/error.hpp"
#include "framecast/linalg.hpp"
#include "jacobi_rotation.hpp"

namespace framecast {

namespace {

using Columns = std::vector<ComplexVector>;

double squared_norm(const ComplexVector& x)
{
    double acc = 0.0;
    for (const auto& z : x) acc += std::norm(z);
    return acc;
}

Complex column_inner(const ComplexVector& x, const ComplexVector& y)
{
    // x^H y
    Complex acc = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) acc += std::conj(x[k]) * y[k];
    return acc;
}

void rotate_pair(ComplexVector& x, ComplexVector& y, const detail::JacobiRotation& r)
{
    const Complex se = r.s * r.e;
    const Complex sec = r.s * std::conj(r.e);
    for (std::size_t k = 0; k < x.size(); ++k) {
        const Complex xk = x[k];
        const Complex yk = y[k];
        x[k] = r.c * xk - se * yk;
        y[k] = sec * xk + r.c * yk;
    }
}

// Extend `cols` (orthonormal, all of length n) by unit vectors orthogonal to
// every column already present, so rank-deficient singular vectors are still
// orthonormal.
ComplexVector orthonormal_completion(const std::vector<const ComplexVector*>& existing, std::size_t n)
{
    for (std::size_t seed = 0; seed < n; ++seed) {
        ComplexVector v(n);
        v[seed] = 1.0;
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto* q : existing) {
                const Complex c = column_inner(*q, v);
                for (std::size_t k = 0; k < n; ++k) v[k] -= c * (*q)[k];
            }
        }
        const double nv = std::sqrt(squared_norm(v));
        if (nv > 0.5) {
            for (auto& z : v) z /= nv;
            return v;
        }
    }
    return ComplexVector(n);
}

// One-sided Jacobi on a tall (m >= n) matrix held as columns. On exit the
// columns are mutually orthogonal and `v` accumulates the rotations.
void one_sided_jacobi(Columns& a, Columns& v, const SvdOptions& options)
{
    const std::size_t n = a.size();
    const std::size_t m = n ? a.front().size() : 0;
    const double tol = std::max(options.rotation_tol,
                                std::sqrt(static_cast<double>(m)) *
                                    std::numeric_limits<double>::epsilon());

    for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t j = 1; j < n; ++j) {
            for (std::size_t i = 0; i < j; ++i) {
                const double aa = squared_norm(a[i]);
                const double bb = squared_norm(a[j]);
                if (aa == 0.0 || bb == 0.0) continue;
                const Complex g = column_inner(a[i], a[j]);
                if (std::abs(g) <= tol * std::sqrt(aa) * std::sqrt(bb)) continue;

                const auto rot = detail::make_jacobi_rotation(aa, bb, g);
                rotate_pair(a[i], a[j], rot);
                rotate_pair(v[i], v[j], rot);
                rotated = true;
            }
        }
        if (!rotated) return;
    }
    throw FrameError(ErrorKind::NoConvergence,
                     "one-sided Jacobi did not converge in " + std::to_string(options.max_sweeps) +
                         " sweeps");
}

SvdResult jacobi_svd(const ComplexMatrix& input, const SvdOptions& options, bool keep_all)
{
    const bool wide = input.rows() < input.cols();
    const ComplexMatrix work = wide ? input.adjoint() : input;
    const std::size_t m = work.rows();
    const std::size_t n = work.cols();

    Columns a(n, ComplexVector(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) a[j][i] = work(i, j);
    Columns v(n, ComplexVector(n));
    for (std::size_t j = 0; j < n; ++j) v[j][j] = 1.0;

    one_sided_jacobi(a, v, options);

    std::vector<double> sig(n);
    for (std::size_t j = 0; j < n; ++j) sig[j] = std::sqrt(squared_norm(a[j]));
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return sig[x] > sig[y]; });

    const double sigma_max = sig[order.front()];
    std::size_t r = 0;
    if (keep_all) {
        r = n;
    } else if (options.fixed_rank) {
        r = std::min(*options.fixed_rank, n);
    } else {
        while (r < n && sig[order[r]] > options.rank_tol * sigma_max) ++r;
    }
    r = std::max<std::size_t>(r, 1);

    SvdResult out{ComplexMatrix(m, r), std::vector<double>(r), ComplexMatrix(n, r)};
    std::vector<ComplexVector> left(r);
    std::vector<const ComplexVector*> done;
    for (std::size_t k = 0; k < r; ++k) {
        const std::size_t j = order[k];
        const double s = sig[j];
        out.sigma[k] = s;
        if (s > std::numeric_limits<double>::min()) {
            left[k] = a[j];
            for (auto& z : left[k]) z /= s;
        } else {
            left[k] = orthonormal_completion(done, m);
        }
        done.push_back(&left[k]);
        for (std::size_t i = 0; i < m; ++i) out.u(i, k) = left[k][i];
        for (std::size_t i = 0; i < n; ++i) out.v(i, k) = v[j][i];
    }

    if (wide) std::swap(out.u, out.v);
    return out;
}

} // namespace

SvdResult svd(const ComplexMatrix& a, const SvdOptions& options)
{
    return jacobi_svd(a, options, false);
}

std::vector<double> singular_values(const ComplexMatrix& a, const SvdOptions& options)
{
    return jacobi_svd(a, options, true).sigma;
}

} // namespace framecast
