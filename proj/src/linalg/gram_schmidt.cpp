#include <algorithm>

#include "framecast/error.hpp"
#include "framecast/linalg.hpp"

namespace framecast {

GramSchmidtResult gram_schmidt(const ComplexMatrix& vectors, double tol_rank)
{
    const std::size_t m = vectors.rows();
    const std::size_t d = vectors.cols();

    std::vector<double> norms(m);
    bool any_nonzero = false;
    for (std::size_t i = 0; i < m; ++i) {
        norms[i] = norm(vectors.row(i));
        any_nonzero = any_nonzero || norms[i] > tol_rank;
    }
    if (!any_nonzero) {
        throw FrameError(ErrorKind::AllZeroInput, "every input vector has negligible norm");
    }

    const std::size_t max_rank = std::min(m, d);
    std::vector<ComplexVector> basis;
    basis.reserve(max_rank);
    std::vector<ComplexVector> coeff_rows(m, ComplexVector(max_rank));
    std::vector<std::size_t> pivots;

    ComplexVector v(d);
    for (std::size_t i = 0; i < m; ++i) {
        auto src = vectors.row(i);
        std::copy(src.begin(), src.end(), v.begin());
        auto& coef = coeff_rows[i];

        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < basis.size(); ++k) {
                const Complex c = inner(v, basis[k]);
                for (std::size_t p = 0; p < d; ++p) v[p] -= c * basis[k][p];
                coef[k] += c;
            }
        }

        const double residual = norm(v);
        if (basis.size() < max_rank && residual > tol_rank * norms[i] && residual > 0.0) {
            for (auto& z : v) z /= residual;
            coef[basis.size()] = residual;
            basis.push_back(v);
            pivots.push_back(i);
        }
    }

    const std::size_t r = basis.size();
    ComplexMatrix onb(r, d);
    for (std::size_t k = 0; k < r; ++k) std::copy(basis[k].begin(), basis[k].end(), onb.row(k).begin());
    ComplexMatrix coeffs(m, r);
    for (std::size_t i = 0; i < m; ++i)
        std::copy_n(coeff_rows[i].begin(), r, coeffs.row(i).begin());

    return {std::move(onb), std::move(coeffs), std::move(pivots)};
}

} // namespace framecast
