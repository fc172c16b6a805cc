#include "framecast/linalg.hpp"

namespace framecast {

PolarDecomposition polar_decompose(const ComplexMatrix& t, const SvdOptions& options)
{
    const SvdResult s = svd(t, options);
    ComplexMatrix v_sigma = s.v;
    for (std::size_t i = 0; i < v_sigma.rows(); ++i)
        for (std::size_t k = 0; k < s.rank(); ++k) v_sigma(i, k) *= s.sigma[k];
    return {multiply_adjoint(s.u, s.v), multiply_adjoint(v_sigma, s.v)};
}

} // namespace framecast
