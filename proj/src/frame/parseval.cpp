#include <string>

#include "framecast/error.hpp"
#include "framecast/frame.hpp"
#include "framecast/linalg.hpp"

namespace framecast {

namespace {

// R with e_k = sum_j R(k, j) f_j: the inverse of the lower-triangular pivot
// block of the Gram-Schmidt coefficients, scattered onto the pivot columns.
ComplexMatrix onb_in_frame_terms(const GramSchmidtResult& gs, std::size_t m)
{
    const std::size_t r = gs.rank();
    ComplexMatrix inv(r, r);
    for (std::size_t col = 0; col < r; ++col) {
        // forward substitution for L x = unit vector
        for (std::size_t i = col; i < r; ++i) {
            Complex acc = i == col ? Complex(1.0) : Complex(0.0);
            for (std::size_t k = col; k < i; ++k) acc -= gs.coeffs(gs.pivot_order[i], k) * inv(k, col);
            inv(i, col) = acc / gs.coeffs(gs.pivot_order[i], i);
        }
    }
    ComplexMatrix r_mat(r, m);
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t a = 0; a < r; ++a) r_mat(k, gs.pivot_order[a]) = inv(k, a);
    return r_mat;
}

} // namespace

ParsevalResult to_parseval(const Frame& frame, const ParsevalOptions& options)
{
    const GramSchmidtResult gs = gram_schmidt(frame.vectors, options.tol.rank);
    const std::size_t r = gs.rank();
    if (options.require_spanning && r < frame.dim()) {
        throw FrameError(ErrorKind::NotAFrame,
                         "vectors span a " + std::to_string(r) + "-dimensional subspace of C^" +
                             std::to_string(frame.dim()));
    }

    const ComplexMatrix t = gs.coeffs.transpose();
    SvdOptions svd_opts;
    svd_opts.rank_tol = options.tol.rank;
    svd_opts.fixed_rank = r;
    PolarDecomposition polar = polar_decompose(t, svd_opts);

    const ComplexMatrix wt = polar.w.transpose();
    ParsevalResult out;
    out.parseval = {wt * gs.onb, frame.labels, frame.basis_note};
    out.transfer = wt * onb_in_frame_terms(gs, frame.size());
    out.onb_used = gs.onb;
    out.w = std::move(polar.w);
    out.span_dim = r;
    out.pivot_order = gs.pivot_order;
    return out;
}

Frame parseval_in_basis(const Frame& frame, const ComplexMatrix& onb, const Tolerances& tol)
{
    const ComplexMatrix t = synthesis_matrix(frame, onb, tol.frame);
    SvdOptions svd_opts;
    svd_opts.rank_tol = tol.rank;
    const PolarDecomposition polar = polar_decompose(t, svd_opts);
    return {polar.w.transpose() * onb, frame.labels, frame.basis_note};
}

ComplexVector transfer_coefficients(const ParsevalResult& result, std::span<const Complex> measurements)
{
    const ComplexMatrix& c = result.transfer;
    if (measurements.size() != c.cols()) {
        throw FrameError(ErrorKind::ShapeMismatch,
                         "expected " + std::to_string(c.cols()) + " measurements, got " +
                             std::to_string(measurements.size()));
    }
    ComplexVector out(c.rows());
    for (std::size_t i = 0; i < c.rows(); ++i) {
        Complex acc = 0.0;
        for (std::size_t j = 0; j < c.cols(); ++j) acc += std::conj(c(i, j)) * measurements[j];
        out[i] = acc;
    }
    return out;
}

} // namespace framecast
