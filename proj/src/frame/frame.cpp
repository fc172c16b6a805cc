#include <algorithm>
#include <cmath>
#include <string>

#include "framecast/error.hpp"
#include "framecast/frame.hpp"
#include "framecast/kernels.hpp"
#include "framecast/linalg.hpp"

namespace framecast {

ComplexMatrix synthesis_matrix(const Frame& frame, const ComplexMatrix& onb, double tol)
{
    if (onb.cols() != frame.dim()) {
        throw FrameError(ErrorKind::ShapeMismatch, "synthesis_matrix: basis and frame dimensions differ");
    }
    // coords(j, k) = <f_j, e_k>
    const ComplexMatrix coords = multiply_adjoint(frame.vectors, onb);
    const ComplexMatrix projected = coords * onb;
    for (std::size_t j = 0; j < frame.size(); ++j) {
        const double residual = distance(frame[j], projected.row(j));
        if (residual > tol * norm(frame[j])) {
            throw FrameError(ErrorKind::SpanMismatch,
                             "vector " + std::to_string(j) + " leaves residual " +
                                 std::to_string(residual) + " outside the basis span");
        }
    }
    return coords.transpose();
}

ComplexMatrix frame_operator(const Frame& frame)
{
    const ComplexMatrix f_conj = frame.vectors.conj();
    return adjoint_multiply(f_conj, f_conj);
}

FrameBounds frame_bounds(const Frame& frame, double rank_tol)
{
    if (frame.size() < frame.dim()) {
        throw FrameError(ErrorKind::NotAFrame,
                         std::to_string(frame.size()) + " vectors cannot span dimension " +
                             std::to_string(frame.dim()));
    }
    const auto eig = herm_eig(frame_operator(frame));
    const double lower = eig.values.front();
    const double upper = eig.values.back();
    if (!(upper > 0.0) || lower <= rank_tol * upper) {
        throw FrameError(ErrorKind::NotAFrame,
                         "lower frame bound " + std::to_string(lower) + " is numerically zero");
    }
    return {lower, upper};
}

FrameBounds span_frame_bounds(const Frame& frame, double rank_tol)
{
    const ComplexMatrix gram = frame.size() <= frame.dim()
                                   ? multiply_adjoint(frame.vectors, frame.vectors)
                                   : frame_operator(frame);
    const auto eig = herm_eig(gram);
    const double upper = eig.values.back();
    if (!(upper > 0.0)) {
        throw FrameError(ErrorKind::NotAFrame, "all frame vectors are zero");
    }
    const auto first = std::find_if(eig.values.begin(), eig.values.end(),
                                    [&](double v) { return v > rank_tol * upper; });
    return {*first, upper};
}

Frame canonical_tight_frame(const Frame& frame, const Tolerances& tol)
{
    const ComplexMatrix s = frame_operator(frame);
    if (frame.size() < frame.dim()) {
        throw FrameError(ErrorKind::NotPositiveDefinite,
                         "frame operator of " + std::to_string(frame.size()) +
                             " vectors in dimension " + std::to_string(frame.dim()) +
                             " is singular");
    }
    const ComplexMatrix x = herm_inv_sqrt(s, tol.rank * s.frobenius_norm());
    // row k of the result is (X f_k)^T = f_k^T X^T and X^T = conj(X)
    return {frame.vectors * x.conj(), frame.labels, frame.basis_note};
}

double symmetric_distance(const Frame& a, const Frame& b)
{
    if (a.size() != b.size() || a.dim() != b.dim()) {
        throw FrameError(ErrorKind::ShapeMismatch, "symmetric_distance: frames differ in shape");
    }
    const double d = (a.vectors - b.vectors).frobenius_norm();
    return d * d;
}

} // namespace framecast
