#pragma once

// Finite frames in C^n: synthesis and frame operators, frame bounds, the
// Gram-Schmidt + polar-decomposition conversion to a Parseval frame,
// canonical tight frames and unions of per-part Parseval frames.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "framecast/complex_matrix.hpp"
#include "framecast/tolerances.hpp"

namespace framecast {

/// Ordered frame vectors stored as the rows of an m x dim matrix.
struct Frame {
    ComplexMatrix vectors;
    /// Optional per-vector tags, e.g. the frequency point lambda of an
    /// exponential. Either empty or one entry per vector.
    std::vector<std::vector<double>> labels;
    std::string basis_note;

    std::size_t dim() const noexcept { return vectors.cols(); }
    std::size_t size() const noexcept { return vectors.rows(); }
    std::span<const Complex> operator[](std::size_t i) const noexcept { return vectors.row(i); }
};

struct FrameBounds {
    double lower = 0.0;
    double upper = 0.0;
};

struct ParsevalOptions {
    /// Raise NotAFrame instead of returning a Parseval frame for the span
    /// when the input does not span C^dim.
    bool require_spanning = false;
    Tolerances tol;
};

struct ParsevalResult {
    Frame parseval;
    /// m x m, g_i = sum_j transfer(i,j) f_j.
    ComplexMatrix transfer;
    /// r x dim orthonormal rows from pivoted Gram-Schmidt.
    ComplexMatrix onb_used;
    /// r x m partial isometry of the synthesis matrix.
    ComplexMatrix w;
    std::size_t span_dim = 0;
    std::vector<std::size_t> pivot_order;
};

/// n x m matrix whose column j holds <f_j, e_k> for the rows e_k of `onb`.
/// SpanMismatch if some f_j leaves more than tol * |f_j| outside span(onb).
ComplexMatrix synthesis_matrix(const Frame& frame, const ComplexMatrix& onb, double tol = 1e-10);

/// S = sum_k f_k f_k^*.
ComplexMatrix frame_operator(const Frame& frame);

/// Optimal bounds on C^dim: extreme eigenvalues of S. NotAFrame when the
/// vectors cannot span (m < dim, or lambda_min <= rank_tol * lambda_max).
FrameBounds frame_bounds(const Frame& frame, double rank_tol = 1e-12);

/// Optimal bounds on the span of the vectors: extreme nonzero eigenvalues
/// of S, computed from whichever of S and the Gram matrix is smaller.
FrameBounds span_frame_bounds(const Frame& frame, double rank_tol = 1e-12);

/// Gram-Schmidt ONB, T = M^T, polar decomposition T = W|T|, g = W^T e.
ParsevalResult to_parseval(const Frame& frame, const ParsevalOptions& options = {});

/// The same conversion carried out against a caller-supplied ONB of the
/// span (rows of `onb`). Returns only the Parseval vectors.
Frame parseval_in_basis(const Frame& frame, const ComplexMatrix& onb, const Tolerances& tol = {});

/// {S^{-1/2} f_k}. NotPositiveDefinite if the vectors do not span C^dim.
Frame canonical_tight_frame(const Frame& frame, const Tolerances& tol = {});

/// sum_j |a_j - b_j|^2. ShapeMismatch unless both frames have equal shape.
double symmetric_distance(const Frame& a, const Frame& b);

struct SubframeUnion {
    /// Per-part Parseval vectors placed back at their original indices.
    Frame frame;
    /// Bounds of the union's frame operator on the span.
    FrameBounds bounds;
    /// max_i |u_i - g_i| against to_parseval(frame).
    double deviation = 0.0;
    bool coincides = false;
    /// Block-diagonal synthesis matrix diag(W_1, ..., W_p) in the
    /// concatenated sub-ONB coordinates; columns follow the partition order.
    ComplexMatrix block_synthesis;
    /// Extreme eigenvalues of block_synthesis * block_synthesis^*.
    FrameBounds block_bounds;
    std::vector<ParsevalResult> parts;
};

/// Parseval frame of each part, reassembled. `partition` holds 0-based
/// indices and must use every index exactly once (PartitionInvalid). The
/// part spans must form a direct sum of the whole span (DirectSumViolated).
SubframeUnion subframe_parseval_union(const Frame& frame,
                                      const std::vector<std::vector<std::size_t>>& partition,
                                      const Tolerances& tol = {}, double coincide_tol = 1e-8);

/// <f, g_i> = sum_j conj(C_ij) <f, f_j> from the measurements <f, f_j>.
ComplexVector transfer_coefficients(const ParsevalResult& result,
                                    std::span<const Complex> measurements);

} // namespace framecast
