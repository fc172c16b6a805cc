#include <algorithm>
#include <string>

#include "framecast/error.hpp"
#include "framecast/linalg.hpp"
#include "framecast/recon.hpp"

namespace framecast {

namespace {

void require_length(const Frame& frame, std::size_t n)
{
    if (n != frame.size()) {
        throw FrameError(ErrorKind::ShapeMismatch,
                         "expected " + std::to_string(frame.size()) + " coefficients, got " +
                             std::to_string(n));
    }
}

// sum_i c_i row_i(m)
ComplexVector combine_rows(const ComplexMatrix& m, std::span<const Complex> c)
{
    ComplexVector out(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (c[i] == Complex{}) continue;
        auto row = m.row(i);
        for (std::size_t p = 0; p < m.cols(); ++p) out[p] += c[i] * row[p];
    }
    return out;
}

} // namespace

ComplexVector reconstruct_parseval(const Frame& parseval, std::span<const Complex> coefficients)
{
    require_length(parseval, coefficients.size());
    return combine_rows(parseval.vectors, coefficients);
}

ComplexVector analysis_coefficients(const Frame& frame, std::span<const Complex> f)
{
    if (f.size() != frame.dim()) {
        throw FrameError(ErrorKind::DimensionMismatch,
                         "signal has length " + std::to_string(f.size()) + ", frame dimension is " +
                             std::to_string(frame.dim()));
    }
    ComplexVector out(frame.size());
    for (std::size_t n = 0; n < frame.size(); ++n) out[n] = inner(f, frame[n]);
    return out;
}

ComplexVector reconstruct_dual(const Frame& frame, std::span<const Complex> coefficients,
                               const DualOptions& options)
{
    require_length(frame, coefficients.size());
    GramSchmidtResult gs;
    try {
        gs = gram_schmidt(frame.vectors, options.tol.rank);
    } catch (const FrameError& e) {
        if (e.kind() != ErrorKind::AllZeroInput) throw;
        throw FrameError(ErrorKind::NotAFrame, "every frame vector is zero");
    }

    // In ONB coordinates f_n is column n of t = coeffs^T and S restricted to
    // the span is t t^*, which is invertible by construction.
    const ComplexMatrix t = gs.coeffs.transpose();
    const auto eig = herm_eig(multiply_adjoint(t, t));
    const double lo = eig.values.front();
    const double hi = eig.values.back();
    if (!(lo > 0.0) || hi / lo > options.max_condition) {
        throw FrameError(ErrorKind::IllConditioned,
                         "frame operator condition number " + std::to_string(hi / lo) +
                             " exceeds " + std::to_string(options.max_condition));
    }
    const ComplexMatrix s_inv = spectral_function(eig, [](double x) { return 1.0 / x; });
    const ComplexVector y = s_inv * std::span<const Complex>(t * coefficients);
    return combine_rows(gs.onb, y);
}

TruncationSplit truncate_split(const Frame& frame, std::span<const Complex> full_coefficients,
                               std::size_t n_tilde, const DualOptions& options)
{
    require_length(frame, full_coefficients.size());
    if (n_tilde < 1 || n_tilde > frame.size()) {
        throw FrameError(ErrorKind::InvalidArgument,
                         "retained term count must lie in [1, " + std::to_string(frame.size()) + "]");
    }
    const ComplexVector f = reconstruct_dual(frame, full_coefficients, options);
    ComplexVector kept(full_coefficients.begin(), full_coefficients.end());
    std::fill(kept.begin() + static_cast<std::ptrdiff_t>(n_tilde), kept.end(), Complex{});
    TruncationSplit out;
    out.f_tilde = reconstruct_dual(frame, kept, options);
    out.f_eps_norm = distance(f, out.f_tilde);
    return out;
}

} // namespace framecast
