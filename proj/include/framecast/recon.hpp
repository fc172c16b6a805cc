#pragma once

// Reconstruction from frame coefficients, truncated dual-frame sums, and
// truncation-error bounds for Fourier-frame expansions of smooth functions.

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "framecast/complex_matrix.hpp"
#include "framecast/frame.hpp"
#include "framecast/tolerances.hpp"

namespace framecast {

/// sum_i c_i g_i for a Parseval frame {g_i}. ShapeMismatch on length.
ComplexVector reconstruct_parseval(const Frame& parseval, std::span<const Complex> coefficients);

struct DualOptions {
    Tolerances tol;
    /// IllConditioned when the frame operator on the span exceeds this.
    double max_condition = 1e12;
};

/// sum_n c_n S^{-1} f_n with S restricted to the span of the frame.
/// NotAFrame for all-zero input, IllConditioned above max_condition.
ComplexVector reconstruct_dual(const Frame& frame, std::span<const Complex> coefficients,
                               const DualOptions& options = {});

/// Analysis coefficients <f, f_n>.
ComplexVector analysis_coefficients(const Frame& frame, std::span<const Complex> f);

struct TruncationSplit {
    ComplexVector f_tilde;
    double f_eps_norm = 0.0;
};

/// f is the dual reconstruction from every coefficient; f_tilde keeps only
/// the first n_tilde terms in input order. InvalidArgument unless
/// 1 <= n_tilde <= frame size.
TruncationSplit truncate_split(const Frame& frame, std::span<const Complex> full_coefficients,
                               std::size_t n_tilde, const DualOptions& options = {});

/// deriv_l1 / (2 pi |lambda|)^k.
double fourier_decay_bound(int k, double deriv_l1, double lambda_abs);

/// (sqrt(n) / 2 pi)^k * partial_l1 / |lambda|^k.
double highdim_decay_bound(int n_dim, int k, double partial_l1, double lambda_norm);

enum class BoundFormula { Thm32, Eq35, HighDim };
std::string_view to_string(BoundFormula f) noexcept;

struct TruncationBoundInput {
    int k = 2;
    double deriv_l1 = 1.0;
    double A = 1.0;
    double R = 0.5;
    std::size_t n_tilde = 1;
    /// c with |lambda_n| >= c n; the bound scales by c^{-k}.
    double lambda_scale = 1.0;
};

struct ErrorBoundReport {
    double bound = 0.0;
    BoundFormula formula = BoundFormula::Thm32;
    TruncationBoundInput input;
    // high-dimensional decay inputs
    int n_dim = 1;
    double lambda_norm = 0.0;
};

/// sqrt(2R)/A * deriv_l1/(2 pi)^k * 2/((k-1)(n_tilde+1)^(k-1)) / lambda_scale^k.
/// Eq35 is the harmonic special case k = 2, A = 1, R = 1/2 and rejects
/// other inputs. InvalidArgument on k < 2, nonpositive scalars or n_tilde 0.
ErrorBoundReport truncation_bound(const TruncationBoundInput& input,
                                  BoundFormula formula = BoundFormula::Thm32);

ErrorBoundReport highdim_report(int n_dim, int k, double partial_l1, double lambda_norm);

/// sum over entries n >= cutoff of |fhat_n|. Labels must be sorted by |lambda|.
double tail_sum(std::span<const double> labels, std::span<const Complex> fhat, std::size_t cutoff);

/// Harmonic labels 0, 1, -1, 2, -2, ..., the first 2 n_tilde + 1 of which
/// form the symmetric cutoff |n| <= n_tilde.
std::vector<double> harmonic_labels(std::size_t count);

struct SeriesResidual {
    double residual_l2 = 0.0; // |f - sum_n <f, e_n> e_n|_2 on [a, b]
    double f_l2 = 0.0;
    std::vector<Complex> coefficients;
};

/// Expansion of a real f on [a, a + 1] in the orthonormal exponentials
/// e_lambda(t) = e^{2 pi i lambda t} with integer lambdas; the residual norm
/// is integrated directly, not obtained by subtraction of squared norms.
SeriesResidual exponential_series_residual(const std::function<double(double)>& f, double a,
                                           std::span<const double> lambdas);

} // namespace framecast
