#pragma once

// Dense complex kernels behind the frame algorithms: pivoted Gram-Schmidt,
// one-sided Jacobi SVD, polar decomposition, and Hermitian spectral
// functions via cyclic Jacobi.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "framecast/complex_matrix.hpp"

namespace framecast {

struct GramSchmidtResult {
    ComplexMatrix onb;    // r x d, rows orthonormal
    ComplexMatrix coeffs; // m x r, f_i = sum_k coeffs(i,k) e_k
    std::vector<std::size_t> pivot_order;

    std::size_t rank() const noexcept { return pivot_order.size(); }
};

/// Modified Gram-Schmidt with one reorthogonalisation pass over the rows of
/// `vectors`, first-come pivoting. A vector whose residual is at most
/// tol_rank * |f_i| is dependent: it gets coefficients but no new basis
/// vector. Leading coefficients of pivots are real and positive.
GramSchmidtResult gram_schmidt(const ComplexMatrix& vectors, double tol_rank = 1e-12);

struct SvdOptions {
    int max_sweeps = 60;
    double rotation_tol = 1e-14;
    /// Singular values at or below rank_tol * sigma_max are dropped.
    double rank_tol = 1e-12;
    /// Keep exactly this many singular triplets instead of thresholding.
    std::optional<std::size_t> fixed_rank;
};

/// Compact SVD a = u * diag(sigma) * v^H, sigma descending; u is rows x r,
/// v is cols x r. Always r >= 1 (a zero matrix yields sigma = {0}).
struct SvdResult {
    ComplexMatrix u;
    std::vector<double> sigma;
    ComplexMatrix v;

    std::size_t rank() const noexcept { return sigma.size(); }
};

SvdResult svd(const ComplexMatrix& a, const SvdOptions& options = {});

/// All min(rows, cols) singular values, descending.
std::vector<double> singular_values(const ComplexMatrix& a, const SvdOptions& options = {});

struct PolarDecomposition {
    ComplexMatrix w; // n x m partial isometry
    ComplexMatrix p; // m x m Hermitian PSD, |t|
};

/// t = w * p with w = u v^H and p = v diag(sigma) v^H from the compact SVD.
PolarDecomposition polar_decompose(const ComplexMatrix& t, const SvdOptions& options = {});

struct HermitianEigen {
    std::vector<double> values; // ascending
    ComplexMatrix vectors;      // eigenvectors in columns
};

/// Cyclic Jacobi eigen-solver. Throws NotHermitian when
/// |s - s^H|_F > hermitian_tol * |s|_F.
HermitianEigen herm_eig(const ComplexMatrix& s, double hermitian_tol = 1e-10);

/// Q f(Lambda) Q^H.
ComplexMatrix spectral_function(const HermitianEigen& eig, const std::function<double(double)>& f);

/// s^{-1/2}; NotPositiveDefinite if any eigenvalue <= tol_psd.
ComplexMatrix herm_inv_sqrt(const ComplexMatrix& s, double tol_psd);

struct IsometryCheck {
    bool is_partial_isometry = false;
    double defect = 0.0;            // |w w^H w - w|_F
    double coisometry_defect = 0.0; // |w w^H - I|_F
};

IsometryCheck is_partial_isometry(const ComplexMatrix& w, double tol);

} // namespace framecast
