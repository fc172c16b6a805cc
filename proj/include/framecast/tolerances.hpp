#pragma once

namespace framecast {

/// Relative (Frobenius) tolerances shared by the linear-algebra and frame
/// modules. `rank` is the numerical-rank cutoff: singular values below
/// rank * sigma_max, and Gram-Schmidt residuals below rank * |f|, count as zero.
struct Tolerances {
    double svd = 1e-10;
    double polar = 1e-10;
    double gs = 1e-10;
    double frame = 1e-10;
    double rank = 1e-12;

    /// Sets every checking tolerance (not the rank cutoff) to `tol`.
    static Tolerances uniform(double tol)
    {
        Tolerances t;
        t.svd = t.polar = t.gs = t.frame = tol;
        return t;
    }
};

} // namespace framecast
