#include <gtest/gtest.h>

#include <cmath>

#include "framecast/error.hpp"
#include "framecast/linalg.hpp"
#include "framecast/spiral.hpp"
#include "test_support.hpp"

namespace framecast {
namespace {

using testing::Generator;
using testing::relative_error;

// sinc values and Gram-Schmidt ratios evaluated in 30-digit arithmetic
constexpr double sinc_11_12 = 0.0898741754059426563;
constexpr double sinc_28_15 = -0.069358014945125921924;
constexpr double sinc_19_20 = 0.0524154071180821775891;
constexpr double theta_ex = 0.05912648788507735;
constexpr double gamma_ex = -0.048422872710846804;
constexpr double delta_ex = -0.041499259407463414; // closed form as printed

double orthonormality_defect(const ComplexMatrix& rows)
{
    return (multiply_adjoint(rows, rows) - ComplexMatrix::identity(rows.rows())).frobenius_norm();
}

TEST(GramSchmidt, IdentityIsFixed)
{
    const auto gs = gram_schmidt(ComplexMatrix::identity(3));
    EXPECT_EQ(gs.onb, ComplexMatrix::identity(3));
    EXPECT_EQ(gs.coeffs, ComplexMatrix::identity(3));
    EXPECT_EQ(gs.pivot_order, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(GramSchmidt, DependentVectorGetsCoefficientButNoPivot)
{
    using namespace std::complex_literals;
    const ComplexMatrix v{{1.0, 2i, -0.5}, {2.0, 4i, -1.0}};
    const auto gs = gram_schmidt(v);
    EXPECT_EQ(gs.pivot_order, (std::vector<std::size_t>{0}));
    ASSERT_EQ(gs.coeffs.cols(), 1u);
    EXPECT_NEAR(std::abs(gs.coeffs(1, 0) / gs.coeffs(0, 0) - 2.0), 0.0, 1e-15);
    EXPECT_LT(relative_error(gs.coeffs * gs.onb, v), 1e-15);
}

TEST(GramSchmidt, AllZeroInputIsRejected)
{
    try {
        gram_schmidt(ComplexMatrix(2, 3));
        FAIL() << "expected AllZeroInput";
    } catch (const FrameError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::AllZeroInput);
    }
}

TEST(GramSchmidt, ExponentialCoefficientsMatchClosedForms)
{
    const std::vector<double> lambdas{10.0 / 3, 17.0 / 4, 26.0 / 5, 37.0 / 6};
    const auto frame = interval_exponential_frame(lambdas, 0.5).frame;
    const auto gs = gram_schmidt(frame.vectors);
    ASSERT_EQ(gs.rank(), 4u);
    const auto ratio = [&](std::size_t i, std::size_t k) {
        return (gs.coeffs(i, k) / gs.coeffs(k, k)).real();
    };
    EXPECT_NEAR(ratio(1, 0), sinc_11_12, 1e-15);
    EXPECT_NEAR(ratio(2, 0), sinc_28_15, 1e-15);
    EXPECT_NEAR(ratio(2, 1), theta_ex, 1e-14);
    EXPECT_NEAR(ratio(3, 0), sinc(17.0 / 6), 1e-15);
    EXPECT_NEAR(ratio(3, 1), gamma_ex, 1e-14);
    // the printed closed form for the f_4 coefficient on e_3 has the wrong sign
    EXPECT_NEAR(ratio(3, 2), -delta_ex, 1e-14);

    const double c21 = sinc_11_12, c31 = sinc_28_15, c32 = sinc_19_20;
    EXPECT_NEAR((c32 - c21 * c31) / (1 - c21 * c21), theta_ex, 1e-16);
}

TEST(GramSchmidt, OrthonormalInputIsReturnedUnchanged)
{
    Generator gen(21);
    const ComplexMatrix q = gen.unitary(6).adjoint().select_rows(std::vector<std::size_t>{0, 1, 2, 3});
    const auto gs = gram_schmidt(q);
    EXPECT_LT((gs.onb - q).frobenius_norm(), 1e-10);
    EXPECT_LT((gs.coeffs - ComplexMatrix::identity(4)).frobenius_norm(), 1e-10);
}

TEST(GramSchmidt, InvariantsOnRandomRankDeficientInput)
{
    Generator gen(22);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t d = gen.index(2, 9);
        const std::size_t r = gen.index(1, d);
        const std::size_t m = gen.index(r, 14);
        const ComplexMatrix v = gen.gaussian_matrix(m, r) * gen.gaussian_matrix(r, d);
        const auto gs = gram_schmidt(v);
        EXPECT_EQ(gs.rank(), r);
        EXPECT_LT(orthonormality_defect(gs.onb), 1e-12);
        EXPECT_LT(relative_error(gs.coeffs * gs.onb, v), 1e-12);
        std::vector<std::size_t> sorted = gs.pivot_order;
        std::sort(sorted.begin(), sorted.end());
        EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
    }
}

TEST(Svd, DiagonalAndPermutation)
{
    const auto s = svd(ComplexMatrix{{3.0, 0.0}, {0.0, 2.0}});
    EXPECT_EQ(s.sigma, (std::vector<double>{3.0, 2.0}));
    EXPECT_LT((s.u - ComplexMatrix::identity(2)).frobenius_norm(), 1e-15);
    EXPECT_LT((s.v - ComplexMatrix::identity(2)).frobenius_norm(), 1e-15);

    const auto p = svd(ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}});
    ASSERT_EQ(p.sigma.size(), 2u);
    EXPECT_NEAR(p.sigma[0], 1.0, 1e-15);
    EXPECT_NEAR(p.sigma[1], 1.0, 1e-15);
}

ComplexMatrix rebuild(const SvdResult& s)
{
    ComplexMatrix us = s.u;
    for (std::size_t i = 0; i < us.rows(); ++i)
        for (std::size_t k = 0; k < s.rank(); ++k) us(i, k) *= s.sigma[k];
    return multiply_adjoint(us, s.v);
}

TEST(Svd, RoundTripAndSingularValuesAgreeWithEigen)
{
    Generator gen(23);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t m = gen.index(1, 30);
        const std::size_t n = gen.index(1, 30);
        const ComplexMatrix a = gen.gaussian_matrix(m, n);
        const auto s = svd(a);
        EXPECT_LE(relative_error(rebuild(s), a), 1e-11) << m << "x" << n;
        EXPECT_TRUE(std::is_sorted(s.sigma.rbegin(), s.sigma.rend()));
        EXPECT_LT(orthonormality_defect(s.u.adjoint()), 1e-12);
        EXPECT_LT(orthonormality_defect(s.v.adjoint()), 1e-12);

        const Eigen::JacobiSVD<testing::EigenMatrix> oracle(testing::to_eigen(a));
        const auto all = singular_values(a);
        ASSERT_EQ(all.size(), std::min(m, n));
        for (std::size_t k = 0; k < all.size(); ++k)
            EXPECT_NEAR(all[k], oracle.singularValues()(static_cast<Eigen::Index>(k)),
                        1e-12 * all.front());
    }
}

TEST(Svd, CompactRankOfLowRankProduct)
{
    Generator gen(24);
    const ComplexMatrix a = gen.gaussian_matrix(12, 3) * gen.gaussian_matrix(3, 8);
    const auto s = svd(a);
    EXPECT_EQ(s.rank(), 3u);
    EXPECT_EQ(s.u.cols(), 3u);
    EXPECT_EQ(s.v.rows(), 8u);
    EXPECT_LT(relative_error(rebuild(s), a), 1e-12);
}

TEST(Svd, FixedRankAndZeroMatrix)
{
    SvdOptions opts;
    opts.fixed_rank = 2;
    Generator gen(25);
    EXPECT_EQ(svd(gen.gaussian_matrix(5, 4), opts).rank(), 2u);
    const auto z = svd(ComplexMatrix(3, 2));
    ASSERT_EQ(z.sigma.size(), 1u);
    EXPECT_EQ(z.sigma[0], 0.0);
}

TEST(Svd, SweepBudgetExhaustionRaisesNoConvergence)
{
    Generator gen(26);
    SvdOptions opts;
    opts.max_sweeps = 1;
    try {
        svd(gen.gaussian_matrix(10, 10), opts);
        FAIL() << "one sweep cannot orthogonalise a random 10x10 matrix";
    } catch (const FrameError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NoConvergence);
    }
}

TEST(Polar, TrivialCases)
{
    const auto id = polar_decompose(ComplexMatrix::identity(3));
    EXPECT_LT((id.w - ComplexMatrix::identity(3)).frobenius_norm(), 1e-15);
    EXPECT_LT((id.p - ComplexMatrix::identity(3)).frobenius_norm(), 1e-15);

    const auto d = polar_decompose(ComplexMatrix{{2.0, 0.0}, {0.0, 3.0}});
    EXPECT_LT((d.w - ComplexMatrix::identity(2)).frobenius_norm(), 1e-15);
    EXPECT_LT((d.p - ComplexMatrix{{2.0, 0.0}, {0.0, 3.0}}).frobenius_norm(), 1e-14);
}

TEST(Polar, SixVectorSynthesisMatrixGivesCoIsometry)
{
    const double c21 = sinc_11_12, c31 = sinc_28_15, th = theta_ex;
    const ComplexMatrix t{{1.0, c21, c31, 1.0 + c21, 1.0 + c31, c21 + c31},
                          {0.0, 1.0, th, 1.0, th, 1.0 + th},
                          {0.0, 0.0, 1.0, 0.0, 1.0, 1.0}};
    const auto pd = polar_decompose(t);
    EXPECT_LT((multiply_adjoint(pd.w, pd.w) - ComplexMatrix::identity(3)).frobenius_norm(), 1e-10);
    EXPECT_LT(relative_error(pd.w * pd.p, t), 1e-10);
    EXPECT_LT((pd.p - pd.p.adjoint()).frobenius_norm(), 1e-10 * pd.p.frobenius_norm());
    for (double ev : herm_eig(pd.p).values) EXPECT_GE(ev, -1e-10);
    // the rows of w^T e with e the standard basis form a Parseval frame
    const ComplexMatrix g = pd.w.transpose();
    EXPECT_LT((adjoint_multiply(g.conj(), g.conj()) - ComplexMatrix::identity(3)).frobenius_norm(), 1e-10);
}

TEST(Polar, RankDeficientInputGivesStrictPartialIsometry)
{
    Generator gen(27);
    const ComplexMatrix t = gen.gaussian_matrix(4, 2) * gen.gaussian_matrix(2, 6);
    const auto pd = polar_decompose(t);
    EXPECT_LT(relative_error(pd.w * pd.p, t), 1e-12);
    const auto iso = is_partial_isometry(pd.w, 1e-12);
    EXPECT_TRUE(iso.is_partial_isometry);
    EXPECT_NEAR(iso.coisometry_defect, std::sqrt(2.0), 1e-12);
}

TEST(Polar, FactorIsClosestUnitary)
{
    Generator gen(28);
    for (int trial = 0; trial < 5; ++trial) {
        const ComplexMatrix t = gen.gaussian_matrix(4, 4);
        const auto pd = polar_decompose(t);
        const double best = (pd.w - t).frobenius_norm();
        for (int s = 0; s < 200; ++s) EXPECT_GE((gen.unitary(4) - t).frobenius_norm(), best);
    }
}

TEST(Hermitian, EigenvaluesMatchEigen)
{
    Generator gen(29);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = gen.index(1, 16);
        const ComplexMatrix a = gen.gaussian_matrix(n, n);
        const ComplexMatrix h = a + a.adjoint();
        const auto eig = herm_eig(h);
        const Eigen::SelfAdjointEigenSolver<testing::EigenMatrix> oracle(testing::to_eigen(h));
        for (std::size_t k = 0; k < n; ++k)
            EXPECT_NEAR(eig.values[k], oracle.eigenvalues()(static_cast<Eigen::Index>(k)),
                        1e-12 * h.frobenius_norm());
        EXPECT_LT(orthonormality_defect(eig.vectors.adjoint()), 1e-12);
    }
}

TEST(Hermitian, NonHermitianInputIsRejected)
{
    try {
        herm_eig(ComplexMatrix{{1.0, 2.0}, {0.0, 1.0}});
        FAIL() << "expected NotHermitian";
    } catch (const FrameError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotHermitian);
    }
}

TEST(Hermitian, InverseSquareRootExamples)
{
    EXPECT_LT((herm_inv_sqrt(ComplexMatrix::identity(3), 1e-12) - ComplexMatrix::identity(3)).frobenius_norm(),
              1e-15);
    const std::vector<double> d{4.0, 9.0};
    const ComplexMatrix x = herm_inv_sqrt(ComplexMatrix::diagonal(d), 1e-12);
    EXPECT_LT((x - ComplexMatrix{{0.5, 0.0}, {0.0, 1.0 / 3}}).frobenius_norm(), 1e-15);
    const std::vector<double> s{2.0, 1.0};
    const ComplexMatrix y = herm_inv_sqrt(ComplexMatrix::diagonal(s), 1e-12);
    EXPECT_NEAR(y(0, 0).real(), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(y(1, 1).real(), 1.0, 1e-15);
}

TEST(Hermitian, InverseSquareRootRejectsSingular)
{
    const std::vector<double> d{1.0, 0.0};
    try {
        herm_inv_sqrt(ComplexMatrix::diagonal(d), 1e-12);
        FAIL() << "expected NotPositiveDefinite";
    } catch (const FrameError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotPositiveDefinite);
    }
}

ComplexMatrix random_spd(Generator& gen, std::size_t n, double cond)
{
    const ComplexMatrix u = gen.unitary(n);
    std::vector<double> ev(n);
    for (auto& e : ev) e = gen.log_uniform(1.0, cond);
    ev.front() = 1.0;
    if (n > 1) ev.back() = cond;
    const ComplexMatrix s = u * ComplexMatrix::diagonal(ev) * u.adjoint();
    return 0.5 * (s + s.adjoint());
}

TEST(Hermitian, InverseSquareRootConsistency)
{
    Generator gen(30);
    for (int trial = 0; trial < 25; ++trial) {
        const ComplexMatrix s = random_spd(gen, gen.index(1, 12), 1e4);
        const ComplexMatrix x = herm_inv_sqrt(s, 1e-12 * s.frobenius_norm());
        EXPECT_EQ(x, x.adjoint());
        EXPECT_LT(testing::inverse_sqrt_residual(x, s), 1e-10);
    }
}

TEST(Hermitian, InverseSquareRootAtConditionMillionIsAtRoundingFloor)
{
    // rounding x to double alone leaves |x x s - I| near cond * eps = 2e-10
    Generator gen(31);
    for (int trial = 0; trial < 25; ++trial) {
        const ComplexMatrix s = random_spd(gen, gen.index(2, 12), 1e6);
        const ComplexMatrix x = herm_inv_sqrt(s, 1e-12 * s.frobenius_norm());
        EXPECT_LT(testing::inverse_sqrt_residual(x, s), 1e-9);
    }
}

TEST(PartialIsometry, Examples)
{
    const auto id = is_partial_isometry(ComplexMatrix::identity(4), 1e-12);
    EXPECT_TRUE(id.is_partial_isometry);
    EXPECT_EQ(id.defect, 0.0);

    const ComplexMatrix embed{{1.0, 0.0}, {0.0, 1.0}, {0.0, 0.0}};
    EXPECT_TRUE(is_partial_isometry(embed, 1e-12).is_partial_isometry);

    const auto two = is_partial_isometry(ComplexMatrix{{2.0}}, 1e-12);
    EXPECT_FALSE(two.is_partial_isometry);
    EXPECT_DOUBLE_EQ(two.defect, 6.0);
}

} // namespace
} // namespace framecast
