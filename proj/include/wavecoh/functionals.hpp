#ifndef WAVECOH_FUNCTIONALS_HPP
#define WAVECOH_FUNCTIONALS_HPP

#include <optional>

#include "wavecoh/cohomology.hpp"
#include "wavecoh/contour.hpp"
#include "wavecoh/pole_expansion.hpp"
#include "wavecoh/wave.hpp"

namespace wavecoh {

/// l_j(q) = integral of q(x) e^{h(x)} along the j-th contour, to relative
/// accuracy 2^(-bits/3) against the contour mass (or to abs_tol when given).
QuadratureResult l_functional(const PoleExpansion& q, int j, const CubicWeight& w,
                              const PrecisionContext& ctx,
                              const std::optional<BigFloat>& abs_tol = std::nullopt);

/// Same integral on a caller-supplied contour (deformation tests).
QuadratureResult l_functional_on(const PoleExpansion& q, const Contour& contour,
                                 const CubicWeight& w, const PrecisionContext& ctx,
                                 const std::optional<BigFloat>& abs_tol = std::nullopt);

/// J_j = l_j(1/p^2).
QuadratureResult J_value(const SpectralDatum& sd, int j, const PrecisionContext& ctx);

/// y_j(x) = p(x) * integral of e^{h}/p^2 from infinity in sector j to x.
QuadratureResult y_solution(const SpectralDatum& sd, int j, const Cplx& x,
                            const PrecisionContext& ctx,
                            const std::optional<BigFloat>& abs_tol = std::nullopt);

/// Connection residual y_{j+1}(x) - y_j(x) + J_j p(x)  (j+1 mod 3).
Cplx connection_residual(const SpectralDatum& sd, int j, const Cplx& x, const PrecisionContext& ctx);

/// ODE residual of y_j at x by centered differences with step 2^(-bits/4);
/// the three y-values are integrated to a tightened tolerance so the
/// division by step^2 does not amplify quadrature noise.
struct YOdeResidual {
    BigFloat residual{0.0, 64};
    BigFloat scale{0.0, 64};
};
YOdeResidual y_ode_residual(const SpectralDatum& sd, int j, const Cplx& x,
                            const PrecisionContext& ctx);

/// Deviations |y_j(x) x^{n+2} e^{-h(x)} - 1| at |x| in {4, 8, 16} along the
/// mid-ray of H_j.
std::vector<BigFloat> y_asymptotic_deviations(const SpectralDatum& sd, int j,
                                              const PrecisionContext& ctx);

/// g_j^{[1]} presentation of the dual solution: integral of
/// (-x)^k p(-x) e^{h(x) - u x} (k-th u-derivative under the integral sign).
QuadratureResult dual_g1(const SpectralDatum& sd, int j, const Cplx& u, const PrecisionContext& ctx,
                         long deriv_order = 0);

/// g_j^{[2]} presentation: integral of sum_r u^{n-r} p^{(r)}(x) e^{h-ux}/p^2.
QuadratureResult dual_g2(const SpectralDatum& sd, int j, const Cplx& u, const PrecisionContext& ctx);

/// u g'' - n g' - (u^2 - a u + b) g for the g1 presentation, evaluated as a
/// single combined integrand, plus the magnitude scale of its three parts.
struct DualOdeResidual {
    Cplx residual;
    BigFloat scale{0.0, 64};
};
DualOdeResidual dual_ode_residual(const SpectralDatum& sd, int j, const Cplx& u,
                                  const PrecisionContext& ctx);

/// Rebuild p from the u-derivatives of g at 0: sum_s g^{(s)}(0)/s! e_{n-s}.
/// Returns the reconstruction and the proportionality factor g(0)/n!; throws
/// ReconstructionMismatch when it is not a scalar multiple of p.
struct TaylorReconstruction {
    Poly<Cplx> reconstruction;
    Cplx alpha;
    BigFloat max_relative_error{0.0, 64};
};
TaylorReconstruction taylor_reconstruct_p(const SpectralDatum& sd, int j, const PrecisionContext& ctx);

/// Ratio test against i (-1)^{n+j'} sqrt(pi) u^{n/2-1/4} e^{-2/3 u^{3/2} + a u^{1/2}}
/// at growing |u| down a fixed direction inside the principal-branch-safe
/// part of the sector. Arithmetic runs at a boosted precision covering the
/// e^{-2/3 |u|^{3/2}} cancellation.
struct AsymptoticSample {
    double u_mag;
    Cplx ratio;
    BigFloat deviation{0.0, 64}; // |ratio - 1|
};
struct AsymptoticsReport {
    std::vector<AsymptoticSample> samples;
    bool monotone_decreasing = false;
    double arg_u = 0.0;
};
AsymptoticsReport asymptotics_check_g(const SpectralDatum& sd, int j, const PrecisionContext& ctx,
                                      const std::vector<double>& magnitudes = {20.0, 40.0, 80.0});

/// det of [ l_j(e_k) ] for j in {1,2}, k in {0,1}; nonzero iff l_1, l_2 are
/// independent functionals.
Cplx independence_determinant(const CubicWeight& w, const PrecisionContext& ctx);

} // namespace wavecoh

#endif
