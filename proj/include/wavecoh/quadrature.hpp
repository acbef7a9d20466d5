#ifndef WAVECOH_QUADRATURE_HPP
#define WAVECOH_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "wavecoh/cplx.hpp"
#include "wavecoh/precision.hpp"

namespace wavecoh {

struct QuadratureResult {
    Cplx value;
    BigFloat error_estimate{0.0, 64};
    long subdivisions = 0;

    QuadratureResult& operator+=(const QuadratureResult& o) {
        value += o.value;
        error_estimate += o.error_estimate;
        subdivisions += o.subdivisions;
        return *this;
    }
};

using Integrand = std::function<Cplx(const Cplx&)>;

/// Nodes and weights on [-1, 1] at the requested precision, cached per
/// (precision, order). Newton refinement from double-precision Chebyshev
/// initial guesses.
struct GaussLegendreRule {
    std::vector<BigFloat> nodes;
    std::vector<BigFloat> weights;
};

const GaussLegendreRule& gauss_legendre(mpfr_prec_t prec, int order = 24);

/// Adaptive integral of f along the straight segment a..b to absolute
/// accuracy abs_tol: bisect until the two-panel refinement agrees with the
/// single panel, with the budget shared across halves.
QuadratureResult integrate_segment(const Integrand& f, const Cplx& a, const Cplx& b,
                                   const BigFloat& abs_tol, long max_panels,
                                   const PrecisionContext& ctx);

/// Same, along the circular arc center + radius e^{i phi}, phi from phi0 to
/// phi1.
QuadratureResult integrate_arc(const Integrand& f, const Cplx& center, const BigFloat& radius,
                               const BigFloat& phi0, const BigFloat& phi1, const BigFloat& abs_tol,
                               long max_panels, const PrecisionContext& ctx);

/// Single non-adaptive pass of |f| along a..b; a cheap magnitude scale used
/// to convert relative targets into absolute ones.
BigFloat segment_mass(const Integrand& f, const Cplx& a, const Cplx& b, const PrecisionContext& ctx);

BigFloat arc_mass(const Integrand& f, const Cplx& center, const BigFloat& radius,
                  const BigFloat& phi0, const BigFloat& phi1, const PrecisionContext& ctx);

} // namespace wavecoh

#endif
