#ifndef WAVECOH_CONTOUR_HPP
#define WAVECOH_CONTOUR_HPP

#include <optional>
#include <vector>

#include "wavecoh/quadrature.hpp"
#include "wavecoh/weight.hpp"

namespace wavecoh {

/// One smooth piece of an integration path: a straight segment or a circular
/// detour arc around a pole.
struct ContourSegment {
    enum class Kind { Line, Arc };
    Kind kind = Kind::Line;
    Cplx a, b;                       // line endpoints (Kind::Line)
    Cplx center;                     // arc data (Kind::Arc)
    BigFloat radius{0.0, 64};
    BigFloat phi0{0.0, 64}, phi1{0.0, 64};
};

/// Integration path for one sector index j in {0,1,2}: runs from infinity in
/// direction pi(1/3 + 2j/3) through the origin region to infinity in
/// direction pi(1 + 2j/3), truncated where the weight has decayed below the
/// precision budget, with circular detours keeping clearance
/// delta(z) = 0.1 (1 + |z|) from every supplied pole.
struct Contour {
    int j = 0;
    std::vector<ContourSegment> segments;
    BigFloat truncation_radius{0.0, 64};
    std::optional<Cplx> endpoint; // set for half-contours ending at a point
};

/// Half-plane H_j = { pi(-1/6 + 2j/3) < arg z < pi(5/6 + 2j/3) }.
struct Sector {
    int j = 0;
    bool contains(const Cplx& z) const;
    /// Direction of the mid-ray of the half-plane.
    Cplx bisector(mpfr_prec_t prec) const;
};

/// Incoming/outgoing asymptotic directions of the j-th contour.
BigFloat incoming_angle(int j, mpfr_prec_t prec);
BigFloat outgoing_angle(int j, mpfr_prec_t prec);

/// Truncation radius: smallest r with r^3/3 - (|a| + u_bound) r >= decay_bits * ln 2,
/// bumped past every pole.
double truncation_radius(double a_mag, double u_bound, double decay_bits,
                         const std::vector<Cplx>& poles);

/// Full contour for l_j-type integrals. u_bound widens the truncation for
/// integrands carrying an extra e^{-ux} factor.
Contour build_contour(int j, const std::vector<Cplx>& poles, const CubicWeight& w,
                      const PrecisionContext& ctx, double u_bound = 0.0);

/// Half-contour from infinity in the incoming direction of sector j to the
/// endpoint x. Throws IllConditioned if x sits inside a pole's clearance.
Contour build_half_contour(int j, const Cplx& x, const std::vector<Cplx>& poles,
                           const CubicWeight& w, const PrecisionContext& ctx);

/// A deliberately different admissible path for the same sector (zig through
/// interior waypoints); used to exercise deformation independence.
Contour build_contour_variant(int j, const std::vector<Cplx>& poles, const CubicWeight& w,
                              const PrecisionContext& ctx, double u_bound = 0.0);

/// Adaptive integral of f along the contour.
QuadratureResult integrate_along(const Contour& contour, const Integrand& f,
                                 const BigFloat& abs_tol, long max_panels,
                                 const PrecisionContext& ctx);

/// Cheap one-pass magnitude estimate of the contour integral of |f|.
BigFloat contour_mass(const Contour& contour, const Integrand& f, const PrecisionContext& ctx);

} // namespace wavecoh

#endif
