#ifndef WAVECOH_COHOMOLOGY_HPP
#define WAVECOH_COHOMOLOGY_HPP

#include <optional>
#include <vector>

#include "wavecoh/pole_expansion.hpp"
#include "wavecoh/wave.hpp"

namespace wavecoh {

/// Residues of q(x) e^{h(x)} at each pole, in closed form through the Taylor
/// series of exp(h(z+t)-h(z)). q is in R exactly when every combined residue
/// vanishes.
struct ResidueEntry {
    Cplx z;
    Cplx residue;      // includes the e^{h(z)} factor
    BigFloat scale;    // magnitude the cancellation is measured against
};

struct ResidueReport {
    std::vector<ResidueEntry> entries;
    bool in_R = true;
    BigFloat max_relative{0.0, 64}; // worst |residue|/scale over the poles
};

ResidueReport check_in_R(const PoleExpansion& q, const CubicWeight& w, const PrecisionContext& ctx);

/// Explicit witness u with D(u) = q - canonical_form; machine-checkable.
struct ExactnessCertificate {
    PoleExpansion u;
};

/// Cohomology class of q: the linear canonical form q ~ alpha x + beta,
/// optionally the wave-basis coordinates q ~ (c + d f)/p^2, and the
/// certificate connecting q to the stored canonical representative.
struct CohomologyClass {
    Cplx alpha, beta;
    bool has_wave_coords = false;
    Cplx c, d;
    ExactnessCertificate certificate;
    PoleExpansion canonical;
};

/// Reduce q modulo the image of D to alpha x + beta. Pole orders >= 2 are
/// removed highest-first by subtracting D(c/(x-z)^{k-1}); the simple-pole
/// coefficients left behind must vanish (forced for q in R), else
/// ResidueObstruction. Then monomials of degree >= 2 are removed by
/// subtracting multiples of D(x^{d-2}).
CohomologyClass reduce_to_linear(const PoleExpansion& q, const CubicWeight& w,
                                 const PrecisionContext& ctx);

/// Solve for (c, d) with q ~ (c + d f)/p^2 against the reduced linear forms
/// of the two basis elements. Requires q shaped as R(p): poles only at roots
/// of p with order <= 2. Throws SingularBasis when the 2x2 system degenerates.
CohomologyClass wave_basis_coordinates(const PoleExpansion& q, const SpectralDatum& sd,
                                       const PrecisionContext& ctx);

struct CertificateCheck {
    bool pass = false;
    BigFloat max_residual{0.0, 64};
};

/// Recombine apply_D(certificate.u) + canonical form and compare with q
/// coefficient-wise.
CertificateCheck verify_certificate(const PoleExpansion& q, const CohomologyClass& cls,
                                    const CubicWeight& w, const PrecisionContext& ctx);

/// e_k(-x) p(-x) ~ (-1)^n p_{n-k} / p^2: measured coordinates and the
/// predicted constant.
struct TheoremCReport {
    long k = 0;
    Cplx c_measured, d_measured;
    Cplx c_expected;
    BigFloat c_error{0.0, 64};   // |c - expected| / (1 + |expected|)
    BigFloat d_error{0.0, 64};   // |d|
};

TheoremCReport theorem_c_check(const SpectralDatum& sd, long k, const PrecisionContext& ctx);

/// r(x) p(-x) ~ c/p^2 with no f-component: reports |d|.
struct TheoremD0Report {
    Cplx c, d;
    BigFloat d_error{0.0, 64};
};

TheoremD0Report theorem_d0_check(const SpectralDatum& sd, const Poly<Cplx>& r,
                                 const PrecisionContext& ctx);

/// Four-way agreement for the characteristic-derivative constant: the
/// symbolic reduction of p^2(-x), chi'(b), the self-pairing sum, and (when
/// supplied by the contour layer) the quadrature ratio.
struct CorollaryReport {
    Cplx c_reduction;
    Cplx c_chi_prime;
    Cplx c_selfpair;
    std::optional<Cplx> c_contour;
    BigFloat max_pairwise{0.0, 64};
};

CorollaryReport corollary_check(const SpectralDatum& sd, const std::optional<Cplx>& contour_c,
                                const PrecisionContext& ctx);

/// 1/p^2 and f/p^2 as pole expansions over the roots of p.
PoleExpansion one_over_p2(const SpectralDatum& sd, const PrecisionContext& ctx);
PoleExpansion f_over_p2(const SpectralDatum& sd, const PrecisionContext& ctx);

} // namespace wavecoh

#endif
