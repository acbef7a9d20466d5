#ifndef WAVECOH_ROOTS_HPP
#define WAVECOH_ROOTS_HPP

#include <vector>

#include "wavecoh/poly.hpp"
#include "wavecoh/precision.hpp"

namespace wavecoh {

/// A cluster of numerically coincident roots: one location with a
/// multiplicity.
struct RootCluster {
    Cplx location;
    int order = 1;
};

/// All complex roots of a nonzero polynomial, with multiplicity, by
/// simultaneous Ehrlich-Aberth iteration started on a circle scaled from the
/// coefficient magnitudes. Each returned location satisfies
/// |poly(z)| <= zero_tolerance * max|coefficients|; numerically coincident
/// roots are merged into one cluster and re-polished with a
/// multiplicity-aware Newton step.
///
/// Throws NonConvergence when the residual target is unreachable at the
/// context precision.
std::vector<RootCluster> complex_roots(const Poly<Cplx>& poly, const PrecisionContext& ctx);

/// Flat list (each cluster repeated `order` times).
std::vector<Cplx> roots_with_multiplicity(const std::vector<RootCluster>& clusters);

} // namespace wavecoh

#endif
