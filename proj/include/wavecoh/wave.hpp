#ifndef WAVECOH_WAVE_HPP
#define WAVECOH_WAVE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wavecoh/poly.hpp"
#include "wavecoh/precision.hpp"
#include "wavecoh/roots.hpp"

namespace wavecoh {

/// The banded operator on polynomials of degree <= n, acting in the basis
/// e_k = x^k/k!:  column k has 1 two rows above the diagonal, -a one row
/// above, and (n-k)(k+1) one row below. Zero diagonal.
std::vector<std::vector<GaussRat>> wave_operator_matrix(long n, const GaussRat& a);

/// The operator applied as a differential expression, q'' - (x^2+a) q' + n x q.
/// Agrees with the matrix action on every basis vector; kept as the
/// independent route for tests.
Poly<GaussRat> apply_wave_operator(long n, const GaussRat& a, const Poly<GaussRat>& q);

/// det(A + lambda), exact, monic of degree n+1. Cofactor expansion along the
/// last column exploits the Hessenberg band: with s_j = (n-j)(j+1),
///   D_k = lambda D_{k-1} + a s_{k-2} D_{k-2} + s_{k-3} s_{k-2} D_{k-3}.
Poly<GaussRat> char_poly(long n, const GaussRat& a);

/// The admissible eigenvalues b: all n+1 roots of char_poly, with
/// multiplicity flags.
std::vector<RootCluster> spectrum(long n, const GaussRat& a, const PrecisionContext& ctx);

struct WavePolynomial {
    Poly<Cplx> p;               // monic, monomial basis
    std::vector<Cplx> ebasis;   // p_s with p_n = n!
    BigFloat consistency_residual; // leftover row-0 residual, a multiple of chi(b)
};

/// Wave polynomial for eigenvalue b by the downward coefficient recurrence
/// p_{m-1} = -(p_{m+2} - a p_{m+1} + b p_m)/((n-m+1) m), normalized p_n = n!.
/// Throws InconsistentEigenvalue when the leftover row-0 residual shows b was
/// not an eigenvalue to sufficient precision.
WavePolynomial wave_polynomial(long n, const GaussRat& a, const Cplx& b, const PrecisionContext& ctx);

/// (-1)^n (n!)^2 / p_n^2 * sum_s p_s p_{n-s} over the e-basis coefficients.
Cplx c_selfpair(const std::vector<Cplx>& ebasis, long n, const PrecisionContext& ctx);

/// chi'(b) for exact chi and numeric b.
Cplx chi_prime_at(const Poly<GaussRat>& chi, const Cplx& b, const PrecisionContext& ctx);

/// e-basis coefficient reversal p_s -> p_{n-s}.
std::vector<Cplx> reversal(const std::vector<Cplx>& ebasis);

/// One wave-polynomial eigenpair with its invariants, ready for the
/// cohomology and contour layers.
struct SpectralDatum {
    long n = 0;
    GaussRat a;
    Poly<GaussRat> chi;
    Cplx b;
    int b_multiplicity = 1;
    Poly<Cplx> p;
    std::vector<Cplx> p_ebasis;
    Poly<Cplx> f;                        // antiderivative of p with f(0) = 0
    std::vector<RootCluster> p_roots;
    Cplx chi_prime_at_b;
    Cplx c_self;
    BigFloat ode_residual;               // measured max residual at the sample points
    BigFloat min_root_separation;
    bool roots_simple = true;
    bool condition_warning = false;      // |chi'(b)| < 1e-6: near-degenerate spectrum
    std::vector<std::string> warnings;
};

/// Assemble the full datum for one eigenvalue cluster: wave polynomial, its
/// roots (flagging any multiplicity), the ODE residual at n+3 seeded sample
/// points, chi'(b) and the self-pairing sum.
SpectralDatum make_spectral_datum(long n, const GaussRat& a, const RootCluster& eigenvalue,
                                  const PrecisionContext& ctx, std::uint64_t seed);

/// Max |p''(x) - (x^2+a) p'(x) + (n x + b) p(x)| over the given points.
BigFloat ode_residual(const Poly<Cplx>& p, long n, const Cplx& a, const Cplx& b,
                      const std::vector<Cplx>& points);

} // namespace wavecoh

#endif
