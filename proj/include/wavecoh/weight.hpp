#ifndef WAVECOH_WEIGHT_HPP
#define WAVECOH_WEIGHT_HPP

#include "wavecoh/poly.hpp"

namespace wavecoh {

/// The exponential weight h(x) = x^3/3 + a*x and its derivative x^2 + a.
/// a is kept at working precision; exact callers hold a as GaussRat and
/// convert at the boundary.
struct CubicWeight {
    Cplx a;

    explicit CubicWeight(Cplx a_) : a(std::move(a_)) {}
    CubicWeight(const GaussRat& a_, const PrecisionContext& ctx) : a(to_cplx(a_, ctx)) {}

    mpfr_prec_t prec() const { return a.re.prec(); }

    Cplx h(const Cplx& x) const { return x * x * x / 3L + a * x; }
    Cplx h_prime(const Cplx& x) const { return x * x + a; }

    Poly<Cplx> h_poly() const {
        Cplx zero(prec()), third(prec());
        third.re = BigFloat(1L, prec()) / 3L;
        return Poly<Cplx>({zero, a, zero, third});
    }
    Poly<Cplx> h_prime_poly() const {
        Cplx zero(prec()), one(1.0, 0.0, prec());
        return Poly<Cplx>({a, zero, one});
    }
};

} // namespace wavecoh

#endif
