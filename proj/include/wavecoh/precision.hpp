#ifndef WAVECOH_PRECISION_HPP
#define WAVECOH_PRECISION_HPP

#include <mpfr.h>
#include <stdexcept>

#include "wavecoh/bigfloat.hpp"

namespace wavecoh {

/// Working-precision configuration threaded through every numeric operation.
/// zero_tolerance is the magnitude below which values are treated as zero in
/// pole clustering and residual checks; the default pairing (256 bits,
/// 2^-128) leaves wide headroom over the 1e-10/1e-8 verification tolerances.
struct PrecisionContext {
    mpfr_prec_t mantissa_bits = 256;
    BigFloat zero_tolerance = BigFloat::pow2(-128, 256);

    static PrecisionContext with_bits(mpfr_prec_t bits) {
        if (bits < 64) throw std::invalid_argument("PrecisionContext: mantissa_bits must be >= 64");
        PrecisionContext ctx;
        ctx.mantissa_bits = bits;
        ctx.zero_tolerance = BigFloat::pow2(-static_cast<long>(bits) / 2, bits);
        return ctx;
    }

    PrecisionContext with_zero_tolerance(const BigFloat& tol) const {
        if (!(tol > BigFloat(0.0, mantissa_bits)))
            throw std::invalid_argument("PrecisionContext: zero_tolerance must be positive");
        PrecisionContext ctx = *this;
        ctx.zero_tolerance = tol;
        return ctx;
    }

    BigFloat bf(double x) const { return BigFloat(x, mantissa_bits); }
    BigFloat bf(long x) const { return BigFloat(x, mantissa_bits); }

    /// Default relative accuracy requested from contour quadrature.
    BigFloat quadrature_target() const {
        return BigFloat::pow2(-static_cast<long>(mantissa_bits) / 3, mantissa_bits);
    }

    /// Relative error allowed on algebraic round trips (partial fractions,
    /// certificate recombination).
    BigFloat roundtrip_tolerance() const {
        return BigFloat::pow2(-static_cast<long>(mantissa_bits) / 2, mantissa_bits);
    }
};

} // namespace wavecoh

#endif
