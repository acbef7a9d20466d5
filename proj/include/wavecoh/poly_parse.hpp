#ifndef WAVECOH_POLY_PARSE_HPP
#define WAVECOH_POLY_PARSE_HPP

#include <string>

#include "wavecoh/poly.hpp"

namespace wavecoh {

/// Parsed rational-function literal: numerator / denominator, both built
/// over exact rational coefficients with the symbols x and p (p is the
/// selected wave polynomial, supplied numerically).
struct ParsedRational {
    Poly<Cplx> numerator;
    Poly<Cplx> denominator; // constant 1 when absent
    bool uses_p = false;
};

/// Grammar: expr ('/' expr)? with expr = sum of '*'-joined factors, each an
/// atom with an optional '^' natural power; atoms are rational literals
/// ("3", "-1/2"), 'x', 'p', or parenthesized exprs. Implicit multiplication
/// is rejected. "INT/INT" lexes as one rational literal; any other '/' at
/// the top level splits numerator from denominator.
ParsedRational parse_rational_function(const std::string& text, const Poly<Cplx>& p,
                                       const PrecisionContext& ctx);

} // namespace wavecoh

#endif
