#ifndef WAVECOH_RATIONAL_HPP
#define WAVECOH_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <utility>

#include "wavecoh/cplx.hpp"
#include "wavecoh/errors.hpp"
#include "wavecoh/precision.hpp"

namespace wavecoh {

/// Exact rational scalar; GMP keeps it canonical (reduced, denominator > 0).
using Rat = mpq_class;

inline std::string rat_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Gaussian rational: exact complex scalar with rational real and imaginary
/// parts. Field operations are exact; this is the coefficient domain of the
/// characteristic polynomial.
struct GaussRat {
    Rat re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(long r) : re(r), im(0) {}
    GaussRat(Rat r) : re(std::move(r)), im(0) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
        Rat d = b.re * b.re + b.im * b.im;
        if (d == 0) throw std::domain_error("GaussRat: division by zero");
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    GaussRat& operator+=(const GaussRat& b) { re += b.re; im += b.im; return *this; }
    GaussRat& operator-=(const GaussRat& b) { re -= b.re; im -= b.im; return *this; }
    GaussRat& operator*=(const GaussRat& b) { *this = *this * b; return *this; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    std::string to_string() const {
        if (im == 0) return rat_string(re);
        std::string s = (re == 0) ? "" : rat_string(re);
        if (im > 0 && !s.empty()) s += "+";
        if (im == -1) s += "-";
        else if (im != 1) s += rat_string(im) + "*";
        s += "i";
        return s;
    }
};

inline Cplx to_cplx(const GaussRat& q, const PrecisionContext& ctx) {
    return {BigFloat(q.re, ctx.mantissa_bits), BigFloat(q.im, ctx.mantissa_bits)};
}

inline Cplx to_cplx(const Rat& q, const PrecisionContext& ctx) {
    return {BigFloat(q, ctx.mantissa_bits), BigFloat(0.0, ctx.mantissa_bits)};
}

/// Parse "p/q" with optional sign; integers allowed.
Rat parse_rat(const std::string& text);

/// Parse a rational or Gaussian-rational literal: "-1", "3/2", "1/2+1/3*i",
/// "-i", "2*i". Arbitrary floats are rejected to keep the exact layer exact.
GaussRat parse_gauss_rat(const std::string& text);

} // namespace wavecoh

#endif
