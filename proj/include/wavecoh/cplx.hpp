#ifndef WAVECOH_CPLX_HPP
#define WAVECOH_CPLX_HPP

#include <string>

#include "wavecoh/bigfloat.hpp"

namespace wavecoh {

/// Complex number over BigFloat. Branch-cut conventions are principal
/// throughout: arg in (-pi, pi], powers via exp(s log u).
struct Cplx {
    BigFloat re, im;

    Cplx() = default;
    explicit Cplx(mpfr_prec_t prec) : re(prec), im(prec) {}
    Cplx(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    Cplx(double r, double i, mpfr_prec_t prec) : re(r, prec), im(i, prec) {}

    static Cplx real(BigFloat r) {
        mpfr_prec_t p = r.prec();
        return Cplx(std::move(r), BigFloat(0.0, p));
    }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    friend Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cplx operator-(const Cplx& a) { return {-a.re, -a.im}; }

    friend Cplx operator*(const Cplx& a, const Cplx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cplx operator*(const Cplx& a, const BigFloat& s) { return {a.re * s, a.im * s}; }
    friend Cplx operator*(const BigFloat& s, const Cplx& a) { return a * s; }
    friend Cplx operator*(const Cplx& a, long s) { return {a.re * s, a.im * s}; }

    friend Cplx operator/(const Cplx& a, const Cplx& b) {
        BigFloat d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    friend Cplx operator/(const Cplx& a, const BigFloat& s) { return {a.re / s, a.im / s}; }
    friend Cplx operator/(const Cplx& a, long s) { return {a.re / s, a.im / s}; }
    friend Cplx operator+(const Cplx& a, long s) { return {a.re + s, a.im}; }
    friend Cplx operator-(const Cplx& a, long s) { return {a.re - s, a.im}; }

    Cplx& operator+=(const Cplx& b) { re += b.re; im += b.im; return *this; }
    Cplx& operator-=(const Cplx& b) { re -= b.re; im -= b.im; return *this; }
    Cplx& operator*=(const Cplx& b) { *this = *this * b; return *this; }

    friend Cplx conj(const Cplx& a) { return {a.re, -a.im}; }

    friend BigFloat abs(const Cplx& a) { return hypot(a.re, a.im); }

    friend BigFloat arg(const Cplx& a) { return atan2(a.im, a.re); }

    friend Cplx exp(const Cplx& a) {
        BigFloat m = exp(a.re);
        BigFloat s(a.im.prec()), c(a.im.prec());
        a.im.sin_cos(s, c);
        return {m * c, m * s};
    }

    /// Principal logarithm.
    friend Cplx log(const Cplx& a) { return {log(abs(a)), arg(a)}; }

    /// Principal square root.
    friend Cplx sqrt(const Cplx& a) { return pow(a, BigFloat(0.5, a.re.prec())); }

    /// Principal power with real exponent: exp(s log a).
    friend Cplx pow(const Cplx& a, const BigFloat& s) {
        if (a.is_zero()) return Cplx(a.re.prec());
        return exp(Cplx(log(abs(a)) * s, arg(a) * s));
    }

    std::string to_string() const { return re.to_string() + (im.sign() < 0 ? "" : "+") + im.to_string() + "i"; }
};

/// Point on the unit circle at the given angle.
inline Cplx unit_dir(const BigFloat& angle) {
    BigFloat s(angle.prec()), c(angle.prec());
    angle.sin_cos(s, c);
    return {c, s};
}

} // namespace wavecoh

#endif
