#ifndef WAVECOH_BIGFLOAT_HPP
#define WAVECOH_BIGFLOAT_HPP

#include <mpfr.h>
#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

namespace wavecoh {

/// Arbitrary-precision real number. Thin RAII wrapper over mpfr_t with an
/// explicit mantissa size; binary operations produce results at the larger
/// of the two operand precisions, rounding to nearest.
class BigFloat {
public:
    BigFloat() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }

    explicit BigFloat(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }

    BigFloat(double x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }

    BigFloat(long x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }

    BigFloat(const mpq_class& q, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }

    BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }

    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, 64);
        mpfr_swap(v_, o.v_);
    }

    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }

    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }

    ~BigFloat() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    static BigFloat str(const char* s, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_str(r.v_, s, 10, MPFR_RNDN);
        return r;
    }

    /// 2^e, exact.
    static BigFloat pow2(long e, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }

    static BigFloat pi(mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b)); mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b)); mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b)); mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b)); mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend BigFloat operator-(const BigFloat& a) {
        BigFloat r(a.prec()); mpfr_neg(r.v_, a.v_, MPFR_RNDN); return r;
    }

    // Compound ops promote to the wider precision rather than rounding into
    // the narrower left-hand side.
    BigFloat& operator+=(const BigFloat& b) {
        if (prec() >= b.prec()) mpfr_add(v_, v_, b.v_, MPFR_RNDN);
        else { BigFloat r = *this + b; mpfr_swap(v_, r.v_); }
        return *this;
    }
    BigFloat& operator-=(const BigFloat& b) {
        if (prec() >= b.prec()) mpfr_sub(v_, v_, b.v_, MPFR_RNDN);
        else { BigFloat r = *this - b; mpfr_swap(v_, r.v_); }
        return *this;
    }
    BigFloat& operator*=(const BigFloat& b) {
        if (prec() >= b.prec()) mpfr_mul(v_, v_, b.v_, MPFR_RNDN);
        else { BigFloat r = *this * b; mpfr_swap(v_, r.v_); }
        return *this;
    }
    BigFloat& operator/=(const BigFloat& b) {
        if (prec() >= b.prec()) mpfr_div(v_, v_, b.v_, MPFR_RNDN);
        else { BigFloat r = *this / b; mpfr_swap(v_, r.v_); }
        return *this;
    }

    friend BigFloat operator*(const BigFloat& a, long b) {
        BigFloat r(a.prec()); mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN); return r;
    }
    friend BigFloat operator/(const BigFloat& a, long b) {
        BigFloat r(a.prec()); mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN); return r;
    }
    friend BigFloat operator+(const BigFloat& a, long b) {
        BigFloat r(a.prec()); mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN); return r;
    }
    friend BigFloat operator-(const BigFloat& a, long b) {
        BigFloat r(a.prec()); mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN); return r;
    }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }

    friend BigFloat abs(const BigFloat& a) {
        BigFloat r(a.prec()); mpfr_abs(r.v_, a.v_, MPFR_RNDN); return r;
    }
    friend BigFloat sqrt(const BigFloat& a) {
        BigFloat r(a.prec()); mpfr_sqrt(r.v_, a.v_, MPFR_RNDN); return r;
    }
    friend BigFloat cbrt(const BigFloat& a) {
        BigFloat r(a.prec()); mpfr_cbrt(r.v_, a.v_, MPFR_RNDN); return r;
    }
    friend BigFloat exp(const BigFloat& a) {
        BigFloat r(a.prec()); mpfr_exp(r.v_, a.v_, MPFR_RNDN); return r;
    }
    friend BigFloat log(const BigFloat& a) {
        BigFloat r(a.prec()); mpfr_log(r.v_, a.v_, MPFR_RNDN); return r;
    }
    friend BigFloat sin(const BigFloat& a) {
        BigFloat r(a.prec()); mpfr_sin(r.v_, a.v_, MPFR_RNDN); return r;
    }
    friend BigFloat cos(const BigFloat& a) {
        BigFloat r(a.prec()); mpfr_cos(r.v_, a.v_, MPFR_RNDN); return r;
    }
    friend BigFloat hypot(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b)); mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend BigFloat atan2(const BigFloat& y, const BigFloat& x) {
        BigFloat r(join(y, x)); mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN); return r;
    }
    friend BigFloat pow(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b)); mpfr_pow(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend BigFloat max(const BigFloat& a, const BigFloat& b) { return a >= b ? a : b; }
    friend BigFloat min(const BigFloat& a, const BigFloat& b) { return a <= b ? a : b; }

    void sin_cos(BigFloat& s, BigFloat& c) const {
        mpfr_prec_t p = prec();
        mpfr_set_prec(s.v_, p);
        mpfr_set_prec(c.v_, p);
        mpfr_sin_cos(s.v_, c.v_, v_, MPFR_RNDN);
    }

    /// Airy function Ai at this point (used as an independent quadrature oracle).
    friend BigFloat airy_ai(const BigFloat& a) {
        BigFloat r(a.prec()); mpfr_ai(r.v_, a.v_, MPFR_RNDN); return r;
    }
    friend BigFloat tgamma(const BigFloat& a) {
        BigFloat r(a.prec()); mpfr_gamma(r.v_, a.v_, MPFR_RNDN); return r;
    }

    /// Round-trippable decimal form, enough digits for the full mantissa.
    std::string to_string() const {
        if (mpfr_nan_p(v_)) return "nan";
        if (mpfr_inf_p(v_)) return sign() > 0 ? "inf" : "-inf";
        if (mpfr_zero_p(v_)) return "0";
        size_t digits = static_cast<size_t>(mpfr_get_prec(v_) * 0.30102999566398119521) + 3;
        mpfr_exp_t e;
        char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
        std::string mant(s);
        mpfr_free_str(s);
        bool neg = !mant.empty() && mant[0] == '-';
        std::string d = neg ? mant.substr(1) : mant;
        // strip trailing zeros, keep at least one digit
        size_t last = d.find_last_not_of('0');
        d = d.substr(0, last == std::string::npos ? 1 : last + 1);
        std::string out = neg ? "-" : "";
        out += d.substr(0, 1);
        if (d.size() > 1) out += "." + d.substr(1);
        out += "e" + std::to_string(static_cast<long>(e) - 1);
        return out;
    }

private:
    static mpfr_prec_t join(const BigFloat& a, const BigFloat& b) {
        return a.prec() > b.prec() ? a.prec() : b.prec();
    }

    mpfr_t v_;
};

} // namespace wavecoh

#endif
