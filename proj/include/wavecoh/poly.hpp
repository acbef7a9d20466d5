#ifndef WAVECOH_POLY_HPP
#define WAVECOH_POLY_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "wavecoh/cplx.hpp"
#include "wavecoh/rational.hpp"

namespace wavecoh {

namespace detail {
inline bool scalar_is_zero(const Rat& x) { return x == 0; }
inline bool scalar_is_zero(const GaussRat& x) { return x.is_zero(); }
inline bool scalar_is_zero(const BigFloat& x) { return x.is_zero(); }
inline bool scalar_is_zero(const Cplx& x) { return x.is_zero(); }

inline std::string scalar_str(const Rat& x) { return rat_string(x); }
inline std::string scalar_str(const GaussRat& x) { return x.to_string(); }
inline std::string scalar_str(const BigFloat& x) { return x.to_string(); }
inline std::string scalar_str(const Cplx& x) { return x.to_string(); }

// 1 of the scalar type, at the sample's precision for floating scalars
// (keeps running factorials exact well past 20!).
inline Rat scalar_one(const Rat&) { return Rat(1); }
inline GaussRat scalar_one(const GaussRat&) { return GaussRat(1); }
inline BigFloat scalar_one(const BigFloat& x) { return BigFloat(1L, std::max<mpfr_prec_t>(x.prec(), 256)); }
inline Cplx scalar_one(const Cplx& x) {
    mpfr_prec_t p = std::max<mpfr_prec_t>(x.re.prec(), 256);
    return Cplx(1.0, 0.0, p);
}
} // namespace detail

/// Dense univariate polynomial over an exact or floating scalar field,
/// coefficients indexed by monomial degree. The zero polynomial has an empty
/// coefficient list; otherwise the leading coefficient is structurally
/// nonzero (exact zeros are stripped, floating values are kept as computed).
template <class T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { strip(); }

    static Poly zero() { return Poly(); }
    static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }

    /// c * x^k
    static Poly monomial(T c, std::size_t k) {
        std::vector<T> v(k + 1);
        v[k] = std::move(c);
        return Poly(std::move(v));
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }

    /// Coefficient of x^k (zero beyond the stored degree).
    T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(); }

    const T& leading() const { return c_.back(); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i < a.c_.size() && i < b.c_.size()) r[i] = a.c_[i] + b.c_[i];
            else if (i < a.c_.size()) r[i] = a.c_[i];
            else r[i] = b.c_[i];
        }
        return Poly(std::move(r));
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator-(const Poly& a) {
        std::vector<T> r(a.c_);
        for (auto& x : r) x = -x;
        return Poly(std::move(r));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }

    friend Poly operator*(const Poly& a, const T& s) {
        std::vector<T> r(a.c_);
        for (auto& x : r) x = x * s;
        return Poly(std::move(r));
    }
    friend Poly operator*(const T& s, const Poly& a) { return a * s; }

    /// p(x0) by Horner's rule; exact when T is exact.
    T operator()(const T& x) const {
        if (c_.empty()) return T();
        T acc = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// p(-x): odd coefficients change sign.
    Poly reflected() const {
        std::vector<T> r(c_);
        for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
        return Poly(std::move(r));
    }

    friend bool operator==(const Poly& a, const Poly& b)
        requires requires(const T& x, const T& y) { x == y; }
    {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    std::string to_string(const std::string& var = "x") const {
        if (c_.empty()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (detail::scalar_is_zero(c_[i])) continue;
            std::string cs = detail::scalar_str(c_[i]);
            bool negated = false;
            if (cs.size() > 1 && cs[0] == '-' && cs.find('+', 1) == std::string::npos &&
                cs.find('-', 1) == std::string::npos) {
                cs = cs.substr(1);
                negated = true;
            }
            // mixed-sign scalars (complex parts) get parenthesized
            if (cs.find('+') != std::string::npos || cs.find('-') != std::string::npos)
                cs = "(" + cs + ")";
            s += s.empty() ? (negated ? "-" : "") : (negated ? " - " : " + ");
            if (i == 0) { s += cs; continue; }
            std::string xs = (i == 1) ? var : var + "^" + std::to_string(i);
            if (cs == "1") s += xs;
            else s += cs + "*" + xs;
        }
        return s.empty() ? "0" : s;
    }

private:
    void strip() {
        while (!c_.empty() && detail::scalar_is_zero(c_.back())) c_.pop_back();
    }

    std::vector<T> c_;
};

/// Exact term-wise differentiation.
template <class T>
Poly<T> derivative(const Poly<T>& p) {
    if (p.degree() < 1) return Poly<T>();
    std::vector<T> r(static_cast<std::size_t>(p.degree()));
    for (std::size_t k = 1; k <= static_cast<std::size_t>(p.degree()); ++k)
        r[k - 1] = p.coeff(k) * static_cast<long>(k);
    return Poly<T>(std::move(r));
}

/// The antiderivative f with f' = p and f(0) = 0.
template <class T>
Poly<T> antiderivative_zero(const Poly<T>& p) {
    if (p.is_zero()) return Poly<T>();
    std::vector<T> r(static_cast<std::size_t>(p.degree()) + 2);
    for (std::size_t k = 0; k <= static_cast<std::size_t>(p.degree()); ++k)
        r[k + 1] = p.coeff(k) / static_cast<long>(k + 1);
    return Poly<T>(std::move(r));
}

/// Coefficients in the basis e_k = x^k/k!: entry s is (monomial coefficient
/// of x^s) * s!. Exact on exact scalars.
template <class T>
std::vector<T> ebasis_coeffs(const Poly<T>& p) {
    std::vector<T> out(p.is_zero() ? 0 : static_cast<std::size_t>(p.degree()) + 1);
    if (out.empty()) return out;
    T fact = detail::scalar_one(p.coeff(0));
    for (std::size_t s = 0; s < out.size(); ++s) {
        if (s > 0) fact = fact * static_cast<long>(s);
        out[s] = p.coeff(s) * fact;
    }
    return out;
}

template <class T>
Poly<T> poly_from_ebasis(const std::vector<T>& e) {
    if (e.empty()) return Poly<T>();
    std::vector<T> c(e.size());
    T fact = detail::scalar_one(e[0]);
    for (std::size_t s = 0; s < e.size(); ++s) {
        if (s > 0) fact = fact * static_cast<long>(s);
        c[s] = e[s] / fact;
    }
    return Poly<T>(std::move(c));
}

/// Quotient and remainder over a field scalar: a = q*b + r, deg r < deg b.
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
    if (b.is_zero()) throw std::domain_error("Poly divmod: division by zero polynomial");
    if (a.degree() < b.degree()) return {Poly<T>(), a};
    std::vector<T> rem(a.coeffs());
    std::vector<T> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const T& lead = b.leading();
    for (long k = a.degree() - b.degree(); k >= 0; --k) {
        T q = rem[static_cast<std::size_t>(k + b.degree())] / lead;
        quot[static_cast<std::size_t>(k)] = q;
        for (long j = 0; j <= b.degree(); ++j)
            rem[static_cast<std::size_t>(k + j)] = rem[static_cast<std::size_t>(k + j)] - q * b.coeff(static_cast<std::size_t>(j));
    }
    rem.resize(static_cast<std::size_t>(std::max(b.degree(), 0L)));
    return {Poly<T>(std::move(quot)), Poly<T>(std::move(rem))};
}

inline Poly<Cplx> to_cplx(const Poly<GaussRat>& p, const PrecisionContext& ctx) {
    std::vector<Cplx> c;
    c.reserve(static_cast<std::size_t>(p.degree() + 1));
    for (long k = 0; k <= p.degree(); ++k) c.push_back(to_cplx(p.coeff(static_cast<std::size_t>(k)), ctx));
    return Poly<Cplx>(std::move(c));
}

/// Largest coefficient magnitude; zero polynomial gives 0.
inline BigFloat coeff_scale(const Poly<Cplx>& p) {
    BigFloat m(0.0, 64);
    for (long k = 0; k <= p.degree(); ++k) m = max(m, abs(p.coeff(static_cast<std::size_t>(k))));
    return m;
}

} // namespace wavecoh

#endif
