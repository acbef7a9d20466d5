#include "wavecoh/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "wavecoh/errors.hpp"

namespace wavecoh {

namespace {

// Legendre P_n and P_n' at x by the three-term recurrence.
void legendre(int n, const BigFloat& x, BigFloat& p, BigFloat& dp) {
    mpfr_prec_t prec = x.prec();
    BigFloat p0(1.0, prec), p1 = x;
    for (int k = 2; k <= n; ++k) {
        BigFloat p2 = (x * p1 * (2 * k - 1) - p0 * (k - 1)) / k;
        p0 = p1;
        p1 = p2;
    }
    p = p1;
    // P_n'(x) = n (x P_n - P_{n-1}) / (x^2 - 1)
    dp = BigFloat(static_cast<long>(n), prec) * (x * p1 - p0) / (x * x - BigFloat(1.0, prec));
}

GaussLegendreRule build_rule(mpfr_prec_t prec, int order) {
    GaussLegendreRule rule;
    rule.nodes.resize(static_cast<std::size_t>(order), BigFloat(prec));
    rule.weights.resize(static_cast<std::size_t>(order), BigFloat(prec));
    // Newton from the Chebyshev-angle estimate; quadratic convergence makes
    // ~log2(prec) iterations plenty.
    int newton_iters = 8;
    for (mpfr_prec_t b = 64; b < prec; b *= 2) ++newton_iters;
    for (int k = 0; k < (order + 1) / 2; ++k) {
        double guess = std::cos(M_PI * (k + 0.75) / (order + 0.5));
        BigFloat x(guess, prec);
        BigFloat p(prec), dp(prec);
        for (int it = 0; it < newton_iters; ++it) {
            legendre(order, x, p, dp);
            x -= p / dp;
        }
        legendre(order, x, p, dp);
        BigFloat w = BigFloat(2.0, prec) / ((BigFloat(1.0, prec) - x * x) * dp * dp);
        rule.nodes[static_cast<std::size_t>(k)] = -x;
        rule.weights[static_cast<std::size_t>(k)] = w;
        rule.nodes[static_cast<std::size_t>(order - 1 - k)] = x;
        rule.weights[static_cast<std::size_t>(order - 1 - k)] = w;
    }
    return rule;
}

struct Panel {
    Cplx value;
    BigFloat mass;
};

// One fixed-order pass over the parametrized path x(t) = a + t (b - a).
Panel panel_line(const Integrand& f, const GaussLegendreRule& rule, const Cplx& a, const Cplx& b) {
    mpfr_prec_t prec = a.re.prec();
    Cplx mid = (a + b) / 2L;
    Cplx half = (b - a) / 2L;
    Cplx acc(prec);
    BigFloat mass(0.0, prec);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        Cplx x = mid + half * rule.nodes[i];
        Cplx fx = f(x);
        acc += fx * rule.weights[i];
        mass += abs(fx) * rule.weights[i];
    }
    BigFloat hl = abs(half);
    return {acc * half, mass * hl};
}

struct AdaptiveState {
    const Integrand& f;
    const GaussLegendreRule& rule;
    long panels_left;
    BigFloat floor; // noise floor: stop refining below roundoff

    QuadratureResult run(const Cplx& a, const Cplx& b, const Cplx& whole_value,
                         const BigFloat& abs_tol, int depth) {
        Cplx mid = (a + b) / 2L;
        Panel left = panel_line(f, rule, a, mid);
        Panel right = panel_line(f, rule, mid, b);
        panels_left -= 2;
        Cplx refined = left.value + right.value;
        BigFloat err = abs(whole_value - refined);

        BigFloat local_floor = floor * (left.mass + right.mass);
        if (err <= max(abs_tol, local_floor) || depth >= 48) {
            QuadratureResult r;
            r.value = refined;
            r.error_estimate = err;
            r.subdivisions = 2;
            return r;
        }
        if (panels_left <= 0)
            throw QuadratureFailure("integrate_segment: panel budget exhausted before reaching tolerance");
        BigFloat half_tol = abs_tol / 2L;
        QuadratureResult rl = run(a, mid, left.value, half_tol, depth + 1);
        QuadratureResult rr = run(mid, b, right.value, half_tol, depth + 1);
        rl += rr;
        return rl;
    }
};

} // namespace

const GaussLegendreRule& gauss_legendre(mpfr_prec_t prec, int order) {
    static std::map<std::pair<mpfr_prec_t, int>, GaussLegendreRule> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(prec, order);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_rule(prec, order)).first;
    return it->second;
}

namespace {
// Deeper targets pay off with a higher-order rule: the panel count for an
// analytic integrand scales like 2^(bits/(2 order)).
int order_for(mpfr_prec_t prec) {
    if (prec <= 384) return 24;
    if (prec <= 768) return 48;
    if (prec <= 1152) return 72;
    return 96;
}
} // namespace

QuadratureResult integrate_segment(const Integrand& f, const Cplx& a, const Cplx& b,
                                   const BigFloat& abs_tol, long max_panels,
                                   const PrecisionContext& ctx) {
    const auto& rule = gauss_legendre(ctx.mantissa_bits, order_for(ctx.mantissa_bits));
    Panel whole = panel_line(f, rule, a, b);
    AdaptiveState state{f, rule, max_panels,
                        BigFloat::pow2(-static_cast<long>(ctx.mantissa_bits) + 8, ctx.mantissa_bits)};
    return state.run(a, b, whole.value, abs_tol, 0);
}

QuadratureResult integrate_arc(const Integrand& f, const Cplx& center, const BigFloat& radius,
                               const BigFloat& phi0, const BigFloat& phi1, const BigFloat& abs_tol,
                               long max_panels, const PrecisionContext& ctx) {
    mpfr_prec_t prec = ctx.mantissa_bits;
    // pull back to the parameter segment [phi0, phi1] on the real line
    Integrand g = [&](const Cplx& t) {
        Cplx dir = unit_dir(t.re);
        Cplx x = center + dir * radius;
        Cplx dx = Cplx(-dir.im, dir.re) * radius; // i r e^{i phi}
        return f(x) * dx;
    };
    return integrate_segment(g, Cplx(phi0, BigFloat(0.0, prec)), Cplx(phi1, BigFloat(0.0, prec)),
                             abs_tol, max_panels, ctx);
}

BigFloat segment_mass(const Integrand& f, const Cplx& a, const Cplx& b, const PrecisionContext& ctx) {
    const auto& rule = gauss_legendre(ctx.mantissa_bits, order_for(ctx.mantissa_bits));
    return panel_line(f, rule, a, b).mass;
}

BigFloat arc_mass(const Integrand& f, const Cplx& center, const BigFloat& radius,
                  const BigFloat& phi0, const BigFloat& phi1, const PrecisionContext& ctx) {
    mpfr_prec_t prec = ctx.mantissa_bits;
    Integrand g = [&](const Cplx& t) {
        Cplx dir = unit_dir(t.re);
        Cplx x = center + dir * radius;
        Cplx dx = Cplx(-dir.im, dir.re) * radius;
        return f(x) * dx;
    };
    return segment_mass(g, Cplx(phi0, BigFloat(0.0, prec)), Cplx(phi1, BigFloat(0.0, prec)), ctx);
}

} // namespace wavecoh
