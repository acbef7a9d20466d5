#include "wavecoh/functionals.hpp"

#include <cmath>

#include "wavecoh/errors.hpp"

namespace wavecoh {

namespace {

constexpr long kPanelBudget = 120000;

std::vector<Cplx> pole_locations(const PoleExpansion& q) {
    std::vector<Cplx> out;
    for (const auto& p : q.poles()) out.push_back(p.z);
    return out;
}

std::vector<Cplx> root_locations(const SpectralDatum& sd) {
    std::vector<Cplx> out;
    for (const auto& r : sd.p_roots) out.push_back(r.location);
    return out;
}

QuadratureResult run_contour(const Contour& contour, const Integrand& f,
                             const PrecisionContext& ctx, const std::optional<BigFloat>& abs_tol) {
    BigFloat tol(0.0, ctx.mantissa_bits);
    if (abs_tol) {
        tol = *abs_tol;
    } else {
        BigFloat mass = contour_mass(contour, f, ctx);
        if (mass.is_zero()) {
            QuadratureResult zero;
            zero.value = Cplx(ctx.mantissa_bits);
            zero.error_estimate = BigFloat(0.0, ctx.mantissa_bits);
            return zero;
        }
        tol = mass * ctx.quadrature_target();
    }
    return integrate_along(contour, f, tol, kPanelBudget, ctx);
}

Cplx pow_int(const Cplx& base, long e) {
    Cplx acc(1.0, 0.0, base.re.prec());
    for (long i = 0; i < e; ++i) acc *= base;
    return acc;
}

Cplx eval_poly_squared_inv(const Poly<Cplx>& p, const Cplx& x) {
    Cplx v = p(x);
    return Cplx(1.0, 0.0, x.re.prec()) / (v * v);
}

} // namespace

QuadratureResult l_functional(const PoleExpansion& q, int j, const CubicWeight& w,
                              const PrecisionContext& ctx,
                              const std::optional<BigFloat>& abs_tol) {
    Contour contour = build_contour(j, pole_locations(q), w, ctx);
    return l_functional_on(q, contour, w, ctx, abs_tol);
}

QuadratureResult l_functional_on(const PoleExpansion& q, const Contour& contour,
                                 const CubicWeight& w, const PrecisionContext& ctx,
                                 const std::optional<BigFloat>& abs_tol) {
    Integrand f = [&](const Cplx& x) { return q.eval(x) * exp(w.h(x)); };
    return run_contour(contour, f, ctx, abs_tol);
}

QuadratureResult J_value(const SpectralDatum& sd, int j, const PrecisionContext& ctx) {
    CubicWeight w(sd.a, ctx);
    Contour contour = build_contour(j, root_locations(sd), w, ctx);
    Integrand f = [&](const Cplx& x) { return eval_poly_squared_inv(sd.p, x) * exp(w.h(x)); };
    return run_contour(contour, f, ctx, std::nullopt);
}

QuadratureResult y_solution(const SpectralDatum& sd, int j, const Cplx& x,
                            const PrecisionContext& ctx, const std::optional<BigFloat>& abs_tol) {
    CubicWeight w(sd.a, ctx);
    Contour contour = build_half_contour(j, x, root_locations(sd), w, ctx);
    Integrand f = [&](const Cplx& z) { return eval_poly_squared_inv(sd.p, z) * exp(w.h(z)); };
    QuadratureResult r = run_contour(contour, f, ctx, abs_tol);
    Cplx px = sd.p(x);
    r.value = r.value * px;
    r.error_estimate = r.error_estimate * abs(px);
    return r;
}

Cplx connection_residual(const SpectralDatum& sd, int j, const Cplx& x, const PrecisionContext& ctx) {
    QuadratureResult y_next = y_solution(sd, (j + 1) % 3, x, ctx);
    QuadratureResult y_here = y_solution(sd, j, x, ctx);
    QuadratureResult jj = J_value(sd, j, ctx);
    return y_next.value - y_here.value + jj.value * sd.p(x);
}

YOdeResidual y_ode_residual(const SpectralDatum& sd, int j, const Cplx& x,
                            const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.mantissa_bits;
    BigFloat step = BigFloat::pow2(-static_cast<long>(ctx.mantissa_bits) / 4, prec);

    // Pilot pass fixes the magnitude; the production passes then run close
    // to the roundoff floor so the /step^2 amplification (2^(bits/2)) still
    // leaves the residual far below the acceptance tolerance at any
    // precision >= 64 bits.
    QuadratureResult pilot = y_solution(sd, j, x, ctx);
    BigFloat y_scale = max(abs(pilot.value), BigFloat(1e-30, prec));
    BigFloat tight = y_scale * BigFloat::pow2(-static_cast<long>(ctx.mantissa_bits) + 16, prec);

    Cplx xp = x + Cplx(step, BigFloat(0.0, prec));
    Cplx xm = x - Cplx(step, BigFloat(0.0, prec));
    Cplx y0 = y_solution(sd, j, x, ctx, tight).value;
    Cplx yp = y_solution(sd, j, xp, ctx, tight).value;
    Cplx ym = y_solution(sd, j, xm, ctx, tight).value;

    Cplx ypp = (yp - y0 * 2L + ym) / (step * step);
    Cplx yprime = (yp - ym) / (step * 2L);

    CubicWeight w(sd.a, ctx);
    Cplx term1 = ypp;
    Cplx term2 = w.h_prime(x) * yprime;
    Cplx term3 = (x * sd.n + sd.b) * y0;

    YOdeResidual out;
    out.residual = abs(term1 - term2 + term3);
    out.scale = max(max(abs(term1), abs(term2)), max(abs(term3), BigFloat(1e-30, prec)));
    return out;
}

std::vector<BigFloat> y_asymptotic_deviations(const SpectralDatum& sd, int j,
                                              const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.mantissa_bits;
    CubicWeight w(sd.a, ctx);
    Sector sector{j};
    Cplx dir = sector.bisector(prec);
    std::vector<BigFloat> deviations;
    for (double m : {4.0, 8.0, 16.0}) {
        Cplx x = dir * BigFloat(m, prec);
        Cplx y = y_solution(sd, j, x, ctx).value;
        Cplx ratio = y * pow_int(x, sd.n + 2) * exp(-w.h(x));
        deviations.push_back(abs(ratio - Cplx(1.0, 0.0, prec)));
    }
    return deviations;
}

QuadratureResult dual_g1(const SpectralDatum& sd, int j, const Cplx& u, const PrecisionContext& ctx,
                         long deriv_order) {
    CubicWeight w(sd.a, ctx);
    Contour contour = build_contour(j, {}, w, ctx, abs(u).to_double());
    Poly<Cplx> p_neg = sd.p.reflected();
    Integrand f = [&](const Cplx& x) {
        Cplx factor = pow_int(-x, deriv_order);
        return factor * p_neg(x) * exp(w.h(x) - u * x);
    };
    return run_contour(contour, f, ctx, std::nullopt);
}

QuadratureResult dual_g2(const SpectralDatum& sd, int j, const Cplx& u, const PrecisionContext& ctx) {
    CubicWeight w(sd.a, ctx);
    Contour contour = build_contour(j, root_locations(sd), w, ctx, abs(u).to_double());

    std::vector<Poly<Cplx>> derivs{sd.p};
    for (long r = 1; r <= sd.n; ++r) derivs.push_back(derivative(derivs.back()));
    std::vector<Cplx> u_pow{Cplx(1.0, 0.0, ctx.mantissa_bits)};
    for (long r = 1; r <= sd.n; ++r) u_pow.push_back(u_pow.back() * u);

    Integrand f = [&](const Cplx& x) {
        Cplx numerator(ctx.mantissa_bits);
        for (long r = 0; r <= sd.n; ++r)
            numerator += u_pow[static_cast<std::size_t>(sd.n - r)] * derivs[static_cast<std::size_t>(r)](x);
        return numerator * eval_poly_squared_inv(sd.p, x) * exp(w.h(x) - u * x);
    };
    return run_contour(contour, f, ctx, std::nullopt);
}

DualOdeResidual dual_ode_residual(const SpectralDatum& sd, int j, const Cplx& u,
                                  const PrecisionContext& ctx) {
    CubicWeight w(sd.a, ctx);
    const Cplx a = w.a;
    Cplx coeff = u * u - a * u + sd.b;

    // residual as one integral: (u x^2 + n x - (u^2 - a u + b)) p(-x) e^{h - u x}
    Contour contour = build_contour(j, {}, w, ctx, abs(u).to_double());
    Poly<Cplx> p_neg = sd.p.reflected();
    Integrand f = [&](const Cplx& x) {
        Cplx poly_factor = u * x * x + x * sd.n - coeff;
        return poly_factor * p_neg(x) * exp(w.h(x) - u * x);
    };
    QuadratureResult combined = run_contour(contour, f, ctx, std::nullopt);

    Cplx g = dual_g1(sd, j, u, ctx, 0).value;
    Cplx g1 = dual_g1(sd, j, u, ctx, 1).value;
    Cplx g2 = dual_g1(sd, j, u, ctx, 2).value;

    DualOdeResidual out;
    out.residual = combined.value;
    out.scale = max(max(abs(u * g2), abs(g1 * sd.n)), max(abs(coeff * g), BigFloat(1e-30, ctx.mantissa_bits)));
    return out;
}

TaylorReconstruction taylor_reconstruct_p(const SpectralDatum& sd, int j, const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.mantissa_bits;
    const long n = sd.n;

    // T_s = g^{(s)}(0)/s!
    std::vector<Cplx> t;
    Cplx zero_u(prec);
    Cplx fact(1.0, 0.0, prec);
    for (long s = 0; s <= n; ++s) {
        if (s > 1) fact = fact * s;
        t.push_back(dual_g1(sd, j, zero_u, ctx, s).value / fact);
    }

    // sum_s T_s e_{n-s}: monomial coefficient at x^{n-s} is T_s/(n-s)!
    std::vector<Cplx> coeffs(static_cast<std::size_t>(n) + 1, Cplx(prec));
    Cplx dfact(1.0, 0.0, prec);
    for (long m = 0; m <= n; ++m) { // m = n - s
        if (m > 1) dfact = dfact * m;
        coeffs[static_cast<std::size_t>(m)] = t[static_cast<std::size_t>(n - m)] / dfact;
    }

    TaylorReconstruction out;
    out.reconstruction = Poly<Cplx>(coeffs);
    Cplx nfact(1.0, 0.0, prec);
    for (long k = 2; k <= n; ++k) nfact = nfact * k;
    out.alpha = t[0] / nfact;

    BigFloat scale = coeff_scale(sd.p) * abs(out.alpha);
    BigFloat worst(0.0, prec);
    for (long k = 0; k <= n; ++k)
        worst = max(worst, abs(out.reconstruction.coeff(static_cast<std::size_t>(k)) -
                               out.alpha * sd.p.coeff(static_cast<std::size_t>(k))));
    out.max_relative_error = worst / max(scale, BigFloat(1e-30, prec));
    if (out.max_relative_error.to_double() > 1e-6)
        throw ReconstructionMismatch("taylor_reconstruct_p: deviation " +
                                     out.max_relative_error.to_string() + " from a multiple of p");
    return out;
}

AsymptoticsReport asymptotics_check_g(const SpectralDatum& sd, int j, const PrecisionContext& ctx,
                                      const std::vector<double>& magnitudes) {
    AsymptoticsReport report;
    int j_prime = (j == 2) ? 0 : 1;
    report.arg_u = (j == 2) ? 0.0 : (j == 0 ? 2.0 * M_PI / 3.0 : -2.0 * M_PI / 3.0);

    double a_mag = abs(to_cplx(sd.a, PrecisionContext::with_bits(64))).to_double();

    for (double mag : magnitudes) {
        // cancellation depth of the integral relative to its mass; quantized
        // so boosted precisions share cached quadrature rules
        double cancel_bits =
            (2.0 / 3.0 * std::pow(mag, 1.5) + a_mag * std::sqrt(mag) + 40.0) / std::log(2.0);
        mpfr_prec_t want = ctx.mantissa_bits + static_cast<mpfr_prec_t>(cancel_bits) + 64;
        PrecisionContext boosted = PrecisionContext::with_bits(((want + 127) / 128) * 128);
        const mpfr_prec_t bp = boosted.mantissa_bits;

        Cplx u = unit_dir(BigFloat(report.arg_u, bp)) * BigFloat(mag, bp);

        // i (-1)^{n+j'} sqrt(pi) u^{n/2 - 1/4} e^{-2/3 u^{3/2} + a u^{1/2}}
        BigFloat half(0.5, bp);
        Cplx u_half = pow(u, half);
        Cplx u_three_half = pow(u, BigFloat(1.5, bp));
        BigFloat expo = BigFloat(static_cast<double>(sd.n) / 2.0 - 0.25, bp);
        Cplx u_pow = pow(u, expo);
        Cplx a_b = to_cplx(sd.a, boosted);
        Cplx exp_part = exp(a_b * u_half - u_three_half * 2L / 3L);
        Cplx prefactor(BigFloat(0.0, bp), sqrt(BigFloat::pi(bp)));
        if ((sd.n + j_prime) % 2 == 1) prefactor = -prefactor;
        Cplx asym = prefactor * u_pow * exp_part;

        // re-refine b and the wave polynomial at the boosted precision; the
        // stored b only carries the base precision
        auto clusters = spectrum(sd.n, sd.a, boosted);
        Cplx b_boost = clusters[0].location;
        for (const auto& cl : clusters)
            if (abs(cl.location - sd.b) < abs(b_boost - sd.b)) b_boost = cl.location;
        WavePolynomial wp = wave_polynomial(sd.n, sd.a, b_boost, boosted);
        CubicWeight w(sd.a, boosted);
        Contour contour = build_contour(j, {}, w, boosted, mag);
        Poly<Cplx> p_neg = wp.p.reflected();
        Integrand f = [&](const Cplx& x) { return p_neg(x) * exp(w.h(x) - u * x); };
        // the ratio test wants percent-level accuracy; 2^-20 has headroom
        BigFloat tol = abs(asym) * BigFloat::pow2(-20, bp);
        QuadratureResult g = integrate_along(contour, f, tol, kPanelBudget, boosted);

        Cplx ratio = g.value / asym;
        AsymptoticSample sample{mag, ratio, abs(ratio - Cplx(1.0, 0.0, bp))};
        report.samples.push_back(sample);
    }

    report.monotone_decreasing = true;
    for (std::size_t i = 0; i + 1 < report.samples.size(); ++i)
        if (!(report.samples[i + 1].deviation < report.samples[i].deviation))
            report.monotone_decreasing = false;
    return report;
}

Cplx independence_determinant(const CubicWeight& w, const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.mantissa_bits;
    PoleExpansion e0(Poly<Cplx>::constant(Cplx(1.0, 0.0, prec)));
    PoleExpansion e1(Poly<Cplx>::monomial(Cplx(1.0, 0.0, prec), 1));
    Cplx l1_e0 = l_functional(e0, 1, w, ctx).value;
    Cplx l1_e1 = l_functional(e1, 1, w, ctx).value;
    Cplx l2_e0 = l_functional(e0, 2, w, ctx).value;
    Cplx l2_e1 = l_functional(e1, 2, w, ctx).value;
    return l1_e0 * l2_e1 - l1_e1 * l2_e0;
}

} // namespace wavecoh
