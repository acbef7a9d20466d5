#include "wavecoh/wave.hpp"

#include <cstddef>

#include "wavecoh/errors.hpp"
#include "wavecoh/rng.hpp"

namespace wavecoh {

std::vector<std::vector<GaussRat>> wave_operator_matrix(long n, const GaussRat& a) {
    std::size_t dim = static_cast<std::size_t>(n) + 1;
    std::vector<std::vector<GaussRat>> m(dim, std::vector<GaussRat>(dim));
    for (long k = 0; k <= n; ++k) {
        std::size_t col = static_cast<std::size_t>(k);
        if (k >= 2) m[col - 2][col] = GaussRat(1);
        if (k >= 1) m[col - 1][col] = -a;
        if (k + 1 <= n) m[col + 1][col] = GaussRat(Rat((n - k) * (k + 1)));
    }
    return m;
}

Poly<GaussRat> apply_wave_operator(long n, const GaussRat& a, const Poly<GaussRat>& q) {
    // q'' - (x^2 + a) q' + n x q
    Poly<GaussRat> hp({a, GaussRat(0), GaussRat(1)});
    Poly<GaussRat> nx = Poly<GaussRat>::monomial(GaussRat(Rat(n)), 1);
    return derivative(derivative(q)) - hp * derivative(q) + nx * q;
}

Poly<GaussRat> char_poly(long n, const GaussRat& a) {
    auto s = [n](long j) { return GaussRat(Rat((n - j) * (j + 1))); };
    Poly<GaussRat> lambda = Poly<GaussRat>::monomial(GaussRat(1), 1);

    std::vector<Poly<GaussRat>> d(static_cast<std::size_t>(n) + 2);
    d[0] = Poly<GaussRat>::constant(GaussRat(1));
    for (long k = 1; k <= n + 1; ++k) {
        Poly<GaussRat> acc = lambda * d[static_cast<std::size_t>(k - 1)];
        if (k >= 2) acc = acc + d[static_cast<std::size_t>(k - 2)] * (a * s(k - 2));
        if (k >= 3) acc = acc + d[static_cast<std::size_t>(k - 3)] * (s(k - 3) * s(k - 2));
        d[static_cast<std::size_t>(k)] = acc;
    }
    return d[static_cast<std::size_t>(n) + 1];
}

std::vector<RootCluster> spectrum(long n, const GaussRat& a, const PrecisionContext& ctx) {
    return complex_roots(to_cplx(char_poly(n, a), ctx), ctx);
}

WavePolynomial wave_polynomial(long n, const GaussRat& a, const Cplx& b, const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.mantissa_bits;
    const Cplx ac = to_cplx(a, ctx);

    std::vector<Cplx> p(static_cast<std::size_t>(n) + 3, Cplx(prec));
    Cplx fact(1.0, 0.0, prec);
    for (long k = 2; k <= n; ++k) fact = fact * k;
    p[static_cast<std::size_t>(n)] = fact; // p_n = n!

    for (long m = n; m >= 1; --m) {
        Cplx num = p[static_cast<std::size_t>(m + 2)] - ac * p[static_cast<std::size_t>(m + 1)] +
                   b * p[static_cast<std::size_t>(m)];
        p[static_cast<std::size_t>(m - 1)] = -num / ((n - m + 1) * m);
    }

    Cplx leftover = p[2] - ac * p[1] + b * p[0];

    BigFloat scale(0.0, prec);
    for (long s = 0; s <= n; ++s) scale = max(scale, abs(p[static_cast<std::size_t>(s)]));
    scale = scale * (abs(ac) + abs(b) + 1L);
    BigFloat residual = abs(leftover);
    if (!(residual <= ctx.roundtrip_tolerance() * scale))
        throw InconsistentEigenvalue("wave_polynomial: row-0 residual " + residual.to_string() +
                                     " too large; b is not an eigenvalue at this precision");

    std::vector<Cplx> ebasis(p.begin(), p.begin() + n + 1);
    WavePolynomial out{poly_from_ebasis(ebasis), std::move(ebasis), residual};
    return out;
}

Cplx c_selfpair(const std::vector<Cplx>& ebasis, long n, const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.mantissa_bits;
    Cplx sum(prec);
    for (long s = 0; s <= n; ++s)
        sum += ebasis[static_cast<std::size_t>(s)] * ebasis[static_cast<std::size_t>(n - s)];
    Cplx fact(1.0, 0.0, prec);
    for (long k = 2; k <= n; ++k) fact = fact * k;
    Cplx lead = ebasis[static_cast<std::size_t>(n)];
    Cplx scaled = sum * (fact * fact) / (lead * lead);
    return (n % 2 == 0) ? scaled : -scaled;
}

Cplx chi_prime_at(const Poly<GaussRat>& chi, const Cplx& b, const PrecisionContext& ctx) {
    return to_cplx(derivative(chi), ctx)(b);
}

std::vector<Cplx> reversal(const std::vector<Cplx>& ebasis) {
    return std::vector<Cplx>(ebasis.rbegin(), ebasis.rend());
}

BigFloat ode_residual(const Poly<Cplx>& p, long n, const Cplx& a, const Cplx& b,
                      const std::vector<Cplx>& points) {
    Poly<Cplx> dp = derivative(p);
    Poly<Cplx> ddp = derivative(dp);
    BigFloat worst(0.0, a.re.prec());
    for (const Cplx& x : points) {
        Cplx r = ddp(x) - (x * x + a) * dp(x) + (x * n + b) * p(x);
        worst = max(worst, abs(r));
    }
    return worst;
}

SpectralDatum make_spectral_datum(long n, const GaussRat& a, const RootCluster& eigenvalue,
                                  const PrecisionContext& ctx, std::uint64_t seed) {
    SpectralDatum sd;
    sd.n = n;
    sd.a = a;
    sd.chi = char_poly(n, a);
    sd.b = eigenvalue.location;
    sd.b_multiplicity = eigenvalue.order;

    WavePolynomial wp = wave_polynomial(n, a, sd.b, ctx);
    sd.p = std::move(wp.p);
    sd.p_ebasis = std::move(wp.ebasis);
    sd.f = antiderivative_zero(sd.p);

    sd.chi_prime_at_b = chi_prime_at(sd.chi, sd.b, ctx);
    sd.c_self = c_selfpair(sd.p_ebasis, n, ctx);
    sd.condition_warning = abs(sd.chi_prime_at_b) < BigFloat(1e-6, ctx.mantissa_bits);
    if (sd.condition_warning)
        sd.warnings.push_back("near-degenerate spectrum: |chi'(b)| < 1e-6");
    if (eigenvalue.order > 1) {
        sd.condition_warning = true;
        sd.warnings.push_back("eigenvalue b has multiplicity " + std::to_string(eigenvalue.order));
    }

    if (n > 0) {
        sd.p_roots = complex_roots(sd.p, ctx);
        sd.min_root_separation = BigFloat(0.0, ctx.mantissa_bits);
        bool first = true;
        for (std::size_t i = 0; i < sd.p_roots.size(); ++i) {
            if (sd.p_roots[i].order > 1) sd.roots_simple = false;
            for (std::size_t j = i + 1; j < sd.p_roots.size(); ++j) {
                BigFloat d = abs(sd.p_roots[i].location - sd.p_roots[j].location);
                if (first || d < sd.min_root_separation) sd.min_root_separation = d;
                first = false;
            }
        }
        if (first) sd.min_root_separation = BigFloat(1.0, ctx.mantissa_bits); // single root
        if (!sd.roots_simple) sd.warnings.push_back("wave polynomial has a multiple root");
    } else {
        sd.min_root_separation = BigFloat(1.0, ctx.mantissa_bits);
    }

    Rng rng(seed ^ (static_cast<std::uint64_t>(n) << 32) ^ 0x7a7eull);
    std::vector<Cplx> pts;
    for (long i = 0; i < n + 3; ++i)
        pts.push_back(Cplx(rng.next_double() * 3.0 - 1.5, rng.next_double() * 3.0 - 1.5,
                           ctx.mantissa_bits));
    sd.ode_residual = ode_residual(sd.p, n, to_cplx(a, ctx), sd.b, pts);

    return sd;
}

} // namespace wavecoh
