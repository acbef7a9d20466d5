#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wavecoh/pole_expansion.hpp"
#include "wavecoh/errors.hpp"
#include "wavecoh/rng.hpp"

#include "oracles.hpp"

using namespace wavecoh;

static PrecisionContext ctx = PrecisionContext::with_bits(256);
static mpfr_prec_t P = ctx.mantissa_bits;

static Cplx cx(double re, double im = 0.0) { return Cplx(re, im, P); }

static Poly<Cplx> real_poly(std::initializer_list<double> coeffs) {
    std::vector<Cplx> c;
    for (double v : coeffs) c.emplace_back(v, 0.0, P);
    return Poly<Cplx>(c);
}

TEST_CASE("1/((x-1)(x+1)) splits into half residues") {
    std::vector<RootCluster> roots{{cx(1.0), 1}, {cx(-1.0), 1}};
    auto pe = partial_fractions(real_poly({1.0}), roots, ctx);
    CHECK(pe.head().is_zero());
    REQUIRE(pe.poles().size() == 2);
    // sorted by real part: z = -1 first
    CHECK(oracles::dist(pe.poles()[0].coefficient(1), cx(-0.5)) < 1e-70);
    CHECK(oracles::dist(pe.poles()[1].coefficient(1), cx(0.5)) < 1e-70);
}

TEST_CASE("1/(x-1)^2 is a single order-2 term") {
    std::vector<RootCluster> roots{{cx(1.0), 2}};
    auto pe = partial_fractions(real_poly({1.0}), roots, ctx);
    CHECK(pe.head().is_zero());
    REQUIRE(pe.poles().size() == 1);
    CHECK(abs(pe.poles()[0].coefficient(1)).to_double() < 1e-70);
    CHECK(oracles::dist(pe.poles()[0].coefficient(2), cx(1.0)) < 1e-70);
}

TEST_CASE("f/p^2 for the n=1 desk case: recombination fixes the expected values") {
    // p = x-1, f = x^2/2 - x. The oracle is recombination: with
    // f = ((x-1)^2 - 1)/2, f/p^2 = 1/2 - (1/2)/(x-1)^2.
    std::vector<RootCluster> roots{{cx(1.0), 2}};
    auto pe = partial_fractions(real_poly({0.0, -1.0, 0.5}), roots, ctx);
    CHECK(pe.head().degree() == 0);
    CHECK(oracles::dist(pe.head().coeff(0), cx(0.5)) < 1e-70);
    REQUIRE(pe.poles().size() == 1);
    CHECK(abs(pe.poles()[0].coefficient(1)).to_double() < 1e-70);
    CHECK(oracles::dist(pe.poles()[0].coefficient(2), cx(-0.5)) < 1e-70);

    auto [num, den] = pe.to_fraction();
    CHECK(oracles::poly_distance(num, real_poly({0.0, -1.0, 0.5})).to_double() < 1e-70);
}

TEST_CASE("recombination round trip on random rational functions") {
    Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        // distinct random poles
        std::vector<RootCluster> roots;
        int npoles = static_cast<int>(rng.next_int(1, 3));
        for (int i = 0; i < npoles; ++i) {
            Cplx z = cx(rng.next_int(-4, 4) * 1.0 + 0.25 * i, rng.next_int(-3, 3) * 1.0);
            roots.push_back({z, static_cast<int>(rng.next_int(1, 3))});
        }
        bool distinct = true;
        for (std::size_t i = 0; i < roots.size(); ++i)
            for (std::size_t j = i + 1; j < roots.size(); ++j)
                if (oracles::dist(roots[i].location, roots[j].location) < 0.1) distinct = false;
        if (!distinct) continue;

        long num_deg = rng.next_int(0, 7);
        std::vector<Cplx> nc;
        for (long k = 0; k <= num_deg; ++k)
            nc.push_back(cx(rng.next_int(-9, 9) * 1.0, rng.next_int(-9, 9) * 1.0));
        nc.push_back(cx(1.0));
        Poly<Cplx> num(nc);

        auto pe = partial_fractions(num, roots, ctx);
        auto [rnum, rden] = pe.to_fraction();

        // rnum/rden == num/den requires rnum == num (den is monic from roots)
        BigFloat err = oracles::poly_distance(rnum, num);
        BigFloat scale = max(coeff_scale(num), BigFloat(1.0, P));
        CHECK(err <= ctx.roundtrip_tolerance() * scale);
    }
}

TEST_CASE("coincident denominator roots are rejected") {
    std::vector<RootCluster> roots{{cx(1.0), 1}, {Cplx(BigFloat(1.0, P) + ctx.zero_tolerance / 2L, BigFloat(0.0, P)), 1}};
    CHECK_THROWS_AS(partial_fractions(real_poly({1.0}), roots, ctx), IllConditioned);
}

TEST_CASE("apply_D on polynomials: D(1) = h', D(x) = x^3 + a x + 1") {
    CubicWeight w(cx(0.7));
    PoleExpansion one(real_poly({1.0}));
    auto d1 = apply_D(one, w);
    CHECK(d1.pole_free());
    CHECK(oracles::poly_distance(d1.head(), Poly<Cplx>({cx(0.7), cx(0.0), cx(1.0)})).to_double() < 1e-70);

    PoleExpansion x(real_poly({0.0, 1.0}));
    auto dx = apply_D(x, w);
    CHECK(oracles::poly_distance(dx.head(), Poly<Cplx>({cx(1.0), cx(0.7), cx(0.0), cx(1.0)})).to_double() < 1e-70);
}

TEST_CASE("apply_D on a simple pole re-expands through the shifted h'") {
    // D(1/(x-z)) = -1/(x-z)^2 + (z^2+a)/(x-z) + (x + z); oracle: recombine
    // over (x-z)^2 and compare with -1 + h'(x)(x-z) as polynomials.
    CubicWeight w(cx(-1.0));
    Cplx z = cx(2.0, 0.5);
    auto dq = apply_D(PoleExpansion::single_term(z, 1, cx(1.0)), w);

    auto [num, den] = dq.to_fraction();
    // den = (x-z)^2
    Poly<Cplx> lin({-z, cx(1.0)});
    CHECK(oracles::poly_distance(den, lin * lin).to_double() < 1e-70);
    Poly<Cplx> want = Poly<Cplx>::constant(cx(-1.0)) + w.h_prime_poly() * lin;
    CHECK(oracles::poly_distance(num, want).to_double() < 1e-60);
}

TEST_CASE("apply_D agrees with termwise differentiation at sample points") {
    // independent oracle: differentiate the expansion term by term and add
    // h'(x) q(x) pointwise
    CubicWeight w(cx(0.3, -0.2));
    Rng rng(31);
    for (int trial = 0; trial < 5; ++trial) {
        PoleExpansion q(real_poly({rng.next_int(-5, 5) * 1.0, rng.next_int(-5, 5) * 1.0}));
        Cplx z1 = cx(1.0 + trial, -1.0);
        Cplx z2 = cx(-2.0, 0.5 * trial);
        q = PoleExpansion::add(q, PoleExpansion::single_term(z1, 2, cx(3.0)), ctx.zero_tolerance);
        q = PoleExpansion::add(q, PoleExpansion::single_term(z2, 1, cx(-1.0, 2.0)), ctx.zero_tolerance);

        auto dq = apply_D(q, w);
        for (int s = 0; s < 5; ++s) {
            Cplx x = cx(rng.next_double() * 4.0 - 2.0, rng.next_double() * 4.0 - 2.0);
            // derivative of head + pole terms, by hand
            Cplx dv = derivative(q.head())(x);
            dv += cx(3.0) * (cx(-2.0) / ((x - z1) * (x - z1) * (x - z1)));
            dv += cx(-1.0, 2.0) * (cx(-1.0) / ((x - z2) * (x - z2)));
            Cplx want = dv + w.h_prime(x) * q.eval(x);
            CHECK(abs(dq.eval(x) - want).to_double() < 1e-60);
        }
    }
}

TEST_CASE("pole order rises by exactly one under D") {
    CubicWeight w(cx(1.0));
    auto q = PoleExpansion::single_term(cx(0.5), 3, cx(2.0));
    auto dq = apply_D(q, w);
    REQUIRE(dq.poles().size() == 1);
    CHECK(dq.poles()[0].max_order() == 4);
}
