#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wavecoh/functionals.hpp"
#include "wavecoh/errors.hpp"
#include "wavecoh/rng.hpp"

#include "oracles.hpp"

using namespace wavecoh;

static PrecisionContext ctx = PrecisionContext::with_bits(256);
static mpfr_prec_t P = ctx.mantissa_bits;

static Cplx cx(double re, double im = 0.0) { return Cplx(re, im, P); }

static SpectralDatum desk_n1() {
    GaussRat a{Rat(-1)};
    return make_spectral_datum(1, a, spectrum(1, a, ctx)[1], ctx, 7); // b = 1
}

TEST_CASE("contour geometry: directions, truncation decay, detours") {
    CubicWeight w(cx(0.0));
    Contour c = build_contour(0, {}, w, ctx);
    REQUIRE(c.segments.size() == 2);
    // incoming leg starts on the e^{i pi/3} ray, outgoing ends on e^{i pi}
    Cplx start = c.segments.front().a;
    Cplx finish = c.segments.back().b;
    CHECK(arg(start).to_double() == doctest::Approx(M_PI / 3.0));
    CHECK(cos(arg(finish)).to_double() == doctest::Approx(-1.0));
    // weight has decayed below the precision budget at both endpoints
    double target = -(256.0 + 32.0) * std::log(2.0);
    CHECK(w.h(start).re.to_double() <= target * 0.999);
    CHECK(w.h(finish).re.to_double() <= target * 0.999);

    // pole on the outgoing ray forces an arc
    Contour cd = build_contour(0, {cx(-2.0)}, w, ctx);
    bool has_arc = false;
    for (auto& s : cd.segments)
        if (s.kind == ContourSegment::Kind::Arc) {
            has_arc = true;
            CHECK(oracles::dist(s.center, cx(-2.0)) < 1e-70);
            // clearance 0.1 (1 + |z|) = 0.3
            CHECK(s.radius.to_double() == doctest::Approx(0.3).epsilon(0.01));
        }
    CHECK(has_arc);
    // path keeps its clearance from the pole
    for (auto& s : cd.segments) {
        if (s.kind != ContourSegment::Kind::Line) continue;
        for (double t = 0.0; t <= 1.0; t += 0.05) {
            Cplx x = s.a + (s.b - s.a) * BigFloat(t, P);
            CHECK(abs(x - cx(-2.0)).to_double() > 0.3 * 0.999);
        }
    }
}

TEST_CASE("reflected next contour lies in the half-plane H_j") {
    CubicWeight w(cx(0.5));
    for (int j = 0; j < 3; ++j) {
        Sector sector{j};
        Contour next = build_contour((j + 1) % 3, {}, w, ctx);
        for (auto& s : next.segments) {
            if (s.kind != ContourSegment::Kind::Line) continue;
            for (double t : {0.1, 0.5, 0.9}) {
                Cplx x = s.a + (s.b - s.a) * BigFloat(t, P);
                if (abs(x).to_double() < 1e-6) continue; // origin has no argument
                CHECK(sector.contains(-x));
            }
        }
    }
}

TEST_CASE("quadrature oracle: l_2(1) = 2 pi i Ai(-a) for real a") {
    for (double av : {0.0, -1.0, 2.0}) {
        CubicWeight w(cx(av));
        PoleExpansion one(Poly<Cplx>::constant(cx(1.0)));
        QuadratureResult r = l_functional(one, 2, w, ctx);
        BigFloat ai = airy_ai(BigFloat(-av, P));
        Cplx want = Cplx(BigFloat(0.0, P), BigFloat::pi(P) * 2L) * Cplx::real(ai);
        CHECK(abs(r.value - want) <= max(r.error_estimate * 4L, abs(want) * BigFloat(1e-60, P)));
        // the independent error estimate is honest
        CHECK(abs(r.value - want).to_double() <= 1e-30);
    }
}

TEST_CASE("l_0 + l_1 + l_2 = 0 on 1/p^2") {
    auto sd = desk_n1();
    CubicWeight w(sd.a, ctx);
    auto q = one_over_p2(sd, ctx);
    Cplx sum(P);
    BigFloat scale(0.0, P);
    for (int j = 0; j < 3; ++j) {
        auto r = l_functional(q, j, w, ctx);
        sum += r.value;
        scale = max(scale, abs(r.value));
    }
    CHECK((abs(sum) / scale).to_double() < 1e-20);
}

TEST_CASE("l_j annihilates exact forms") {
    auto sd = desk_n1();
    CubicWeight w(sd.a, ctx);
    Rng rng(55);
    for (int trial = 0; trial < 4; ++trial) {
        PoleExpansion u(Poly<Cplx>({cx(rng.next_int(-3, 3) * 1.0), cx(rng.next_int(-3, 3) * 1.0)}));
        u = PoleExpansion::add(u,
                               PoleExpansion::single_term(cx(0.5 + 0.4 * trial, rng.next_int(-2, 2) * 0.7),
                                                          static_cast<int>(rng.next_int(1, 2)), cx(2.0, -1.0)),
                               ctx.zero_tolerance);
        PoleExpansion dq = apply_D(u, w);
        for (int j = 0; j < 3; ++j) {
            Integrand f = [&](const Cplx& x) { return dq.eval(x) * exp(w.h(x)); };
            Contour contour = build_contour(j, {cx(0.5 + 0.4 * trial, rng.next_int(-2, 2) * 0.7)}, w, ctx);
            BigFloat mass = contour_mass(contour, f, ctx);
            auto r = l_functional(dq, j, w, ctx);
            CHECK(abs(r.value) <= mass * BigFloat(1e-20, P));
        }
    }
}

TEST_CASE("deformation independence: same value on a zigzag path") {
    auto sd = desk_n1();
    CubicWeight w(sd.a, ctx);
    auto q = one_over_p2(sd, ctx);
    for (int j = 0; j < 3; ++j) {
        auto standard = l_functional(q, j, w, ctx);
        Contour variant = build_contour_variant(j, {sd.p_roots[0].location}, w, ctx);
        auto zig = l_functional_on(q, variant, w, ctx);
        BigFloat allowed = (standard.error_estimate + zig.error_estimate) * 8L +
                           abs(standard.value) * BigFloat(1e-40, P);
        CHECK(abs(standard.value - zig.value) <= allowed);
    }
}

TEST_CASE("independence determinant is away from zero") {
    for (double av : {0.0, -1.0, 2.0}) {
        CubicWeight w(cx(av));
        Cplx det = independence_determinant(w, ctx);
        CHECK(abs(det).to_double() > 1e-8);
    }
}

TEST_CASE("J values: sum over j vanishes, n=0 case is l_j(1)") {
    auto sd = desk_n1();
    Cplx sum(P);
    BigFloat scale(0.0, P);
    for (int j = 0; j < 3; ++j) {
        auto r = J_value(sd, j, ctx);
        sum += r.value;
        scale = max(scale, abs(r.value));
    }
    CHECK((abs(sum) / scale).to_double() < 1e-20);

    GaussRat a0{Rat(0)};
    auto sd0 = make_spectral_datum(0, a0, spectrum(0, a0, ctx)[0], ctx, 7);
    auto j2 = J_value(sd0, 2, ctx);
    BigFloat ai = airy_ai(BigFloat(0.0, P));
    Cplx want = Cplx(BigFloat(0.0, P), BigFloat::pi(P) * 2L) * Cplx::real(ai);
    CHECK(abs(j2.value - want).to_double() < 1e-40);
    CHECK(abs(j2.value).to_double() > 0.1);
}

TEST_CASE("connection formula on the desk case") {
    auto sd = desk_n1();
    Rng rng(77);
    for (int j = 0; j < 3; ++j) {
        for (int s = 0; s < 2; ++s) {
            // sample away from the root at 1
            Cplx x = cx(-0.4 - 0.5 * s - 0.1 * j, 0.3 + 0.2 * s);
            Cplx res = connection_residual(sd, j, x, ctx);
            CHECK(abs(res).to_double() < 1e-12);
        }
    }
}

TEST_CASE("y_j solves the equation: finite-difference residual") {
    auto sd = desk_n1();
    Cplx x = cx(-0.6, 0.2);
    auto r = y_ode_residual(sd, 2, x, ctx);
    CHECK((r.residual / r.scale).to_double() < 1e-8);

    // n = 0 specialization
    GaussRat a0{Rat(0)};
    auto sd0 = make_spectral_datum(0, a0, spectrum(0, a0, ctx)[0], ctx, 7);
    auto r0 = y_ode_residual(sd0, 1, cx(0.4, -0.3), ctx);
    CHECK((r0.residual / r0.scale).to_double() < 1e-8);
}

TEST_CASE("quadrature annihilates q minus its wave-basis representative") {
    // cross-module: the symbolic reducer's (c, d) is exactly what the
    // functionals see: l_j(q - (c + d f)/p^2) = 0 for j = 1, 2
    GaussRat a2{Rat(2)};
    auto sd = make_spectral_datum(2, a2, spectrum(2, a2, ctx)[0], ctx, 7);
    CubicWeight w(sd.a, ctx);
    Rng rng(41);
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<Cplx> rc;
        for (long k = 0; k <= sd.n; ++k) rc.push_back(cx(rng.next_int(-5, 5) * 1.0));
        Poly<Cplx> r(rc);
        if (r.is_zero()) r = Poly<Cplx>::constant(cx(1.0));
        PoleExpansion q(r * sd.p.reflected());
        auto cls = wave_basis_coordinates(q, sd, ctx);
        PoleExpansion diff = PoleExpansion::sub(q, cls.canonical, ctx.zero_tolerance);
        for (int j = 1; j <= 2; ++j) {
            std::vector<Cplx> poles;
            for (const auto& pt : diff.poles()) poles.push_back(pt.z);
            Contour contour = build_contour(j, poles, w, ctx);
            Integrand f = [&](const Cplx& x) { return diff.eval(x) * exp(w.h(x)); };
            BigFloat mass = contour_mass(contour, f, ctx);
            auto res = l_functional_on(diff, contour, w, ctx);
            CHECK((abs(res.value) / max(mass, BigFloat(1.0, P))).to_double() < 1e-20);
        }
    }
}

TEST_CASE("y_j approaches e^h/x^{n+2} inside its half-plane") {
    auto sd = desk_n1();
    for (int j = 0; j < 3; ++j) {
        auto deviations = y_asymptotic_deviations(sd, j, ctx);
        REQUIRE(deviations.size() == 3);
        CHECK(deviations[2] < deviations[1]);
        CHECK(deviations[1] < deviations[0]);
        CHECK(deviations[2].to_double() < 0.5);
    }
}
