#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wavecoh/roots.hpp"
#include "wavecoh/rng.hpp"
#include "wavecoh/errors.hpp"

#include "oracles.hpp"

using namespace wavecoh;

static PrecisionContext ctx = PrecisionContext::with_bits(256);

static Poly<Cplx> real_poly(std::initializer_list<double> coeffs) {
    std::vector<Cplx> c;
    for (double v : coeffs) c.emplace_back(v, 0.0, ctx.mantissa_bits);
    return Poly<Cplx>(c);
}

TEST_CASE("lambda^2 + a with a = -1 has roots +-1") {
    auto clusters = complex_roots(real_poly({-1.0, 0.0, 1.0}), ctx);
    REQUIRE(clusters.size() == 2);
    CHECK(clusters[0].order == 1);
    CHECK(clusters[1].order == 1);
    CHECK(oracles::dist(clusters[0].location, Cplx(-1.0, 0.0, 256)) < 1e-70);
    CHECK(oracles::dist(clusters[1].location, Cplx(1.0, 0.0, 256)) < 1e-70);
}

TEST_CASE("lambda^3 + 4 matches the radical oracle") {
    auto clusters = complex_roots(real_poly({4.0, 0.0, 0.0, 1.0}), ctx);
    REQUIRE(clusters.size() == 3);
    auto want = oracles::cube_roots_of_minus(4.0, 256);
    auto got = roots_with_multiplicity(clusters);
    CHECK(oracles::root_set_distance(got, want).to_double() < 1e-70);
}

TEST_CASE("(x-1)^2 clusters to one double root") {
    auto clusters = complex_roots(real_poly({1.0, -2.0, 1.0}), ctx);
    REQUIRE(clusters.size() == 1);
    CHECK(clusters[0].order == 2);
    CHECK(oracles::dist(clusters[0].location, Cplx(1.0, 0.0, 256)) < 1e-30);
}

TEST_CASE("trailing zero coefficients become a root cluster at the origin") {
    // x^3 (x - 2)
    auto clusters = complex_roots(real_poly({0.0, 0.0, 0.0, -2.0, 1.0}), ctx);
    REQUIRE(clusters.size() == 2);
    bool found_zero = false, found_two = false;
    for (auto& cl : clusters) {
        if (cl.order == 3 && abs(cl.location).to_double() == 0.0) found_zero = true;
        if (cl.order == 1 && oracles::dist(cl.location, Cplx(2.0, 0.0, 256)) < 1e-70) found_two = true;
    }
    CHECK(found_zero);
    CHECK(found_two);
}

TEST_CASE("residuals meet the tolerance contract on random polynomials") {
    Rng rng(101);
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<Cplx> c;
        long deg = rng.next_int(1, 8);
        for (long k = 0; k <= deg; ++k)
            c.emplace_back(rng.next_int(-9, 9) * 1.0, rng.next_int(-9, 9) * 1.0, ctx.mantissa_bits);
        c.back() = Cplx(1.0, 0.0, ctx.mantissa_bits);
        Poly<Cplx> p(c);
        auto clusters = complex_roots(p, ctx);
        int total = 0;
        BigFloat scale = coeff_scale(p);
        for (auto& cl : clusters) {
            total += cl.order;
            CHECK(abs(p(cl.location)) <= ctx.zero_tolerance * scale);
        }
        CHECK(total == p.degree());
    }
}

TEST_CASE("zero polynomial is rejected") {
    CHECK_THROWS_AS(complex_roots(Poly<Cplx>(), ctx), std::domain_error);
}
