#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wavecoh/poly.hpp"
#include "wavecoh/rng.hpp"
#include "wavecoh/weight.hpp"

#include "oracles.hpp"

using namespace wavecoh;

static PrecisionContext ctx = PrecisionContext::with_bits(256);

TEST_CASE("bigfloat basics") {
    BigFloat a(2.0, 256);
    CHECK(abs(sqrt(a) * sqrt(a) - a).to_double() < 1e-70);
    CHECK(BigFloat::pow2(-128, 256).to_double() == doctest::Approx(2.938735877055719e-39));
    BigFloat pi = BigFloat::pi(256);
    CHECK(pi.to_double() == doctest::Approx(3.14159265358979));
    // += must not round a wide value into a narrow accumulator
    BigFloat narrow(1.0, 64);
    narrow += BigFloat(1e-60, 256);
    CHECK(narrow.prec() == 256);
    CHECK((narrow - 1L).to_double() == doctest::Approx(1e-60));
}

TEST_CASE("bigfloat decimal round trip") {
    BigFloat x = BigFloat(1.0, 256) / 3L;
    std::string s = x.to_string();
    BigFloat back = BigFloat::str(s.c_str(), 256);
    CHECK(abs(back - x) <= BigFloat::pow2(-250, 256));
}

TEST_CASE("cplx arithmetic and principal branches") {
    Cplx i(0.0, 1.0, 256);
    Cplx z = i * i;
    CHECK(z.re.to_double() == doctest::Approx(-1.0));
    CHECK(z.im.to_double() == doctest::Approx(0.0));
    // principal sqrt of -1 is +i
    Cplx s = sqrt(Cplx(-1.0, 0.0, 256));
    CHECK(s.im.to_double() == doctest::Approx(1.0));
    Cplx e = exp(Cplx(0.0, 0.0, 256));
    CHECK(e.re.to_double() == doctest::Approx(1.0));
    // exp(i pi) = -1
    Cplx ip(BigFloat(0.0, 256), BigFloat::pi(256));
    CHECK(oracles::dist(exp(ip), Cplx(-1.0, 0.0, 256)) < 1e-70);
}

TEST_CASE("gauss rational field ops and parsing") {
    GaussRat z(oracles::rat(1, 2), oracles::rat(-1, 3));
    GaussRat w = z * z;
    CHECK(w.re == oracles::rat(1, 4) - oracles::rat(1, 9));
    CHECK(w.im == oracles::rat(-1, 3));
    GaussRat q = w / z;
    CHECK(q == z);

    CHECK(parse_gauss_rat("-1").re == -1);
    CHECK(parse_gauss_rat("3/2").re == oracles::rat(3, 2));
    GaussRat g = parse_gauss_rat("1/2+1/3*i");
    CHECK(g.re == oracles::rat(1, 2));
    CHECK(g.im == oracles::rat(1, 3));
    CHECK(parse_gauss_rat("-i").im == -1);
    CHECK(parse_gauss_rat("2*i").im == 2);
    CHECK_THROWS_AS(parse_gauss_rat("0.5"), ParseError);
    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
}

TEST_CASE("evaluate examples") {
    // x - 1 at 2 -> 1
    Poly<Rat> p({Rat(-1), Rat(1)});
    CHECK(p(Rat(2)) == Rat(1));

    // h with a = -1 at 0 -> 0
    CubicWeight w(Cplx(-1.0, 0.0, 256));
    CHECK(abs(w.h(Cplx(0.0, 0.0, 256))).to_double() == 0.0);

    // x^3/3 + a x at 1 -> 1/3 + a  (a = 5/7)
    Rat a(5, 7);
    Poly<Rat> h({Rat(0), a, Rat(0), oracles::rat(1, 3)});
    CHECK(h(Rat(1)) == oracles::rat(1, 3) + a);
}

TEST_CASE("derivative examples") {
    // h' = x^2 + a for several a
    for (long num : {0L, -1L, 2L, 7L}) {
        GaussRat a{oracles::rat(num, 3)};
        Poly<GaussRat> h({GaussRat(0), a, GaussRat(0), GaussRat(oracles::rat(1, 3))});
        Poly<GaussRat> want({a, GaussRat(0), GaussRat(1)});
        CHECK(derivative(h) == want);
    }
    // constant -> zero
    CHECK(derivative(Poly<Rat>::constant(Rat(9))).is_zero());

    // e_k differentiates to e_{k-1}: oracle converts to monomial, derives,
    // converts back
    for (std::size_t k : {1u, 2u, 5u, 8u}) {
        std::vector<Rat> e(k + 1);
        e[k] = 1;
        Poly<Rat> mono = poly_from_ebasis(e);
        std::vector<Rat> back = ebasis_coeffs(derivative(mono));
        REQUIRE(back.size() == k);
        CHECK(back[k - 1] == 1);
        for (std::size_t s = 0; s + 1 < k; ++s) CHECK(back[s] == 0);
    }
}

TEST_CASE("antiderivative examples and round trip") {
    Poly<Rat> one = Poly<Rat>::constant(Rat(1));
    CHECK(antiderivative_zero(one) == Poly<Rat>({Rat(0), Rat(1)}));

    Poly<Rat> p({Rat(-1), Rat(1)}); // x - 1
    CHECK(antiderivative_zero(p) == Poly<Rat>({Rat(0), Rat(-1), oracles::rat(1, 2)}));

    // round trip on random rational polynomials
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rat> c;
        long deg = rng.next_int(0, 8);
        for (long k = 0; k <= deg; ++k) c.push_back(oracles::rat(rng.next_int(-9, 9), rng.next_int(1, 5)));
        Poly<Rat> q(c);
        Poly<Rat> f = antiderivative_zero(q);
        CHECK(derivative(f) == q);
        CHECK(f.coeff(0) == 0);
        if (!q.is_zero()) CHECK(f.degree() == q.degree() + 1);
    }
}

TEST_CASE("monomial <-> e-basis round trip is exact") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rat> c;
        long deg = rng.next_int(0, 10);
        for (long k = 0; k <= deg; ++k) c.push_back(oracles::rat(rng.next_int(-20, 20), rng.next_int(1, 7)));
        Poly<Rat> q(c);
        CHECK(poly_from_ebasis(ebasis_coeffs(q)) == q);
    }
    // e-basis coefficient s equals monomial coefficient s times s!
    Poly<Rat> q({Rat(3), Rat(1), Rat(5), Rat(7)});
    auto e = ebasis_coeffs(q);
    CHECK(e[0] == 3);
    CHECK(e[1] == 1);
    CHECK(e[2] == 10);
    CHECK(e[3] == 42);
}

TEST_CASE("divmod over a field") {
    // (x^2 - 1) / (x - 1) = x + 1 rem 0
    Poly<Rat> num({Rat(-1), Rat(0), Rat(1)});
    Poly<Rat> den({Rat(-1), Rat(1)});
    auto [q, r] = divmod(num, den);
    CHECK(q == Poly<Rat>({Rat(1), Rat(1)}));
    CHECK(r.is_zero());

    Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rat> ac, bc;
        for (long k = 0; k <= rng.next_int(0, 6); ++k) ac.push_back(oracles::rat(rng.next_int(-9, 9)));
        for (long k = 0; k <= rng.next_int(0, 3); ++k) bc.push_back(oracles::rat(rng.next_int(-9, 9)));
        bc.push_back(Rat(rng.next_int(1, 9)));
        Poly<Rat> a(ac), b(bc);
        auto [qq, rr] = divmod(a, b);
        CHECK(qq * b + rr == a);
        CHECK(rr.degree() < b.degree());
    }
}

TEST_CASE("precision context invariants") {
    CHECK_THROWS_AS(PrecisionContext::with_bits(32), std::invalid_argument);
    PrecisionContext c = PrecisionContext::with_bits(320);
    CHECK(c.mantissa_bits == 320);
    CHECK(c.zero_tolerance.to_double() == doctest::Approx(std::pow(2.0, -160.0)));
    CHECK_THROWS_AS(c.with_zero_tolerance(BigFloat(0.0, 320)), std::invalid_argument);
    CHECK(c.with_zero_tolerance(BigFloat(1e-30, 320)).zero_tolerance.to_double() ==
          doctest::Approx(1e-30));
}

TEST_CASE("cubic weight: polynomial forms match the closed forms") {
    CubicWeight w(Cplx(0.3, -0.4, 256));
    CHECK(oracles::poly_distance(derivative(w.h_poly()), w.h_prime_poly()).to_double() < 1e-70);
    Cplx x(1.3, 0.2, 256);
    CHECK(oracles::dist(w.h_poly()(x), w.h(x)) < 1e-70);
    CHECK(oracles::dist(w.h_prime_poly()(x), w.h_prime(x)) < 1e-70);
}

TEST_CASE("poly pretty print") {
    Poly<GaussRat> chi({GaussRat(4), GaussRat(Rat(0)), GaussRat(Rat(0)), GaussRat(1)});
    CHECK(chi.to_string("L") == "L^3 + 4");
    Poly<GaussRat> diff({GaussRat(Rat(-1)), GaussRat(0), GaussRat(1)});
    CHECK(diff.to_string("L") == "L^2 - 1");
}
