#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <set>

#include "wavecoh/errors.hpp"
#include "wavecoh/poly_parse.hpp"
#include "wavecoh/verify.hpp"

#include "oracles.hpp"

using namespace wavecoh;
using nlohmann::json;

static RunConfig base_config(const std::string& command, long n, const std::string& a) {
    RunConfig cfg;
    cfg.command = command;
    cfg.n = n;
    cfg.a = parse_gauss_rat(a);
    return cfg;
}

TEST_CASE("polynomial literal grammar") {
    PrecisionContext ctx = PrecisionContext::with_bits(128);
    Poly<Cplx> p({Cplx(-1.0, 0.0, 128), Cplx(1.0, 0.0, 128)}); // x - 1

    auto r1 = parse_rational_function("x^2", p, ctx);
    CHECK(r1.numerator.degree() == 2);
    CHECK(r1.denominator.degree() == 0);

    auto r2 = parse_rational_function("1/p^2", p, ctx);
    CHECK(r2.uses_p);
    CHECK(r2.denominator.degree() == 2);
    CHECK(oracles::poly_distance(r2.denominator, p * p).to_double() < 1e-30);

    auto r3 = parse_rational_function("1/(x-1)", p, ctx);
    CHECK(r3.denominator.degree() == 1);

    // rational literal binds tighter than division
    auto r4 = parse_rational_function("1/2*x^2 - 3/4", p, ctx);
    CHECK(r4.denominator.degree() == 0);
    CHECK(r4.numerator.coeff(2).re.to_double() == doctest::Approx(0.5));
    CHECK(r4.numerator.coeff(0).re.to_double() == doctest::Approx(-0.75));

    auto r5 = parse_rational_function("(x-1)*(x+2)", p, ctx);
    CHECK(r5.numerator.degree() == 2);

    CHECK_THROWS_AS(parse_rational_function("x^2 + 0.5", p, ctx), ParseError);
    CHECK_THROWS_AS(parse_rational_function("2x", p, ctx), ParseError); // implicit multiplication
    CHECK_THROWS_AS(parse_rational_function("1/p/p", p, ctx), ParseError);
    CHECK_THROWS_AS(parse_rational_function("x^(1/2)", p, ctx), ParseError);
}

TEST_CASE("spectrum command: exact chi and eigenvalues with residuals") {
    auto res = cmd_spectrum(base_config("spectrum", 1, "-1"));
    CHECK(res.exit_code == 0);
    json j = json::parse(res.output);
    CHECK(j["schema_version"] == "1.0");
    CHECK(j["chi"] == "L^2 - 1"); // exact rational coefficients
    REQUIRE(j["spectral_data"].size() == 2);
    CHECK(j["spectral_data"][0]["b"]["re"].get<std::string>().substr(0, 2) == "-1");
    CHECK(j["spectral_data"][1]["b"]["re"].get<std::string>().substr(0, 1) == "1");
    for (const auto& chk : j["checks"]) CHECK(chk["status"] == "pass");

    auto res0 = cmd_spectrum(base_config("spectrum", 0, "5"));
    json j0 = json::parse(res0.output);
    CHECK(j0["chi"] == "L");
    CHECK(j0["spectral_data"][0]["b"]["re"] == "0");

    auto res2 = cmd_spectrum(base_config("spectrum", 2, "0"));
    json j2 = json::parse(res2.output);
    CHECK(j2["chi"] == "L^3 + 4");
    CHECK(j2["spectral_data"].size() == 3);
}

TEST_CASE("wave command runs the symbolic battery") {
    auto cfg = base_config("wave", 2, "2");
    auto res = cmd_wave(cfg);
    CHECK(res.exit_code == 0);
    json j = json::parse(res.output);
    CHECK(j["spectral_data"].size() == 3);
    bool saw_ode = false;
    for (const auto& chk : j["checks"]) {
        if (chk["name"] == "ode_residual") saw_ode = true;
        CHECK(chk["status"] == "pass");
    }
    CHECK(saw_ode);
}

TEST_CASE("reduce command examples") {
    // x^2 -> alpha=0, beta=-a (a = -1 so beta = 1); certificate u = 1
    auto cfg = base_config("reduce", 1, "-1");
    cfg.eig = 1; // b = 1, p = x - 1
    cfg.reduce_input = "x^2";
    cfg.check_certificates = true;
    auto res = cmd_reduce(cfg);
    CHECK(res.exit_code == 0);
    json j = json::parse(res.output);
    CHECK(j["alpha"].get<std::string>().substr(0, 1) == "0");
    CHECK(j["beta"].get<std::string>().substr(0, 1) == "1");

    // 1/p^2 -> (c, d) = (1, 0)
    cfg.reduce_input = "1/p^2";
    auto res2 = cmd_reduce(cfg);
    CHECK(res2.exit_code == 0);
    json j2 = json::parse(res2.output);
    CHECK(j2["c"].get<std::string>().substr(0, 1) == "1");
    for (const auto& chk : j2["checks"]) CHECK(chk["status"] == "pass");

    // 1/(x-1) with p = x-1: simple pole, not in R -> exit 4
    cfg.reduce_input = "1/(x-1)";
    auto res3 = cmd_reduce(cfg);
    CHECK(res3.exit_code == 4);

    // denominator with a root away from p
    cfg.reduce_input = "1/(x-2)";
    auto res4 = cmd_reduce(cfg);
    CHECK(res4.exit_code == 2);
}

TEST_CASE("exit code 2 on bad input") {
    auto bad = base_config("spectrum", 1, "-1");
    bad.tol_acceptance = -1.0;
    CHECK(cmd_spectrum(bad).exit_code == 2);

    auto bad_eig = base_config("spectrum", 1, "-1");
    bad_eig.eig = 7;
    CHECK(cmd_spectrum(bad_eig).exit_code == 2);

    CHECK_THROWS_AS(parse_gauss_rat("1.5"), ParseError);
}

TEST_CASE("dual command output is deterministic byte-for-byte") {
    auto cfg = base_config("dual", 0, "0");
    cfg.eig = 0;
    auto r1 = cmd_dual(cfg);
    auto r2 = cmd_dual(cfg);
    CHECK(r1.exit_code == 0);
    CHECK(r1.output == r2.output);
    json j = json::parse(r1.output);
    bool saw = false;
    for (const auto& chk : j["checks"])
        if (chk["name"] == "dual_agreement") saw = true;
    CHECK(saw);
}

TEST_CASE("full verify battery through the command layer (n = 0)") {
    auto cfg = base_config("verify", 0, "1");
    auto res = cmd_verify(cfg);
    CHECK(res.exit_code == 0);
    json j = json::parse(res.output);
    REQUIRE(j["spectral_data"].size() == 1);
    CHECK(j["spectral_data"][0]["b"]["re"] == "0");
    std::set<std::string> names;
    for (const auto& chk : j["checks"]) {
        names.insert(chk["name"].get<std::string>());
        CHECK(chk["status"] != "fail");
    }
    // every check family is present
    for (const char* want : {"ode_residual", "l_sum", "l_kills_D", "connection_formula",
                             "theorem_c_all_k", "theorem_d0_trials", "corollary_fourway",
                             "dual_agreement", "dual_at_zero", "taylor_reconstruction",
                             "dual_asymptotics", "functional_independence"})
        CHECK(names.count(want) == 1);
}

TEST_CASE("reduce for the degree-zero wave polynomial") {
    auto cfg = base_config("reduce", 0, "0");
    cfg.reduce_input = "1/p^2";
    auto res = cmd_reduce(cfg);
    CHECK(res.exit_code == 0);
    json j = json::parse(res.output);
    CHECK(j["c"].get<std::string>().substr(0, 1) == "1");
    CHECK(j["d"].get<std::string>().substr(0, 1) == "0");
}

TEST_CASE("multi-eigenvalue runs are byte-stable across the parallel path") {
    auto cfg = base_config("wave", 3, "2"); // four eigenpairs, async fan-out
    auto r1 = cmd_wave(cfg);
    auto r2 = cmd_wave(cfg);
    CHECK(r1.exit_code == 0);
    CHECK(r1.output == r2.output);
}

TEST_CASE("timings appear only when requested") {
    auto cfg = base_config("wave", 1, "-1");
    cfg.eig = 0;
    auto plain = cmd_wave(cfg);
    CHECK(plain.output.find("\"ms\"") == std::string::npos);
    cfg.timings = true;
    auto timed = cmd_wave(cfg);
    CHECK(timed.output.find("\"ms\"") != std::string::npos);
}

TEST_CASE("csv format flattens the checks") {
    auto cfg = base_config("wave", 1, "-1");
    cfg.format = "csv";
    auto res = cmd_wave(cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.output.substr(0, 5) == "name,");
    // header + one line per check
    std::size_t lines = std::count(res.output.begin(), res.output.end(), '\n');
    json probe;
    {
        auto cfg2 = base_config("wave", 1, "-1");
        probe = json::parse(cmd_wave(cfg2).output);
    }
    CHECK(lines == probe["checks"].size() + 1);
}

TEST_CASE("text format renders a summary") {
    auto cfg = base_config("spectrum", 1, "-1");
    cfg.format = "text";
    auto res = cmd_spectrum(cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("chi: L^2 - 1") != std::string::npos);
    CHECK(res.output.find("checks:") != std::string::npos);
}
