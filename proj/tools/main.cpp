#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "wavecoh/errors.hpp"
#include "wavecoh/verify.hpp"

using namespace wavecoh;

namespace {

struct RawArgs {
    long n = 0;
    std::string a = "0";
    std::string eig = "all";
    long bits = 256;
    double tol = 1e-8;
    std::uint64_t seed = 20240801;
    std::string format = "json";
    bool check = false;
    bool timings = false;
    std::string input;
};

RunConfig build_config(const RawArgs& raw, const std::string& command) {
    RunConfig cfg;
    cfg.command = command;
    cfg.n = raw.n;
    cfg.a = parse_gauss_rat(raw.a);
    if (raw.eig != "all") {
        std::size_t pos = 0;
        long idx = std::stol(raw.eig, &pos);
        if (pos != raw.eig.size()) throw ParseError("--eig expects an index or 'all'");
        cfg.eig = idx;
    }
    cfg.bits = raw.bits;
    cfg.tol_acceptance = raw.tol;
    cfg.tol_symbolic = std::min(1e-10, raw.tol);
    cfg.seed = raw.seed;
    cfg.format = raw.format;
    cfg.check_certificates = raw.check;
    cfg.timings = raw.timings;
    cfg.reduce_input = raw.input;
    return cfg;
}

void add_common(CLI::App* cmd, RawArgs& raw, bool need_n) {
    auto* n_opt = cmd->add_option("--n", raw.n, "degree of the wave polynomial");
    if (need_n) n_opt->required();
    cmd->add_option("--a", raw.a,
                    "weight parameter, exact rational 'p/q' or Gaussian rational 'p/q+r/s*i'");
    cmd->add_option("--eig", raw.eig, "eigenvalue index (sorted), or 'all'");
    cmd->add_option("--bits", raw.bits, "mantissa bits of the working precision")
        ->envname("WAVECOH_BITS");
    cmd->add_option("--tol", raw.tol, "acceptance tolerance for the verification checks")
        ->envname("WAVECOH_TOL");
    cmd->add_option("--seed", raw.seed, "seed for sample points and randomized trials");
    cmd->add_option("--format", raw.format, "output format: json, csv or text");
    cmd->add_flag("--timings", raw.timings, "include wall times (output no longer byte-stable)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"wave polynomials of the quartic-oscillator equation, their twisted-cohomology "
                 "classes, and high-precision verification of the spectral-derivative constant"};
    app.require_subcommand(1);

    RawArgs raw;
    CommandResult result;

    auto* spectrum_cmd = app.add_subcommand("spectrum", "exact characteristic polynomial and eigenvalues");
    add_common(spectrum_cmd, raw, true);
    spectrum_cmd->callback([&] { result = cmd_spectrum(build_config(raw, "spectrum")); });

    auto* wave_cmd = app.add_subcommand("wave", "wave polynomial and its symbolic invariants");
    add_common(wave_cmd, raw, true);
    wave_cmd->callback([&] { result = cmd_wave(build_config(raw, "wave")); });

    auto* verify_cmd = app.add_subcommand("verify", "full verification battery");
    add_common(verify_cmd, raw, true);
    verify_cmd->callback([&] { result = cmd_verify(build_config(raw, "verify")); });

    auto* dual_cmd = app.add_subcommand("dual", "bispectral-dual checks only");
    add_common(dual_cmd, raw, true);
    dual_cmd->callback([&] { result = cmd_dual(build_config(raw, "dual")); });

    auto* reduce_cmd = app.add_subcommand("reduce", "reduce a rational function to canonical form");
    add_common(reduce_cmd, raw, true);
    reduce_cmd->add_option("input", raw.input, "rational function literal, e.g. 'x^2' or '1/p^2'")
        ->required();
    reduce_cmd->add_flag("--check", raw.check, "re-verify the emitted exactness certificate");
    reduce_cmd->callback([&] { result = cmd_reduce(build_config(raw, "reduce")); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (result.exit_code == 2 || result.exit_code == 3) std::cerr << result.output;
    else std::cout << result.output;
    return result.exit_code;
}
