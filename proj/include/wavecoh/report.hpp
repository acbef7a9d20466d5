#ifndef WAVECOH_REPORT_HPP
#define WAVECOH_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wavecoh/rational.hpp"
#include "wavecoh/wave.hpp"

namespace wavecoh {

/// One run of the tool: what to compute and at which tolerances. The
/// symbolic tolerance gates exact-side residuals (1e-10 class); the
/// acceptance tolerance gates quadrature-vs-symbolic agreement (1e-8 class).
struct RunConfig {
    std::string command = "verify";
    long n = 1;
    GaussRat a;
    std::optional<long> eig;      // nullopt: all eigenvalues
    mpfr_prec_t bits = 256;
    double tol_acceptance = 1e-8;
    double tol_symbolic = 1e-10;
    std::uint64_t seed = 20240801;
    std::string format = "json";  // json | csv | text
    bool check_certificates = false;
    bool timings = false;         // adds wall times; disables byte-stable output
    std::string reduce_input;

    void validate() const; // throws ParseError on bad tolerances/format
    PrecisionContext precision() const { return PrecisionContext::with_bits(bits); }
};

/// One verification record: the identity checked, the measured residual and
/// the tolerance it was held to.
struct CheckRecord {
    std::string name;
    std::string identity;
    std::string status; // "pass" | "fail" | "warn"
    std::string residual;
    std::string tolerance;
    long eig_index = -1; // -1: not tied to one eigenvalue
    double ms = 0.0;
};

/// Serialized eigenpair: every number as a full-precision decimal string.
struct SpectralSummary {
    long eig_index = 0;
    std::string b_re, b_im;
    int b_multiplicity = 1;
    std::vector<std::string> chi;        // exact coefficients, ascending degree
    std::string chi_prime_re, chi_prime_im;
    std::string c_re, c_im;              // self-pairing value of the constant
    std::vector<std::pair<std::string, std::string>> p_monomial;
    std::vector<std::pair<std::string, std::string>> p_ebasis;
    std::string ode_residual;
    std::vector<std::string> warnings;
};

SpectralSummary summarize(const SpectralDatum& sd, long eig_index);

struct VerificationReport {
    RunConfig config;
    std::vector<SpectralSummary> spectral_data;
    std::vector<CheckRecord> checks;
    std::vector<std::pair<std::string, std::string>> extra; // command-specific fields

    bool any_fail() const;
    std::string render() const; // in config.format
    std::string to_json() const;
    std::string to_csv() const;
    std::string to_text() const;
};

/// Helper for check construction.
CheckRecord make_check(const std::string& name, const std::string& identity, bool pass,
                       const BigFloat& residual, const std::string& tolerance, long eig_index);

} // namespace wavecoh

#endif
