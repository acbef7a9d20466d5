#ifndef WAVECOH_VERIFY_HPP
#define WAVECOH_VERIFY_HPP

#include "wavecoh/report.hpp"

namespace wavecoh {

/// Which check families to run; `verify` runs everything, `wave` only the
/// symbolic side, `dual` only the bispectral side.
struct VerifyOptions {
    bool symbolic = true;
    bool cohomology = true;   // theorem/corollary reductions
    bool quadrature = true;   // l_j identities, connection formula, y checks
    bool dual = true;         // g1/g2, g(0), reconstruction, asymptotics, dual equation
    bool asymptotics = true;
    int connection_points = 5;
    int dual_u_samples = 5;
    int l_kills_d_trials = 10;
    int d0_trials = 20;
};

/// All checks for one eigenpair; records carry the given eig_index.
std::vector<CheckRecord> run_eigenpair_checks(const SpectralDatum& sd, long eig_index,
                                              const RunConfig& cfg, const VerifyOptions& opts);

/// Full report over the selected eigenvalues (parallel across eigenpairs
/// when several are requested and the MPFR build is thread-safe).
VerificationReport run_verification(const RunConfig& cfg, const VerifyOptions& opts);

struct CommandResult {
    int exit_code = 0;
    std::string output;
};

// Exit codes: 0 all checks pass, 1 a check failed, 2 parse/validation error,
// 3 numeric non-convergence, 4 input not in R (reduce).
CommandResult cmd_spectrum(const RunConfig& cfg);
CommandResult cmd_wave(const RunConfig& cfg);
CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_dual(const RunConfig& cfg);
CommandResult cmd_reduce(const RunConfig& cfg);

} // namespace wavecoh

#endif
