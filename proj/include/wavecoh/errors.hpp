#ifndef WAVECOH_ERRORS_HPP
#define WAVECOH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wavecoh {

// Numeric failure modes carry enough context to decide between
// "retry at higher precision" and "input is genuinely bad".

struct NonConvergence : std::runtime_error {
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

struct IllConditioned : std::runtime_error {
    explicit IllConditioned(const std::string& what) : std::runtime_error(what) {}
};

struct InconsistentEigenvalue : std::runtime_error {
    explicit InconsistentEigenvalue(const std::string& what) : std::runtime_error(what) {}
};

struct ResidueObstruction : std::runtime_error {
    explicit ResidueObstruction(const std::string& what) : std::runtime_error(what) {}
};

struct SingularBasis : std::runtime_error {
    explicit SingularBasis(const std::string& what) : std::runtime_error(what) {}
};

struct QuadratureFailure : std::runtime_error {
    explicit QuadratureFailure(const std::string& what) : std::runtime_error(what) {}
};

struct ReconstructionMismatch : std::runtime_error {
    explicit ReconstructionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace wavecoh

#endif
