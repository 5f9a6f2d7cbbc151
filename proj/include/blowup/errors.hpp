#ifndef BLOWUP_ERRORS_HPP
#define BLOWUP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace blowup {

// Exit codes used by the CLI: 2 validation/input, 3 hypothesis, 4 internal.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A presentation that fails d^2 = 0 / Leibniz after extension.
struct PresentationError : InputError {
    explicit PresentationError(const std::string& msg) : InputError(msg) {}
};

// A mathematical hypothesis of a theorem-backed construction is violated
// (stable range, truncation bounds, orientation classes, ...).
struct HypothesisError : std::runtime_error {
    explicit HypothesisError(const std::string& msg) : std::runtime_error(msg) {}
};

// Consistency failures that should be unreachable for validated inputs.
struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace blowup

#endif
