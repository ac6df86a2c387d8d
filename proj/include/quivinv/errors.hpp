#ifndef QUIVINV_ERRORS_HPP
#define QUIVINV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace quivinv {

// Thrown when a computation would exceed a configured size limit
// (monomial-basis guard, pathway search length cap). Callers map this
// to exit code 3; it never stands in for a wrong answer.
struct ResourceGuardError : std::runtime_error {
    explicit ResourceGuardError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace quivinv

#endif
