#ifndef SHEAFBETTI_ERRORS_HPP
#define SHEAFBETTI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sheafbetti {

// Malformed or out-of-domain input (bad coordinates, unsupported surface,
// non-effective class where an effective one is required).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A theorem hypothesis failed, so the requested quantity is not defined.
class InapplicableError : public std::runtime_error {
public:
    InapplicableError(std::string failed_check, const std::string& what)
        : std::runtime_error(what), failed_check_(std::move(failed_check)) {}

    const std::string& failed_check() const noexcept { return failed_check_; }

private:
    std::string failed_check_;
};

// An internal identity that must always hold did not. Indicates a bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace sheafbetti

#endif  // SHEAFBETTI_ERRORS_HPP
