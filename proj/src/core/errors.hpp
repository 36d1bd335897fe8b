#ifndef STEKLOV_ERRORS_HPP
#define STEKLOV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace steklov {

// Bad arguments or data that violates a precondition (non-positive weight,
// out-of-range exponent, malformed input).
class invalid_input : public std::invalid_argument {
public:
    explicit invalid_input(const std::string& msg) : std::invalid_argument(msg) {}
};

// A numerical procedure failed to converge or a factorization broke down.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace steklov

#endif
