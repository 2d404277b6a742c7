#ifndef SOSQ_ERRORS_HPP
#define SOSQ_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sosq {

class NonFiniteInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ArityMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidBound : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ResidualExceeded : public std::runtime_error {
public:
    ResidualExceeded(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual)
    {
    }

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// Malformed model spec or bound expression. `token()` is the offending text.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::string token, std::size_t position)
        : std::invalid_argument(what), token_(std::move(token)), position_(position)
    {
    }

    const std::string& token() const noexcept { return token_; }
    std::size_t position() const noexcept { return position_; }

private:
    std::string token_;
    std::size_t position_;
};

} // namespace sosq

#endif // SOSQ_ERRORS_HPP
