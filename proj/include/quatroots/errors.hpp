#ifndef QUATROOTS_ERRORS_HPP
#define QUATROOTS_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace quatroots {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Operation called outside its domain: wrong arity, mismatched algebras,
/// central element where a non-central one is required, zero polynomial, ...
class UsageError : public Error {
  public:
    using Error::Error;
};

/// A documented precondition of a mathematical operation does not hold
/// (e.g. asking for non-root conjugates of an actual root).
class PreconditionError : public Error {
  public:
    using Error::Error;
};

/// Inversion of the zero quaternion.
class DivisionByZero : public Error {
  public:
    using Error::Error;
};

/// Nonzero element with vanishing norm: the chosen (a, b) is split.
class ZeroDivisorError : public Error {
  public:
    using Error::Error;
};

/// Expression syntax error with a 1-based position.
class ParseError : public Error {
  public:
    ParseError(const std::string& msg, int line, int column, std::string token)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg +
                (token.empty() ? std::string() : " near '" + token + "'")),
          line_(line), column_(column), token_(std::move(token)) {}

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& token() const { return token_; }

  private:
    int line_;
    int column_;
    std::string token_;
};

/// Floating-point backend could not produce a trustworthy answer.
class NumericFailure : public Error {
  public:
    explicit NumericFailure(const std::string& msg,
                            std::vector<std::complex<double>> partial = {})
        : Error(msg), partial_(std::move(partial)) {}

    const std::vector<std::complex<double>>& partial() const { return partial_; }

  private:
    std::vector<std::complex<double>> partial_;
};

/// A proven bound or identity failed on a computed result. Always a bug.
class InvariantViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

}  // namespace quatroots

#endif  // QUATROOTS_ERRORS_HPP
