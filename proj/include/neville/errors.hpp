#ifndef NEVILLE_ERRORS_HPP
#define NEVILLE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace neville {

/// Base class of all library errors. `code()` is a stable, greppable
/// identifier (e.g. "DuplicateAbscissa"); `what()` carries the details.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class EmptyNodeSet : public Error {
public:
    EmptyNodeSet() : Error("EmptyNodeSet", "node set must contain at least one point") {}
};

class DuplicateAbscissa : public Error {
public:
    explicit DuplicateAbscissa(double x)
        : Error("DuplicateAbscissa",
                "duplicate abscissa " + std::to_string(x) +
                " (distinct x values are required)") {}
};

class NonFiniteInput : public Error {
public:
    explicit NonFiniteInput(const std::string& what_value)
        : Error("NonFiniteInput", what_value + " must be finite") {}
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& message)
        : Error("InvalidArgument", message) {}
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error("ParseError", "line " + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class TooFewRows : public Error {
public:
    explicit TooFewRows(std::size_t got)
        : Error("TooFewRows",
                "a table needs at least 2 rows, got " + std::to_string(got)) {}
};

class InvalidRange : public Error {
public:
    explicit InvalidRange(const std::string& message) : Error("InvalidRange", message) {}
};

class NonFiniteSample : public Error {
public:
    explicit NonFiniteSample(double x)
        : Error("NonFiniteSample",
                "sampled function returned a non-finite value at x = " + std::to_string(x)) {}
};

class DegreeTooLarge : public Error {
public:
    DegreeTooLarge(int degree, std::size_t table_size)
        : Error("DegreeTooLarge",
                "degree " + std::to_string(degree) + " needs " + std::to_string(degree + 1) +
                " points but the table has only " + std::to_string(table_size)) {}
};

class OutOfDomain : public Error {
public:
    OutOfDomain(double x, double lo, double hi)
        : Error("OutOfDomain",
                "x = " + std::to_string(x) + " lies outside the table range [" +
                std::to_string(lo) + ", " + std::to_string(hi) + "]") {}
};

class DerivativeVanished : public Error {
public:
    DerivativeVanished(double x, double value, double floor)
        : Error("DerivativeVanished",
                "|derivative| = " + std::to_string(value) + " at x = " + std::to_string(x) +
                " is below the usable floor " + std::to_string(floor)) {}
};

class EmptyPopulation : public Error {
public:
    EmptyPopulation() : Error("EmptyPopulation", "statistics of an empty population") {}
};

class IllConditioned : public Error {
public:
    explicit IllConditioned(const std::string& message) : Error("IllConditioned", message) {}
};

} // namespace neville

#endif // NEVILLE_ERRORS_HPP
