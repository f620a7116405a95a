#pragma once

#include <stdexcept>
#include <string>

namespace brauer2 {

// Every error raised by the library derives from Error; the kind lets batch
// drivers triage without string matching.
enum class ErrorKind {
    invalid_argument,
    degenerate_model,
    zero_divisor,
    bad_reduction,
    precision_cap,
    unsupported_geometry,
    invalid_divisor,
    not_split,
    indeterminate_residue,
    unsupported_symbol,
    syntax,
    degree,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& w) : Error(ErrorKind::invalid_argument, w) {}
};

class DegenerateModel : public Error {
public:
    explicit DegenerateModel(const std::string& w) : Error(ErrorKind::degenerate_model, w) {}
};

class ZeroDivisor : public Error {
public:
    explicit ZeroDivisor(const std::string& w) : Error(ErrorKind::zero_divisor, w) {}
};

class BadReduction : public Error {
public:
    explicit BadReduction(const std::string& w) : Error(ErrorKind::bad_reduction, w) {}
};

class PrecisionCap : public Error {
public:
    explicit PrecisionCap(const std::string& w) : Error(ErrorKind::precision_cap, w) {}
};

class UnsupportedGeometry : public Error {
public:
    explicit UnsupportedGeometry(const std::string& w)
        : Error(ErrorKind::unsupported_geometry, w) {}
};

class InvalidDivisor : public Error {
public:
    explicit InvalidDivisor(const std::string& w) : Error(ErrorKind::invalid_divisor, w) {}
};

class NotSplit : public Error {
public:
    explicit NotSplit(const std::string& w) : Error(ErrorKind::not_split, w) {}
};

class IndeterminateResidue : public Error {
public:
    explicit IndeterminateResidue(const std::string& w)
        : Error(ErrorKind::indeterminate_residue, w) {}
};

class UnsupportedSymbol : public Error {
public:
    explicit UnsupportedSymbol(const std::string& w) : Error(ErrorKind::unsupported_symbol, w) {}
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& w, int line, int column);
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

class DegreeError : public Error {
public:
    explicit DegreeError(const std::string& w) : Error(ErrorKind::degree, w) {}
};

} // namespace brauer2
