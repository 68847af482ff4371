#pragma once

#include <stdexcept>
#include <string>

namespace qlgraph {

/// Failure category; the command-line tool maps each to a distinct exit code.
enum class ErrorKind {
    validation,
    numerical,
    io,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Bad parameters, malformed graphs, broken preconditions.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(ErrorKind::validation, what) {}
};

/// Degenerate spectra, diverging integrations, exhausted random retries.
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& what) : Error(ErrorKind::numerical, what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(ErrorKind::io, what) {}
};

}  // namespace qlgraph
