#pragma once

#include <stdexcept>
#include <string>

namespace hamfact {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

class SingularM21Error : public Error {
public:
    using Error::Error;
};

class NotHamiltonianError : public Error {
public:
    using Error::Error;
};

class ZeroConstantTermError : public Error {
public:
    using Error::Error;
};

class NotConservativeError : public Error {
public:
    using Error::Error;
};

// Simulation blew up (non-finite state); carries the time of failure.
class NumericError : public Error {
public:
    NumericError(const std::string& msg, double t) : Error(msg), time(t) {}
    double time;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t col)
        : Error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
          line(line),
          col(col) {}
    std::size_t line;
    std::size_t col;
};

class UnboundParameterError : public ParseError {
public:
    UnboundParameterError(const std::string& name, std::size_t line, std::size_t col)
        : ParseError("unbound parameter '" + name + "'", line, col), name(name) {}
    std::string name;
};

class NonlinearVelocityError : public ParseError {
public:
    using ParseError::ParseError;
};

}  // namespace hamfact
