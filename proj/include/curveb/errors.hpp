#pragma once
#include <stdexcept>
#include <string>

namespace curveb {

// Base of all library errors; exit_code() is the CLI contract.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual int exit_code() const { return 2; }
};

class InputError : public Error {
public:
    using Error::Error;
    int exit_code() const override { return 2; }
};

class IrregularCurve : public Error {
public:
    using Error::Error;
    int exit_code() const override { return 3; }
};

class PrecisionExhausted : public Error {
public:
    explicit PrecisionExhausted(const std::string& what)
        : Error(what + " (try a higher --precision)") {}
    int exit_code() const override { return 4; }
};

class IoError : public Error {
public:
    using Error::Error;
    int exit_code() const override { return 5; }
};

}  // namespace curveb
