#ifndef PINCHUK_ERRORS_HPP
#define PINCHUK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pinchuk {

// Every library failure derives from Error so the CLI can map it to a stable
// message and exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class UnboundVariable : public Error {
public:
    explicit UnboundVariable(const std::string& name)
        : Error("unbound variable '" + name + "'"), variable_(name)
    {
    }
    const std::string& variable() const noexcept { return variable_; }

private:
    std::string variable_;
};

class ZeroPolynomial : public Error {
public:
    using Error::Error;
};

class DegreeError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class InexactDivision : public Error {
public:
    using Error::Error;
};

class ForeignVariable : public Error {
public:
    using Error::Error;
};

class NotPolynomialInP : public Error {
public:
    using Error::Error;
};

class CertificateFailure : public Error {
public:
    using Error::Error;
};

class AnalysisFailure : public Error {
public:
    using Error::Error;
};

class SpecialLevel : public Error {
public:
    using Error::Error;
};

class NotPolynomial : public Error {
public:
    using Error::Error;
};

class DegeneratePolygon : public Error {
public:
    using Error::Error;
};

class InvalidRange : public Error {
public:
    using Error::Error;
};

class UnknownSuite : public Error {
public:
    using Error::Error;
};

}  // namespace pinchuk

#endif  // PINCHUK_ERRORS_HPP
