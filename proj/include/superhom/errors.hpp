#pragma once

#include <stdexcept>
#include <string>

namespace superhom {

/// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class MalformedScalarError : public Error {
public:
    using Error::Error;
};

class UnboundParameterError : public Error {
public:
    using Error::Error;
};

class SpaceMismatchError : public Error {
public:
    using Error::Error;
};

class SymbolicRankError : public Error {
public:
    using Error::Error;
};

class GradingError : public Error {
public:
    using Error::Error;
};

class AdmissibilityError : public Error {
public:
    using Error::Error;
};

class DescentError : public Error {
public:
    using Error::Error;
};

class InvalidAssignmentError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class ResourceLimitError : public Error {
public:
    using Error::Error;
};

} // namespace superhom
