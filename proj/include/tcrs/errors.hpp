#pragma once

#include <stdexcept>
#include <string>

namespace tcrs {

// Base of every error raised for bad input. Internal consistency failures
// use InternalError instead so callers can tell them apart.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class DuplicateArc : public Error {
public:
    using Error::Error;
};

class SelfLoop : public Error {
public:
    using Error::Error;
};

class UnknownVertex : public Error {
public:
    using Error::Error;
};

class DuplicateVertex : public Error {
public:
    using Error::Error;
};

class CyclicError : public Error {
public:
    using Error::Error;
};

class VertexMismatch : public Error {
public:
    using Error::Error;
};

class NotConnected : public Error {
public:
    using Error::Error;
};

class NotStronglyConnected : public Error {
public:
    using Error::Error;
};

class BadTree : public Error {
public:
    using Error::Error;
};

class InvalidTime : public Error {
public:
    using Error::Error;
};

// Raised when an input exceeds what an exact or exhaustive routine supports.
class TooLarge : public Error {
public:
    using Error::Error;
};

class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace tcrs
