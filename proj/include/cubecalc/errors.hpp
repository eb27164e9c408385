#pragma once

#include <stdexcept>
#include <string>

namespace cubecalc {

// Base class for all cubecalc errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text (DIMACS, polynomial documents, rationals).
class ParseError : public Error {
public:
    using Error::Error;
};

// A stated operation precondition does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A configured resource limit (term cap, factor cap, ...) was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

} // namespace cubecalc
