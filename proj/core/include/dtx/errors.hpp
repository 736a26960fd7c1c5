#pragma once

#include <stdexcept>
#include <string>

namespace dtx {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain (poles, gamma range, geometry).
class DomainError : public Error {
public:
    using Error::Error;
};

// Parameter outside an admissible interval, e.g. t beyond a chord.
class RangeError : public Error {
public:
    using Error::Error;
};

// Input does not satisfy a structural precondition (parity, support, tt-ness).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Grid or rule too coarse for the requested content.
class ResolutionError : public Error {
public:
    using Error::Error;
};

// Construction, convergence, singularity or consistency failure.
class NumericalError : public Error {
public:
    using Error::Error;
};

}  // namespace dtx
