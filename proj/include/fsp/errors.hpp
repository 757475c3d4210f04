// errors.hpp: exception types thrown by the core library
#pragma once
#include <stdexcept>
#include <string>

namespace fsp {

/// Invalid argument: out-of-range probability, bad vertex index, size mismatch.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Quantity undefined for the given input (e.g. monochrome fraction of an edgeless graph).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Input exceeds what an exact routine can enumerate.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// File could not be opened or written; message carries the path.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fsp
