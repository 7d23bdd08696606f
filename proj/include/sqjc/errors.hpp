// errors.hpp -- exception taxonomy used across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace sqjc {

// Retained basis too small: certified tail mass exceeds the configured tolerance.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An iterative construction failed its post-hoc consistency check.
class NonConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input lies on a removable singularity or outside the meaningful domain.
class DegenerateInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Matrix handed to a Hermitian-only routine fails the Hermiticity pre-check.
class NotHermitian : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Phase-space grid does not capture enough quasi-probability mass.
class GridTooSmall : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace sqjc
