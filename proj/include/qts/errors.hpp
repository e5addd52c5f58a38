#pragma once

#include <stdexcept>
#include <string>

namespace qts {

class ShapeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class EtaSymmetryViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SizeCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed files, unknown names, missing tensors.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qts
