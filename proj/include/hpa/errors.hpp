#pragma once

#include <stdexcept>
#include <string>

namespace hpa {

// Shapes or fields that do not fit together.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class FieldMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed input: unparsable scalars, invalid group tables, bad files.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An operation was called on data that does not satisfy a required
// hypothesis. `hypothesis()` names it, usually an equation id such as "2.1.1".
class PreconditionError : public std::runtime_error {
public:
    PreconditionError(std::string hypothesis, const std::string& what)
        : std::runtime_error(what), hypothesis_(std::move(hypothesis)) {}
    const std::string& hypothesis() const noexcept { return hypothesis_; }

private:
    std::string hypothesis_;
};

// A computed result contradicts a proven identity. Always a bug.
class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace hpa
