#pragma once

#include <stdexcept>
#include <string>

namespace bimono {

// Exit-code classes used by the CLI: usage/precondition -> 2,
// law/validation failure -> 1, internal assertion -> 3.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Hypotheses hold only above some n0; at small n a proof-following
// construction may legitimately fail. Distinguished from bugs.
struct BelowRegimeError : std::runtime_error {
    explicit BelowRegimeError(const std::string& msg) : std::runtime_error(msg) {}
};

// A guarantee the proof makes was violated: implementation bug.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace bimono
