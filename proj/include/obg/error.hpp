#pragma once

#include <stdexcept>
#include <string>

namespace obg {

enum class ErrorKind {
    UnknownId,
    SameColor,
    EmptyInterval,
    MalformedSpec,
    BudgetExceeded,
    Inconclusive,
    NotApplicable,
    UnknownEntry,
    IoFailure,
    InvalidStructure,
};

/// Library-wide exception carrying a machine-checkable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace obg
