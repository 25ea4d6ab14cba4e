#pragma once

#include <stdexcept>
#include <string>

namespace cyclefactor {

// Caller supplied something outside an operation's domain. CLI exit status 2.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed graph text.
class GraphFormatError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// The digraph admits no cycle-factor, so the expectation is undefined.
class NoCycleFactorError : public PreconditionError {
public:
    NoCycleFactorError() : PreconditionError("no cycle-factor") {}
};

// Two independent computations disagreed. Should never fire; CLI exit status 3.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace cyclefactor
