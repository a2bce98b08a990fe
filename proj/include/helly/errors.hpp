#pragma once

#include <stdexcept>
#include <string>

namespace helly {

// Thrown when an exhaustive search or enumeration would exceed its configured cap.
// Callers see an explicit failure instead of a silently truncated answer.
class LimitError : public std::runtime_error {
public:
    LimitError(const std::string& what_arg, long long requested, long long limit)
        : std::runtime_error(what_arg + " (requested " + std::to_string(requested) +
                             ", limit " + std::to_string(limit) + ")"),
          requested_(requested),
          limit_(limit) {}

    long long requested() const { return requested_; }
    long long limit() const { return limit_; }

private:
    long long requested_;
    long long limit_;
};

// Malformed input: bad JSON shape, unknown vertex labels, index out of range.
class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// A cover instance with an unhittable target, or an optimization with no feasible point.
class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// A stated precondition failed; the message carries the violating witness.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

}  // namespace helly
