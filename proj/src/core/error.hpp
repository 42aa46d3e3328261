#pragma once

#include <stdexcept>
#include <string>

namespace cs {

enum class ErrorCode {
    invalid_argument = 1,
    parse_error = 2,
    unsupported_parameter = 3,
    precondition_violated = 4,
    generation_failed = 5,
    malformed_operand = 6,
    too_large = 7,
    simulation_fault = 8,
    timeout_fault = 9,
    no_spanning_tree = 10,
    aggregation_impossible = 11,
    internal = 12,
};

// Single exception type carrying a stable code so the C boundary can map it.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
    throw Error(code, msg);
}

inline void require(bool ok, ErrorCode code, const std::string& msg) {
    if (!ok) fail(code, msg);
}

} // namespace cs
