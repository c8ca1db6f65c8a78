#pragma once

#include <stdexcept>
#include <string>

namespace c2kit {

enum class Errc {
    MalformedInput,
    LoopEdge,
    DuplicateEdge,
    IndexOutOfRange,
    ArityMismatch,
    IncompleteEcPog,
    MixedOrientationColor,
    InconsistentUndirectedColor,
    ParityInfeasible,
    DegreeTooLarge,
    CountMismatch,
    InfeasibleInvariant,
    OddOrder,
    OddColorDegree,
    DegreeSumMismatch,
    OddDegreeInColor,
    TooLarge,
    DisconnectedBase,
    DegreeTooSmall,
    SignatureCollision,
};

const char* errc_name(Errc c);

/// Exception carrying a machine-checkable error code plus a human message.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace c2kit
