#pragma once

#include <stdexcept>
#include <string>

namespace chordatlas {

enum class ErrorCode {
    DuplicatePoint = 1,
    GapInSupport,
    ReversedPair,
    IntervalOutOfRange,
    NotConnected,
    SizeOne,
    NotInvolution,
    RootNotFixed,
    NotTransitive,
    CornerOutOfRange,
    NotBridgeless,
    NotPlanar,
    NotIndecomposable,
    BudgetExceeded,
    TruncationTooTight,
    BadMultiset,
    UnknownSuite,
    UnknownFormat,
    Parse,
    Internal,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, std::string(error_name(code)) + ": " + what);
}

} // namespace chordatlas
