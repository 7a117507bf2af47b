#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace heawood {

enum class ErrorKind {
    InvalidSignature,
    ShapeError,
    NotInLattice,
    ReductionFailure,
    InfiniteQuotient,
    NotSimplicial,
    SliceError,
    IndexOutOfRange,
    NotAnAutomorphism,
    CapExceeded,
    UnsupportedDimension,
    InvalidWalk,
    Validation,
    Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it onto an exit status without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace heawood
