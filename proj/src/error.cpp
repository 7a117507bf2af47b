#include "heawood/error.hpp"

namespace heawood {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidSignature: return "invalid-signature";
        case ErrorKind::ShapeError: return "shape-error";
        case ErrorKind::NotInLattice: return "not-in-lattice";
        case ErrorKind::ReductionFailure: return "reduction-failure";
        case ErrorKind::InfiniteQuotient: return "infinite-quotient";
        case ErrorKind::NotSimplicial: return "not-simplicial";
        case ErrorKind::SliceError: return "slice-error";
        case ErrorKind::IndexOutOfRange: return "index-out-of-range";
        case ErrorKind::NotAnAutomorphism: return "not-an-automorphism";
        case ErrorKind::CapExceeded: return "cap-exceeded";
        case ErrorKind::UnsupportedDimension: return "unsupported-dimension";
        case ErrorKind::InvalidWalk: return "invalid-walk";
        case ErrorKind::Validation: return "validation-error";
        case ErrorKind::Internal: return "internal-error";
    }
    return "unknown";
}

}  // namespace heawood
