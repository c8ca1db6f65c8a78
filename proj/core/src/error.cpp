#include "c2kit/error.hpp"

namespace c2kit {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::MalformedInput: return "MalformedInput";
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::IncompleteEcPog: return "IncompleteEcPog";
    case Errc::MixedOrientationColor: return "MixedOrientationColor";
    case Errc::InconsistentUndirectedColor: return "InconsistentUndirectedColor";
    case Errc::ParityInfeasible: return "ParityInfeasible";
    case Errc::DegreeTooLarge: return "DegreeTooLarge";
    case Errc::CountMismatch: return "CountMismatch";
    case Errc::InfeasibleInvariant: return "InfeasibleInvariant";
    case Errc::OddOrder: return "OddOrder";
    case Errc::OddColorDegree: return "OddColorDegree";
    case Errc::DegreeSumMismatch: return "DegreeSumMismatch";
    case Errc::OddDegreeInColor: return "OddDegreeInColor";
    case Errc::TooLarge: return "TooLarge";
    case Errc::DisconnectedBase: return "DisconnectedBase";
    case Errc::DegreeTooSmall: return "DegreeTooSmall";
    case Errc::SignatureCollision: return "SignatureCollision";
    }
    return "UnknownError";
}

} // namespace c2kit
