#include "medgraph/error.hpp"

namespace medgraph {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::NotEquilateral: return "NotEquilateral";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ProfileSupportOutOfRange: return "ProfileSupportOutOfRange";
    case ErrorKind::InvalidProfile: return "InvalidProfile";
    case ErrorKind::InvalidString: return "InvalidString";
    case ErrorKind::AdjacentPair: return "AdjacentPair";
    case ErrorKind::NotPeakless: return "NotPeakless";
    case ErrorKind::EmptyInterior: return "EmptyInterior";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InteriorTooLarge: return "InteriorTooLarge";
    case ErrorKind::WrongDistance: return "WrongDistance";
    case ErrorKind::LabelArity: return "LabelArity";
    case ErrorKind::EmbeddingUnverified: return "EmbeddingUnverified";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::NotGated: return "NotGated";
    case ErrorKind::NotInducedIso: return "NotInducedIso";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::HoleDetected: return "HoleDetected";
    case ErrorKind::DisconnectedHexagons: return "DisconnectedHexagons";
    case ErrorKind::ConstraintsUnsatisfiable: return "ConstraintsUnsatisfiable";
    case ErrorKind::UnknownClass: return "UnknownClass";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    }
    return "Unknown";
}

} // namespace medgraph
