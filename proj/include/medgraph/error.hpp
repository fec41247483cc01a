#pragma once

#include <stdexcept>
#include <string>

namespace medgraph {

enum class ErrorKind {
    Disconnected,
    LoopEdge,
    VertexOutOfRange,
    NotEquilateral,
    ParseError,
    ProfileSupportOutOfRange,
    InvalidProfile,
    InvalidString,
    AdjacentPair,
    NotPeakless,
    EmptyInterior,
    BudgetExceeded,
    InteriorTooLarge,
    WrongDistance,
    LabelArity,
    EmbeddingUnverified,
    ParameterOutOfRange,
    NotGated,
    NotInducedIso,
    NotPrime,
    HoleDetected,
    DisconnectedHexagons,
    ConstraintsUnsatisfiable,
    UnknownClass,
    UnknownSuite,
    UnknownFamily,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace medgraph
