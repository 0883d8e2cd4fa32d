#pragma once

#include <stdexcept>
#include <string>

namespace symtc {

enum class Errc {
    UnknownVertex,
    EmptyFacet,
    NotASubcomplex,
    UnknownElement,
    CycleDetected,
    SizeLimitExceeded,
    BadArity,
    UnorderedInput,
    BudgetExceeded,
    LevelMismatch,
    NotEquivariant,
    NotGInvariant,
    SourceMismatch,
    InvalidTable,
    InvalidChain,
    NotMonotone,
    DisconnectedPoset,
    MonotonicityViolation,
    ParseError,
    ValidationError,
};

inline const char* to_string(Errc code) {
    switch (code) {
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::EmptyFacet: return "EmptyFacet";
    case Errc::NotASubcomplex: return "NotASubcomplex";
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
    case Errc::BadArity: return "BadArity";
    case Errc::UnorderedInput: return "UnorderedInput";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::LevelMismatch: return "LevelMismatch";
    case Errc::NotEquivariant: return "NotEquivariant";
    case Errc::NotGInvariant: return "NotGInvariant";
    case Errc::SourceMismatch: return "SourceMismatch";
    case Errc::InvalidTable: return "InvalidTable";
    case Errc::InvalidChain: return "InvalidChain";
    case Errc::NotMonotone: return "NotMonotone";
    case Errc::DisconnectedPoset: return "DisconnectedPoset";
    case Errc::MonotonicityViolation: return "MonotonicityViolation";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Caps shared by constructions and searches.
struct Budget {
    std::size_t max_simplices = 200000;
    std::size_t max_nodes = 500000;
};

} // namespace symtc
