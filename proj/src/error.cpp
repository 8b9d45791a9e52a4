#include "graft_moments/error.hpp"

namespace graft_moments {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::NegativeWeight: return "NegativeWeight";
    case ErrorKind::ProvenanceMismatch: return "ProvenanceMismatch";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::DuplicateReceptor: return "DuplicateReceptor";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::InvalidExtendedCycle: return "InvalidExtendedCycle";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace graft_moments
