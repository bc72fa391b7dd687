#include "wdl/error.hpp"

namespace wdl {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::DuplicateDeclaration: return "DuplicateDeclaration";
    case ErrorKind::UnknownElementInCover: return "UnknownElementInCover";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::NotAPoset: return "NotAPoset";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotBounded: return "NotBounded";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::NotBoolean: return "NotBoolean";
    case ErrorKind::MissingUnary: return "MissingUnary";
    case ErrorKind::OrtholawViolation: return "OrtholawViolation";
    case ErrorKind::EmptyGenerator: return "EmptyGenerator";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::NotAFilter: return "NotAFilter";
    case ErrorKind::NotInSkeleton: return "NotInSkeleton";
    case ErrorKind::NotASkeletonFilter: return "NotASkeletonFilter";
    case ErrorKind::NotSFilter: return "NotSFilter";
    case ErrorKind::UniverseMismatch: return "UniverseMismatch";
    case ErrorKind::NotProper: return "NotProper";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::MalformedPartition: return "MalformedPartition";
    case ErrorKind::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorKind::NoPrimaryExtension: return "NoPrimaryExtension";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

namespace {

std::string describe_violation(const std::string& axiom,
                               const std::vector<std::string>& witness) {
  std::string msg = "axiom (" + axiom + ") fails at";
  for (const auto& w : witness) msg += " " + w;
  return msg;
}

}  // namespace

AxiomViolation::AxiomViolation(std::string axiom, std::vector<std::string> witness)
    : Error(ErrorKind::AxiomViolation, describe_violation(axiom, witness)),
      axiom_(std::move(axiom)),
      witness_(std::move(witness)) {}

SyntaxError::SyntaxError(std::size_t line, const std::string& message)
    : Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ": " + message),
      line_(line) {}

}  // namespace wdl
