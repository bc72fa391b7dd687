#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wdl {

enum class ErrorKind {
  SyntaxError,
  DuplicateDeclaration,
  UnknownElementInCover,
  InvalidSpec,
  NotAPoset,
  NotALattice,
  NotBounded,
  SizeCapExceeded,
  UnknownElement,
  AxiomViolation,
  NotBoolean,
  MissingUnary,
  OrtholawViolation,
  EmptyGenerator,
  BaseMismatch,
  NotAFilter,
  NotInSkeleton,
  NotASkeletonFilter,
  NotSFilter,
  UniverseMismatch,
  NotProper,
  NotDistributive,
  MalformedPartition,
  UnknownBuiltin,
  NoPrimaryExtension,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// First falsifying instance of a defining axiom, reported by name.
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::vector<std::string> witness);

  const std::string& axiom() const noexcept { return axiom_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::vector<std::string> witness_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, const std::string& message);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace wdl
