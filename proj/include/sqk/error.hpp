#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sqk {

enum class ErrorKind {
  // algebra_core
  NotLatinSquare,
  NotAssociative,
  NoIdentity,
  IndexOutOfRange,
  NotASubgroup,
  // quandle_core
  AxiomQ1Violated,
  AxiomQ2Violated,
  AxiomQ3Violated,
  // symmetric_core
  NotInvolution,
  NotEquivariant,
  NotDualCompatible,
  // shared
  SizeBoundExceeded,
  // coset_construction / decomposition
  PresentationInvalid,
  NoInversionClosedTransversal,
  InternalVerificationFailed,
  // catalog
  OddOrder,
  GoodInvolutionCheckFailed,
  ParameterOutOfRange,
  // io
  Malformed,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotLatinSquare: return "NotLatinSquare";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::AxiomQ1Violated: return "AxiomQ1Violated";
    case ErrorKind::AxiomQ2Violated: return "AxiomQ2Violated";
    case ErrorKind::AxiomQ3Violated: return "AxiomQ3Violated";
    case ErrorKind::NotInvolution: return "NotInvolution";
    case ErrorKind::NotEquivariant: return "NotEquivariant";
    case ErrorKind::NotDualCompatible: return "NotDualCompatible";
    case ErrorKind::SizeBoundExceeded: return "SizeBoundExceeded";
    case ErrorKind::PresentationInvalid: return "PresentationInvalid";
    case ErrorKind::NoInversionClosedTransversal: return "NoInversionClosedTransversal";
    case ErrorKind::InternalVerificationFailed: return "InternalVerificationFailed";
    case ErrorKind::OddOrder: return "OddOrder";
    case ErrorKind::GoodInvolutionCheckFailed: return "GoodInvolutionCheckFailed";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::Malformed: return "Malformed";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this type. `witness()`
/// carries the first counterexample (element indices, a column, a triple...)
/// when the failing check has one.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::vector<int> witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<int> witness_;
};

}  // namespace sqk
