#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace amlt {

enum class ErrorKind {
  NegativeCoefficient,
  OrderExceedsTruncation,
  NonPositiveLambda,
  DivergentAt,
  DerivativeUnavailable,
  CertificateInsufficient,
  ToleranceUnreachable,
  OffsetNotZero,
  IndexOutOfRange,
  SpecParse,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library. `index()` carries the offending
/// coefficient index for NegativeCoefficient, the line for SpecParse, and
/// is zero otherwise.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what, std::size_t index = 0)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), index_(index) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::size_t index() const noexcept { return index_; }

private:
  ErrorKind kind_;
  std::size_t index_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::NegativeCoefficient: return "NegativeCoefficient";
  case ErrorKind::OrderExceedsTruncation: return "OrderExceedsTruncation";
  case ErrorKind::NonPositiveLambda: return "NonPositiveLambda";
  case ErrorKind::DivergentAt: return "DivergentAt";
  case ErrorKind::DerivativeUnavailable: return "DerivativeUnavailable";
  case ErrorKind::CertificateInsufficient: return "CertificateInsufficient";
  case ErrorKind::ToleranceUnreachable: return "ToleranceUnreachable";
  case ErrorKind::OffsetNotZero: return "OffsetNotZero";
  case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
  case ErrorKind::SpecParse: return "SpecParse";
  }
  return "Unknown";
}

} // namespace amlt
