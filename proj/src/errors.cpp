#include "gto/errors.hpp"

#include <utility>

namespace gto {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::ZeroWeights: return "ZeroWeights";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::NotGorenstein: return "NotGorenstein";
    case ErrorCode::AmbiguousNakayama: return "AmbiguousNakayama";
    case ErrorCode::NonConstantOrbitAverage: return "NonConstantOrbitAverage";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NegativeCycle: return "NegativeCycle";
    case ErrorCode::NegativeDiagonal: return "NegativeDiagonal";
    case ErrorCode::NotMinCycle: return "NotMinCycle";
    case ErrorCode::NotIntegralSum: return "NotIntegralSum";
    case ErrorCode::EquivarianceViolation: return "EquivarianceViolation";
    case ErrorCode::OrbitAverageMismatch: return "OrbitAverageMismatch";
    case ErrorCode::NotFloorType: return "NotFloorType";
    case ErrorCode::PeriodicityViolation: return "PeriodicityViolation";
    case ErrorCode::InvalidLattice: return "InvalidLattice";
    case ErrorCode::PositiveParameter: return "PositiveParameter";
    case ErrorCode::NotCyclic: return "NotCyclic";
    case ErrorCode::OracleMismatch: return "OracleMismatch";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::vector<std::int64_t> witness)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      witness_(std::move(witness)) {}

}  // namespace gto
