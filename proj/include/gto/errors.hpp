#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gto {

enum class ErrorCode {
  NonSquare,
  NonzeroDiagonal,
  DimensionMismatch,
  Overflow,
  InvalidOrder,
  NegativeWeight,
  ZeroWeights,
  NotBijective,
  NotGorenstein,
  AmbiguousNakayama,
  NonConstantOrbitAverage,
  IndexOutOfRange,
  TooLarge,
  NegativeCycle,
  NegativeDiagonal,
  NotMinCycle,
  NotIntegralSum,
  EquivarianceViolation,
  OrbitAverageMismatch,
  NotFloorType,
  PeriodicityViolation,
  InvalidLattice,
  PositiveParameter,
  NotCyclic,
  OracleMismatch,
  MalformedInput,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Domain error carrying a stable code and an integer witness (indices,
/// cycle, or violating triple depending on the code).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<std::int64_t> witness = {});

  ErrorCode code() const noexcept { return code_; }
  std::span<const std::int64_t> witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<std::int64_t> witness_;
};

}  // namespace gto
