#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>

#include "gto/types.hpp"

namespace gto {

/// Diagnostics for a candidate exponent matrix.
///
/// `first_violation` is a path (i, k, j) with m(i,k) + m(k,j) < m(i,j),
/// the first one in lexicographic order; it is present iff `triangle_ok` is
/// false. `non_basic_pair` is the first i < j with m(i,j) + m(j,i) <= 0.
struct OrderReport {
  bool triangle_ok = true;
  bool basic = true;
  bool n_graded = true;
  std::optional<std::array<std::size_t, 3>> first_violation;
  std::optional<std::pair<std::size_t, std::size_t>> non_basic_pair;

  bool fully_valid() const { return triangle_ok && basic && n_graded; }
};

/// Throws NonSquare / NonzeroDiagonal on structural problems; everything
/// else is reported.
OrderReport validate_order(const IntMatrix& m);

/// Exponent matrix of a tiled order: zero diagonal and the triangle
/// inequality m(i,k) + m(k,j) >= m(i,j). Immutable once built.
class ExponentMatrix {
 public:
  /// Throws NonSquare, NonzeroDiagonal, or InvalidOrder (witness = path).
  static ExponentMatrix make(IntMatrix m);
  static ExponentMatrix make(const std::vector<IntVector>& rows) {
    return make(IntMatrix::from_rows(rows));
  }

  std::size_t size() const noexcept { return m_.size(); }
  std::int64_t operator()(std::size_t i, std::size_t j) const {
    return m_(i, j);
  }
  std::span<const std::int64_t> row(std::size_t i) const { return m_.row(i); }
  const IntMatrix& matrix() const noexcept { return m_; }

  bool basic() const;
  bool n_graded() const;

  friend bool operator==(const ExponentMatrix&,
                         const ExponentMatrix&) = default;

 private:
  explicit ExponentMatrix(IntMatrix m) : m_(std::move(m)) {}
  IntMatrix m_;
};

struct CyclicOrder {
  ExponentMatrix m;
  GorensteinData g;
};

/// The cyclic Gorenstein tiled order on non-negative weights w:
/// m(i,j) = w_i + ... + w_{j-1} read cyclically, nu(i) = i+1 mod n,
/// p_i = 1 + w_i - sum(w).
CyclicOrder cyclic_order(std::span<const std::int64_t> weights);

/// m'(i,j) = m(i,j) + s(i) - s(j). This is a graded Morita equivalence.
ExponentMatrix morita_shift(const ExponentMatrix& m, const ShiftVector& s);

}  // namespace gto
