#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gto/arith.hpp"

namespace gto {

using IntVector = std::vector<std::int64_t>;
/// Exponent vector v of a rank-one lattice L(v).
using ExponentVector = IntVector;
/// Shift s acting by (sm)(i,j) = m(i,j) + s(i) - s(j).
using ShiftVector = IntVector;

/// Dense square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n, std::int64_t fill = 0)
      : n_(n), data_(n * n, fill) {}

  /// Throws NonSquare unless every row has exactly rows.size() entries.
  static IntMatrix from_rows(const std::vector<IntVector>& rows);

  std::size_t size() const noexcept { return n_; }

  std::int64_t operator()(std::size_t i, std::size_t j) const {
    return data_[i * n_ + j];
  }
  std::int64_t& operator()(std::size_t i, std::size_t j) {
    return data_[i * n_ + j];
  }

  std::span<const std::int64_t> row(std::size_t i) const {
    return {data_.data() + i * n_, n_};
  }

  std::vector<IntVector> rows() const;
  IntMatrix transposed() const;
  std::int64_t min_entry() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> data_;
};

/// A nu-orbit listed along nu from its smallest element:
/// members[k] = nu^k(members[0]).
struct Orbit {
  std::vector<std::size_t> members;

  std::size_t base() const { return members.front(); }
  std::size_t length() const { return members.size(); }
};

/// Bijection on 0..n-1.
class Permutation {
 public:
  Permutation() = default;

  /// Throws NotBijective if `images` is not a permutation of 0..n-1.
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);
  /// i -> i+1 mod n.
  static Permutation rotation(std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  std::span<const std::size_t> images() const noexcept { return images_; }

  Permutation inverse() const;
  /// nu^k for k >= 0.
  std::size_t power(std::size_t i, std::size_t k) const;
  /// Orbits ordered by base point; base point is the smallest index.
  std::vector<Orbit> orbits() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

/// Nakayama permutation, duality shifts ell_i, Gorenstein parameters
/// p_i = 1 - ell_i and their average.
struct GorensteinData {
  Permutation nu;
  IntVector ell;
  IntVector p;
  Rational p_av;
};

}  // namespace gto
