#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gto/exponent.hpp"
#include "gto/gorenstein.hpp"

namespace gto {

/// A sequence (i_1, ..., i_k) read cyclically: i_k is followed by i_1.
using CycleSeq = std::vector<std::size_t>;

/// m(i_1,i_2) + ... + m(i_k,i_1).
std::int64_t cycle_sum(const IntMatrix& m, const CycleSeq& cycle);

/// (sm)(i,j) = m(i,j) + s(i) - s(j).
IntMatrix conjugate(const IntMatrix& m, const ShiftVector& s);

// ---------------------------------------------------------------------------
// Sigma-non-negativity
//
// m is Sigma-non-negative when every cyclic sum is >= 0. Equivalently
// m(i,i) >= 0 and sum over sigma(i) != i of m(i, sigma(i)) is >= 0 for every
// permutation sigma, and equivalently m has a conjugate with no negative
// entry. With zero diagonal the permutation test is the plain trace.
// ---------------------------------------------------------------------------

/// Enumerates all n! permutations. Throws TooLarge for n > 8.
bool is_sigma_nonneg_bruteforce(const IntMatrix& m);

/// Negative diagonal entries plus Bellman-Ford negative-cycle detection.
bool is_sigma_nonneg(const IntMatrix& m);

/// A cycle with negative sum (a singleton for a negative diagonal entry),
/// rotated to start at its smallest index; nullopt if none exists.
std::optional<CycleSeq> find_negative_cycle(const IntMatrix& m);

struct MinCycle {
  CycleSeq cycle;
  std::int64_t value = 0;
};

/// Minimum cyclic sum over multiplicity-free cycles of length >= 2, by
/// exhaustive enumeration. Ties go to the shortest cycle, then to the
/// lexicographically smallest one (cycles start at their smallest index).
/// Throws TooLarge for n > 10 and DimensionMismatch for n < 2.
MinCycle min_cycle(const IntMatrix& m);

/// Shortest-path potentials from a virtual source: s(j) <= s(i) + m(i,j)
/// for every edge, so the conjugate sm is non-negative.
/// Throws NegativeDiagonal (witness i) or NegativeCycle (witness cycle).
ShiftVector nonneg_conjugate(const IntMatrix& m);

/// For a minimum cycle (c_0, ..., c_{l-1}), the shift
/// s(c_k) = m(c_0,c_1) + ... + m(c_{k-1},c_k), zero off the cycle. The
/// conjugate vanishes along the cycle except on the closing edge, which
/// carries the minimum, and is non-negative on the cycle's indices.
/// Throws NotMinCycle if that fails to hold.
ShiftVector normalized_cycle_conjugate(const IntMatrix& m,
                                       const CycleSeq& cycle);

// ---------------------------------------------------------------------------
// Floor profiles
// ---------------------------------------------------------------------------

/// f(i) = floor((i+1)r/g) - floor(ir/g) for i in 0..n-1.
/// Requires g >= 1 and g | r*n (NotIntegralSum otherwise).
IntVector floor_profile(std::int64_t r, std::int64_t g, std::int64_t n);

/// All values lie in {c, c+1} for some c.
bool is_almost_constant(std::span<const std::int64_t> values);

// ---------------------------------------------------------------------------
// m-data
// ---------------------------------------------------------------------------

/// A triple (m, a, nu) with m(nu i, nu j) = m(i,j) - a(i) + a(j) and the
/// same average of a over every nu-orbit. Only validate_mdata builds one.
class MData {
 public:
  const IntMatrix& m() const noexcept { return m_; }
  const IntVector& a() const noexcept { return a_; }
  const Permutation& nu() const noexcept { return nu_; }
  const Rational& a_av() const noexcept { return a_av_; }
  const std::vector<Orbit>& orbits() const noexcept { return orbits_; }
  std::size_t size() const noexcept { return a_.size(); }

 private:
  friend MData validate_mdata(IntMatrix m, IntVector a, Permutation nu);
  MData() = default;

  IntMatrix m_;
  IntVector a_;
  Permutation nu_;
  Rational a_av_;
  std::vector<Orbit> orbits_;
};

/// Throws DimensionMismatch, EquivarianceViolation (witness i, j) or
/// OrbitAverageMismatch (witness: base points of the two orbits).
MData validate_mdata(IntMatrix m, IntVector a, Permutation nu);

/// (sm, sa, nu) with (sa)(i) = a(i) + s(i) - s(nu(i)). Same a_av.
MData conjugate_mdata(const MData& md, const ShiftVector& s);

/// a restricted to each orbit, read along nu from the orbit's base point,
/// equals floor_profile(r, g, orbit length) where a_av = r/g.
bool is_floor_type(const MData& md);

/// Like is_floor_type but each orbit may start its profile at any position.
bool is_floor_type_up_to_rotation(const MData& md);

/// s(x_k) = a(x_0) + ... + a(x_{k-1}) - floor(k * a_av) along each orbit
/// (x_0, x_1, ...); the conjugate by s is of floor type.
ShiftVector floor_type_conjugate(const MData& md);

/// g-fold sums of a floor-type m-data and their orbit-block minima.
struct FoldedMData {
  std::int64_t g = 1;
  IntMatrix m_prime;
  /// |orbits| x |orbits|; m_bar(x,y) = min of m_prime over I_x x I_y.
  IntMatrix m_bar;
  std::vector<std::size_t> orbit_of;
  /// Position of each index along its orbit.
  std::vector<std::size_t> position;
};

/// Throws NotFloorType or PeriodicityViolation (witness i, j).
FoldedMData fold_mdata(const MData& md);

/// Total shift s such that s*md is floor type (up to orbit rotation),
/// |(sa)(i) - a_av| < 1, and sm is non-negative. Throws NegativeCycle if md
/// is not Sigma-non-negative.
ShiftVector normalize_mdata(const MData& md);

// ---------------------------------------------------------------------------
// Tiled orders as m-data
// ---------------------------------------------------------------------------

/// (m^T, -p, nu), where m^T(i,j) = m(j,i) is the lowest degree of e_j A e_i.
MData mdata_of_order(const ExponentMatrix& m, const GorensteinData& g);

struct NormalizedOrder {
  ExponentMatrix order;
  /// Order-level shift: order == morita_shift(original, order_shift).
  ShiftVector order_shift;
  GorensteinData g;
};

/// Graded-Morita normalization: an N-graded equivalent order whose
/// Gorenstein parameters satisfy |p_i - p_av| < 1.
NormalizedOrder normalize_order(const ExponentMatrix& m);

}  // namespace gto
