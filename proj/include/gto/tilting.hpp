#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gto/exponent.hpp"

namespace gto {

/// L(v) is closed under the order: v(j) <= v(i) + m(i,j) for all i, j.
bool lattice_validate(const ExponentMatrix& m, const ExponentVector& v);

/// Exponent vector of L(v)(j)_{>=0}: componentwise max(v - j, 0).
ExponentVector truncate_shift(const ExponentVector& v, std::int64_t j);

/// Dimension of the degree-t part of Hom(L(v), L(w)), which is x^l R with
/// l = max_i (w(i) - v(i)). Throws InvalidLattice for a non-lattice input.
int hom_dim(const ExponentMatrix& m, const ExponentVector& v,
            const ExponentVector& w, std::int64_t t);

/// Summand e_{nu(i)} A(j)_{>=0}, i.e. truncate_shift(row nu(i), j).
struct SummandLabel {
  std::size_t i = 0;
  std::int64_t j = 0;

  friend bool operator==(const SummandLabel&, const SummandLabel&) = default;
};

struct Summand {
  ExponentVector v;
  std::vector<SummandLabel> labels;
};

/// Distinct summands of the tilting object: for each i and 1 <= j <= -p_i a
/// nonzero vector, plus the zero vector, which every (i, 1 - p_i) reaches.
/// Nonzero summands come first in (i, j) order; zero is last.
///
/// Requires a basic N-graded order (InvalidOrder) with every p_i <= 0
/// (PositiveParameter, witness i).
std::vector<Summand> tilting_summands(const ExponentMatrix& m,
                                      const GorensteinData& g);

/// Finite set of exponent vectors under the componentwise order, sorted
/// lexicographically.
class TiltingPoset {
 public:
  /// Deduplicates; labels are merged for equal vectors.
  static TiltingPoset from_summands(std::vector<Summand> summands);
  static TiltingPoset from_vectors(std::vector<ExponentVector> vectors);

  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<ExponentVector>& elements() const noexcept {
    return elements_;
  }
  const std::vector<std::vector<SummandLabel>>& labels() const noexcept {
    return labels_;
  }
  /// elements[a] <= elements[b] componentwise.
  bool leq(std::size_t a, std::size_t b) const;
  /// Index of the unique minimum, if there is one.
  std::optional<std::size_t> minimum() const;
  std::optional<std::size_t> index_of(const ExponentVector& v) const;

 private:
  std::vector<ExponentVector> elements_;
  std::vector<std::vector<SummandLabel>> labels_;
};

/// The poset V_A of exponent vectors of the truncations e_i A(j)_{>=0}.
TiltingPoset build_VA(const ExponentMatrix& m, const GorensteinData& g);

/// Vertices are exponent vectors; an arrow (a, b) indexes into vertices.
struct Quiver {
  std::vector<ExponentVector> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;

  /// Vertices sorted lexicographically, arrows sorted by (source, target).
  Quiver canonical() const;
};

/// Cover relations drawn from the larger element to the smaller one, so the
/// minimum is a sink. This is the Hasse quiver of the opposite poset.
Quiver hasse_quiver(const TiltingPoset& poset);

/// Same vertex labels and the same arrows between them.
bool same_labeled_quiver(const Quiver& a, const Quiver& b);

/// 1 - sum(p). Throws PositiveParameter if some p_i > 0.
std::int64_t grothendieck_rank(const GorensteinData& g);

/// Index (s, i) of the summand e_{nu(s)} A(i)_{>=0}.
struct BlockIndex {
  std::size_t s = 0;
  std::int64_t i = 0;

  friend bool operator==(const BlockIndex&, const BlockIndex&) = default;
};

/// All (s, i) with 1 <= i <= 1 - p_s. The last one per s is the zero
/// truncation.
std::vector<BlockIndex> block_indices(const GorensteinData& g);

/// Dimension of the degree-0 Hom between the summands at `from` and `to`:
///   both with i <= -p: [j - i >= m(nu t, nu s)],
///   from the zero truncation to a nonzero one: 0,
///   into a zero truncation: 1.
/// The last case uses e_u Q e_w = k[x, x^-1], whose graded pieces are
/// one-dimensional; this is specific to tiled orders.
/// Cross-checked against hom_dim of the truncated lattices.
int endo_block_dim(const ExponentMatrix& m, const GorensteinData& g,
                   BlockIndex from, BlockIndex to);

enum class ArrowRule { Along, Across, ToZero };

/// Hasse quiver of V_A for a cyclic order written down line by line:
/// line r holds the truncations of row r at j = 1 .. -p_{r-1}.
struct CyclicHasse {
  Quiver quiver;
  /// rules[k] classifies quiver.arrows[k].
  std::vector<ArrowRule> rules;
  /// line_lengths[r] = number of nonzero vertices taken from row r.
  std::vector<std::int64_t> line_lengths;
};

/// Arrows, with indices mod n and w = weights:
///   along:   (r, j) -> (r, j + 1),
///   across:  (k + 1, j) -> (k, j + w_k) for 1 <= j <= -p_{k-1} - w_k,
///   to zero: the last vertex of each line -> 0, unless that vertex already
///            has an across arrow (this happens exactly when w_{r-2} = 0;
///            its across arrow then lands on the last vertex of line r-1).
/// Throws PositiveParameter if some p_i > 0.
CyclicHasse cyclic_hasse_oracle(std::span<const std::int64_t> weights);

}  // namespace gto
