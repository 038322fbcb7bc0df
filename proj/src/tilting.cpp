#include "gto/tilting.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace gto {
namespace {

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

void require_nonpositive(const IntVector& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0) {
      throw Error(ErrorCode::PositiveParameter,
                  "p_" + std::to_string(i) + " = " + std::to_string(p[i]) +
                      " is positive",
                  {as_int(i)});
    }
  }
}

bool componentwise_leq(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

ExponentVector row_vector(const ExponentMatrix& m, std::size_t r) {
  auto row = m.row(r);
  return {row.begin(), row.end()};
}

bool is_zero(const ExponentVector& v) {
  return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

}  // namespace

bool lattice_validate(const ExponentMatrix& m, const ExponentVector& v) {
  const std::size_t n = m.size();
  if (v.size() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "exponent vector has length " + std::to_string(v.size()) +
                    ", expected " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (v[j] > checked_add(v[i], m(i, j))) return false;
  return true;
}

ExponentVector truncate_shift(const ExponentVector& v, std::int64_t j) {
  ExponentVector out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k)
    out[k] = std::max<std::int64_t>(checked_sub(v[k], j), 0);
  return out;
}

int hom_dim(const ExponentMatrix& m, const ExponentVector& v,
            const ExponentVector& w, std::int64_t t) {
  if (!lattice_validate(m, v) || !lattice_validate(m, w)) {
    throw Error(ErrorCode::InvalidLattice,
                "exponent vector does not define an A-lattice");
  }
  std::int64_t lowest = checked_sub(w[0], v[0]);
  for (std::size_t k = 1; k < v.size(); ++k)
    lowest = std::max(lowest, checked_sub(w[k], v[k]));
  return t >= lowest ? 1 : 0;
}

std::vector<Summand> tilting_summands(const ExponentMatrix& m,
                                      const GorensteinData& g) {
  if (!m.basic() || !m.n_graded()) {
    throw Error(ErrorCode::InvalidOrder,
                "tilting summands need a basic N-graded order");
  }
  require_nonpositive(g.p);
  const std::size_t n = m.size();
  std::vector<Summand> out;
  std::map<ExponentVector, std::size_t> seen;
  for (std::size_t i = 0; i < n; ++i) {
    const ExponentVector row = row_vector(m, g.nu(i));
    for (std::int64_t j = 1; j <= -g.p[i]; ++j) {
      ExponentVector v = truncate_shift(row, j);
      if (is_zero(v) || seen.contains(v)) {
        // Distinct labels with j <= -p give distinct nonzero modules.
        throw std::logic_error("summand (" + std::to_string(i) + "," +
                               std::to_string(j) + ") is not new");
      }
      seen.emplace(v, out.size());
      out.push_back({std::move(v), {{i, j}}});
    }
  }
  Summand zero{ExponentVector(n, 0), {}};
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t j = checked_sub(1, g.p[i]);
    if (!is_zero(truncate_shift(row_vector(m, g.nu(i)), j))) {
      throw std::logic_error("truncation past 1 - p is not zero");
    }
    zero.labels.push_back({i, j});
  }
  out.push_back(std::move(zero));
  return out;
}

TiltingPoset TiltingPoset::from_summands(std::vector<Summand> summands) {
  std::map<ExponentVector, std::vector<SummandLabel>> merged;
  for (auto& s : summands) {
    auto& labels = merged[std::move(s.v)];
    labels.insert(labels.end(), s.labels.begin(), s.labels.end());
  }
  TiltingPoset poset;
  for (auto& [v, labels] : merged) {
    poset.elements_.push_back(v);
    poset.labels_.push_back(std::move(labels));
  }
  return poset;
}

TiltingPoset TiltingPoset::from_vectors(std::vector<ExponentVector> vectors) {
  std::vector<Summand> summands;
  summands.reserve(vectors.size());
  for (auto& v : vectors) summands.push_back({std::move(v), {}});
  return from_summands(std::move(summands));
}

bool TiltingPoset::leq(std::size_t a, std::size_t b) const {
  return componentwise_leq(elements_[a], elements_[b]);
}

std::optional<std::size_t> TiltingPoset::minimum() const {
  for (std::size_t a = 0; a < size(); ++a) {
    bool below_all = true;
    for (std::size_t b = 0; b < size() && below_all; ++b)
      below_all = leq(a, b);
    if (below_all) return a;
  }
  return std::nullopt;
}

std::optional<std::size_t> TiltingPoset::index_of(
    const ExponentVector& v) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), v);
  if (it == elements_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

TiltingPoset build_VA(const ExponentMatrix& m, const GorensteinData& g) {
  TiltingPoset poset = TiltingPoset::from_summands(tilting_summands(m, g));
  const auto minimum = poset.minimum();
  if (!minimum || !is_zero(poset.elements()[*minimum])) {
    throw std::logic_error("V_A does not have 0 as its minimum");
  }
  return poset;
}

Quiver Quiver::canonical() const {
  std::vector<std::size_t> order(vertices.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return vertices[a] < vertices[b];
  });
  std::vector<std::size_t> new_index(vertices.size());
  Quiver out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    new_index[order[k]] = k;
    out.vertices.push_back(vertices[order[k]]);
  }
  for (auto [a, b] : arrows) out.arrows.emplace_back(new_index[a], new_index[b]);
  std::sort(out.arrows.begin(), out.arrows.end());
  return out;
}

Quiver hasse_quiver(const TiltingPoset& poset) {
  const std::size_t size = poset.size();
  Quiver q;
  q.vertices = poset.elements();
  auto less = [&](std::size_t a, std::size_t b) {
    return a != b && poset.leq(a, b);
  };
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = 0; y < size; ++y) {
      if (!less(y, x)) continue;
      bool cover = true;
      for (std::size_t z = 0; z < size && cover; ++z)
        cover = !(less(y, z) && less(z, x));
      if (cover) q.arrows.emplace_back(x, y);
    }
  }
  std::sort(q.arrows.begin(), q.arrows.end());
  return q;
}

bool same_labeled_quiver(const Quiver& a, const Quiver& b) {
  const Quiver ca = a.canonical();
  const Quiver cb = b.canonical();
  return ca.vertices == cb.vertices && ca.arrows == cb.arrows;
}

std::int64_t grothendieck_rank(const GorensteinData& g) {
  require_nonpositive(g.p);
  std::int64_t rank = 1;
  for (auto v : g.p) rank = checked_sub(rank, v);
  return rank;
}

std::vector<BlockIndex> block_indices(const GorensteinData& g) {
  require_nonpositive(g.p);
  std::vector<BlockIndex> out;
  for (std::size_t s = 0; s < g.p.size(); ++s)
    for (std::int64_t i = 1; i <= 1 - g.p[s]; ++i) out.push_back({s, i});
  return out;
}

int endo_block_dim(const ExponentMatrix& m, const GorensteinData& g,
                   BlockIndex from, BlockIndex to) {
  require_nonpositive(g.p);
  const std::size_t n = m.size();
  for (const BlockIndex& b : {from, to}) {
    if (b.s >= n || b.i < 1 || b.i > 1 - g.p[b.s]) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "(" + std::to_string(b.s) + "," + std::to_string(b.i) +
                      ") is not a summand index",
                  {as_int(b.s), b.i});
    }
  }
  const bool from_zero = from.i == 1 - g.p[from.s];
  const bool to_zero = to.i == 1 - g.p[to.s];
  int dim = 0;
  if (to_zero) {
    dim = 1;
  } else if (from_zero) {
    dim = 0;
  } else {
    const std::int64_t degree = checked_sub(to.i, from.i);
    dim = degree >= m(g.nu(to.s), g.nu(from.s)) ? 1 : 0;
  }

  const ExponentVector v = truncate_shift(row_vector(m, g.nu(from.s)), from.i);
  const ExponentVector w = truncate_shift(row_vector(m, g.nu(to.s)), to.i);
  if (hom_dim(m, v, w, 0) != dim) {
    throw std::logic_error("block dimension disagrees with lattice Hom");
  }
  return dim;
}

CyclicHasse cyclic_hasse_oracle(std::span<const std::int64_t> weights) {
  const CyclicOrder order = cyclic_order(weights);
  const std::size_t n = weights.size();
  require_nonpositive(order.g.p);

  auto prev = [n](std::size_t k) { return (k + n - 1) % n; };
  CyclicHasse out;
  out.line_lengths.resize(n);
  for (std::size_t r = 0; r < n; ++r) out.line_lengths[r] = -order.g.p[prev(r)];

  // vertex_of[r][j-1] indexes (r, j); the zero vector comes last.
  std::vector<std::vector<std::size_t>> vertex_of(n);
  for (std::size_t r = 0; r < n; ++r) {
    const ExponentVector row = row_vector(order.m, r);
    for (std::int64_t j = 1; j <= out.line_lengths[r]; ++j) {
      vertex_of[r].push_back(out.quiver.vertices.size());
      out.quiver.vertices.push_back(truncate_shift(row, j));
    }
  }
  const std::size_t zero = out.quiver.vertices.size();
  out.quiver.vertices.push_back(ExponentVector(n, 0));

  auto add = [&](std::size_t a, std::size_t b, ArrowRule rule) {
    out.quiver.arrows.emplace_back(a, b);
    out.rules.push_back(rule);
  };
  for (std::size_t r = 0; r < n; ++r) {
    const auto& line = vertex_of[r];
    for (std::size_t k = 0; k + 1 < line.size(); ++k)
      add(line[k], line[k + 1], ArrowRule::Along);
  }
  std::vector<bool> crosses(zero, false);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t source_row = (k + 1) % n;
    const std::int64_t last = checked_sub(-order.g.p[prev(k)], weights[k]);
    for (std::int64_t j = 1; j <= last; ++j) {
      const std::int64_t target_j = checked_add(j, weights[k]);
      const std::size_t source = vertex_of[source_row][static_cast<std::size_t>(j - 1)];
      crosses[source] = true;
      add(source, vertex_of[k][static_cast<std::size_t>(target_j - 1)], ArrowRule::Across);
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    if (!vertex_of[r].empty() && !crosses[vertex_of[r].back()]) {
      add(vertex_of[r].back(), zero, ArrowRule::ToZero);
    }
  }
  return out;
}

}  // namespace gto
