#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "gto/conjugation.hpp"
#include "gto/exponent.hpp"
#include "gto/gorenstein.hpp"
#include "gto/tilting.hpp"

namespace support {

using gto::IntMatrix;
using gto::IntVector;

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240917);
  return engine;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline IntMatrix matrix(std::vector<IntVector> rows) {
  return IntMatrix::from_rows(rows);
}

// m(i,j) = w_i + ... + w_{j-1}, indices read cyclically; written out directly.
inline IntMatrix cyclic_matrix(const IntVector& w) {
  const std::size_t n = w.size();
  std::vector<IntVector> rows(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t acc = 0;
    for (std::size_t step = 1; step < n; ++step) {
      acc += w[(i + step - 1) % n];
      rows[i][(i + step) % n] = acc;
    }
  }
  return IntMatrix::from_rows(rows);
}

inline IntVector cyclic_parameters(const IntVector& w) {
  const std::int64_t total = std::accumulate(w.begin(), w.end(), std::int64_t{0});
  IntVector p(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) p[i] = 1 + w[i] - total;
  return p;
}

// Weights with every p_i <= 0, i.e. total - w_i >= 1. Needs n >= 2.
inline IntVector random_admissible_weights(std::size_t n, std::int64_t hi) {
  if (n < 2 || hi < 1) throw std::invalid_argument("no admissible weights");
  for (;;) {
    IntVector w(n);
    for (auto& x : w) x = uniform(0, hi);
    const std::int64_t total = std::accumulate(w.begin(), w.end(), std::int64_t{0});
    if (std::all_of(w.begin(), w.end(), [&](std::int64_t x) { return total - x >= 1; })) {
      return w;
    }
  }
}

inline IntVector random_vector(std::size_t n, std::int64_t lo, std::int64_t hi) {
  IntVector v(n);
  for (auto& x : v) x = uniform(lo, hi);
  return v;
}

inline IntMatrix random_zero_diagonal(std::size_t n, std::int64_t lo, std::int64_t hi) {
  std::vector<IntVector> rows(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) rows[i][j] = uniform(lo, hi);
  return IntMatrix::from_rows(rows);
}

inline gto::Permutation random_permutation(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  std::shuffle(images.begin(), images.end(), rng());
  return gto::Permutation(images);
}

// Potentials from all-pairs shortest paths: s(j) = min(0, min_i d(i,j)).
inline std::optional<IntVector> floyd_potentials(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<IntVector> d = m.rows();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (std::size_t i = 0; i < n; ++i)
    if (d[i][i] < 0) return std::nullopt;
  IntVector s(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) s[j] = std::min(s[j], d[i][j]);
  return s;
}

// Fills one pair per nu x nu orbit with seed() and extends by
//   m(nu i, nu j) = m(i,j) - a(i) + a(j).
// Consistent whenever a has the same average on every orbit.
template <class Seed>
IntMatrix extend_equivariant(const gto::Permutation& nu, const IntVector& a, Seed seed) {
  const std::size_t n = a.size();
  std::vector<IntVector> rows(n, IntVector(n, 0));
  std::vector<std::vector<bool>> done(n, std::vector<bool>(n, false));
  for (std::size_t i0 = 0; i0 < n; ++i0) {
    for (std::size_t j0 = 0; j0 < n; ++j0) {
      if (done[i0][j0]) continue;
      std::int64_t value = seed();
      std::size_t i = i0, j = j0;
      while (!done[i][j]) {
        done[i][j] = true;
        rows[i][j] = value;
        value = value - a[i] + a[j];
        i = nu(i);
        j = nu(j);
      }
    }
  }
  return IntMatrix::from_rows(rows);
}

// Random m-data: orbits from a random permutation, a with constant orbit
// average r/g, and m filled on one pair per nu x nu orbit and extended by
//   m(nu i, nu j) = m(i,j) - a(i) + a(j).
struct RandomMData {
  IntMatrix m;
  IntVector a;
  gto::Permutation nu;
};

inline RandomMData random_mdata(std::size_t n, std::int64_t lo, std::int64_t hi) {
  // orbit lengths must all be multiples of g; pick g from the gcd of lengths
  const gto::Permutation nu = random_permutation(n);
  const auto orbits = nu.orbits();
  std::int64_t gcd_len = 0;
  for (const auto& o : orbits) gcd_len = std::gcd(gcd_len, static_cast<std::int64_t>(o.length()));
  std::vector<std::int64_t> divisors;
  for (std::int64_t g = 1; g <= gcd_len; ++g)
    if (gcd_len % g == 0) divisors.push_back(g);
  const std::int64_t g = divisors[uniform(0, static_cast<std::int64_t>(divisors.size()) - 1)];
  std::int64_t r = uniform(-2 * g, 2 * g);
  while (std::gcd(r, g) != 1) ++r;

  IntVector a(n, 0);
  for (const auto& o : orbits) {
    const std::int64_t len = static_cast<std::int64_t>(o.length());
    std::int64_t remaining = len * r / g;
    for (std::size_t k = 0; k + 1 < o.length(); ++k) {
      const std::int64_t x = uniform(-3, 3);
      a[o.members[k]] = x;
      remaining -= x;
    }
    a[o.members.back()] = remaining;
  }

  IntMatrix m = extend_equivariant(nu, a, [&] { return uniform(lo, hi); });
  return {std::move(m), a, nu};
}

// Random Gorenstein tiled order: a cyclic order conjugated by a random shift.
struct RandomOrder {
  IntVector weights;
  IntVector shift;
  gto::ExponentMatrix m;
};

inline RandomOrder random_gorenstein_order(std::size_t n, std::int64_t w_hi, std::int64_t s_hi) {
  IntVector w = random_admissible_weights(n, w_hi);
  IntVector s = random_vector(n, -s_hi, s_hi);
  auto m = gto::morita_shift(gto::cyclic_order(w).m, s);
  return {std::move(w), std::move(s), std::move(m)};
}

// Componentwise order on exponent vectors.
inline bool vec_leq(const IntVector& v, const IntVector& w) {
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] > w[k]) return false;
  return true;
}

// Covers of a finite set of vectors, by enumerating all triples.
inline std::vector<std::pair<IntVector, IntVector>> brute_covers(std::vector<IntVector> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<std::pair<IntVector, IntVector>> out;
  for (const auto& x : vs)
    for (const auto& y : vs) {
      if (x == y || !vec_leq(y, x)) continue;
      bool between = false;
      for (const auto& z : vs)
        if (z != x && z != y && vec_leq(y, z) && vec_leq(z, x)) between = true;
      if (!between) out.emplace_back(x, y);
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::pair<IntVector, IntVector>> labeled_arrows(const gto::Quiver& q) {
  std::vector<std::pair<IntVector, IntVector>> out;
  for (auto [s, t] : q.arrows) out.emplace_back(q.vertices[s], q.vertices[t]);
  std::sort(out.begin(), out.end());
  return out;
}


// The 10x10 floor-type m-data with orbits {0..3} and {4..9}, a_av = 1/2,
// written with symbols b..p. Entries "x" or "x+1" in m, "2x" or "2x+1" in
// the expected g-fold sum.
struct TenByTenExample {
  IntMatrix m;
  IntVector a;
  gto::Permutation nu;
  IntMatrix m_prime;
  IntMatrix m_bar;
};

inline TenByTenExample ten_by_ten_example(const std::map<char, std::int64_t>& sym) {
  static const char* const m_rows[10][10] = {
      {"b", "c", "d", "e", "f", "g", "f", "g", "f", "g"},
      {"e+1", "b", "c+1", "d", "g+1", "f", "g+1", "f", "g+1", "f"},
      {"d", "e", "b", "c", "f", "g", "f", "g", "f", "g"},
      {"c+1", "d", "e+1", "b", "g+1", "f", "g+1", "f", "g+1", "f"},
      {"h", "i", "h", "i", "j", "k", "l", "m", "n", "p"},
      {"i+1", "h", "i+1", "h", "p+1", "j", "k+1", "l", "m+1", "n"},
      {"h", "i", "h", "i", "n", "p", "j", "k", "l", "m"},
      {"i+1", "h", "i+1", "h", "m+1", "n", "p+1", "j", "k+1", "l"},
      {"h", "i", "h", "i", "l", "m", "n", "p", "j", "k"},
      {"i+1", "h", "i+1", "h", "k+1", "l", "m+1", "n", "p+1", "j"}};
  static const char* const m_prime_rows[10][10] = {
      {"2b", "2c+1", "2d", "2e+1", "2f", "2g+1", "2f", "2g+1", "2f", "2g+1"},
      {"2e+1", "2b", "2c+1", "2d", "2g+1", "2f", "2g+1", "2f", "2g+1", "2f"},
      {"2d", "2e+1", "2b", "2c+1", "2f", "2g+1", "2f", "2g+1", "2f", "2g+1"},
      {"2c+1", "2d", "2e+1", "2b", "2g+1", "2f", "2g+1", "2f", "2g+1", "2f"},
      {"2h", "2i+1", "2h", "2i+1", "2j", "2k+1", "2l", "2m+1", "2n", "2p+1"},
      {"2i+1", "2h", "2i+1", "2h", "2p+1", "2j", "2k+1", "2l", "2m+1", "2n"},
      {"2h", "2i+1", "2h", "2i+1", "2n", "2p+1", "2j", "2k+1", "2l", "2m+1"},
      {"2i+1", "2h", "2i+1", "2h", "2m+1", "2n", "2p+1", "2j", "2k+1", "2l"},
      {"2h", "2i+1", "2h", "2i+1", "2l", "2m+1", "2n", "2p+1", "2j", "2k+1"},
      {"2i+1", "2h", "2i+1", "2h", "2k+1", "2l", "2m+1", "2n", "2p+1", "2j"}};

  auto eval = [&](std::string_view t) {
    std::int64_t factor = 1;
    if (t.front() == '2') {
      factor = 2;
      t.remove_prefix(1);
    }
    const std::int64_t offset = t.size() > 1 ? 1 : 0;
    return factor * sym.at(t.front()) + offset;
  };
  std::vector<IntVector> m(10, IntVector(10)), mp(10, IntVector(10));
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j) {
      m[i][j] = eval(m_rows[i][j]);
      mp[i][j] = eval(m_prime_rows[i][j]);
    }
  auto mn = [&](std::initializer_list<const char*> ts) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (const char* t : ts) best = std::min(best, eval(t));
    return best;
  };
  const std::vector<IntVector> bar = {
      {mn({"2b", "2c+1", "2d", "2e+1"}), mn({"2f", "2g+1"})},
      {mn({"2h", "2i+1"}), mn({"2j", "2k+1", "2l", "2m+1", "2n", "2p+1"})}};
  return {IntMatrix::from_rows(m),
          {0, 1, 0, 1, 0, 1, 0, 1, 0, 1},
          gto::Permutation({1, 2, 3, 0, 5, 6, 7, 8, 9, 4}),
          IntMatrix::from_rows(mp),
          IntMatrix::from_rows(bar)};
}

inline std::map<char, std::int64_t> constant_symbols(std::int64_t value) {
  std::map<char, std::int64_t> sym;
  for (char c : std::string_view("bcdefghijklmnp")) sym[c] = value;
  return sym;
}

}  // namespace support
