#include "gto/conjugation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gto {
namespace {

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

void require_shift_size(const ShiftVector& s, std::size_t n) {
  if (s.size() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "shift has length " + std::to_string(s.size()) +
                    ", expected " + std::to_string(n));
  }
}

CycleSeq rotate_to_smallest(CycleSeq cycle) {
  auto smallest = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), smallest, cycle.end());
  return cycle;
}

IntVector to_witness(const CycleSeq& cycle) {
  return IntVector(cycle.begin(), cycle.end());
}

// Positions of a single orbit profile, rotated by `offset`.
bool matches_profile(const MData& md, const Orbit& orbit,
                     const IntVector& profile, std::size_t offset) {
  const std::size_t len = orbit.length();
  for (std::size_t k = 0; k < len; ++k) {
    if (md.a()[orbit.members[k]] != profile[(k + offset) % len]) return false;
  }
  return true;
}

}  // namespace

std::int64_t cycle_sum(const IntMatrix& m, const CycleSeq& cycle) {
  if (cycle.empty()) {
    throw Error(ErrorCode::DimensionMismatch, "empty cycle");
  }
  for (std::size_t idx : cycle) {
    if (idx >= m.size()) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "cycle index " + std::to_string(idx) + " out of range",
                  {as_int(idx)});
    }
  }
  std::int64_t total = 0;
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    total = checked_add(total, m(cycle[k], cycle[(k + 1) % cycle.size()]));
  }
  return total;
}

IntMatrix conjugate(const IntMatrix& m, const ShiftVector& s) {
  require_shift_size(s, m.size());
  IntMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      out(i, j) = checked_add(m(i, j), checked_sub(s[i], s[j]));
  return out;
}

bool is_sigma_nonneg_bruteforce(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n > 8) {
    throw Error(ErrorCode::TooLarge,
                "permutation enumeration is limited to n <= 8");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i) < 0) return false;
  }
  // traces over moved points only; the diagonal is checked above
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  do {
    std::int64_t trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (sigma[i] != i) trace = checked_add(trace, m(i, sigma[i]));
    if (trace < 0) return false;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return true;
}

std::optional<CycleSeq> find_negative_cycle(const IntMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i) < 0) return CycleSeq{i};
  }
  // Bellman-Ford from a virtual source joined to every vertex by a
  // zero-weight edge; edge i -> j has weight m(i,j). Without a negative
  // cycle it settles within n rounds. With one, the distances keep falling
  // and the predecessor graph eventually closes a cycle, which is negative.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  IntVector dist(n, 0);
  std::vector<std::size_t> pred(n, kNone);
  std::vector<std::size_t> mark(n);
  for (std::size_t round = 0;; ++round) {
    bool relaxed = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const std::int64_t candidate = checked_add(dist[i], m(i, j));
        if (candidate < dist[j]) {
          dist[j] = candidate;
          pred[j] = i;
          relaxed = true;
        }
      }
    }
    if (!relaxed) return std::nullopt;
    if (round + 1 < n) continue;

    mark.assign(n, kNone);
    for (std::size_t start = 0; start < n; ++start) {
      std::size_t v = start;
      while (v != kNone && mark[v] == kNone) {
        mark[v] = start;
        v = pred[v];
      }
      if (v == kNone || mark[v] != start) continue;
      CycleSeq backwards{v};
      for (std::size_t u = pred[v]; u != v; u = pred[u]) backwards.push_back(u);
      CycleSeq cycle =
          rotate_to_smallest(CycleSeq(backwards.rbegin(), backwards.rend()));
      if (cycle_sum(m, cycle) >= 0) {
        throw std::logic_error("predecessor cycle is not negative");
      }
      return cycle;
    }
  }
}

bool is_sigma_nonneg(const IntMatrix& m) {
  return !find_negative_cycle(m).has_value();
}

MinCycle min_cycle(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n > 10) {
    throw Error(ErrorCode::TooLarge, "cycle enumeration is limited to n <= 10");
  }
  if (n < 2) {
    throw Error(ErrorCode::DimensionMismatch,
                "a cycle of length >= 2 needs at least two indices");
  }
  std::optional<MinCycle> best;
  auto consider = [&](const CycleSeq& path, std::int64_t value) {
    if (!best || value < best->value ||
        (value == best->value &&
         (path.size() < best->cycle.size() ||
          (path.size() == best->cycle.size() && path < best->cycle)))) {
      best = MinCycle{path, value};
    }
  };

  CycleSeq path;
  std::vector<bool> used(n, false);
  // Extend a simple path that starts at its smallest element path[0].
  auto extend = [&](auto&& self, std::int64_t partial) -> void {
    const std::size_t start = path.front();
    const std::size_t tail = path.back();
    if (path.size() >= 2) {
      consider(path, checked_add(partial, m(tail, start)));
    }
    for (std::size_t next = start + 1; next < n; ++next) {
      if (used[next]) continue;
      used[next] = true;
      path.push_back(next);
      self(self, checked_add(partial, m(tail, next)));
      path.pop_back();
      used[next] = false;
    }
  };
  for (std::size_t start = 0; start + 1 < n; ++start) {
    path = {start};
    used.assign(n, false);
    used[start] = true;
    extend(extend, 0);
  }
  return *best;
}

ShiftVector nonneg_conjugate(const IntMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i) < 0) {
      throw Error(ErrorCode::NegativeDiagonal,
                  "m(" + std::to_string(i) + "," + std::to_string(i) +
                      ") is negative and invariant under conjugation",
                  {as_int(i)});
    }
  }
  if (auto cycle = find_negative_cycle(m)) {
    throw Error(ErrorCode::NegativeCycle,
                "cycle sum " + std::to_string(cycle_sum(m, *cycle)) +
                    " is negative",
                to_witness(*cycle));
  }
  // No negative cycle: n-1 rounds of relaxation reach the fixed point.
  ShiftVector dist(n, 0);
  for (std::size_t round = 0; round + 1 < n; ++round) {
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const std::int64_t candidate = checked_add(dist[i], m(i, j));
        if (candidate < dist[j]) {
          dist[j] = candidate;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  if (conjugate(m, dist).min_entry() < 0) {
    throw std::logic_error("potentials do not give a non-negative conjugate");
  }
  return dist;
}

ShiftVector normalized_cycle_conjugate(const IntMatrix& m,
                                       const CycleSeq& cycle) {
  const std::size_t n = m.size();
  if (cycle.size() < 2) {
    throw Error(ErrorCode::DimensionMismatch,
                "normalization needs a cycle of length >= 2");
  }
  std::vector<bool> on_cycle(n, false);
  for (std::size_t idx : cycle) {
    if (idx >= n) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "cycle index " + std::to_string(idx) + " out of range",
                  {as_int(idx)});
    }
    if (on_cycle[idx]) {
      throw Error(ErrorCode::DimensionMismatch,
                  "cycle repeats index " + std::to_string(idx), {as_int(idx)});
    }
    on_cycle[idx] = true;
  }

  ShiftVector s(n, 0);
  for (std::size_t k = 1; k < cycle.size(); ++k) {
    s[cycle[k]] = checked_add(s[cycle[k - 1]], m(cycle[k - 1], cycle[k]));
  }

  const IntMatrix sm = conjugate(m, s);
  const std::int64_t value = cycle_sum(m, cycle);
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::NotMinCycle, why, to_witness(cycle));
  };
  for (std::size_t a : cycle)
    for (std::size_t b : cycle)
      if (sm(a, b) < 0) fail("conjugate is negative on the cycle's indices");
  if (sm(cycle.back(), cycle.front()) != value) {
    fail("closing edge does not carry the cycle sum");
  }
  if (cycle.size() <= 10) {
    // Restrict to the cycle's indices and compare against the true minimum.
    IntMatrix restricted(cycle.size());
    for (std::size_t a = 0; a < cycle.size(); ++a)
      for (std::size_t b = 0; b < cycle.size(); ++b)
        restricted(a, b) = m(cycle[a], cycle[b]);
    if (min_cycle(restricted).value != value) {
      fail("cycle sum is not the minimum on its indices");
    }
  }
  return s;
}

IntVector floor_profile(std::int64_t r, std::int64_t g, std::int64_t n) {
  if (g < 1 || n < 1) {
    throw Error(ErrorCode::DimensionMismatch,
                "floor profile needs g >= 1 and n >= 1");
  }
  if (checked_mul(r, n) % g != 0) {
    throw Error(ErrorCode::NotIntegralSum,
                "(" + std::to_string(r) + "/" + std::to_string(g) + ") * " +
                    std::to_string(n) + " is not an integer",
                {r, g, n});
  }
  IntVector out(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] =
        checked_sub(floor_div(checked_mul(i + 1, r), g),
                    floor_div(checked_mul(i, r), g));
  }
  return out;
}

bool is_almost_constant(std::span<const std::int64_t> values) {
  if (values.empty()) return true;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return *hi - *lo <= 1;
}

MData validate_mdata(IntMatrix m, IntVector a, Permutation nu) {
  const std::size_t n = a.size();
  if (n == 0 || m.size() != n || nu.size() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "m-data needs an n x n matrix, a length-n vector and a "
                "permutation of 0..n-1 with n >= 1");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t expected =
          checked_add(m(i, j), checked_sub(a[j], a[i]));
      if (m(nu(i), nu(j)) != expected) {
        throw Error(ErrorCode::EquivarianceViolation,
                    "m(nu(" + std::to_string(i) + "),nu(" + std::to_string(j) +
                        ")) = " + std::to_string(m(nu(i), nu(j))) +
                        ", expected " + std::to_string(expected),
                    {as_int(i), as_int(j)});
      }
    }
  }
  std::vector<Orbit> orbits = nu.orbits();
  auto orbit_average = [&](const Orbit& orbit) {
    std::int64_t sum = 0;
    for (auto i : orbit.members) sum = checked_add(sum, a[i]);
    return Rational(sum, as_int(orbit.length()));
  };
  const Rational a_av = orbit_average(orbits.front());
  for (std::size_t y = 1; y < orbits.size(); ++y) {
    const Rational avg = orbit_average(orbits[y]);
    if (avg != a_av) {
      throw Error(ErrorCode::OrbitAverageMismatch,
                  "orbit of " + std::to_string(orbits[y].base()) +
                      " averages " + avg.str() + ", orbit of " +
                      std::to_string(orbits.front().base()) + " averages " +
                      a_av.str(),
                  {as_int(orbits.front().base()), as_int(orbits[y].base())});
    }
  }

  MData md;
  md.m_ = std::move(m);
  md.a_ = std::move(a);
  md.nu_ = std::move(nu);
  md.a_av_ = a_av;
  md.orbits_ = std::move(orbits);
  return md;
}

MData conjugate_mdata(const MData& md, const ShiftVector& s) {
  require_shift_size(s, md.size());
  IntVector sa(md.size());
  for (std::size_t i = 0; i < md.size(); ++i)
    sa[i] = checked_add(md.a()[i], checked_sub(s[i], s[md.nu()(i)]));
  MData out = validate_mdata(conjugate(md.m(), s), std::move(sa), md.nu());
  if (out.a_av() != md.a_av()) {
    throw std::logic_error("conjugation changed the orbit average");
  }
  return out;
}

bool is_floor_type(const MData& md) {
  const Rational& c = md.a_av();
  for (const Orbit& orbit : md.orbits()) {
    const IntVector profile =
        floor_profile(c.num(), c.den(), as_int(orbit.length()));
    if (!matches_profile(md, orbit, profile, 0)) return false;
  }
  return true;
}

bool is_floor_type_up_to_rotation(const MData& md) {
  const Rational& c = md.a_av();
  for (const Orbit& orbit : md.orbits()) {
    const IntVector profile =
        floor_profile(c.num(), c.den(), as_int(orbit.length()));
    bool found = false;
    for (std::size_t offset = 0; offset < orbit.length() && !found; ++offset)
      found = matches_profile(md, orbit, profile, offset);
    if (!found) return false;
  }
  return true;
}

ShiftVector floor_type_conjugate(const MData& md) {
  ShiftVector s(md.size(), 0);
  for (const Orbit& orbit : md.orbits()) {
    std::int64_t prefix = 0;
    for (std::size_t k = 0; k < orbit.length(); ++k) {
      s[orbit.members[k]] = checked_sub(prefix, md.a_av().floor_times(as_int(k)));
      prefix = checked_add(prefix, md.a()[orbit.members[k]]);
    }
  }
  return s;
}

FoldedMData fold_mdata(const MData& md) {
  if (!is_floor_type(md)) {
    throw Error(ErrorCode::NotFloorType,
                "a does not follow the floor profile of " + md.a_av().str());
  }
  const std::size_t n = md.size();
  const std::int64_t g = md.a_av().den();
  const auto period = static_cast<std::size_t>(g);
  const Permutation& nu = md.nu();
  for (const Orbit& orbit : md.orbits()) {
    if (orbit.length() % period != 0) {
      throw std::logic_error("denominator of a_av does not divide an orbit");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (md.m()(nu.power(i, period), nu.power(j, period)) != md.m()(i, j)) {
        throw Error(ErrorCode::PeriodicityViolation,
                    "m is not nu^" + std::to_string(g) + "-invariant at (" +
                        std::to_string(i) + "," + std::to_string(j) + ")",
                    {as_int(i), as_int(j)});
      }
    }
  }

  FoldedMData out;
  out.g = g;
  out.orbit_of.resize(n);
  out.position.resize(n);
  const auto& orbits = md.orbits();
  for (std::size_t x = 0; x < orbits.size(); ++x) {
    for (std::size_t k = 0; k < orbits[x].length(); ++k) {
      out.orbit_of[orbits[x].members[k]] = x;
      out.position[orbits[x].members[k]] = k;
    }
  }

  out.m_prime = IntMatrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t sum = 0;
      std::size_t u = i;
      std::size_t v = j;
      for (std::size_t k = 0; k < period; ++k) {
        sum = checked_add(sum, md.m()(u, v));
        u = nu(u);
        v = nu(v);
      }
      out.m_prime(i, j) = sum;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (out.m_prime(nu(i), nu(j)) != out.m_prime(i, j))
        throw std::logic_error("folded matrix is not nu-invariant");

  out.m_bar = IntMatrix(orbits.size());
  std::vector<bool> seen(orbits.size() * orbits.size(), false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t x = out.orbit_of[i];
      const std::size_t y = out.orbit_of[j];
      const std::size_t slot = x * orbits.size() + y;
      if (!seen[slot] || out.m_prime(i, j) < out.m_bar(x, y)) {
        out.m_bar(x, y) = out.m_prime(i, j);
        seen[slot] = true;
      }
    }
  }
  return out;
}

ShiftVector normalize_mdata(const MData& md) {
  if (auto cycle = find_negative_cycle(md.m())) {
    throw Error(ErrorCode::NegativeCycle,
                "m has a cycle with sum " +
                    std::to_string(cycle_sum(md.m(), *cycle)),
                to_witness(*cycle));
  }
  const ShiftVector to_floor = floor_type_conjugate(md);
  const MData floored = conjugate_mdata(md, to_floor);
  const FoldedMData folded = fold_mdata(floored);
  const ShiftVector orbit_shift = nonneg_conjugate(folded.m_bar);

  // Lift the orbit-level potential: each orbit shifts its floor profile by
  // orbit_shift(x) steps, spreading the change so the g-fold sums move by
  // exactly orbit_shift(x).
  const std::int64_t r = md.a_av().num();
  const std::int64_t g = folded.g;
  ShiftVector total(md.size());
  for (std::size_t i = 0; i < md.size(); ++i) {
    const std::int64_t ir = checked_mul(as_int(folded.position[i]), r);
    const std::int64_t lift =
        checked_sub(floor_div(ir, g),
                    floor_div(checked_sub(ir, orbit_shift[folded.orbit_of[i]]), g));
    total[i] = checked_add(to_floor[i], lift);
  }

  const MData result = conjugate_mdata(md, total);
  if (!is_floor_type_up_to_rotation(result)) {
    throw std::logic_error("normalized m-data is not of floor type");
  }
  for (std::int64_t value : result.a()) {
    // |value - r/g| < 1  <=>  |value*g - r| < g
    const std::int64_t diff = checked_sub(checked_mul(value, g), r);
    if (diff >= g || diff <= -g) {
      throw std::logic_error("normalized a is not almost constant");
    }
  }
  if (result.m().min_entry() < 0) {
    throw std::logic_error("normalized m has a negative entry");
  }
  return total;
}

MData mdata_of_order(const ExponentMatrix& m, const GorensteinData& g) {
  IntVector a(g.p.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = checked_sub(0, g.p[i]);
  return validate_mdata(m.matrix().transposed(), std::move(a), g.nu);
}

NormalizedOrder normalize_order(const ExponentMatrix& m) {
  const GorensteinData g = detect_gorenstein(m);
  const ShiftVector s = normalize_mdata(mdata_of_order(m, g));
  ShiftVector order_shift(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    order_shift[i] = checked_sub(0, s[i]);
  ExponentMatrix shifted = morita_shift(m, order_shift);
  GorensteinData shifted_g = detect_gorenstein(shifted);
  if (shifted_g.p != shifted_parameters(g, order_shift) ||
      shifted_g.p_av != g.p_av || !shifted.n_graded()) {
    throw std::logic_error("normalized order violates its postconditions");
  }
  return {std::move(shifted), std::move(order_shift), std::move(shifted_g)};
}

}  // namespace gto
