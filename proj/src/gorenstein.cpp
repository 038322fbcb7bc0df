#include "gto/gorenstein.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace gto {
namespace {

// The constant value of j -> m(u,j) + m(j,i), if there is one.
std::optional<std::int64_t> dual_shift(const ExponentMatrix& m, std::size_t u,
                                       std::size_t i) {
  const std::int64_t ell = checked_add(m(u, 0), m(0, i));
  for (std::size_t j = 1; j < m.size(); ++j) {
    if (checked_add(m(u, j), m(j, i)) != ell) return std::nullopt;
  }
  return ell;
}

}  // namespace

bool is_nakayama_equivariant(const ExponentMatrix& m,
                             const GorensteinData& g) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(g.nu(i), g.nu(j)) !=
          checked_add(m(i, j), checked_sub(g.p[j], g.p[i])))
        return false;
  return true;
}

GorensteinData detect_gorenstein(const ExponentMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> images(n);
  GorensteinData g;
  g.ell.resize(n);
  g.p.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<std::size_t> found;
    for (std::size_t u = 0; u < n; ++u) {
      auto ell = dual_shift(m, u, i);
      if (!ell) continue;
      if (found) {
        throw Error(ErrorCode::AmbiguousNakayama,
                    "index " + std::to_string(i) + " has dual candidates " +
                        std::to_string(*found) + " and " + std::to_string(u),
                    {static_cast<std::int64_t>(i)});
      }
      found = u;
      g.ell[i] = *ell;
    }
    if (!found) {
      throw Error(ErrorCode::NotGorenstein,
                  "no index u makes m(u,j) + m(j," + std::to_string(i) +
                      ") constant in j",
                  {static_cast<std::int64_t>(i)});
    }
    images[i] = *found;
    g.p[i] = checked_sub(1, g.ell[i]);
  }
  g.nu = Permutation(std::move(images));

  std::int64_t total = 0;
  for (auto v : g.p) total = checked_add(total, v);
  g.p_av = Rational(total, static_cast<std::int64_t>(n));

  for (const Orbit& orbit : g.nu.orbits()) {
    std::int64_t sum = 0;
    for (auto i : orbit.members) sum = checked_add(sum, g.p[i]);
    if (Rational(sum, static_cast<std::int64_t>(orbit.length())) != g.p_av) {
      throw Error(ErrorCode::NonConstantOrbitAverage,
                  "orbit of " + std::to_string(orbit.base()) +
                      " has parameter average " +
                      Rational(sum, static_cast<std::int64_t>(orbit.length()))
                          .str() +
                      " but the global average is " + g.p_av.str(),
                  {static_cast<std::int64_t>(orbit.base())});
    }
  }
  if (!is_nakayama_equivariant(m, g)) {
    throw std::logic_error("detected Gorenstein data is not equivariant");
  }
  return g;
}

IntVector shifted_parameters(const GorensteinData& g, const ShiftVector& s) {
  const std::size_t n = g.p.size();
  if (s.size() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "shift has length " + std::to_string(s.size()) +
                    ", expected " + std::to_string(n));
  }
  IntVector out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = checked_add(g.p[i], checked_sub(s[i], s[g.nu(i)]));
  return out;
}

}  // namespace gto
