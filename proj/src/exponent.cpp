#include "gto/exponent.hpp"

#include <string>

namespace gto {
namespace {

void check_structure(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m(i, i) != 0) {
      throw Error(ErrorCode::NonzeroDiagonal,
                  "m(" + std::to_string(i) + "," + std::to_string(i) +
                      ") = " + std::to_string(m(i, i)),
                  {static_cast<std::int64_t>(i)});
    }
  }
}

}  // namespace

OrderReport validate_order(const IntMatrix& m) {
  if (m.size() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "empty exponent matrix");
  }
  check_structure(m);
  const std::size_t n = m.size();
  OrderReport report;
  for (std::size_t i = 0; i < n && report.triangle_ok; ++i) {
    for (std::size_t k = 0; k < n && report.triangle_ok; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        if (checked_add(m(i, k), m(k, j)) < m(i, j)) {
          report.triangle_ok = false;
          report.first_violation = {i, k, j};
          break;
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) < 0) report.n_graded = false;
      if (i < j && report.basic && checked_add(m(i, j), m(j, i)) <= 0) {
        report.basic = false;
        report.non_basic_pair = {i, j};
      }
    }
  }
  return report;
}

ExponentMatrix ExponentMatrix::make(IntMatrix m) {
  const OrderReport report = validate_order(m);
  if (!report.triangle_ok) {
    const auto [i, k, j] = *report.first_violation;
    throw Error(ErrorCode::InvalidOrder,
                "triangle inequality fails on path " + std::to_string(i) +
                    "->" + std::to_string(k) + "->" + std::to_string(j),
                {static_cast<std::int64_t>(i), static_cast<std::int64_t>(k),
                 static_cast<std::int64_t>(j)});
  }
  return ExponentMatrix(std::move(m));
}

bool ExponentMatrix::basic() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (checked_add(m_(i, j), m_(j, i)) <= 0) return false;
  return true;
}

bool ExponentMatrix::n_graded() const { return m_.min_entry() >= 0; }

CyclicOrder cyclic_order(std::span<const std::int64_t> weights) {
  const std::size_t n = weights.size();
  if (n == 0) {
    throw Error(ErrorCode::DimensionMismatch, "empty weight vector");
  }
  std::int64_t total = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (weights[k] < 0) {
      throw Error(ErrorCode::NegativeWeight,
                  "weight " + std::to_string(k) + " is negative",
                  {static_cast<std::int64_t>(k)});
    }
    total = checked_add(total, weights[k]);
  }
  if (total == 0) throw Error(ErrorCode::ZeroWeights, "all weights are zero");

  // m(i,j) accumulates weights from i up to j-1, wrapping past n-1.
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t acc = 0;
    for (std::size_t step = 1; step < n; ++step) {
      acc = checked_add(acc, weights[(i + step - 1) % n]);
      m(i, (i + step) % n) = acc;
    }
  }

  GorensteinData g;
  g.nu = Permutation::rotation(n);
  g.ell.resize(n);
  g.p.resize(n);
  std::int64_t p_sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    g.ell[i] = checked_sub(total, weights[i]);
    g.p[i] = checked_sub(1, g.ell[i]);
    p_sum = checked_add(p_sum, g.p[i]);
  }
  g.p_av = Rational(p_sum, static_cast<std::int64_t>(n));
  return {ExponentMatrix::make(std::move(m)), std::move(g)};
}

ExponentMatrix morita_shift(const ExponentMatrix& m, const ShiftVector& s) {
  const std::size_t n = m.size();
  if (s.size() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "shift has length " + std::to_string(s.size()) +
                    ", expected " + std::to_string(n));
  }
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = checked_add(m(i, j), checked_sub(s[i], s[j]));
  ExponentMatrix shifted = ExponentMatrix::make(std::move(out));
  if (m.basic() != shifted.basic()) {
    throw std::logic_error("morita_shift changed basicness");
  }
  return shifted;
}

}  // namespace gto
