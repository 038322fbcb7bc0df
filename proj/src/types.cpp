#include "gto/types.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace gto {

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  const std::size_t n = rows.size();
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw Error(ErrorCode::NonSquare,
                  "row " + std::to_string(i) + " has " +
                      std::to_string(rows[i].size()) + " entries, expected " +
                      std::to_string(n),
                  {static_cast<std::int64_t>(i)});
    }
    for (std::size_t j = 0; j < n; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

std::vector<IntVector> IntMatrix::rows() const {
  std::vector<IntVector> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    auto r = row(i);
    out[i].assign(r.begin(), r.end());
  }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

std::int64_t IntMatrix::min_entry() const {
  if (data_.empty()) return 0;
  return *std::min_element(data_.begin(), data_.end());
}

Permutation::Permutation(std::vector<std::size_t> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const std::size_t v = images_[i];
    if (v >= images_.size() || seen[v]) {
      throw Error(ErrorCode::NotBijective,
                  "image list is not a bijection on 0.." +
                      std::to_string(images_.size()) + "-1",
                  {static_cast<std::int64_t>(i)});
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::rotation(std::size_t n) {
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = (i + 1) % n;
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

std::size_t Permutation::power(std::size_t i, std::size_t k) const {
  for (std::size_t step = 0; step < k; ++step) i = images_[i];
  return i;
}

std::vector<Orbit> Permutation::orbits() const {
  std::vector<Orbit> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    Orbit orbit;
    for (std::size_t i = start; !seen[i]; i = images_[i]) {
      seen[i] = true;
      orbit.members.push_back(i);
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace gto
