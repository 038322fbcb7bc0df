#pragma once

#include "gto/exponent.hpp"

namespace gto {

/// Finds the Nakayama permutation nu and shifts ell with
/// m(nu(i), j) + m(j, i) = ell_i for every j, and sets p_i = 1 - ell_i.
///
/// Errors: NotGorenstein (witness i) when no candidate works for i,
/// AmbiguousNakayama (witness i) when several do, NotBijective when the
/// collected nu is not a permutation, NonConstantOrbitAverage when two
/// nu-orbits have different parameter averages.
GorensteinData detect_gorenstein(const ExponentMatrix& m);

/// Parameters of morita_shift(m, s): p'_i = p_i + s(i) - s(nu(i)).
IntVector shifted_parameters(const GorensteinData& g, const ShiftVector& s);

/// Checks m(nu(i), nu(j)) = m(i,j) - p_i + p_j for all i, j.
/// (On the transposed matrix this is the familiar m(nu i, nu j) =
/// m(i,j) + p_i - p_j.)
bool is_nakayama_equivariant(const ExponentMatrix& m, const GorensteinData& g);

}  // namespace gto
