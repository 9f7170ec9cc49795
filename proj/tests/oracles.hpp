#pragma once

// Test-only reference computations. Nothing here calls into the library's
// determinant or polynomial code.

#include <algorithm>
#include <numeric>
#include <vector>

#include "narydiff/rational.hpp"

namespace narydiff::testing {

/// Leibniz formula: sum over all permutations of sign * prod entries.
/// `rows` is row-major n x n.
inline Rational leibniz_det(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t n = rows.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational det(0);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) term *= rows[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// Rows are powers 0..n-1 of the points, computed by repeated products.
inline std::vector<std::vector<Rational>> vandermonde_rows(const std::vector<Rational>& pts) {
  const std::size_t n = pts.size();
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n, Rational(1)));
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) rows[i][k] = rows[i - 1][k] * pts[k];
  return rows;
}

/// e_j(roots) by explicit enumeration of all j-subsets.
inline Rational elementary_symmetric(const std::vector<Rational>& roots, std::size_t j) {
  const std::size_t n = roots.size();
  Rational sum(0);
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountl(mask)) != j) continue;
    Rational prod(1);
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ul << i)) prod *= roots[i];
    sum += prod;
  }
  return sum;
}

}  // namespace narydiff::testing
