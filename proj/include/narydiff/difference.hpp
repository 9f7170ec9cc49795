#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "narydiff/error.hpp"
#include "narydiff/scalar.hpp"
#include "narydiff/vandermonde.hpp"

namespace narydiff {

namespace detail {

template <Scalar T>
void require_at_least_two(const PointList<T>& pts, const char* op) {
  if (pts.size() < 2) {
    throw TooFewPoints(std::string(op) + " needs at least two quantities, got " + std::to_string(pts.size()));
  }
}

}  // namespace detail

/// The n-ary difference [x_1 ... x_n]: the Vandermonde determinant of the
/// quantities. For two quantities this is x_2 - x_1.
template <Scalar T>
T difference_nary(const PointList<T>& pts) {
  detail::require_at_least_two(pts, "difference_nary");
  return det_product(pts);
}

/// Splitting of [x_1 ... x_n] at a pivot x into the n brackets obtained by
/// putting x in each slot in turn. `total` always equals `reference`.
template <Scalar T>
struct Decomposition {
  PointList<T> base;
  T pivot;
  std::vector<Bracket<T>> terms;
  T total;
  T reference;

  /// Sum of |term|; the cancellation scale for float comparisons.
  T magnitude() const {
    T sum(0);
    for (const auto& t : terms) sum = sum + ScalarTraits<T>::abs(t.value);
    return sum;
  }

  bool holds() const { return scalars_agree(total, reference, magnitude()); }
};

template <Scalar T>
Decomposition<T> decompose(const PointList<T>& pts, const T& pivot) {
  detail::require_at_least_two(pts, "decompose");
  std::vector<Bracket<T>> terms;
  terms.reserve(pts.size());
  T total(0);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    terms.push_back(bracket(pts, k, pivot));
    total = total + terms.back().value;
  }
  return Decomposition<T>{pts, pivot, std::move(terms), std::move(total), det_product(pts)};
}

/// AV(x): entry(i, k) = x_k^i + x^i. Row 0 is therefore all twos.
template <Scalar T>
SquareMatrix<T> doubled_matrix(const PointList<T>& pts, const T& pivot) {
  const std::size_t n = pts.size();
  SquareMatrix<T> m(n);
  for (std::size_t k = 0; k < n; ++k) {
    T xk(1);
    T xp(1);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, k) = xk + xp;
      xk = xk * pts[k];
      xp = xp * pivot;
    }
  }
  return m;
}

template <Scalar T>
struct DoubledMatrixReport {
  PointList<T> base;
  T pivot;
  T det_doubled;
  T expected;  // 2V

  bool holds() const { return scalars_agree(det_doubled, expected); }
};

template <Scalar T>
DoubledMatrixReport<T> doubled_determinant(const PointList<T>& pts, const T& pivot) {
  detail::require_at_least_two(pts, "doubled_determinant");
  T det = det_fraction_free(doubled_matrix(pts, pivot));
  T v = det_product(pts);
  return DoubledMatrixReport<T>{pts, pivot, std::move(det), v + v};
}

/// |[d_1 ... d_n]| for distances d_i measured from a common origin. Moving
/// the origin shifts every d_i equally and leaves this unchanged.
template <Scalar T>
T distance_nary(const PointList<T>& origin_distances) {
  detail::require_at_least_two(origin_distances, "distance_nary");
  return ScalarTraits<T>::abs(det_product(origin_distances));
}

}  // namespace narydiff
