#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "narydiff/error.hpp"
#include "narydiff/scalar.hpp"

namespace narydiff {

/// Ordered quantities x_1..x_n, n >= 1. Order matters (the Vandermonde
/// determinant is alternating) and repeated values are allowed.
template <Scalar T>
class PointList {
 public:
  explicit PointList(std::vector<T> points) : points_(std::move(points)) {
    if (points_.empty()) throw EmptyInput("point list must contain at least one point");
  }

  std::size_t size() const { return points_.size(); }
  const T& operator[](std::size_t i) const { return points_[i]; }
  std::span<const T> values() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  /// Copy with the point at `index` (0-based) replaced.
  PointList with_replaced(std::size_t index, const T& value) const {
    if (index >= points_.size()) {
      throw IndexOutOfRange("substitution index " + std::to_string(index) + " outside point list of size " +
                            std::to_string(points_.size()));
    }
    auto copy = points_;
    copy[index] = value;
    return PointList(std::move(copy));
  }

  PointList translated(const T& shift) const {
    auto copy = points_;
    for (auto& p : copy) p = p + shift;
    return PointList(std::move(copy));
  }

  friend bool operator==(const PointList&, const PointList&) = default;

 private:
  std::vector<T> points_;
};

/// Dense square matrix, row-major.
template <Scalar T>
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t n) : n_(n), entries_(n * n, T(0)) {}

  std::size_t dimension() const { return n_; }
  T& operator()(std::size_t row, std::size_t col) { return entries_[row * n_ + col]; }
  const T& operator()(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<T> entries_;
};

/// Rows are powers 0..n-1 and columns are points: entry(i, k) = x_k^i.
template <Scalar T>
class VandermondeMatrix : public SquareMatrix<T> {
 public:
  explicit VandermondeMatrix(const PointList<T>& pts) : SquareMatrix<T>(pts.size()) {
    const auto n = pts.size();
    for (std::size_t k = 0; k < n; ++k) {
      T power(1);
      for (std::size_t i = 0; i < n; ++i) {
        (*this)(i, k) = power;
        power = power * pts[k];
      }
    }
  }
};

template <Scalar T>
VandermondeMatrix<T> build_matrix(const PointList<T>& pts) {
  return VandermondeMatrix<T>(pts);
}

/// prod_{i > k} (x_i - x_k). One point gives 1.
template <Scalar T>
T det_product(std::span<const T> pts) {
  if (pts.empty()) throw EmptyInput("determinant of an empty point list");
  T v(1);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    for (std::size_t k = 0; k < i; ++k) v = v * (pts[i] - pts[k]);
  }
  return v;
}

template <Scalar T>
T det_product(const PointList<T>& pts) {
  return det_product<T>(pts.values());
}

inline constexpr std::size_t kLaplaceMaxDimension = 8;

/// Cofactor expansion along successive rows, memoised over column subsets.
/// Kept as a small-instance oracle; refuses n > kLaplaceMaxDimension.
template <Scalar T>
T det_laplace(const SquareMatrix<T>& m) {
  const std::size_t n = m.dimension();
  if (n > kLaplaceMaxDimension) {
    throw DimensionTooLarge("cofactor expansion limited to n <= " + std::to_string(kLaplaceMaxDimension) +
                            ", got " + std::to_string(n));
  }
  if (n == 0) return T(1);
  // minors[mask]: determinant of the leading popcount(mask) rows restricted
  // to the columns in mask.
  std::vector<T> minors(std::size_t{1} << n, T(0));
  minors[0] = T(1);
  for (std::size_t mask = 1; mask < minors.size(); ++mask) {
    const auto row = static_cast<std::size_t>(__builtin_popcountll(mask)) - 1;
    T sum(0);
    std::size_t above = static_cast<std::size_t>(__builtin_popcountll(mask));
    for (std::size_t col = 0; col < n; ++col) {
      if (!(mask & (std::size_t{1} << col))) continue;
      --above;  // members of mask with index > col
      T term = m(row, col) * minors[mask & ~(std::size_t{1} << col)];
      sum = (above % 2 == 0) ? sum + term : sum - term;
    }
    minors[mask] = sum;
  }
  return minors.back();
}

/// Fraction-free (Bareiss) elimination. The exact overload scales each
/// column to integers first and eliminates over Z; the float overload uses
/// the same recurrence with partial pivoting.
Rational det_fraction_free(const SquareMatrix<Rational>& m);
double det_fraction_free(const SquareMatrix<double>& m);

/// Vandermonde determinant of `base` with the point at `substituted_index`
/// replaced by `pivot`.
template <Scalar T>
struct Bracket {
  PointList<T> base;
  std::size_t substituted_index;  // 0-based
  T pivot;
  T value;
};

template <Scalar T>
Bracket<T> bracket(const PointList<T>& pts, std::size_t index, const T& pivot) {
  auto substituted = pts.with_replaced(index, pivot);
  return Bracket<T>{pts, index, pivot, det_product(substituted)};
}

}  // namespace narydiff
