#include "narydiff/vandermonde.hpp"

#include <cmath>
#include <utility>

namespace narydiff {

namespace {

// Bareiss recurrence on an n x n row-major array. `choose_pivot` returns the
// row (>= k) to use at step k, or n when column k is zero below the diagonal.
template <class Ring, class ChoosePivot, class ExactDivide>
Ring bareiss(std::vector<Ring> a, std::size_t n, ChoosePivot choose_pivot, ExactDivide exact_divide) {
  auto at = [&](std::size_t r, std::size_t c) -> Ring& { return a[r * n + c]; };
  Ring previous(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = choose_pivot(a, n, k);
    if (p == n) return Ring(0);
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(p, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Ring t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        at(i, j) = exact_divide(t, previous);
      }
      at(i, k) = Ring(0);
    }
    previous = at(k, k);
  }
  Ring det = at(n - 1, n - 1);
  return negate ? Ring(-det) : det;
}

}  // namespace

Rational det_fraction_free(const SquareMatrix<Rational>& m) {
  const std::size_t n = m.dimension();
  if (n == 0) return Rational(1);

  // Column k is multiplied by the lcm of its denominators, so
  // det(m) = det(integer matrix) / prod(scales).
  std::vector<mpz_class> a(n * n);
  mpz_class scale_product = 1;
  for (std::size_t c = 0; c < n; ++c) {
    mpz_class lcm = 1;
    for (std::size_t r = 0; r < n; ++r) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).raw().get_den_mpz_t());
    }
    for (std::size_t r = 0; r < n; ++r) {
      const auto& q = m(r, c).raw();
      mpz_class factor = lcm / q.get_den();
      a[r * n + c] = q.get_num() * factor;
    }
    scale_product *= lcm;
  }

  auto first_nonzero = [](const std::vector<mpz_class>& v, std::size_t dim, std::size_t k) {
    for (std::size_t r = k; r < dim; ++r) {
      if (v[r * dim + k] != 0) return r;
    }
    return dim;
  };
  auto divexact = [](const mpz_class& num, const mpz_class& den) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
  };

  mpz_class det = bareiss(std::move(a), n, first_nonzero, divexact);
  return Rational(det, scale_product);
}

double det_fraction_free(const SquareMatrix<double>& m) {
  const std::size_t n = m.dimension();
  if (n == 0) return 1.0;
  std::vector<double> a(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r * n + c] = m(r, c);
  }
  auto largest = [](const std::vector<double>& v, std::size_t dim, std::size_t k) {
    std::size_t best = dim;
    double best_abs = 0.0;
    for (std::size_t r = k; r < dim; ++r) {
      double x = std::fabs(v[r * dim + k]);
      if (x > best_abs) {
        best_abs = x;
        best = r;
      }
    }
    return best;
  };
  auto divide = [](double num, double den) { return num / den; };
  return bareiss(std::move(a), n, largest, divide);
}

}  // namespace narydiff
