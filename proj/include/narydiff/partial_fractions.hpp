#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "narydiff/error.hpp"
#include "narydiff/scalar.hpp"
#include "narydiff/vandermonde.hpp"

namespace narydiff {

/// Dense univariate polynomial, coefficients in ascending degree.
/// Trailing zero coefficients are trimmed, so the zero polynomial has no
/// coefficients at all.
template <Scalar T>
class DensePolynomial {
 public:
  DensePolynomial() = default;
  explicit DensePolynomial(std::vector<T> coefficients) : coefficients_(std::move(coefficients)) { trim(); }

  static DensePolynomial constant(const T& c) { return DensePolynomial(std::vector<T>{c}); }

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coefficients_.size()) - 1; }
  const std::vector<T>& coefficients() const { return coefficients_; }
  T coefficient(std::size_t power) const { return power < coefficients_.size() ? coefficients_[power] : T(0); }

  T operator()(const T& x) const {
    T acc(0);
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  DensePolynomial derivative() const {
    std::vector<T> out;
    for (std::size_t p = 1; p < coefficients_.size(); ++p) out.push_back(T(static_cast<long>(p)) * coefficients_[p]);
    return DensePolynomial(std::move(out));
  }

  /// Multiply in place by (x - root).
  void multiply_linear(const T& root) {
    std::vector<T> out(coefficients_.size() + 1, T(0));
    for (std::size_t p = 0; p < coefficients_.size(); ++p) {
      out[p + 1] = out[p + 1] + coefficients_[p];
      out[p] = out[p] - root * coefficients_[p];
    }
    coefficients_ = std::move(out);
    trim();
  }

  DensePolynomial& operator+=(const DensePolynomial& rhs) {
    if (rhs.coefficients_.size() > coefficients_.size()) coefficients_.resize(rhs.coefficients_.size(), T(0));
    for (std::size_t p = 0; p < rhs.coefficients_.size(); ++p) coefficients_[p] = coefficients_[p] + rhs.coefficients_[p];
    trim();
    return *this;
  }

  DensePolynomial scaled(const T& factor) const {
    auto out = coefficients_;
    for (auto& c : out) c = c * factor;
    return DensePolynomial(std::move(out));
  }

  bool is_constant(const T& value) const {
    if (ScalarTraits<T>::is_zero(value)) return coefficients_.empty();
    return coefficients_.size() == 1 && coefficients_[0] == value;
  }

  friend bool operator==(const DensePolynomial&, const DensePolynomial&) = default;

 private:
  void trim() {
    while (!coefficients_.empty() && ScalarTraits<T>::is_zero(coefficients_.back())) coefficients_.pop_back();
  }

  std::vector<T> coefficients_;
};

/// Monic polynomial prod (x - r_i) stored with its roots.
template <Scalar T>
struct Polynomial {
  PointList<T> roots;
  DensePolynomial<T> monic;  // degree n, leading coefficient 1
};

/// Expands prod (x - r_i) one linear factor at a time; the resulting
/// coefficient of x^(n-j) is (-1)^j e_j(roots).
template <Scalar T>
Polynomial<T> coefficients_from_roots(const PointList<T>& roots) {
  auto p = DensePolynomial<T>::constant(T(1));
  for (const auto& r : roots) p.multiply_linear(r);
  return Polynomial<T>{roots, std::move(p)};
}

template <Scalar T>
struct SimpleFraction {
  T root;
  T coefficient;
};

/// 1 / prod (x - x_i) = sum c_i / (x - x_i).
template <Scalar T>
struct PartialFractionExpansion {
  std::vector<SimpleFraction<T>> terms;

  std::size_t degree() const { return terms.size(); }

  /// sum c_i / (x - x_i); x must not be a root.
  T evaluate(const T& x) const {
    T sum(0);
    for (const auto& t : terms) sum = sum + t.coefficient / (x - t.root);
    return sum;
  }
};

template <Scalar T>
void require_distinct_roots(const PointList<T>& roots) {
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (roots[i] == roots[j]) {
        throw DuplicateRoot("roots " + std::to_string(i) + " and " + std::to_string(j) + " coincide (" +
                            ScalarTraits<T>::to_string(roots[i]) + "); expansion needs simple roots");
      }
    }
  }
}

/// c_i = 1 / prod_{j != i} (x_i - x_j). Throws DuplicateRoot.
template <Scalar T>
PartialFractionExpansion<T> expand_reciprocal(const PointList<T>& roots) {
  require_distinct_roots(roots);
  PartialFractionExpansion<T> out;
  out.terms.reserve(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    T denom(1);
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (j != i) denom = denom * (roots[i] - roots[j]);
    }
    out.terms.push_back({roots[i], T(1) / denom});
  }
  return out;
}

/// sum c_i prod_{j != i} (x - x_j) in coefficient form. For a valid
/// expansion this is the constant polynomial 1.
template <Scalar T>
DensePolynomial<T> recombine(const PartialFractionExpansion<T>& expansion) {
  DensePolynomial<T> sum;
  const auto& terms = expansion.terms;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    auto cofactor = DensePolynomial<T>::constant(terms[i].coefficient);
    for (std::size_t j = 0; j < terms.size(); ++j) {
      if (j != i) cofactor.multiply_linear(terms[j].root);
    }
    sum += cofactor;
  }
  return sum;
}

}  // namespace narydiff
