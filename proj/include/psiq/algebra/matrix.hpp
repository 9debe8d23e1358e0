#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "psiq/algebra/laurent.hpp"
#include "psiq/errors.hpp"

namespace psiq {

inline bool is_zero(const BigRational& v) { return sgn(v) == 0; }
inline BigRational exact_div(const BigRational& a, const BigRational& b) {
  if (sgn(b) == 0) throw ArithmeticError("rational division by zero");
  return a / b;
}

// Row-major square matrix over any commutative ring element type T.
template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  SquareMatrix(std::size_t n, const T& fill) : n_(n), data_(n * n, fill) {}

  std::size_t size() const { return n_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  // Matrix with row r and column c removed.
  SquareMatrix minor(std::size_t r, std::size_t c) const;

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.n_ != b.n_) throw DomainError("matrix size mismatch");
    SquareMatrix out = a;
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t j = 0; j < a.n_; ++j) {
        T acc = a(i, 0) * b(0, j);
        for (std::size_t k = 1; k < a.n_; ++k) acc = T(acc + T(a(i, k) * b(k, j)));
        out(i, j) = std::move(acc);
      }
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

template <class T>
SquareMatrix<T> SquareMatrix<T>::minor(std::size_t r, std::size_t c) const {
  SquareMatrix out;
  out.n_ = n_ - 1;
  out.data_.reserve(out.n_ * out.n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (i == r) continue;
    for (std::size_t j = 0; j < n_; ++j)
      if (j != c) out.data_.push_back((*this)(i, j));
  }
  return out;
}

// Fraction-free Gaussian elimination. Every division is exact in an
// integral domain, so only exact_div(T, T) and is_zero(T) are needed.
// `one` is the ring identity, returned for the empty matrix.
template <class T>
T determinant_bareiss(SquareMatrix<T> m, const T& one) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  T previous = one;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t swap = k + 1;
      while (swap < n && is_zero(m(swap, k))) ++swap;
      if (swap == n) return T(one - one);
      for (std::size_t c = k; c < n; ++c) std::swap(m(k, c), m(swap, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = exact_div(t, previous);
      }
    }
    previous = m(k, k);
  }
  T det = m(n - 1, n - 1);
  return negate ? T(T(one - one) - det) : det;
}

// Laplace expansion along the first row; exponential cost, used as an
// independent check for small sizes.
template <class T>
T determinant_cofactor(const SquareMatrix<T>& m, const T& one) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  if (n == 1) return m(0, 0);
  T acc = one - one;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_zero(m(0, c))) continue;
    T term = T(m(0, c) * determinant_cofactor(m.minor(0, c), one));
    acc = (c % 2 == 0) ? T(acc + term) : T(acc - term);
  }
  return acc;
}

}  // namespace psiq
