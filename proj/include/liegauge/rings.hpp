#pragma once

#include <cstddef>
#include <vector>

#include "liegauge/difffrac.hpp"
#include "liegauge/triangular.hpp"

namespace liegauge {

// Coefficient ring policies.  Each one fixes a value type and supplies the
// derivation, a canonical form and the zero test, optionally modulo a
// triangular system.

struct PolyRing {
  using value_type = DiffPoly;

  const TriangularSystem* sys = nullptr;

  DiffPoly normalize(const DiffPoly& p) const { return sys ? sys->reduce(p) : p; }
  DiffPoly derive(const DiffPoly& p) const { return normalize(liegauge::derive(p)); }
  bool is_zero(const DiffPoly& p) const { return normalize(p).is_zero(); }
};

struct FracRing {
  using value_type = DiffFrac;

  Reducer red;

  static FracRing modulo(const TriangularSystem& sys) {
    return {[sys](const DiffPoly& p) { return sys.reduce(p); }};
  }

  DiffFrac normalize(const DiffFrac& f) const { return red ? f.reduced(red) : f; }
  DiffFrac derive(const DiffFrac& f) const { return liegauge::derive(f, red); }
  bool is_zero(const DiffFrac& f) const { return red ? red(f.numerator()).is_zero() : f.is_zero(); }
};

/// Dense matrix over a coefficient type whose default value is zero.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from(const QMatrix& q) {
    Matrix m(q.rows(), q.cols());
    for (std::size_t i = 0; i < q.rows(); ++i)
      for (std::size_t j = 0; j < q.cols(); ++j)
        if (q(i, j) != 0) m(i, j) = T(q(i, j));
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t k = 0; k < a.data_.size(); ++k)
      if (!b.data_[k].is_zero()) a.data_[k] = a.data_[k] + b.data_[k];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (std::size_t k = 0; k < a.data_.size(); ++k)
      if (!b.data_[k].is_zero()) a.data_[k] = a.data_[k] - b.data_[k];
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& y = b(k, j);
          if (!y.is_zero()) r(i, j) = r(i, j) + x * y;
        }
      }
    return r;
  }
  Matrix scaled(const T& s) const {
    Matrix r(*this);
    for (auto& x : r.data_)
      if (!x.is_zero()) x = x * s;
    return r;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T, class Ring>
Matrix<T> derive(const Matrix<T>& m, const Ring& ring) {
  Matrix<T> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) r(i, j) = ring.derive(m(i, j));
  return r;
}

template <class T>
T power(const T& x, unsigned e) {
  T r(1);
  for (unsigned k = 0; k < e; ++k) r = r * x;
  return r;
}

}  // namespace liegauge
