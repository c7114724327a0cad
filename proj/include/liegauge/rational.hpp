#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace liegauge {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p" or "p/q" (optional leading sign).
Rational parse_rational(const std::string& text);

/// Dense row-major matrix over the rationals, used for basis matrices and
/// exact linear algebra on small systems.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  bool operator==(const QMatrix& other) const;

  QMatrix operator+(const QMatrix& other) const;
  QMatrix operator-(const QMatrix& other) const;
  QMatrix operator*(const QMatrix& other) const;
  QMatrix operator*(const Rational& s) const;
  QMatrix transpose() const;

  /// Throws std::domain_error when singular.
  QMatrix inverse() const;
  std::size_t rank() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

inline QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(QMatrix& m);

/// Solves m·x = rhs exactly.  Free variables are set to zero.  Returns
/// false when the system is inconsistent.
bool solve_particular(const QMatrix& m, const std::vector<Rational>& rhs, std::vector<Rational>& x);

}  // namespace liegauge
