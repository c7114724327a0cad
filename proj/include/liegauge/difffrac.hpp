#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "liegauge/diffpoly.hpp"

namespace liegauge {

/// Maps a polynomial to a canonical representative (e.g. a normal form
/// modulo a triangular system).  An empty function is the identity.
using Reducer = std::function<DiffPoly(const DiffPoly&)>;

/// Total order on polynomials used to sort denominator factors.
int compare_polys(const DiffPoly& a, const DiffPoly& b);

/// Scales p so that its coefficients are coprime integers with positive
/// leading coefficient; returns the factor removed (p = factor * primitive).
Rational make_primitive(DiffPoly& p);

/// Differential fraction num / prod(base_i^e_i).  Bases are primitive,
/// nonconstant and pairwise distinct; the denominator constant is folded
/// into the numerator.  Common factors are cancelled when a base divides the
/// numerator exactly.  Representation is not canonical; use equals().
class DiffFrac {
 public:
  using Factor = std::pair<DiffPoly, std::uint32_t>;

  DiffFrac() = default;
  DiffFrac(DiffPoly num);  // NOLINT(google-explicit-constructor)
  DiffFrac(const Rational& c) : DiffFrac(DiffPoly(c)) {}  // NOLINT(google-explicit-constructor)
  DiffFrac(long c) : DiffFrac(DiffPoly(c)) {}  // NOLINT(google-explicit-constructor)
  DiffFrac(int c) : DiffFrac(DiffPoly(c)) {}   // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error on a zero denominator.
  DiffFrac(const DiffPoly& num, const DiffPoly& den);

  /// num / prod(base^e); bases need not be primitive.
  static DiffFrac from_factors(DiffPoly num, const std::vector<Factor>& den);

  const DiffPoly& numerator() const { return num_; }
  const std::vector<Factor>& factors() const { return den_; }
  DiffPoly denominator() const;
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }

  DiffFrac operator-() const;
  friend DiffFrac operator+(const DiffFrac& a, const DiffFrac& b);
  friend DiffFrac operator-(const DiffFrac& a, const DiffFrac& b) { return a + (-b); }
  friend DiffFrac operator*(const DiffFrac& a, const DiffFrac& b);
  friend DiffFrac operator/(const DiffFrac& a, const DiffFrac& b) { return a * b.inverse(); }
  DiffFrac& operator+=(const DiffFrac& b) { return *this = *this + b; }
  DiffFrac& operator-=(const DiffFrac& b) { return *this = *this - b; }
  DiffFrac& operator*=(const DiffFrac& b) { return *this = *this * b; }

  /// Throws std::domain_error when zero.
  DiffFrac inverse() const;
  DiffFrac pow(long e) const;

  /// Cross-multiplication test (after reduction when a reducer is given).
  bool equals(const DiffFrac& other, const Reducer& red = {}) const;

  /// Applies red to the numerator and every base.  Throws std::domain_error
  /// if a base reduces to zero.
  DiffFrac reduced(const Reducer& red) const;

 private:
  void add_factor(DiffPoly base, std::uint32_t e);
  void cancel();

  DiffPoly num_;
  std::vector<Factor> den_;
};

/// Quotient rule; the result is passed through red when given.
DiffFrac derive(const DiffFrac& f, const Reducer& red = {});

}  // namespace liegauge
