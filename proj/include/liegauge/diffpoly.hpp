#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "liegauge/rational.hpp"

namespace liegauge {

/// Indeterminate families.  `aux` is printed as `x_i`.
enum class IndetClass : std::uint8_t { a_plus, a_minus, a_zero, b, r, t, y, aux };

const char* class_prefix(IndetClass c);

struct DiffIndet {
  IndetClass cls = IndetClass::aux;
  std::uint32_t index = 1;

  auto operator<=>(const DiffIndet&) const = default;
};

inline DiffIndet ap(std::uint32_t i) { return {IndetClass::a_plus, i}; }
inline DiffIndet am(std::uint32_t i) { return {IndetClass::a_minus, i}; }
inline DiffIndet a0(std::uint32_t i) { return {IndetClass::a_zero, i}; }
inline DiffIndet bv(std::uint32_t i) { return {IndetClass::b, i}; }
inline DiffIndet rv(std::uint32_t i) { return {IndetClass::r, i}; }
inline DiffIndet tv(std::uint32_t i) { return {IndetClass::t, i}; }
inline DiffIndet yv(std::uint32_t i) { return {IndetClass::y, i}; }
inline DiffIndet xv(std::uint32_t i) { return {IndetClass::aux, i}; }

/// A derivative ∂^order u.  The natural order (class, index, order) is the
/// variable order used for canonical term storage; it is unrelated to rankings.
struct Derivative {
  DiffIndet indet;
  std::uint32_t order = 0;

  auto operator<=>(const Derivative&) const = default;
  Derivative prime(std::uint32_t k = 1) const { return {indet, order + k}; }
};

std::string to_string(const DiffIndet& u);
std::string to_string(const Derivative& v);

/// Power product of derivatives, sorted ascending by Derivative, exponents > 0.
using Monomial = std::vector<std::pair<Derivative, std::uint32_t>>;

/// Lexicographic monomial order giving priority to the largest derivative.
/// Multiplicative, so leading terms behave under products.
int compare_monomials(const Monomial& a, const Monomial& b);
Monomial multiply(const Monomial& a, const Monomial& b);
std::uint32_t total_degree(const Monomial& m);

struct Term {
  Monomial mono;
  Rational coef;
};

/// Sparse differential polynomial with rational coefficients.  Terms are kept
/// sorted ascending by compare_monomials with no zero coefficients, so
/// structural equality is mathematical equality.
class DiffPoly {
 public:
  DiffPoly() = default;
  DiffPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  DiffPoly(long c) : DiffPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  DiffPoly(int c) : DiffPoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)
  explicit DiffPoly(const Derivative& v, std::uint32_t power = 1);
  explicit DiffPoly(const DiffIndet& u) : DiffPoly(Derivative{u, 0}) {}

  /// Builds from arbitrary terms (unsorted, possibly repeated or zero).
  static DiffPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.empty()); }
  /// Value of a constant polynomial (throws otherwise).
  Rational constant_value() const;
  /// Constant term (coefficient of the empty monomial).
  Rational constant_term() const;
  /// Largest term under compare_monomials; throws on zero.
  const Term& leading_term() const;

  bool operator==(const DiffPoly& other) const;
  bool operator!=(const DiffPoly& other) const { return !(*this == other); }

  DiffPoly operator-() const;
  DiffPoly& operator+=(const DiffPoly& other);
  DiffPoly& operator-=(const DiffPoly& other);
  DiffPoly& operator*=(const DiffPoly& other);
  DiffPoly& operator*=(const Rational& s);
  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator*(DiffPoly a, const Rational& s) { return a *= s; }
  friend DiffPoly operator*(const Rational& s, DiffPoly a) { return a *= s; }

  DiffPoly pow(std::uint32_t e) const;

  /// All derivatives occurring, ascending.
  std::set<Derivative> derivatives() const;
  std::set<DiffIndet> indeterminates() const;
  bool contains(const Derivative& v) const;
  bool contains(const DiffIndet& u) const;
  std::uint32_t degree_in(const Derivative& v) const;
  /// Coefficient of v^k, viewing the polynomial in v.
  DiffPoly coefficient(const Derivative& v, std::uint32_t k) const;
  /// Formal partial derivative with respect to v.
  DiffPoly partial(const Derivative& v) const;
  /// Exact division by a monomial-free polynomial, or nullopt when not divisible.
  std::optional<DiffPoly> divide_exact(const DiffPoly& divisor) const;

  /// Least common multiple of coefficient denominators divided by gcd of numerators.
  Rational content() const;
  /// Largest monomial dividing every term.
  Monomial monomial_content() const;
  DiffPoly divide_monomial(const Monomial& m) const;

 private:
  std::vector<Term> terms_;
};

DiffPoly monomial_poly(const Monomial& m, const Rational& c = Rational(1));

/// Formal derivation ∂^times.  Rational constants are killed.
DiffPoly derive(const DiffPoly& p, std::uint32_t times = 1);

/// Maximal order of u in p, or nullopt when u does not occur (the −∞ marker).
std::optional<std::uint32_t> order_in(const DiffPoly& p, const DiffIndet& u);

/// Differential substitution: each indeterminate u in the map is replaced by
/// the image, and ∂^k u by ∂^k(image).  Unmapped indeterminates are kept.
DiffPoly substitute(const DiffPoly& p, const std::map<DiffIndet, DiffPoly>& images);

/// Replaces whole derivatives (no differentiation of images).
DiffPoly substitute_derivatives(const DiffPoly& p, const std::function<std::optional<DiffPoly>(const Derivative&)>& image);

/// Ranking: a total order on derivatives compatible with differentiation.
///
/// Classes are grouped into blocks (earlier blocks rank higher).  Within a
/// block an orderly ranking compares order first, then the weight table
/// (e.g. root heights), then index, then class (a_plus < a_zero < a_minus).
/// A non-orderly block compares the indeterminate first and order last.
/// Classes not listed form an implicit trailing orderly block.
class Ranking {
 public:
  struct Block {
    std::vector<IndetClass> classes;
    bool orderly = true;
  };

  Ranking() = default;
  Ranking(std::vector<Block> blocks, std::map<DiffIndet, int> weights = {});

  /// A single orderly block over every class.
  static Ranking orderly();
  /// Elimination {b} >> {a+, a-, a0}, orderly on both blocks; b_i is
  /// weighted by the height of the i-th positive root.
  static Ranking adapted(const std::vector<int>& positive_heights);

  /// Strict comparison u > v.
  bool greater(const Derivative& u, const Derivative& v) const;
  std::strong_ordering compare(const Derivative& u, const Derivative& v) const;

  const std::vector<Block>& blocks() const { return blocks_; }
  int weight(const DiffIndet& u) const;

 private:
  std::size_t block_of(IndetClass c) const;

  std::vector<Block> blocks_;
  std::map<DiffIndet, int> weights_;
};

/// Error raised when a leader, initial or separant of a constant is requested.
class ConstantPolynomialError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Derivative leader(const DiffPoly& p, const Ranking& rk);
DiffPoly initial(const DiffPoly& p, const Ranking& rk);
DiffPoly separant(const DiffPoly& p, const Ranking& rk);

}  // namespace liegauge
