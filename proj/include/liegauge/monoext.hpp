#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "liegauge/rings.hpp"

namespace liegauge {

/// Symbols h_1..h_l bound to fractions, with h_j'/h_j precomputed.
struct ExtContext {
  std::vector<DiffFrac> h;
  std::vector<DiffFrac> logder;
  FracRing ring;

  static std::shared_ptr<const ExtContext> make(std::vector<DiffFrac> h, FracRing ring);
};

/// Finite sum of h^q * c with q in Q^l and c a fraction.  Exponents are kept
/// with entries in [0, 1); integral parts are moved into the coefficient, and
/// the zero exponent is stored as the empty vector.
class ExtElem {
 public:
  using Exponent = std::vector<Rational>;

  ExtElem() = default;
  ExtElem(const DiffFrac& c);  // NOLINT(google-explicit-constructor)
  ExtElem(const DiffPoly& c) : ExtElem(DiffFrac(c)) {}  // NOLINT(google-explicit-constructor)
  ExtElem(const Rational& c) : ExtElem(DiffFrac(c)) {}  // NOLINT(google-explicit-constructor)
  ExtElem(long c) : ExtElem(DiffFrac(c)) {}              // NOLINT(google-explicit-constructor)
  ExtElem(int c) : ExtElem(DiffFrac(c)) {}               // NOLINT(google-explicit-constructor)

  static ExtElem monomial(std::shared_ptr<const ExtContext> ctx, const Exponent& q, const DiffFrac& c = DiffFrac(1));

  const std::map<Exponent, DiffFrac>& terms() const { return terms_; }
  const std::shared_ptr<const ExtContext>& context() const { return ctx_; }
  bool is_zero() const { return terms_.empty(); }
  /// The coefficient when only the zero exponent occurs.
  std::optional<DiffFrac> base_value() const;

  ExtElem operator-() const;
  friend ExtElem operator+(const ExtElem& a, const ExtElem& b);
  friend ExtElem operator-(const ExtElem& a, const ExtElem& b) { return a + (-b); }
  friend ExtElem operator*(const ExtElem& a, const ExtElem& b);

 private:
  void add_term(Exponent q, DiffFrac c);

  std::shared_ptr<const ExtContext> ctx_;
  std::map<Exponent, DiffFrac> terms_;
};

struct ExtRing {
  using value_type = ExtElem;

  std::shared_ptr<const ExtContext> ctx;

  ExtElem normalize(const ExtElem& e) const;
  /// (h^q c)' = h^q (c' + c * sum q_j h_j'/h_j).
  ExtElem derive(const ExtElem& e) const;
  bool is_zero(const ExtElem& e) const;
};

}  // namespace liegauge
