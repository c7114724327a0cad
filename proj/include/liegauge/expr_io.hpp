#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "liegauge/difffrac.hpp"
#include "liegauge/diffpoly.hpp"

namespace liegauge {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::invalid_argument(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Text grammar:
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := factor (('*'|'/') factor)*
///   factor  := primary ('^' int)*
///   primary := int | var deriv | '(' expr ')'
///   var     := (ap|am|a0|b|r|t|y|x) '_' int
///   deriv   := "'"* | '^(' int ')'
/// Division by a nonconstant polynomial is only accepted by parse_frac.
DiffPoly parse_poly(const std::string& text);
DiffFrac parse_frac(const std::string& text);
Derivative parse_derivative(const std::string& text);

/// Canonical printing: terms in descending monomial order, derivatives as
/// `u_i^(k)`.  parse_poly(to_text(p)) == p.
std::string to_text(const DiffPoly& p);
std::string to_text(const DiffFrac& f);
std::string to_text(const Derivative& v);

/// Expression-tree serialization (sum / term / power / derivative nodes).
nlohmann::json to_json(const DiffPoly& p);
nlohmann::json to_json(const DiffFrac& f);
DiffPoly poly_from_json(const nlohmann::json& j);
DiffFrac frac_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

}  // namespace liegauge
