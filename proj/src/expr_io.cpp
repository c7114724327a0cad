#include "liegauge/expr_io.hpp"

#include <cctype>

namespace liegauge {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  DiffFrac parse_all() {
    DiffFrac e = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
    return e;
  }

  Derivative derivative_only() {
    skip();
    Derivative v = variable();
    skip();
    if (pos_ != s_.size()) throw ParseError("trailing input after derivative", pos_);
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", pos_);
    return s_.substr(start, pos_ - start);
  }

  std::uint32_t small_int() {
    const std::size_t at = pos_;
    const std::string d = digits();
    if (d.size() > 6) throw ParseError("integer too large", at);
    return static_cast<std::uint32_t>(std::stoul(d));
  }

  DiffFrac expr() {
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    DiffFrac acc = term();
    if (neg) acc = -acc;
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  DiffFrac term() {
    DiffFrac acc = factor();
    while (true) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        DiffFrac d = factor();
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc = acc / d;
      } else {
        break;
      }
    }
    return acc;
  }

  DiffFrac factor() {
    DiffFrac base = primary();
    while (peek('^')) {
      ++pos_;
      base = base.pow(static_cast<long>(small_int()));
    }
    return base;
  }

  DiffFrac primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      DiffFrac e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return DiffFrac(DiffPoly(Rational(mpz_class(digits()))));
    }
    return DiffFrac(DiffPoly(variable()));
  }

  Derivative variable() {
    skip();
    const std::size_t start = pos_;
    static const std::pair<const char*, IndetClass> kPrefixes[] = {
        {"ap", IndetClass::a_plus}, {"am", IndetClass::a_minus}, {"a0", IndetClass::a_zero}, {"b", IndetClass::b},
        {"r", IndetClass::r},       {"t", IndetClass::t},        {"y", IndetClass::y},      {"x", IndetClass::aux}};
    for (const auto& [pre, cls] : kPrefixes) {
      const std::string p = std::string(pre) + "_";
      if (s_.compare(pos_, p.size(), p) == 0) {
        pos_ += p.size();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          throw ParseError("expected index", pos_);
        }
        const std::uint32_t idx = small_int();
        if (idx == 0) throw ParseError("indices start at 1", start);
        Derivative v{{cls, idx}, 0};
        if (pos_ + 1 < s_.size() && s_[pos_] == '^' && s_[pos_ + 1] == '(') {
          pos_ += 2;
          v.order = small_int();
          expect(')');
        } else {
          while (pos_ < s_.size() && s_[pos_] == '\'') {
            ++v.order;
            ++pos_;
          }
        }
        return v;
      }
    }
    throw ParseError("unknown symbol", start);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

std::string mono_text(const Monomial& m) {
  std::string out;
  for (const auto& [v, e] : m) {
    if (!out.empty()) out += "*";
    out += to_text(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

DiffFrac parse_frac(const std::string& text) { return Parser(text).parse_all(); }

DiffPoly parse_poly(const std::string& text) {
  DiffFrac f = parse_frac(text);
  if (!f.is_polynomial()) throw ParseError("expression is not a polynomial", 0);
  return f.numerator();
}

Derivative parse_derivative(const std::string& text) { return Parser(text).derivative_only(); }

std::string to_text(const Derivative& v) {
  std::string s = to_string(v.indet);
  if (v.order > 0) s += "^(" + std::to_string(v.order) + ")";
  return s;
}

std::string to_text(const DiffPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& ts = p.terms();
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    const bool neg = it->coef < 0;
    const Rational mag = neg ? Rational(-it->coef) : it->coef;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (it->mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono_text(it->mono);
    } else {
      out += mag.get_str() + "*" + mono_text(it->mono);
    }
  }
  return out;
}

std::string to_text(const DiffFrac& f) {
  if (f.is_polynomial()) return to_text(f.numerator());
  std::string den;
  for (const auto& [b, e] : f.factors()) {
    if (!den.empty()) den += "*";
    den += "(" + to_text(b) + ")";
    if (e > 1) den += "^" + std::to_string(e);
  }
  return "(" + to_text(f.numerator()) + ")/(" + den + ")";
}

nlohmann::json to_json(const Rational& q) { return q.get_str(); }

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return parse_rational(j.get<std::string>());
}

nlohmann::json to_json(const DiffPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  const auto& ts = p.terms();
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& [v, e] : it->mono) {
      factors.push_back({{"type", "power"},
                         {"base",
                          {{"type", "derivative"},
                           {"indet", to_string(v.indet)},
                           {"class", class_prefix(v.indet.cls)},
                           {"index", v.indet.index},
                           {"order", v.order}}},
                         {"exp", e}});
    }
    terms.push_back({{"type", "term"}, {"coef", to_json(it->coef)}, {"factors", factors}});
  }
  return {{"type", "sum"}, {"text", to_text(p)}, {"terms", terms}};
}

nlohmann::json to_json(const DiffFrac& f) {
  if (f.is_polynomial()) return to_json(f.numerator());
  nlohmann::json den = nlohmann::json::array();
  for (const auto& [b, e] : f.factors()) den.push_back({{"type", "power"}, {"base", to_json(b)}, {"exp", e}});
  return {{"type", "fraction"}, {"text", to_text(f)}, {"num", to_json(f.numerator())}, {"den", den}};
}

DiffPoly poly_from_json(const nlohmann::json& j) {
  if (j.at("type") != "sum") throw std::invalid_argument("expected sum node");
  std::vector<Term> terms;
  for (const auto& t : j.at("terms")) {
    Term term;
    term.coef = rational_from_json(t.at("coef"));
    for (const auto& f : t.at("factors")) {
      const auto& b = f.at("base");
      const Derivative v = parse_derivative(b.at("indet").get<std::string>());
      term.mono = multiply(term.mono, Monomial{{Derivative{v.indet, b.at("order").get<std::uint32_t>()}, f.at("exp").get<std::uint32_t>()}});
    }
    terms.push_back(std::move(term));
  }
  return DiffPoly::from_terms(std::move(terms));
}

DiffFrac frac_from_json(const nlohmann::json& j) {
  if (j.at("type") == "sum") return DiffFrac(poly_from_json(j));
  if (j.at("type") != "fraction") throw std::invalid_argument("expected fraction node");
  std::vector<DiffFrac::Factor> den;
  for (const auto& f : j.at("den")) den.emplace_back(poly_from_json(f.at("base")), f.at("exp").get<std::uint32_t>());
  return DiffFrac::from_factors(poly_from_json(j.at("num")), den);
}

}  // namespace liegauge
