#include "liegauge/diffpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace liegauge {

const char* class_prefix(IndetClass c) {
  switch (c) {
    case IndetClass::a_plus: return "ap";
    case IndetClass::a_minus: return "am";
    case IndetClass::a_zero: return "a0";
    case IndetClass::b: return "b";
    case IndetClass::r: return "r";
    case IndetClass::t: return "t";
    case IndetClass::y: return "y";
    case IndetClass::aux: return "x";
  }
  return "?";
}

std::string to_string(const DiffIndet& u) { return std::string(class_prefix(u.cls)) + "_" + std::to_string(u.index); }

std::string to_string(const Derivative& v) {
  std::string s = to_string(v.indet);
  if (v.order > 0) s += "^(" + std::to_string(v.order) + ")";
  return s;
}

int compare_monomials(const Monomial& a, const Monomial& b) {
  auto ia = a.rbegin();
  auto ib = b.rbegin();
  for (; ia != a.rend() && ib != b.rend(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first > ib->first ? 1 : -1;
    if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
  }
  if (ia != a.rend()) return 1;
  if (ib != b.rend()) return -1;
  return 0;
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.push_back(*ib++);
    } else {
      out.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return out;
}

std::uint32_t total_degree(const Monomial& m) {
  std::uint32_t d = 0;
  for (const auto& f : m) d += f.second;
  return d;
}

namespace {

bool mono_less(const Term& x, const Term& y) { return compare_monomials(x.mono, y.mono) < 0; }

// Removes the factor v^k from m; assumes presence.
Monomial lower(const Monomial& m, const Derivative& v, std::uint32_t k) {
  Monomial out;
  for (const auto& f : m) {
    if (f.first == v) {
      if (f.second > k) out.emplace_back(v, f.second - k);
    } else {
      out.push_back(f);
    }
  }
  return out;
}

bool divides(const Monomial& d, const Monomial& m) {
  auto im = m.begin();
  for (const auto& f : d) {
    while (im != m.end() && im->first < f.first) ++im;
    if (im == m.end() || im->first != f.first || im->second < f.second) return false;
  }
  return true;
}

Monomial quotient(const Monomial& m, const Monomial& d) {
  Monomial out;
  auto id = d.begin();
  for (const auto& f : m) {
    if (id != d.end() && id->first == f.first) {
      if (f.second > id->second) out.emplace_back(f.first, f.second - id->second);
      ++id;
    } else {
      out.push_back(f);
    }
  }
  return out;
}

}  // namespace

DiffPoly::DiffPoly(const Rational& c) {
  if (c != 0) terms_.push_back({{}, c});
}

DiffPoly::DiffPoly(const Derivative& v, std::uint32_t power) {
  Monomial m;
  if (power > 0) m.emplace_back(v, power);
  terms_.push_back({std::move(m), Rational(1)});
}

DiffPoly DiffPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), mono_less);
  DiffPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
      if (p.terms_.back().coef == 0) p.terms_.pop_back();
    } else if (t.coef != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

DiffPoly monomial_poly(const Monomial& m, const Rational& c) { return DiffPoly::from_terms({{m, c}}); }

Rational DiffPoly::constant_value() const {
  if (!is_constant()) throw std::invalid_argument("polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_[0].coef;
}

Rational DiffPoly::constant_term() const {
  if (!terms_.empty() && terms_[0].mono.empty()) return terms_[0].coef;
  return Rational(0);
}

const Term& DiffPoly::leading_term() const {
  if (terms_.empty()) throw std::invalid_argument("leading term of zero polynomial");
  return terms_.back();
}

bool DiffPoly::operator==(const DiffPoly& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coef != other.terms_[i].coef || terms_[i].mono != other.terms_[i].mono) return false;
  }
  return true;
}

DiffPoly DiffPoly::operator-() const {
  DiffPoly r(*this);
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& other) {
  if (other.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto ia = terms_.begin();
  auto ib = other.terms_.begin();
  while (ia != terms_.end() || ib != other.terms_.end()) {
    int c = 0;
    if (ia == terms_.end()) c = 1;
    else if (ib == other.terms_.end()) c = -1;
    else c = compare_monomials(ia->mono, ib->mono);
    if (c < 0) {
      out.push_back(std::move(*ia++));
    } else if (c > 0) {
      out.push_back(*ib++);
    } else {
      Rational s = ia->coef + ib->coef;
      if (s != 0) out.push_back({std::move(ia->mono), s});
      ++ia;
      ++ib;
    }
  }
  terms_ = std::move(out);
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& other) { return *this += -other; }

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) prod.push_back({multiply(x.mono, y.mono), x.coef * y.coef});
  }
  return DiffPoly::from_terms(std::move(prod));
}

DiffPoly& DiffPoly::operator*=(const DiffPoly& other) {
  *this = *this * other;
  return *this;
}

DiffPoly& DiffPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= s;
  return *this;
}

DiffPoly DiffPoly::pow(std::uint32_t e) const {
  DiffPoly result(1);
  DiffPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

std::set<Derivative> DiffPoly::derivatives() const {
  std::set<Derivative> s;
  for (const auto& t : terms_)
    for (const auto& f : t.mono) s.insert(f.first);
  return s;
}

std::set<DiffIndet> DiffPoly::indeterminates() const {
  std::set<DiffIndet> s;
  for (const auto& t : terms_)
    for (const auto& f : t.mono) s.insert(f.first.indet);
  return s;
}

bool DiffPoly::contains(const Derivative& v) const {
  for (const auto& t : terms_)
    for (const auto& f : t.mono)
      if (f.first == v) return true;
  return false;
}

bool DiffPoly::contains(const DiffIndet& u) const {
  for (const auto& t : terms_)
    for (const auto& f : t.mono)
      if (f.first.indet == u) return true;
  return false;
}

std::uint32_t DiffPoly::degree_in(const Derivative& v) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_)
    for (const auto& f : t.mono)
      if (f.first == v) d = std::max(d, f.second);
  return d;
}

DiffPoly DiffPoly::coefficient(const Derivative& v, std::uint32_t k) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    std::uint32_t e = 0;
    for (const auto& f : t.mono)
      if (f.first == v) e = f.second;
    if (e == k) out.push_back({k == 0 ? t.mono : lower(t.mono, v, k), t.coef});
  }
  return from_terms(std::move(out));
}

DiffPoly DiffPoly::partial(const Derivative& v) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    for (const auto& f : t.mono) {
      if (f.first == v) out.push_back({lower(t.mono, v, 1), t.coef * f.second});
    }
  }
  return from_terms(std::move(out));
}

std::optional<DiffPoly> DiffPoly::divide_exact(const DiffPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  const Term& lt = divisor.leading_term();
  DiffPoly rem = *this;
  std::vector<Term> q;
  while (!rem.is_zero()) {
    const Term& r = rem.leading_term();
    if (!divides(lt.mono, r.mono)) return std::nullopt;
    Term t{quotient(r.mono, lt.mono), r.coef / lt.coef};
    rem -= divisor * monomial_poly(t.mono, t.coef);
    q.push_back(std::move(t));
  }
  return from_terms(std::move(q));
}

Rational DiffPoly::content() const {
  if (terms_.empty()) return Rational(1);
  mpz_class num = 0;
  mpz_class den = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coef.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coef.get_den_mpz_t());
  }
  Rational c(num, den);
  c.canonicalize();
  if (terms_.back().coef < 0) c = -c;
  return c;
}

Monomial DiffPoly::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_[0].mono;
  for (const auto& t : terms_) {
    Monomial ng;
    auto it = t.mono.begin();
    for (const auto& f : g) {
      while (it != t.mono.end() && it->first < f.first) ++it;
      if (it != t.mono.end() && it->first == f.first) ng.emplace_back(f.first, std::min(f.second, it->second));
    }
    g = std::move(ng);
    if (g.empty()) break;
  }
  return g;
}

DiffPoly DiffPoly::divide_monomial(const Monomial& m) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (!divides(m, t.mono)) throw std::invalid_argument("monomial does not divide polynomial");
    out.push_back({quotient(t.mono, m), t.coef});
  }
  return from_terms(std::move(out));
}

DiffPoly derive(const DiffPoly& p, std::uint32_t times) {
  DiffPoly cur = p;
  for (std::uint32_t k = 0; k < times; ++k) {
    std::vector<Term> out;
    for (const auto& t : cur.terms()) {
      for (const auto& f : t.mono) {
        Monomial m = lower(t.mono, f.first, 1);
        m = multiply(m, Monomial{{f.first.prime(), 1}});
        out.push_back({std::move(m), t.coef * f.second});
      }
    }
    cur = DiffPoly::from_terms(std::move(out));
  }
  return cur;
}

std::optional<std::uint32_t> order_in(const DiffPoly& p, const DiffIndet& u) {
  std::optional<std::uint32_t> best;
  for (const auto& t : p.terms())
    for (const auto& f : t.mono)
      if (f.first.indet == u && (!best || f.first.order > *best)) best = f.first.order;
  return best;
}

DiffPoly substitute_derivatives(const DiffPoly& p,
                                const std::function<std::optional<DiffPoly>(const Derivative&)>& image) {
  std::map<Derivative, std::optional<DiffPoly>> cache;
  DiffPoly out;
  for (const auto& t : p.terms()) {
    Monomial kept;
    DiffPoly factor(t.coef);
    for (const auto& f : t.mono) {
      auto it = cache.find(f.first);
      if (it == cache.end()) it = cache.emplace(f.first, image(f.first)).first;
      if (it->second) {
        factor *= it->second->pow(f.second);
      } else {
        kept.push_back(f);
      }
    }
    out += factor * monomial_poly(kept);
  }
  return out;
}

DiffPoly substitute(const DiffPoly& p, const std::map<DiffIndet, DiffPoly>& images) {
  std::map<Derivative, DiffPoly> derived;
  return substitute_derivatives(p, [&](const Derivative& v) -> std::optional<DiffPoly> {
    auto it = images.find(v.indet);
    if (it == images.end()) return std::nullopt;
    auto dit = derived.find(v);
    if (dit != derived.end()) return dit->second;
    std::uint32_t k = 0;
    DiffPoly cur = it->second;
    for (std::uint32_t j = v.order; j > 0; --j) {
      auto c = derived.find(Derivative{v.indet, j});
      if (c != derived.end()) {
        k = j;
        cur = c->second;
        break;
      }
    }
    for (std::uint32_t j = k; j < v.order; ++j) {
      cur = derive(cur);
      derived.emplace(Derivative{v.indet, j + 1}, cur);
    }
    return cur;
  });
}

namespace {

int class_rank(IndetClass c) {
  switch (c) {
    case IndetClass::a_plus: return 0;
    case IndetClass::a_zero: return 1;
    case IndetClass::a_minus: return 2;
    case IndetClass::b: return 3;
    case IndetClass::r: return 4;
    case IndetClass::t: return 5;
    case IndetClass::y: return 6;
    case IndetClass::aux: return 7;
  }
  return 8;
}

template <class T>
std::strong_ordering cmp(const T& a, const T& b) {
  return a <=> b;
}

}  // namespace

Ranking::Ranking(std::vector<Block> blocks, std::map<DiffIndet, int> weights)
    : blocks_(std::move(blocks)), weights_(std::move(weights)) {
  std::set<IndetClass> seen;
  for (const auto& b : blocks_) {
    for (auto c : b.classes) {
      if (!seen.insert(c).second) throw std::invalid_argument("class listed in two ranking blocks");
    }
  }
}

Ranking Ranking::orderly() {
  using C = IndetClass;
  return Ranking({{{C::a_plus, C::a_minus, C::a_zero, C::b, C::r, C::t, C::y, C::aux}, true}});
}

Ranking Ranking::adapted(const std::vector<int>& positive_heights) {
  using C = IndetClass;
  std::map<DiffIndet, int> w;
  for (std::size_t i = 0; i < positive_heights.size(); ++i) {
    const auto idx = static_cast<std::uint32_t>(i + 1);
    w[bv(idx)] = positive_heights[i];
  }
  return Ranking({{{C::b}, true}, {{C::a_plus, C::a_minus, C::a_zero}, true}}, std::move(w));
}

std::size_t Ranking::block_of(IndetClass c) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (std::find(blocks_[i].classes.begin(), blocks_[i].classes.end(), c) != blocks_[i].classes.end()) return i;
  }
  return blocks_.size();
}

int Ranking::weight(const DiffIndet& u) const {
  auto it = weights_.find(u);
  return it == weights_.end() ? 0 : it->second;
}

std::strong_ordering Ranking::compare(const Derivative& u, const Derivative& v) const {
  const std::size_t bu = block_of(u.indet.cls);
  const std::size_t bv_ = block_of(v.indet.cls);
  if (bu != bv_) return bu < bv_ ? std::strong_ordering::greater : std::strong_ordering::less;
  const bool orderly = bu == blocks_.size() || blocks_[bu].orderly;
  auto indet_cmp = [&]() {
    if (auto c = cmp(weight(u.indet), weight(v.indet)); c != 0) return c;
    if (auto c = cmp(u.indet.index, v.indet.index); c != 0) return c;
    return cmp(class_rank(u.indet.cls), class_rank(v.indet.cls));
  };
  if (orderly) {
    if (auto c = cmp(u.order, v.order); c != 0) return c;
    return indet_cmp();
  }
  if (auto c = indet_cmp(); c != 0) return c;
  return cmp(u.order, v.order);
}

bool Ranking::greater(const Derivative& u, const Derivative& v) const { return compare(u, v) > 0; }

Derivative leader(const DiffPoly& p, const Ranking& rk) {
  auto ds = p.derivatives();
  if (ds.empty()) throw ConstantPolynomialError("leader of a constant polynomial");
  Derivative best = *ds.begin();
  for (const auto& d : ds)
    if (rk.greater(d, best)) best = d;
  return best;
}

DiffPoly initial(const DiffPoly& p, const Ranking& rk) {
  const Derivative ld = leader(p, rk);
  return p.coefficient(ld, p.degree_in(ld));
}

DiffPoly separant(const DiffPoly& p, const Ranking& rk) { return p.partial(leader(p, rk)); }

}  // namespace liegauge
