#include "liegauge/difffrac.hpp"

#include <algorithm>
#include <stdexcept>

namespace liegauge {

int compare_polys(const DiffPoly& a, const DiffPoly& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  auto ia = ta.rbegin();
  auto ib = tb.rbegin();
  for (; ia != ta.rend() && ib != tb.rend(); ++ia, ++ib) {
    if (int c = compare_monomials(ia->mono, ib->mono); c != 0) return c;
    if (ia->coef != ib->coef) return ia->coef < ib->coef ? -1 : 1;
  }
  if (ia != ta.rend()) return 1;
  if (ib != tb.rend()) return -1;
  return 0;
}

Rational make_primitive(DiffPoly& p) {
  if (p.is_zero()) return Rational(1);
  const Rational c = p.content();
  p *= Rational(1) / c;
  return c;
}

namespace {

bool maybe_divides(const DiffPoly& base, const DiffPoly& num) {
  const auto nd = num.derivatives();
  for (const auto& v : base.derivatives()) {
    if (!nd.count(v) || num.degree_in(v) < base.degree_in(v)) return false;
  }
  return true;
}

}  // namespace

DiffFrac::DiffFrac(DiffPoly num) : num_(std::move(num)) {}

DiffFrac::DiffFrac(const DiffPoly& num, const DiffPoly& den) : num_(num) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (den.is_constant()) {
    num_ *= Rational(1) / den.constant_value();
    return;
  }
  add_factor(den, 1);
  cancel();
}

void DiffFrac::add_factor(DiffPoly base, std::uint32_t e) {
  if (e == 0) return;
  if (base.is_zero()) throw std::domain_error("zero denominator");
  std::vector<DiffPoly> parts;
  const Monomial mc = base.monomial_content();
  if (!mc.empty()) {
    for (const auto& f : mc) {
      for (std::uint32_t k = 0; k < f.second; ++k) parts.emplace_back(f.first);
    }
    base = base.divide_monomial(mc);
  }
  const Rational c = base.is_constant() ? base.constant_value() : make_primitive(base);
  for (std::uint32_t k = 0; k < e; ++k) num_ *= Rational(1) / c;
  if (!base.is_constant()) parts.push_back(std::move(base));
  for (auto& b : parts) {
    auto it = std::lower_bound(den_.begin(), den_.end(), b,
                               [](const Factor& f, const DiffPoly& x) { return compare_polys(f.first, x) < 0; });
    if (it != den_.end() && it->first == b) {
      it->second += e;
    } else {
      den_.insert(it, {std::move(b), e});
    }
  }
}

DiffFrac DiffFrac::from_factors(DiffPoly num, const std::vector<Factor>& den) {
  DiffFrac r(std::move(num));
  for (const auto& [b, e] : den) r.add_factor(b, e);
  r.cancel();
  return r;
}

void DiffFrac::cancel() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto& [b, e] : den_) {
    while (e > 0 && maybe_divides(b, num_)) {
      auto q = num_.divide_exact(b);
      if (!q) break;
      num_ = std::move(*q);
      --e;
    }
  }
  den_.erase(std::remove_if(den_.begin(), den_.end(), [](const Factor& f) { return f.second == 0; }), den_.end());
}

DiffPoly DiffFrac::denominator() const {
  DiffPoly d(1);
  for (const auto& [b, e] : den_) d *= b.pow(e);
  return d;
}

DiffFrac DiffFrac::operator-() const {
  DiffFrac r(*this);
  r.num_ = -r.num_;
  return r;
}

DiffFrac operator+(const DiffFrac& a, const DiffFrac& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.empty() && b.den_.empty()) return DiffFrac(a.num_ + b.num_);
  DiffFrac r;
  DiffPoly ma(1);
  DiffPoly mb(1);
  auto ia = a.den_.begin();
  auto ib = b.den_.begin();
  while (ia != a.den_.end() || ib != b.den_.end()) {
    int c = 0;
    if (ia == a.den_.end()) c = 1;
    else if (ib == b.den_.end()) c = -1;
    else c = compare_polys(ia->first, ib->first);
    if (c < 0) {
      mb *= ia->first.pow(ia->second);
      r.den_.push_back(*ia++);
    } else if (c > 0) {
      ma *= ib->first.pow(ib->second);
      r.den_.push_back(*ib++);
    } else {
      const std::uint32_t e = std::max(ia->second, ib->second);
      if (e > ia->second) ma *= ia->first.pow(e - ia->second);
      if (e > ib->second) mb *= ib->first.pow(e - ib->second);
      r.den_.push_back({ia->first, e});
      ++ia;
      ++ib;
    }
  }
  r.num_ = a.num_ * ma + b.num_ * mb;
  r.cancel();
  return r;
}

DiffFrac operator*(const DiffFrac& a, const DiffFrac& b) {
  if (a.is_zero() || b.is_zero()) return {};
  DiffFrac r;
  r.num_ = a.num_ * b.num_;
  r.den_ = a.den_;
  for (const auto& [base, e] : b.den_) {
    auto it = std::lower_bound(r.den_.begin(), r.den_.end(), base, [](const DiffFrac::Factor& f, const DiffPoly& x) {
      return compare_polys(f.first, x) < 0;
    });
    if (it != r.den_.end() && it->first == base) {
      it->second += e;
    } else {
      r.den_.insert(it, {base, e});
    }
  }
  if (!a.den_.empty() || !b.den_.empty()) r.cancel();
  return r;
}

DiffFrac DiffFrac::inverse() const {
  if (num_.is_zero()) throw std::domain_error("inverse of zero fraction");
  DiffFrac r;
  r.num_ = denominator();
  if (num_.is_constant()) {
    r.num_ *= Rational(1) / num_.constant_value();
  } else {
    r.add_factor(num_, 1);
  }
  return r;
}

DiffFrac DiffFrac::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  DiffFrac r(1);
  for (long k = 0; k < e; ++k) r *= *this;
  return r;
}

bool DiffFrac::equals(const DiffFrac& other, const Reducer& red) const {
  DiffPoly lhs = num_ * other.denominator();
  DiffPoly rhs = other.num_ * denominator();
  DiffPoly d = lhs - rhs;
  if (red) d = red(d);
  return d.is_zero();
}

DiffFrac DiffFrac::reduced(const Reducer& red) const {
  if (!red) return *this;
  DiffFrac r;
  r.num_ = red(num_);
  for (const auto& [b, e] : den_) {
    DiffPoly rb = red(b);
    if (rb.is_zero()) throw std::domain_error("denominator factor reduces to zero");
    r.add_factor(std::move(rb), e);
  }
  r.cancel();
  return r;
}

DiffFrac derive(const DiffFrac& f, const Reducer& red) {
  if (f.is_polynomial()) {
    DiffPoly d = derive(f.numerator());
    return DiffFrac(red ? red(d) : d);
  }
  const auto& den = f.factors();
  DiffPoly radical(1);
  for (const auto& fac : den) radical *= fac.first;
  DiffPoly num = derive(f.numerator()) * radical;
  for (std::size_t i = 0; i < den.size(); ++i) {
    DiffPoly others(1);
    for (std::size_t j = 0; j < den.size(); ++j)
      if (j != i) others *= den[j].first;
    num -= f.numerator() * derive(den[i].first) * others * Rational(den[i].second);
  }
  if (red) num = red(num);
  std::vector<DiffFrac::Factor> full = den;
  for (auto& fac : full) fac.second += 1;
  return DiffFrac::from_factors(std::move(num), full);
}

}  // namespace liegauge
