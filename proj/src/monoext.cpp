#include "liegauge/monoext.hpp"

#include <stdexcept>

namespace liegauge {

std::shared_ptr<const ExtContext> ExtContext::make(std::vector<DiffFrac> h, FracRing ring) {
  auto ctx = std::make_shared<ExtContext>();
  for (const auto& x : h) {
    if (ring.is_zero(x)) throw std::domain_error("bound symbol is zero");
    ctx->logder.push_back(ring.normalize(ring.derive(x) / x));
  }
  ctx->h = std::move(h);
  ctx->ring = std::move(ring);
  return ctx;
}

ExtElem::ExtElem(const DiffFrac& c) {
  if (!c.is_zero()) terms_.emplace(Exponent{}, c);
}

ExtElem ExtElem::monomial(std::shared_ptr<const ExtContext> ctx, const Exponent& q, const DiffFrac& c) {
  ExtElem e;
  e.ctx_ = std::move(ctx);
  e.add_term(q, c);
  return e;
}

std::optional<DiffFrac> ExtElem::base_value() const {
  if (terms_.empty()) return DiffFrac();
  if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
  return std::nullopt;
}

void ExtElem::add_term(Exponent q, DiffFrac c) {
  if (c.is_zero()) return;
  bool all_zero = true;
  for (std::size_t j = 0; j < q.size(); ++j) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q[j].get_num_mpz_t(), q[j].get_den_mpz_t());
    if (fl != 0) {
      if (!ctx_) throw std::logic_error("exponent without bound symbols");
      c *= ctx_->h[j].pow(fl.get_si());
      q[j] -= Rational(fl);
    }
    if (q[j] != 0) all_zero = false;
  }
  if (all_zero) q.clear();
  auto it = terms_.find(q);
  if (it == terms_.end()) {
    terms_.emplace(std::move(q), std::move(c));
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

ExtElem ExtElem::operator-() const {
  ExtElem r(*this);
  for (auto& [q, c] : r.terms_) c = -c;
  return r;
}

ExtElem operator+(const ExtElem& a, const ExtElem& b) {
  if (a.is_zero()) return b;
  ExtElem r(a);
  if (!r.ctx_) r.ctx_ = b.ctx_;
  for (const auto& [q, c] : b.terms_) r.add_term(q, c);
  return r;
}

ExtElem operator*(const ExtElem& a, const ExtElem& b) {
  ExtElem r;
  r.ctx_ = a.ctx_ ? a.ctx_ : b.ctx_;
  for (const auto& [qa, ca] : a.terms_)
    for (const auto& [qb, cb] : b.terms_) {
      ExtElem::Exponent q = qa.size() >= qb.size() ? qa : qb;
      const ExtElem::Exponent& other = qa.size() >= qb.size() ? qb : qa;
      for (std::size_t j = 0; j < other.size(); ++j) q[j] += other[j];
      r.add_term(std::move(q), ca * cb);
    }
  return r;
}

ExtElem ExtRing::normalize(const ExtElem& e) const {
  ExtElem r;
  for (const auto& [q, c] : e.terms()) {
    const DiffFrac n = ctx->ring.normalize(c);
    if (!ctx->ring.is_zero(n)) r = r + ExtElem::monomial(ctx, q, n);
  }
  return r;
}

ExtElem ExtRing::derive(const ExtElem& e) const {
  ExtElem r;
  for (const auto& [q, c] : e.terms()) {
    DiffFrac d = ctx->ring.derive(c);
    for (std::size_t j = 0; j < q.size(); ++j)
      if (q[j] != 0) d += c * ctx->logder[j] * DiffFrac(q[j]);
    r = r + ExtElem::monomial(ctx, q, d);
  }
  return r;
}

bool ExtRing::is_zero(const ExtElem& e) const {
  for (const auto& [q, c] : e.terms())
    if (!ctx->ring.is_zero(c)) return false;
  return true;
}

}  // namespace liegauge
