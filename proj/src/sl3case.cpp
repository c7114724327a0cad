#include "liegauge/sl3case.hpp"

#include <random>

#include "liegauge/expr_io.hpp"
#include "liegauge/gaugegen.hpp"

namespace liegauge {

namespace {

const LieRepresentation& sl3() {
  static const LieRepresentation rep(build_root_system(Family::A, 2));
  return rep;
}

// u_{-a1}(r1) u_{-a2}(r2)
GroupElement<DiffPoly> r_element(const LieRepresentation& rep) {
  const int m = rep.roots().m();
  return root_group_element(rep, m + 0, DiffPoly(rv(1))) * root_group_element(rep, m + 1, DiffPoly(rv(2)));
}

std::map<DiffIndet, DiffPoly> spec_map(const Sl3Specialization& spec) {
  auto images = spec.base;
  images[rv(1)] = spec.r1;
  images[rv(2)] = spec.r2;
  return images;
}

// Sends each generic symbol to the matching coordinate of e.
std::map<DiffIndet, DiffPoly> coordinate_map(const LieRepresentation& rep, const LieElement<DiffPoly>& e) {
  std::map<DiffIndet, DiffPoly> images;
  const int m = rep.roots().m();
  for (int i = 0; i < rep.rank(); ++i) images[a0(static_cast<std::uint32_t>(i + 1))] = e[static_cast<std::size_t>(i)];
  for (int r = 0; r < m; ++r) {
    images[ap(static_cast<std::uint32_t>(r + 1))] = e[rep.root_slot(r)];
    images[am(static_cast<std::uint32_t>(r + 1))] = e[rep.root_slot(r + m)];
  }
  return images;
}

const WeylElement& w_bar() {
  static const WeylElement w = longest_element(sl3().roots());
  return w;
}

DiffPoly y_power(const DiffIndet& y, std::uint32_t k) { return k == 0 ? DiffPoly(1) : DiffPoly(y).pow(k); }

std::uint32_t y_degree(const DiffPoly& p, const DiffIndet& y) {
  std::uint32_t d = 0;
  for (const auto& v : p.derivatives())
    if (v.indet == y) d = std::max(d, p.degree_in(v));
  return d;
}

}  // namespace

DiffPoly apply_sigma(const DiffPoly& p, const Sl3Specialization& spec) {
  static const LieElement<DiffPoly> ar = gauge(sl3(), r_element(sl3()), generic_element(sl3()), PolyRing{});
  return substitute(substitute(p, coordinate_map(sl3(), ar)), spec_map(spec));
}

DiffPoly specialized_f3(const Sl3Specialization& spec) {
  const auto sw = build_sw(sl3(), w_bar());
  if (sw.equations.size() != 1) throw std::logic_error("specialized_f3: expected one equation");
  return apply_sigma(sw.equations[0], spec);
}

DiffPoly specialized_f3_direct(const Sl3Specialization& spec) {
  const auto& rep = sl3();
  const PolyRing ring{};
  const auto g = weyl_representative<DiffPoly>(rep, w_bar()) * u_w_product(rep, w_bar()) * r_element(rep);
  const auto e = gauge(rep, g, generic_element(rep), ring);
  return substitute(e[rep.root_slot(2)], spec_map(spec));
}

DiffPoly printed_f3() {
  return parse_poly(
      "b_3' - ap_3*b_3^2 + (ap_3*r_1*r_2 - r_2*ap_2 - r_1*ap_1 + a0_1 + a0_2)*b_3 + r_2*am_1 + am_3"
      " - (r_2*(a0_2 - a0_1) + am_2)*r_1 + (r_2*ap_2 - a0_2)*r_1*r_2 - r_1*r_2'");
}

std::optional<Rational> global_unit(const DiffPoly& computed, const DiffPoly& printed) {
  if (computed.is_zero() || printed.is_zero()) return std::nullopt;
  const Rational u = computed.leading_term().coef / printed.leading_term().coef;
  if (computed != printed * u) return std::nullopt;
  return u;
}

Riccati riccati_coefficients(const DiffPoly& f, const DiffIndet& y) {
  const Derivative y0{y, 0}, y1{y, 1};
  if (f.coefficient(y1, 1) != DiffPoly(1) || f.degree_in(y1) != 1)
    throw std::invalid_argument("riccati_coefficients: coefficient of " + to_string(y1) + " must be 1");
  const DiffPoly rest = f - DiffPoly(y1);
  for (const auto& v : rest.derivatives())
    if (v.indet == y && v.order > 0) throw std::invalid_argument("riccati_coefficients: " + to_string(v) + " in the remainder");
  if (rest.degree_in(y0) > 3) throw std::invalid_argument("riccati_coefficients: degree above 3");
  Riccati r{y, {}};
  for (std::uint32_t k = 0; k < 4; ++k) r.c[k] = rest.coefficient(y0, k);
  return r;
}

DiffPoly riccati_poly(const Riccati& f) {
  DiffPoly p(Derivative{f.y, 1});
  for (std::uint32_t k = 0; k < 4; ++k) p += f.c[k] * y_power(f.y, k);
  return p;
}

DiffPoly sigma_m_rhs(const std::array<DiffPoly, 4>& c, int m, int k, const std::function<DiffPoly(int)>& y,
                     bool printed_form) {
  auto Y = [&](int j) -> DiffPoly {
    if (j == m) return DiffPoly(1);
    if (j < 0) return DiffPoly();
    return y(j);
  };
  const DiffPoly ym1 = Y(m - 1), ym2 = Y(m - 2);
  const DiffPoly shifted = printed_form ? Y(m - 3) : Y(k - 2);
  DiffPoly c3part = (Rational(2) * ym2 - ym1 * ym1) * Y(k) - Rational(m) * shifted + Rational(k) * Y(k - 2) + ym1 * Y(k - 1) -
                    Rational(2) * Y(k - 2);
  return c[3] * c3part + (c[2] * ym1 + Rational(k - m) * c[1]) * Y(k) + Rational(k - m - 1) * c[2] * Y(k - 1) +
         Rational(k + 1) * c[0] * Y(k + 1);
}

std::vector<DiffPoly> SigmaMSystem::equations() const {
  std::vector<DiffPoly> eqs;
  for (int k = 0; k < m; ++k) eqs.push_back(DiffPoly(Derivative{yv(static_cast<std::uint32_t>(k + 1)), 1}) - rhs[static_cast<std::size_t>(k)]);
  return eqs;
}

SigmaMSystem sigma_m_system(const std::array<DiffPoly, 4>& c, int m) {
  if (m < 1) throw std::invalid_argument("sigma_m_system: m must be positive");
  if (c[0].is_zero()) throw std::invalid_argument("sigma_m_system: c0 must be nonzero");
  SigmaMSystem s{m, c, {}};
  auto y = [](int j) { return DiffPoly(yv(static_cast<std::uint32_t>(j + 1))); };
  for (int k = 0; k < m; ++k) s.rhs.push_back(sigma_m_rhs(c, m, k, y));
  return s;
}

ReductionChain reduce_mod_f_g(const Riccati& f, const std::vector<DiffPoly>& a) {
  const int m = static_cast<int>(a.size());
  if (m < 1) throw std::invalid_argument("reduce_mod_f_g: degree must be at least 1");
  for (const auto& ak : a)
    if (ak.contains(f.y)) throw std::invalid_argument("reduce_mod_f_g: coefficients must not involve " + to_string(f.y));
  auto A = [&](int j) -> DiffPoly {
    if (j == m) return DiffPoly(1);
    if (j < 0) return DiffPoly();
    return a[static_cast<std::size_t>(j)];
  };
  const DiffPoly y(f.y);
  const auto& c = f.c;
  ReductionChain ch;
  ch.m = m;
  ch.g = y_power(f.y, static_cast<std::uint32_t>(m));
  for (int k = 0; k < m; ++k) ch.g += A(k) * y_power(f.y, static_cast<std::uint32_t>(k));
  const DiffPoly fp = riccati_poly(f);

  // drop y' using f
  for (int k = 1; k <= m; ++k) ch.p_f += Rational(k) * A(k) * y_power(f.y, static_cast<std::uint32_t>(k - 1));
  ch.g1 = derive(ch.g) - ch.p_f * fp;
  // top two degrees, then degree m
  const DiffPoly q2 = Rational(-m) * c[3] * y * y;
  const DiffPoly B = Rational(-m) * c[2] + A(m - 1) * c[3];
  const DiffPoly C = Rational(-m) * c[1] + c[2] * A(m - 1) + Rational(2) * c[3] * A(m - 2) - c[3] * A(m - 1) * A(m - 1);
  ch.g2 = ch.g1 - q2 * ch.g;
  ch.g3 = ch.g2 - B * y * ch.g;
  ch.g4 = ch.g3 - C * ch.g;
  ch.q_g = q2 + B * y + C;
  return ch;
}

bool check_chain(const Riccati& f, const ReductionChain& ch) {
  const auto m = static_cast<std::uint32_t>(ch.m);
  if (ch.g4 != derive(ch.g) - ch.p_f * riccati_poly(f) - ch.q_g * ch.g) return false;
  for (const auto* p : {&ch.g1, &ch.g2, &ch.g3, &ch.g4})
    for (const auto& v : p->derivatives())
      if (v.indet == f.y && v.order > 0) return false;
  // degree bounds m+2, m+1, m, m-1 (lower when c3 vanishes)
  return y_degree(ch.g1, f.y) <= m + 2 && y_degree(ch.g2, f.y) <= m + 1 && y_degree(ch.g3, f.y) <= m &&
         (ch.g4.is_zero() || y_degree(ch.g4, f.y) <= m - 1);
}

DiffPoly g0_formula(const Riccati& f, const DiffPoly& a0v) {
  const auto& c = f.c;
  return derive(a0v) + c[3] * a0v.pow(3) - c[2] * a0v * a0v + c[1] * a0v - c[0];
}

namespace {

// Replaces the derivative v by s in one copy and t in the other and compares
// a(s) b(t) with a(t) b(s); zero iff a/b does not depend on v.
bool independent_of(const DiffPoly& a, const DiffPoly& b, const Derivative& v) {
  const DiffPoly s(yv(1)), t(yv(2));
  auto at = [&](const DiffPoly& p, const DiffPoly& val) {
    return substitute_derivatives(p, [&](const Derivative& u) -> std::optional<DiffPoly> {
      if (u == v) return val;
      return std::nullopt;
    });
  };
  return (at(a, s) * at(b, t) - at(a, t) * at(b, s)).is_zero();
}

std::optional<std::uint32_t> max_order(const DiffPoly& a, const DiffPoly& b, const DiffIndet& r) {
  const auto oa = order_in(a, r), ob = order_in(b, r);
  if (!oa && !ob) return std::nullopt;
  return std::max(oa.value_or(0), ob.value_or(0));
}

}  // namespace

std::optional<OrderCheck> check_order_lemma(const LemmaSample& s, const DiffIndet& r) {
  if (s.b.is_zero()) throw std::invalid_argument("check_order_lemma: b = 0");
  const auto d = max_order(s.a, s.b, r);
  if (!d) return std::nullopt;
  OrderCheck c;
  c.hypothesis = !independent_of(s.a, s.b, Derivative{r, *d});
  const DiffPoly w = derive(s.a) * s.b - s.a * derive(s.b);
  const auto ow = order_in(w, r);
  c.conclusion = ow && *ow == *d + 1;
  return c;
}

OrderCheck check_r1_lemma(const LemmaSample& s) {
  if (s.b.is_zero()) throw std::invalid_argument("check_r1_lemma: b = 0");
  OrderCheck c;
  c.hypothesis = independent_of(s.a, s.b, Derivative{rv(1), 0});
  const DiffPoly w = derive(s.a) * s.b - s.a * derive(s.b);
  c.conclusion = !w.contains(Derivative{rv(1), 1});
  return c;
}

namespace {

// Random element of Q{x_1}[v_1..v_n] of low degree; coefficients use x_1 up to x_1'.
DiffPoly random_poly(std::mt19937& rng, const std::vector<Derivative>& vars, int terms) {
  std::uniform_int_distribution<int> num(-4, 4), nf(0, 2), coef_kind(0, 3), pick(0, static_cast<int>(vars.size()) - 1);
  DiffPoly p;
  for (int k = 0; k < terms; ++k) {
    int n = num(rng);
    if (n == 0) n = 1;
    DiffPoly t(n);
    switch (coef_kind(rng)) {
      case 1: t *= DiffPoly(xv(1)); break;
      case 2: t *= DiffPoly(Derivative{xv(1), 1}); break;
      default: break;
    }
    for (int f = nf(rng); f > 0; --f) t *= DiffPoly(vars[static_cast<std::size_t>(pick(rng))]);
    p += t;
  }
  return p;
}

std::string sample_text(const LemmaSample& s) { return "a = " + to_text(s.a) + ", b = " + to_text(s.b); }

}  // namespace

OrderLemmaReport order_lemma_checks(int samples, std::uint32_t seed) {
  std::mt19937 rng(seed);
  OrderLemmaReport rep;
  std::uniform_int_distribution<int> dd(0, 2), nterms(1, 3);
  const DiffIndet r = rv(1);

  auto record = [&](const OrderCheck& c, const LemmaSample& s, int& failures, const char* tag) {
    if (!c.holds()) {
      ++failures;
      rep.counterexamples.push_back(std::string(tag) + ": " + sample_text(s));
    }
  };

  // order lemma: `samples` instances with the hypothesis, half as many without
  while (rep.order_hypothesis_true < samples || rep.order_samples - rep.order_hypothesis_true < samples / 2) {
    const int d = dd(rng);
    std::vector<Derivative> low, all;
    for (int j = 0; j <= d; ++j) {
      all.push_back({r, static_cast<std::uint32_t>(j)});
      if (j < d) low.push_back({r, static_cast<std::uint32_t>(j)});
    }
    LemmaSample s;
    const bool want = rep.order_hypothesis_true < samples;
    if (want || low.empty()) {
      s.a = random_poly(rng, all, nterms(rng));
      s.b = random_poly(rng, all, nterms(rng));
    } else {
      // a/b = p/q of order < d
      const DiffPoly c = random_poly(rng, all, nterms(rng)) + DiffPoly(Derivative{r, static_cast<std::uint32_t>(d)});
      s.a = random_poly(rng, low, nterms(rng)) * c;
      s.b = random_poly(rng, low, nterms(rng)) * c;
    }
    if (s.b.is_zero()) continue;
    const auto c = check_order_lemma(s, r);
    if (!c) continue;
    ++rep.order_samples;
    rep.order_hypothesis_true += c->hypothesis ? 1 : 0;
    record(*c, s, rep.order_failures, "order");
  }

  // r1' lemma: both directions, `samples` each
  int outside = 0;
  const std::vector<Derivative> both = {{rv(1), 0}, {rv(2), 0}}, only2 = {{rv(2), 0}};
  while (outside < samples || rep.r1_in_field < samples) {
    LemmaSample s;
    if (outside < samples) {
      s.a = random_poly(rng, both, nterms(rng));
      s.b = random_poly(rng, both, nterms(rng));
    } else {
      const DiffPoly c = random_poly(rng, both, nterms(rng));
      s.a = random_poly(rng, only2, nterms(rng)) * c;
      s.b = random_poly(rng, only2, nterms(rng)) * c;
    }
    if (s.b.is_zero()) continue;
    const auto c = check_r1_lemma(s);
    ++rep.r1_samples;
    (c.hypothesis ? rep.r1_in_field : outside)++;
    record(c, s, rep.r1_failures, "r1");
  }
  return rep;
}

}  // namespace liegauge
