#include "liegauge/normalform.hpp"

#include <algorithm>

#include "liegauge/expr_io.hpp"

namespace liegauge {

namespace {

std::uint32_t idx1(int positive) { return static_cast<std::uint32_t>(positive + 1); }

// Negative roots of height j, ascending index.
std::vector<int> negative_roots_of_height(const RootSystem& rs, int j) {
  std::vector<int> out;
  for (int r = 0; r < rs.m(); ++r)
    if (rs.height(r) == j) out.push_back(rs.negate(r));
  return out;
}

// Grade 0 is the Cartan subalgebra, grade -j the negative roots of height j.
std::vector<std::size_t> grade_slots(const LieRepresentation& rep, int j) {
  std::vector<std::size_t> out;
  if (j == 0) {
    for (int i = 0; i < rep.rank(); ++i) out.push_back(static_cast<std::size_t>(i));
    return out;
  }
  for (int r : negative_roots_of_height(rep.roots(), j)) out.push_back(rep.root_slot(r));
  return out;
}

QMatrix a0_plus(const LieRepresentation& rep) {
  QMatrix a(rep.n(), rep.n());
  for (int i = 0; i < rep.rank(); ++i) a = a + rep.x(i);
  return a;
}

// Columns: coordinates of [X_rho, A0+] restricted to the row slots.
QMatrix ad_block(const LieRepresentation& rep, const std::vector<int>& params, const std::vector<std::size_t>& rows,
                 std::size_t extra_cols = 0) {
  const QMatrix a = a0_plus(rep);
  QMatrix m(rows.size(), params.size() + extra_cols);
  for (std::size_t c = 0; c < params.size(); ++c) {
    const auto coords = rep.extract(commutator(rep.x(params[c]), a));
    for (std::size_t r = 0; r < rows.size(); ++r) m(r, c) = coords[rows[r]];
  }
  return m;
}

template <class From>
Matrix<ExtElem> lift(const Matrix<From>& m) {
  Matrix<ExtElem> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) r(i, j) = ExtElem(m(i, j));
  return r;
}

template <class From>
GroupElement<ExtElem> lift(const GroupElement<From>& g) {
  return {lift(g.mat), lift(g.inv), g.tag};
}

}  // namespace

ComplementarySet complementary_roots(const LieRepresentation& rep) {
  const RootSystem& rs = rep.roots();
  const int l = rs.rank();
  {
    const QMatrix m = ad_block(rep, negative_roots_of_height(rs, 1), grade_slots(rep, 0));
    if (m.rows() != m.cols() || m.rank() != static_cast<std::size_t>(l))
      throw NormalFormError("complementary_roots", "grade -1 does not map onto the Cartan subalgebra");
  }
  ComplementarySet cs;
  const int maxh = rs.max_height();
  for (int j = 1; j <= maxh; ++j) {
    const auto rows = grade_slots(rep, j);
    const auto params = negative_roots_of_height(rs, j + 1);
    QMatrix m = ad_block(rep, params, rows, rows.size());
    std::size_t rank = ad_block(rep, params, rows).rank();
    const std::size_t image_rank = rank;
    std::size_t used = params.size();
    std::vector<int> chosen;
    for (std::size_t s = 0; s < rows.size() && rank < rows.size(); ++s) {
      QMatrix trial(rows.size(), used + 1);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < used; ++c) trial(r, c) = m(r, c);
        trial(r, used) = r == s ? 1 : 0;
      }
      if (trial.rank() > rank) {
        for (std::size_t r = 0; r < rows.size(); ++r) m(r, used) = trial(r, used);
        ++used;
        ++rank;
        chosen.push_back(rs.positive_index(static_cast<int>(rows[s]) - l));
      }
    }
    if (rank != rows.size() || image_rank + chosen.size() != rows.size())
      throw NormalFormError("complementary_roots", "no root complement at grade -" + std::to_string(j));
    for (int g : chosen) {
      cs.gamma.push_back(g);
      cs.heights.push_back(j);
    }
  }
  if (cs.heights != rs.exponents())
    throw NormalFormError("complementary_roots", "complementary heights differ from the exponents");
  return cs;
}

DiffFrac evaluate(const DiffPoly& p, const std::map<DiffIndet, DiffFrac>& values, const FracRing& ring) {
  std::map<Derivative, DiffFrac> memo;
  std::function<DiffFrac(const Derivative&)> value = [&](const Derivative& d) -> DiffFrac {
    auto it = memo.find(d);
    if (it != memo.end()) return it->second;
    DiffFrac v;
    if (d.order == 0) {
      auto f = values.find(d.indet);
      v = f == values.end() ? DiffFrac(DiffPoly(d)) : f->second;
    } else {
      v = ring.derive(value({d.indet, d.order - 1}));
    }
    memo.emplace(d, v);
    return v;
  };
  DiffFrac acc;
  for (const auto& t : p.terms()) {
    DiffFrac term(t.coef);
    for (const auto& [d, e] : t.mono) term *= value(d).pow(static_cast<long>(e));
    acc += term;
  }
  return ring.normalize(acc);
}

Step1Result step1_gauge(const LieRepresentation& rep, const WeylElement& w) {
  const RootSystem& rs = rep.roots();
  if (!is_resolving(rs, w).resolving) throw NormalFormError("step1", "w is not resolving");
  Step1Result s{build_sw(rep, w, BSelector::psi), {}, zero_element<DiffPoly>(rep)};
  s.sys = sw_triangular(s.sw);
  for (std::size_t k = 0; k < rep.dim(); ++k) s.h[k] = s.sys.reduce(s.sw.gauged[k]);
  for (int r = 0; r < rs.m(); ++r) {
    const bool zero = s.h[rep.root_slot(r)].is_zero();
    if (rs.is_simple(r) && zero) throw NormalFormError("step1", "h+_" + std::to_string(r + 1) + " reduces to zero");
    if (!rs.is_simple(r) && !zero)
      throw NormalFormError("step1", "positive coordinate " + std::to_string(r + 1) + " does not reduce to zero");
  }
  return s;
}

Step2Result step2_normalize(const LieRepresentation& rep, const LieElement<DiffPoly>& h, const FracRing& ring) {
  const RootSystem& rs = rep.roots();
  const auto l = static_cast<std::size_t>(rs.rank());
  QMatrix gamma(l, l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) gamma(i, j) = rs.cartan()[i][j];
  Step2Result s;
  try {
    s.q = gamma.inverse() * Rational(-1);
  } catch (const std::domain_error&) {
    throw NormalFormError("step2", "singular Cartan matrix");
  }
  std::vector<DiffFrac> hp;
  for (std::size_t j = 0; j < l; ++j) hp.emplace_back(h[rep.root_slot(static_cast<int>(j))]);
  s.ctx = ExtContext::make(hp, ring);
  const ExtRing er{s.ctx};

  auto row = [&](std::size_t i, const Rational& scale) {
    ExtElem::Exponent q(l);
    for (std::size_t j = 0; j < l; ++j) q[j] = s.q(i, j) * scale;
    return q;
  };
  s.torus = group_identity<ExtElem>(rep);
  for (std::size_t i = 0; i < l; ++i) {
    s.x.push_back(ExtElem::monomial(s.ctx, row(i, 1)));
    s.torus = s.torus * torus_element(rep, static_cast<int>(i), s.x.back(), ExtElem::monomial(s.ctx, row(i, -1)));
  }

  auto hl = zero_element<ExtElem>(rep);
  for (std::size_t k = 0; k < rep.dim(); ++k) hl[k] = ExtElem(h[k]);
  s.g_ext = gauge(rep, s.torus, hl, er);
  s.g = zero_element<DiffFrac>(rep);
  for (std::size_t k = 0; k < rep.dim(); ++k) {
    const auto v = s.g_ext[k].base_value();
    if (!v) throw NormalFormError("step2", "coordinate " + rep.slot_label(k) + " has a fractional exponent");
    s.g[k] = *v;
  }

  for (int r = 0; r < rs.m(); ++r) {
    const DiffFrac want(rs.is_simple(r) ? 1 : 0);
    if (!ring.is_zero(s.g[rep.root_slot(r)] - want))
      throw NormalFormError("step2", "g+ differs from (1,...,1,0,...,0) at " + rep.slot_label(rep.root_slot(r)));
  }
  // h+_j prod_i x_i^{a_ji} = 1
  for (std::size_t j = 0; j < l; ++j) {
    ExtElem e(hp[j]);
    for (std::size_t i = 0; i < l; ++i) e = e * ExtElem::monomial(s.ctx, row(i, rs.cartan()[j][i]));
    if (!er.is_zero(e - ExtElem(1))) throw NormalFormError("step2", "normalization residue " + std::to_string(j + 1) + " is nonzero");
  }
  for (std::size_t i = 0; i < l; ++i) {
    DiffFrac d = s.g[i] - DiffFrac(h[i]);
    for (std::size_t j = 0; j < l; ++j) d -= DiffFrac(s.q(i, j)) * s.ctx->logder[j];
    if (!ring.is_zero(d)) throw NormalFormError("step2", "Cartan coordinate " + std::to_string(i + 1) + " mismatch");
  }
  return s;
}

Step3Symbolic step3_symbolic(const LieRepresentation& rep, const ComplementarySet& comp) {
  const RootSystem& rs = rep.roots();
  const int l = rs.rank();
  Step3Symbolic s;
  auto e = zero_element<DiffPoly>(rep);
  for (int i = 0; i < l; ++i) {
    e[static_cast<std::size_t>(i)] = DiffPoly(yv(idx1(i)));
    e[rep.root_slot(i)] = DiffPoly(1);
  }
  for (int r = 0; r < rs.m(); ++r) e[rep.root_slot(rs.negate(r))] = DiffPoly(xv(idx1(r)));

  std::set<std::size_t> comp_slots;
  for (int g : comp.gamma) comp_slots.insert(rep.root_slot(rs.negate(g)));

  for (int k = 1; k <= rs.max_height(); ++k) {
    const auto rows = grade_slots(rep, k - 1);
    const auto params = negative_roots_of_height(rs, k);
    std::vector<std::size_t> cc;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (comp_slots.count(rows[r])) cc.push_back(r);
    QMatrix m = ad_block(rep, params, rows, cc.size());
    for (std::size_t c = 0; c < cc.size(); ++c) m(cc[c], params.size() + c) = 1;

    std::vector<DiffPoly> p(params.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (e[rows[r]].is_zero()) continue;
      std::vector<Rational> rhs(rows.size()), z;
      rhs[r] = 1;
      if (!solve_particular(m, rhs, z))
        throw NormalFormError("step3", "grade " + std::to_string(-(k - 1)) + " system is unsolvable");
      for (std::size_t c = 0; c < params.size(); ++c)
        if (z[c] != 0) p[c] -= e[rows[r]] * z[c];
    }
    auto u = group_identity<DiffPoly>(rep);
    for (std::size_t c = 0; c < params.size(); ++c) {
      u = u * root_group_element(rep, params[c], p[c]);
      s.params.push_back({k, params[c], p[c], {}});
    }
    e = gauge(rep, u, e, PolyRing{});
    for (std::size_t r : rows)
      if (!comp_slots.count(r) && !e[r].is_zero())
        throw NormalFormError("step3", "coordinate " + rep.slot_label(r) + " survives");
  }

  for (std::size_t k = 0; k < rep.dim(); ++k) {
    const bool simple = k >= static_cast<std::size_t>(l) && rs.is_simple(static_cast<int>(k) - l);
    if (simple ? e[k] != DiffPoly(1) : (!comp_slots.count(k) && !e[k].is_zero()))
      throw NormalFormError("step3", "final element differs from the normal form at " + rep.slot_label(k));
  }
  for (int g : comp.gamma) s.t.push_back(e[rep.root_slot(rs.negate(g))]);
  s.final_element = e;

  for (std::size_t j = 0; j < comp.gamma.size(); ++j) {
    const DiffIndet u = xv(idx1(comp.gamma[j]));
    const Derivative v{u, 0};
    const DiffPoly& t = s.t[j];
    const DiffPoly c = t.coefficient(v, 1);
    std::string bad;
    if (t.degree_in(v) != 1 || !c.is_constant() || c.is_zero()) bad += "not linear with constant coefficient; ";
    if (order_in(t, u).value_or(0) != 0) bad += "contains a proper derivative of its slot; ";
    for (std::size_t j2 = j + 1; j2 < comp.gamma.size(); ++j2)
      if (t.contains(xv(idx1(comp.gamma[j2])))) bad += "contains a later slot; ";
    if (!bad.empty()) {
      s.structure_ok = false;
      s.structure_detail += "t_" + std::to_string(j + 1) + ": " + bad;
    }
  }
  return s;
}

Step3Result step3_transformation(const LieRepresentation& rep, const LieElement<DiffFrac>& g,
                                 const ComplementarySet& comp, const FracRing& ring) {
  const RootSystem& rs = rep.roots();
  Step3Result s;
  s.symbolic = step3_symbolic(rep, comp);
  if (!s.symbolic.structure_ok) throw NormalFormError("step3", s.symbolic.structure_detail);
  std::map<DiffIndet, DiffFrac> values;
  for (int i = 0; i < rs.rank(); ++i) values[yv(idx1(i))] = g[static_cast<std::size_t>(i)];
  for (int r = 0; r < rs.m(); ++r) values[xv(idx1(r))] = g[rep.root_slot(rs.negate(r))];
  for (const auto& p : s.symbolic.params) {
    Step3Param q = p;
    q.value = evaluate(p.symbolic, values, ring);
    s.params.push_back(std::move(q));
  }
  for (const auto& t : s.symbolic.t) s.t.push_back(evaluate(t, values, ring));
  s.final_element = normal_form_matrix(rep, comp, s.t);
  return s;
}

LieElement<DiffPoly> reduced_generic_element(const LieRepresentation& rep) {
  const RootSystem& rs = rep.roots();
  auto e = generic_element(rep);
  for (int r = rs.rank(); r < rs.m(); ++r) e[rep.root_slot(r)] = DiffPoly();
  return e;
}

std::map<DiffIndet, DiffFrac> h_substitution(const LieRepresentation& rep, const LieElement<DiffPoly>& h) {
  const auto e = reduced_generic_element(rep);
  std::map<DiffIndet, DiffFrac> out;
  for (std::size_t k = 0; k < rep.dim(); ++k)
    if (!e[k].is_zero()) out[*e[k].indeterminates().begin()] = DiffFrac(h[k]);
  return out;
}

namespace {

// Applies t(x) and then U_1, ..., U_K.
LieElement<ExtElem> apply_steps(const LieRepresentation& rep, const GroupElement<ExtElem>& torus,
                                const std::vector<Step3Param>& params, LieElement<ExtElem> e, const ExtRing& er) {
  e = gauge(rep, torus, e, er);
  for (int k = 1; k <= rep.roots().max_height(); ++k) {
    auto u = group_identity<ExtElem>(rep);
    for (const auto& p : params)
      if (p.height == k) u = u * root_group_element(rep, p.root, ExtElem(p.value));
    e = gauge(rep, u, e, er);
  }
  return e;
}

bool matches_normal_form(const LieRepresentation& rep, const ComplementarySet& comp, const LieElement<ExtElem>& e,
                         const std::vector<DiffFrac>& t, const ExtRing& er) {
  std::vector<ExtElem> tl(t.begin(), t.end());
  const auto nf = normal_form_matrix(rep, comp, tl);
  for (std::size_t k = 0; k < rep.dim(); ++k)
    if (!er.is_zero(e[k] - nf[k])) return false;
  return true;
}

template <class T>
LieElement<ExtElem> lift(const LieElement<T>& a) {
  LieElement<ExtElem> out{std::vector<ExtElem>(a.coords.size())};
  for (std::size_t k = 0; k < a.coords.size(); ++k) out[k] = ExtElem(a[k]);
  return out;
}

}  // namespace

bool verify_regauge(const LieRepresentation& rep, const NormalFormResult& res) {
  const ExtRing er{res.step2.ctx};
  try {
    const auto out = apply_steps(rep, res.step2.torus, res.step3.params, lift(reduced_generic_element(rep)), er);
    return matches_normal_form(rep, res.comp, out, res.step3.t, er);
  } catch (const ExtractionError&) {
    return false;
  }
}

bool verify_regauge_in_k(const LieRepresentation& rep, NormalFormResult& res) {
  const FracRing ring = FracRing::modulo(res.step1.sys);
  const auto values = h_substitution(rep, res.step1.h);
  const Step2Result s2 = step2_normalize(rep, res.step1.h, ring);
  std::vector<Step3Param> params = res.step3.params;
  for (auto& p : params) p.value = evaluate(p.value.numerator(), values, ring) / evaluate(p.value.denominator(), values, ring);
  std::vector<DiffFrac> t;
  for (const auto& x : res.step3.t) t.push_back(evaluate(x.numerator(), values, ring) / evaluate(x.denominator(), values, ring));
  res.t_in_k = t;
  const ExtRing er{s2.ctx};
  // n(w) u_w(b) first, as one element; then the torus and unipotent steps.
  const auto g = weyl_representative<ExtElem>(rep, res.w) * lift(u_w_product(rep, res.w, BSelector::psi));
  try {
    const auto first = gauge(rep, g, lift(generic_element(rep)), er);
    const auto out = apply_steps(rep, s2.torus, params, first, er);
    res.regauge_in_k = matches_normal_form(rep, res.comp, out, t, er);
  } catch (const ExtractionError&) {
    res.regauge_in_k = false;
  }
  return *res.regauge_in_k;
}

bool t_nonzero_witness(const LieRepresentation& rep, const NormalFormResult& res) {
  const RootSystem& rs = rep.roots();
  std::map<DiffIndet, DiffPoly> kill_b;
  for (int r : res.step1.sw.b_roots) kill_b[bv(idx1(rs.positive_index(r)))] = DiffPoly();
  struct Solved {
    int height;
    DiffIndet top;
    DiffPoly f;
  };
  std::vector<Solved> eqs;
  for (const auto& f : res.step1.sw.equations) {
    const DiffPoly f0 = substitute(f, kill_b);
    std::optional<DiffIndet> top;
    for (const auto& u : f0.indeterminates())
      if (u.cls == IndetClass::a_minus && (!top || rs.height(static_cast<int>(u.index) - 1) > rs.height(static_cast<int>(top->index) - 1)))
        top = u;
    if (!top) return false;
    eqs.push_back({rs.height(static_cast<int>(top->index) - 1), *top, f0});
  }
  std::sort(eqs.begin(), eqs.end(), [](const Solved& a, const Solved& b) { return a.height < b.height; });
  std::map<DiffIndet, DiffPoly> solved;
  for (const auto& e : eqs) {
    const DiffPoly f = substitute(e.f, solved);
    const Derivative v{e.top, 0};
    const DiffPoly c = f.coefficient(v, 1);
    if (f.degree_in(v) != 1 || !c.is_constant() || c.is_zero() || order_in(f, e.top).value_or(0) != 0) return false;
    solved[e.top] = (f - c * DiffPoly(v)) * (Rational(-1) / c.constant_value());
  }
  auto a = generic_element(rep);
  for (auto& x : a.coords) x = substitute(x, solved);
  const auto h = gauge(rep, weyl_representative<DiffPoly>(rep, res.w), a, PolyRing{});
  for (int r = 0; r < rs.m(); ++r)
    if (rs.is_simple(r) == h[rep.root_slot(r)].is_zero()) return false;
  const auto values = h_substitution(rep, h);
  for (const auto& t : res.step3.t)
    if (evaluate(t.numerator(), values, FracRing{}).is_zero()) return false;
  return true;
}

NormalFormResult normal_form_pipeline(const LieRepresentation& rep, PipelineOptions opt) {
  NormalFormResult res;
  res.w = longest_element(rep.roots());
  res.comp = complementary_roots(rep);
  res.step1 = step1_gauge(rep, res.w);
  res.step2 = step2_normalize(rep, reduced_generic_element(rep), FracRing{});
  res.step3 = step3_transformation(rep, res.step2.g, res.comp, FracRing{});
  res.t_nonzero = t_nonzero_witness(rep, res);
  if (opt.verify) res.regauge_verified = verify_regauge(rep, res);
  if (opt.direct_in_k) verify_regauge_in_k(rep, res);
  return res;
}

nlohmann::json to_json(const LieRepresentation& rep, const NormalFormResult& res) {
  using nlohmann::json;
  const RootSystem& rs = rep.roots();
  json j;
  j["type"] = rs.name();
  j["w"] = res.w.word;
  json eqs = json::array();
  for (const auto& f : res.step1.sw.equations) eqs.push_back(to_text(f));
  j["sw_equations"] = eqs;

  json comp = json::array();
  for (std::size_t i = 0; i < res.comp.gamma.size(); ++i)
    comp.push_back({{"root", res.comp.gamma[i] + 1}, {"height", res.comp.heights[i]}});
  j["complementary"] = comp;

  json h = json::object();
  for (std::size_t k = 0; k < rep.dim(); ++k)
    if (!res.step1.h[k].is_zero()) h[rep.slot_label(k)] = to_text(res.step1.h[k]);
  j["step1"] = {{"h", h}};

  json q = json::array();
  for (std::size_t r = 0; r < res.step2.q.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < res.step2.q.cols(); ++c) row.push_back(to_string(res.step2.q(r, c)));
    q.push_back(row);
  }
  json g = json::object();
  for (std::size_t k = 0; k < rep.dim(); ++k)
    if (!res.step2.g[k].is_zero()) g[rep.slot_label(k)] = to_text(res.step2.g[k]);
  j["step2"] = {{"Q", q}, {"g", g}, {"torus", res.step2.torus.tag}};

  json params = json::array();
  for (const auto& p : res.step3.params)
    params.push_back({{"height", p.height}, {"root", rep.slot_label(rep.root_slot(p.root))}, {"value", to_text(p.value)}});
  json t = json::array();
  for (const auto& x : res.step3.t) t.push_back(to_text(x));
  json fin = json::object();
  for (std::size_t k = 0; k < rep.dim(); ++k)
    if (!res.step3.final_element[k].is_zero()) fin[rep.slot_label(k)] = to_text(res.step3.final_element[k]);
  j["step3"] = {{"params", params}, {"t", t}, {"final", fin}};
  j["h_symbols"] = "step 2 and 3 expressions use ap_j, a0_i, am_k for the step-1 coordinates h+_j, h0_i, h-_k";
  if (res.t_in_k) {
    json tk = json::array();
    for (const auto& x : *res.t_in_k) tk.push_back(to_text(x));
    j["t_in_K"] = tk;
  }
  j["group_elements"] = {"n(w) u_w(b)", res.step2.torus.tag, rs.max_height() == 1 ? std::string("U_1") : "U_1 .. U_" + std::to_string(rs.max_height())};
  j["verified"] = {{"regauge", res.regauge_verified}, {"t_nonzero", res.t_nonzero}};
  if (res.regauge_in_k) j["verified"]["regauge_in_K"] = *res.regauge_in_k;
  return j;
}

}  // namespace liegauge
