#include "liegauge/gaugegen.hpp"

#include <algorithm>
#include <stdexcept>

#include "liegauge/expr_io.hpp"

namespace liegauge {

namespace {

std::uint32_t idx1(const RootSystem& rs, int root) { return static_cast<std::uint32_t>(rs.positive_index(root) + 1); }

}  // namespace

LieElement<DiffPoly> generic_element(const LieRepresentation& rep) {
  const RootSystem& rs = rep.roots();
  auto a = zero_element<DiffPoly>(rep);
  for (int i = 0; i < rs.rank(); ++i) a[static_cast<std::size_t>(i)] = DiffPoly(a0(static_cast<std::uint32_t>(i + 1)));
  for (int r = 0; r < rs.size(); ++r) {
    a[rep.root_slot(r)] = DiffPoly(rs.is_positive(r) ? ap(idx1(rs, r)) : am(idx1(rs, r)));
  }
  return a;
}

std::vector<int> b_roots(const RootSystem& rs, const WeylElement& w, BSelector sel) {
  const ResolvingResult res = is_resolving(rs, w);
  if (sel == BSelector::automatic) sel = res.resolving ? BSelector::psi : BSelector::inversions;
  if (sel == BSelector::inversions) return inversion_set(rs, w);
  if (!res.resolving) throw std::invalid_argument("psi is only defined for resolving elements");
  std::vector<int> out = *res.psi;
  std::sort(out.begin(), out.end());
  return out;
}

GroupElement<DiffPoly> u_w_product(const LieRepresentation& rep, const WeylElement& w, BSelector sel) {
  const RootSystem& rs = rep.roots();
  auto g = group_identity<DiffPoly>(rep);
  for (int r : b_roots(rs, w, sel)) g = g * root_group_element(rep, r, DiffPoly(bv(idx1(rs, r))));
  return g;
}

Ranking adapted_ranking(const RootSystem& rs) {
  std::vector<int> heights;
  for (int r = 0; r < rs.m(); ++r) heights.push_back(rs.height(r));
  return Ranking::adapted(heights);
}

SwSystem build_sw(const LieRepresentation& rep, const WeylElement& w, BSelector sel) {
  const RootSystem& rs = rep.roots();
  SwSystem s;
  s.w = w;
  const ResolvingResult res = is_resolving(rs, w);
  s.resolving = res.resolving;
  s.psi = res.psi;
  s.b_roots = b_roots(rs, w, sel);
  s.ranking = adapted_ranking(rs);
  auto g = group_identity<DiffPoly>(rep);
  for (int r : s.b_roots) g = g * root_group_element(rep, r, DiffPoly(bv(idx1(rs, r))));
  g = weyl_representative<DiffPoly>(rep, w) * g;
  s.gauged = gauge(rep, g, generic_element(rep), PolyRing{});
  for (int r = rs.rank(); r < rs.m(); ++r) s.equations.push_back(s.gauged[rep.root_slot(r)]);
  return s;
}

TriangularSystem sw_triangular(const SwSystem& sys) { return TriangularSystem(sys.equations, sys.ranking); }

bool SwTheoremReport::all_passed() const {
  if (!applicable) return false;
  return std::all_of(statements.begin(), statements.end(), [](const StatementCheck& c) { return c.passed; });
}

SwTheoremReport verify_sw_theorem(const LieRepresentation& rep, const SwSystem& sys) {
  const RootSystem& rs = rep.roots();
  SwTheoremReport rep_out;
  if (!sys.resolving) {
    rep_out.reason = "w is not resolving";
    return rep_out;
  }
  rep_out.applicable = true;
  const int l = rs.rank();

  {
    const auto s = is_simple(sys.equations, {}, sys.ranking);
    rep_out.statements.push_back(
        {"1", s.verdict == Verdict::Simple, std::string(verdict_name(s.verdict)) + (s.condition.empty() ? "" : " (" + s.condition + ") " + s.detail)});
  }

  const WeylElement winv = inverse(sys.w);
  StatementCheck st2{"2", true, ""}, st3{"3", true, ""}, st5{"5", true, ""};
  for (int r = l; r < rs.m(); ++r) {
    const DiffPoly& f = sys.equations[static_cast<std::size_t>(r - l)];
    const std::string tag = "f+_" + std::to_string(r + 1);
    if (f.is_constant()) {
      st2 = {"2", false, tag + " is constant"};
      continue;
    }
    const int neg = winv.apply(r);
    const Derivative ld = leader(f, sys.ranking);
    const std::uint32_t i = idx1(rs, neg);
    if (rs.is_positive(neg) || !(ld == Derivative{bv(i), 1})) {
      st2.passed = false;
      st2.detail += tag + " has leader " + to_text(ld) + "; ";
    }
    if (f.degree_in(ld) != 1 || !initial(f, sys.ranking).is_constant()) {
      st3.passed = false;
      st3.detail += tag + " is not linear with constant initial in " + to_text(ld) + "; ";
    }
    const Derivative amv{am(i), 0};
    const DiffPoly c = f.coefficient(amv, 1);
    if (f.degree_in(amv) != 1 || !c.is_constant() || c.is_zero() || order_in(f, am(i)).value_or(0) != 0) {
      st5.passed = false;
      st5.detail += tag + " does not contain " + to_text(amv) + " linearly with constant coefficient; ";
    }
    // a-_i must be the a- of largest height: every other a-_j has lower height.
    for (const auto& u : f.indeterminates()) {
      if (u.cls != IndetClass::a_minus || u.index == i) continue;
      if (rs.height(static_cast<int>(u.index) - 1) >= rs.height(rs.positive_index(neg))) {
        st5.passed = false;
        st5.detail += tag + " contains " + to_string(u) + " of height not below " + to_text(amv) + "; ";
      }
    }
  }
  rep_out.statements.push_back(st2);
  rep_out.statements.push_back(st3);
  rep_out.statements.push_back({"4", true, "prime ideal: cited, not re-checked"});
  rep_out.statements.push_back(st5);
  return rep_out;
}

}  // namespace liegauge
