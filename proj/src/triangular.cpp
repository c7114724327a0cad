#include "liegauge/triangular.hpp"

#include <algorithm>
#include <stdexcept>

namespace liegauge {

namespace {

struct EqData {
  Derivative leader;
  std::uint32_t degree = 0;
  DiffPoly initial;
  DiffPoly separant;
};

std::vector<EqData> eq_data(const std::vector<DiffPoly>& eqs, const Ranking& rk) {
  std::vector<EqData> out;
  out.reserve(eqs.size());
  for (const auto& e : eqs) {
    EqData d;
    d.leader = leader(e, rk);
    d.degree = e.degree_in(d.leader);
    d.initial = e.coefficient(d.leader, d.degree);
    d.separant = e.partial(d.leader);
    out.push_back(std::move(d));
  }
  return out;
}

// Highest ranked derivative of p admitting a reduction step, with the index
// of the equation used.
std::optional<std::pair<Derivative, std::size_t>> find_reducible(const DiffPoly& p, const std::vector<EqData>& data,
                                                                  const Ranking& rk) {
  const auto present = p.derivatives();
  std::vector<Derivative> ds(present.begin(), present.end());
  std::sort(ds.begin(), ds.end(), [&](const Derivative& a, const Derivative& b) { return rk.greater(a, b); });
  for (const auto& v : ds) {
    for (std::size_t i = 0; i < data.size(); ++i) {
      const Derivative& ld = data[i].leader;
      if (v.indet != ld.indet) continue;
      if (v.order > ld.order) return std::make_pair(v, i);
      if (v == ld && p.degree_in(v) >= data[i].degree) return std::make_pair(v, i);
    }
  }
  return std::nullopt;
}

}  // namespace

PseudoRemainder pseudo_reduce(const DiffPoly& p, const std::vector<DiffPoly>& eqs, const Ranking& rk) {
  const auto data = eq_data(eqs, rk);
  PseudoRemainder res;
  res.remainder = p;
  while (auto hit = find_reducible(res.remainder, data, rk)) {
    const auto [v, i] = *hit;
    const std::uint32_t j = v.order - data[i].leader.order;
    const DiffPoly d = j == 0 ? eqs[i] : derive(eqs[i], j);
    const DiffPoly lc = j == 0 ? data[i].initial : data[i].separant;
    const std::uint32_t e = j == 0 ? data[i].degree : 1;
    const WitnessKey key{i, j};
    const bool constant = lc.is_constant();
    while (res.remainder.degree_in(v) >= e) {
      const std::uint32_t k = res.remainder.degree_in(v);
      DiffPoly q = res.remainder.coefficient(v, k) * DiffPoly(v, k - e);
      if (constant) {
        q *= Rational(1) / lc.constant_value();
      } else {
        res.remainder *= lc;
        res.multiplier *= lc;
        for (auto& [kk, c] : res.witness) c *= lc;
      }
      res.remainder -= q * d;
      auto& slot = res.witness[key];
      slot += q;
    }
  }
  for (auto it = res.witness.begin(); it != res.witness.end();) {
    it = it->second.is_zero() ? res.witness.erase(it) : std::next(it);
  }
  return res;
}

bool check_witness(const DiffPoly& p, const std::vector<DiffPoly>& eqs, const PseudoRemainder& pr) {
  DiffPoly diff = pr.multiplier * p - pr.remainder;
  for (const auto& [key, c] : pr.witness) diff -= c * derive(eqs.at(key.first), key.second);
  return diff.is_zero();
}

bool is_reducible(const DiffPoly& p, const std::vector<DiffPoly>& eqs, const Ranking& rk) {
  return find_reducible(p, eq_data(eqs, rk), rk).has_value();
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Simple: return "simple";
    case Verdict::NotSimple: return "not simple";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

namespace {

// A proper derivative of the leader of some q occurs in p.
bool has_proper_leader_derivative(const DiffPoly& p, const std::vector<DiffPoly>& qs, const Ranking& rk) {
  const auto ds = p.derivatives();
  for (const auto& q : qs) {
    const Derivative ld = leader(q, rk);
    for (const auto& v : ds)
      if (v.indet == ld.indet && v.order > ld.order) return true;
  }
  return false;
}

}  // namespace

SimplicityReport is_simple(const std::vector<DiffPoly>& equations, const std::vector<DiffPoly>& inequations,
                           const Ranking& rk) {
  SimplicityReport rep;
  auto fail = [&](const char* cond, std::string detail) {
    rep.verdict = Verdict::NotSimple;
    rep.condition = cond;
    rep.detail = std::move(detail);
    return rep;
  };
  std::vector<DiffPoly> all = equations;
  all.insert(all.end(), inequations.begin(), inequations.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].is_constant()) return fail("1a", "member " + std::to_string(i) + " is constant");
  }
  std::vector<Derivative> leaders;
  for (const auto& p : all) leaders.push_back(leader(p, rk));
  for (std::size_t i = 0; i < leaders.size(); ++i) {
    for (std::size_t j = i + 1; j < leaders.size(); ++j) {
      if (leaders[i] == leaders[j]) return fail("1b", "members " + std::to_string(i) + " and " + std::to_string(j) + " share leader " + to_string(leaders[i]));
    }
  }
  for (std::size_t i = 0; i < equations.size(); ++i) {
    std::vector<DiffPoly> others;
    for (std::size_t j = 0; j < equations.size(); ++j)
      if (j != i) others.push_back(equations[j]);
    if (has_proper_leader_derivative(equations[i], others, rk)) return fail("2", "equation " + std::to_string(i) + " is reducible");
  }
  for (std::size_t i = 0; i < inequations.size(); ++i) {
    if (has_proper_leader_derivative(inequations[i], equations, rk)) return fail("3", "inequation " + std::to_string(i) + " is reducible");
  }
  const auto data = eq_data(all, rk);
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (const DiffPoly* x : {&data[i].initial, &data[i].separant}) {
      const DiffPoly r = pseudo_reduce(*x, equations, rk).remainder;
      if (r.is_zero()) return fail("1c", "initial or separant of member " + std::to_string(i) + " reduces to zero");
      if (!r.is_constant() && rep.verdict == Verdict::Simple) {
        rep.verdict = Verdict::Undecided;
        rep.condition = "1c";
        rep.detail = "initial or separant of member " + std::to_string(i) + " is not constant";
      }
    }
  }
  return rep;
}

TriangularSystem::TriangularSystem(const std::vector<DiffPoly>& equations, Ranking rk, std::vector<DiffPoly> inequations)
    : ineqs_(std::move(inequations)), rk_(std::move(rk)), cache_(std::make_shared<Cache>()) {
  for (const auto& e : equations) {
    Equation eq;
    eq.original = e;
    eq.leader = leader(e, rk_);
    if (e.degree_in(eq.leader) != 1) throw std::invalid_argument("equation is not linear in its leader " + to_string(eq.leader));
    eq.initial = e.coefficient(eq.leader, 1);
    if (!eq.initial.is_constant()) throw std::invalid_argument("equation has nonconstant initial");
    eq.separant = eq.initial;
    eq.rhs = (eq.initial * DiffPoly(eq.leader) - e) * (Rational(1) / eq.initial.constant_value());
    if (!by_indet_.emplace(eq.leader.indet, eqs_.size()).second) {
      throw std::invalid_argument("two leaders involve " + to_string(eq.leader.indet));
    }
    eqs_.push_back(std::move(eq));
  }
}

std::vector<DiffPoly> TriangularSystem::originals() const {
  std::vector<DiffPoly> out;
  for (const auto& e : eqs_) out.push_back(e.original);
  return out;
}

bool TriangularSystem::is_principal(const Derivative& v) const {
  auto it = by_indet_.find(v.indet);
  return it != by_indet_.end() && v.order >= eqs_[it->second].leader.order;
}

std::optional<DiffPoly> TriangularSystem::image(const Derivative& v) const {
  auto it = by_indet_.find(v.indet);
  if (it == by_indet_.end()) return std::nullopt;
  const Equation& eq = eqs_[it->second];
  if (v.order < eq.leader.order) return std::nullopt;
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto c = cache_->nf.find(v);
    if (c != cache_->nf.end()) return c->second;
  }
  DiffPoly nf;
  if (v.order == eq.leader.order) {
    nf = reduce(eq.rhs);
  } else {
    nf = reduce(derive(*image(Derivative{v.indet, v.order - 1})));
  }
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->nf.emplace(v, nf);
  return nf;
}

DiffPoly TriangularSystem::reduce(const DiffPoly& p) const {
  if (eqs_.empty()) return p;
  return substitute_derivatives(p, [this](const Derivative& v) { return image(v); });
}

}  // namespace liegauge
