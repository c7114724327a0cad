#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liegauge/diffpoly.hpp"
#include "liegauge/liealg.hpp"

namespace liegauge {

/// Images of the connection coefficients ap_i, am_i, a0_i (identity when
/// absent) and of the two auxiliary indeterminates.
struct Sl3Specialization {
  std::map<DiffIndet, DiffPoly> base;
  DiffPoly r1{rv(1)};
  DiffPoly r2{rv(2)};
};

/// sigma: a -> coordinates of A_r = u_{-a1}(r1) u_{-a2}(r2) . A, then spec.
DiffPoly apply_sigma(const DiffPoly& p, const Sl3Specialization& spec = {});

/// sigma(f+_3): the S_w equation in b_3 for A_r = u_{-a1}(r1) u_{-a2}(r2) . A,
/// obtained by substituting the coordinates of A_r into the generic equation.
DiffPoly specialized_f3(const Sl3Specialization& spec = {});
/// Same polynomial read off directly from n(w) u_{-a3}(b_3) u_{-a1}(r1) u_{-a2}(r2) . A.
DiffPoly specialized_f3_direct(const Sl3Specialization& spec = {});
/// Closed form of sigma(f+_3), written out by hand.
DiffPoly printed_f3();
/// u with computed = u * printed, if it exists and is a nonzero constant.
std::optional<Rational> global_unit(const DiffPoly& computed, const DiffPoly& printed);

/// f = y' + c3 y^3 + c2 y^2 + c1 y + c0.
struct Riccati {
  DiffIndet y;
  std::array<DiffPoly, 4> c;
};

/// Throws std::invalid_argument when f is not of that shape in y.
Riccati riccati_coefficients(const DiffPoly& f, const DiffIndet& y);
DiffPoly riccati_poly(const Riccati& f);

/// Unknowns y_0..y_{m-1} are the indeterminates y_1..y_m.  rhs[k] is the
/// right-hand side of y_k' with y_m = 1, y_{-1} = y_{-2} = 0.
struct SigmaMSystem {
  int m = 0;
  std::array<DiffPoly, 4> c;
  std::vector<DiffPoly> rhs;

  std::vector<DiffPoly> equations() const;  // y_k' - rhs[k]
};

/// The k-th right-hand side.  The c3 term uses m*y_{k-2}; printed_form uses
/// the misprinted m*y_{m-3}, which differs for k < m - 1.
DiffPoly sigma_m_rhs(const std::array<DiffPoly, 4>& c, int m, int k,
                     const std::function<DiffPoly(int)>& y, bool printed_form = false);

/// Throws std::invalid_argument for m < 1 or c0 = 0.
SigmaMSystem sigma_m_system(const std::array<DiffPoly, 4>& c, int m);

/// The four elimination steps for g' modulo f and g, g = y^m + sum a_k y^k.
struct ReductionChain {
  int m = 0;
  DiffPoly g, g1, g2, g3, g4;
  /// g4 = g' - p_f * f - q_g * g.
  DiffPoly p_f, q_g;
};

/// a holds a_0..a_{m-1}; they must not involve y.
ReductionChain reduce_mod_f_g(const Riccati& f, const std::vector<DiffPoly>& a);

/// Replays the witness: g4 - (g' - p_f f - q_g g) is structurally zero, and
/// each step has the expected y-degree.
bool check_chain(const Riccati& f, const ReductionChain& ch);

/// a0' + c3 a0^3 - c2 a0^2 + c1 a0 - c0.
DiffPoly g0_formula(const Riccati& f, const DiffPoly& a0);

struct LemmaSample {
  DiffPoly a, b;
};

/// Order lemma in one indeterminate r: for d = max ord, the hypothesis
/// a/b not in K(r, ..., r^(d-1)) holds iff ord(a'b - ab') = d + 1.
/// nullopt when neither a nor b involves r.
struct OrderCheck {
  bool hypothesis = false;
  bool conclusion = false;
  bool holds() const { return hypothesis == conclusion; }
};
std::optional<OrderCheck> check_order_lemma(const LemmaSample& s, const DiffIndet& r);

/// For a, b free of derivatives of r1, r2: r1' is absent from a'b - ab'
/// iff a/b lies in E(r2).
OrderCheck check_r1_lemma(const LemmaSample& s);

struct OrderLemmaReport {
  int order_samples = 0;
  int order_failures = 0;
  int order_hypothesis_true = 0;
  int r1_samples = 0;
  int r1_failures = 0;
  int r1_in_field = 0;
  std::vector<std::string> counterexamples;
};

OrderLemmaReport order_lemma_checks(int samples, std::uint32_t seed);

}  // namespace liegauge
