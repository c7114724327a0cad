#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "liegauge/gaugegen.hpp"
#include "liegauge/monoext.hpp"

namespace liegauge {

/// Raised when a pipeline step finds a violated invariant; step() names it.
class NormalFormError : public std::runtime_error {
 public:
  NormalFormError(std::string step, const std::string& msg)
      : std::runtime_error(step + ": " + msg), step_(std::move(step)) {}
  const std::string& step() const { return step_; }

 private:
  std::string step_;
};

struct ComplementarySet {
  /// Positive root indices, ordered by height then index.
  std::vector<int> gamma;
  std::vector<int> heights;
};

/// Lowest-index complement of ad(A0+)(grade -(j+1)) in grade -j, for every j.
ComplementarySet complementary_roots(const LieRepresentation& rep);

/// A0+ + sum t_i X_{-gamma_i}.
template <class T>
LieElement<T> normal_form_matrix(const LieRepresentation& rep, const ComplementarySet& comp, const std::vector<T>& t) {
  if (t.size() != comp.gamma.size()) throw std::invalid_argument("normal_form_matrix: expected " + std::to_string(comp.gamma.size()) + " coefficients");
  auto e = zero_element<T>(rep);
  for (int i = 0; i < rep.rank(); ++i) e[rep.root_slot(i)] = T(1);
  for (std::size_t i = 0; i < t.size(); ++i) e[rep.root_slot(rep.roots().negate(comp.gamma[i]))] = t[i];
  return e;
}

/// Substitutes values for indeterminates; derivatives are taken in the ring.
DiffFrac evaluate(const DiffPoly& p, const std::map<DiffIndet, DiffFrac>& values, const FracRing& ring);

struct Step1Result {
  SwSystem sw;
  TriangularSystem sys;
  /// Gauged coordinates reduced modulo sys.
  LieElement<DiffPoly> h;
};

Step1Result step1_gauge(const LieRepresentation& rep, const WeylElement& w);

struct Step2Result {
  /// x_i = prod_j h_j^{Q_ij}, Q = -Cartan^{-1}.
  QMatrix q;
  std::shared_ptr<const ExtContext> ctx;
  std::vector<ExtElem> x;
  GroupElement<ExtElem> torus;
  LieElement<ExtElem> g_ext;
  /// g has only integral exponents, so it lies in K.
  LieElement<DiffFrac> g;
};

/// h holds the step-1 coordinates; ring is the coefficient field they live in.
Step2Result step2_normalize(const LieRepresentation& rep, const LieElement<DiffPoly>& h, const FracRing& ring);

struct Step3Param {
  int height = 0;
  /// Negative root index.
  int root = 0;
  DiffPoly symbolic;
  DiffFrac value;
};

/// Step 3 over a generic element with g0_i = y_i, g-_k = x_k and g+ = A0+.
struct Step3Symbolic {
  std::vector<Step3Param> params;
  std::vector<DiffPoly> t;
  LieElement<DiffPoly> final_element;
  /// Degree one with constant coefficient in the own slot variable, no proper
  /// derivatives of it, no later complementary slot variables.
  bool structure_ok = true;
  std::string structure_detail;
};

Step3Symbolic step3_symbolic(const LieRepresentation& rep, const ComplementarySet& comp);

struct Step3Result {
  Step3Symbolic symbolic;
  std::vector<Step3Param> params;
  std::vector<DiffFrac> t;
  LieElement<DiffFrac> final_element;
};

Step3Result step3_transformation(const LieRepresentation& rep, const LieElement<DiffFrac>& g,
                                 const ComplementarySet& comp, const FracRing& ring);

/// Generic element with the positive non-simple coordinates set to zero.
/// Steps 2 and 3 run over the free differential field of its symbols, which
/// stand for the step-1 coordinates h (ap_j for h+_j, a0_i, am_k likewise).
LieElement<DiffPoly> reduced_generic_element(const LieRepresentation& rep);

/// Sends each symbol of reduced_generic_element to the matching coordinate of h.
std::map<DiffIndet, DiffFrac> h_substitution(const LieRepresentation& rep, const LieElement<DiffPoly>& h);

struct PipelineOptions {
  bool verify = true;
  /// Also expand t in K and re-gauge A there directly (feasible for small ranks only).
  bool direct_in_k = false;
};

struct NormalFormResult {
  WeylElement w;
  ComplementarySet comp;
  Step1Result step1;
  /// Steps 2 and 3 over the symbols of reduced_generic_element.
  Step2Result step2;
  Step3Result step3;
  /// gauge(U_K...U_1 t(x), H) = A_G(t) over the free field, H the reduced generic element.
  bool regauge_verified = false;
  /// t with h replaced by its values in K.
  std::optional<std::vector<DiffFrac>> t_in_k;
  /// gauge(U_K...U_1 t(x) n(w) u_w(b), A) = A_G(t) checked directly in K.
  std::optional<bool> regauge_in_k;
  /// Every t_i survives the specialization b = 0 of K.
  bool t_nonzero = false;
};

NormalFormResult normal_form_pipeline(const LieRepresentation& rep, PipelineOptions opt = {});

bool verify_regauge(const LieRepresentation& rep, const NormalFormResult& res);

/// Expands t in K and re-gauges the generic A by the accumulated element.
bool verify_regauge_in_k(const LieRepresentation& rep, NormalFormResult& res);

/// Specialization b = 0, with each S_w equation solved for its a-_i of largest
/// height.  It kills the S_w ideal, so a nonzero image proves t_i != 0 in K.
bool t_nonzero_witness(const LieRepresentation& rep, const NormalFormResult& res);

nlohmann::json to_json(const LieRepresentation& rep, const NormalFormResult& res);

}  // namespace liegauge
