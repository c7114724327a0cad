#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liegauge/liealg.hpp"
#include "liegauge/triangular.hpp"

namespace liegauge {

/// A = sum ap_i X_{a_i} + sum am_i X_{-a_i} + sum a0_i H_i, where index i
/// runs over positive roots in enumeration order (1-based).
LieElement<DiffPoly> generic_element(const LieRepresentation& rep);

/// Which negative roots carry a b-parameter in u_w.
///   psi:        w^{-1}(Phi+ \ Delta), defined for resolving w;
///   inversions: w(Phi+) ∩ Phi-;
///   automatic:  psi when w is resolving, inversions otherwise.
enum class BSelector { automatic, psi, inversions };

/// Negative root indices, ascending.  Throws std::invalid_argument when psi
/// is requested for a non-resolving element.
std::vector<int> b_roots(const RootSystem& rs, const WeylElement& w, BSelector sel = BSelector::automatic);

/// u_{-a_{i1}}(b_{i1}) ... u_{-a_{ik}}(b_{ik}) in ascending root index.
GroupElement<DiffPoly> u_w_product(const LieRepresentation& rep, const WeylElement& w,
                                   BSelector sel = BSelector::automatic);

struct SwSystem {
  WeylElement w;
  bool resolving = false;
  std::optional<std::vector<int>> psi;
  std::vector<int> b_roots;
  /// Coefficients of X_{a_{l+1}} .. X_{a_m}.
  std::vector<DiffPoly> equations;
  /// All coordinates of n(w) u_w(b) . A.
  LieElement<DiffPoly> gauged;
  Ranking ranking;
};

/// Ranking with {b} >> {a}, orderly blocks, b weighted by root height.
Ranking adapted_ranking(const RootSystem& rs);

SwSystem build_sw(const LieRepresentation& rep, const WeylElement& w, BSelector sel = BSelector::automatic);

/// The solved system; requires the equations to be linear in their leaders.
TriangularSystem sw_triangular(const SwSystem& sys);

struct StatementCheck {
  std::string id;
  bool passed = false;
  std::string detail;
};

struct SwTheoremReport {
  bool applicable = false;
  std::string reason;
  std::vector<StatementCheck> statements;

  bool all_passed() const;
};

/// Checks statements 1, 2, 3 and 5; statement 4 (primality) is recorded as
/// cited.  Not applicable when w is not resolving.
SwTheoremReport verify_sw_theorem(const LieRepresentation& rep, const SwSystem& sys);

}  // namespace liegauge
