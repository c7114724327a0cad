#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "liegauge/diffpoly.hpp"

namespace liegauge {

/// Key (equation index, derivation count) of a witness coefficient.
using WitnessKey = std::pair<std::size_t, std::uint32_t>;

struct PseudoRemainder {
  DiffPoly remainder;
  /// Product of powers of initials and separants.
  DiffPoly multiplier{1};
  /// multiplier*p - remainder = sum of coeff * derive(eqs[i], k).
  std::map<WitnessKey, DiffPoly> witness;
};

/// Ritt-style pseudo-reduction of p modulo eqs and their derivatives.
/// Proper derivatives of leaders are removed with separants; leaders
/// themselves are reduced to degree below the equation's degree with initials.
PseudoRemainder pseudo_reduce(const DiffPoly& p, const std::vector<DiffPoly>& eqs, const Ranking& rk);

/// Recomputes multiplier*p - remainder - sum(witness) and tests it for zero.
bool check_witness(const DiffPoly& p, const std::vector<DiffPoly>& eqs, const PseudoRemainder& pr);

/// True if some derivative of p admits a pseudo-reduction step by eqs.
bool is_reducible(const DiffPoly& p, const std::vector<DiffPoly>& eqs, const Ranking& rk);

enum class Verdict { Simple, NotSimple, Undecided };
const char* verdict_name(Verdict v);

struct SimplicityReport {
  Verdict verdict = Verdict::Simple;
  /// Violated condition ("1a", "1b", "1c", "2", "3") or empty.
  std::string condition;
  std::string detail;
};

/// Simplicity check.  Conditions 2 and 3 are differential: a member is
/// reducible when it contains a proper derivative of another equation's
/// leader (lower leaders themselves may occur, as in an algebraically simple
/// triangular system).  Condition 1(c) is checked by the surrogate "every
/// initial and separant pseudo-reduces to a nonzero constant"; a nonconstant
/// reduced initial or separant gives Undecided, a zero one gives NotSimple.
SimplicityReport is_simple(const std::vector<DiffPoly>& equations, const std::vector<DiffPoly>& inequations,
                           const Ranking& rk);

/// Solved system whose equations are linear in their leaders with constant
/// initials.  reduce() is the canonical normal form modulo the differential
/// ideal generated by the equations (every leader and proper derivative of a
/// leader is replaced by its solved form, recursively).
class TriangularSystem {
 public:
  struct Equation {
    Derivative leader;
    DiffPoly rhs;
    DiffPoly original;
    DiffPoly initial;
    DiffPoly separant;
  };

  TriangularSystem() : cache_(std::make_shared<Cache>()) {}
  /// Throws std::invalid_argument when an equation is not linear in its
  /// leader with constant initial, or two leaders share an indeterminate.
  TriangularSystem(const std::vector<DiffPoly>& equations, Ranking rk, std::vector<DiffPoly> inequations = {});

  const std::vector<Equation>& equations() const { return eqs_; }
  const std::vector<DiffPoly>& inequations() const { return ineqs_; }
  const Ranking& ranking() const { return rk_; }
  std::vector<DiffPoly> originals() const;
  bool empty() const { return eqs_.empty(); }

  /// True if v is a leader or a proper derivative of one.
  bool is_principal(const Derivative& v) const;

  DiffPoly reduce(const DiffPoly& p) const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<Derivative, DiffPoly> nf;
  };

  std::optional<DiffPoly> image(const Derivative& v) const;

  std::vector<Equation> eqs_;
  std::vector<DiffPoly> ineqs_;
  Ranking rk_;
  std::map<DiffIndet, std::size_t> by_indet_;
  std::shared_ptr<Cache> cache_;
};

inline DiffPoly triangular_reduce(const DiffPoly& p, const TriangularSystem& sys) { return sys.reduce(p); }

}  // namespace liegauge
