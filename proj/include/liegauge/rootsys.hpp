#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liegauge {

enum class Family { A, B, C, D };

Family parse_family(const std::string& name);
char family_letter(Family f);

class RootSystemError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using RootVector = std::vector<int>;

/// Root system of a classical type in simple-root coordinates.
///
/// Indexing is zero-based: positive roots occupy 0..m-1 (simple roots first,
/// then non-decreasing height with lexicographic tie-break), and the root
/// m + i is the negative of root i.  In printed output root i is alpha_{i+1}.
class RootSystem {
 public:
  Family family() const { return family_; }
  int rank() const { return rank_; }
  /// Number of positive roots.
  int m() const { return static_cast<int>(positive_.size()); }
  int size() const { return 2 * m(); }

  const RootVector& root(int idx) const;
  int height(int idx) const;
  bool is_positive(int idx) const { return idx < m(); }
  bool is_simple(int idx) const { return idx < rank_; }
  int negate(int idx) const { return idx < m() ? idx + m() : idx - m(); }
  /// Index of |root| among the positive roots.
  int positive_index(int idx) const { return idx < m() ? idx : idx - m(); }
  /// Returns -1 when the vector is not a root.
  int index_of(const RootVector& v) const;
  int max_height() const;

  /// a_ij = <alpha_i, alpha_j^vee> = alpha_i(H_j).
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  /// beta(H_i) for root index beta and simple index i.
  int pairing(int beta, int i) const;
  /// beta(H_alpha) for arbitrary roots (uses the invariant form).
  int cartan_integer(int beta, int alpha) const;
  /// Invariant form (beta, gamma), normalized so short roots have squared length 2
  /// in simply-laced types and 1/2 ratios are avoided (integral form).
  int inner(int beta, int gamma) const;

  /// Exponents of the Lie algebra (ascending).
  std::vector<int> exponents() const;

  std::string name() const;

  friend RootSystem build_root_system(Family family, int rank);

 private:
  Family family_ = Family::A;
  int rank_ = 0;
  std::vector<RootVector> positive_;
  std::vector<RootVector> all_;
  std::vector<int> heights_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> simple_norm_;  // (alpha_i, alpha_i)
};

RootSystem build_root_system(Family family, int rank);

/// Weyl group element: a word in simple reflections (1-based indices) plus the
/// induced permutation of root indices.  Equality compares actions only.
struct WeylElement {
  std::vector<int> word;
  std::vector<int> action;

  bool operator==(const WeylElement& other) const { return action == other.action; }
  int apply(int root) const { return action[static_cast<std::size_t>(root)]; }
};

WeylElement weyl_identity(const RootSystem& rs);
/// s_{i1} s_{i2} ... s_{ik}, applied right to left.  Throws on a bad index.
WeylElement weyl_from_word(const RootSystem& rs, const std::vector<int>& word);
/// Simple reflection action on a root vector: beta - beta(H_i) alpha_i.
RootVector reflect(const RootSystem& rs, const RootVector& beta, int i);
WeylElement compose(const WeylElement& lhs, const WeylElement& rhs);
WeylElement inverse(const WeylElement& w);
/// Number of positive roots sent to negative roots.
int weyl_length(const RootSystem& rs, const WeylElement& w);
/// Builds an element from a root permutation and attaches a reduced word.
/// Throws RootSystemError if the permutation is not induced by a Weyl element.
WeylElement weyl_from_action(const RootSystem& rs, const std::vector<int>& action);
WeylElement longest_element(const RootSystem& rs);

/// w(Phi+) ∩ Phi-, as ascending negative-root indices.
std::vector<int> inversion_set(const RootSystem& rs, const WeylElement& w);

struct ResolvingResult {
  bool resolving = false;
  /// w^{-1}(Phi+ \ Delta), present when it lies in Phi- (condition A).
  std::optional<std::vector<int>> psi;
};

ResolvingResult is_resolving(const RootSystem& rs, const WeylElement& w);

}  // namespace liegauge
