#include "liegauge/rootsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace liegauge {

Family parse_family(const std::string& name) {
  if (name == "A" || name == "a") return Family::A;
  if (name == "B" || name == "b") return Family::B;
  if (name == "C" || name == "c") return Family::C;
  if (name == "D" || name == "d") return Family::D;
  throw RootSystemError("unsupported family '" + name + "' (expected A, B, C or D)");
}

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

namespace {

std::vector<std::vector<int>> cartan_matrix(Family family, int l) {
  std::vector<std::vector<int>> a(static_cast<std::size_t>(l), std::vector<int>(static_cast<std::size_t>(l), 0));
  for (int i = 0; i < l; ++i) a[i][i] = 2;
  for (int i = 0; i + 1 < l; ++i) {
    a[i][i + 1] = -1;
    a[i + 1][i] = -1;
  }
  switch (family) {
    case Family::A: break;
    case Family::B:
      // alpha_l = e_l is short.
      a[l - 2][l - 1] = -2;
      a[l - 1][l - 2] = -1;
      break;
    case Family::C:
      // alpha_l = 2 e_l is long.
      a[l - 2][l - 1] = -1;
      a[l - 1][l - 2] = -2;
      break;
    case Family::D:
      // alpha_{l-1} = e_{l-1} - e_l, alpha_l = e_{l-1} + e_l.
      a[l - 2][l - 1] = 0;
      a[l - 1][l - 2] = 0;
      a[l - 3][l - 1] = -1;
      a[l - 1][l - 3] = -1;
      break;
  }
  return a;
}

std::vector<int> simple_norms(Family family, int l) {
  std::vector<int> n(static_cast<std::size_t>(l), 2);
  if (family == Family::B) {
    std::fill(n.begin(), n.end(), 4);
    n[l - 1] = 2;
  } else if (family == Family::C) {
    n[l - 1] = 4;
  }
  return n;
}

}  // namespace

RootSystem build_root_system(Family family, int rank) {
  int min_rank = 1;
  if (family == Family::B || family == Family::C) min_rank = 2;
  if (family == Family::D) min_rank = 3;
  if (rank < min_rank) {
    throw RootSystemError(std::string("rank ") + std::to_string(rank) + " unsupported for family " +
                          family_letter(family) + " (minimum " + std::to_string(min_rank) + ")");
  }
  RootSystem rs;
  rs.family_ = family;
  rs.rank_ = rank;
  rs.cartan_ = cartan_matrix(family, rank);
  rs.simple_norm_ = simple_norms(family, rank);

  const auto l = static_cast<std::size_t>(rank);
  std::set<RootVector> found;
  std::vector<std::vector<RootVector>> by_height(2);
  for (std::size_t i = 0; i < l; ++i) {
    RootVector v(l, 0);
    v[i] = 1;
    found.insert(v);
    by_height[1].push_back(v);
  }
  for (std::size_t h = 1; h < by_height.size(); ++h) {
    for (const auto& beta : by_height[h]) {
      for (std::size_t i = 0; i < l; ++i) {
        int r = 0;
        RootVector down = beta;
        while (true) {
          down[i] -= 1;
          if (!found.count(down)) break;
          ++r;
        }
        int pair = 0;
        for (std::size_t k = 0; k < l; ++k) pair += beta[k] * rs.cartan_[k][i];
        if (r - pair > 0) {
          RootVector up = beta;
          up[i] += 1;
          if (found.insert(up).second) {
            if (by_height.size() <= h + 1) by_height.emplace_back();
            by_height[h + 1].push_back(up);
          }
        }
      }
    }
  }
  for (std::size_t i = 0; i < l; ++i) {
    RootVector v(l, 0);
    v[i] = 1;
    rs.positive_.push_back(v);
  }
  for (std::size_t h = 2; h < by_height.size(); ++h) {
    auto layer = by_height[h];
    std::sort(layer.begin(), layer.end());
    for (auto& v : layer) rs.positive_.push_back(v);
  }
  for (const auto& v : rs.positive_) rs.heights_.push_back(std::accumulate(v.begin(), v.end(), 0));
  rs.all_ = rs.positive_;
  for (auto v : rs.positive_) {
    for (auto& c : v) c = -c;
    rs.all_.push_back(v);
  }
  return rs;
}

const RootVector& RootSystem::root(int idx) const {
  if (idx < 0 || idx >= size()) throw RootSystemError("root index out of range");
  return all_[static_cast<std::size_t>(idx)];
}

int RootSystem::height(int idx) const {
  if (idx < 0 || idx >= size()) throw RootSystemError("root index out of range");
  return idx < m() ? heights_[static_cast<std::size_t>(idx)] : -heights_[static_cast<std::size_t>(idx - m())];
}

int RootSystem::index_of(const RootVector& v) const {
  if (v.size() != static_cast<std::size_t>(rank_)) return -1;
  bool neg = false;
  RootVector p = v;
  if (std::any_of(v.begin(), v.end(), [](int c) { return c < 0; })) {
    neg = true;
    for (auto& c : p) c = -c;
  }
  auto it = std::find(positive_.begin(), positive_.end(), p);
  if (it == positive_.end()) return -1;
  const int idx = static_cast<int>(it - positive_.begin());
  return neg ? idx + m() : idx;
}

int RootSystem::max_height() const { return heights_.empty() ? 0 : *std::max_element(heights_.begin(), heights_.end()); }

int RootSystem::pairing(int beta, int i) const {
  const RootVector& b = root(beta);
  int s = 0;
  for (int k = 0; k < rank_; ++k) s += b[static_cast<std::size_t>(k)] * cartan_[k][i];
  return s;
}

int RootSystem::inner(int beta, int gamma) const {
  const RootVector& b = root(beta);
  const RootVector& g = root(gamma);
  int s = 0;
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) {
      s += b[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(j)] * cartan_[i][j] * simple_norm_[j] / 2;
    }
  }
  return s;
}

int RootSystem::cartan_integer(int beta, int alpha) const { return 2 * inner(beta, alpha) / inner(alpha, alpha); }

std::vector<int> RootSystem::exponents() const {
  std::vector<int> e;
  switch (family_) {
    case Family::A:
      for (int i = 1; i <= rank_; ++i) e.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= rank_; ++i) e.push_back(2 * i - 1);
      break;
    case Family::D:
      for (int i = 1; i < rank_; ++i) e.push_back(2 * i - 1);
      e.push_back(rank_ - 1);
      std::sort(e.begin(), e.end());
      break;
  }
  return e;
}

std::string RootSystem::name() const { return std::string(1, family_letter(family_)) + std::to_string(rank_); }

RootVector reflect(const RootSystem& rs, const RootVector& beta, int i) {
  int pair = 0;
  for (int k = 0; k < rs.rank(); ++k) pair += beta[static_cast<std::size_t>(k)] * rs.cartan()[k][i];
  RootVector out = beta;
  out[static_cast<std::size_t>(i)] -= pair;
  return out;
}

WeylElement weyl_identity(const RootSystem& rs) {
  WeylElement w;
  w.action.resize(static_cast<std::size_t>(rs.size()));
  std::iota(w.action.begin(), w.action.end(), 0);
  return w;
}

WeylElement weyl_from_word(const RootSystem& rs, const std::vector<int>& word) {
  for (int i : word) {
    if (i < 1 || i > rs.rank()) {
      throw RootSystemError("simple reflection index " + std::to_string(i) + " out of range 1.." +
                            std::to_string(rs.rank()));
    }
  }
  WeylElement w;
  w.word = word;
  w.action.resize(static_cast<std::size_t>(rs.size()));
  for (int r = 0; r < rs.size(); ++r) {
    RootVector v = rs.root(r);
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = reflect(rs, v, *it - 1);
    w.action[static_cast<std::size_t>(r)] = rs.index_of(v);
  }
  return w;
}

WeylElement compose(const WeylElement& lhs, const WeylElement& rhs) {
  WeylElement w;
  w.word = lhs.word;
  w.word.insert(w.word.end(), rhs.word.begin(), rhs.word.end());
  w.action.resize(rhs.action.size());
  for (std::size_t r = 0; r < rhs.action.size(); ++r) {
    w.action[r] = lhs.action[static_cast<std::size_t>(rhs.action[r])];
  }
  return w;
}

WeylElement inverse(const WeylElement& w) {
  WeylElement inv;
  inv.word.assign(w.word.rbegin(), w.word.rend());
  inv.action.resize(w.action.size());
  for (std::size_t r = 0; r < w.action.size(); ++r) inv.action[static_cast<std::size_t>(w.action[r])] = static_cast<int>(r);
  return inv;
}

int weyl_length(const RootSystem& rs, const WeylElement& w) {
  int n = 0;
  for (int r = 0; r < rs.m(); ++r) {
    if (!rs.is_positive(w.apply(r))) ++n;
  }
  return n;
}

WeylElement weyl_from_action(const RootSystem& rs, const std::vector<int>& action) {
  if (action.size() != static_cast<std::size_t>(rs.size())) throw RootSystemError("action has wrong size");
  WeylElement cur;
  cur.action = action;
  const WeylElement id = weyl_identity(rs);
  std::vector<int> pushed;
  while (!(cur == id)) {
    int descent = -1;
    for (int i = 0; i < rs.rank(); ++i) {
      if (!rs.is_positive(cur.apply(i))) {
        descent = i;
        break;
      }
    }
    if (descent < 0 || static_cast<int>(pushed.size()) > rs.m()) {
      throw RootSystemError("permutation of roots is not induced by a Weyl group element");
    }
    cur = compose(cur, weyl_from_word(rs, {descent + 1}));
    pushed.push_back(descent + 1);
  }
  WeylElement w = weyl_from_word(rs, std::vector<int>(pushed.rbegin(), pushed.rend()));
  if (w.action != action) throw RootSystemError("permutation of roots is not induced by a Weyl group element");
  return w;
}

WeylElement longest_element(const RootSystem& rs) {
  WeylElement w = weyl_identity(rs);
  while (true) {
    int ascent = -1;
    for (int i = 0; i < rs.rank(); ++i) {
      if (rs.is_positive(w.apply(i))) {
        ascent = i;
        break;
      }
    }
    if (ascent < 0) break;
    w = compose(w, weyl_from_word(rs, {ascent + 1}));
  }
  return w;
}

std::vector<int> inversion_set(const RootSystem& rs, const WeylElement& w) {
  std::vector<int> out;
  for (int r = 0; r < rs.m(); ++r) {
    const int img = w.apply(r);
    if (!rs.is_positive(img)) out.push_back(img);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ResolvingResult is_resolving(const RootSystem& rs, const WeylElement& w) {
  ResolvingResult res;
  const WeylElement winv = inverse(w);
  std::vector<int> psi;
  bool in_negative = true;
  for (int r = rs.rank(); r < rs.m(); ++r) {
    const int pre = winv.apply(r);
    if (rs.is_positive(pre)) in_negative = false;
    psi.push_back(pre);
  }
  std::sort(psi.begin(), psi.end());
  if (!in_negative) return res;
  const auto inv = inversion_set(rs, w);
  res.resolving = std::includes(inv.begin(), inv.end(), psi.begin(), psi.end());
  res.psi = std::move(psi);
  return res;
}

}  // namespace liegauge
