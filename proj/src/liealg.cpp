#include "liegauge/liealg.hpp"

#include <algorithm>

#include "liegauge/diffpoly.hpp"

namespace liegauge {

namespace {

QMatrix unit(std::size_t n, std::size_t p, std::size_t q) {
  QMatrix m(n, n);
  m(p, q) = 1;
  return m;
}

// D(k) = E_kk - E_{n+1-k,n+1-k}, 1-based k.
QMatrix dmat(std::size_t n, int k) {
  QMatrix m(n, n);
  m(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(k - 1)) = 1;
  m(n - static_cast<std::size_t>(k), n - static_cast<std::size_t>(k)) = -1;
  return m;
}

// Nonzero scalar c with a = c*b, or 0 when a is not a multiple of b.
Rational ratio(const QMatrix& a, const QMatrix& b) {
  Rational c = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (b(i, j) == 0) {
        if (a(i, j) != 0) return 0;
        continue;
      }
      const Rational r = a(i, j) / b(i, j);
      if (c == 0) c = r;
      if (r != c) return 0;
    }
  return c;
}

Rational first_nonzero(const QMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) return a(i, j);
  return 0;
}

}  // namespace

namespace detail {

std::string root_tag(const RootSystem& rs, int root) {
  return std::string(rs.is_positive(root) ? "+" : "-") + std::to_string(rs.positive_index(root) + 1);
}

}  // namespace detail

LieRepresentation::LieRepresentation(RootSystem rs) : rs_(std::move(rs)) {
  const int l = rs_.rank();
  const int m = rs_.m();
  std::vector<QMatrix> hs;
  switch (rs_.family()) {
    case Family::A:
      n_ = static_cast<std::size_t>(l + 1);
      for (int i = 0; i < l; ++i) {
        const auto ii = static_cast<std::size_t>(i);
        hs.push_back(unit(n_, ii, ii) - unit(n_, ii + 1, ii + 1));
      }
      break;
    case Family::B:
    case Family::C:
    case Family::D: {
      const Family f = rs_.family();
      n_ = static_cast<std::size_t>(f == Family::B ? 2 * l + 1 : 2 * l);
      for (int i = 1; i < l; ++i) hs.push_back(dmat(n_, i) - dmat(n_, i + 1));
      if (f == Family::B) hs.push_back(dmat(n_, l) * Rational(2));
      if (f == Family::C) hs.push_back(dmat(n_, l));
      if (f == Family::D) hs.push_back(dmat(n_, l - 1) + dmat(n_, l));
      form_ = QMatrix(n_, n_);
      if (f == Family::C) {
        const auto half = static_cast<std::size_t>(l);
        for (std::size_t i = 0; i < half; ++i) {
          form_(i, n_ - 1 - i) = 1;
          form_(n_ - 1 - i, i) = -1;
        }
      } else {
        for (std::size_t i = 0; i < n_; ++i) form_(i, n_ - 1 - i) = 1;
      }
      break;
    }
  }

  // Root space of a root: matching weight spaces of gl_n cut down to g.
  auto root_space = [&](int r) {
    std::vector<std::pair<std::size_t, std::size_t>> cand;
    for (std::size_t p = 0; p < n_; ++p)
      for (std::size_t q = 0; q < n_; ++q) {
        if (p == q) continue;
        bool ok = true;
        for (int i = 0; i < l && ok; ++i) {
          const auto& h = hs[static_cast<std::size_t>(i)];
          ok = h(p, p) - h(q, q) == rs_.pairing(r, i);
        }
        if (ok) cand.emplace_back(p, q);
      }
    if (cand.empty()) throw std::logic_error("empty root space");
    if (form_.rows() == 0) {
      if (cand.size() != 1) throw std::logic_error("root space not one-dimensional");
      return unit(n_, cand[0].first, cand[0].second);
    }
    // Constraint X^T J + J X = 0, linear in the candidate coefficients.
    QMatrix sys(n_ * n_, cand.size());
    for (std::size_t k = 0; k < cand.size(); ++k) {
      const QMatrix e = unit(n_, cand[k].first, cand[k].second);
      const QMatrix c = e.transpose() * form_ + form_ * e;
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) sys(i * n_ + j, k) = c(i, j);
    }
    const auto piv = row_reduce(sys);
    if (piv.size() + 1 != cand.size()) throw std::logic_error("root space not one-dimensional");
    std::size_t free = 0;
    while (std::find(piv.begin(), piv.end(), free) != piv.end()) ++free;
    QMatrix x(n_, n_);
    x(cand[free].first, cand[free].second) = 1;
    for (std::size_t row = 0; row < piv.size(); ++row) {
      x(cand[piv[row]].first, cand[piv[row]].second) = -sys(row, free);
    }
    return x;
  };

  auto coroot_of = [&](int r) {
    // H_alpha = sum_i k_i (a_i, a_i)/(alpha, alpha) H_i.
    const RootVector& v = rs_.root(r);
    QMatrix h(n_, n_);
    for (int i = 0; i < l; ++i) {
      if (v[static_cast<std::size_t>(i)] == 0) continue;
      h = h + hs[static_cast<std::size_t>(i)] *
                  make_rational(v[static_cast<std::size_t>(i)] * rs_.inner(i, i), rs_.inner(r, r));
    }
    return h;
  };

  std::vector<QMatrix> xs(static_cast<std::size_t>(2 * m));
  for (int r = 0; r < m; ++r) {
    QMatrix x;
    if (rs_.is_simple(r)) {
      x = root_space(r);
      x = x * (Rational(1) / first_nonzero(x));
    } else {
      // Extraspecial pair (a_i, beta) with the smallest simple index i.
      const RootVector& v = rs_.root(r);
      for (int i = 0; i < l; ++i) {
        RootVector bv = v;
        --bv[static_cast<std::size_t>(i)];
        const int beta = rs_.index_of(bv);
        if (beta < 0 || !rs_.is_positive(beta)) continue;
        int s = 0;
        for (RootVector cur = bv;;) {
          --cur[static_cast<std::size_t>(i)];
          if (rs_.index_of(cur) < 0) break;
          ++s;
        }
        x = commutator(xs[static_cast<std::size_t>(i)], xs[static_cast<std::size_t>(beta)]) * Rational(1, s + 1);
        break;
      }
    }
    xs[static_cast<std::size_t>(r)] = x;
    QMatrix y = root_space(rs_.negate(r));
    const Rational c = ratio(commutator(x, y), coroot_of(r));
    if (c == 0) throw std::logic_error("bracket of opposite root vectors is not the coroot");
    xs[static_cast<std::size_t>(rs_.negate(r))] = y * (Rational(1) / c);
  }

  basis_ = hs;
  basis_.insert(basis_.end(), xs.begin(), xs.end());
  entries_.resize(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k)
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (basis_[k](i, j) != 0) entries_[k].push_back({i, j, basis_[k](i, j)});

  // Coordinate functionals: pick dim independent entries and invert there.
  const std::size_t d = basis_.size();
  QMatrix bt(d, n_ * n_);
  for (std::size_t k = 0; k < d; ++k)
    for (const auto& e : entries_[k]) bt(k, e.row * n_ + e.col) = e.value;
  QMatrix red = bt;
  const auto piv = row_reduce(red);
  if (piv.size() != d) throw std::logic_error("basis matrices are dependent");
  QMatrix s(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t k = 0; k < d; ++k) s(a, k) = bt(k, piv[a]);
  const QMatrix f = s.inverse();
  functionals_.resize(d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t a = 0; a < d; ++a)
      if (f(k, a) != 0) functionals_[k].emplace_back(piv[a], f(k, a));
}

QMatrix LieRepresentation::coroot(int root) const { return commutator(x(root), x(rs_.negate(root))); }

Rational LieRepresentation::structure_constant(int a, int b) const {
  RootVector v = rs_.root(a);
  const RootVector& w = rs_.root(b);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += w[i];
  const int s = rs_.index_of(v);
  if (s < 0) return 0;
  const Rational c = ratio(commutator(x(a), x(b)), x(s));
  if (c == 0) throw std::logic_error("bracket is not a multiple of the root vector");
  return c;
}

std::string LieRepresentation::slot_label(std::size_t k) const {
  const int l = rs_.rank();
  if (k < static_cast<std::size_t>(l)) return "H" + std::to_string(k + 1);
  return "X" + detail::root_tag(rs_, static_cast<int>(k) - l);
}

std::vector<Rational> LieRepresentation::extract(const QMatrix& q) const {
  std::vector<Rational> c(dim());
  for (std::size_t k = 0; k < dim(); ++k)
    for (const auto& [entry, v] : functionals_[k]) c[k] += v * q(entry / n_, entry % n_);
  QMatrix back(n_, n_);
  for (std::size_t k = 0; k < dim(); ++k)
    if (c[k] != 0) back = back + basis_[k] * c[k];
  if (!(back == q)) throw ExtractionError("matrix is not in the Lie algebra");
  return c;
}

std::pair<QMatrix, QMatrix> weyl_matrices(const LieRepresentation& rep, const std::vector<int>& word) {
  const std::size_t n = rep.n();
  auto u = [&](int root, long c) {
    return detail::exp_nilpotent<DiffPoly>(rep.x(root), DiffPoly(c), n);
  };
  auto to_q = [&](const Matrix<DiffPoly>& m) {
    QMatrix q(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q(i, j) = m(i, j).is_zero() ? Rational(0) : m(i, j).constant_value();
    return q;
  };
  QMatrix mat = QMatrix::identity(n);
  QMatrix inv = QMatrix::identity(n);
  const int l = rep.rank();
  const int m = rep.roots().m();
  for (int i : word) {
    if (i < 1 || i > l) throw RootSystemError("simple reflection index out of range");
    const int a = i - 1;
    const QMatrix ni = to_q(u(a, 1) * u(a + m, -1) * u(a, 1));
    const QMatrix ni_inv = to_q(u(a, -1) * u(a + m, 1) * u(a, -1));
    mat = mat * ni;
    inv = ni_inv * inv;
  }
  return {mat, inv};
}

std::vector<Rational> adjoint_string_coeffs(const LieRepresentation& rep, int beta, int alpha) {
  const RootSystem& rs = rep.roots();
  if (alpha == beta || alpha == rs.negate(beta)) throw std::invalid_argument("roots are linearly dependent");
  const DiffPoly x(xv(1));
  const auto u = root_group_element(rep, beta, x);
  const PolyRing ring;
  const auto img = rep.extract(adjoint(u, Matrix<DiffPoly>::from(rep.x(alpha))), ring);
  std::vector<Rational> c;
  RootVector v = rs.root(alpha);
  const RootVector& b = rs.root(beta);
  std::vector<bool> used(rep.dim(), false);
  for (int i = 0;; ++i) {
    const int idx = rs.index_of(v);
    if (idx < 0) break;
    const std::size_t slot = rep.root_slot(idx);
    used[slot] = true;
    const DiffPoly& coef = img[slot];
    const Derivative xd{xv(1), 0};
    const Rational ci = coef.coefficient(xd, static_cast<std::uint32_t>(i)).constant_term();
    if (!(coef == DiffPoly(xd, static_cast<std::uint32_t>(i)) * ci)) throw std::logic_error("string coefficient is not a monomial");
    c.push_back(ci);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += b[k];
  }
  for (std::size_t k = 0; k < rep.dim(); ++k)
    if (!used[k] && !img[k].is_zero()) throw std::logic_error("adjoint image leaves the root string");
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

WeylElement weyl_action_from_matrix(const LieRepresentation& rep, const QMatrix& m) {
  if (m.rows() != rep.n() || m.cols() != rep.n()) throw RootSystemError("matrix size does not match the representation");
  QMatrix inv;
  try {
    inv = m.inverse();
  } catch (const std::domain_error&) {
    throw RootSystemError("matrix is singular");
  }
  const RootSystem& rs = rep.roots();
  std::vector<int> action(static_cast<std::size_t>(rs.size()));
  for (int r = 0; r < rs.size(); ++r) {
    std::vector<Rational> c;
    try {
      c = rep.extract(m * rep.x(r) * inv);
    } catch (const ExtractionError&) {
      throw RootSystemError("conjugation leaves the Lie algebra");
    }
    int target = -1;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] == 0) continue;
      if (target >= 0 || k < static_cast<std::size_t>(rep.rank())) throw RootSystemError("matrix does not normalize the torus");
      target = static_cast<int>(k) - rep.rank();
    }
    if (target < 0) throw RootSystemError("matrix does not normalize the torus");
    action[static_cast<std::size_t>(r)] = target;
  }
  return weyl_from_action(rs, action);
}

}  // namespace liegauge
