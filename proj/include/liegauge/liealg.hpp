#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "liegauge/rings.hpp"
#include "liegauge/rootsys.hpp"

namespace liegauge {

/// Raised when a matrix does not lie in the Lie algebra spanned by the basis.
class ExtractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coordinates on the Chevalley basis.  Slot k < l is H_{k+1}; slot l + r is
/// the root vector of root index r.
template <class T>
struct LieElement {
  std::vector<T> coords;

  T& operator[](std::size_t k) { return coords[k]; }
  const T& operator[](std::size_t k) const { return coords[k]; }
};

/// Chevalley basis of the natural matrix representation of a classical Lie
/// algebra.  Type A is sl_{l+1}; types B, C, D use the orthogonal and
/// symplectic algebras with respect to the antidiagonal form, with the torus
/// diagonal as diag(x_1, ..., x_l, [0], -x_l, ..., -x_1).
class LieRepresentation {
 public:
  struct Entry {
    std::size_t row;
    std::size_t col;
    Rational value;
  };

  explicit LieRepresentation(RootSystem rs);

  const RootSystem& roots() const { return rs_; }
  std::size_t n() const { return n_; }
  int rank() const { return rs_.rank(); }
  std::size_t dim() const { return basis_.size(); }
  std::size_t root_slot(int root) const { return static_cast<std::size_t>(rs_.rank() + root); }

  const QMatrix& basis(std::size_t k) const { return basis_[k]; }
  const std::vector<Entry>& basis_entries(std::size_t k) const { return entries_[k]; }
  const QMatrix& h(int i) const { return basis_[static_cast<std::size_t>(i)]; }
  const QMatrix& x(int root) const { return basis_[root_slot(root)]; }
  /// [X_r, X_{-r}].
  QMatrix coroot(int root) const;
  /// N with [X_a, X_b] = N X_{a+b}; zero when a + b is not a root.
  Rational structure_constant(int a, int b) const;
  /// The invariant bilinear form (identity-free only for B, C, D).
  const QMatrix& form() const { return form_; }

  /// "H1", "X+3", "X-3" (root labels are 1-based positive indices).
  std::string slot_label(std::size_t k) const;

  /// Exact coordinates; throws ExtractionError when q is outside the algebra.
  std::vector<Rational> extract(const QMatrix& q) const;

  template <class T, class Ring>
  LieElement<T> extract(const Matrix<T>& m, const Ring& ring) const {
    LieElement<T> e{std::vector<T>(dim())};
    for (std::size_t k = 0; k < dim(); ++k) {
      T acc;
      for (const auto& [entry, c] : functionals_[k]) {
        const T& v = m(entry / n_, entry % n_);
        if (!v.is_zero()) acc = acc + v * T(c);
      }
      e[k] = ring.normalize(acc);
    }
    const Matrix<T> back = materialize(e);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        const T d = m(i, j) - back(i, j);
        if (!d.is_zero() && !ring.is_zero(d)) {
          throw ExtractionError("nonzero residual at entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                ")");
        }
      }
    return e;
  }

  template <class T>
  Matrix<T> materialize(const LieElement<T>& e) const {
    Matrix<T> m(n_, n_);
    for (std::size_t k = 0; k < dim(); ++k) {
      if (e[k].is_zero()) continue;
      for (const auto& en : entries_[k]) m(en.row, en.col) = m(en.row, en.col) + e[k] * T(en.value);
    }
    return m;
  }

 private:
  RootSystem rs_;
  std::size_t n_ = 0;
  QMatrix form_;
  std::vector<QMatrix> basis_;
  std::vector<std::vector<Entry>> entries_;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> functionals_;
};

template <class T>
LieElement<T> zero_element(const LieRepresentation& rep) {
  return {std::vector<T>(rep.dim())};
}

/// Group element with an explicit inverse.  tag records how it was built.
template <class T>
struct GroupElement {
  Matrix<T> mat;
  Matrix<T> inv;
  std::string tag;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    return {a.mat * b.mat, b.inv * a.inv, a.tag + "*" + b.tag};
  }
};

template <class T>
GroupElement<T> group_identity(const LieRepresentation& rep) {
  return {Matrix<T>::identity(rep.n()), Matrix<T>::identity(rep.n()), "1"};
}

namespace detail {

template <class T>
Matrix<T> exp_nilpotent(const QMatrix& x, const T& c, std::size_t n) {
  Matrix<T> r = Matrix<T>::identity(n);
  QMatrix pw = QMatrix::identity(n);
  T cj(1);
  Rational fact(1);
  for (unsigned j = 1;; ++j) {
    pw = pw * x;
    if (pw.is_zero()) break;
    cj = cj * c;
    fact *= j;
    const Matrix<T> term = Matrix<T>::from(pw * (Rational(1) / fact));
    r = r + term.scaled(cj);
  }
  return r;
}

std::string root_tag(const RootSystem& rs, int root);

}  // namespace detail

/// u_r(c) = exp(c X_r).
template <class T>
GroupElement<T> root_group_element(const LieRepresentation& rep, int root, const T& c) {
  const QMatrix& x = rep.x(root);
  return {detail::exp_nilpotent(x, c, rep.n()), detail::exp_nilpotent(x, T(0) - c, rep.n()),
          "u" + detail::root_tag(rep.roots(), root)};
}

/// t_i(x): the image of diag(x, 1/x) under the SL2 of the i-th simple root
/// (0-based i).  The caller supplies the inverse of x.
template <class T>
GroupElement<T> torus_element(const LieRepresentation& rep, int i, const T& x, const T& x_inv) {
  const QMatrix& h = rep.h(i);
  GroupElement<T> g{Matrix<T>(rep.n(), rep.n()), Matrix<T>(rep.n(), rep.n()), "t" + std::to_string(i + 1)};
  for (std::size_t p = 0; p < rep.n(); ++p) {
    const long d = h(p, p).get_num().get_si();
    const unsigned e = static_cast<unsigned>(d < 0 ? -d : d);
    g.mat(p, p) = power(d >= 0 ? x : x_inv, e);
    g.inv(p, p) = power(d >= 0 ? x_inv : x, e);
  }
  return g;
}

/// n(w) as the product of n_i = u_{a_i}(1) u_{-a_i}(-1) u_{a_i}(1) along the word.
std::pair<QMatrix, QMatrix> weyl_matrices(const LieRepresentation& rep, const std::vector<int>& word);

template <class T>
GroupElement<T> weyl_representative(const LieRepresentation& rep, const WeylElement& w) {
  const auto [m, inv] = weyl_matrices(rep, w.word);
  std::string tag = "n(";
  for (std::size_t k = 0; k < w.word.size(); ++k) tag += (k ? "," : "") + std::to_string(w.word[k]);
  return {Matrix<T>::from(m), Matrix<T>::from(inv), tag + ")"};
}

template <class T>
Matrix<T> adjoint(const GroupElement<T>& g, const Matrix<T>& m) {
  return g.mat * m * g.inv;
}

/// g' g^{-1}, extracted with a residual check.
template <class T, class Ring>
LieElement<T> log_derivative(const LieRepresentation& rep, const GroupElement<T>& g, const Ring& ring) {
  return rep.extract(derive(g.mat, ring) * g.inv, ring);
}

/// g.A = g A g^{-1} + g' g^{-1}.
template <class T, class Ring>
LieElement<T> gauge(const LieRepresentation& rep, const GroupElement<T>& g, const LieElement<T>& a, const Ring& ring) {
  return rep.extract(adjoint(g, rep.materialize(a)) + derive(g.mat, ring) * g.inv, ring);
}

/// Coefficients c_0..c_q with Ad(u_beta(x)) X_alpha = sum c_i x^i X_{alpha + i beta}.
/// Throws std::invalid_argument for dependent roots.
std::vector<Rational> adjoint_string_coeffs(const LieRepresentation& rep, int beta, int alpha);

/// Weyl element induced by conjugation with a torus-normalizing matrix.
/// Throws RootSystemError when some root vector is not sent to a multiple of a
/// root vector or the permutation is not a Weyl group action.
WeylElement weyl_action_from_matrix(const LieRepresentation& rep, const QMatrix& m);

}  // namespace liegauge
