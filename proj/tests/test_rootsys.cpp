#include "doctest.h"

#include <algorithm>
#include <set>

#include "liegauge/rational.hpp"
#include "liegauge/rootsys.hpp"

using namespace liegauge;

namespace {

// Euclidean realization: vectors in Z^n with the standard form.
struct Euclid {
  std::vector<std::vector<int>> simple;
  std::vector<std::vector<int>> roots;  // all roots
};

Euclid euclid(Family f, int l) {
  Euclid e;
  const int n = f == Family::A ? l + 1 : l;
  auto unit = [&](int i) {
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(i)] = 1;
    return v;
  };
  auto add = [](std::vector<int> a, const std::vector<int>& b, int s) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += s * b[k];
    return a;
  };
  for (int i = 0; i + 1 < l; ++i) e.simple.push_back(add(unit(i), unit(i + 1), -1));
  switch (f) {
    case Family::A: e.simple.push_back(add(unit(l - 1), unit(l), -1)); break;
    case Family::B: e.simple.push_back(unit(l - 1)); break;
    case Family::C: e.simple.push_back(add(unit(l - 1), unit(l - 1), 1)); break;
    case Family::D: e.simple.push_back(add(unit(l - 2), unit(l - 1), 1)); break;
  }
  const std::vector<int> zero(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      e.roots.push_back(add(unit(i), unit(j), -1));
      if (f != Family::A && i < j) {
        e.roots.push_back(add(unit(i), unit(j), 1));
        e.roots.push_back(add(add(zero, unit(i), -1), unit(j), -1));
      }
    }
    if (f == Family::B) {
      e.roots.push_back(unit(i));
      e.roots.push_back(add(zero, unit(i), -1));
    }
    if (f == Family::C) {
      e.roots.push_back(add(zero, unit(i), 2));
      e.roots.push_back(add(zero, unit(i), -2));
    }
  }
  return e;
}

int dot(const std::vector<int>& a, const std::vector<int>& b) {
  int s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

// Simple-root coordinates of a euclidean vector by an exact solve.
RootVector coords(const Euclid& e, const std::vector<int>& v) {
  const std::size_t l = e.simple.size();
  QMatrix m(v.size(), l);
  std::vector<Rational> rhs(v.size());
  for (std::size_t r = 0; r < v.size(); ++r) {
    for (std::size_t c = 0; c < l; ++c) m(r, c) = e.simple[c][r];
    rhs[r] = v[r];
  }
  std::vector<Rational> x;
  REQUIRE(solve_particular(m, rhs, x));
  RootVector out;
  for (auto& q : x) {
    REQUIRE(q.get_den() == 1);
    out.push_back(static_cast<int>(q.get_num().get_si()));
  }
  return out;
}

const std::vector<std::pair<Family, int>> kDesk = {
    {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::B, 2}, {Family::B, 3},
    {Family::B, 4}, {Family::C, 2}, {Family::C, 3}, {Family::C, 4}, {Family::D, 3}, {Family::D, 4}};

// Brute-force reduced word length by BFS over words.
int bfs_length(const RootSystem& rs, const WeylElement& target) {
  std::vector<WeylElement> frontier{weyl_identity(rs)};
  std::set<std::vector<int>> seen{frontier[0].action};
  for (int len = 0; len <= rs.m(); ++len) {
    for (const auto& w : frontier)
      if (w == target) return len;
    std::vector<WeylElement> next;
    for (const auto& w : frontier) {
      for (int i = 1; i <= rs.rank(); ++i) {
        auto v = compose(w, weyl_from_word(rs, {i}));
        if (seen.insert(v.action).second) next.push_back(v);
      }
    }
    frontier = std::move(next);
  }
  return -1;
}

}  // namespace

TEST_CASE("roots agree with the euclidean realization") {
  for (auto [f, l] : kDesk) {
    CAPTURE(l);
    const RootSystem rs = build_root_system(f, l);
    const Euclid e = euclid(f, l);
    std::set<RootVector> expected;
    for (const auto& v : e.roots) expected.insert(coords(e, v));
    std::set<RootVector> got;
    for (int i = 0; i < rs.size(); ++i) got.insert(rs.root(i));
    CHECK(got == expected);
    CHECK(static_cast<std::size_t>(rs.size()) == expected.size());

    // Cartan a_ij = 2(alpha_i, alpha_j)/(alpha_j, alpha_j).
    for (int i = 0; i < l; ++i) {
      for (int j = 0; j < l; ++j) {
        CHECK(rs.cartan()[i][j] == 2 * dot(e.simple[i], e.simple[j]) / dot(e.simple[j], e.simple[j]));
      }
    }
    // inner() is proportional to the euclidean form.
    const int scale = f == Family::B ? 2 : 1;
    for (int a = 0; a < rs.m(); ++a) {
      for (int b = 0; b < rs.m(); ++b) {
        std::vector<int> va(e.simple[0].size(), 0), vb(e.simple[0].size(), 0);
        for (int k = 0; k < l; ++k) {
          for (std::size_t c = 0; c < va.size(); ++c) {
            va[c] += rs.root(a)[k] * e.simple[k][c];
            vb[c] += rs.root(b)[k] * e.simple[k][c];
          }
        }
        CHECK(rs.inner(a, b) == scale * dot(va, vb));
      }
    }
  }
}

TEST_CASE("enumeration order and counts") {
  for (auto [f, l] : kDesk) {
    const RootSystem rs = build_root_system(f, l);
    int expected_m = 0;
    switch (f) {
      case Family::A: expected_m = l * (l + 1) / 2; break;
      case Family::B:
      case Family::C: expected_m = l * l; break;
      case Family::D: expected_m = l * (l - 1); break;
    }
    CHECK(rs.m() == expected_m);
    int simple_count = 0;
    for (int i = 0; i < rs.m(); ++i) {
      CHECK(rs.height(i) > 0);
      CHECK(rs.height(rs.negate(i)) == -rs.height(i));
      if (i < l) CHECK(rs.height(i) == 1);
      if (i > 0) CHECK(rs.height(i - 1) <= rs.height(i));
      if (i > l && rs.height(i - 1) == rs.height(i)) CHECK(rs.root(i - 1) < rs.root(i));
      if (rs.height(i) == 1) ++simple_count;
    }
    CHECK(simple_count == l);
    for (int i = 0; i < l; ++i) {
      CHECK(rs.cartan()[i][i] == 2);
      for (int j = 0; j < l; ++j)
        if (i != j) CHECK(rs.cartan()[i][j] <= 0);
    }
  }
}

TEST_CASE("spec examples") {
  const RootSystem a1 = build_root_system(Family::A, 1);
  CHECK(a1.size() == 2);
  CHECK(a1.m() == 1);
  CHECK(a1.cartan() == std::vector<std::vector<int>>{{2}});

  const RootSystem a2 = build_root_system(Family::A, 2);
  CHECK(a2.root(0) == RootVector{1, 0});
  CHECK(a2.root(1) == RootVector{0, 1});
  CHECK(a2.root(2) == RootVector{1, 1});
  CHECK(a2.height(2) == 2);
  CHECK(a2.cartan() == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});

  const RootSystem c4 = build_root_system(Family::C, 4);
  CHECK(c4.m() == 16);
  CHECK(c4.max_height() == 7);
  CHECK(weyl_length(c4, longest_element(c4)) == 16);

  CHECK_THROWS_AS(build_root_system(Family::A, 0), RootSystemError);
  CHECK_THROWS_AS(build_root_system(Family::B, 1), RootSystemError);
  CHECK_THROWS_AS(build_root_system(Family::D, 2), RootSystemError);
  CHECK_THROWS_AS(parse_family("E"), RootSystemError);
}

TEST_CASE("weyl words") {
  const RootSystem a2 = build_root_system(Family::A, 2);
  const WeylElement s1 = weyl_from_word(a2, {1});
  CHECK(s1.apply(0) == a2.negate(0));
  CHECK(s1.apply(1) == 2);
  CHECK(weyl_from_word(a2, {}) == weyl_identity(a2));
  const WeylElement w = weyl_from_word(a2, {1, 2, 1});
  for (int i = 0; i < a2.m(); ++i) CHECK(!a2.is_positive(w.apply(i)));
  CHECK(w == longest_element(a2));
  CHECK(w.apply(2) == a2.negate(2));
  CHECK(longest_element(build_root_system(Family::A, 1)).word == std::vector<int>{1});
  CHECK_THROWS_AS(weyl_from_word(a2, {3}), RootSystemError);
  CHECK_THROWS_AS(weyl_from_word(a2, {0}), RootSystemError);
}

TEST_CASE("composition, inverse and length") {
  for (auto [f, l] : kDesk) {
    if (l > 3 || l < 2) continue;
    const RootSystem rs = build_root_system(f, l);
    const std::vector<std::vector<int>> words = {{1}, {2, 1}, {1, 2, 1}, {l, 1, l}, {2, 2}, {1, l, 2, 1}};
    for (const auto& u : words) {
      for (const auto& v : words) {
        std::vector<int> uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        const WeylElement wu = weyl_from_word(rs, u);
        const WeylElement wv = weyl_from_word(rs, v);
        CHECK(compose(wu, wv) == weyl_from_word(rs, uv));
      }
      const WeylElement w = weyl_from_word(rs, u);
      CHECK(compose(w, inverse(w)) == weyl_identity(rs));
      CHECK(weyl_length(rs, w) == bfs_length(rs, w));
      const WeylElement back = weyl_from_action(rs, w.action);
      CHECK(back == w);
      CHECK(static_cast<int>(back.word.size()) == weyl_length(rs, w));
    }
    const WeylElement w0 = longest_element(rs);
    CHECK(compose(w0, w0) == weyl_identity(rs));
    CHECK(bfs_length(rs, w0) == rs.m());
  }
}

TEST_CASE("weyl_from_action rejects non-Weyl permutations") {
  const RootSystem a2 = build_root_system(Family::A, 2);
  std::vector<int> bad = weyl_identity(a2).action;
  std::swap(bad[0], bad[1]);  // diagram automorphism, not in W
  CHECK_THROWS_AS(weyl_from_action(a2, bad), RootSystemError);
}

TEST_CASE("resolving elements") {
  const RootSystem a2 = build_root_system(Family::A, 2);
  CHECK_FALSE(is_resolving(a2, weyl_identity(a2)).resolving);
  const auto r = is_resolving(a2, longest_element(a2));
  CHECK(r.resolving);
  REQUIRE(r.psi);
  CHECK(*r.psi == std::vector<int>{a2.negate(2)});
  CHECK_FALSE(is_resolving(a2, weyl_from_word(a2, {1})).resolving);

  for (auto [f, l] : kDesk) {
    const RootSystem rs = build_root_system(f, l);
    const auto res = is_resolving(rs, longest_element(rs));
    CHECK(res.resolving);
    REQUIRE(res.psi);
    CHECK(static_cast<int>(res.psi->size()) == rs.m() - l);
    std::vector<int> expected;
    for (int i = l; i < rs.m(); ++i) expected.push_back(rs.negate(i));
    CHECK(*res.psi == expected);
  }
}

TEST_CASE("exponents match heights of a graded complement count") {
  // Number of positive roots of height k minus those of height k+1 counts exponents equal to k.
  for (auto [f, l] : kDesk) {
    const RootSystem rs = build_root_system(f, l);
    std::vector<int> per(static_cast<std::size_t>(rs.max_height() + 2), 0);
    for (int i = 0; i < rs.m(); ++i) per[static_cast<std::size_t>(rs.height(i))]++;
    std::vector<int> ex;
    for (int k = 1; k <= rs.max_height(); ++k)
      for (int c = 0; c < per[k] - per[k + 1]; ++c) ex.push_back(k);
    CHECK(ex == rs.exponents());
  }
}
