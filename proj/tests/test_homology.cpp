#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "liekit/catalog.hpp"
#include "liekit/error.hpp"
#include "liekit/homology.hpp"

using namespace liekit;

namespace {

using Mono = std::vector<std::size_t>;

std::vector<Mono> subsets(std::size_t n, std::size_t k) {
  std::vector<Mono> out;
  Mono s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  if (k > n) return out;
  while (true) {
    out.push_back(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

// Wedge monomial normalization by bubble sort.
std::pair<int, Mono> normalize(Mono m) {
  int sign = 1;
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = 0; b + 1 < m.size() - a; ++b) {
      if (m[b] == m[b + 1]) return {0, {}};
      if (m[b] > m[b + 1]) {
        std::swap(m[b], m[b + 1]);
        sign = -sign;
      }
    }
  }
  for (std::size_t b = 0; b + 1 < m.size(); ++b)
    if (m[b] == m[b + 1]) return {0, {}};
  return {sign, m};
}

// d(x_1 ^ ... ^ x_k) = sum_{p<q} (-1)^(p+q) [x_p, x_q] ^ x_1 ^ .. ^ x_k without x_p, x_q
std::map<Mono, Rational> oracle_boundary(const LieAlgebra& g, const Mono& s) {
  std::map<Mono, Rational> out;
  for (std::size_t p = 0; p < s.size(); ++p) {
    for (std::size_t q = p + 1; q < s.size(); ++q) {
      const Vector b = g.bracket(g.basis_vector(s[p]), g.basis_vector(s[q]));
      Mono rest;
      for (std::size_t r = 0; r < s.size(); ++r)
        if (r != p && r != q) rest.push_back(s[r]);
      const int base = ((p + q) % 2 == 0) ? 1 : -1;
      for (std::size_t k = 0; k < b.size(); ++k) {
        if (sgn(b[k]) == 0) continue;
        Mono m{k};
        m.insert(m.end(), rest.begin(), rest.end());
        auto [sign, sorted] = normalize(m);
        if (sign == 0) continue;
        out[sorted] += base * sign * b[k];
      }
    }
  }
  return out;
}

std::size_t oracle_rank(const Field& f, std::vector<Vector> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (auto& row : rows)
    for (auto& x : row) x = f.from(x);
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && sgn(rows[piv][c]) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const Rational s = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      const Rational m = rows[i][c];
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] = f.sub(rows[i][k], f.mul(m, rows[r][k]));
    }
    ++r;
  }
  return r;
}

std::vector<std::size_t> oracle_betti(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<std::size_t> ranks(n + 2, 0);
  for (std::size_t k = 2; k <= n; ++k) {
    const auto src = subsets(n, k), dst = subsets(n, k - 1);
    std::map<Mono, std::size_t> pos;
    for (std::size_t i = 0; i < dst.size(); ++i) pos[dst[i]] = i;
    std::vector<Vector> rows;
    for (const auto& s : src) {
      Vector row(dst.size());
      for (const auto& [m, c] : oracle_boundary(g, s)) row[pos.at(m)] = c;
      rows.push_back(row);
    }
    ranks[k] = oracle_rank(g.field(), rows);
  }
  std::vector<std::size_t> b;
  for (std::size_t k = 0; k <= n; ++k) b.push_back(binomial(n, k) - ranks[k] - ranks[k + 1]);
  return b;
}

}  // namespace

TEST_CASE("exterior basis is lexicographic") {
  const ExteriorBasis e(5, 3);
  CHECK(e.size() == 10);
  const auto ref = subsets(5, 3);
  for (std::size_t i = 0; i < e.size(); ++i) {
    CHECK(e.subset(i) == ref[i]);
    CHECK(e.index(ref[i]) == i);
  }
  std::vector<std::size_t> v{3, 1, 2};
  CHECK(sort_with_sign(v) == 1);
  CHECK(v == std::vector<std::size_t>{1, 2, 3});
  std::vector<std::size_t> w{2, 1, 4};
  CHECK(sort_with_sign(w) == -1);
  std::vector<std::size_t> rep{2, 2};
  CHECK(sort_with_sign(rep) == 0);
  CHECK(binomial(12, 6) == 924);
}

TEST_CASE("boundary matrices agree with the monomial oracle") {
  for (const char* name : {"heisenberg(5)", "filiform(6)", "sl2", "w(4)", "oscillator4", "solvable9"}) {
    const LieAlgebra g = catalog_make(name).algebra;
    for (std::size_t k = 2; k <= std::min<std::size_t>(g.dim(), 5); ++k) {
      const Matrix m = boundary_matrix(g, k);
      const auto src = subsets(g.dim(), k), dst = subsets(g.dim(), k - 1);
      REQUIRE(m.cols() == src.size());
      REQUIRE(m.rows() == dst.size());
      for (std::size_t c = 0; c < src.size(); ++c) {
        Vector col(dst.size());
        for (const auto& [mono, x] : oracle_boundary(g, src[c])) {
          col[static_cast<std::size_t>(std::find(dst.begin(), dst.end(), mono) - dst.begin())] = x;
        }
        CHECK_MESSAGE(m.column(c) == col, name << " degree " << k << " column " << c);
      }
    }
  }
}

TEST_CASE("Betti numbers agree with the oracle") {
  for (const char* name : {"abelian(4)", "heisenberg(3)", "heisenberg(5)", "filiform(5)", "sl2", "aff2",
                           "oscillator4", "w(3)", "two_nilpotent_random(3,3,2)"}) {
    const LieAlgebra g = catalog_make(name).algebra.without_grading();
    CHECK_MESSAGE(betti_numbers(g, g.dim()).betti() == oracle_betti(g), name);
  }
  const LieAlgebra g = catalog_make("heisenberg(3)", ScalarDomain::field(Field::prime(3))).algebra;
  CHECK(betti_numbers(g, 3).betti() == oracle_betti(g));
}

TEST_CASE("known Betti numbers") {
  CHECK(betti_numbers(catalog_make("abelian(4)").algebra, 4).betti() == std::vector<std::size_t>{1, 4, 6, 4, 1});
  CHECK(betti_numbers(catalog_make("heisenberg(3)").algebra, 3).betti() == std::vector<std::size_t>{1, 2, 2, 1});
  CHECK(betti_numbers(catalog_make("heisenberg(5)").algebra, 5).betti() ==
        std::vector<std::size_t>{1, 4, 5, 5, 4, 1});
  CHECK(betti_numbers(catalog_make("sl2").algebra, 3).betti() == std::vector<std::size_t>{1, 0, 0, 1});
}

TEST_CASE("graded Betti numbers add up to the total") {
  const LieAlgebra g = catalog_make("heisenberg(5)").algebra;
  REQUIRE(g.graded());
  const auto total = betti_numbers(g.without_grading(), 5).betti();
  std::vector<std::size_t> sum(6, 0);
  for (std::size_t k = 0; k <= 5; ++k) {
    for (const auto& w : weights_in_degree(g, k)) {
      const HomologyReport r = betti_numbers(g, 5, w);
      sum[k] += r.degrees.at(k).betti;
    }
  }
  CHECK(sum == total);
}

TEST_CASE("Euler characteristic of a nonzero Lie algebra vanishes") {
  for (const char* name : {"filiform(6)", "w(5)", "X(5)", "coadjoint(sl2)"}) {
    const LieAlgebra g = catalog_make(name).algebra;
    const auto b = betti_numbers(g, g.dim()).betti();
    long chi = 0;
    for (std::size_t k = 0; k < b.size(); ++k) chi += (k % 2 ? -1 : 1) * static_cast<long>(b[k]);
    CHECK_MESSAGE(chi == 0, name);
  }
}

TEST_CASE("chains and cycles") {
  const LieAlgebra g = catalog_make("heisenberg(3)").algebra;
  ChainVector c = zero_chain(g, 2);
  add_wedge(g, c, Rational(1), {1, 0});
  CHECK(c.coeffs == Vector{-1, 0, 0});
  const ChainVector d = apply_boundary(g, c);
  // d(y ^ x) = -[y, x] = z
  CHECK(d.coeffs == Vector{0, 0, 1});
  CHECK_THROWS_AS(homology_class_nonzero(g, c), Error);
  ChainVector xz = zero_chain(g, 2);
  add_wedge(g, xz, Rational(1), {0, 2});
  CHECK(homology_class_nonzero(g, xz));
  const ChainVector named = chain_from_names(g, {{1, {"x1", "z"}}});
  CHECK(named.coeffs == xz.coeffs);
  CHECK(cycle_basis(g, 2).size() == 2);
  CHECK(boundary_space(g, 1).rank() == 1);
  CHECK(boundary_rank(g, 2) == 1);
}

TEST_CASE("solve in span") {
  const Field q = Field::rationals();
  const auto s = solve_in_span(q, {Vector{1, 0, 1}, Vector{0, 1, 1}}, Vector{2, 3, 5});
  REQUIRE(s.has_value());
  CHECK(*s == Vector{2, 3});
  CHECK_FALSE(solve_in_span(q, {Vector{1, 0, 1}}, Vector{0, 1, 0}).has_value());
}
