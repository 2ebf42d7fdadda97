#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liekit/catalog.hpp"
#include "liekit/current.hpp"
#include "liekit/error.hpp"
#include "liekit/homology.hpp"

using namespace liekit;

namespace {

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

struct CyclicOracle {
  std::size_t hh1 = 0;
  std::size_t hc1 = 0;
  std::size_t i_a = 0;
};

// T(a,b,c) = ab^c + bc^a + ca^b and T0 = T - abc^1 on basis triples, written in Lambda^2 A.
CyclicOracle cyclic_oracle(const ScalarDomain& a) {
  const std::size_t d = a.dim();
  const Field& f = a.base();
  auto pair = [d](std::size_t i, std::size_t j) { return i * d + j; };
  auto wedge = [&](const RingElement& x, const RingElement& y) {
    Vector w(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        w[pair(i, j)] += x[i] * y[j];
        w[pair(j, i)] -= x[i] * y[j];
      }
    return w;
  };
  std::vector<Vector> t_rows, t0_rows;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const RingElement x = a.basis_element(i), y = a.basis_element(j), z = a.basis_element(k);
        Vector t = wedge(a.mul(x, y), z);
        const Vector t2 = wedge(a.mul(y, z), x), t3 = wedge(a.mul(z, x), y);
        for (std::size_t p = 0; p < t.size(); ++p) t[p] += t2[p] + t3[p];
        t_rows.push_back(t);
        const Vector u = wedge(a.mul(a.mul(x, y), z), a.unit());
        for (std::size_t p = 0; p < t.size(); ++p) t[p] -= u[p];
        t0_rows.push_back(t);
      }
  // skew d x d matrices: rank of the full space is d(d-1)/2
  const std::size_t l2 = d * (d - 1) / 2;
  CyclicOracle o;
  o.hc1 = l2 - oracle_rank(f, t_rows);
  o.hh1 = l2 - oracle_rank(f, t0_rows);
  std::vector<Vector> mult_cols;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) mult_cols.push_back(a.mul(a.basis_element(i), a.basis_element(j)));
  o.i_a = d * (d + 1) / 2 - oracle_rank(f, mult_cols);
  return o;
}

}  // namespace

TEST_CASE("cyclic and Hochschild homology of small algebras") {
  const Field q = Field::rationals();
  std::vector<ScalarDomain> rings{truncated_polynomial(q, 2), truncated_polynomial(q, 3), truncated_polynomial(q, 4),
                                  truncated_polynomial(Field::prime(3), 3), truncated_polynomial(Field::prime(5), 4),
                                  ScalarDomain::field(q)};
  // Q x Q as a table: idempotents a0, a1 with unit a0 + a1
  std::vector<Rational> split(8, 0);
  split[(0 * 2 + 0) * 2 + 0] = 1;
  split[(1 * 2 + 1) * 2 + 1] = 1;
  rings.push_back(ScalarDomain::comm_algebra(q, 2, split, {1, 1}));
  for (const auto& a : rings) {
    const AlgebraHomologyReport r = algebra_homology(a);
    const CyclicOracle o = cyclic_oracle(a);
    CHECK_MESSAGE(r.hh1 == o.hh1, a.to_string());
    CHECK_MESSAGE(r.hc1 == o.hc1, a.to_string());
    CHECK_MESSAGE(r.i_a == o.i_a, a.to_string());
    CHECK(r.lambda2 == a.dim() * (a.dim() - 1) / 2);
    CHECK(r.hc1 <= r.hh1);
  }
  // K[t]/(t^N) in characteristic 0: HH_1 has dimension N - 1 and HC_1 vanishes
  for (std::size_t n = 2; n <= 5; ++n) {
    const AlgebraHomologyReport r = algebra_homology(truncated_polynomial(q, n));
    CHECK(r.hh1 == n - 1);
    CHECK(r.hc1 == 0);
  }
}

TEST_CASE("decomposition map is bijective") {
  const ScalarDomain t2 = truncated_polynomial(Field::rationals(), 2);
  const ScalarDomain t3 = truncated_polynomial(Field::rationals(), 3);
  const ScalarDomain f5 = truncated_polynomial(Field::prime(5), 2);
  for (const auto& [a, name] : std::vector<std::pair<const ScalarDomain*, std::string>>{
           {&t2, "sl2"}, {&t3, "heisenberg(3)"}, {&t2, "filiform(4)"}, {&t3, "aff2"}}) {
    const CandecoReport r = candeco_check(*a, catalog_make(name).algebra);
    CHECK_MESSAGE(r.ok(), name);
    const std::size_t n = catalog_make(name).algebra.dim(), d = a->dim();
    CHECK(r.lambda2_current == binomial(n * d, 2));
  }
  const CandecoReport r = candeco_check(f5, catalog_make("heisenberg(3)", ScalarDomain::field(Field::prime(5))).algebra);
  CHECK(r.ok());
}

TEST_CASE("boundaries decompose as the sum of the four subspaces") {
  const ScalarDomain t2 = truncated_polynomial(Field::rationals(), 2);
  const ScalarDomain t3 = truncated_polynomial(Field::rationals(), 3);
  for (const auto& [a, name] : std::vector<std::pair<const ScalarDomain*, std::string>>{
           {&t2, "sl2"}, {&t2, "heisenberg(3)"}, {&t3, "aff2"}, {&t2, "w(3)"}, {&t2, "coadjoint(sl2)"}}) {
    const BoundaryDecomposition d = nw_boundary_decomposition(*a, catalog_make(name).algebra);
    CHECK_MESSAGE(d.sum_equals_b2, name);
    for (const auto& row : d.coupled) CHECK_MESSAGE(row.agrees, name);
    // B_2 of the current algebra, computed without the decomposition
    const LieAlgebra g = current_algebra(*a, catalog_make(name).algebra);
    CHECK(d.b2 == boundary_rank(g, 3));
  }
  const BoundaryDecomposition k = nw_boundary_decomposition(ScalarDomain::field(Field::rationals()),
                                                            catalog_make("sl2").algebra);
  CHECK(k.w1_prime == 0);
  CHECK(k.w3 == 0);
}

TEST_CASE("second homology of current algebras over simple Lie algebras vanishes with HC_1") {
  for (std::size_t n = 2; n <= 3; ++n) {
    const ScalarDomain a = truncated_polynomial(Field::rationals(), n);
    const LieAlgebra g = current_algebra(a, catalog_make("sl2").algebra);
    CHECK(betti_numbers(g, 2).degrees.at(2).betti == algebra_homology(a).hc1);
  }
}

TEST_CASE("graded H_2 report") {
  const ScalarDomain t3 = truncated_polynomial(Field::rationals(), 3);
  for (const char* name : {"heisenberg(3)", "aff2", "sl2", "w(3)"}) {
    const LieAlgebra l = catalog_make(name).algebra;
    const CurrentH2Report r = h2_graded_report(t3, l);
    CHECK_MESSAGE(r.ok(), name);
    const LieAlgebra g = current_algebra(t3, l.without_grading());
    CHECK_MESSAGE(r.total_h2() == betti_numbers(g, 2).degrees.at(2).betti, name);
    for (const auto& row : r.rows) {
      // the projection onto A (x) H_2(l) is surjective
      CHECK(row.h2 >= t3.dim() * row.h2_l);
    }
  }
  // H_2(A (x) aff2) has the dimension of Lambda^2 A
  const CurrentH2Report aff = h2_graded_report(t3, catalog_make("aff2").algebra);
  CHECK(aff.total_h2() == 3);
  const CurrentH2Report ungraded = h2_graded_report(t3, catalog_make("heisenberg(3)").algebra.without_grading());
  CHECK(ungraded.rows.size() == 1);
}

TEST_CASE("field mismatch is rejected") {
  const ScalarDomain f5 = truncated_polynomial(Field::prime(5), 2);
  try {
    candeco_check(f5, catalog_make("sl2").algebra);
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BaseFieldMismatch);
  }
}
