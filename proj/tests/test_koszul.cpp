#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liekit/catalog.hpp"
#include "liekit/error.hpp"
#include "liekit/koszul.hpp"

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

// Symmetric B with B([e_i,e_j],e_k) + B(e_j,[e_i,e_k]) = 0, unknowns B_ab for a <= b.
std::size_t oracle_invariant_forms(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  auto var = [n](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return a * n - a * (a - 1) / 2 + (b - a);
  };
  const std::size_t vars = n * (n + 1) / 2;
  std::vector<Vector> eqs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vector eq(vars);
        const Vector ij = g.bracket(g.basis_vector(i), g.basis_vector(j));
        const Vector ik = g.bracket(g.basis_vector(i), g.basis_vector(k));
        for (std::size_t m = 0; m < n; ++m) {
          eq[var(m, k)] += ij[m];
          eq[var(j, m)] += ik[m];
        }
        eqs.push_back(eq);
      }
    }
  }
  return vars - oracle_rank(g.field(), eqs);
}

std::size_t abelianization(const LieAlgebra& g) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) rows.push_back(g.bracket(g.basis_vector(i), g.basis_vector(j)));
  return g.dim() - oracle_rank(g.field(), rows);
}

const char* const kSample[] = {"abelian(3)", "heisenberg(5)", "filiform(6)", "sl2",        "aff2",
                               "oscillator4", "w(3)",         "w(5)",        "X(8)",       "Y(6)",
                               "kath9_4c",    "solvable9",    "coadjoint(sl2)", "w7_twisted"};

}  // namespace

TEST_CASE("symmetric square indexing") {
  CHECK(sym_dim(4) == 10);
  std::size_t expect = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j) {
      CHECK(sym_index(4, i, j) == expect);
      CHECK(sym_index(4, j, i) == expect);
      ++expect;
    }
}

TEST_CASE("dim Kill equals the number of invariant symmetric forms") {
  for (const char* name : kSample) {
    const LieAlgebra g = catalog_make(name).algebra;
    const KillingModule kill = killing_module(g);
    const std::size_t oracle = oracle_invariant_forms(g);
    CHECK_MESSAGE(kill.dim == oracle, name);
    const auto forms = invariant_forms(g);
    CHECK_MESSAGE(forms.size() == oracle, name);
    for (const auto& b : forms) CHECK(is_invariant(g, b));
  }
}

TEST_CASE("Kill modulo Kill^(3) is the symmetric square of the abelianization") {
  for (const char* name : kSample) {
    const LieAlgebra g = catalog_make(name).algebra;
    const KillingModule kill = killing_module(g);
    const std::size_t h = abelianization(g);
    CHECK_MESSAGE(kill.dim - kill.filtration_dim(3) == h * (h + 1) / 2, name);
    CHECK(kill.filtration_dim(2) == kill.dim);
    CHECK(kill_filtration(g, kill, 3).rank() == kill.filtration_dim(3));
  }
}

TEST_CASE("eta vanishes on boundaries") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (const char* name : {"heisenberg(5)", "w(5)", "solvable9", "coadjoint(sl2)"}) {
    const LieAlgebra g = catalog_make(name).algebra;
    const KillingModule kill = killing_module(g);
    for (int trial = 0; trial < 5; ++trial) {
      ChainVector c = zero_chain(g, 4);
      for (auto& x : c.coeffs) x = coef(rng);
      CHECK_MESSAGE(is_zero(eta_on_chain(g, kill, apply_boundary(g, c))), name);
    }
  }
}

TEST_CASE("form pairing agrees with a direct evaluation") {
  const CatalogEntry e = catalog_make("g12");
  const LieAlgebra& g = e.algebra;
  const BilinearForm& b = *e.form;
  const ChainVector& c = *e.chain;
  const ExteriorBasis basis(g.dim(), 3);
  Rational direct = 0;
  for (std::size_t s = 0; s < basis.size(); ++s) {
    if (sgn(c.coeffs[s]) == 0) continue;
    const auto ijk = basis.subset(s);
    direct += c.coeffs[s] * b.evaluate(g.field(), g.basis_vector(ijk[0]),
                                       g.bracket(g.basis_vector(ijk[1]), g.basis_vector(ijk[2])));
  }
  CHECK(form_eta_pairing(g, b, c) == direct);
  const std::size_t last = g.dim() - 1;
  const BilinearForm bad = make_form(g.dim(), {{last, last, 1}});
  REQUIRE_FALSE(is_invariant(g, bad));
  CHECK_THROWS_AS(form_eta_pairing(g, bad, c), Error);
}

TEST_CASE("reduced Koszul map on small examples") {
  // sl2: Z_3 = Lambda^3 and eta(e ^ h ^ f) pairs to a nonzero multiple of the Killing form
  CHECK(reduced_koszul(catalog_make("sl2").algebra).rank == 1);
  CHECK(reduced_koszul(catalog_make("heisenberg(5)").algebra).rank == 0);
  CHECK(reduced_koszul(catalog_make("abelian(4)").algebra).rank == 0);
  const LieAlgebra sl2 = catalog_make("sl2").algebra.without_grading();
  const LieAlgebra sq = direct_product(sl2, sl2);
  CHECK(killing_module(sq).filtration_dim(3) == 2);
  CHECK(reduced_koszul(sq).rank == 2);
}

TEST_CASE("per weight dimensions add up") {
  for (const char* name : {"w(4)", "solvable9", "coadjoint(sl2)", "sl2"}) {
    const LieAlgebra g = catalog_make(name).algebra;
    REQUIRE(g.graded());
    const KillingModule kill = killing_module(g);
    std::size_t k = 0, k3 = 0, r = 0;
    for (const auto& [w, d] : koszul_by_weight(g)) {
      k += d.kill;
      k3 += d.kill3;
      r += d.eta_rank;
      CHECK(d.eta_rank <= d.kill3);
      CHECK(d.kill3 <= d.kill);
    }
    CHECK_MESSAGE(k == kill.dim, name);
    CHECK(k3 == kill.filtration_dim(3));
    CHECK(r == reduced_koszul(g, kill).rank);
  }
}

TEST_CASE("quadrable probe") {
  const QuadrableResult s = quadrable_probe(catalog_make("sl2").algebra);
  CHECK(s.verdict == QuadrableVerdict::Nondegenerate);
  REQUIRE(s.witness.has_value());
  CHECK(is_nondegenerate(Field::rationals(), *s.witness));
  // every invariant form of h3 vanishes on the center
  const QuadrableResult h = quadrable_probe(catalog_make("heisenberg(3)").algebra);
  CHECK(h.verdict == QuadrableVerdict::DegenerateCertified);
  CHECK(quadrable_probe(catalog_make("oscillator4").algebra).verdict == QuadrableVerdict::Nondegenerate);
}

TEST_CASE("quotient by the kernel of a form") {
  const CatalogEntry e = catalog_make("coadjoint(sl2)");
  // trace form on the sl2 factor only: kernel is the abelian ideal sl2*
  const BilinearForm b = make_form(6, {{0, 2, 1}, {1, 1, 1}});
  REQUIRE(is_invariant(e.algebra, b));
  const FormQuotient fq = quotient_by_form_kernel(e.algebra, b);
  CHECK(fq.quotient.algebra.dim() == 3);
  CHECK(is_nondegenerate(Field::rationals(), fq.form));
  CHECK(is_invariant(fq.quotient.algebra, fq.form));
}

TEST_CASE("T matrix shape") {
  const LieAlgebra g = catalog_make("heisenberg(3)").algebra;
  const Matrix t = t_matrix(g);
  CHECK(t.rows() == sym_dim(3));
  CHECK(t.cols() == binomial(3, 2) * 3);
  CHECK(rank(g.field(), t) == sym_dim(3) - killing_module(g).dim);
}
