#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "liekit/lie_algebra.hpp"
#include "liekit/linalg.hpp"
#include "liekit/scalars.hpp"

namespace liekit {

/// Low-degree invariants of a finite-dimensional commutative algebra A.
///
/// Coordinates: Lambda^2 A on lex pairs a_i ^ a_j (i < j), S^2 A on pairs i <= j.
struct AlgebraHomologyReport {
  std::size_t dim = 0;
  std::size_t lambda2 = 0;
  std::size_t sym2 = 0;
  std::size_t image_t = 0;
  std::size_t image_t0 = 0;
  std::size_t hh1 = 0;
  std::size_t hc1 = 0;
  std::size_t i_a = 0;
  std::size_t a0 = 0;

  QuotientPresentation hc1_presentation;
  QuotientPresentation hh1_presentation;
  std::vector<Vector> t0_image;
  std::vector<Vector> i_a_basis;
  std::vector<Vector> a0_basis;
};

AlgebraHomologyReport algebra_homology(const ScalarDomain& a);

/// Result of building the canonical map from Lambda^2(A (x) l) to
/// (Lambda^2 A (x) S^2 l) + (A (x) Lambda^2 l) + (I_A (x) Lambda^2 l).
struct CandecoReport {
  std::size_t lambda2_current = 0;
  std::size_t v1 = 0;
  std::size_t v2 = 0;
  std::size_t v3 = 0;
  std::size_t z2_current = 0;
  std::size_t z2_l = 0;
  std::size_t image_rank = 0;
  bool lands_in_i_a = false;
  bool z2_lands = false;
  bool bijective = false;
  bool z2_bijective = false;
  bool lambda2_identity = false;
  bool z2_identity = false;

  bool ok() const { return lands_in_i_a && z2_lands && bijective && z2_bijective && lambda2_identity && z2_identity; }
};

CandecoReport candeco_check(const ScalarDomain& a, const LieAlgebra& l);

struct CoupledCocycleRow {
  Weight weight;
  std::size_t b2 = 0;
  std::size_t projection_sum = 0;
  bool splits = false;
  std::size_t kill3 = 0;
  std::size_t eta_rank = 0;
  /// splits == (eta_rank == kill3)
  bool agrees = false;
};

struct BoundaryDecomposition {
  std::size_t w1 = 0;
  std::size_t w1_prime = 0;
  std::size_t w3 = 0;
  std::size_t w12 = 0;
  std::size_t sum = 0;
  std::size_t b2 = 0;
  bool sum_equals_b2 = false;
  std::vector<CoupledCocycleRow> coupled;
};

BoundaryDecomposition nw_boundary_decomposition(const ScalarDomain& a, const LieAlgebra& l);

struct IdentityCheck {
  std::string name;
  bool applicable = false;
  bool holds = true;
  long long lhs = 0;
  long long rhs = 0;
};

struct H2WeightRow {
  Weight weight;
  std::size_t h2 = 0;
  std::size_t h2_l = 0;
  std::size_t sym2_h1 = 0;
  std::size_t wedge2_h1 = 0;
  std::size_t kill = 0;
  std::size_t kill3 = 0;
  std::size_t eta_rank = 0;
  std::vector<IdentityCheck> checks;

  bool ok() const;
};

struct CurrentH2Report {
  AlgebraHomologyReport algebra;
  std::size_t current_dim = 0;
  std::vector<H2WeightRow> rows;

  bool ok() const;
  std::size_t total_h2() const;
};

/// An ungraded l is treated as concentrated in the trivial group.
CurrentH2Report h2_graded_report(const ScalarDomain& a, const LieAlgebra& l);

}  // namespace liekit
