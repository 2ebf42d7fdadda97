#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "liekit/linalg.hpp"
#include "liekit/scalars.hpp"

namespace liekit {

/// Element of Z^d x Z/m_1 x ... x Z/m_s, stored as d + s integers.
using Weight = std::vector<long long>;

/// Assignment of a group element to each basis vector.
class Grading {
 public:
  Grading() = default;
  /// Weights are normalized modulo the torsion moduli. Throws SemanticError on
  /// arity mismatch and BadParameter on a modulus below 2.
  Grading(std::size_t free_rank, std::vector<long long> torsion, std::vector<Weight> weights);
  /// Concentrated in degree zero of the trivial group.
  static Grading trivial(std::size_t n);
  /// Single Z weight per basis vector.
  static Grading integer(const std::vector<long long>& degrees);

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<long long>& torsion() const noexcept { return torsion_; }
  std::size_t arity() const noexcept { return free_rank_ + torsion_.size(); }
  std::size_t size() const noexcept { return weights_.size(); }
  const Weight& weight(std::size_t i) const { return weights_.at(i); }
  const std::vector<Weight>& weights() const noexcept { return weights_; }

  Weight normalize(Weight w) const;
  Weight add(const Weight& a, const Weight& b) const;
  Weight zero() const { return Weight(arity(), 0); }
  bool is_zero(const Weight& w) const;
  bool torsion_free() const noexcept { return torsion_.empty(); }
  bool same_group(const Grading& other) const {
    return free_rank_ == other.free_rank_ && torsion_ == other.torsion_;
  }

  /// "3" for a single component, "(1,0)" otherwise.
  std::string format(const Weight& w) const;
  /// Accepts "3", "(1,0)", "1,0" or whitespace-separated components.
  Weight parse(std::string_view text) const;

  friend bool operator==(const Grading& a, const Grading& b) {
    return a.free_rank_ == b.free_rank_ && a.torsion_ == b.torsion_ && a.weights_ == b.weights_;
  }

 private:
  std::size_t free_rank_ = 0;
  std::vector<long long> torsion_;
  std::vector<Weight> weights_;
};

/// One term c * e_index of a bracket, with c in the coefficient domain.
struct Term {
  std::size_t index;
  RingElement coeff;
};

/// [e_i, e_j] = sum of terms, 0-based, i < j.
struct BracketEntry {
  std::size_t i;
  std::size_t j;
  std::vector<Term> terms;
};

/// Lie algebra on a free module with basis e_0..e_{n-1} over a ScalarDomain.
///
/// Elements are passed around in flat base-field coordinates: the coefficient
/// of a_alpha e_i sits at index i * d + alpha where d is the domain dimension
/// (d = 1 over a field).
class LieAlgebra {
 public:
  LieAlgebra() = default;

  /// Validates indices, antisymmetric completion, Jacobi and grading compatibility.
  static LieAlgebra make(const ScalarDomain& domain, std::size_t n, const std::vector<BracketEntry>& table,
                         std::vector<std::string> names = {}, std::optional<Grading> grading = std::nullopt);

  const ScalarDomain& domain() const noexcept { return domain_; }
  const Field& field() const noexcept { return domain_.base(); }
  bool over_field() const noexcept { return domain_.is_field(); }
  std::size_t dim() const noexcept { return n_; }
  std::size_t flat_dim() const noexcept { return n_ * domain_.dim(); }

  const std::vector<Term>& bracket(std::size_t i, std::size_t j) const { return brackets_[i * n_ + j]; }
  Vector bracket(const Vector& x, const Vector& y) const;
  Vector basis_vector(std::size_t i) const;
  std::vector<BracketEntry> table() const;
  bool is_abelian() const;

  const std::vector<std::string>& names() const noexcept { return names_; }
  /// Throws UnknownName.
  std::size_t index_of(std::string_view name) const;
  /// Names of the flat basis: "x" for the unit multiple, "<label>*x" otherwise.
  std::vector<std::string> flat_names() const;

  const std::optional<Grading>& grading() const noexcept { return grading_; }
  bool graded() const noexcept { return grading_.has_value(); }
  /// Throws GradingIncompatible when some bracket is not homogeneous.
  LieAlgebra with_grading(const Grading& grading) const;
  LieAlgebra without_grading() const;
  /// Weight of each flat basis vector (the ring sits in degree zero). Throws NotGraded.
  std::vector<Weight> flat_weights() const;

  /// [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] in flat coordinates.
  Vector jacobi_defect(std::size_t i, std::size_t j, std::size_t k) const;

  /// The same algebra viewed over the base field (dimension n * d).
  LieAlgebra restrict_to_base() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b);

 private:
  void check_grading(const Grading& grading) const;

  ScalarDomain domain_ = ScalarDomain::field(Field::rationals());
  std::size_t n_ = 0;
  std::vector<std::vector<Term>> brackets_;
  std::vector<std::string> names_;
  std::optional<Grading> grading_;
};

/// Symmetric bilinear form on a Lie algebra over a field.
class BilinearForm {
 public:
  BilinearForm() = default;
  /// Throws DimensionMismatch for a non-square matrix and SemanticError if not symmetric.
  explicit BilinearForm(Matrix matrix);

  std::size_t dim() const noexcept { return matrix_.rows(); }
  const Matrix& matrix() const noexcept { return matrix_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }
  Rational evaluate(const Field& field, const Vector& x, const Vector& y) const;

  friend bool operator==(const BilinearForm& a, const BilinearForm& b) { return a.matrix_ == b.matrix_; }

 private:
  Matrix matrix_;
};

/// Builds a form from (i, j, value) entries, symmetrized.
BilinearForm make_form(std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, Rational>>& entries);

/// B([x,y],z) + B(y,[x,z]) = 0 on all basis triples.
bool is_invariant(const LieAlgebra& g, const BilinearForm& form);
std::vector<Vector> form_kernel(const Field& field, const BilinearForm& form);
bool is_nondegenerate(const Field& field, const BilinearForm& form);

enum class SeriesKind { LowerCentral, Derived };

struct SeriesReport {
  SeriesKind kind = SeriesKind::LowerCentral;
  /// Term i (0-based) is g^(i+1) for the lower central series and D^i g for the derived series.
  std::vector<std::vector<Vector>> bases;
  std::vector<std::size_t> dims;
  bool nilpotent = false;
  bool solvable = false;
  bool metabelian = false;
  /// Smallest k with g^(k+1) = 0 (meaningful when nilpotent).
  std::size_t nilpotency_length = 0;
  /// Smallest k with D^k g = 0 (meaningful when solvable).
  std::size_t solvability_length = 0;
};

SeriesReport series(const LieAlgebra& g, SeriesKind kind);
/// Reduced echelon basis of span{[u, v] : u in U, v in V} (flat coordinates).
std::vector<Vector> bracket_span(const LieAlgebra& g, const std::vector<Vector>& u, const std::vector<Vector>& v);
/// Reduced echelon basis of the center.
std::vector<Vector> center(const LieAlgebra& g);

LieAlgebra direct_product(const LieAlgebra& g1, const LieAlgebra& g2);

/// Quotient algebra together with the presentation of the ideal.
struct LieQuotient {
  LieAlgebra algebra;
  QuotientPresentation ideal;
  /// Image of a flat vector of the parent algebra in the quotient basis.
  Vector project(const Vector& x) const { return ideal.coordinates(x); }
};

/// Throws NotAnIdeal with a witness pair when the span is not an ideal.
LieQuotient quotient_by_ideal(const LieAlgebra& g, const std::vector<Vector>& generators);

LieAlgebra current_algebra(const ScalarDomain& ring, const LieAlgebra& l);
LieAlgebra coadjoint_double(const LieAlgebra& g);

struct DoubleExtension {
  LieAlgebra algebra;
  BilinearForm form;
};

/// Basis order of the result: e, f, then the basis of h.
DoubleExtension double_extension(const LieAlgebra& h, const BilinearForm& form, const Matrix& derivation);

/// Basis of Der(g) as n x n matrices (column j holds D e_j).
std::vector<Matrix> derivation_algebra(const LieAlgebra& g);
bool is_derivation(const LieAlgebra& g, const Matrix& d);

struct DerivationNilpotency {
  bool all_nilpotent = false;
  /// Dimensions of the Engel flag V_0 = 0 < V_1 < ...
  std::vector<std::size_t> flag_dims;
  /// Stage at which the flag stalled (index into flag_dims), when not all nilpotent.
  std::size_t stall_stage = 0;
};

DerivationNilpotency all_derivations_nilpotent(const LieAlgebra& g);

}  // namespace liekit
