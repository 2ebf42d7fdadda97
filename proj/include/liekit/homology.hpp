#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liekit/lie_algebra.hpp"
#include "liekit/linalg.hpp"

namespace liekit {

std::size_t binomial(std::size_t n, std::size_t k);

/// Sorts indices in place and returns the sign of the sorting permutation,
/// or 0 when an index repeats.
int sort_with_sign(std::vector<std::size_t>& indices);

/// The k-subsets of {0..n-1} in lexicographic order.
class ExteriorBasis {
 public:
  ExteriorBasis(std::size_t n, std::size_t k);

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t size() const noexcept { return size_; }

  std::vector<std::size_t> subset(std::size_t index) const;
  /// Position of a strictly increasing subset.
  std::size_t index(const std::vector<std::size_t>& sorted) const;

 private:
  std::size_t n_;
  std::size_t k_;
  std::size_t size_;
  std::vector<std::uint32_t> subsets_;
};

/// Element of the k-th exterior power of the algebra, in flat coordinates:
/// the coefficient of a_alpha (x_S) sits at S * d + alpha, S the lex rank of the subset.
struct ChainVector {
  std::size_t degree = 0;
  Vector coeffs;
};

ChainVector zero_chain(const LieAlgebra& g, std::size_t degree);
/// Adds coeff * e_{i_1} ^ ... ^ e_{i_k} (indices in any order; the sorting sign is applied).
void add_wedge(const LieAlgebra& g, ChainVector& chain, const RingElement& coeff, std::vector<std::size_t> indices);
void add_wedge(const LieAlgebra& g, ChainVector& chain, const Rational& coeff, std::vector<std::size_t> indices);

struct WedgeTerm {
  Rational coeff;
  std::vector<std::string> names;
};

/// Builds a chain from named wedge monomials; all terms must have the same length.
ChainVector chain_from_names(const LieAlgebra& g, const std::vector<WedgeTerm>& terms);

/// Sparse base-field columns of the boundary on the listed flat k-chains (all when empty).
std::vector<SparseVector> boundary_columns(const LieAlgebra& g, std::size_t k,
                                           const std::vector<std::size_t>& flat_columns = {});

/// Matrix of the boundary from degree k to degree k-1 in lex bases (flat over the base field).
Matrix boundary_matrix(const LieAlgebra& g, std::size_t k);
ChainVector apply_boundary(const LieAlgebra& g, const ChainVector& chain);

/// Weight of each flat basis chain of degree k.
std::vector<Weight> chain_weights(const LieAlgebra& g, std::size_t k);
/// Flat indices of the degree-k chains of the given weight.
std::vector<std::size_t> homogeneous_chains(const LieAlgebra& g, std::size_t k, const Weight& weight);
/// Distinct weights occurring in degree k, in sorted order.
std::vector<Weight> weights_in_degree(const LieAlgebra& g, std::size_t k);

/// Rank of the boundary out of degree k (restricted to a weight when given).
std::size_t boundary_rank(const LieAlgebra& g, std::size_t k, const std::optional<Weight>& weight = std::nullopt);

struct DegreeHomology {
  std::size_t degree = 0;
  std::size_t chains = 0;
  std::size_t boundary_rank = 0;
  std::size_t cycles = 0;
  std::size_t boundaries = 0;
  std::size_t betti = 0;
};

struct HomologyReport {
  std::optional<Weight> weight;
  std::vector<DegreeHomology> degrees;
  /// For graded algebras without a requested weight: Betti numbers per weight.
  std::vector<std::pair<Weight, std::vector<std::size_t>>> per_weight;

  std::vector<std::size_t> betti() const;
};

/// Degrees 0..up_to (capped at the rank of the algebra).
HomologyReport betti_numbers(const LieAlgebra& g, std::size_t up_to, const std::optional<Weight>& weight = std::nullopt);

/// Reduced echelon basis of Z_k (restricted to a weight when given).
std::vector<Vector> cycle_basis(const LieAlgebra& g, std::size_t k, const std::optional<Weight>& weight = std::nullopt);
/// Row space spanned by B_k = image of the boundary out of degree k+1.
RowSpace boundary_space(const LieAlgebra& g, std::size_t k, const std::optional<Weight>& weight = std::nullopt);

/// Throws NotACycle when the chain is not a cycle.
bool homology_class_nonzero(const LieAlgebra& g, const ChainVector& cycle,
                            const std::optional<Weight>& weight = std::nullopt);

/// Coefficients expressing `target` in the span of `columns`, if it lies there.
std::optional<Vector> solve_in_span(const Field& field, const std::vector<Vector>& columns, const Vector& target);

}  // namespace liekit
