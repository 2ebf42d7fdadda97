#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "liekit/homology.hpp"
#include "liekit/lie_algebra.hpp"
#include "liekit/linalg.hpp"

namespace liekit {

/// Number of unordered pairs i <= j of {0..n-1}.
std::size_t sym_dim(std::size_t n);
/// Position of e_i (*) e_j in the lex order of pairs i <= j (arguments in any order).
std::size_t sym_index(std::size_t n, std::size_t i, std::size_t j);

/// x (*) y in flat coordinates of the symmetric square (pair p, ring basis a at p * d + a).
Vector sym_product(const LieAlgebra& g, const Vector& x, const Vector& y);

/// Columns of T on (e_a ^ e_b) (x) e_c, flat index ((pair(a<b)) * n + c) * d + beta.
std::vector<SparseVector> t_columns(const LieAlgebra& g);
Matrix t_matrix(const LieAlgebra& g);

struct KillingModule {
  /// Symmetric square modulo Im T; coordinates live on the free columns.
  QuotientPresentation presentation;
  std::size_t dim = 0;
  /// filtration[i] = dim Kill^(i+2); the last entry repeats from then on.
  std::vector<std::size_t> filtration;

  std::size_t filtration_dim(std::size_t i) const;
};

/// max_filtration = 0 computes the filtration until it stabilizes.
KillingModule killing_module(const LieAlgebra& g, std::size_t max_filtration = 0);

/// Subspace Kill^(i) in Kill coordinates (i >= 2).
RowSpace kill_filtration(const LieAlgebra& g, const KillingModule& kill, std::size_t i);

/// Weight of each Kill coordinate (the weight of the underlying free pair).
std::vector<Weight> kill_weights(const LieAlgebra& g, const KillingModule& kill);

/// Representative in the symmetric square: e_i (*) [e_j, e_k] on each basis triple i<j<k.
Vector eta_representative(const LieAlgebra& g, const ChainVector& chain);
/// Class of the chain in Kill, in Kill coordinates.
Vector eta_on_chain(const LieAlgebra& g, const KillingModule& kill, const ChainVector& chain);

struct KoszulImage {
  /// Reduced echelon basis of eta(Z_3) in Kill coordinates.
  std::vector<SparseVector> basis;
  std::size_t rank = 0;
};

KoszulImage reduced_koszul(const LieAlgebra& g, const KillingModule& kill,
                           const std::optional<Weight>& weight = std::nullopt);
KoszulImage reduced_koszul(const LieAlgebra& g, const std::optional<Weight>& weight = std::nullopt);

struct KoszulWeightDims {
  std::size_t kill = 0;
  std::size_t kill3 = 0;
  std::size_t eta_rank = 0;
};

/// Dimensions of Kill_beta, Kill^(3)_beta and eta(Z_3)_beta for every weight occurring in the symmetric square.
std::map<Weight, KoszulWeightDims> koszul_by_weight(const LieAlgebra& g);

/// Basis of the invariant symmetric bilinear forms.
std::vector<BilinearForm> invariant_forms(const LieAlgebra& g);

/// Sum over the chain of coeff * B(e_i, [e_j, e_k]). Throws FormNotInvariant.
Rational form_eta_pairing(const LieAlgebra& g, const BilinearForm& form, const ChainVector& chain);

enum class QuadrableVerdict { Nondegenerate, DegenerateCertified, Unknown };

struct QuadrableResult {
  QuadrableVerdict verdict = QuadrableVerdict::Unknown;
  std::optional<BilinearForm> witness;
  std::size_t form_space_dim = 0;
  std::size_t attempts = 0;
};

QuadrableResult quadrable_probe(const LieAlgebra& g, std::uint64_t seed = 0x5eed, std::size_t attempts = 200);

struct FormQuotient {
  LieQuotient quotient;
  BilinearForm form;
};

/// Quotient by the kernel of an invariant form, with the induced nondegenerate form.
FormQuotient quotient_by_form_kernel(const LieAlgebra& g, const BilinearForm& form);

/// Image of a chain under the projection onto a quotient algebra.
ChainVector push_chain(const LieAlgebra& g, const LieQuotient& q, const ChainVector& chain);

}  // namespace liekit
