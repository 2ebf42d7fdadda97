#include "liekit/homology.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "liekit/error.hpp"

namespace liekit {

namespace {

using RAccumulator = std::map<std::size_t, RingElement>;

// Image of the basis chain S under the boundary, with coefficients in the domain.
RColumn boundary_of_subset(const LieAlgebra& g, const ExteriorBasis& lower, const std::vector<std::size_t>& s) {
  const ScalarDomain& domain = g.domain();
  const std::size_t k = s.size();
  RAccumulator acc;
  std::vector<std::size_t> rest;
  rest.reserve(k);
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t q = p + 1; q < k; ++q) {
      const auto& terms = g.bracket(s[p], s[q]);
      if (terms.empty()) continue;
      rest.clear();
      for (std::size_t r = 0; r < k; ++r) {
        if (r != p && r != q) rest.push_back(s[r]);
      }
      const bool odd_pq = ((p + q) % 2) == 1;
      for (const auto& t : terms) {
        if (std::binary_search(rest.begin(), rest.end(), t.index)) continue;
        const std::size_t before = static_cast<std::size_t>(std::lower_bound(rest.begin(), rest.end(), t.index) - rest.begin());
        std::vector<std::size_t> merged;
        merged.reserve(k - 1);
        merged.insert(merged.end(), rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(before));
        merged.push_back(t.index);
        merged.insert(merged.end(), rest.begin() + static_cast<std::ptrdiff_t>(before), rest.end());
        const bool negate = odd_pq != ((before % 2) == 1);
        const RingElement c = negate ? domain.neg(t.coeff) : t.coeff;
        auto [it, inserted] = acc.emplace(lower.index(merged), c);
        if (!inserted) it->second = domain.add(it->second, c);
      }
    }
  }
  RColumn column;
  for (auto& [idx, c] : acc) {
    if (!domain.is_zero(c)) column.emplace_back(idx, std::move(c));
  }
  return column;
}

std::vector<std::size_t> all_indices(std::size_t count) {
  std::vector<std::size_t> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = i;
  return v;
}

std::map<Weight, std::size_t> ranks_by_weight(const LieAlgebra& g, std::size_t k) {
  std::map<Weight, std::size_t> out;
  if (k == 0 || k > g.dim()) return out;
  const auto weights = chain_weights(g, k);
  std::map<Weight, std::vector<std::size_t>> blocks;
  for (std::size_t f = 0; f < weights.size(); ++f) blocks[weights[f]].push_back(f);
  const std::size_t rows = binomial(g.dim(), k - 1) * g.domain().dim();
  for (const auto& [w, columns] : blocks) {
    check_size(rows, columns.size(), "boundary block");
    RowSpace space(g.field(), rows);
    for (const auto& col : boundary_columns(g, k, columns)) {
      if (!col.empty()) space.insert(col);
    }
    out[w] = space.rank();
  }
  return out;
}

}  // namespace

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int sort_with_sign(std::vector<std::size_t>& indices) {
  int sign = 1;
  for (std::size_t i = 1; i < indices.size(); ++i) {
    for (std::size_t j = i; j > 0 && indices[j - 1] > indices[j]; --j) {
      std::swap(indices[j - 1], indices[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < indices.size(); ++i) {
    if (indices[i - 1] == indices[i]) return 0;
  }
  return sign;
}

ExteriorBasis::ExteriorBasis(std::size_t n, std::size_t k) : n_(n), k_(k), size_(binomial(n, k)) {
  check_size(size_, std::max<std::size_t>(k, 1), "exterior basis");
  subsets_.reserve(size_ * k);
  if (k > n) return;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  for (std::size_t count = 0; count < size_; ++count) {
    for (std::size_t x : c) subsets_.push_back(static_cast<std::uint32_t>(x));
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

std::vector<std::size_t> ExteriorBasis::subset(std::size_t index) const {
  if (index >= size_) throw Error(ErrorKind::IndexOutOfRange, "exterior basis index");
  return std::vector<std::size_t>(subsets_.begin() + static_cast<std::ptrdiff_t>(index * k_),
                                  subsets_.begin() + static_cast<std::ptrdiff_t>((index + 1) * k_));
}

std::size_t ExteriorBasis::index(const std::vector<std::size_t>& sorted) const {
  if (sorted.size() != k_) throw Error(ErrorKind::DegreeMismatch, "subset has the wrong size");
  std::size_t rank = 0;
  std::size_t prev = 0;
  for (std::size_t i = 0; i < k_; ++i) {
    const std::size_t c = sorted[i];
    if (c >= n_ || (i > 0 && c <= sorted[i - 1])) throw Error(ErrorKind::IndexOutOfRange, "subset is not increasing");
    for (std::size_t j = (i == 0 ? 0 : prev + 1); j < c; ++j) rank += binomial(n_ - 1 - j, k_ - 1 - i);
    prev = c;
  }
  return rank;
}

ChainVector zero_chain(const LieAlgebra& g, std::size_t degree) {
  if (degree > g.dim()) throw Error(ErrorKind::DegreeMismatch, "degree exceeds the dimension");
  return ChainVector{degree, Vector(binomial(g.dim(), degree) * g.domain().dim())};
}

void add_wedge(const LieAlgebra& g, ChainVector& chain, const RingElement& coeff, std::vector<std::size_t> indices) {
  if (indices.size() != chain.degree) throw Error(ErrorKind::DegreeMismatch, "wedge length differs from chain degree");
  for (std::size_t i : indices) {
    if (i >= g.dim()) throw Error(ErrorKind::IndexOutOfRange, "wedge index");
  }
  const int sign = sort_with_sign(indices);
  if (sign == 0) return;
  const ScalarDomain& domain = g.domain();
  const std::size_t d = domain.dim();
  const std::size_t s = ExteriorBasis(g.dim(), chain.degree).index(indices);
  for (std::size_t a = 0; a < d; ++a) {
    Rational& slot = chain.coeffs[s * d + a];
    slot = sign > 0 ? domain.base().add(slot, coeff[a]) : domain.base().sub(slot, coeff[a]);
  }
}

void add_wedge(const LieAlgebra& g, ChainVector& chain, const Rational& coeff, std::vector<std::size_t> indices) {
  add_wedge(g, chain, g.domain().from_base(coeff), std::move(indices));
}

ChainVector chain_from_names(const LieAlgebra& g, const std::vector<WedgeTerm>& terms) {
  if (terms.empty()) throw Error(ErrorKind::DegreeMismatch, "empty chain has no degree");
  ChainVector chain = zero_chain(g, terms.front().names.size());
  for (const auto& term : terms) {
    std::vector<std::size_t> idx;
    for (const auto& name : term.names) idx.push_back(g.index_of(name));
    add_wedge(g, chain, term.coeff, idx);
  }
  return chain;
}

std::vector<SparseVector> boundary_columns(const LieAlgebra& g, std::size_t k, const std::vector<std::size_t>& flat_columns) {
  const std::size_t n = g.dim();
  const std::size_t d = g.domain().dim();
  if (k > n) throw Error(ErrorKind::DegreeMismatch, "degree exceeds the dimension");
  const ExteriorBasis upper(n, k);
  const std::vector<std::size_t> wanted = flat_columns.empty() ? all_indices(upper.size() * d) : flat_columns;
  std::vector<SparseVector> out;
  out.reserve(wanted.size());
  if (k == 0) {
    out.resize(wanted.size());
    return out;
  }
  const ExteriorBasis lower(n, k - 1);
  std::size_t cached_subset = static_cast<std::size_t>(-1);
  std::vector<SparseVector> cached;
  for (std::size_t f : wanted) {
    if (f >= upper.size() * d) throw Error(ErrorKind::IndexOutOfRange, "chain index");
    const std::size_t s = f / d;
    if (s != cached_subset) {
      cached = restrict_scalars_sparse(g.domain(), {boundary_of_subset(g, lower, upper.subset(s))});
      cached_subset = s;
    }
    out.push_back(cached[f % d]);
  }
  return out;
}

Matrix boundary_matrix(const LieAlgebra& g, std::size_t k) {
  const std::size_t n = g.dim();
  const std::size_t d = g.domain().dim();
  if (k > n) throw Error(ErrorKind::DegreeMismatch, "degree exceeds the dimension");
  const std::size_t rows = k == 0 ? 0 : binomial(n, k - 1) * d;
  const std::size_t cols = binomial(n, k) * d;
  check_size(rows, cols, "boundary matrix");
  Matrix m(rows, cols);
  const auto columns = boundary_columns(g, k);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& [r, x] : columns[c]) m(r, c) = x;
  }
  return m;
}

ChainVector apply_boundary(const LieAlgebra& g, const ChainVector& chain) {
  if (chain.degree == 0) throw Error(ErrorKind::DegreeMismatch, "boundary of a 0-chain");
  const std::size_t d = g.domain().dim();
  if (chain.coeffs.size() != binomial(g.dim(), chain.degree) * d) {
    throw Error(ErrorKind::DimensionMismatch, "chain has the wrong number of coefficients");
  }
  std::vector<std::size_t> support;
  for (std::size_t f = 0; f < chain.coeffs.size(); ++f) {
    if (sgn(chain.coeffs[f]) != 0) support.push_back(f);
  }
  ChainVector out = zero_chain(g, chain.degree - 1);
  const auto columns = boundary_columns(g, chain.degree, support);
  const Field& field = g.field();
  for (std::size_t i = 0; i < support.size(); ++i) {
    const Rational& x = chain.coeffs[support[i]];
    for (const auto& [r, y] : columns[i]) out.coeffs[r] += x * y;
  }
  for (auto& c : out.coeffs) c = field.from(c);
  return out;
}

std::vector<Weight> chain_weights(const LieAlgebra& g, std::size_t k) {
  if (!g.grading()) throw Error(ErrorKind::NotGraded, "algebra carries no grading");
  const Grading& gr = *g.grading();
  const ExteriorBasis basis(g.dim(), k);
  const std::size_t d = g.domain().dim();
  std::vector<Weight> out;
  out.reserve(basis.size() * d);
  for (std::size_t s = 0; s < basis.size(); ++s) {
    Weight w = gr.zero();
    for (std::size_t i : basis.subset(s)) w = gr.add(w, gr.weight(i));
    for (std::size_t a = 0; a < d; ++a) out.push_back(w);
  }
  return out;
}

std::vector<std::size_t> homogeneous_chains(const LieAlgebra& g, std::size_t k, const Weight& weight) {
  const Weight w = g.grading() ? g.grading()->normalize(weight) : weight;
  const auto weights = chain_weights(g, k);
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < weights.size(); ++f) {
    if (weights[f] == w) out.push_back(f);
  }
  return out;
}

std::vector<Weight> weights_in_degree(const LieAlgebra& g, std::size_t k) {
  const auto weights = chain_weights(g, k);
  std::set<Weight> distinct(weights.begin(), weights.end());
  return {distinct.begin(), distinct.end()};
}

std::size_t boundary_rank(const LieAlgebra& g, std::size_t k, const std::optional<Weight>& weight) {
  if (k == 0 || k > g.dim()) return 0;
  const std::size_t rows = binomial(g.dim(), k - 1) * g.domain().dim();
  if (weight) {
    const auto columns = homogeneous_chains(g, k, *weight);
    if (columns.empty()) return 0;
    check_size(rows, columns.size(), "boundary block");
    RowSpace space(g.field(), rows);
    for (const auto& col : boundary_columns(g, k, columns)) {
      if (!col.empty()) space.insert(col);
    }
    return space.rank();
  }
  if (g.grading()) {
    std::size_t total = 0;
    for (const auto& [w, r] : ranks_by_weight(g, k)) total += r;
    return total;
  }
  const std::size_t cols = binomial(g.dim(), k) * g.domain().dim();
  check_size(rows, cols, "boundary matrix");
  RowSpace space(g.field(), rows);
  for (const auto& col : boundary_columns(g, k)) {
    if (!col.empty()) space.insert(col);
  }
  return space.rank();
}

std::vector<std::size_t> HomologyReport::betti() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees) out.push_back(d.betti);
  return out;
}

HomologyReport betti_numbers(const LieAlgebra& g, std::size_t up_to, const std::optional<Weight>& weight) {
  const std::size_t n = g.dim();
  const std::size_t d = g.domain().dim();
  const std::size_t top = std::min(up_to, n);
  HomologyReport report;
  report.weight = weight;
  if (weight && !g.grading()) throw Error(ErrorKind::NotGraded, "weight requested for an ungraded algebra");

  if (weight) {
    std::vector<std::size_t> ranks(top + 2, 0);
    for (std::size_t k = 1; k <= std::min(top + 1, n); ++k) ranks[k] = boundary_rank(g, k, weight);
    for (std::size_t k = 0; k <= top; ++k) {
      DegreeHomology h;
      h.degree = k;
      h.chains = homogeneous_chains(g, k, *weight).size();
      h.boundary_rank = ranks[k];
      h.cycles = h.chains - ranks[k];
      h.boundaries = ranks[k + 1];
      h.betti = h.cycles - h.boundaries;
      report.degrees.push_back(h);
    }
    return report;
  }

  std::vector<std::size_t> ranks(top + 2, 0);
  std::vector<std::map<Weight, std::size_t>> block_ranks(top + 2);
  for (std::size_t k = 1; k <= std::min(top + 1, n); ++k) {
    if (g.grading()) {
      block_ranks[k] = ranks_by_weight(g, k);
      for (const auto& [w, r] : block_ranks[k]) ranks[k] += r;
    } else {
      ranks[k] = boundary_rank(g, k);
    }
  }
  for (std::size_t k = 0; k <= top; ++k) {
    DegreeHomology h;
    h.degree = k;
    h.chains = binomial(n, k) * d;
    h.boundary_rank = ranks[k];
    h.cycles = h.chains - ranks[k];
    h.boundaries = ranks[k + 1];
    h.betti = h.cycles - h.boundaries;
    report.degrees.push_back(h);
  }
  if (g.grading()) {
    std::map<Weight, std::vector<std::size_t>> table;
    std::vector<std::map<Weight, std::size_t>> counts(top + 1);
    for (std::size_t k = 0; k <= top; ++k) {
      for (const auto& w : chain_weights(g, k)) ++counts[k][w];
    }
    for (std::size_t k = 0; k <= top; ++k) {
      for (const auto& [w, c] : counts[k]) table.emplace(w, std::vector<std::size_t>(top + 1, 0));
    }
    for (auto& [w, b] : table) {
      for (std::size_t k = 0; k <= top; ++k) {
        auto count = counts[k].find(w);
        const std::size_t chains = count == counts[k].end() ? 0 : count->second;
        auto rk = block_ranks[k].find(w);
        auto rk1 = block_ranks[k + 1].find(w);
        const std::size_t r_in = rk == block_ranks[k].end() ? 0 : rk->second;
        const std::size_t r_out = rk1 == block_ranks[k + 1].end() ? 0 : rk1->second;
        b[k] = chains - r_in - r_out;
      }
    }
    report.per_weight.assign(table.begin(), table.end());
  }
  return report;
}

std::vector<Vector> cycle_basis(const LieAlgebra& g, std::size_t k, const std::optional<Weight>& weight) {
  const std::size_t d = g.domain().dim();
  const std::size_t total = binomial(g.dim(), k) * d;
  const std::vector<std::size_t> columns = weight ? homogeneous_chains(g, k, *weight) : all_indices(total);
  if (columns.empty()) return {};
  const std::size_t rows = k == 0 ? 0 : binomial(g.dim(), k - 1) * d;
  std::vector<Vector> out;
  if (rows == 0) {
    for (std::size_t f : columns) {
      Vector v(total);
      v[f] = 1;
      out.push_back(std::move(v));
    }
    return out;
  }
  check_size(rows, columns.size(), "boundary block");
  Matrix m(rows, columns.size());
  const auto sparse = boundary_columns(g, k, columns);
  for (std::size_t c = 0; c < sparse.size(); ++c) {
    for (const auto& [r, x] : sparse[c]) m(r, c) = x;
  }
  for (const auto& v : rank_nullspace(g.field(), m).nullspace) {
    Vector full(total);
    for (std::size_t c = 0; c < columns.size(); ++c) full[columns[c]] = v[c];
    out.push_back(std::move(full));
  }
  return out;
}

RowSpace boundary_space(const LieAlgebra& g, std::size_t k, const std::optional<Weight>& weight) {
  const std::size_t d = g.domain().dim();
  RowSpace space(g.field(), binomial(g.dim(), k) * d);
  if (k + 1 > g.dim()) return space;
  const std::size_t upper = binomial(g.dim(), k + 1) * d;
  const std::vector<std::size_t> columns = weight ? homogeneous_chains(g, k + 1, *weight) : all_indices(upper);
  if (columns.empty()) return space;
  check_size(space.dim(), columns.size(), "boundary block");
  for (const auto& col : boundary_columns(g, k + 1, columns)) {
    if (!col.empty()) space.insert(col);
  }
  return space;
}

bool homology_class_nonzero(const LieAlgebra& g, const ChainVector& cycle, const std::optional<Weight>& weight) {
  if (cycle.degree > 0 && !is_zero(apply_boundary(g, cycle).coeffs)) {
    throw Error(ErrorKind::NotACycle, "chain has nonzero boundary");
  }
  if (weight) {
    const auto weights = chain_weights(g, cycle.degree);
    const Weight w = g.grading()->normalize(*weight);
    for (std::size_t f = 0; f < cycle.coeffs.size(); ++f) {
      if (sgn(cycle.coeffs[f]) != 0 && weights[f] != w) {
        throw Error(ErrorKind::DegreeMismatch, "cycle is not homogeneous of weight " + g.grading()->format(w));
      }
    }
  }
  return !boundary_space(g, cycle.degree, weight).contains(cycle.coeffs);
}

std::optional<Vector> solve_in_span(const Field& field, const std::vector<Vector>& columns, const Vector& target) {
  std::vector<Vector> augmented = columns;
  augmented.push_back(target);
  const std::size_t m = columns.size();
  const auto kernel = rank_nullspace(field, Matrix::from_columns(augmented, target.size())).nullspace;
  // the kernel vector attached to a free target column has a 1 there
  for (const auto& v : kernel) {
    if (v[m] == 1) {
      Vector x(m);
      for (std::size_t i = 0; i < m; ++i) x[i] = field.neg(v[i]);
      return x;
    }
  }
  return std::nullopt;
}

}  // namespace liekit
