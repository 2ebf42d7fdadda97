#include "liekit/koszul.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "liekit/error.hpp"

namespace liekit {

namespace {

void add_pair(const ScalarDomain& domain, std::map<std::size_t, RingElement>& acc, std::size_t key, const RingElement& c) {
  auto [it, inserted] = acc.emplace(key, c);
  if (!inserted) it->second = domain.add(it->second, c);
}

RColumn to_column(const ScalarDomain& domain, std::map<std::size_t, RingElement>& acc) {
  RColumn out;
  for (auto& [k, c] : acc) {
    if (!domain.is_zero(c)) out.emplace_back(k, std::move(c));
  }
  return out;
}

// e_i (*) [e_j, e_k] as a domain-level column over pairs.
RColumn eta_column(const LieAlgebra& g, std::size_t i, std::size_t j, std::size_t k) {
  std::map<std::size_t, RingElement> acc;
  for (const auto& t : g.bracket(j, k)) add_pair(g.domain(), acc, sym_index(g.dim(), i, t.index), t.coeff);
  return to_column(g.domain(), acc);
}

std::vector<Vector> unit_vectors(std::size_t n) {
  std::vector<Vector> out(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

void require_field(const LieAlgebra& g, const char* what) {
  if (!g.over_field()) throw Error(ErrorKind::NotAField, std::string(what) + " needs a field");
}

void require_invariant(const LieAlgebra& g, const BilinearForm& form) {
  if (form.dim() != g.dim()) throw Error(ErrorKind::DimensionMismatch, "form size differs from the algebra dimension");
  if (!is_invariant(g, form)) throw Error(ErrorKind::FormNotInvariant, "form is not invariant");
}

}  // namespace

std::size_t sym_dim(std::size_t n) { return n * (n + 1) / 2; }

std::size_t sym_index(std::size_t n, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  if (j >= n) throw Error(ErrorKind::IndexOutOfRange, "symmetric pair index");
  return i * n - i * (i - 1) / 2 + (j - i);
}

Vector sym_product(const LieAlgebra& g, const Vector& x, const Vector& y) {
  const ScalarDomain& domain = g.domain();
  const Field& field = g.field();
  const std::size_t n = g.dim();
  const std::size_t d = domain.dim();
  if (x.size() != n * d || y.size() != n * d) throw Error(ErrorKind::DimensionMismatch, "vector length");
  Vector out(sym_dim(n) * d);
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (sgn(x[p]) == 0) continue;
    for (std::size_t q = 0; q < y.size(); ++q) {
      if (sgn(y[q]) == 0) continue;
      const Rational xy = x[p] * y[q];
      const std::size_t pair = sym_index(n, p / d, q / d);
      for (std::size_t c = 0; c < d; ++c) {
        const Rational& m = domain.structure(p % d, q % d, c);
        if (sgn(m) != 0) out[pair * d + c] += xy * m;
      }
    }
  }
  for (auto& v : out) v = field.from(v);
  return out;
}

std::vector<SparseVector> t_columns(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const ExteriorBasis pairs(n, 2);
  std::vector<RColumn> columns;
  columns.reserve(pairs.size() * n);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto ab = pairs.subset(p);
    const std::size_t a = ab[0];
    const std::size_t b = ab[1];
    for (std::size_t c = 0; c < n; ++c) {
      std::map<std::size_t, RingElement> acc;
      for (const auto& t : g.bracket(b, c)) add_pair(g.domain(), acc, sym_index(n, a, t.index), t.coeff);
      for (const auto& t : g.bracket(c, a)) add_pair(g.domain(), acc, sym_index(n, b, t.index), g.domain().neg(t.coeff));
      columns.push_back(to_column(g.domain(), acc));
    }
  }
  return restrict_scalars_sparse(g.domain(), columns);
}

Matrix t_matrix(const LieAlgebra& g) {
  const std::size_t d = g.domain().dim();
  const std::size_t rows = sym_dim(g.dim()) * d;
  const std::size_t cols = binomial(g.dim(), 2) * g.dim() * d;
  check_size(rows, cols, "T matrix");
  Matrix m(rows, cols);
  const auto columns = t_columns(g);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& [r, x] : columns[c]) m(r, c) = x;
  }
  return m;
}

std::size_t KillingModule::filtration_dim(std::size_t i) const {
  if (filtration.empty()) return dim;
  const std::size_t k = i < 2 ? 0 : i - 2;
  return filtration[std::min(k, filtration.size() - 1)];
}

RowSpace kill_filtration(const LieAlgebra& g, const KillingModule& kill, std::size_t i) {
  RowSpace space(g.field(), kill.dim);
  if (i < 2) i = 2;
  const auto lcs = series(g, SeriesKind::LowerCentral).bases;
  const auto& term = lcs[std::min(i - 2, lcs.size() - 1)];
  const auto all = unit_vectors(g.flat_dim());
  for (const auto& x : all) {
    for (const auto& w : term) {
      const Vector c = kill.presentation.coordinates(sym_product(g, x, w));
      if (!is_zero(c)) space.insert(c);
    }
  }
  return space;
}

KillingModule killing_module(const LieAlgebra& g, std::size_t max_filtration) {
  const std::size_t rows = sym_dim(g.dim()) * g.domain().dim();
  RowSpace image(g.field(), rows);
  for (const auto& col : t_columns(g)) {
    if (!col.empty()) image.insert(col);
  }
  KillingModule kill;
  kill.presentation = QuotientPresentation(image);
  kill.dim = kill.presentation.quotient_dim();

  const auto lcs = series(g, SeriesKind::LowerCentral).bases;
  const auto all = unit_vectors(g.flat_dim());
  for (std::size_t t = 0; t < lcs.size(); ++t) {
    RowSpace space(g.field(), kill.dim);
    for (const auto& x : all) {
      for (const auto& w : lcs[t]) {
        const Vector c = kill.presentation.coordinates(sym_product(g, x, w));
        if (!is_zero(c)) space.insert(c);
      }
    }
    kill.filtration.push_back(space.rank());
  }
  while (max_filtration >= 2 && kill.filtration.size() < max_filtration - 1) {
    kill.filtration.push_back(kill.filtration.back());
  }
  return kill;
}

std::vector<Weight> kill_weights(const LieAlgebra& g, const KillingModule& kill) {
  if (!g.grading()) throw Error(ErrorKind::NotGraded, "algebra carries no grading");
  const Grading& gr = *g.grading();
  const std::size_t n = g.dim();
  const std::size_t d = g.domain().dim();
  std::vector<Weight> pair_weight(sym_dim(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) pair_weight[sym_index(n, i, j)] = gr.add(gr.weight(i), gr.weight(j));
  }
  std::vector<Weight> out;
  for (std::size_t f : kill.presentation.free_columns()) out.push_back(pair_weight[f / d]);
  return out;
}

Vector eta_representative(const LieAlgebra& g, const ChainVector& chain) {
  if (chain.degree != 3) throw Error(ErrorKind::DegreeMismatch, "the Koszul map takes 3-chains");
  const std::size_t n = g.dim();
  const std::size_t d = g.domain().dim();
  const Field& field = g.field();
  const ExteriorBasis basis(n, 3);
  if (chain.coeffs.size() != basis.size() * d) throw Error(ErrorKind::DimensionMismatch, "chain length");
  Vector out(sym_dim(n) * d);
  for (std::size_t s = 0; s < basis.size(); ++s) {
    bool any = false;
    for (std::size_t a = 0; a < d; ++a) any = any || sgn(chain.coeffs[s * d + a]) != 0;
    if (!any) continue;
    const auto ijk = basis.subset(s);
    const auto cols = restrict_scalars_sparse(g.domain(), {eta_column(g, ijk[0], ijk[1], ijk[2])});
    for (std::size_t a = 0; a < d; ++a) {
      const Rational& c = chain.coeffs[s * d + a];
      if (sgn(c) == 0) continue;
      for (const auto& [r, x] : cols[a]) out[r] += c * x;
    }
  }
  for (auto& v : out) v = field.from(v);
  return out;
}

Vector eta_on_chain(const LieAlgebra& g, const KillingModule& kill, const ChainVector& chain) {
  return kill.presentation.coordinates(eta_representative(g, chain));
}

KoszulImage reduced_koszul(const LieAlgebra& g, const KillingModule& kill, const std::optional<Weight>& weight) {
  KoszulImage out;
  if (g.dim() < 3) return out;
  RowSpace image(g.field(), kill.dim);
  for (auto& z : cycle_basis(g, 3, weight)) {
    const Vector c = eta_on_chain(g, kill, ChainVector{3, std::move(z)});
    if (!is_zero(c)) image.insert(c);
  }
  out.basis = image.rref();
  out.rank = image.rank();
  return out;
}

KoszulImage reduced_koszul(const LieAlgebra& g, const std::optional<Weight>& weight) {
  return reduced_koszul(g, killing_module(g), weight);
}

std::map<Weight, KoszulWeightDims> koszul_by_weight(const LieAlgebra& g) {
  const KillingModule kill = killing_module(g);
  const auto weights = kill_weights(g, kill);
  std::map<Weight, KoszulWeightDims> out;
  const std::size_t n = g.dim();
  const Grading& gr = *g.grading();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) out[gr.add(gr.weight(i), gr.weight(j))];
  }
  for (const auto& w : weights) ++out[w].kill;

  std::map<Weight, RowSpace> blocks;
  for (const auto& row : kill_filtration(g, kill, 3).rref()) {
    std::map<Weight, SparseVector> parts;
    for (const auto& [c, x] : row) parts[weights[c]].emplace_back(c, x);
    for (const auto& [w, part] : parts) {
      auto it = blocks.try_emplace(w, g.field(), kill.dim).first;
      it->second.insert(part);
    }
  }
  for (const auto& [w, space] : blocks) out[w].kill3 = space.rank();
  if (n >= 3) {
    for (const auto& w : weights_in_degree(g, 3)) {
      auto it = out.find(w);
      if (it == out.end() || it->second.kill3 == 0) continue;
      it->second.eta_rank = reduced_koszul(g, kill, w).rank;
    }
  }
  return out;
}

std::vector<BilinearForm> invariant_forms(const LieAlgebra& g) {
  require_field(g, "invariant forms");
  const std::size_t n = g.dim();
  const Field& field = g.field();
  RowSpace equations(field, sym_dim(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = y; z < n; ++z) {
        std::map<std::size_t, Rational> row;
        for (const auto& t : g.bracket(x, y)) row[sym_index(n, t.index, z)] += t.coeff[0];
        for (const auto& t : g.bracket(x, z)) row[sym_index(n, y, t.index)] += t.coeff[0];
        SparseVector s;
        for (const auto& [c, v] : row) {
          Rational r = field.from(v);
          if (sgn(r) != 0) s.emplace_back(c, r);
        }
        if (!s.empty()) equations.insert(s);
      }
    }
  }
  std::vector<BilinearForm> out;
  for (const auto& v : nullspace(equations)) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        m(i, j) = v[sym_index(n, i, j)];
        m(j, i) = m(i, j);
      }
    }
    out.emplace_back(std::move(m));
  }
  return out;
}

Rational form_eta_pairing(const LieAlgebra& g, const BilinearForm& form, const ChainVector& chain) {
  require_field(g, "form pairing");
  require_invariant(g, form);
  if (chain.degree != 3) throw Error(ErrorKind::DegreeMismatch, "the pairing takes 3-chains");
  const Field& field = g.field();
  const ExteriorBasis basis(g.dim(), 3);
  if (chain.coeffs.size() != basis.size()) throw Error(ErrorKind::DimensionMismatch, "chain length");
  Rational total = 0;
  for (std::size_t s = 0; s < basis.size(); ++s) {
    if (sgn(chain.coeffs[s]) == 0) continue;
    const auto ijk = basis.subset(s);
    Rational value = 0;
    for (const auto& t : g.bracket(ijk[1], ijk[2])) value += t.coeff[0] * form(ijk[0], t.index);
    total += chain.coeffs[s] * value;
  }
  return field.from(total);
}

QuadrableResult quadrable_probe(const LieAlgebra& g, std::uint64_t seed, std::size_t attempts) {
  require_field(g, "quadrable probe");
  const std::size_t n = g.dim();
  const Field& field = g.field();
  const auto forms = invariant_forms(g);
  const std::size_t s = forms.size();
  QuadrableResult out;
  out.form_space_dim = s;
  if (n == 0) {
    out.verdict = QuadrableVerdict::Nondegenerate;
    out.witness = BilinearForm(Matrix(0, 0));
    return out;
  }
  if (s == 0) {
    out.verdict = QuadrableVerdict::DegenerateCertified;
    return out;
  }
  auto combine = [&](const std::vector<long>& c) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < s; ++k) {
      if (c[k] == 0) continue;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) += c[k] * forms[k](i, j);
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = field.from(m(i, j));
    return m;
  };
  static constexpr std::array<long, 8> kValues{-2, -1, 0, 1, 2, 3, 5, 7};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, kValues.size() - 1);
  std::vector<long> c(s);
  for (std::size_t a = 0; a < attempts; ++a) {
    for (auto& x : c) x = kValues[pick(rng)];
    ++out.attempts;
    Matrix m = combine(c);
    if (rank(field, m) == n) {
      out.verdict = QuadrableVerdict::Nondegenerate;
      out.witness = BilinearForm(std::move(m));
      return out;
    }
  }
  // det of a combination is a polynomial of degree <= n in each coefficient,
  // so vanishing on the grid {0..n}^s forces it to vanish identically
  const bool field_large = field.is_rational() || field.characteristic() > n;
  double points = 1;
  for (std::size_t k = 0; k < s; ++k) points *= static_cast<double>(n + 1);
  if (!field_large || points > 20000) return out;
  std::fill(c.begin(), c.end(), 0);
  while (true) {
    ++out.attempts;
    Matrix m = combine(c);
    if (rank(field, m) == n) {
      out.verdict = QuadrableVerdict::Nondegenerate;
      out.witness = BilinearForm(std::move(m));
      return out;
    }
    std::size_t k = 0;
    while (k < s && c[k] == static_cast<long>(n)) c[k++] = 0;
    if (k == s) break;
    ++c[k];
  }
  out.verdict = QuadrableVerdict::DegenerateCertified;
  return out;
}

FormQuotient quotient_by_form_kernel(const LieAlgebra& g, const BilinearForm& form) {
  require_field(g, "form quotient");
  require_invariant(g, form);
  LieQuotient q = quotient_by_ideal(g, form_kernel(g.field(), form));
  const auto& free = q.ideal.free_columns();
  Matrix m(free.size(), free.size());
  for (std::size_t a = 0; a < free.size(); ++a)
    for (std::size_t b = 0; b < free.size(); ++b) m(a, b) = form(free[a], free[b]);
  return FormQuotient{std::move(q), BilinearForm(std::move(m))};
}

ChainVector push_chain(const LieAlgebra& g, const LieQuotient& q, const ChainVector& chain) {
  require_field(g, "chain push-forward");
  const ExteriorBasis basis(g.dim(), chain.degree);
  if (chain.coeffs.size() != basis.size()) throw Error(ErrorKind::DimensionMismatch, "chain length");
  std::vector<SparseVector> images;
  for (std::size_t i = 0; i < g.dim(); ++i) images.push_back(to_sparse(q.project(g.basis_vector(i))));
  ChainVector out = zero_chain(q.algebra, chain.degree);
  for (std::size_t s = 0; s < basis.size(); ++s) {
    if (sgn(chain.coeffs[s]) == 0) continue;
    const auto subset = basis.subset(s);
    std::vector<std::size_t> idx(subset.size());
    auto expand = [&](auto&& self, std::size_t pos, const Rational& coeff) -> void {
      if (pos == subset.size()) {
        add_wedge(q.algebra, out, coeff, idx);
        return;
      }
      for (const auto& [k, x] : images[subset[pos]]) {
        idx[pos] = k;
        self(self, pos + 1, coeff * x);
      }
    };
    expand(expand, 0, chain.coeffs[s]);
  }
  return out;
}

}  // namespace liekit
