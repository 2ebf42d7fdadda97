#include "liekit/current.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "liekit/error.hpp"
#include "liekit/homology.hpp"
#include "liekit/koszul.hpp"

namespace liekit {

namespace {

std::vector<Vector> dense_rows(const RowSpace& space) {
  std::vector<Vector> out;
  for (const auto& r : space.rref()) out.push_back(to_dense(r, space.dim()));
  return out;
}

// u ^ v in the lex basis of Lambda^2 on basis.n() letters.
Vector wedge2(const ExteriorBasis& basis, const Field& field, const Vector& u, const Vector& v) {
  Vector out(basis.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (sgn(u[i]) == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (i == j || sgn(v[j]) == 0) continue;
      const std::size_t idx = basis.index({std::min(i, j), std::max(i, j)});
      if (i < j) out[idx] += u[i] * v[j];
      else out[idx] -= u[i] * v[j];
    }
  }
  for (auto& x : out) x = field.from(x);
  return out;
}

// sum x_i y_j e_i (*) e_j on pairs i <= j of d letters.
Vector sym2(std::size_t d, const Field& field, const Vector& x, const Vector& y) {
  Vector out(sym_dim(d));
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(y[j]) != 0) out[sym_index(d, i, j)] += x[i] * y[j];
    }
  }
  for (auto& v : out) v = field.from(v);
  return out;
}

LieAlgebra graded_or_trivial(const LieAlgebra& l) {
  return l.grading() ? l : l.with_grading(Grading::trivial(l.dim()));
}

// Coordinates of the target of the canonical decomposition:
// V1 = Lambda^2 A (x) S^2 l, V2 = A (x) Lambda^2 l, V3 = S^2 A (x) Lambda^2 l.
struct Candeco {
  const ScalarDomain& a;
  const LieAlgebra& l;
  std::size_t d, n, l2a, s2l, l2l, s2a;
  std::size_t v2_offset, v3_offset, total;
  ExteriorBasis a_pairs, l_pairs;
  std::vector<SparseVector> columns;

  Candeco(const ScalarDomain& a_, const LieAlgebra& l_)
      : a(a_),
        l(l_),
        d(a_.dim()),
        n(l_.dim()),
        l2a(binomial(d, 2)),
        s2l(sym_dim(n)),
        l2l(binomial(n, 2)),
        s2a(sym_dim(d)),
        v2_offset(l2a * s2l),
        v3_offset(v2_offset + d * l2l),
        total(v3_offset + s2a * l2l),
        a_pairs(d, 2),
        l_pairs(n, 2) {
    const Field& field = a.base();
    const ExteriorBasis current_pairs(n * d, 2);
    columns.reserve(current_pairs.size());
    for (std::size_t c = 0; c < current_pairs.size(); ++c) {
      const auto pq = current_pairs.subset(c);
      const std::size_t i = pq[0] / d, alpha = pq[0] % d;
      const std::size_t j = pq[1] / d, beta = pq[1] % d;
      std::map<std::size_t, Rational> acc;
      if (alpha != beta) {
        const std::size_t lam = a_pairs.index({std::min(alpha, beta), std::max(alpha, beta)});
        acc[lam * s2l + sym_index(n, i, j)] += alpha < beta ? 1 : -1;
      }
      if (i != j) {
        const std::size_t w = l_pairs.index({i, j});  // i < j since p < q
        const RingElement ea = a.basis_element(alpha);
        const RingElement eb = a.basis_element(beta);
        const RingElement ab = a.mul(ea, eb);
        for (std::size_t g = 0; g < d; ++g) {
          if (sgn(ab[g]) != 0) acc[v2_offset + g * l2l + w] += ab[g];
        }
        Vector s = sym2(d, field, ea, eb);
        const Vector t = sym2(d, field, ab, a.unit());
        for (std::size_t k = 0; k < s2a; ++k) {
          const Rational x = field.sub(s[k], t[k]);
          if (sgn(x) != 0) acc[v3_offset + k * l2l + w] += x;
        }
      }
      SparseVector col;
      for (const auto& [k, x] : acc) {
        Rational y = field.from(x);
        if (sgn(y) != 0) col.emplace_back(k, y);
      }
      columns.push_back(std::move(col));
    }
  }

  Vector apply(const Vector& chain) const {
    Vector out(total);
    for (std::size_t c = 0; c < chain.size(); ++c) {
      if (sgn(chain[c]) == 0) continue;
      for (const auto& [k, x] : columns[c]) out[k] += chain[c] * x;
    }
    for (auto& v : out) v = a.base().from(v);
    return out;
  }

  Vector apply(const SparseVector& chain) const {
    Vector out(total);
    for (const auto& [c, y] : chain) {
      for (const auto& [k, x] : columns[c]) out[k] += y * x;
    }
    for (auto& v : out) v = a.base().from(v);
    return out;
  }
};

std::size_t projection_rank(const Field& field, const std::vector<Vector>& vectors, std::size_t begin, std::size_t end) {
  RowSpace space(field, end - begin);
  for (const auto& v : vectors) {
    Vector part(v.begin() + static_cast<std::ptrdiff_t>(begin), v.begin() + static_cast<std::ptrdiff_t>(end));
    if (!is_zero(part)) space.insert(part);
  }
  return space.rank();
}

void check_pair(const ScalarDomain& a, const LieAlgebra& l) {
  if (!l.over_field() || !(l.field() == a.base())) {
    throw Error(ErrorKind::BaseFieldMismatch, "the Lie algebra must live over the base field of the ring");
  }
}

}  // namespace

AlgebraHomologyReport algebra_homology(const ScalarDomain& a) {
  const Field& field = a.base();
  const std::size_t d = a.dim();
  const ExteriorBasis pairs(d, 2);
  AlgebraHomologyReport r;
  r.dim = d;
  r.lambda2 = pairs.size();
  r.sym2 = sym_dim(d);

  std::vector<RingElement> e;
  for (std::size_t i = 0; i < d; ++i) e.push_back(a.basis_element(i));
  RowSpace image_t(field, r.lambda2);
  RowSpace image_t0(field, r.lambda2);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const RingElement ij = a.mul(e[i], e[j]);
      for (std::size_t k = 0; k < d; ++k) {
        const RingElement jk = a.mul(e[j], e[k]);
        const RingElement ki = a.mul(e[k], e[i]);
        Vector t = wedge2(pairs, field, ij, e[k]);
        const Vector t2 = wedge2(pairs, field, jk, e[i]);
        const Vector t3 = wedge2(pairs, field, ki, e[j]);
        for (std::size_t x = 0; x < t.size(); ++x) t[x] = field.add(t[x], field.add(t2[x], t3[x]));
        const Vector corr = wedge2(pairs, field, a.mul(ij, e[k]), a.unit());
        Vector t0 = t;
        for (std::size_t x = 0; x < t0.size(); ++x) t0[x] = field.sub(t0[x], corr[x]);
        if (!is_zero(t)) image_t.insert(t);
        if (!is_zero(t0)) image_t0.insert(t0);
      }
    }
  }
  r.image_t = image_t.rank();
  r.image_t0 = image_t0.rank();
  r.hc1_presentation = QuotientPresentation(image_t);
  r.hh1_presentation = QuotientPresentation(image_t0);
  r.hc1 = r.hc1_presentation.quotient_dim();
  r.hh1 = r.hh1_presentation.quotient_dim();
  r.t0_image = dense_rows(image_t0);

  std::vector<Vector> mult(r.sym2);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) mult[sym_index(d, i, j)] = a.mul(e[i], e[j]);
  r.i_a_basis = kernel_of_columns(field, d, mult);
  r.i_a = r.i_a_basis.size();

  if (r.hh1 == 0) {
    for (std::size_t i = 0; i < d; ++i) {
      r.a0_basis.emplace_back(d);
      r.a0_basis.back()[i] = 1;
    }
  } else {
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < d; ++i) {
      Vector unit_i(d);
      unit_i[i] = 1;
      cols.push_back(r.hh1_presentation.coordinates(wedge2(pairs, field, unit_i, a.unit())));
    }
    r.a0_basis = kernel_of_columns(field, r.hh1, cols);
  }
  r.a0 = r.a0_basis.size();
  return r;
}

CandecoReport candeco_check(const ScalarDomain& a, const LieAlgebra& l) {
  check_pair(a, l);
  const Field& field = a.base();
  const AlgebraHomologyReport alg = algebra_homology(a);
  const Candeco phi(a, l);
  const LieAlgebra g = current_algebra(a, l);

  CandecoReport r;
  r.lambda2_current = binomial(g.dim(), 2);
  r.v1 = phi.l2a * phi.s2l;
  r.v2 = phi.d * phi.l2l;
  r.v3 = alg.i_a * phi.l2l;

  RowSpace image(field, phi.total);
  r.lands_in_i_a = true;
  for (const auto& col : phi.columns) {
    if (!col.empty()) image.insert(col);
    for (std::size_t w = 0; w < phi.l2l && r.lands_in_i_a; ++w) {
      RingElement product = a.zero();
      for (const auto& [k, x] : col) {
        if (k < phi.v3_offset || (k - phi.v3_offset) % phi.l2l != w) continue;
        const std::size_t s = (k - phi.v3_offset) / phi.l2l;
        // recover the pair (i, j) of sym index s
        for (std::size_t i = 0; i < phi.d; ++i) {
          for (std::size_t j = i; j < phi.d; ++j) {
            if (sym_index(phi.d, i, j) == s) product = a.add(product, a.scale(x, a.mul(a.basis_element(i), a.basis_element(j))));
          }
        }
      }
      if (!a.is_zero(product)) r.lands_in_i_a = false;
    }
  }
  r.image_rank = image.rank();
  r.lambda2_identity = r.lambda2_current == r.v1 + r.v2 + r.v3;
  r.bijective = r.lands_in_i_a && r.image_rank == r.lambda2_current && r.lambda2_identity;

  const auto z2 = cycle_basis(g, 2);
  r.z2_current = z2.size();
  r.z2_l = cycle_basis(l, 2).size();
  r.z2_identity = r.z2_current == r.v1 + phi.d * r.z2_l + r.v3;
  const auto l_boundary = boundary_columns(l, 2);
  RowSpace z2_image(field, phi.total);
  r.z2_lands = true;
  for (const auto& z : z2) {
    const Vector v = phi.apply(z);
    z2_image.insert(v);
    for (std::size_t gidx = 0; gidx < phi.d; ++gidx) {
      Vector out(l.dim());
      for (std::size_t w = 0; w < phi.l2l; ++w) {
        const Rational& c = v[phi.v2_offset + gidx * phi.l2l + w];
        if (sgn(c) == 0) continue;
        for (const auto& [k, x] : l_boundary[w]) out[k] += c * x;
      }
      for (auto& x : out) x = field.from(x);
      if (!is_zero(out)) r.z2_lands = false;
    }
  }
  r.z2_bijective = r.z2_lands && z2_image.rank() == r.z2_current && r.z2_identity;
  return r;
}

BoundaryDecomposition nw_boundary_decomposition(const ScalarDomain& a, const LieAlgebra& l0) {
  check_pair(a, l0);
  const LieAlgebra l = graded_or_trivial(l0);
  const Field& field = a.base();
  const AlgebraHomologyReport alg = algebra_homology(a);
  const Candeco phi(a, l);
  const LieAlgebra g = current_algebra(a, l);
  const std::size_t n = l.dim();
  const std::size_t d = phi.d;
  BoundaryDecomposition out;

  std::vector<Vector> l_basis;
  for (std::size_t i = 0; i < n; ++i) l_basis.push_back(l.basis_vector(i));
  const auto derived = bracket_span(l, l_basis, l_basis);

  RowSpace w1(field, phi.total), w1p(field, phi.total), w3(field, phi.total), w12(field, phi.total);
  RowSpace sum(field, phi.total);
  auto add = [&](RowSpace& space, const Vector& v) {
    if (is_zero(v)) return;
    space.insert(v);
    sum.insert(v);
  };

  RowSpace t_image(field, phi.s2l);
  for (const auto& c : t_columns(l)) {
    if (!c.empty()) t_image.insert(c);
  }
  const auto t_rows = t_image.rref();
  for (std::size_t lam = 0; lam < phi.l2a; ++lam) {
    for (const auto& row : t_rows) {
      Vector v(phi.total);
      for (const auto& [k, x] : row) v[lam * phi.s2l + k] = x;
      add(w1, v);
    }
  }

  for (const auto& t0 : alg.t0_image) {
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& w : derived) {
        const Vector s = sym_product(l, l_basis[i], w);
        Vector v(phi.total);
        for (std::size_t lam = 0; lam < phi.l2a; ++lam) {
          if (sgn(t0[lam]) == 0) continue;
          for (std::size_t k = 0; k < phi.s2l; ++k) v[lam * phi.s2l + k] += t0[lam] * s[k];
        }
        for (auto& x : v) x = field.from(x);
        add(w1p, v);
      }
    }
  }

  for (const auto& ia : alg.i_a_basis) {
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& w : derived) {
        const Vector s = wedge2(phi.l_pairs, field, l_basis[i], w);
        Vector v(phi.total);
        for (std::size_t k = 0; k < phi.s2a; ++k) {
          if (sgn(ia[k]) == 0) continue;
          for (std::size_t p = 0; p < phi.l2l; ++p) v[phi.v3_offset + k * phi.l2l + p] += ia[k] * s[p];
        }
        for (auto& x : v) x = field.from(x);
        add(w3, v);
      }
    }
  }

  for (std::size_t alpha = 0; alpha < d; ++alpha) {
    Vector ea(d);
    ea[alpha] = 1;
    const Vector a_wedge_1 = wedge2(phi.a_pairs, field, ea, a.unit());
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const Vector xy = l.bracket(l_basis[x], l_basis[y]);
        for (std::size_t z = 0; z < n; ++z) {
          Vector v(phi.total);
          if (!is_zero(xy)) {
            const Vector s = sym_product(l, xy, l_basis[z]);
            for (std::size_t lam = 0; lam < phi.l2a; ++lam) {
              if (sgn(a_wedge_1[lam]) == 0) continue;
              for (std::size_t k = 0; k < phi.s2l; ++k) v[lam * phi.s2l + k] -= a_wedge_1[lam] * s[k];
            }
          }
          if (x != y && y != z && x != z) {
            ChainVector c = zero_chain(l, 3);
            add_wedge(l, c, Rational(1), {x, y, z});
            const ChainVector b = apply_boundary(l, c);
            for (std::size_t p = 0; p < phi.l2l; ++p) v[phi.v2_offset + alpha * phi.l2l + p] += b.coeffs[p];
          }
          for (auto& t : v) t = field.from(t);
          add(w12, v);
        }
      }
    }
  }
  out.w1 = w1.rank();
  out.w1_prime = w1p.rank();
  out.w3 = w3.rank();
  out.w12 = w12.rank();
  out.sum = sum.rank();

  RowSpace b2(field, phi.total);
  RowSpace joint = sum;
  for (const auto& row : boundary_space(g, 2).rref()) {
    const Vector v = phi.apply(row);
    b2.insert(v);
    joint.insert(v);
  }
  out.b2 = b2.rank();
  out.sum_equals_b2 = out.b2 == out.sum && joint.rank() == out.sum;

  const auto kb = koszul_by_weight(l);
  for (const auto& beta : weights_in_degree(g, 2)) {
    CoupledCocycleRow row;
    row.weight = beta;
    std::vector<Vector> images;
    for (const auto& r : boundary_space(g, 2, beta).rref()) images.push_back(phi.apply(r));
    row.b2 = images.size();
    row.projection_sum = projection_rank(field, images, 0, phi.v2_offset) +
                         projection_rank(field, images, phi.v2_offset, phi.v3_offset) +
                         projection_rank(field, images, phi.v3_offset, phi.total);
    row.splits = row.projection_sum == row.b2;
    auto it = kb.find(beta);
    if (it != kb.end()) {
      row.kill3 = it->second.kill3;
      row.eta_rank = it->second.eta_rank;
    }
    row.agrees = row.splits == (row.eta_rank == row.kill3);
    out.coupled.push_back(std::move(row));
  }
  return out;
}

bool H2WeightRow::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return !c.applicable || c.holds; });
}

bool CurrentH2Report::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const H2WeightRow& r) { return r.ok(); });
}

std::size_t CurrentH2Report::total_h2() const {
  std::size_t total = 0;
  for (const auto& r : rows) total += r.h2;
  return total;
}

CurrentH2Report h2_graded_report(const ScalarDomain& a, const LieAlgebra& l0) {
  check_pair(a, l0);
  const LieAlgebra l = graded_or_trivial(l0);
  const Grading& gr = *l.grading();
  const LieAlgebra g = current_algebra(a, l);
  CurrentH2Report report;
  report.algebra = algebra_homology(a);
  report.current_dim = g.dim();
  const AlgebraHomologyReport& alg = report.algebra;
  const long long d = static_cast<long long>(alg.dim);

  const auto kb = koszul_by_weight(l);
  std::map<Weight, std::size_t> h1;
  for (std::size_t i = 0; i < l.dim(); ++i) h1.emplace(gr.weight(i), 0);
  for (auto& [w, b] : h1) b = betti_numbers(l, 1, w).degrees.at(1).betti;

  std::set<Weight> betas;
  for (const auto& [w, dims] : kb) betas.insert(w);
  for (const auto& beta : betas) {
    H2WeightRow row;
    row.weight = beta;
    row.h2 = betti_numbers(g, 2, beta).degrees.at(2).betti;
    const auto hl = betti_numbers(l, 2, beta);
    row.h2_l = hl.degrees.size() > 2 ? hl.degrees[2].betti : 0;
    for (auto p = h1.begin(); p != h1.end(); ++p) {
      for (auto q = p; q != h1.end(); ++q) {
        if (gr.add(p->first, q->first) != beta) continue;
        if (p == q) {
          row.sym2_h1 += p->second * (p->second + 1) / 2;
          if (p->second > 0) row.wedge2_h1 += p->second * (p->second - 1) / 2;
        } else {
          row.sym2_h1 += p->second * q->second;
          row.wedge2_h1 += p->second * q->second;
        }
      }
    }
    auto it = kb.find(beta);
    if (it != kb.end()) {
      row.kill = it->second.kill;
      row.kill3 = it->second.kill3;
      row.eta_rank = it->second.eta_rank;
    }
    const long long h2 = static_cast<long long>(row.h2);
    const long long h2l = static_cast<long long>(row.h2_l);
    const long long s2 = static_cast<long long>(row.sym2_h1);
    const long long l2 = static_cast<long long>(row.wedge2_h1);
    const long long kill = static_cast<long long>(row.kill);
    const long long rk = static_cast<long long>(row.eta_rank);
    const long long hh1 = static_cast<long long>(alg.hh1);
    const long long hc1 = static_cast<long long>(alg.hc1);
    const long long ia = static_cast<long long>(alg.i_a);
    const long long kernel = h2 - d * h2l;

    auto check = [&](std::string name, bool applicable, long long lhs, long long rhs) {
      row.checks.push_back(IdentityCheck{std::move(name), applicable, !applicable || lhs == rhs, lhs, rhs});
    };
    row.checks.push_back(IdentityCheck{"projection-onto-A(x)H2", true, h2 >= d * h2l, h2, d * h2l});
    check("eta-zero-sequence", s2 == 0 && rk == 0, h2, hh1 * kill + d * h2l);
    check("kill3-zero-formula", row.kill3 == 0, h2, static_cast<long long>(alg.lambda2) * s2 + d * h2l + ia * l2);
    check("eta-zero-kernel", rk == 0, kernel, static_cast<long long>(alg.image_t0) * s2 + hh1 * kill + ia * l2);
    check("kernel-first-sequence", s2 == 0, kernel, (d - static_cast<long long>(alg.a0)) * (kill - rk) + hc1 * kill);
    check("kernel-second-sequence", s2 == 0, kernel, hc1 * rk + hh1 * (kill - rk));
    if (alg.dim >= 2) {
      const bool predicted = s2 == 0 && h2l == 0 && (hh1 == 0 || kill == 0 || (rk == kill && hc1 == 0));
      check("vanishing-criterion", true, h2 == 0 ? 1 : 0, predicted ? 1 : 0);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace liekit
