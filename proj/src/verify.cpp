#include "liekit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <sstream>

#include "liekit/catalog.hpp"
#include "liekit/current.hpp"
#include "liekit/error.hpp"
#include "liekit/homology.hpp"
#include "liekit/koszul.hpp"

namespace liekit {

namespace {

const ScalarDomain kQ = ScalarDomain::field(Field::rationals());

class Section {
 public:
  Section(std::string tag, std::string title) {
    report_.tag = std::move(tag);
    report_.title = std::move(title);
  }

  /// Runs one check; an exception counts as a failure with its message as detail.
  void check(const std::string& name, const std::function<bool(std::ostringstream&)>& body) {
    std::ostringstream detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail << "error: " << e.what();
      ok = false;
    }
    report_.checks.push_back({name, ok, detail.str()});
  }

  SectionReport take() { return std::move(report_); }

 private:
  SectionReport report_;
};

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

std::size_t nilpotency_length(const LieAlgebra& g) {
  const SeriesReport s = series(g, SeriesKind::LowerCentral);
  if (!s.nilpotent) throw Error(ErrorKind::BadParameter, "algebra is not nilpotent");
  return s.nilpotency_length;
}

/// Dimension of D^2 g.
std::size_t derived2_dim(const LieAlgebra& g) {
  const SeriesReport s = series(g, SeriesKind::Derived);
  return s.dims.size() > 2 ? s.dims[2] : 0;
}

bool boundary_squares_to_zero(const LieAlgebra& g, std::size_t k) {
  if (k < 2 || k > g.dim()) return true;
  const Field& field = g.field();
  const auto outer = boundary_columns(g, k);
  const auto inner = boundary_columns(g, k - 1);
  for (const auto& col : outer) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [idx, c] : col) {
      for (const auto& [r, v] : inner[idx]) acc[r] = field.add(acc[r], field.mul(c, v));
    }
    for (const auto& [r, v] : acc) {
      if (!Field::is_zero(v)) return false;
    }
  }
  return true;
}

bool eta_kills_boundaries(const LieAlgebra& g, const KillingModule& kill) {
  if (g.dim() < 4) return true;
  const ExteriorBasis basis(g.dim(), 4);
  for (std::size_t s = 0; s < basis.size(); ++s) {
    ChainVector chain = zero_chain(g, 4);
    add_wedge(g, chain, Rational(1), basis.subset(s));
    if (!is_zero(eta_on_chain(g, kill, apply_boundary(g, chain)))) return false;
  }
  return true;
}

std::size_t abelianization_dim(const LieAlgebra& g) {
  const SeriesReport s = series(g, SeriesKind::LowerCentral);
  return g.dim() - (s.dims.size() > 1 ? s.dims[1] : s.dims.back());
}

SectionReport sec6() {
  Section sec("sec6", "12-dimensional nilpotent algebra with nonzero reduced Koszul map");
  const CatalogEntry entry = catalog_make("g12");
  const LieAlgebra& g = entry.algebra;

  const std::vector<std::vector<std::string>> cs{{"E3", "Y1", "Y8"}, {"E3", "Y4", "Y5"}, {"E3", "Y4", "Z9"},
                                                 {"Y1", "Y4", "Y7"}, {"E3", "Z3", "Z6"}, {"Y1", "Y6", "Y5"},
                                                 {"Y1", "Y4", "Z3"}, {"E3", "Z6", "Y7"}};
  const std::vector<std::vector<std::string>> bs{{"E3", "E9"}, {"Y1", "Y11"}, {"Y4", "Y8"}, {"Y5", "Y7"},
                                                 {"Z3", "Z9"}, {"Z3", "Y5"},  {"Z9", "Y7"}};
  const std::vector<std::vector<int>> printed{{1, 1, 1, 0, 1, 0, 0, 0},  {1, 0, 0, 1, 0, 1, 0, 0},
                                              {-1, 1, 1, 1, 0, 0, 0, 0}, {0, 1, 0, -1, 0, 1, 0, 0},
                                              {0, 0, -1, 0, 1, 0, 0, 0}, {0, -1, 0, 0, 0, 0, 1, 0},
                                              {0, 0, 1, 0, 0, 0, 0, 1}};
  const std::vector<int> kernel{2, 4, -3, 1, -3, -3, 4, 3};

  std::vector<std::vector<Rational>> matrix(bs.size(), std::vector<Rational>(cs.size()));
  sec.check("boundary matrix in the listed 2-chains", [&](std::ostringstream& out) {
    std::vector<std::pair<std::size_t, Rational>> positions;
    for (const auto& b : bs) {
      const ChainVector chain = chain_from_names(g, {{1, b}});
      const auto sparse = to_sparse(chain.coeffs);
      positions.push_back(sparse.front());
    }
    bool inside = true;
    for (std::size_t j = 0; j < cs.size(); ++j) {
      Vector d = apply_boundary(g, chain_from_names(g, {{1, cs[j]}})).coeffs;
      for (std::size_t i = 0; i < bs.size(); ++i) {
        matrix[i][j] = d[positions[i].first] * positions[i].second;
        d[positions[i].first] = 0;
      }
      inside = inside && is_zero(d);
    }
    bool equal = true;
    for (std::size_t i = 0; i < bs.size(); ++i) {
      for (std::size_t j = 0; j < cs.size(); ++j) equal = equal && matrix[i][j] == printed[i][j];
    }
    out << (inside ? "all boundaries lie in the span" : "a boundary leaves the span") << "; "
        << (equal ? "matrix matches entry for entry" : "matrix differs");
    return inside && equal;
  });
  sec.check("kernel vector (2,4,-3,1,-3,-3,4,3)", [&](std::ostringstream& out) {
    bool ok = true;
    for (const auto& row : matrix) {
      Rational s = 0;
      for (std::size_t j = 0; j < kernel.size(); ++j) s += row[j] * kernel[j];
      ok = ok && s == 0;
    }
    out << (ok ? "in the nullspace" : "not in the nullspace");
    return ok;
  });
  const ChainVector& c = *entry.chain;
  sec.check("c is a 3-cycle", [&](std::ostringstream& out) {
    const bool ok = is_zero(apply_boundary(g, c).coeffs);
    out << (ok ? "boundary of c is 0" : "boundary of c is nonzero");
    return ok;
  });
  sec.check("J(c) = -2", [&](std::ostringstream& out) {
    const Rational j = form_eta_pairing(g, *entry.form, c);
    out << "J(c) = " << to_string(j);
    return j == -2;
  });
  const KillingModule kill = killing_module(g);
  sec.check("Kill dimension 5", [&](std::ostringstream& out) {
    out << "dim Kill = " << kill.dim;
    return kill.dim == 5;
  });
  sec.check("reduced Koszul rank 1", [&](std::ostringstream& out) {
    const std::size_t r = reduced_koszul(g, kill).rank;
    out << "reduced Koszul rank: " << r;
    return r == 1;
  });
  sec.check("7-nilpotent", [&](std::ostringstream& out) {
    const std::size_t len = nilpotency_length(g);
    out << "nilpotency length " << len;
    return len == 7;
  });
  sec.check("Z/4 grading is compatible", [&](std::ostringstream& out) {
    g.without_grading().with_grading(entry.gradings.at(0).grading);
    out << "all brackets homogeneous";
    return true;
  });
  sec.check("every derivation is nilpotent", [&](std::ostringstream& out) {
    const DerivationNilpotency d = all_derivations_nilpotent(g);
    out << "dim Der = " << derivation_algebra(g).size() << ", Engel flag " << join(d.flag_dims);
    return d.all_nilpotent;
  });
  sec.check("Betti numbers", [&](std::ostringstream& out) {
    const std::vector<std::size_t> b = betti_numbers(g, 12).betti();
    const std::vector<std::size_t> head{1, 2, 4, 9, 15, 22, 26, 22};
    bool ok = b.size() == 13 && std::equal(head.begin(), head.end(), b.begin());
    for (std::size_t k = 0; ok && k <= 12; ++k) ok = b[k] == b[12 - k];
    out << "betti: " << join(b);
    return ok;
  });
  return sec.take();
}

SectionReport sec7() {
  Section sec("sec7", "9-dimensional solvable algebra with nonzero reduced Koszul map");
  const CatalogEntry entry = catalog_make("solvable9");
  const LieAlgebra& g = entry.algebra;
  sec.check("Jacobi identity", [&](std::ostringstream& out) {
    out << "structure constants accepted";
    return true;
  });
  sec.check("form invariant and nondegenerate", [&](std::ostringstream& out) {
    const bool inv = is_invariant(g, *entry.form);
    const bool nd = is_nondegenerate(g.field(), *entry.form);
    out << (inv ? "invariant" : "not invariant") << ", " << (nd ? "nondegenerate" : "degenerate");
    return inv && nd;
  });
  sec.check("center-by-metabelian", [&](std::ostringstream& out) {
    const SeriesReport s = series(g, SeriesKind::Derived);
    const auto d2 = s.bases.size() > 2 ? s.bases[2] : std::vector<Vector>{};
    const std::size_t z = center(g).size();
    bool central = true;
    for (const auto& v : d2) {
      for (std::size_t i = 0; i < g.dim(); ++i) central = central && is_zero(g.bracket(g.basis_vector(i), v));
    }
    out << "dim D^2 = " << d2.size() << ", dim center = " << z;
    return central;
  });
  const ChainVector& c = *entry.chain;
  sec.check("c is a 3-cycle", [&](std::ostringstream& out) {
    const bool ok = is_zero(apply_boundary(g, c).coeffs);
    out << (ok ? "boundary of c is 0" : "boundary of c is nonzero");
    return ok;
  });
  sec.check("J(c) = -1", [&](std::ostringstream& out) {
    const Rational j = form_eta_pairing(g, *entry.form, c);
    out << "J(c) = " << to_string(j);
    return j == -1;
  });
  sec.check("reduced Koszul map nonzero", [&](std::ostringstream& out) {
    const std::size_t r = reduced_koszul(g).rank;
    out << "reduced Koszul rank: " << r;
    return r > 0;
  });
  return sec.take();
}

SectionReport char3() {
  Section sec("char3", "2-nilpotent algebra in characteristic 3");
  const ScalarDomain f3 = ScalarDomain::field(Field::prime(3));
  const CatalogEntry entry = catalog_make("char3_octonion", f3, {.r = std::nullopt, .require_cycle = true});
  const LieAlgebra& g = entry.algebra;
  const ChainVector& c = *entry.chain;
  sec.check("form invariant over F_3", [&](std::ostringstream& out) {
    const bool ok = is_invariant(g, *entry.form) && is_nondegenerate(g.field(), *entry.form);
    out << (ok ? "invariant and nondegenerate" : "fails");
    return ok;
  });
  sec.check("c is a cycle over F_3", [&](std::ostringstream& out) {
    const bool ok = is_zero(apply_boundary(g, c).coeffs);
    out << (ok ? "boundary of c is 0" : "boundary of c is nonzero");
    return ok;
  });
  sec.check("B(eta(c)) = 1", [&](std::ostringstream& out) {
    const Rational v = form_eta_pairing(g, *entry.form, c);
    out << "B(eta(c)) = " << to_string(v);
    return v == 1;
  });
  sec.check("reduced Koszul map nonzero over F_3", [&](std::ostringstream& out) {
    const KillingModule kill = killing_module(g);
    const bool class_nonzero = !is_zero(eta_on_chain(g, kill, c));
    const std::size_t r = reduced_koszul(g, kill).rank;
    out << "eta(c) " << (class_nonzero ? "nonzero" : "zero") << " in Kill, reduced Koszul rank: " << r;
    return class_nonzero && r > 0;
  });
  sec.check("over Q the boundary is 3 E0^F0", [&](std::ostringstream& out) {
    const CatalogEntry q = catalog_make("char3_octonion");
    const ChainVector d = apply_boundary(q.algebra, *q.chain);
    const ChainVector expected = chain_from_names(q.algebra, {{3, {"E0", "F0"}}});
    const bool ok = d.coeffs == expected.coeffs;
    out << (ok ? "boundary equals 3 E0^F0" : "boundary differs");
    return ok;
  });
  return sec.take();
}

SectionReport nonredu() {
  Section sec("nonredu", "2-nilpotent algebra over Q[e]/(e^2)");
  const ScalarDomain ring = ScalarDomain::truncated_polynomial(Field::rationals(), 2);
  const CatalogEntry entry = catalog_make("nonreduced_rank3", ring);
  const LieAlgebra& g = entry.algebra;
  const ChainVector& c = *entry.chain;
  sec.check("2-nilpotent", [&](std::ostringstream& out) {
    const std::size_t len = nilpotency_length(g);
    out << "nilpotency length " << len;
    return len == 2;
  });
  sec.check("e1^e2^e3 is a cycle", [&](std::ostringstream& out) {
    const bool ok = is_zero(apply_boundary(g, c).coeffs);
    out << (ok ? "boundary is 0" : "boundary is nonzero");
    return ok;
  });
  sec.check("eta(c) not in the image of T", [&](std::ostringstream& out) {
    const KillingModule kill = killing_module(g);
    const Vector eta = eta_on_chain(g, kill, c);
    out << "dim_Q Kill = " << kill.dim << ", eta(c) " << (is_zero(eta) ? "vanishes" : "is nonzero");
    return !is_zero(eta);
  });
  return sec.take();
}

SectionReport vanishing() {
  Section sec("vanishing", "reduced Koszul map vanishes on the small nilpotent examples");
  std::vector<std::string> names{"w(3)", "w(4)",     "w(5)",       "w(3+3)",      "w(7)",        "w(3+4)",
                                 "X(8)", "Y(9)",     "kath9_4c",   "w7_twisted",  "heisenberg(3)", "heisenberg(5)",
                                 "heisenberg(7)"};
  for (int n = 3; n <= 7; ++n) names.push_back("filiform(" + std::to_string(n) + ")");
  for (const auto& name : names) {
    sec.check(name, [&](std::ostringstream& out) {
      const CatalogEntry entry = catalog_make(name);
      const std::size_t r = reduced_koszul(entry.algebra).rank;
      out << "reduced Koszul rank: " << r;
      return r == 0;
    });
  }
  std::vector<std::string> graded = names;
  for (const char* extra : {"solvable9", "sl2", "aff2", "coadjoint(sl2)", "X(5)", "Y(6)", "w7", "abelian(3)"}) {
    graded.push_back(extra);
  }
  for (const auto& name : graded) {
    sec.check(name + " nonzero weights", [&](std::ostringstream& out) {
      CatalogOptions options;
      if (name.front() == 'w' && name.find('(') != std::string::npos) options.r = 6;
      const CatalogEntry entry = catalog_make(name, kQ, options);
      bool ok = true;
      std::size_t tested = 0;
      for (const auto& ng : entry.gradings) {
        if (!ng.grading.torsion_free()) continue;
        const LieAlgebra g = entry.algebra.without_grading().with_grading(ng.grading);
        for (const auto& [w, dims] : koszul_by_weight(g)) {
          if (ng.grading.is_zero(w)) continue;
          ++tested;
          if (dims.eta_rank != 0) {
            ok = false;
            out << "weight " << ng.grading.format(w) << " of " << ng.label << " has rank " << dims.eta_rank << "; ";
          }
        }
      }
      out << entry.gradings.size() << " gradings, " << tested << " nonzero weights";
      return ok;
    });
  }
  return sec.take();
}

SectionReport structural() {
  Section sec("structural", "structural identities");
  const std::vector<std::string> names{"abelian(4)", "heisenberg(5)", "filiform(6)", "sl2",       "aff2",
                                       "oscillator4", "w(3)",         "w(4)",        "w(5)",      "X(8)",
                                       "Y(6)",        "kath9_4c",     "w7_twisted",  "solvable9", "coadjoint(sl2)"};
  for (const auto& name : names) {
    sec.check(name, [&](std::ostringstream& out) {
      const LieAlgebra g = catalog_make(name).algebra;
      bool dd = true;
      for (std::size_t k = 2; k <= std::min<std::size_t>(g.dim(), 6); ++k) dd = dd && boundary_squares_to_zero(g, k);
      const KillingModule kill = killing_module(g);
      const bool eta = eta_kills_boundaries(g, kill);
      const bool forms = invariant_forms(g).size() == kill.dim;
      const std::size_t h = abelianization_dim(g);
      const bool graded_piece = kill.dim - kill.filtration_dim(3) == h * (h + 1) / 2;
      bool quotients_ok = true;
      const SeriesReport lcs = series(g, SeriesKind::LowerCentral);
      for (std::size_t i = 1; i <= 3 && i < lcs.bases.size(); ++i) {
        if (lcs.bases[i].empty()) break;
        const LieAlgebra quotient = quotient_by_ideal(g, lcs.bases[i]).algebra;
        quotients_ok = quotients_ok && kill.dim - kill.filtration_dim(i + 2) == killing_module(quotient).dim;
      }
      out << "dd=0 " << dd << ", eta.d4=0 " << eta << ", forms=Kill " << forms << ", Kill/Kill3 " << graded_piece
          << ", quotients " << quotients_ok;
      return dd && eta && forms && graded_piece && quotients_ok;
    });
  }
  sec.check("second derived subalgebras of w7_twisted and w7", [&](std::ostringstream& out) {
    const std::size_t tw = derived2_dim(catalog_make("w7_twisted").algebra);
    const std::size_t plain = derived2_dim(catalog_make("w7").algebra);
    const std::size_t general = derived2_dim(catalog_make("w(7)").algebra);
    out << "dims " << tw << ", " << plain << ", " << general;
    return tw == 2 && plain == 1 && general == 1;
  });
  sec.check("Kill^(5) = 0 on 20 metabelian algebras", [&](std::ostringstream& out) {
    bool ok = true;
    for (int seed = 1; seed <= 20; ++seed) {
      const std::string name = "metabelian_random(" + std::to_string(seed) + "," + std::to_string(2 + seed % 2) + "," +
                               std::to_string(3 + seed % 3) + ")";
      const LieAlgebra g = catalog_make(name).algebra;
      const bool metabelian = series(g, SeriesKind::Derived).metabelian;
      const std::size_t k5 = killing_module(g).filtration_dim(5);
      if (!metabelian || k5 != 0) {
        ok = false;
        out << name << ": Kill^(5) = " << k5 << "; ";
      }
    }
    out << "checked 20 instances";
    return ok;
  });
  for (const char* field : {"Q", "F 5"}) {
    sec.check(std::string("reduced Koszul map vanishes on 20 2-nilpotent algebras over ") + field,
              [&](std::ostringstream& out) {
                const ScalarDomain domain = make_domain(field);
                bool ok = true;
                for (int seed = 1; seed <= 20; ++seed) {
                  const std::string name = "two_nilpotent_random(" + std::to_string(seed) + "," +
                                           std::to_string(4 + seed % 3) + "," + std::to_string(2 + seed % 3) + ")";
                  const std::size_t r = reduced_koszul(catalog_make(name, domain).algebra).rank;
                  if (r != 0) {
                    ok = false;
                    out << name << ": rank " << r << "; ";
                  }
                }
                out << "checked 20 instances";
                return ok;
              });
  }
  sec.check("direct products: Kill^(3) and reduced Koszul rank add up", [&](std::ostringstream& out) {
    const std::vector<std::pair<std::string, std::string>> pairs{
        {"heisenberg(3)", "aff2"},
        {"sl2", "heisenberg(3)"},
        {"w(3)", "aff2"},
        {"filiform(4)", "sl2"},
        {"solvable9", "abelian(1)"},
        {"two_nilpotent_random(3,3,2)", "two_nilpotent_random(4,3,1)"},
        {"oscillator4", "heisenberg(3)"},
        {"metabelian_random(5,2,3)", "aff2"},
        {"w(4)", "abelian(2)"},
        {"X(5)", "filiform(5)"}};
    bool ok = true;
    for (const auto& [a, b] : pairs) {
      const LieAlgebra g1 = catalog_make(a).algebra;
      const LieAlgebra g2 = catalog_make(b).algebra;
      const LieAlgebra p = direct_product(g1.without_grading(), g2.without_grading());
      const KillingModule k1 = killing_module(g1);
      const KillingModule k2 = killing_module(g2);
      const KillingModule kp = killing_module(p);
      const bool kill3 = kp.filtration_dim(3) == k1.filtration_dim(3) + k2.filtration_dim(3);
      const bool eta = reduced_koszul(p, kp).rank == reduced_koszul(g1, k1).rank + reduced_koszul(g2, k2).rank;
      if (!kill3 || !eta) {
        ok = false;
        out << a << " x " << b << " fails; ";
      }
    }
    out << "checked " << pairs.size() << " pairs";
    return ok;
  });
  return sec.take();
}

SectionReport app_a() {
  Section sec("appA", "H_2 of current algebras of sl2 with its coadjoint module");
  const CatalogEntry entry = catalog_make("coadjoint(sl2)");
  const LieAlgebra& l = entry.algebra;
  sec.check("H_2(l) = 0", [&](std::ostringstream& out) {
    const std::vector<std::size_t> b = betti_numbers(l, 2).betti();
    out << "betti: " << join(b);
    return b.at(2) == 0;
  });
  for (std::size_t n : {2, 3}) {
    sec.check("t e1^E-1 - e1^t E-1 nonzero in H_2 over Q[t]/(t^" + std::to_string(n) + ")",
              [&](std::ostringstream& out) {
                const ScalarDomain a = ScalarDomain::truncated_polynomial(Field::rationals(), n);
                const LieAlgebra g = current_algebra(a, l);
                const std::size_t e1 = l.index_of("e1");
                const std::size_t em = l.index_of("Em1");
                ChainVector c = zero_chain(g, 2);
                add_wedge(g, c, Rational(1), {e1 * n + 1, em * n});
                add_wedge(g, c, Rational(-1), {e1 * n, em * n + 1});
                const Weight w = l.grading()->add(l.grading()->weight(e1), l.grading()->weight(em));
                const bool nonzero = homology_class_nonzero(g, c, w);
                out << "dim " << g.dim() << ", class " << (nonzero ? "nonzero" : "zero");
                return nonzero;
              });
  }
  return sec.take();
}

SectionReport app_b() {
  Section sec("appB", "2-homology of current algebras");
  const ScalarDomain t2 = ScalarDomain::truncated_polynomial(Field::rationals(), 2);
  const ScalarDomain t3 = ScalarDomain::truncated_polynomial(Field::rationals(), 3);
  const std::vector<std::pair<const ScalarDomain*, std::string>> pairs{
      {&t2, "sl2"}, {&t2, "heisenberg(3)"}, {&t2, "coadjoint(sl2)"}, {&t3, "aff2"}};
  for (const auto& [a, name] : pairs) {
    const std::string label = name + " over " + a->to_string();
    sec.check("decomposition map for " + label, [&](std::ostringstream& out) {
      const CandecoReport r = candeco_check(*a, catalog_make(name).algebra);
      out << "rank " << r.image_rank << " of " << r.lambda2_current << ", Z_2 " << r.z2_current;
      return r.ok();
    });
    sec.check("boundary decomposition for " + label, [&](std::ostringstream& out) {
      const BoundaryDecomposition d = nw_boundary_decomposition(*a, catalog_make(name).algebra);
      const bool coupled = std::all_of(d.coupled.begin(), d.coupled.end(), [](const auto& row) { return row.agrees; });
      out << "sum " << d.sum << ", B_2 " << d.b2;
      return d.sum_equals_b2 && coupled;
    });
  }
  sec.check("coadjoint example per weight over Q[t]/(t^3)", [&](std::ostringstream& out) {
    const CatalogEntry entry = catalog_make("coadjoint(sl2)");
    const Grading& level = entry.gradings.at(1).grading;
    const CurrentH2Report r = h2_graded_report(t3, entry.algebra.without_grading().with_grading(level));
    std::map<long long, std::size_t> h2;
    for (const auto& row : r.rows) h2[row.weight.at(0)] = row.h2;
    out << "H_2 by degree:";
    for (const auto& [w, v] : h2) out << " " << w << ":" << v;
    out << ", HC_1 " << r.algebra.hc1 << ", HH_1 " << r.algebra.hh1;
    return r.ok() && h2[0] == r.algebra.hc1 && h2[1] == r.algebra.hh1 && h2[2] == 0;
  });
  sec.check("H_2(A (x) aff2) has the dimension of Lambda^2 A", [&](std::ostringstream& out) {
    const CurrentH2Report r = h2_graded_report(t3, catalog_make("aff2").algebra);
    bool applied = false;
    for (const auto& row : r.rows) {
      for (const auto& c : row.checks) applied = applied || (c.name == "kill3-zero-formula" && c.applicable);
    }
    out << "H_2 " << r.total_h2() << ", Lambda^2 A " << r.algebra.lambda2;
    return r.ok() && applied && r.total_h2() == r.algebra.lambda2;
  });
  return sec.take();
}

using SectionFn = SectionReport (*)();

const std::vector<std::pair<std::string, SectionFn>>& sections() {
  static const std::vector<std::pair<std::string, SectionFn>> table{
      {"sec6", sec6},          {"sec7", sec7},             {"char3", char3}, {"nonredu", nonredu},
      {"vanishing", vanishing}, {"structural", structural}, {"appA", app_a},  {"appB", app_b}};
  return table;
}

}  // namespace

bool SectionReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<std::string> verify_tags() {
  std::vector<std::string> out;
  for (const auto& [tag, fn] : sections()) out.push_back(tag);
  return out;
}

SectionReport run_section(std::string_view tag) {
  for (const auto& [name, fn] : sections()) {
    if (name != tag) continue;
    const auto start = std::chrono::steady_clock::now();
    SectionReport report = fn();
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  }
  throw Error(ErrorKind::UnknownName, "no verification section '" + std::string(tag) + "'");
}

std::vector<SectionReport> verify_paper(const std::vector<std::string>& tags, bool parallel) {
  const std::vector<std::string> selected = tags.empty() ? verify_tags() : tags;
  for (const auto& tag : selected) {
    const auto all = verify_tags();
    if (std::find(all.begin(), all.end(), tag) == all.end()) {
      throw Error(ErrorKind::UnknownName, "no verification section '" + tag + "'");
    }
  }
  std::vector<SectionReport> out;
  if (!parallel) {
    for (const auto& tag : selected) out.push_back(run_section(tag));
    return out;
  }
  std::vector<std::future<SectionReport>> futures;
  for (const auto& tag : selected) futures.push_back(std::async(std::launch::async, [tag] { return run_section(tag); }));
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

}  // namespace liekit
