// One line per acceptance criterion; exit status is the number of failures.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "liekit/catalog.hpp"
#include "liekit/current.hpp"
#include "liekit/error.hpp"
#include "liekit/homology.hpp"
#include "liekit/koszul.hpp"
#include "liekit/lie_file.hpp"

using namespace liekit;

namespace {

const ScalarDomain kQ = ScalarDomain::field(Field::rationals());

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      note << "[failed: " << what << "] ";
    }
  }
};

int failures = 0;

void criterion(int number, const std::string& title, double budget_seconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs <= budget_seconds, "over the time budget");
  if (!o.pass) ++failures;
  std::printf("criterion %2d: %s  %s (%.2f s) %s\n", number, o.pass ? "PASS" : "FAIL", title.c_str(), secs,
              o.note.str().c_str());
  std::fflush(stdout);
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

// g12 typed from its printed bracket list.
LieAlgebra printed_g12() {
  const std::vector<std::string> names{"E3", "E9", "Y1", "Y4", "Y5", "Y6", "Y7", "Y8", "Y11", "Z3", "Z6", "Z9"};
  auto at = [&](const std::string& s) {
    return static_cast<std::size_t>(std::find(names.begin(), names.end(), s) - names.begin());
  };
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Term>> table;
  auto add = [&](const std::string& a, const std::string& b, long c, const std::string& k) {
    std::size_t i = at(a), j = at(b);
    if (i > j) {
      std::swap(i, j);
      c = -c;
    }
    table[{i, j}].push_back({at(k), RingElement{Rational(c)}});
  };
  // [Y1,Yi] = (-1)^i Y(i+1), 4 <= i <= 7; [Y4,Y7] = -[Y5,Y6] = Y11
  add("Y1", "Y4", 1, "Y5");
  add("Y1", "Y5", -1, "Y6");
  add("Y1", "Y6", 1, "Y7");
  add("Y1", "Y7", -1, "Y8");
  add("Y4", "Y7", 1, "Y11");
  add("Y5", "Y6", -1, "Y11");
  add("E3", "Y1", 1, "Y4");
  add("E3", "Y4", 1, "Y7");
  add("E3", "Y4", 1, "Z3");
  add("E3", "Y5", -1, "Y8");
  add("E3", "Y8", -1, "Y11");
  add("E3", "Z3", 1, "Z6");
  add("E3", "Z6", -1, "Z9");
  add("E3", "Z9", -1, "Y8");
  add("Y1", "Y8", 1, "E9");
  add("Y4", "Y5", 1, "E9");
  add("Z3", "Z6", 1, "E9");
  add("Y4", "Z9", 1, "E9");
  std::vector<BracketEntry> entries;
  for (auto& [ij, terms] : table) entries.push_back({ij.first, ij.second, terms});
  return LieAlgebra::make(kQ, names.size(), entries, names);
}

struct Proc {
  int code = -1;
  std::string out;
};

Proc run_cli(const std::string& args) {
  Proc p;
  const char* bin = std::getenv("LIEKIT_BIN");
  if (!bin) return p;
  const std::string cmd = std::string("'") + bin + "' " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return p;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) p.out.append(buf.data(), n);
  const int status = pclose(pipe);
  p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return p;
}

std::size_t abelianization(const LieAlgebra& g) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) rows.push_back(g.bracket(g.basis_vector(i), g.basis_vector(j)));
  return g.dim() - span_dim(g.field(), g.dim(), rows);
}

}  // namespace

int main() {
  const CatalogEntry g12 = catalog_make("g12");
  const LieAlgebra& g = g12.algebra;
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

  criterion(1, "boundary matrix of the eight 3-chains", 1.0, [&](Outcome& o) {
    o.require(printed_g12() == g.without_grading(), "catalog g12 equals the printed brackets");
    std::vector<Vector> cols;
    for (const auto& b : bs) cols.push_back(chain_from_names(g, {{1, b}}).coeffs);
    std::vector<std::vector<Rational>> m(bs.size(), std::vector<Rational>(cs.size()));
    for (std::size_t j = 0; j < cs.size(); ++j) {
      const Vector d = apply_boundary(g, chain_from_names(g, {{1, cs[j]}})).coeffs;
      const auto coords = solve_in_span(g.field(), cols, d);
      o.require(coords.has_value(), "boundary of c" + std::to_string(j + 1) + " lies in V");
      if (!coords) return;
      for (std::size_t i = 0; i < bs.size(); ++i) m[i][j] = (*coords)[i];
    }
    for (std::size_t i = 0; i < bs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j)
        o.require(m[i][j] == printed[i][j], "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    for (const auto& row : m) {
      Rational s = 0;
      for (std::size_t j = 0; j < kernel.size(); ++j) s += row[j] * kernel[j];
      o.require(s == 0, "kernel vector");
    }
    o.note << "7x8 matrix matches, (2,4,-3,1,-3,-3,4,3) in the kernel";
  });

  criterion(2, "nonzero reduced Koszul map of the 12-dimensional algebra", 30.0, [&](Outcome& o) {
    ChainVector c = zero_chain(g, 3);
    for (std::size_t j = 0; j < cs.size(); ++j) {
      const ChainVector cj = chain_from_names(g, {{1, cs[j]}});
      for (std::size_t k = 0; k < c.coeffs.size(); ++k) c.coeffs[k] += kernel[j] * cj.coeffs[k];
    }
    o.require(c.coeffs == g12.chain->coeffs, "catalog chain equals the printed combination");
    o.require(is_zero(apply_boundary(g, c).coeffs), "boundary of c vanishes");
    const std::vector<int> j_expected{1, 1, 1, 1, 1, 1, 0, 0};
    for (std::size_t j = 0; j < cs.size(); ++j)
      o.require(form_eta_pairing(g, *g12.form, chain_from_names(g, {{1, cs[j]}})) == j_expected[j],
                "J(c" + std::to_string(j + 1) + ")");
    const Rational jc = form_eta_pairing(g, *g12.form, c);
    o.require(jc == -2, "J(c) = -2");
    const KillingModule kill = killing_module(g);
    o.require(kill.dim == 5, "dim Kill = 5");
    const std::size_t rank = reduced_koszul(g, kill).rank;
    o.require(rank == 1, "rank 1");
    const std::size_t len = series(g, SeriesKind::LowerCentral).nilpotency_length;
    o.require(len == 7, "7-nilpotent");
    bool graded = true;
    try {
      g.without_grading().with_grading(g12.gradings.at(0).grading);
    } catch (const Error&) {
      graded = false;
    }
    o.require(graded && g12.gradings.at(0).grading.torsion() == std::vector<long long>{4}, "Z/4 grading");
    o.require(all_derivations_nilpotent(g).all_nilpotent, "all derivations nilpotent");
    o.note << "J(c) = " << to_string(jc) << ", dim Kill " << kill.dim << ", rank " << rank << ", length " << len;
  });

  criterion(3, "Betti numbers of the 12-dimensional algebra", 300.0, [&](Outcome& o) {
    const std::vector<std::size_t> b = betti_numbers(g, 12).betti();
    const std::vector<std::size_t> head{1, 2, 4, 9, 15, 22, 26, 22};
    o.require(b.size() == 13 && std::equal(head.begin(), head.end(), b.begin()), "degrees 0..7");
    for (std::size_t k = 0; k < b.size(); ++k) o.require(b[k] == b[b.size() - 1 - k], "duality");
    o.note << join(b);
  });

  criterion(4, "9-dimensional solvable example", 5.0, [&](Outcome& o) {
    const CatalogEntry e = catalog_make("solvable9");
    o.require(is_invariant(e.algebra, *e.form), "form invariant");
    o.require(is_nondegenerate(e.algebra.field(), *e.form), "form nondegenerate");
    o.require(is_zero(apply_boundary(e.algebra, *e.chain).coeffs), "c is a cycle");
    const Rational jc = form_eta_pairing(e.algebra, *e.form, *e.chain);
    o.require(jc == -1, "J(c) = -1");
    const std::size_t r = reduced_koszul(e.algebra).rank;
    o.require(r > 0, "reduced Koszul map nonzero");
    o.note << "J(c) = " << to_string(jc) << ", rank " << r;
  });

  criterion(5, "characteristic 3 example", 5.0, [&](Outcome& o) {
    CatalogOptions strict;
    strict.require_cycle = true;
    const CatalogEntry e = catalog_make("char3_octonion", ScalarDomain::field(Field::prime(3)), strict);
    o.require(e.algebra.dim() == 14, "dim 14");
    o.require(is_zero(apply_boundary(e.algebra, *e.chain).coeffs), "cycle over F_3");
    const Rational v = form_eta_pairing(e.algebra, *e.form, *e.chain);
    o.require(v == 1, "B(eta(c)) = 1");
    o.require(reduced_koszul(e.algebra).rank > 0, "reduced Koszul map nonzero");
    const CatalogEntry q = catalog_make("char3_octonion");
    const ChainVector d = apply_boundary(q.algebra, *q.chain);
    o.require(d.coeffs == chain_from_names(q.algebra, {{3, {"E0", "F0"}}}).coeffs, "boundary over Q is 3 E0^F0");
    o.note << "B(eta(c)) = " << to_string(v) << " over F_3, boundary 3 E0^F0 over Q";
  });

  criterion(6, "non-reduced ring", 1.0, [&](Outcome& o) {
    const CatalogEntry e = catalog_make("nonreduced_rank3", truncated_polynomial(Field::rationals(), 2));
    o.require(is_zero(apply_boundary(e.algebra, *e.chain).coeffs), "c is a cycle");
    // eta(c) in the image of T, tested in the base-field symmetric square
    const Vector rep = eta_representative(e.algebra, *e.chain);
    RowSpace image(e.algebra.field(), rep.size());
    for (const auto& col : t_columns(e.algebra)) image.insert(col);
    o.require(!image.contains(rep), "eta(c) outside Im T");
    o.note << "eta(c) not in Im T (rank of T " << image.rank() << " of " << rep.size() << ")";
  });

  criterion(7, "vanishing suite", 120.0, [&](Outcome& o) {
    std::vector<std::string> names{"w(3)", "w(4)",         "w(5)",          "w(3+3)",       "w(7)",
                                   "w(3+4)", "X(8)",       "Y(9)",          "kath9_4c",     "w7_twisted",
                                   "heisenberg(3)", "heisenberg(5)", "heisenberg(7)"};
    for (int n = 3; n <= 7; ++n) names.push_back("filiform(" + std::to_string(n) + ")");
    for (const auto& name : names) o.require(reduced_koszul(catalog_make(name).algebra).rank == 0, name);
    std::size_t weights = 0;
    std::vector<std::string> graded = names;
    for (const char* extra : {"solvable9", "sl2", "aff2", "coadjoint(sl2)", "X(5)", "Y(6)", "w7", "char3_octonion"})
      graded.emplace_back(extra);
    for (const auto& name : graded) {
      CatalogOptions opts;
      if (name.rfind("w(", 0) == 0) opts.r = 6;
      const CatalogEntry e = catalog_make(name, kQ, opts);
      for (const auto& ng : e.gradings) {
        if (!ng.grading.torsion_free()) continue;
        const LieAlgebra h = e.algebra.without_grading().with_grading(ng.grading);
        for (const auto& [w, dims] : koszul_by_weight(h)) {
          if (ng.grading.is_zero(w)) continue;
          ++weights;
          o.require(dims.eta_rank == 0, name + " " + ng.label + " weight " + ng.grading.format(w));
        }
      }
    }
    o.note << names.size() << " algebras with zero reduced Koszul map, " << weights << " nonzero weights checked";
  });

  criterion(8, "structural identities", 120.0, [&](Outcome& o) {
    for (const char* name : {"abelian(4)", "heisenberg(5)", "filiform(6)", "sl2", "aff2", "oscillator4", "w(4)",
                             "X(8)", "kath9_4c", "solvable9", "coadjoint(sl2)"}) {
      const LieAlgebra h = catalog_make(name).algebra;
      for (std::size_t k = 3; k <= std::min<std::size_t>(h.dim(), 6); ++k) {
        const Matrix a = boundary_matrix(h, k - 1), b = boundary_matrix(h, k);
        o.require(multiply(h.field(), a, b).is_zero(), std::string(name) + " dd");
      }
      const KillingModule kill = killing_module(h);
      if (h.dim() >= 4) {
        const Matrix d4 = boundary_matrix(h, 4);
        for (std::size_t c = 0; c < d4.cols(); ++c) {
          const ChainVector bnd{3, d4.column(c)};
          o.require(is_zero(eta_on_chain(h, kill, bnd)), std::string(name) + " eta d4");
        }
      }
      o.require(invariant_forms(h).size() == kill.dim, std::string(name) + " forms");
      const std::size_t ab = abelianization(h);
      o.require(kill.dim - kill.filtration_dim(3) == ab * (ab + 1) / 2, std::string(name) + " Kill/Kill3");
      const SeriesReport lcs = series(h, SeriesKind::LowerCentral);
      for (std::size_t i = 1; i < lcs.bases.size() && i <= 3 && !lcs.bases[i].empty(); ++i) {
        const LieAlgebra q = quotient_by_ideal(h, lcs.bases[i]).algebra;
        o.require(kill.dim - kill.filtration_dim(i + 2) == killing_module(q).dim, std::string(name) + " quotient");
      }
    }
    for (int seed = 0; seed < 20; ++seed) {
      const LieAlgebra m = catalog_make("metabelian_random(" + std::to_string(seed) + ",3,3)").algebra;
      o.require(killing_module(m).filtration_dim(5) == 0, "Kill^(5) metabelian seed " + std::to_string(seed));
    }
    for (int seed = 0; seed < 20; ++seed) {
      const std::string name = "two_nilpotent_random(" + std::to_string(seed) + ",4,3)";
      o.require(reduced_koszul(catalog_make(name).algebra).rank == 0, name + " over Q");
      o.require(reduced_koszul(catalog_make(name, ScalarDomain::field(Field::prime(5))).algebra).rank == 0,
                name + " over F_5");
    }
    const std::vector<std::string> pool{"sl2", "heisenberg(3)", "w(3)", "aff2", "oscillator4", "filiform(4)"};
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 10; ++t) {
      const LieAlgebra a = catalog_make(pool[rng() % pool.size()]).algebra.without_grading();
      const LieAlgebra b = catalog_make(pool[rng() % pool.size()]).algebra.without_grading();
      const LieAlgebra p = direct_product(a, b);
      const KillingModule kp = killing_module(p), ka = killing_module(a), kb = killing_module(b);
      o.require(kp.filtration_dim(3) == ka.filtration_dim(3) + kb.filtration_dim(3), "Kill^(3) additive");
      o.require(reduced_koszul(p, kp).rank == reduced_koszul(a, ka).rank + reduced_koszul(b, kb).rank,
                "rank additive");
    }
    o.note << "11 algebras, 20 metabelian, 20+20 2-nilpotent, 10 products";
  });

  criterion(9, "second homology of sl2 with its coadjoint module", 60.0, [&](Outcome& o) {
    const CatalogEntry e = catalog_make("coadjoint(sl2)");
    const LieAlgebra l = e.algebra.without_grading();
    o.require(betti_numbers(l, 2).betti().at(2) == 0, "H_2(l) = 0");
    for (std::size_t n : {2, 3}) {
      const LieAlgebra c = current_algebra(truncated_polynomial(Field::rationals(), n), l);
      const ChainVector z = chain_from_names(c, {{1, {"t*e1", "Em1"}}, {-1, {"e1", "t*Em1"}}});
      o.require(homology_class_nonzero(c, z), "class nonzero for N = " + std::to_string(n));
    }
    o.note << "H_2(l) = 0; t e1^E-1 - e1^t E-1 nonzero for N = 2, 3";
  });

  criterion(10, "second homology of current algebras", 600.0, [&](Outcome& o) {
    const ScalarDomain t2 = truncated_polynomial(Field::rationals(), 2);
    const ScalarDomain t3 = truncated_polynomial(Field::rationals(), 3);
    const std::vector<std::pair<const ScalarDomain*, std::string>> pairs{
        {&t2, "sl2"}, {&t2, "heisenberg(3)"}, {&t2, "coadjoint(sl2)"}, {&t3, "aff2"}};
    for (const auto& [a, name] : pairs) {
      const LieAlgebra l = catalog_make(name).algebra;
      o.require(candeco_check(*a, l).ok(), name + " decomposition map");
      const BoundaryDecomposition d = nw_boundary_decomposition(*a, l);
      o.require(d.sum_equals_b2, name + " sum of the four subspaces");
      for (const auto& row : d.coupled) o.require(row.agrees, name + " coupled cocycles");
    }
    const CatalogEntry co = catalog_make("coadjoint(sl2)");
    const Grading* level = nullptr;
    for (const auto& ng : co.gradings)
      if (ng.label == "level") level = &ng.grading;
    o.require(level != nullptr, "level grading present");
    if (level) {
      const CurrentH2Report r = h2_graded_report(t3, co.algebra.without_grading().with_grading(*level));
      std::map<long long, std::size_t> h2;
      for (const auto& row : r.rows) h2[row.weight.at(0)] = row.h2;
      o.require(r.ok(), "per-weight identities");
      o.require(r.algebra.hc1 == 0 && r.algebra.hh1 == 2, "HC_1 = 0, HH_1 = 2");
      o.require(h2[0] == 0 && h2[1] == r.algebra.hh1 && h2[2] == 0, "H_2 by degree");
      o.note << "coadjoint H_2 by degree 0:" << h2[0] << " 1:" << h2[1] << " 2:" << h2[2] << "; ";
    }
    const CurrentH2Report aff = h2_graded_report(t3, catalog_make("aff2").algebra);
    o.require(aff.ok(), "aff2 identities");
    o.require(aff.total_h2() == aff.algebra.lambda2, "H_2(A (x) aff2) = Lambda^2 A");
    o.note << "H_2(A (x) aff2) = " << aff.total_h2();
  });

  criterion(11, "command line", 600.0, [&](Outcome& o) {
    const Proc v = run_cli("verify-paper");
    o.require(v.code == 0, "verify-paper exits 0");
    std::size_t emitted = 0;
    std::vector<std::string> args;
    for (const auto& name : catalog_names()) args.push_back("'" + name + "'");
    args.push_back("nonreduced_rank3 --ring 'truncated Q 2'");
    args.push_back("char3_octonion --ring 'F 3'");
    for (const auto& a : args) {
      const Proc e = run_cli("catalog emit " + a);
      o.require(e.code == 0, "emit " + a);
      if (e.code != 0) continue;
      try {
        const LieFile f = parse_lie(e.out);
        const std::string again = emit_lie(f);
        const LieFile back = parse_lie(again);
        const bool same = back.algebra() == f.algebra() && back.bilinear_form() == f.bilinear_form() &&
                          emit_lie(back) == again;
        o.require(same, "round-trip " + a);
        if (same) ++emitted;
      } catch (const Error& err) {
        o.require(false, "parse " + a + ": " + err.what());
      }
    }
    o.note << "verify-paper exit " << v.code << ", " << emitted << " emissions round-trip";
  });

  return failures;
}
