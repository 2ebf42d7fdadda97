#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "liekit/catalog.hpp"
#include "liekit/current.hpp"
#include "liekit/error.hpp"
#include "liekit/homology.hpp"
#include "liekit/koszul.hpp"
#include "liekit/lie_file.hpp"
#include "liekit/verify.hpp"

using namespace liekit;
using Json = nlohmann::ordered_json;

namespace {

struct Options {
  bool json = false;
  bool witness = false;
};

struct Loaded {
  LieAlgebra algebra;
  std::optional<BilinearForm> form;
};

/// A path, or "catalog:<name>" for a catalog entry over Q.
Loaded load(const std::string& source) {
  if (source.rfind("catalog:", 0) == 0) {
    CatalogEntry entry = catalog_make(source.substr(8));
    return {entry.algebra, entry.form};
  }
  std::ifstream in(source);
  if (!in) throw Error(ErrorKind::UnknownName, "cannot open " + source);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const LieFile file = parse_lie(buffer.str());
  return {file.algebra(), file.bilinear_form()};
}

std::optional<Weight> weight_arg(const LieAlgebra& g, const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (!g.grading()) throw Error(ErrorKind::NotGraded, "--weight given but the algebra has no grading");
  Weight w = g.grading()->parse(text);
  if (w.size() != g.grading()->arity()) throw Error(ErrorKind::SemanticError, "weight arity does not match the grading");
  return w;
}

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(to_string(c));
  return out;
}

std::string vector_text(const Vector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + to_string(v[i]);
  return out + "]";
}

void print(const Options& opt, const Json& doc, const std::string& text) {
  if (opt.json) std::cout << doc.dump(2) << "\n";
  else std::cout << text;
}

int cmd_check(const Options& opt, const std::string& file) {
  const Loaded in = load(file);
  const LieAlgebra& g = in.algebra;
  const SeriesReport lcs = series(g, SeriesKind::LowerCentral);
  const SeriesReport der = series(g, SeriesKind::Derived);
  Json doc;
  std::ostringstream out;
  doc["dim"] = g.dim();
  doc["domain"] = g.domain().to_string();
  doc["jacobi"] = true;
  doc["graded"] = g.graded();
  doc["nilpotent"] = lcs.nilpotent;
  doc["solvable"] = der.solvable;
  out << "dim: " << g.dim() << "\ndomain: " << g.domain().to_string() << "\njacobi: ok\n";
  out << "graded: " << (g.graded() ? "yes" : "no") << "\n";
  if (lcs.nilpotent) {
    doc["nilpotency_length"] = lcs.nilpotency_length;
    out << "nilpotent: yes (length " << lcs.nilpotency_length << ")\n";
  } else {
    out << "nilpotent: no\n";
  }
  if (der.solvable) {
    doc["solvability_length"] = der.solvability_length;
    out << "solvable: yes (length " << der.solvability_length << ")\n";
  } else {
    out << "solvable: no\n";
  }
  if (in.form) {
    const bool inv = is_invariant(g, *in.form);
    const bool nd = is_nondegenerate(g.field(), *in.form);
    doc["form"] = {{"invariant", inv}, {"nondegenerate", nd}};
    out << "form: " << (inv ? "invariant" : "not invariant") << ", " << (nd ? "nondegenerate" : "degenerate") << "\n";
  }
  print(opt, doc, out.str());
  return 0;
}

int cmd_betti(const Options& opt, const std::string& file, const std::string& weight) {
  const LieAlgebra g = load(file).algebra;
  const auto w = weight_arg(g, weight);
  const HomologyReport r = betti_numbers(g, g.dim(), w);
  const std::vector<std::size_t> b = r.betti();
  Json doc;
  doc["betti"] = b;
  if (w) doc["weight"] = g.grading()->format(*w);
  std::ostringstream out;
  for (std::size_t i = 0; i < b.size(); ++i) out << (i ? " " : "") << b[i];
  out << "\n";
  print(opt, doc, out.str());
  return 0;
}

int cmd_kill(const Options& opt, const std::string& file, std::size_t filtration) {
  const LieAlgebra g = load(file).algebra;
  const KillingModule kill = killing_module(g, filtration);
  Json doc;
  doc["kill_dim"] = kill.dim;
  std::ostringstream out;
  out << "Kill dimension: " << kill.dim << "\n";
  Json filt = Json::array();
  const std::size_t top = filtration ? filtration : kill.filtration.size() + 1;
  for (std::size_t i = 2; i <= top; ++i) {
    filt.push_back(kill.filtration_dim(i));
    out << "Kill^(" << i << "): " << kill.filtration_dim(i) << "\n";
  }
  doc["filtration"] = filt;
  print(opt, doc, out.str());
  return 0;
}

int cmd_koszul(const Options& opt, const std::string& file, const std::string& weight) {
  const LieAlgebra g = load(file).algebra;
  const auto w = weight_arg(g, weight);
  const KillingModule kill = killing_module(g);
  const KoszulImage image = reduced_koszul(g, kill, w);
  Json doc;
  doc["kill_dim"] = kill.dim;
  doc["reduced_koszul_rank"] = image.rank;
  if (w) doc["weight"] = g.grading()->format(*w);
  std::ostringstream out;
  out << "Kill dimension: " << kill.dim << "\n";
  out << "reduced Koszul rank: " << image.rank << "\n";
  if (opt.witness) {
    Json basis = Json::array();
    for (const auto& v : image.basis) {
      const Vector dense = to_dense(v, kill.dim);
      basis.push_back(vector_json(dense));
      out << "  image vector " << vector_text(dense) << "\n";
    }
    doc["image_basis"] = basis;
  }
  print(opt, doc, out.str());
  return 0;
}

int cmd_forms(const Options& opt, const std::string& file) {
  const LieAlgebra g = load(file).algebra;
  const auto forms = invariant_forms(g);
  Json doc;
  doc["invariant_forms"] = forms.size();
  std::ostringstream out;
  out << "invariant symmetric forms: " << forms.size() << "\n";
  if (opt.witness) {
    Json list = Json::array();
    for (std::size_t f = 0; f < forms.size(); ++f) {
      Json rows = Json::array();
      out << "form " << f + 1 << ":\n";
      for (std::size_t i = 0; i < forms[f].dim(); ++i) {
        rows.push_back(vector_json(forms[f].matrix().row(i)));
        out << "  " << vector_text(forms[f].matrix().row(i)) << "\n";
      }
      list.push_back(rows);
    }
    doc["forms"] = list;
  }
  print(opt, doc, out.str());
  return 0;
}

int cmd_quadrable(const Options& opt, const std::string& file) {
  const LieAlgebra g = load(file).algebra;
  const QuadrableResult r = quadrable_probe(g);
  const char* verdict = r.verdict == QuadrableVerdict::Nondegenerate        ? "quadrable"
                        : r.verdict == QuadrableVerdict::DegenerateCertified ? "not quadrable"
                                                                              : "unknown";
  Json doc;
  doc["verdict"] = verdict;
  doc["form_space_dim"] = r.form_space_dim;
  doc["attempts"] = r.attempts;
  std::ostringstream out;
  out << "verdict: " << verdict << "\ninvariant forms: " << r.form_space_dim << "\n";
  if (opt.witness && r.witness) {
    Json rows = Json::array();
    out << "witness:\n";
    for (std::size_t i = 0; i < r.witness->dim(); ++i) {
      rows.push_back(vector_json(r.witness->matrix().row(i)));
      out << "  " << vector_text(r.witness->matrix().row(i)) << "\n";
    }
    doc["witness"] = rows;
  }
  print(opt, doc, out.str());
  return 0;
}

int cmd_current_h2(const Options& opt, const std::string& ring, const std::string& file) {
  const ScalarDomain a = make_domain(ring);
  const LieAlgebra l = load(file).algebra;
  const CurrentH2Report r = h2_graded_report(a, l);
  const Grading grading = l.grading() ? *l.grading() : Grading::trivial(l.dim());
  Json doc;
  doc["ring"] = a.to_string();
  doc["current_dim"] = r.current_dim;
  doc["algebra"] = {{"dim", r.algebra.dim},       {"lambda2", r.algebra.lambda2}, {"hh1", r.algebra.hh1},
                    {"hc1", r.algebra.hc1},       {"i_a", r.algebra.i_a},         {"a0", r.algebra.a0},
                    {"image_t0", r.algebra.image_t0}};
  std::ostringstream out;
  out << "ring: " << a.to_string() << " (HH_1 " << r.algebra.hh1 << ", HC_1 " << r.algebra.hc1 << ", I_A "
      << r.algebra.i_a << ")\n";
  out << "current algebra dimension: " << r.current_dim << "\n";
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json jr;
    jr["weight"] = grading.format(row.weight);
    jr["h2"] = row.h2;
    jr["h2_l"] = row.h2_l;
    jr["sym2_h1"] = row.sym2_h1;
    jr["wedge2_h1"] = row.wedge2_h1;
    jr["kill"] = row.kill;
    jr["kill3"] = row.kill3;
    jr["eta_rank"] = row.eta_rank;
    out << "weight " << grading.format(row.weight) << ": H_2 " << row.h2 << " (H_2(l) " << row.h2_l << ", Kill "
        << row.kill << ", eta rank " << row.eta_rank << ")";
    Json checks = Json::array();
    for (const auto& c : row.checks) {
      if (!c.applicable) continue;
      checks.push_back({{"name", c.name}, {"holds", c.holds}, {"lhs", c.lhs}, {"rhs", c.rhs}});
      out << " " << c.name << (c.holds ? " ok" : " FAIL");
    }
    out << "\n";
    jr["checks"] = checks;
    rows.push_back(jr);
  }
  doc["rows"] = rows;
  doc["total_h2"] = r.total_h2();
  doc["identities_hold"] = r.ok();
  out << "total H_2: " << r.total_h2() << "\nidentities: " << (r.ok() ? "all hold" : "FAILED") << "\n";
  print(opt, doc, out.str());
  return r.ok() ? 0 : 1;
}

int cmd_catalog_list(const Options& opt) {
  Json doc = Json::array();
  std::ostringstream out;
  for (const auto& name : catalog_names()) {
    const CatalogEntry e = catalog_make(name);
    Json entry{{"name", e.name}, {"dim", e.algebra.dim()}, {"form", e.form.has_value()}};
    Json gradings = Json::array();
    for (const auto& g : e.gradings) gradings.push_back(g.label);
    entry["gradings"] = gradings;
    doc.push_back(entry);
    out << e.name << "  dim " << e.algebra.dim() << (e.form ? "  form" : "");
    if (!e.gradings.empty()) {
      out << "  gradings:";
      for (const auto& g : e.gradings) out << " [" << g.label << "]";
    }
    out << "\n";
  }
  out << "also: nonreduced_rank3 (needs --ring), parameters vary for abelian, heisenberg, filiform, w, X, Y\n";
  print(opt, doc, out.str());
  return 0;
}

int cmd_catalog_emit(const std::string& name, const std::string& ring, std::optional<long long> r,
                     std::size_t grading_index) {
  CatalogOptions options;
  options.r = r;
  const CatalogEntry e = catalog_make(name, make_domain(ring), options);
  LieAlgebra g = e.algebra;
  if (grading_index > 0) {
    if (grading_index > e.gradings.size()) throw Error(ErrorKind::BadParameter, "no grading with that index");
    g = g.without_grading().with_grading(e.gradings[grading_index - 1].grading);
  }
  std::cout << "# " << e.name << "\n" << emit_lie(lie_file_from(g, e.form));
  return 0;
}

int cmd_verify(const Options& opt, const std::vector<std::string>& only) {
  const auto reports = verify_paper(only);
  bool ok = true;
  Json doc = Json::array();
  std::ostringstream out;
  for (const auto& r : reports) {
    ok = ok && r.passed();
    Json sec{{"tag", r.tag}, {"title", r.title}, {"passed", r.passed()}};
    Json checks = Json::array();
    out << "[" << r.tag << "] " << r.title << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& c : r.checks) {
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      out << "  " << (c.passed ? "ok   " : "FAIL ") << c.name;
      if (!c.detail.empty()) out << ": " << c.detail;
      out << "\n";
    }
    sec["checks"] = checks;
    doc.push_back(sec);
  }
  out << (ok ? "all sections passed" : "some checks FAILED") << "\n";
  print(opt, doc, out.str());
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Lie algebra homology, Killing modules and Koszul maps"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "Print a JSON document");
  app.add_flag("--witness", opt.witness, "Print exact vectors");

  std::string file;
  std::string weight;
  std::string ring;
  std::size_t filtration = 0;

  auto* check = app.add_subcommand("check", "Validate a .lie file and summarize the algebra");
  check->add_option("file", file, "Path or catalog:<name>")->required();
  auto* betti = app.add_subcommand("betti", "Betti numbers");
  betti->add_option("file", file)->required();
  betti->add_option("--weight", weight, "Restrict to one weight");
  auto* kill = app.add_subcommand("kill", "Killing module and its filtration");
  kill->add_option("file", file)->required();
  kill->add_option("--filtration", filtration, "Number of filtration steps (0: until stable)");
  auto* koszul = app.add_subcommand("koszul", "Rank of the reduced Koszul map");
  koszul->add_option("file", file)->required();
  koszul->add_option("--weight", weight, "Restrict to one weight");
  auto* forms = app.add_subcommand("forms", "Invariant symmetric bilinear forms");
  forms->add_option("file", file)->required();
  auto* quad = app.add_subcommand("quadrable", "Search for a nondegenerate invariant form");
  quad->add_option("file", file)->required();
  auto* h2 = app.add_subcommand("current-h2", "H_2 of a current algebra A (x) l");
  h2->add_option("--ring", ring, "Ring, e.g. 'truncated Q 3'")->required();
  h2->add_option("file", file)->required();

  auto* catalog = app.add_subcommand("catalog", "Example algebras");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List the catalog");
  auto* emit = catalog->add_subcommand("emit", "Print a catalog entry as a .lie file");
  std::string name;
  std::string emit_ring = "Q";
  std::optional<long long> r;
  std::size_t grading_index = 0;
  emit->add_option("name", name)->required();
  emit->add_option("--ring", emit_ring, "Coefficient domain");
  emit->add_option("--r", r, "Parameter of the positive grading of w(...)");
  emit->add_option("--grading", grading_index, "1-based index of the attached grading to emit");

  auto* verify = app.add_subcommand("verify-paper", "Recompute every published claim");
  std::vector<std::string> only;
  verify->add_option("--only", only, "Section tags")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return cmd_check(opt, file);
    if (*betti) return cmd_betti(opt, file, weight);
    if (*kill) return cmd_kill(opt, file, filtration);
    if (*koszul) return cmd_koszul(opt, file, weight);
    if (*forms) return cmd_forms(opt, file);
    if (*quad) return cmd_quadrable(opt, file);
    if (*h2) return cmd_current_h2(opt, ring, file);
    if (*list) return cmd_catalog_list(opt);
    if (*emit) return cmd_catalog_emit(name, emit_ring, r, grading_index);
    if (*verify) return cmd_verify(opt, only);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
