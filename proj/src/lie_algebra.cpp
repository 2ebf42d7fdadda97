#include "liekit/lie_algebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "liekit/error.hpp"

namespace liekit {

namespace {

std::string vector_string(const Vector& v, const std::vector<std::string>& names) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    if (!first) out << " + ";
    out << v[i].get_str() << "*" << (i < names.size() ? names[i] : std::to_string(i + 1));
    first = false;
  }
  return first ? "0" : out.str();
}

std::vector<Vector> dense_basis(const RowSpace& space) {
  std::vector<Vector> out;
  for (const auto& row : space.rref()) out.push_back(to_dense(row, space.dim()));
  return out;
}

std::vector<Vector> standard_basis(std::size_t n) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n; ++i) {
    Vector v(n);
    v[i] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

Grading::Grading(std::size_t free_rank, std::vector<long long> torsion, std::vector<Weight> weights)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  for (long long m : torsion_) {
    if (m < 2) throw Error(ErrorKind::BadParameter, "torsion modulus must be at least 2");
  }
  weights_.reserve(weights.size());
  for (auto& w : weights) weights_.push_back(normalize(std::move(w)));
}

Grading Grading::trivial(std::size_t n) { return Grading(0, {}, std::vector<Weight>(n)); }

Grading Grading::integer(const std::vector<long long>& degrees) {
  std::vector<Weight> w;
  for (long long d : degrees) w.push_back({d});
  return Grading(1, {}, std::move(w));
}

Weight Grading::normalize(Weight w) const {
  if (w.size() != arity()) {
    throw Error(ErrorKind::SemanticError,
                "weight has " + std::to_string(w.size()) + " components, expected " + std::to_string(arity()));
  }
  for (std::size_t t = 0; t < torsion_.size(); ++t) {
    long long& x = w[free_rank_ + t];
    x = ((x % torsion_[t]) + torsion_[t]) % torsion_[t];
  }
  return w;
}

Weight Grading::add(const Weight& a, const Weight& b) const {
  Weight s(arity());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = a[i] + b[i];
  return normalize(std::move(s));
}

bool Grading::is_zero(const Weight& w) const {
  return std::all_of(w.begin(), w.end(), [](long long x) { return x == 0; });
}

std::string Grading::format(const Weight& w) const {
  if (w.size() == 1) return std::to_string(w[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

Weight Grading::parse(std::string_view text) const {
  std::string cleaned;
  for (char c : text) cleaned += (c == '(' || c == ')' || c == ',') ? ' ' : c;
  std::istringstream in(cleaned);
  Weight w;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      long long x = std::stoll(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      w.push_back(x);
    } catch (const std::exception&) {
      throw Error(ErrorKind::SyntaxError, "bad weight component '" + token + "'");
    }
  }
  return normalize(std::move(w));
}

LieAlgebra LieAlgebra::make(const ScalarDomain& domain, std::size_t n, const std::vector<BracketEntry>& table,
                            std::vector<std::string> names, std::optional<Grading> grading) {
  LieAlgebra g;
  g.domain_ = domain;
  g.n_ = n;
  g.brackets_.assign(n * n, {});
  if (names.empty()) {
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
  }
  if (names.size() != n) {
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(names.size()) + " names for dimension " + std::to_string(n));
  }
  std::set<std::string> seen;
  for (const auto& name : names) {
    if (!seen.insert(name).second) throw Error(ErrorKind::SemanticError, "duplicate basis name '" + name + "'");
  }
  g.names_ = std::move(names);

  const std::size_t d = domain.dim();
  const Field& field = domain.base();
  std::set<std::pair<std::size_t, std::size_t>> filled;
  for (const auto& entry : table) {
    if (entry.i >= n || entry.j >= n) {
      throw Error(ErrorKind::IndexOutOfRange, "bracket [" + std::to_string(entry.i + 1) + "," +
                                                  std::to_string(entry.j + 1) + "] outside dimension " +
                                                  std::to_string(n));
    }
    if (entry.i == entry.j) {
      throw Error(ErrorKind::SemanticError, "diagonal bracket [" + std::to_string(entry.i + 1) + "," +
                                                std::to_string(entry.j + 1) + "]");
    }
    if (entry.i > entry.j) {
      throw Error(ErrorKind::SemanticError, "bracket entries must have i < j, got [" + std::to_string(entry.i + 1) +
                                                "," + std::to_string(entry.j + 1) + "]");
    }
    if (!filled.insert({entry.i, entry.j}).second) {
      throw Error(ErrorKind::SemanticError, "bracket [" + std::to_string(entry.i + 1) + "," +
                                                std::to_string(entry.j + 1) + "] given twice");
    }
    std::map<std::size_t, RingElement> acc;
    for (const auto& term : entry.terms) {
      if (term.index >= n) throw Error(ErrorKind::IndexOutOfRange, "bracket term index " + std::to_string(term.index + 1));
      if (term.coeff.size() != d) throw Error(ErrorKind::DimensionMismatch, "coefficient does not match the domain");
      RingElement c(d);
      for (std::size_t a = 0; a < d; ++a) c[a] = field.from(term.coeff[a]);
      auto [it, inserted] = acc.emplace(term.index, c);
      if (!inserted) it->second = domain.add(it->second, c);
    }
    auto& forward = g.brackets_[entry.i * n + entry.j];
    auto& backward = g.brackets_[entry.j * n + entry.i];
    for (auto& [k, c] : acc) {
      if (domain.is_zero(c)) continue;
      backward.push_back({k, domain.neg(c)});
      forward.push_back({k, std::move(c)});
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector defect = g.jacobi_defect(i, j, k);
        if (!is_zero(defect)) {
          throw Error(ErrorKind::JacobiFails, "jac(" + g.names_[i] + "," + g.names_[j] + "," + g.names_[k] +
                                                  ") = " + vector_string(defect, g.flat_names()));
        }
      }
    }
  }
  if (grading) {
    g.check_grading(*grading);
    g.grading_ = std::move(grading);
  }
  return g;
}

void LieAlgebra::check_grading(const Grading& grading) const {
  if (grading.size() != n_) {
    throw Error(ErrorKind::SemanticError,
                "grading has " + std::to_string(grading.size()) + " weights for dimension " + std::to_string(n_));
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      const Weight expected = grading.add(grading.weight(i), grading.weight(j));
      for (const auto& term : bracket(i, j)) {
        if (grading.weight(term.index) != expected) {
          throw Error(ErrorKind::GradingIncompatible,
                      "[" + names_[i] + "," + names_[j] + "] has a component on " + names_[term.index] +
                          " of weight " + grading.format(grading.weight(term.index)) + ", expected " +
                          grading.format(expected));
        }
      }
    }
  }
}

LieAlgebra LieAlgebra::with_grading(const Grading& grading) const {
  check_grading(grading);
  LieAlgebra g = *this;
  g.grading_ = grading;
  return g;
}

LieAlgebra LieAlgebra::without_grading() const {
  LieAlgebra g = *this;
  g.grading_.reset();
  return g;
}

std::vector<Weight> LieAlgebra::flat_weights() const {
  if (!grading_) throw Error(ErrorKind::NotGraded, "algebra carries no grading");
  std::vector<Weight> out;
  out.reserve(flat_dim());
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t a = 0; a < domain_.dim(); ++a) out.push_back(grading_->weight(i));
  return out;
}

Vector LieAlgebra::basis_vector(std::size_t i) const {
  if (i >= n_) throw Error(ErrorKind::IndexOutOfRange, "basis index " + std::to_string(i + 1));
  Vector v(flat_dim());
  const RingElement& one = domain_.unit();
  for (std::size_t a = 0; a < domain_.dim(); ++a) v[i * domain_.dim() + a] = one[a];
  return v;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  const std::size_t d = domain_.dim();
  if (x.size() != flat_dim() || y.size() != flat_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "bracket arguments have the wrong length");
  }
  const Field& field = domain_.base();
  Vector out(flat_dim());
  if (d == 1) {
    for (std::size_t i = 0; i < n_; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (sgn(y[j]) == 0) continue;
        const auto& terms = brackets_[i * n_ + j];
        if (terms.empty()) continue;
        const Rational xy = x[i] * y[j];
        for (const auto& t : terms) out[t.index] += xy * t.coeff[0];
      }
    }
  } else {
    for (std::size_t i = 0; i < n_; ++i) {
      RingElement xi(x.begin() + static_cast<std::ptrdiff_t>(i * d), x.begin() + static_cast<std::ptrdiff_t>((i + 1) * d));
      if (domain_.is_zero(xi)) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        const auto& terms = brackets_[i * n_ + j];
        if (terms.empty()) continue;
        RingElement yj(y.begin() + static_cast<std::ptrdiff_t>(j * d), y.begin() + static_cast<std::ptrdiff_t>((j + 1) * d));
        if (domain_.is_zero(yj)) continue;
        const RingElement xy = domain_.mul(xi, yj);
        for (const auto& t : terms) {
          const RingElement c = domain_.mul(xy, t.coeff);
          for (std::size_t a = 0; a < d; ++a) out[t.index * d + a] += c[a];
        }
      }
    }
  }
  if (!field.is_rational()) {
    for (auto& v : out) v = field.from(v);
  }
  return out;
}

Vector LieAlgebra::jacobi_defect(std::size_t i, std::size_t j, std::size_t k) const {
  const Vector x = basis_vector(i), y = basis_vector(j), z = basis_vector(k);
  Vector a = bracket(x, bracket(y, z));
  const Vector b = bracket(y, bracket(z, x));
  const Vector c = bracket(z, bracket(x, y));
  for (std::size_t t = 0; t < a.size(); ++t) a[t] = field().from(a[t] + b[t] + c[t]);
  return a;
}

std::vector<BracketEntry> LieAlgebra::table() const {
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (!bracket(i, j).empty()) out.push_back({i, j, bracket(i, j)});
    }
  }
  return out;
}

bool LieAlgebra::is_abelian() const {
  return std::all_of(brackets_.begin(), brackets_.end(), [](const auto& t) { return t.empty(); });
}

std::size_t LieAlgebra::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  throw Error(ErrorKind::UnknownName, "no basis element named '" + std::string(name) + "'");
}

std::vector<std::string> LieAlgebra::flat_names() const {
  if (domain_.is_field()) return names_;
  std::vector<std::string> out;
  const auto& labels = domain_.basis_labels();
  for (const auto& name : names_) {
    for (const auto& label : labels) out.push_back(label == "1" ? name : label + "*" + name);
  }
  return out;
}

LieAlgebra LieAlgebra::restrict_to_base() const {
  if (domain_.is_field()) return *this;
  const std::size_t d = domain_.dim();
  const std::size_t m = flat_dim();
  std::vector<BracketEntry> table;
  for (std::size_t p = 0; p < m; ++p) {
    const std::size_t i = p / d, a = p % d;
    for (std::size_t q = p + 1; q < m; ++q) {
      const std::size_t j = q / d, b = q % d;
      const auto& terms = bracket(i, j);
      if (terms.empty()) continue;
      const RingElement ab = domain_.mul(domain_.basis_element(a), domain_.basis_element(b));
      BracketEntry entry{p, q, {}};
      for (const auto& t : terms) {
        const RingElement c = domain_.mul(ab, t.coeff);
        for (std::size_t g = 0; g < d; ++g) {
          if (sgn(c[g]) != 0) entry.terms.push_back({t.index * d + g, {c[g]}});
        }
      }
      if (!entry.terms.empty()) table.push_back(std::move(entry));
    }
  }
  std::optional<Grading> grading;
  if (grading_) grading = Grading(grading_->free_rank(), grading_->torsion(), flat_weights());
  return make(ScalarDomain::field(field()), m, table, flat_names(), grading);
}

bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
  if (!(a.domain_ == b.domain_) || a.n_ != b.n_) return false;
  for (std::size_t p = 0; p < a.brackets_.size(); ++p) {
    const auto& x = a.brackets_[p];
    const auto& y = b.brackets_[p];
    if (x.size() != y.size()) return false;
    for (std::size_t t = 0; t < x.size(); ++t) {
      if (x[t].index != y[t].index || x[t].coeff != y[t].coeff) return false;
    }
  }
  return true;
}

BilinearForm::BilinearForm(Matrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) throw Error(ErrorKind::DimensionMismatch, "form matrix must be square");
  for (std::size_t i = 0; i < matrix_.rows(); ++i) {
    for (std::size_t j = i + 1; j < matrix_.cols(); ++j) {
      if (matrix_(i, j) != matrix_(j, i)) {
        throw Error(ErrorKind::SemanticError, "form matrix is not symmetric at (" + std::to_string(i + 1) + "," +
                                                  std::to_string(j + 1) + ")");
      }
    }
  }
}

Rational BilinearForm::evaluate(const Field& field, const Vector& x, const Vector& y) const {
  if (x.size() != dim() || y.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "form argument length");
  Rational s = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (sgn(y[j]) != 0 && sgn(matrix_(i, j)) != 0) s += x[i] * matrix_(i, j) * y[j];
    }
  }
  return field.from(s);
}

BilinearForm make_form(std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, Rational>>& entries) {
  Matrix m(n, n);
  for (const auto& [i, j, v] : entries) {
    if (i >= n || j >= n) throw Error(ErrorKind::IndexOutOfRange, "form entry outside dimension");
    m(i, j) = v;
    m(j, i) = v;
  }
  return BilinearForm(std::move(m));
}

bool is_invariant(const LieAlgebra& g, const BilinearForm& form) {
  if (!g.over_field()) throw Error(ErrorKind::NotAField, "forms are only supported over a field");
  const std::size_t n = g.dim();
  if (form.dim() != n) throw Error(ErrorKind::DimensionMismatch, "form dimension differs from algebra dimension");
  const Field& field = g.field();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        Rational s = 0;
        for (const auto& t : g.bracket(x, y)) s += t.coeff[0] * form(t.index, z);
        for (const auto& t : g.bracket(x, z)) s += t.coeff[0] * form(y, t.index);
        if (!Field::is_zero(field.from(s))) return false;
      }
    }
  }
  return true;
}

std::vector<Vector> form_kernel(const Field& field, const BilinearForm& form) {
  return rank_nullspace(field, form.matrix()).nullspace;
}

bool is_nondegenerate(const Field& field, const BilinearForm& form) {
  return rank(field, form.matrix()) == form.dim();
}

std::vector<Vector> bracket_span(const LieAlgebra& g, const std::vector<Vector>& u, const std::vector<Vector>& v) {
  RowSpace space(g.field(), g.flat_dim());
  for (const auto& a : u) {
    for (const auto& b : v) {
      Vector c = g.bracket(a, b);
      if (!is_zero(c)) space.insert(c);
      if (space.rank() == g.flat_dim()) return dense_basis(space);
    }
  }
  return dense_basis(space);
}

std::vector<Vector> center(const LieAlgebra& g0) {
  const LieAlgebra g = g0.restrict_to_base();
  const std::size_t n = g.dim();
  RowSpace equations(g.field(), n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Vector> rows(n, Vector(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& t : g.bracket(i, j)) rows[t.index][i] = t.coeff[0];
    }
    for (const auto& r : rows) {
      if (!is_zero(r)) equations.insert(r);
    }
  }
  std::vector<Vector> rows;
  for (const auto& r : equations.rref()) rows.push_back(to_dense(r, n));
  if (rows.empty()) return standard_basis(n);
  return rank_nullspace(g.field(), Matrix::from_rows(rows, n)).nullspace;
}

SeriesReport series(const LieAlgebra& g0, SeriesKind kind) {
  const LieAlgebra g = g0.restrict_to_base();
  const std::size_t n = g.dim();
  const std::vector<Vector> all = standard_basis(n);
  SeriesReport report;
  report.kind = kind;

  std::vector<std::vector<Vector>> lcs{all};
  while (!lcs.back().empty()) {
    auto next = bracket_span(g, all, lcs.back());
    if (next.size() == lcs.back().size()) break;
    lcs.push_back(std::move(next));
  }
  std::vector<std::vector<Vector>> derived{all};
  while (!derived.back().empty()) {
    auto next = bracket_span(g, derived.back(), derived.back());
    if (next.size() == derived.back().size()) break;
    derived.push_back(std::move(next));
  }
  report.nilpotent = lcs.back().empty();
  report.solvable = derived.back().empty();
  report.metabelian = derived.size() <= 3 && report.solvable;
  if (report.nilpotent) report.nilpotency_length = lcs.size() - 1;
  if (report.solvable) report.solvability_length = derived.size() - 1;
  report.bases = kind == SeriesKind::LowerCentral ? std::move(lcs) : std::move(derived);
  for (const auto& b : report.bases) report.dims.push_back(b.size());
  return report;
}

LieAlgebra direct_product(const LieAlgebra& g1, const LieAlgebra& g2) {
  if (!(g1.domain() == g2.domain())) throw Error(ErrorKind::DomainMismatch, "factors live over different domains");
  const std::size_t n1 = g1.dim(), n2 = g2.dim();
  std::vector<BracketEntry> table = g1.table();
  for (auto entry : g2.table()) {
    entry.i += n1;
    entry.j += n1;
    for (auto& t : entry.terms) t.index += n1;
    table.push_back(std::move(entry));
  }
  std::vector<std::string> names = g1.names();
  std::set<std::string> used(names.begin(), names.end());
  for (std::string name : g2.names()) {
    while (used.count(name) != 0) name += "_2";
    used.insert(name);
    names.push_back(name);
  }
  std::optional<Grading> grading;
  if (g1.grading() && g2.grading()) {
    if (!g1.grading()->same_group(*g2.grading())) {
      throw Error(ErrorKind::GradingGroupMismatch, "factors are graded in different groups");
    }
    std::vector<Weight> w = g1.grading()->weights();
    for (const auto& x : g2.grading()->weights()) w.push_back(x);
    grading = Grading(g1.grading()->free_rank(), g1.grading()->torsion(), std::move(w));
  }
  return LieAlgebra::make(g1.domain(), n1 + n2, table, std::move(names), grading);
}

LieQuotient quotient_by_ideal(const LieAlgebra& g0, const std::vector<Vector>& generators) {
  const LieAlgebra g = g0.restrict_to_base();
  const std::size_t n = g.dim();
  QuotientPresentation ideal(g.field(), n, generators);
  for (const auto& row : ideal.subspace_basis()) {
    const Vector v = to_dense(row, n);
    for (std::size_t i = 0; i < n; ++i) {
      const Vector w = g.bracket(g.basis_vector(i), v);
      if (!ideal.contains(w)) {
        throw Error(ErrorKind::NotAnIdeal, "[" + g.names()[i] + ", " + vector_string(v, g.names()) +
                                               "] leaves the subspace");
      }
    }
  }
  const auto& free = ideal.free_columns();
  std::vector<BracketEntry> table;
  for (std::size_t a = 0; a < free.size(); ++a) {
    for (std::size_t b = a + 1; b < free.size(); ++b) {
      const Vector coords = ideal.coordinates(g.bracket(g.basis_vector(free[a]), g.basis_vector(free[b])));
      BracketEntry entry{a, b, {}};
      for (std::size_t k = 0; k < coords.size(); ++k) {
        if (sgn(coords[k]) != 0) entry.terms.push_back({k, {coords[k]}});
      }
      if (!entry.terms.empty()) table.push_back(std::move(entry));
    }
  }
  std::vector<std::string> names;
  for (std::size_t f : free) names.push_back(g.names()[f]);
  LieAlgebra q = LieAlgebra::make(ScalarDomain::field(g.field()), free.size(), table, names);
  if (g.grading()) {
    std::vector<Weight> w;
    for (std::size_t f : free) w.push_back(g.grading()->weight(f));
    try {
      q = q.with_grading(Grading(g.grading()->free_rank(), g.grading()->torsion(), std::move(w)));
    } catch (const Error&) {
      // ideal not homogeneous: the quotient is left ungraded
    }
  }
  return LieQuotient{std::move(q), std::move(ideal)};
}

LieAlgebra current_algebra(const ScalarDomain& ring, const LieAlgebra& l) {
  if (!l.over_field()) throw Error(ErrorKind::BaseFieldMismatch, "the Lie algebra must be defined over a field");
  if (!(l.field() == ring.base())) {
    throw Error(ErrorKind::BaseFieldMismatch,
                "ring over " + ring.base().to_string() + ", Lie algebra over " + l.field().to_string());
  }
  if (ring.is_field()) return l;
  std::vector<BracketEntry> table;
  for (const auto& entry : l.table()) {
    BracketEntry e{entry.i, entry.j, {}};
    for (const auto& t : entry.terms) e.terms.push_back({t.index, ring.from_base(t.coeff[0])});
    table.push_back(std::move(e));
  }
  return LieAlgebra::make(ring, l.dim(), table, l.names(), l.grading()).restrict_to_base();
}

LieAlgebra coadjoint_double(const LieAlgebra& g) {
  if (!g.over_field()) throw Error(ErrorKind::NotAField, "coadjoint double needs a field");
  const std::size_t n = g.dim();
  const Field& field = g.field();
  std::vector<BracketEntry> table = g.table();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // [x_i, x_j^*] = -sum_k c_{ik}^j x_k^*
      std::vector<Term> terms;
      for (std::size_t k = 0; k < n; ++k) {
        for (const auto& t : g.bracket(i, k)) {
          if (t.index == j) terms.push_back({n + k, {field.neg(t.coeff[0])}});
        }
      }
      if (!terms.empty()) table.push_back({i, n + j, std::move(terms)});
    }
  }
  std::sort(table.begin(), table.end(), [](const auto& a, const auto& b) { return std::pair(a.i, a.j) < std::pair(b.i, b.j); });
  std::vector<std::string> names = g.names();
  for (const auto& name : g.names()) names.push_back(name + "*");
  std::vector<long long> degrees(2 * n, 0);
  for (std::size_t i = n; i < 2 * n; ++i) degrees[i] = 1;
  return LieAlgebra::make(ScalarDomain::field(field), 2 * n, table, names, Grading::integer(degrees));
}

bool is_derivation(const LieAlgebra& g, const Matrix& d) {
  const std::size_t n = g.dim();
  if (d.rows() != n || d.cols() != n) throw Error(ErrorKind::DimensionMismatch, "derivation must be n x n");
  const Field& field = g.field();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector xy = g.bracket(g.basis_vector(i), g.basis_vector(j));
      Vector lhs = apply(field, d, xy);
      const Vector a = g.bracket(d.column(i), g.basis_vector(j));
      const Vector b = g.bracket(g.basis_vector(i), d.column(j));
      for (std::size_t k = 0; k < n; ++k) {
        if (!Field::is_zero(field.from(lhs[k] - a[k] - b[k]))) return false;
      }
    }
  }
  return true;
}

DoubleExtension double_extension(const LieAlgebra& h, const BilinearForm& form, const Matrix& derivation) {
  if (!h.over_field()) throw Error(ErrorKind::NotAField, "double extension needs a field");
  const std::size_t n = h.dim();
  const Field& field = h.field();
  if (form.dim() != n || derivation.rows() != n || derivation.cols() != n) {
    throw Error(ErrorKind::DimensionMismatch, "form and derivation must be n x n");
  }
  if (!is_nondegenerate(field, form)) throw Error(ErrorKind::FormDegenerate, "form on h is degenerate");
  if (!is_invariant(h, form)) throw Error(ErrorKind::FormNotInvariant, "form on h is not invariant");
  if (!is_derivation(h, derivation)) throw Error(ErrorKind::NotADerivation, "D is not a derivation of h");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = 0;
      for (std::size_t a = 0; a < n; ++a) s += derivation(a, i) * form(a, j) + form(i, a) * derivation(a, j);
      if (!Field::is_zero(field.from(s))) {
        throw Error(ErrorKind::NotSkew, "<D" + h.names()[i] + "," + h.names()[j] + "> + <" + h.names()[i] + ",D" +
                                            h.names()[j] + "> != 0");
      }
    }
  }
  // basis: e = 0, f = 1, h_i = 2 + i
  std::vector<BracketEntry> table;
  for (std::size_t i = 0; i < n; ++i) {
    BracketEntry entry{0, 2 + i, {}};
    for (std::size_t a = 0; a < n; ++a) {
      if (sgn(derivation(a, i)) != 0) entry.terms.push_back({2 + a, {derivation(a, i)}});
    }
    if (!entry.terms.empty()) table.push_back(std::move(entry));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      BracketEntry entry{2 + i, 2 + j, {}};
      Rational pairing = 0;
      for (std::size_t a = 0; a < n; ++a) pairing += derivation(a, i) * form(a, j);
      pairing = field.from(pairing);
      if (sgn(pairing) != 0) entry.terms.push_back({1, {pairing}});
      for (const auto& t : h.bracket(i, j)) entry.terms.push_back({2 + t.index, t.coeff});
      if (!entry.terms.empty()) table.push_back(std::move(entry));
    }
  }
  std::vector<std::string> names{"e", "f"};
  for (const auto& name : h.names()) names.push_back(name);
  LieAlgebra g = LieAlgebra::make(h.domain(), n + 2, table, names);
  Matrix m(n + 2, n + 2);
  m(0, 1) = 1;
  m(1, 0) = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(2 + i, 2 + j) = form(i, j);
  BilinearForm extended(std::move(m));
  if (!is_invariant(g, extended)) throw Error(ErrorKind::FormNotInvariant, "extended form is not invariant");
  if (!is_nondegenerate(field, extended)) throw Error(ErrorKind::FormDegenerate, "extended form is degenerate");
  return {std::move(g), std::move(extended)};
}

std::vector<Matrix> derivation_algebra(const LieAlgebra& g) {
  if (!g.over_field()) throw Error(ErrorKind::NotAField, "derivation algebra needs a field");
  const std::size_t n = g.dim();
  const Field& field = g.field();
  // unknown D_{ab} (D e_b = sum_a D_ab e_a) sits at a * n + b
  RowSpace equations(field, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<std::map<std::size_t, Rational>> rows(n);
      for (const auto& t : g.bracket(i, j)) {
        for (std::size_t k = 0; k < n; ++k) rows[k][k * n + t.index] += t.coeff[0];
      }
      for (std::size_t a = 0; a < n; ++a) {
        for (const auto& t : g.bracket(a, j)) rows[t.index][a * n + i] -= t.coeff[0];
        for (const auto& t : g.bracket(i, a)) rows[t.index][a * n + j] -= t.coeff[0];
      }
      for (const auto& row : rows) {
        SparseVector s;
        for (const auto& [c, v] : row) {
          Rational x = field.from(v);
          if (sgn(x) != 0) s.emplace_back(c, x);
        }
        if (!s.empty()) equations.insert(s);
      }
    }
  }
  std::vector<Vector> rows;
  for (const auto& r : equations.rref()) rows.push_back(to_dense(r, n * n));
  std::vector<Vector> kernel;
  if (rows.empty()) {
    kernel = standard_basis(n * n);
  } else {
    kernel = rank_nullspace(field, Matrix::from_rows(rows, n * n)).nullspace;
  }
  std::vector<Matrix> out;
  for (const auto& v : kernel) {
    Matrix d(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) d(a, b) = v[a * n + b];
    out.push_back(std::move(d));
  }
  return out;
}

DerivationNilpotency all_derivations_nilpotent(const LieAlgebra& g) {
  const auto derivations = derivation_algebra(g);
  const std::size_t n = g.dim();
  const Field& field = g.field();
  DerivationNilpotency out;
  std::vector<Vector> current;
  out.flag_dims.push_back(0);
  while (current.size() < n) {
    QuotientPresentation q(field, n, current);
    std::vector<Vector> columns;
    for (std::size_t b = 0; b < n; ++b) {
      Vector column;
      for (const auto& d : derivations) {
        const Vector c = q.coordinates(d.column(b));
        column.insert(column.end(), c.begin(), c.end());
      }
      columns.push_back(std::move(column));
    }
    std::vector<Vector> next;
    if (columns.front().empty()) {
      next = standard_basis(n);
    } else {
      next = kernel_of_columns(field, columns.front().size(), columns);
    }
    if (next.size() == current.size()) {
      out.all_nilpotent = false;
      out.stall_stage = out.flag_dims.size() - 1;
      return out;
    }
    current = std::move(next);
    out.flag_dims.push_back(current.size());
  }
  out.all_nilpotent = true;
  return out;
}

}  // namespace liekit
