#include "liekit/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <variant>

#include "liekit/error.hpp"

namespace liekit {

namespace {

std::atomic<std::size_t> g_size_limit{5'000'000};

using Index = std::uint32_t;

struct IntRow {
  std::vector<Index> col;
  std::vector<mpz_class> val;
  bool empty() const { return col.empty(); }
};

struct ModRow {
  std::vector<Index> col;
  std::vector<std::uint64_t> val;
  bool empty() const { return col.empty(); }
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e != 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

// Fraction-free integer rows over Q.
struct IntPolicy {
  using Row = IntRow;

  explicit IntPolicy(const Field&) {}

  Row from_sparse(const SparseVector& v) const {
    Row r;
    mpz_class common = 1;
    for (const auto& [c, x] : v) common = lcm(common, mpz_class(x.get_den()));
    r.col.reserve(v.size());
    r.val.reserve(v.size());
    for (const auto& [c, x] : v) {
      r.col.push_back(static_cast<Index>(c));
      r.val.push_back(x.get_num() * (common / x.get_den()));
    }
    normalize(r);
    return r;
  }

  void normalize(Row& r) const {
    if (r.empty()) return;
    mpz_class g = 0;
    for (const auto& x : r.val) {
      g = gcd(g, x);
      if (g == 1) break;
    }
    if (r.val.front() < 0) g = -g;
    if (g != 1) {
      for (auto& x : r.val) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
  }

  // v <- a*v - b*piv where the entry of v at piv's leading column cancels.
  void eliminate(Row& v, std::size_t pos, const Row& piv) const {
    const mpz_class& x = v.val[pos];
    const mpz_class& y = piv.val.front();
    mpz_class g = gcd(x, y);
    mpz_class a = y / g;
    mpz_class b = x / g;
    Row out;
    out.col.reserve(v.col.size() + piv.col.size());
    out.val.reserve(v.col.size() + piv.col.size());
    std::size_t i = 0, j = 0;
    const bool scale_v = a != 1;
    mpz_class t;
    while (i < v.col.size() || j < piv.col.size()) {
      if (j == piv.col.size() || (i < v.col.size() && v.col[i] < piv.col[j])) {
        out.col.push_back(v.col[i]);
        if (scale_v) out.val.push_back(a * v.val[i]);
        else out.val.push_back(std::move(v.val[i]));
        ++i;
      } else if (i == v.col.size() || piv.col[j] < v.col[i]) {
        out.col.push_back(piv.col[j]);
        out.val.push_back(-b * piv.val[j]);
        ++j;
      } else {
        t = a * v.val[i] - b * piv.val[j];
        if (sgn(t) != 0) {
          out.col.push_back(v.col[i]);
          out.val.push_back(t);
        }
        ++i;
        ++j;
      }
    }
    v = std::move(out);
    normalize(v);
  }

  Rational value(const Row& r, std::size_t pos) const {
    Rational q(r.val[pos], r.val.front());
    q.canonicalize();
    return q;
  }
};

struct ModPolicy {
  using Row = ModRow;
  std::uint64_t p;

  explicit ModPolicy(const Field& f) : p(f.characteristic()) {}

  Row from_sparse(const SparseVector& v) const {
    Row r;
    mpz_class modulus(static_cast<unsigned long>(p));
    for (const auto& [c, x] : v) {
      mpz_class num = x.get_num() % modulus;
      if (num < 0) num += modulus;
      mpz_class den = x.get_den() % modulus;
      if (den == 0) throw Error(ErrorKind::DivisionByZero, "denominator vanishes mod p");
      std::uint64_t value = mulmod(num.get_ui(), invmod(den.get_ui(), p), p);
      if (value != 0) {
        r.col.push_back(static_cast<Index>(c));
        r.val.push_back(value);
      }
    }
    normalize(r);
    return r;
  }

  void normalize(Row& r) const {
    if (r.empty() || r.val.front() == 1) return;
    const std::uint64_t inv = invmod(r.val.front(), p);
    for (auto& x : r.val) x = mulmod(x, inv, p);
  }

  void eliminate(Row& v, std::size_t pos, const Row& piv) const {
    const std::uint64_t b = v.val[pos];
    Row out;
    out.col.reserve(v.col.size() + piv.col.size());
    out.val.reserve(v.col.size() + piv.col.size());
    std::size_t i = 0, j = 0;
    while (i < v.col.size() || j < piv.col.size()) {
      if (j == piv.col.size() || (i < v.col.size() && v.col[i] < piv.col[j])) {
        out.col.push_back(v.col[i]);
        out.val.push_back(v.val[i]);
        ++i;
      } else if (i == v.col.size() || piv.col[j] < v.col[i]) {
        out.col.push_back(piv.col[j]);
        out.val.push_back((p - mulmod(b, piv.val[j], p)) % p);
        ++j;
      } else {
        std::uint64_t t = (v.val[i] + p - mulmod(b, piv.val[j], p)) % p;
        if (t != 0) {
          out.col.push_back(v.col[i]);
          out.val.push_back(t);
        }
        ++i;
        ++j;
      }
    }
    v = std::move(out);
    normalize(v);
  }

  Rational value(const Row& r, std::size_t pos) const { return Rational(mpz_class(static_cast<unsigned long>(r.val[pos]))); }
};

template <class Policy>
class Echelon {
 public:
  using Row = typename Policy::Row;

  Echelon(const Field& field, std::size_t dim) : policy_(field), dim_(dim), pivot_of_(dim, -1) {}

  bool insert(const SparseVector& v) {
    Row r = policy_.from_sparse(v);
    reduce_leading(r);
    if (r.empty()) return false;
    pivot_of_[r.col.front()] = static_cast<long>(rows_.size());
    rows_.push_back(std::move(r));
    return true;
  }

  bool contains(const SparseVector& v) const {
    Row r = policy_.from_sparse(v);
    reduce_leading(r);
    return r.empty();
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }

  std::vector<SparseVector> rref() const {
    std::vector<Row> rows = rows_;
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.col.front() < b.col.front(); });
    std::vector<long> pivot(dim_, -1);
    for (std::size_t i = 0; i < rows.size(); ++i) pivot[rows[i].col.front()] = static_cast<long>(i);
    for (std::size_t k = rows.size(); k-- > 0;) {
      Row& r = rows[k];
      std::size_t pos = 1;
      while (pos < r.col.size()) {
        const long pr = pivot[r.col[pos]];
        if (pr < 0) {
          ++pos;
          continue;
        }
        const Index c = r.col[pos];
        policy_.eliminate(r, pos, rows[static_cast<std::size_t>(pr)]);
        pos = static_cast<std::size_t>(std::upper_bound(r.col.begin(), r.col.end(), c) - r.col.begin());
      }
    }
    std::vector<SparseVector> out;
    out.reserve(rows.size());
    for (const Row& r : rows) {
      SparseVector s;
      s.reserve(r.col.size());
      for (std::size_t i = 0; i < r.col.size(); ++i) s.emplace_back(r.col[i], policy_.value(r, i));
      out.push_back(std::move(s));
    }
    return out;
  }

 private:
  void reduce_leading(Row& r) const {
    while (!r.empty()) {
      const long pr = pivot_of_[r.col.front()];
      if (pr < 0) return;
      policy_.eliminate(r, 0, rows_[static_cast<std::size_t>(pr)]);
    }
  }

  Policy policy_;
  std::size_t dim_;
  std::vector<long> pivot_of_;
  std::vector<Row> rows_;
};

}  // namespace

SparseVector to_sparse(const Vector& v) {
  SparseVector s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) s.emplace_back(i, v[i]);
  }
  return s;
}

Vector to_dense(const SparseVector& v, std::size_t dim) {
  Vector d(dim);
  for (const auto& [i, x] : v) d.at(i) = x;
  return d;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

std::size_t size_limit() { return g_size_limit.load(); }
void set_size_limit(std::size_t entries) { g_size_limit.store(entries); }

void check_size(std::size_t rows, std::size_t cols, std::string_view what) {
  const std::size_t limit = size_limit();
  if (rows != 0 && cols > limit / rows) {
    throw Error(ErrorKind::TooLarge, std::string(what) + " would have " + std::to_string(rows) + "x" +
                                         std::to_string(cols) + " entries (limit " + std::to_string(limit) + ")");
  }
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  check_size(rows, cols, "matrix");
  data_.resize(rows * cols);
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::DimensionMismatch, "row length differs from column count");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw Error(ErrorKind::DimensionMismatch, "column length differs from row count");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const { return liekit::is_zero(data_); }

Matrix multiply(const Field& field, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matrix product shapes differ");
  Matrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (sgn(b(k, j)) != 0) m(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  if (!field.is_rational()) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = field.from(m(i, j));
  }
  return m;
}

Vector apply(const Field& field, const Matrix& m, const Vector& v) {
  if (m.cols() != v.size()) throw Error(ErrorKind::DimensionMismatch, "vector length differs from column count");
  Vector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (sgn(v[c]) != 0 && sgn(m(r, c)) != 0) s += m(r, c) * v[c];
    }
    out[r] = field.from(s);
  }
  return out;
}

struct RowSpace::Impl {
  Field field;
  std::variant<Echelon<IntPolicy>, Echelon<ModPolicy>> engine;

  Impl(const Field& f, std::size_t dim)
      : field(f),
        engine(f.is_rational() ? decltype(engine)(std::in_place_index<0>, f, dim)
                               : decltype(engine)(std::in_place_index<1>, f, dim)) {}
};

RowSpace::RowSpace(const Field& field, std::size_t dim) : impl_(std::make_unique<Impl>(field, dim)) {}
RowSpace::~RowSpace() = default;
RowSpace::RowSpace(RowSpace&&) noexcept = default;
RowSpace& RowSpace::operator=(RowSpace&&) noexcept = default;
RowSpace::RowSpace(const RowSpace& other) : impl_(std::make_unique<Impl>(*other.impl_)) {}
RowSpace& RowSpace::operator=(const RowSpace& other) {
  if (this != &other) impl_ = std::make_unique<Impl>(*other.impl_);
  return *this;
}

bool RowSpace::insert(const Vector& v) {
  if (v.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "vector length differs from ambient dimension");
  return insert(to_sparse(v));
}

bool RowSpace::insert(const SparseVector& v) {
  if (!v.empty() && v.back().first >= dim()) throw Error(ErrorKind::IndexOutOfRange, "sparse index beyond ambient");
  return std::visit([&](auto& e) { return e.insert(v); }, impl_->engine);
}

std::size_t RowSpace::rank() const {
  return std::visit([](const auto& e) { return e.rank(); }, impl_->engine);
}

std::size_t RowSpace::dim() const {
  return std::visit([](const auto& e) { return e.dim(); }, impl_->engine);
}

const Field& RowSpace::field() const { return impl_->field; }

bool RowSpace::contains(const Vector& v) const {
  if (v.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "vector length differs from ambient dimension");
  const SparseVector s = to_sparse(v);
  return std::visit([&](const auto& e) { return e.contains(s); }, impl_->engine);
}

std::vector<SparseVector> RowSpace::rref() const {
  return std::visit([](const auto& e) { return e.rref(); }, impl_->engine);
}

RankNullspace rank_nullspace(const Field& field, const Matrix& m) {
  RowSpace space(field, m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) space.insert(m.row(r));
  RankNullspace out;
  out.rank = space.rank();
  const auto rows = space.rref();
  std::vector<bool> is_pivot(m.cols(), false);
  for (const auto& row : rows) is_pivot[row.front().first] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (const auto& row : rows) {
      auto it = std::lower_bound(row.begin(), row.end(), f,
                                 [](const auto& entry, std::size_t col) { return entry.first < col; });
      if (it != row.end() && it->first == f) v[row.front().first] = field.neg(it->second);
    }
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const Field& field, const Matrix& m) {
  RowSpace space(field, m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) space.insert(m.row(r));
  return space.rank();
}

std::size_t span_dim(const Field& field, std::size_t dim, const std::vector<Vector>& vectors) {
  RowSpace space(field, dim);
  for (const auto& v : vectors) space.insert(v);
  return space.rank();
}

std::vector<Vector> kernel_of_columns(const Field& field, std::size_t rows, const std::vector<Vector>& columns) {
  if (columns.empty()) return {};
  return rank_nullspace(field, Matrix::from_columns(columns, rows)).nullspace;
}

QuotientPresentation::QuotientPresentation(const Field& field, std::size_t ambient_dim,
                                           const std::vector<Vector>& generators)
    : field_(field), ambient_(ambient_dim) {
  RowSpace space(field, ambient_dim);
  for (const auto& g : generators) {
    if (g.size() != ambient_dim) {
      throw Error(ErrorKind::DimensionMismatch, "generator of length " + std::to_string(g.size()) +
                                                    " in ambient dimension " + std::to_string(ambient_dim));
    }
    space.insert(g);
  }
  build(space);
}

QuotientPresentation::QuotientPresentation(const RowSpace& subspace)
    : field_(subspace.field()), ambient_(subspace.dim()) {
  build(subspace);
}

void QuotientPresentation::build(const RowSpace& space) {
  basis_ = space.rref();
  std::vector<bool> is_pivot(ambient_, false);
  for (const auto& row : basis_) {
    pivots_.push_back(row.front().first);
    is_pivot[row.front().first] = true;
  }
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (!is_pivot[c]) free_.push_back(c);
  }
}

Vector QuotientPresentation::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "vector length differs from ambient dimension");
  Vector r = v;
  for (const auto& row : basis_) {
    const Rational x = r[row.front().first];
    if (sgn(x) == 0) continue;
    for (const auto& [c, y] : row) r[c] = field_.sub(r[c], field_.mul(x, y));
  }
  return r;
}

Vector QuotientPresentation::coordinates(const Vector& v) const {
  const Vector r = reduce(v);
  Vector coords(free_.size());
  for (std::size_t i = 0; i < free_.size(); ++i) coords[i] = r[free_[i]];
  return coords;
}

bool QuotientPresentation::contains(const Vector& v) const { return liekit::is_zero(reduce(v)); }

Vector QuotientPresentation::lift(const Vector& coords) const {
  if (coords.size() != free_.size()) throw Error(ErrorKind::DimensionMismatch, "quotient coordinate length");
  Vector v(ambient_);
  for (std::size_t i = 0; i < free_.size(); ++i) v[free_[i]] = coords[i];
  return v;
}

QuotientPresentation quotient(const Field& field, std::size_t ambient_dim, const std::vector<Vector>& generators) {
  return QuotientPresentation(field, ambient_dim, generators);
}

std::vector<SparseVector> restrict_scalars_sparse(const ScalarDomain& domain, const std::vector<RColumn>& columns) {
  const std::size_t d = domain.dim();
  const Field& field = domain.base();
  std::vector<SparseVector> out;
  out.reserve(columns.size() * d);
  for (const auto& column : columns) {
    for (std::size_t b = 0; b < d; ++b) {
      SparseVector s;
      for (const auto& [r, coeff] : column) {
        if (coeff.size() != d) throw Error(ErrorKind::DimensionMismatch, "ring coefficient has wrong length");
        const RingElement image = domain.is_field() ? coeff : domain.mul(coeff, domain.basis_element(b));
        for (std::size_t g = 0; g < d; ++g) {
          if (sgn(image[g]) != 0) s.emplace_back(r * d + g, field.from(image[g]));
        }
      }
      std::sort(s.begin(), s.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      // merge duplicates from repeated target indices
      SparseVector merged;
      for (auto& entry : s) {
        if (!merged.empty() && merged.back().first == entry.first) {
          merged.back().second = field.add(merged.back().second, entry.second);
        } else {
          merged.push_back(std::move(entry));
        }
      }
      std::erase_if(merged, [](const auto& e) { return sgn(e.second) == 0; });
      out.push_back(std::move(merged));
    }
  }
  return out;
}

Matrix restrict_scalars(const ScalarDomain& domain, std::size_t rows, const std::vector<RColumn>& columns) {
  const std::size_t d = domain.dim();
  const auto sparse = restrict_scalars_sparse(domain, columns);
  Matrix m(rows * d, columns.size() * d);
  for (std::size_t c = 0; c < sparse.size(); ++c) {
    for (const auto& [r, x] : sparse[c]) {
      if (r >= rows * d) throw Error(ErrorKind::IndexOutOfRange, "restricted row index beyond target rank");
      m(r, c) = x;
    }
  }
  return m;
}

std::vector<Vector> nullspace(const RowSpace& rows) {
  const std::size_t n = rows.dim();
  const auto basis = rows.rref();
  std::vector<std::size_t> slot(n, n);
  for (const auto& r : basis) slot[r.front().first] = n + 1;
  std::vector<Vector> out;
  for (std::size_t f = 0; f < n; ++f) {
    if (slot[f] == n + 1) continue;
    slot[f] = out.size();
    out.emplace_back(n);
    out.back()[f] = 1;
  }
  for (const auto& r : basis) {
    const std::size_t p = r.front().first;
    for (std::size_t t = 1; t < r.size(); ++t) out[slot[r[t].first]][p] = rows.field().neg(r[t].second);
  }
  return out;
}

}  // namespace liekit
