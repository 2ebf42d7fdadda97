#include "liekit/scalars.hpp"

#include <charconv>
#include <sstream>

#include "liekit/error.hpp"

namespace liekit {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::istringstream in{std::string(text)};
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

std::uint64_t parse_unsigned(const std::string& word, ErrorKind kind) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    throw Error(kind, "expected a non-negative integer, got '" + word + "'");
  }
  return value;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p == 2) throw Error(ErrorKind::EvenCharacteristic, "characteristic 2 is not supported");
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  return Field(p);
}

Rational Field::from(const Rational& value) const {
  if (p_ == 0) return value;
  mpz_class modulus(static_cast<unsigned long>(p_));
  mpz_class num = value.get_num() % modulus;
  if (num < 0) num += modulus;
  mpz_class den = value.get_den() % modulus;
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "denominator vanishes mod " + std::to_string(p_));
  if (den != 1) {
    mpz_class inverse;
    mpz_invert(inverse.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
    num = (num * inverse) % modulus;
  }
  return Rational(num);
}

Rational Field::add(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a + b;
  return from(a + b);
}

Rational Field::sub(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a - b;
  return from(a - b);
}

Rational Field::mul(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a * b;
  return from(a * b);
}

Rational Field::neg(const Rational& a) const {
  if (p_ == 0) return -a;
  return from(-a);
}

Rational Field::inv(const Rational& a) const {
  if (sgn(a) == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (p_ == 0) return Rational(1) / a;
  return from(Rational(1) / a);
}

std::string Field::to_string() const {
  if (p_ == 0) return "Q";
  return "F " + std::to_string(p_);
}

ScalarDomain ScalarDomain::field(const Field& base) { return ScalarDomain(base); }

ScalarDomain ScalarDomain::comm_algebra(const Field& base, std::size_t dim, std::vector<Rational> mult,
                                        RingElement unit) {
  if (dim == 0) throw Error(ErrorKind::DimensionMismatch, "algebra dimension must be positive");
  if (mult.size() != dim * dim * dim) {
    throw Error(ErrorKind::DimensionMismatch, "multiplication table needs dim^3 entries");
  }
  if (unit.size() != dim) throw Error(ErrorKind::DimensionMismatch, "unit needs dim coordinates");
  ScalarDomain d(base);
  d.is_field_ = false;
  d.dim_ = dim;
  for (auto& m : mult) m = base.from(m);
  for (auto& u : unit) u = base.from(u);
  d.mult_ = std::move(mult);
  d.unit_ = std::move(unit);
  d.labels_.clear();
  for (std::size_t i = 0; i < dim; ++i) d.labels_.push_back("a" + std::to_string(i + 1));

  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t k = 0; k < dim; ++k) {
        if (d.structure(i, j, k) != d.structure(j, i, k)) {
          throw Error(ErrorKind::NonCommutative, "a" + std::to_string(i + 1) + "*a" + std::to_string(j + 1) +
                                                     " != a" + std::to_string(j + 1) + "*a" +
                                                     std::to_string(i + 1));
        }
      }
    }
  }
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t k = 0; k < dim; ++k) {
        auto ei = d.basis_element(i), ej = d.basis_element(j), ek = d.basis_element(k);
        if (d.mul(d.mul(ei, ej), ek) != d.mul(ei, d.mul(ej, ek))) {
          throw Error(ErrorKind::NonAssociative, "basis triple (" + std::to_string(i + 1) + "," +
                                                     std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
        }
      }
    }
  }
  for (std::size_t i = 0; i < dim; ++i) {
    if (d.mul(d.unit_, d.basis_element(i)) != d.basis_element(i)) {
      throw Error(ErrorKind::NoUnit, "unit does not fix a" + std::to_string(i + 1));
    }
  }
  return d;
}

ScalarDomain ScalarDomain::truncated_polynomial(const Field& base, std::size_t degree_bound) {
  if (degree_bound == 0) throw Error(ErrorKind::BadParameter, "truncation bound N must be >= 1");
  const std::size_t n = degree_bound;
  std::vector<Rational> mult(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i + j < n) mult[(i * n + j) * n + (i + j)] = 1;
    }
  }
  RingElement unit(n);
  unit[0] = 1;
  ScalarDomain d = comm_algebra(base, n, std::move(mult), std::move(unit));
  d.truncation_ = n;
  d.labels_.clear();
  for (std::size_t i = 0; i < n; ++i) {
    d.labels_.push_back(i == 0 ? "1" : (i == 1 ? "t" : "t^" + std::to_string(i)));
  }
  return d;
}

RingElement ScalarDomain::basis_element(std::size_t i) const {
  RingElement e(dim_);
  e.at(i) = 1;
  return e;
}

RingElement ScalarDomain::from_base(const Rational& c) const {
  RingElement r(dim_);
  const Rational v = base_.from(c);
  for (std::size_t i = 0; i < dim_; ++i) r[i] = base_.mul(v, unit_[i]);
  return r;
}

RingElement ScalarDomain::add(const RingElement& a, const RingElement& b) const {
  RingElement r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) r[i] = base_.add(a[i], b[i]);
  return r;
}

RingElement ScalarDomain::sub(const RingElement& a, const RingElement& b) const {
  RingElement r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) r[i] = base_.sub(a[i], b[i]);
  return r;
}

RingElement ScalarDomain::neg(const RingElement& a) const {
  RingElement r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) r[i] = base_.neg(a[i]);
  return r;
}

RingElement ScalarDomain::mul(const RingElement& a, const RingElement& b) const {
  if (is_field_) return RingElement{base_.mul(a[0], b[0])};
  RingElement r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(b[j]) == 0) continue;
      const Rational ab = a[i] * b[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rational& m = structure(i, j, k);
        if (sgn(m) != 0) r[k] += ab * m;
      }
    }
  }
  for (auto& x : r) x = base_.from(x);
  return r;
}

RingElement ScalarDomain::scale(const Rational& c, const RingElement& a) const {
  RingElement r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) r[i] = base_.mul(c, a[i]);
  return r;
}

bool ScalarDomain::is_zero(const RingElement& a) const {
  for (const auto& x : a) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

std::string ScalarDomain::to_string() const {
  if (is_field_) return base_.to_string();
  if (truncation_ != 0) return "truncated " + base_.to_string() + " " + std::to_string(truncation_);
  return "table " + std::to_string(dim_) + " over " + base_.to_string();
}

bool operator==(const ScalarDomain& a, const ScalarDomain& b) {
  return a.base_ == b.base_ && a.is_field_ == b.is_field_ && a.dim_ == b.dim_ && a.mult_ == b.mult_ &&
         a.unit_ == b.unit_;
}

Field parse_field(std::string_view spec) {
  auto words = split_words(spec);
  if (words.size() == 1 && words[0] == "Q") return Field::rationals();
  if (words.size() == 2 && words[0] == "F") return Field::prime(parse_unsigned(words[1], ErrorKind::SyntaxError));
  throw Error(ErrorKind::SyntaxError, "unknown field '" + std::string(spec) + "'");
}

ScalarDomain make_domain(std::string_view spec) {
  auto words = split_words(spec);
  if (words.empty()) throw Error(ErrorKind::SyntaxError, "empty domain description");
  if (words[0] == "truncated") {
    if (words.size() == 3 && words[1] == "Q") {
      return ScalarDomain::truncated_polynomial(Field::rationals(),
                                                parse_unsigned(words[2], ErrorKind::SyntaxError));
    }
    if (words.size() == 4 && words[1] == "F") {
      return ScalarDomain::truncated_polynomial(Field::prime(parse_unsigned(words[2], ErrorKind::SyntaxError)),
                                                parse_unsigned(words[3], ErrorKind::SyntaxError));
    }
    throw Error(ErrorKind::SyntaxError, "expected 'truncated <Q|F p> <N>'");
  }
  return ScalarDomain::field(parse_field(spec));
}

ScalarDomain truncated_polynomial(const Field& base, std::size_t degree_bound) {
  return ScalarDomain::truncated_polynomial(base, degree_bound);
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorKind::SyntaxError, "empty number");
  if (s.front() == '+') s.erase(0, 1);
  const bool valid = s.find_first_not_of("-0123456789/") == std::string::npos;
  if (!valid || s.empty() || s == "-") throw Error(ErrorKind::SyntaxError, "bad number '" + std::string(text) + "'");
  Rational r;
  if (r.set_str(s, 10) != 0) throw Error(ErrorKind::SyntaxError, "bad number '" + std::string(text) + "'");
  if (r.get_den() == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace liekit
