#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace liekit {

using Rational = mpq_class;

/// A dense coordinate vector over the base field.
using Vector = std::vector<Rational>;

/// Exact prime field: the rationals or F_p with p an odd prime.
///
/// Elements of F_p are stored as Rationals holding the canonical residue in
/// [0, p). Every arithmetic helper returns canonical values, so equality of
/// field elements is equality of the stored Rationals.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws EvenCharacteristic for p == 2 and NotPrime for composite p.
  static Field prime(std::uint64_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint64_t characteristic() const noexcept { return p_; }

  /// Maps an arbitrary rational into the field (reduction mod p for F_p).
  Rational from(const Rational& value) const;
  Rational from_int(long value) const { return from(Rational(value)); }

  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  Rational inv(const Rational& a) const;
  Rational div(const Rational& a, const Rational& b) const { return mul(a, inv(b)); }

  static bool is_zero(const Rational& a) noexcept { return sgn(a) == 0; }

  /// "Q" or "F p".
  std::string to_string() const;

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.p_ == b.p_; }

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

/// Coordinates of a ring element in the domain's base-field basis.
using RingElement = std::vector<Rational>;

/// A coefficient domain: a prime field, or a finite-dimensional commutative
/// unital algebra over one given by structure constants a_i a_j = sum_k m_ij^k a_k.
class ScalarDomain {
 public:
  static ScalarDomain field(const Field& base);
  /// Validates commutativity, associativity (exhaustively on basis triples)
  /// and the unit. `mult` is indexed [(i * dim + j) * dim + k].
  static ScalarDomain comm_algebra(const Field& base, std::size_t dim, std::vector<Rational> mult,
                                   RingElement unit);
  /// K[t]/(t^N) on the basis 1, t, ..., t^(N-1).
  static ScalarDomain truncated_polynomial(const Field& base, std::size_t degree_bound);

  bool is_field() const noexcept { return is_field_; }
  const Field& base() const noexcept { return base_; }
  std::size_t dim() const noexcept { return dim_; }

  const Rational& structure(std::size_t i, std::size_t j, std::size_t k) const {
    return mult_[(i * dim_ + j) * dim_ + k];
  }
  const RingElement& unit() const noexcept { return unit_; }

  RingElement zero() const { return RingElement(dim_); }
  RingElement one() const { return unit_; }
  RingElement basis_element(std::size_t i) const;
  RingElement from_base(const Rational& c) const;

  RingElement add(const RingElement& a, const RingElement& b) const;
  RingElement sub(const RingElement& a, const RingElement& b) const;
  RingElement neg(const RingElement& a) const;
  RingElement mul(const RingElement& a, const RingElement& b) const;
  RingElement scale(const Rational& c, const RingElement& a) const;
  bool is_zero(const RingElement& a) const;

  /// Human-readable basis labels: "1", "t", "t^2" for truncated polynomials,
  /// "a1".."ad" for tables.
  const std::vector<std::string>& basis_labels() const noexcept { return labels_; }
  /// Truncation bound N when built by truncated_polynomial, 0 otherwise.
  std::size_t truncation() const noexcept { return truncation_; }

  /// Compact description: "Q", "F 3", "truncated Q 2", "table 3 over Q".
  std::string to_string() const;

  friend bool operator==(const ScalarDomain& a, const ScalarDomain& b);

 private:
  ScalarDomain(const Field& base) : base_(base) {}

  Field base_;
  bool is_field_ = true;
  std::size_t dim_ = 1;
  std::vector<Rational> mult_{Rational(1)};
  RingElement unit_{Rational(1)};
  std::vector<std::string> labels_{"1"};
  std::size_t truncation_ = 0;
};

/// Parses "Q", "F 3", "truncated Q 2", "truncated F 5 3".
ScalarDomain make_domain(std::string_view spec);
ScalarDomain truncated_polynomial(const Field& base, std::size_t degree_bound);
Field parse_field(std::string_view spec);

/// Parses "3", "-2/5" into a Rational (no field reduction).
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);

}  // namespace liekit
