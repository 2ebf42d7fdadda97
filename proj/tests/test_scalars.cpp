#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liekit/error.hpp"
#include "liekit/scalars.hpp"

using namespace liekit;

namespace {

long mod(long a, long p) { return ((a % p) + p) % p; }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception");
  return ErrorKind::SyntaxError;
}

}  // namespace

TEST_CASE("prime field arithmetic agrees with integer residues") {
  for (long p : {3L, 5L, 7L, 13L}) {
    const Field f = Field::prime(p);
    for (long a = -2 * p; a < 2 * p; ++a) {
      for (long b = -p; b < p; ++b) {
        CHECK(f.add(f.from_int(a), f.from_int(b)) == mod(a + b, p));
        CHECK(f.mul(f.from_int(a), f.from_int(b)) == mod(a * b, p));
        CHECK(f.sub(f.from_int(a), f.from_int(b)) == mod(a - b, p));
      }
      if (mod(a, p) != 0) CHECK(mod(f.inv(f.from_int(a)).get_num().get_si() * a, p) == 1);
    }
  }
}

TEST_CASE("rationals reduce into F_p through the inverse of the denominator") {
  const Field f = Field::prime(7);
  // 1/2 = 4 mod 7, -3/5 = -3 * 3 = -9 = 5 mod 7
  CHECK(f.from(Rational(1, 2)) == 4);
  CHECK(f.from(Rational(-3, 5)) == 5);
  CHECK(kind_of([&] { f.from(Rational(1, 7)); }) == ErrorKind::DivisionByZero);
  CHECK(kind_of([&] { f.inv(Rational(0)); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("field construction rejects characteristic 2 and composites") {
  CHECK(kind_of([] { Field::prime(2); }) == ErrorKind::EvenCharacteristic);
  CHECK(kind_of([] { Field::prime(9); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { Field::prime(1); }) == ErrorKind::NotPrime);
  CHECK(Field::prime(101).characteristic() == 101);
  CHECK(Field::rationals().is_rational());
}

TEST_CASE("truncated polynomial ring multiplies like polynomials mod t^N") {
  const ScalarDomain a = truncated_polynomial(Field::rationals(), 4);
  CHECK(a.dim() == 4);
  CHECK_FALSE(a.is_field());
  // (1 + 2t)(3 - t^2) = 3 + 6t - t^2 - 2t^3
  const RingElement x{1, 2, 0, 0};
  const RingElement y{3, 0, -1, 0};
  CHECK(a.mul(x, y) == RingElement{3, 6, -1, -2});
  const RingElement t = a.basis_element(1);
  CHECK(a.is_zero(a.mul(a.mul(t, t), a.mul(t, t))));
  CHECK(a.mul(a.unit(), x) == x);
  CHECK(a.to_string() == "truncated Q 4");
}

TEST_CASE("comm_algebra validates the structure constants") {
  const Field q = Field::rationals();
  // Q[e]/(e^2) written as a table
  std::vector<Rational> dual{1, 0, 0, 1, 0, 1, 0, 0};
  const ScalarDomain ok = ScalarDomain::comm_algebra(q, 2, dual, {1, 0});
  CHECK(ok.mul({0, 1}, {0, 1}) == RingElement{0, 0});
  CHECK(ok == truncated_polynomial(q, 2));

  std::vector<Rational> skew = dual;
  skew[(0 * 2 + 1) * 2 + 1] = 2;  // a0 a1 = 2 a1 but a1 a0 = a1
  CHECK(kind_of([&] { ScalarDomain::comm_algebra(q, 2, skew, {1, 0}); }) == ErrorKind::NonCommutative);
  CHECK(kind_of([&] { ScalarDomain::comm_algebra(q, 2, dual, {0, 1}); }) == ErrorKind::NoUnit);

  std::vector<Rational> bad(27, 0);
  auto set = [&](int i, int j, int k, int v) { bad[(i * 3 + j) * 3 + k] = bad[(j * 3 + i) * 3 + k] = v; };
  set(0, 0, 0, 1);
  set(0, 1, 1, 1);
  set(0, 2, 2, 1);
  set(1, 1, 2, 1);
  set(1, 2, 1, 1);  // (a1 a1) a2 = 0 but a1 (a1 a2) = a2
  CHECK(kind_of([&] { ScalarDomain::comm_algebra(q, 3, bad, {1, 0, 0}); }) == ErrorKind::NonAssociative);
}

TEST_CASE("domain and rational parsing") {
  CHECK(make_domain("Q").is_field());
  CHECK(make_domain("F 5").base().characteristic() == 5);
  const ScalarDomain r = make_domain("truncated F 5 3");
  CHECK(r.dim() == 3);
  CHECK(r.base().characteristic() == 5);
  CHECK(parse_rational("-2/6") == Rational(-1, 3));
  Rational half(7, -14);
  half.canonicalize();
  CHECK(to_string(half) == "-1/2");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(make_domain("truncated R 2"), Error);
}

TEST_CASE("ring arithmetic over F_p stays canonical") {
  const ScalarDomain a = truncated_polynomial(Field::prime(5), 3);
  const RingElement x{4, 4, 0};
  const RingElement sq = a.mul(x, x);  // 16 + 32t + 16t^2 = 1 + 2t + t^2 mod 5
  CHECK(sq == RingElement{1, 2, 1});
  CHECK(a.add(x, a.neg(x)) == a.zero());
}
