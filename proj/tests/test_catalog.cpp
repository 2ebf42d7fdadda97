#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "liekit/catalog.hpp"
#include "liekit/error.hpp"
#include "liekit/koszul.hpp"
#include "liekit/lie_file.hpp"

using namespace liekit;

namespace {

const ScalarDomain kQ = ScalarDomain::field(Field::rationals());

std::vector<std::string> sweep() {
  std::vector<std::string> names = catalog_names();
  for (const char* extra : {"abelian(1)", "heisenberg(3)", "heisenberg(7)", "filiform(3)", "filiform(8)", "w(8)",
                            "w([2]3)", "w(3,5)", "X(11)", "Y(12)", "two_nilpotent_random(9,3,3)",
                            "metabelian_random(4,3,2)", "metabelian_random(5,2,4)"}) {
    names.emplace_back(extra);
  }
  return names;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception");
  return ErrorKind::SyntaxError;
}

std::vector<std::size_t> betti(const LieAlgebra& g) { return betti_numbers(g, g.dim()).betti(); }

}  // namespace

TEST_CASE("every entry carries compatible gradings and an invariant form") {
  for (const auto& name : sweep()) {
    const CatalogEntry e = catalog_make(name);
    CHECK_MESSAGE(catalog_make(e.name).algebra == e.algebra, name);
    for (const auto& ng : e.gradings) {
      CHECK_MESSAGE(ng.grading.size() == e.algebra.dim(), name << " " << ng.label);
      CHECK_NOTHROW(e.algebra.without_grading().with_grading(ng.grading));
    }
    if (!e.gradings.empty()) CHECK(e.algebra.grading() == e.gradings.front().grading);
    if (e.form) {
      CHECK_MESSAGE(is_invariant(e.algebra, *e.form), name);
      CHECK_MESSAGE(is_nondegenerate(e.algebra.field(), *e.form), name);
    }
    if (e.chain && name != "char3_octonion") CHECK_MESSAGE(is_zero(apply_boundary(e.algebra, *e.chain).coeffs), name);
  }
}

TEST_CASE("recorded facts hold") {
  for (const auto& name : sweep()) {
    const CatalogEntry e = catalog_make(name);
    const LieAlgebra& g = e.algebra;
    for (const auto& f : e.facts) {
      std::size_t actual = 0;
      if (f.key == "dim") {
        actual = g.dim();
      } else if (f.key == "nilpotency_length") {
        actual = series(g, SeriesKind::LowerCentral).nilpotency_length;
      } else if (f.key == "kill_dim") {
        actual = killing_module(g).dim;
      } else if (f.key == "koszul_rank") {
        actual = reduced_koszul(g).rank;
      } else if (f.key == "derived2_dim") {
        const SeriesReport s = series(g, SeriesKind::Derived);
        actual = s.dims.size() > 2 ? s.dims[2] : 0;
      } else {
        FAIL("unknown fact key " << f.key);
      }
      CHECK_MESSAGE(actual == f.value, name << " " << f.key);
    }
  }
  CHECK(catalog_make("g12").fact("kill_dim") == std::optional<std::size_t>(5));
  CHECK_FALSE(catalog_make("sl2").fact("koszul_rank").has_value());
}

TEST_CASE("random families have the advertised shape") {
  for (int seed = 0; seed < 6; ++seed) {
    const LieAlgebra two = catalog_make("two_nilpotent_random(" + std::to_string(seed) + ",4,3)").algebra;
    CHECK(series(two, SeriesKind::LowerCentral).nilpotency_length <= 2);
    const LieAlgebra met = catalog_make("metabelian_random(" + std::to_string(seed) + ",3,3)").algebra;
    CHECK(series(met, SeriesKind::Derived).solvability_length <= 2);
  }
  CHECK(catalog_make("two_nilpotent_random(3,4,3)").algebra == catalog_make("two_nilpotent_random(3,4,3)").algebra);
}

TEST_CASE("small members of different families agree") {
  // X(5) and w(3), Y(6) and w(4): same dimension data
  for (const auto& [a, b] : {std::pair{"X(5)", "w(3)"}, std::pair{"Y(6)", "w(4)"}}) {
    const LieAlgebra x = catalog_make(a).algebra, y = catalog_make(b).algebra;
    CHECK(x.dim() == y.dim());
    CHECK(betti(x) == betti(y));
    CHECK(series(x, SeriesKind::LowerCentral).dims == series(y, SeriesKind::LowerCentral).dims);
    CHECK(killing_module(x).dim == killing_module(y).dim);
    CHECK(derivation_algebra(x).size() == derivation_algebra(y).size());
  }
  // w(7) in both bases
  const LieAlgebra w7 = catalog_make("w7").algebra, gen = catalog_make("w(7)").algebra;
  CHECK(betti(w7) == betti(gen));
  CHECK(series(w7, SeriesKind::Derived).dims == series(gen, SeriesKind::Derived).dims);
}

TEST_CASE("positive grading of w") {
  CatalogOptions o;
  o.r = 6;
  const CatalogEntry e = catalog_make("w(3+4)", kQ, o);
  bool found = false;
  for (const auto& ng : e.gradings) {
    if (ng.label.rfind("positive", 0) != 0) continue;
    found = true;
    for (const auto& w : ng.grading.weights()) CHECK(w.at(0) > 0);
  }
  CHECK(found);
  o.r = 3;
  CHECK(kind_of([&] { catalog_make("w(5)", kQ, o); }) == ErrorKind::BadParameter);
}

TEST_CASE("catalog errors") {
  CHECK(kind_of([] { catalog_make("nonsense"); }) == ErrorKind::UnknownName);
  CHECK(kind_of([] { catalog_make("w(6)"); }) == ErrorKind::BadPartition);
  CHECK(kind_of([] { catalog_make("w(3+2)"); }) == ErrorKind::BadPartition);
  CHECK(kind_of([] { catalog_make("heisenberg(4)"); }) == ErrorKind::BadParameter);
  CatalogOptions strict;
  strict.require_cycle = true;
  CHECK(kind_of([&] { catalog_make("char3_octonion", kQ, strict); }) == ErrorKind::CharacteristicMismatch);
  CHECK_THROWS_AS(catalog_make("nonreduced_rank3"), Error);
}

TEST_CASE("characteristic 3 and ring entries") {
  const ScalarDomain f3 = ScalarDomain::field(Field::prime(3));
  CatalogOptions strict;
  strict.require_cycle = true;
  const CatalogEntry oct = catalog_make("char3_octonion", f3, strict);
  CHECK(is_zero(apply_boundary(oct.algebra, *oct.chain).coeffs));
  CHECK(is_invariant(oct.algebra, *oct.form));
  const CatalogEntry nr = catalog_make("nonreduced_rank3", truncated_polynomial(Field::rationals(), 2));
  CHECK(nr.algebra.dim() == 3);
  CHECK_FALSE(nr.algebra.over_field());
  CHECK(is_zero(apply_boundary(nr.algebra, *nr.chain).coeffs));
}

TEST_CASE(".lie emission round-trips") {
  std::vector<CatalogEntry> entries;
  for (const auto& name : sweep()) entries.push_back(catalog_make(name));
  entries.push_back(catalog_make("char3_octonion", ScalarDomain::field(Field::prime(3))));
  entries.push_back(catalog_make("nonreduced_rank3", truncated_polynomial(Field::rationals(), 2)));
  entries.push_back(catalog_make("nonreduced_rank3", truncated_polynomial(Field::prime(5), 3)));
  for (const auto& e : entries) {
    const std::string text = emit_lie(lie_file_from(e.algebra, e.form));
    const LieFile back = parse_lie(text);
    CHECK_MESSAGE(back.algebra() == e.algebra, e.name);
    CHECK_MESSAGE(back.bilinear_form() == e.form, e.name);
    CHECK(emit_lie(back) == text);
  }
}
