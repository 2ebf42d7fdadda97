#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liekit/homology.hpp"
#include "liekit/lie_algebra.hpp"
#include "liekit/scalars.hpp"

namespace liekit {

enum class FactOrigin { Literature, Computed };

struct ExpectedFact {
  /// One of "dim", "nilpotency_length", "kill_dim", "koszul_rank", "derived2_dim".
  std::string key;
  std::size_t value = 0;
  FactOrigin origin = FactOrigin::Literature;
};

struct NamedGrading {
  std::string label;
  Grading grading;
};

struct CatalogEntry {
  std::string name;
  /// Parsed parameters in order, e.g. the partition of w(3+4).
  std::vector<long long> parameters;
  /// Carries the first attached grading, if any.
  LieAlgebra algebra;
  std::optional<BilinearForm> form;
  std::vector<NamedGrading> gradings;
  /// Distinguished 3-chain for the entries that come with one.
  std::optional<ChainVector> chain;
  std::vector<ExpectedFact> facts;

  std::optional<std::size_t> fact(std::string_view key) const;
};

struct CatalogOptions {
  /// Parameter of the positive grading of w(lambda); omitted when unset.
  std::optional<long long> r;
  /// char3_octonion: throw CharacteristicMismatch unless the chain is a cycle (characteristic 3).
  bool require_cycle = false;
};

/// Names: abelian(n), heisenberg(2k+1), filiform(n), sl2, aff2, oscillator4,
/// w(a+b+...) (also w([k]n)), X(3k-1), Y(3k), kath9_4c, w7, w7_twisted, g12,
/// solvable9, char3_octonion, nonreduced_rank3, coadjoint(sl2),
/// two_nilpotent_random(seed,v,w), metabelian_random(seed,a,m).
///
/// Throws UnknownName, BadPartition, BadParameter, CharacteristicMismatch.
CatalogEntry catalog_make(std::string_view name, const ScalarDomain& domain = ScalarDomain::field(Field::rationals()),
                          const CatalogOptions& options = {});

/// Representative names, one per family, for listings and emission tests.
std::vector<std::string> catalog_names();

}  // namespace liekit
