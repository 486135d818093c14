#pragma once

// Randomised checks of algebraic identities. Each runs `cases` seeded trials
// and reports the first counterexample it finds.

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "deltamat/core.hpp"

namespace deltamat::properties {

struct Outcome {
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0 && cases > 0; }
};

/// twist(twist(D,A),B) = twist(D,A^B), twist(D,{}) = D, dual(D) = twist(D,E).
Outcome twist_group_law(std::uint64_t cases, std::uint64_t seed, int max_n = 7);

/// Twisting preserves parity; minors of even delta-matroids stay even.
Outcome parity_preservation(std::uint64_t cases, std::uint64_t seed, int max_n = 7);

/// Twist/minor commutation, including the e in F case for deletion.
Outcome twist_minor_commutation(std::uint64_t cases, std::uint64_t seed, int max_n = 7);

/// Upper matroid complemented elementwise equals the lower matroid of the dual.
Outcome upper_lower_duality(std::uint64_t cases, std::uint64_t seed, int max_n = 7);

/// Basis-exchange disjunction on upper matroids.
Outcome exchange_disjunction(std::uint64_t cases, std::uint64_t seed, int max_n = 7);

/// is_binary(matroid_from_matrix(A)) for random symmetric A.
Outcome matrix_round_trip(std::uint64_t cases, std::uint64_t seed, int max_n = 7);

struct ExchangeQuad {
  Mask base = 0;
  int x = 0, x2 = 0, y = 0, y2 = 0;
};

/// Given bases F, F^{x,y}, F^{x',y'} (x, x' in F; y, y' outside; all
/// distinct), either F^{x,y,x',y'} is a basis or both F^{x,y'} and F^{x',y}
/// are. Returns a quad where that fails.
std::optional<ExchangeQuad> find_disjunction_failure(std::span<const Mask> bases, int n);

/// The stronger claim: whenever F, F^{x,y}, F^{x',y'} and F^{x,y,x',y'} are
/// bases, so is F^{x,a} and F^{x',b} for every a, b in {y, y'}. Returns a
/// quad where that fails. This does not hold for all matroids.
std::optional<ExchangeQuad> find_full_exchange_failure(std::span<const Mask> bases, int n);

}  // namespace deltamat::properties
