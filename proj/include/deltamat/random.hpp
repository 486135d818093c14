#pragma once

// Seeded generators for property checks. Only raw engine output is used, so a
// seed reproduces the same stream on every platform.

#include <random>
#include <vector>

#include "deltamat/core.hpp"
#include "deltamat/gf2.hpp"

namespace deltamat::sampling {

using Engine = std::mt19937_64;

/// Uniform in [0, bound).
std::uint64_t below(Engine& rng, std::uint64_t bound);
Mask random_subset(Engine& rng, int n);
Gf2SymMatrix random_symmetric_matrix(Engine& rng, int n);

/// Every delta-matroid on {1..n}, n <= 4, in ascending family order.
const std::vector<DeltaMatroid>& all_delta_matroids(int n);

/// Mixture of twisted binary delta-matroids D(A)*F, relabelled members of the
/// small catalogue, and direct sums of those. 1 <= size <= max_n.
DeltaMatroid random_delta_matroid(Engine& rng, int max_n);

/// Feasible sets {X u Y}; elements of b follow those of a.
DeltaMatroid direct_sum(const DeltaMatroid& a, const DeltaMatroid& b);

}  // namespace deltamat::sampling
