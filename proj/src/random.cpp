#include "deltamat/random.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "deltamat/iso.hpp"
#include "deltamat/kernels.hpp"
#include "detail.hpp"

namespace deltamat::sampling {

std::uint64_t below(Engine& rng, std::uint64_t bound) {
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

Mask random_subset(Engine& rng, int n) { return static_cast<Mask>(rng()) & full_mask(n); }

Gf2SymMatrix random_symmetric_matrix(Engine& rng, int n) {
  Gf2SymMatrix a(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) a.set(i, j, rng() & 1U);
  }
  return a;
}

const std::vector<DeltaMatroid>& all_delta_matroids(int n) {
  static const std::array<std::vector<DeltaMatroid>, 5> catalogue = [] {
    std::array<std::vector<DeltaMatroid>, 5> out;
    for (int size = 0; size <= 4; ++size) {
      const std::uint64_t families = std::uint64_t{1} << (std::uint64_t{1} << size);
      for (std::uint64_t code = 1; code < families; ++code) {
        std::vector<Mask> family;
        for (Mask m = 0; m < bit(size); ++m) {
          if ((code >> m) & 1U) family.push_back(m);
        }
        if (kernels::sea_violation_serial(family, size)) continue;
        out[size].push_back(to_delta_matroid(SetSystem::with_default_labels(size, family)));
      }
    }
    return out;
  }();
  if (n < 0 || n > 4) throw InputError("catalogue covers ground sets of size 0..4");
  return catalogue[n];
}

DeltaMatroid direct_sum(const DeltaMatroid& a, const DeltaMatroid& b) {
  std::vector<Mask> family;
  for (Mask x : a.feasible()) {
    for (Mask y : b.feasible()) family.push_back(x | (y << a.size()));
  }
  auto labels = default_labels(a.size() + b.size());
  return detail::Trusted::make(SetSystem(std::move(labels), std::move(family)));
}

namespace {

DeltaMatroid shuffled(Engine& rng, const DeltaMatroid& d) {
  std::vector<int> perm(d.size());
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = d.size() - 1; i > 0; --i) std::swap(perm[i], perm[below(rng, i + 1)]);
  SetSystem moved = relabel(d.system(), perm);
  return detail::Trusted::make(
      SetSystem(default_labels(d.size()), {moved.feasible().begin(), moved.feasible().end()}));
}

}  // namespace

DeltaMatroid random_delta_matroid(Engine& rng, int max_n) {
  if (max_n < 1) throw InputError("max_n must be positive");
  const int n = 1 + static_cast<int>(below(rng, max_n));
  switch (below(rng, 3)) {
    case 0: {
      const DeltaMatroid base = matroid_from_matrix(random_symmetric_matrix(rng, n));
      return twist(base, random_subset(rng, n));
    }
    case 1: {
      const auto& pool = all_delta_matroids(std::min(n, 4));
      const DeltaMatroid& pick = pool[below(rng, pool.size())];
      return shuffled(rng, twist(pick, random_subset(rng, pick.size())));
    }
    default: {
      if (n < 2) return random_delta_matroid(rng, max_n);
      const int left = 1 + static_cast<int>(below(rng, n - 1));
      const DeltaMatroid a = random_delta_matroid(rng, left);
      const DeltaMatroid b = random_delta_matroid(rng, n - a.size());
      return shuffled(rng, direct_sum(a, b));
    }
  }
}

}  // namespace deltamat::sampling
