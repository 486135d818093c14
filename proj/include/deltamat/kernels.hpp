#pragma once

// Data-parallel inner loops. Every kernel has a serial reference that the
// tests and benchmarks compare the OpenMP version against; both must return
// identical results for any worker count.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "deltamat/core.hpp"

namespace deltamat::kernels {

/// Membership oracle over a sorted family: a bitmap for small ground sets,
/// binary search otherwise.
class MaskIndex {
 public:
  MaskIndex(std::span<const Mask> sorted_family, int n);
  bool contains(Mask m) const {
    if (!bitmap_.empty()) return (bitmap_[m >> 6] >> (m & 63)) & 1U;
    return contains_sorted(m);
  }

 private:
  bool contains_sorted(Mask m) const;
  std::span<const Mask> family_;
  std::vector<std::uint64_t> bitmap_;
};

inline constexpr int kBitmapMaxElements = 24;

/// First violation in (first, second, element) lexicographic order.
std::optional<SeaViolation> sea_violation_serial(std::span<const Mask> family, int n);
std::optional<SeaViolation> sea_violation_parallel(std::span<const Mask> family, int n,
                                                   int workers);

/// hist[w] = number of A in 2^E whose twist has width w. Size n + 1.
std::vector<std::uint64_t> width_histogram_serial(std::span<const Mask> family, int n);
std::vector<std::uint64_t> width_histogram_parallel(std::span<const Mask> family, int n,
                                                    int workers);

/// Rank over GF(2) of the principal submatrix selected by w.
int principal_rank(std::span<const Mask> rows, Mask w);

/// All W (ascending) whose principal submatrix is invertible. The empty
/// submatrix counts as invertible.
std::vector<Mask> invertible_principal_serial(std::span<const Mask> rows, int n);
std::vector<Mask> invertible_principal_parallel(std::span<const Mask> rows, int n, int workers);

/// Resolves a requested worker count; values < 1 mean "use the runtime default".
int effective_workers(int requested);

}  // namespace deltamat::kernels
