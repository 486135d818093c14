#include "deltamat/kernels.hpp"

#include <algorithm>
#include <array>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace deltamat::kernels {

MaskIndex::MaskIndex(std::span<const Mask> sorted_family, int n) : family_(sorted_family) {
  if (n <= kBitmapMaxElements) {
    bitmap_.assign((std::size_t{1} << n) / 64 + 1, 0);
    for (Mask m : family_) bitmap_[m >> 6] |= std::uint64_t{1} << (m & 63);
  }
}

bool MaskIndex::contains_sorted(Mask m) const {
  return std::binary_search(family_.begin(), family_.end(), m);
}

int effective_workers(int requested) {
#ifdef _OPENMP
  return requested < 1 ? omp_get_max_threads() : requested;
#else
  (void)requested;
  return 1;
#endif
}

namespace {

// For a fixed F1, exchange[x] holds every y with F1 ^ {x, y} feasible
// (y == x meaning F1 ^ {x}).
using ExchangeTable = std::array<Mask, kMaxElements>;

void fill_exchange(const MaskIndex& index, Mask f1, int n, ExchangeTable& exchange) {
  for (int x = 0; x < n; ++x) {
    Mask ys = 0;
    for (int y = 0; y < n; ++y) {
      if (index.contains(f1 ^ bit(x) ^ (x == y ? 0 : bit(y)))) ys |= bit(y);
    }
    exchange[x] = ys;
  }
}

std::optional<SeaViolation> first_violation_from(const MaskIndex& index,
                                                 std::span<const Mask> family, Mask f1, int n,
                                                 ExchangeTable& exchange) {
  fill_exchange(index, f1, n, exchange);
  for (Mask f2 : family) {
    const Mask diff = f1 ^ f2;
    for (Mask rest = diff; rest != 0; rest &= rest - 1) {
      const int x = std::countr_zero(rest);
      if ((exchange[x] & diff) == 0) return SeaViolation{f1, f2, x};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<SeaViolation> sea_violation_serial(std::span<const Mask> family, int n) {
  const MaskIndex index(family, n);
  ExchangeTable exchange{};
  for (Mask f1 : family) {
    if (auto v = first_violation_from(index, family, f1, n, exchange)) return v;
  }
  return std::nullopt;
}

std::optional<SeaViolation> sea_violation_parallel(std::span<const Mask> family, int n,
                                                   int workers) {
  const MaskIndex index(family, n);
  const auto count = static_cast<std::int64_t>(family.size());
  std::int64_t best = count;
  std::optional<SeaViolation> found;
#pragma omp parallel num_threads(effective_workers(workers))
  {
    ExchangeTable exchange{};
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < count; ++i) {
      std::int64_t current;
#pragma omp atomic read
      current = best;
      if (i > current) continue;
      auto v = first_violation_from(index, family, family[i], n, exchange);
      if (!v) continue;
#pragma omp critical(deltamat_sea_best)
      if (i < best) {
        found = v;
#pragma omp atomic write
        best = i;
      }
    }
  }
  return found;
}

std::vector<std::uint64_t> width_histogram_serial(std::span<const Mask> family, int n) {
  std::vector<std::uint64_t> hist(n + 1, 0);
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t a = 0; a < subsets; ++a) {
    ++hist[twist_profile(family, static_cast<Mask>(a)).width];
  }
  return hist;
}

std::vector<std::uint64_t> width_histogram_parallel(std::span<const Mask> family, int n,
                                                    int workers) {
  std::vector<std::uint64_t> hist(n + 1, 0);
  const auto subsets = static_cast<std::int64_t>(std::uint64_t{1} << n);
#pragma omp parallel num_threads(effective_workers(workers))
  {
    std::vector<std::uint64_t> local(n + 1, 0);
#pragma omp for schedule(static)
    for (std::int64_t a = 0; a < subsets; ++a) {
      ++local[twist_profile(family, static_cast<Mask>(a)).width];
    }
#pragma omp critical(deltamat_width_merge)
    for (int w = 0; w <= n; ++w) hist[w] += local[w];
  }
  return hist;
}

int principal_rank(std::span<const Mask> rows, Mask w) {
  std::array<Mask, kMaxElements> pivots{};  // pivots[b]: reduced row whose leading bit is b
  int rank = 0;
  for (Mask sel = w; sel != 0; sel &= sel - 1) {
    Mask row = rows[std::countr_zero(sel)] & w;
    while (row != 0) {
      const int lead = std::countr_zero(row);
      if (pivots[lead] == 0) {
        pivots[lead] = row;
        ++rank;
        break;
      }
      row ^= pivots[lead];
    }
  }
  return rank;
}

std::vector<Mask> invertible_principal_serial(std::span<const Mask> rows, int n) {
  std::vector<Mask> out;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t w = 0; w < subsets; ++w) {
    const auto m = static_cast<Mask>(w);
    if (principal_rank(rows, m) == popcount(m)) out.push_back(m);
  }
  return out;
}

std::vector<Mask> invertible_principal_parallel(std::span<const Mask> rows, int n, int workers) {
  const auto subsets = static_cast<std::int64_t>(std::uint64_t{1} << n);
  std::vector<std::uint8_t> flags(subsets, 0);
#pragma omp parallel for num_threads(effective_workers(workers)) schedule(static)
  for (std::int64_t w = 0; w < subsets; ++w) {
    const auto m = static_cast<Mask>(w);
    flags[w] = principal_rank(rows, m) == popcount(m);
  }
  std::vector<Mask> out;
  for (std::int64_t w = 0; w < subsets; ++w) {
    if (flags[w]) out.push_back(static_cast<Mask>(w));
  }
  return out;
}

}  // namespace deltamat::kernels
