#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "deltamat/gf2.hpp"
#include "deltamat/kernels.hpp"
#include "deltamat/random.hpp"
#include "deltamat/search.hpp"
#include "helpers.hpp"

using namespace deltamat;

namespace {

// det over GF(2) by the permutation expansion (signs vanish mod 2).
bool invertible_by_permutations(std::span<const Mask> rows, Mask w) {
  std::vector<int> idx;
  for (int i = 0; i < 32; ++i) {
    if (w & bit(i)) idx.push_back(i);
  }
  std::vector<int> perm = idx;
  int parity = 0;
  do {
    int term = 1;
    for (std::size_t k = 0; k < idx.size(); ++k) term &= (rows[idx[k]] >> perm[k]) & 1;
    parity ^= term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return parity == 1;
}

}  // namespace

TEST_CASE("principal invertibility matches the permutation expansion") {
  sampling::Engine rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(sampling::below(rng, 6));
    const Gf2SymMatrix a = sampling::random_symmetric_matrix(rng, n);
    const auto family = kernels::invertible_principal_serial(a.rows(), n);
    std::vector<Mask> expected;
    for (Mask w = 0; w < bit(n); ++w) {
      if (invertible_by_permutations(a.rows(), w)) expected.push_back(w);
    }
    CHECK(family == expected);
  }
}

TEST_CASE("parallel kernels reproduce the serial reference") {
  sampling::Engine rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const DeltaMatroid d = sampling::random_delta_matroid(rng, 9);
    const auto hist = kernels::width_histogram_serial(d.feasible(), d.size());
    for (int workers : {1, 2, 3, 8}) {
      CHECK(kernels::width_histogram_parallel(d.feasible(), d.size(), workers) == hist);
    }
    const Gf2SymMatrix a = sampling::random_symmetric_matrix(rng, d.size());
    const auto inv = kernels::invertible_principal_serial(a.rows(), a.dimension());
    CHECK(kernels::invertible_principal_parallel(a.rows(), a.dimension(), 4) == inv);
  }
}

TEST_CASE("parallel exchange-axiom check returns the serial witness") {
  sampling::Engine rng(5);
  int violations = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + static_cast<int>(sampling::below(rng, 4));
    std::vector<Mask> family;
    for (Mask m = 0; m < bit(n); ++m) {
      if (sampling::below(rng, 3) == 0) family.push_back(m);
    }
    if (family.empty()) family.push_back(0);
    const auto serial = kernels::sea_violation_serial(family, n);
    violations += serial.has_value();
    for (int workers : {2, 4, 7}) CHECK(kernels::sea_violation_parallel(family, n, workers) == serial);
  }
  CHECK(violations > 0);
}

TEST_CASE("width histogram equals widths of materialised twists") {
  sampling::Engine rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const DeltaMatroid d = sampling::random_delta_matroid(rng, 7);
    std::vector<std::uint64_t> expected(d.size() + 1, 0);
    for (Mask a = 0; a < bit(d.size()); ++a) ++expected[width_profile(twist(d, a)).width];
    CHECK(kernels::width_histogram_serial(d.feasible(), d.size()) == expected);
  }
}

TEST_CASE("mask index switches representation without changing answers") {
  const DeltaMatroid d = build_dn(6);
  const kernels::MaskIndex small(d.feasible(), 6);
  const kernels::MaskIndex large(d.feasible(), kernels::kBitmapMaxElements + 1);
  for (Mask m = 0; m < bit(6); ++m) CHECK(small.contains(m) == large.contains(m));
}
