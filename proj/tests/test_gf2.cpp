#include <doctest.h>

#include "deltamat/gf2.hpp"
#include "deltamat/iso.hpp"
#include "deltamat/random.hpp"
#include "deltamat/search.hpp"
#include "helpers.hpp"

using namespace deltamat;
using namespace deltamat::test;

namespace {

Gf2SymMatrix all_ones_off_diagonal(int n) {
  Gf2SymMatrix a(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) a.set(i, j, true);
  }
  return a;
}

}  // namespace

TEST_CASE("gf2 rank") {
  CHECK(gf2_rank(Gf2SymMatrix::from_rows({0b10, 0b01})) == 2);
  CHECK(gf2_rank(all_ones_off_diagonal(3)) == 2);
  const Gf2SymMatrix a = all_ones_off_diagonal(3);
  CHECK(gf2_rank(a, 0) == 0);
  CHECK(gf2_rank(a, 0b011) == 2);
  CHECK_THROWS_AS(gf2_rank(a, 0b1000), InputError);
  CHECK_THROWS_AS(Gf2SymMatrix::from_rows({0b10, 0b00}), InputError);
}

TEST_CASE("matroid_from_matrix examples") {
  CHECK(matroid_from_matrix(Gf2SymMatrix::from_rows({1})) == matroid_of(1, {{}, {1}}));
  CHECK(matroid_from_matrix(Gf2SymMatrix::from_rows({0})) == matroid_of(1, {{}}));
  CHECK(matroid_from_matrix(Gf2SymMatrix::from_rows({0b10, 0b01})) == matroid_of(2, {{}, {1, 2}}));
  // Zero-diagonal, all-ones 3x3: the 2x2 minors are invertible, the whole matrix is not.
  CHECK(matroid_from_matrix(all_ones_off_diagonal(3)) == build_dn(3));
}

TEST_CASE("matroid_from_matrix output always satisfies the exchange axiom") {
  sampling::Engine rng(17);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(sampling::below(rng, 6));
    const Gf2SymMatrix a = sampling::random_symmetric_matrix(rng, n);
    const DeltaMatroid d = matroid_from_matrix(a);
    CHECK(sea_holds_naive({d.feasible().begin(), d.feasible().end()}, n));
    CHECK(is_normal(d));
    CHECK(matroid_from_matrix(a, 3) == d);
  }
}

TEST_CASE("zero-diagonal matrices give even delta-matroids") {
  // Checked empirically, not assumed: exhaustive over all zero-diagonal
  // symmetric matrices with n <= 4.
  for (int n = 1; n <= 4; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (int code = 0; code < (1 << pairs); ++code) {
      Gf2SymMatrix a(n);
      int k = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) a.set(i, j, (code >> k++) & 1);
      }
      CHECK(parity(matroid_from_matrix(a)) == Parity::Even);
    }
  }
}

TEST_CASE("infer_matrix examples") {
  CHECK(infer_matrix(build_dn(3)) == all_ones_off_diagonal(3));
  CHECK(infer_matrix(matroid_of(1, {{}, {1}})) == Gf2SymMatrix::from_rows({1}));
  CHECK(infer_matrix(excluded_minor(1)) == all_ones_off_diagonal(3));
  CHECK(matroid_from_matrix(infer_matrix(excluded_minor(1))) != excluded_minor(1));
  CHECK_THROWS_AS(infer_matrix(matroid_of(1, {{1}})), PreconditionError);
}

TEST_CASE("is_binary examples") {
  const DeltaMatroid& s4 = excluded_minor(4);
  for (BinaryMethod m : {BinaryMethod::Matrix, BinaryMethod::ExcludedMinor, BinaryMethod::Both}) {
    CHECK_FALSE(is_binary(s4, m).binary);
  }
  const auto d3 = is_binary(build_dn(3), BinaryMethod::Both);
  CHECK(d3.binary);
  REQUIRE(d3.matrix_witness);
  CHECK(d3.matrix_witness->twist == 0);
  CHECK(d3.matrix_witness->matrix == all_ones_off_diagonal(3));

  const auto pair = is_binary(matroid_of(2, {{}, {1, 2}}));
  REQUIRE(pair.matrix_witness);
  CHECK(pair.matrix_witness->twist == 0);
  CHECK(pair.matrix_witness->matrix == Gf2SymMatrix::from_rows({0b10, 0b01}));
  CHECK(is_binary(build_dn(5)).binary);
}

TEST_CASE("every excluded minor and each of its twists is non-binary") {
  for (int i = 1; i <= 5; ++i) {
    const DeltaMatroid& s = excluded_minor(i);
    for (Mask b = 0; b <= s.ground(); ++b) {
      CHECK_FALSE(is_binary(twist(s, b), BinaryMethod::Both).binary);
    }
  }
}

TEST_CASE("non-normal binary delta-matroids are found through a twist") {
  sampling::Engine rng(4);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + static_cast<int>(sampling::below(rng, 6));
    const DeltaMatroid base = matroid_from_matrix(sampling::random_symmetric_matrix(rng, n));
    const Mask f = base.feasible()[sampling::below(rng, base.feasible().size())];
    const DeltaMatroid d = twist(base, f);
    const auto v = is_binary(d, BinaryMethod::Both);
    REQUIRE(v.binary);
    CHECK(matroid_from_matrix(v.matrix_witness->matrix) == twist(d, v.matrix_witness->twist));
  }
}

TEST_CASE("elementary minors of binary delta-matroids are binary") {
  sampling::Engine rng(23);
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + static_cast<int>(sampling::below(rng, 5));
    const DeltaMatroid d = twist(matroid_from_matrix(sampling::random_symmetric_matrix(rng, n)),
                                 sampling::random_subset(rng, n));
    const int e = static_cast<int>(sampling::below(rng, n));
    for (MinorKind k : {MinorKind::Delete, MinorKind::Contract}) {
      CHECK(is_binary(elementary_minor(d, e, k)).binary);
    }
  }
}

TEST_CASE("matrix and excluded-minor methods agree on every delta-matroid up to four elements") {
  int binary = 0, total = 0;
  for (int n = 0; n <= 4; ++n) {
    for (const DeltaMatroid& d : sampling::all_delta_matroids(n)) {
      const bool a = is_binary(d, BinaryMethod::Matrix).binary;
      const bool b = is_binary(d, BinaryMethod::ExcludedMinor).binary;
      CHECK(a == b);
      binary += a;
      ++total;
    }
  }
  CHECK(total == 6133);
  CHECK(binary == 2449);
}
