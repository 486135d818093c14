#include <doctest.h>

#include "deltamat/core.hpp"
#include "deltamat/iso.hpp"
#include "deltamat/random.hpp"
#include "deltamat/search.hpp"
#include "helpers.hpp"

using namespace deltamat;
using namespace deltamat::test;

TEST_CASE("set system keeps a sorted family and rejects bad input") {
  const SetSystem s = system_of(3, {{1, 2}, {}, {3}});
  CHECK(std::vector<Mask>(s.feasible().begin(), s.feasible().end()) ==
        std::vector<Mask>{0, 0b011, 0b100});
  CHECK_THROWS_AS(system_of(2, {{1}, {1}}), InputError);
  CHECK_THROWS_AS(SetSystem::with_default_labels(2, {}), InputError);
  CHECK_THROWS_AS(SetSystem::with_default_labels(2, {0b100}), InputError);
  CHECK_THROWS_AS(SetSystem({"a", "a"}, {0}), InputError);
  CHECK_THROWS_AS(SetSystem(default_labels(31), {0}), InputError);
  CHECK_NOTHROW(SetSystem(default_labels(30), {0}));
  CHECK_THROWS_WITH_AS(s.index_of("9"), "unknown element label '9'", InputError);
}

TEST_CASE("zero-element delta-matroid is accepted") {
  auto result = validate_sea(SetSystem({}, {0}));
  CHECK(std::holds_alternative<DeltaMatroid>(result));
}

TEST_CASE("validate_sea on the listed examples") {
  CHECK(std::holds_alternative<DeltaMatroid>(validate_sea(system_of(3, {{}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}}))));
  CHECK(std::holds_alternative<DeltaMatroid>(validate_sea(build_dn(4).system())));

  auto bad = validate_sea(system_of(3, {{}, {1, 2, 3}}));
  REQUIRE(std::holds_alternative<SeaViolation>(bad));
  CHECK(std::get<SeaViolation>(bad) == SeaViolation{0, 0b111, 0});
  CHECK_THROWS_AS(to_delta_matroid(system_of(3, {{}, {1, 2, 3}})), InputError);
}

TEST_CASE("validate_sea agrees with the definition on every family up to three elements") {
  for (int n = 0; n <= 3; ++n) {
    for (std::uint64_t code = 1; code < (std::uint64_t{1} << (1U << n)); ++code) {
      const auto family = family_from_code(code, n);
      const bool fast = std::holds_alternative<DeltaMatroid>(
          validate_sea(SetSystem::with_default_labels(n, family)));
      CHECK(fast == sea_holds_naive(family, n));
    }
  }
}

TEST_CASE("validate_sea agrees with the definition on random four- and five-element families") {
  sampling::Engine rng(11);
  int valid = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 4 + trial % 2;
    std::vector<Mask> family{0};
    for (Mask m = 1; m < bit(n); ++m) {
      // Bias towards sparse families so some pass.
      if (sampling::below(rng, 4) == 0) family.push_back(m);
    }
    const bool fast = std::holds_alternative<DeltaMatroid>(
        validate_sea(SetSystem::with_default_labels(n, family)));
    CHECK(fast == sea_holds_naive(family, n));
    valid += fast;
  }
  CHECK(valid > 0);
}

TEST_CASE("twist examples") {
  const DeltaMatroid& s1 = excluded_minor(1);
  const DeltaMatroid& s5 = excluded_minor(5);
  CHECK(twist(s1, 0) == s1);
  CHECK(twist(s5, set_of({1, 3})) == matroid_of(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
  CHECK(twist(s1, set_of({1, 2, 3})) == matroid_of(3, {{}, {1}, {2}, {3}, {1, 2, 3}}));
  CHECK_THROWS_AS(twist(s1, bit(3)), InputError);
  const std::vector<std::string> unknown{"7"};
  CHECK_THROWS_AS(twist(s1, unknown), InputError);
  const std::vector<std::string> labels{"1", "3"};
  CHECK(twist(s5, labels) == twist(s5, set_of({1, 3})));
}

TEST_CASE("dual examples") {
  CHECK(dual(matroid_of(1, {{1}})) == matroid_of(1, {{}}));
  CHECK(dual(excluded_minor(1)) == matroid_of(3, {{}, {1}, {2}, {3}, {1, 2, 3}}));
  sampling::Engine rng(3);
  for (int i = 0; i < 50; ++i) {
    const DeltaMatroid d = sampling::random_delta_matroid(rng, 6);
    CHECK(dual(dual(d)) == d);
  }
}

TEST_CASE("elementary minors follow the deletion/contraction rules") {
  const DeltaMatroid& s1 = excluded_minor(1);
  const DeltaMatroid contracted = elementary_minor(s1, 0, MinorKind::Contract);
  const DeltaMatroid deleted = elementary_minor(s1, 0, MinorKind::Delete);
  CHECK(contracted.elements() == std::vector<std::string>{"2", "3"});
  CHECK(std::vector<Mask>(contracted.feasible().begin(), contracted.feasible().end()) ==
        std::vector<Mask>{0b01, 0b10, 0b11});
  CHECK(std::vector<Mask>(deleted.feasible().begin(), deleted.feasible().end()) ==
        std::vector<Mask>{0, 0b11});

  // 1 is a loop: both kinds coincide.
  const DeltaMatroid with_loop = matroid_of(2, {{}, {2}});
  const DeltaMatroid c = elementary_minor(with_loop, 0, MinorKind::Contract);
  CHECK(c == elementary_minor(with_loop, 0, MinorKind::Delete));
  CHECK(c.elements() == std::vector<std::string>{"2"});
  CHECK(std::vector<Mask>(c.feasible().begin(), c.feasible().end()) == std::vector<Mask>{0, 1});

  // Coloop: every feasible set contains 1.
  const DeltaMatroid with_coloop = matroid_of(2, {{1}, {1, 2}});
  CHECK(elementary_minor(with_coloop, 0, MinorKind::Delete) ==
        elementary_minor(with_coloop, 0, MinorKind::Contract));
  CHECK(elementary_minor(with_coloop, 0, MinorKind::Delete).feasible().size() == 2);
}

TEST_CASE("width profiles") {
  CHECK(width_profile(excluded_minor(4)) == WidthProfile{0, 2, 2});
  CHECK(width_profile(excluded_minor(5)) == WidthProfile{0, 4, 4});
  CHECK(width_profile(build_dn(7)) == WidthProfile{0, 6, 6});
}

TEST_CASE("twist_profile matches the profile of the materialised twist") {
  sampling::Engine rng(5);
  for (int i = 0; i < 300; ++i) {
    const DeltaMatroid d = sampling::random_delta_matroid(rng, 7);
    const Mask a = sampling::random_subset(rng, d.size());
    CHECK(twist_profile(d.feasible(), a) == width_profile(twist(d, a)));
  }
}

TEST_CASE("loops and coloops") {
  CHECK(loops_and_coloops(matroid_of(2, {{}, {2}})) == LoopsColoops{0b01, 0});
  CHECK(loops_and_coloops(matroid_of(1, {{1}})) == LoopsColoops{0, 0b1});
  CHECK(loops_and_coloops(excluded_minor(4)) == LoopsColoops{0, 0});
}

TEST_CASE("extremal matroids") {
  const DeltaMatroid& s1 = excluded_minor(1);
  CHECK(extremal_matroid(s1, Extremal::Upper) == std::vector<Mask>{0b111});
  CHECK(extremal_matroid(s1, Extremal::Lower) == std::vector<Mask>{0});
  CHECK(extremal_matroid(excluded_minor(4), Extremal::Upper) ==
        family_of({{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}}));
}

TEST_CASE("parity, normality and trimming") {
  CHECK(parity(build_dn(5)) == Parity::Even);
  CHECK(parity(excluded_minor(1)) == Parity::Odd);
  CHECK(is_normal(excluded_minor(1)));
  CHECK_FALSE(is_normal(matroid_of(1, {{1}})));

  const DeltaMatroid trimmed = trim_unused(matroid_of(2, {{}, {2}}));
  CHECK(trimmed.elements() == std::vector<std::string>{"2"});
  CHECK(std::vector<Mask>(trimmed.feasible().begin(), trimmed.feasible().end()) ==
        std::vector<Mask>{0, 1});
}

TEST_CASE("minors of a non-even delta-matroid can be even") {
  // Parity is only inherited by minors in the even case; S1 shows the other
  // direction fails.
  const DeltaMatroid& s1 = excluded_minor(1);
  CHECK(parity(s1) == Parity::Odd);
  CHECK(parity(elementary_minor(s1, 0, MinorKind::Delete)) == Parity::Even);
}

TEST_CASE("twist and minors stay inside the class, exhaustively up to four elements") {
  for (int n = 1; n <= 4; ++n) {
    for (const DeltaMatroid& d : sampling::all_delta_matroids(n)) {
      for (Mask a = 0; a < bit(n); ++a) {
        REQUIRE(std::holds_alternative<DeltaMatroid>(validate_sea(twist(d, a).system())));
      }
      for (int e = 0; e < n; ++e) {
        for (MinorKind k : {MinorKind::Delete, MinorKind::Contract}) {
          REQUIRE(std::holds_alternative<DeltaMatroid>(
              validate_sea(elementary_minor(d, e, k).system())));
        }
      }
    }
  }
}
