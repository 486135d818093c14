#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "deltamat/core.hpp"

namespace deltamat {

/// All even-cardinality subsets of an n-element ground set.
DeltaMatroid build_dn(int n);

/// Exhaustive enumeration is refused above this size.
inline constexpr int kExhaustiveMaxElements = 6;

/// Every delta-matroid whose family contains the empty set and only
/// even-cardinality sets. With up_to_iso, one representative per class
/// (its lexicographically least family), ordered by canonical form.
std::vector<DeltaMatroid> enumerate_even_normal(int n, bool up_to_iso, int workers = 1);

struct Violation {
  std::vector<Mask> family;  // over the untrimmed ground set
  std::string canonical_hex;
  std::string polynomial;
  bool before_trim = false;
  bool after_trim = false;
  int trimmed_size = 0;
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Labelled counts are over every family found; *_classes count isomorphism
/// classes.
struct SearchReport {
  int n = 0;
  bool sampled = false;
  std::uint64_t seed = 0;
  std::uint64_t candidates = 0;  // exhaustive: 2^(even subsets - 1); sampled: trials
  std::uint64_t scanned = 0;     // families checked in full
  std::uint64_t sea_valid = 0;
  std::uint64_t even_normal = 0;
  std::uint64_t iso_classes = 0;
  std::uint64_t non_binary = 0;
  std::uint64_t non_binary_classes = 0;
  std::uint64_t single_term = 0;
  std::uint64_t single_term_classes = 0;
  std::vector<Violation> violations;
  std::chrono::duration<double> elapsed{};
};

/// Every even normal non-binary delta-matroid on n elements must have a twist
/// polynomial with more than one term; the report lists those that do not.
/// Output is independent of the worker count.
SearchReport verify_main_theorem(int n, int workers = 1);

/// Rejection sampling: each nonempty even subset joins the family with
/// probability 1/2, the empty set always; families failing the exchange
/// axiom are discarded. Reproducible from the seed for any worker count.
SearchReport sample_search(int n, std::uint64_t trials, std::uint64_t seed, int workers = 1);

/// Human-readable, stable across runs. Elapsed time is not included.
std::string format_report_text(const SearchReport& r);
/// key=value lines, stable across runs.
std::string format_report_kv(const SearchReport& r);

enum class WidthCondition {
  ElementInEveryMaximum,  // some x lies in every maximum feasible set
  PairOutsideMaximum,     // feasible {a,b} and maximum F with a, b not in F
  GroundFeasible,         // E is feasible but the family is not 2^E
};

struct ConditionFiring {
  WidthCondition condition;
  Mask twist = 0;     // twisting by this set changes the width
  Mask maximum = 0;   // the maximum feasible set involved, when relevant
  int width_delta = 0;  // w(D*twist) - w(D)
  friend bool operator==(const ConditionFiring&, const ConditionFiring&) = default;
};

/// Each condition that fires forces a twist with a different width. Needs a
/// normal even delta-matroid; throws PreconditionError otherwise.
std::vector<ConditionFiring> check_necessary_conditions(const DeltaMatroid& d);

std::string to_string(WidthCondition c);

}  // namespace deltamat
