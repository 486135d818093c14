#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "deltamat/core.hpp"

namespace deltamat {

/// n followed by the lexicographically least relabelled feasible list, each
/// mask big-endian in four bytes. Equal iff the systems are isomorphic.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;
  auto operator<=>(const CanonicalForm&) const = default;
  std::string hex() const;
};

/// Up to kExactIsoElements every permutation is tried. Above that the search
/// is restricted to permutations that sort elements by an isomorphism
/// invariant, which is still exact. kIsoCap bounds both.
inline constexpr int kExactIsoElements = 8;
inline constexpr int kIsoCap = 12;

CanonicalForm canonical_form(int n, std::span<const Mask> family);
CanonicalForm canonical_form(const SetSystem& s);
bool is_isomorphic(const SetSystem& a, const SetSystem& b);

/// Element i of s becomes element perm[i]; labels move with their elements.
SetSystem relabel(const SetSystem& s, std::span<const int> perm);

/// Deletes the elements of `deleted`, then contracts those of `contracted`,
/// one at a time in ascending index order.
DeltaMatroid minor(const DeltaMatroid& d, Mask deleted, Mask contracted);

/// Applies the given (element, kind) steps in order; elements are indices
/// of the original ground set.
DeltaMatroid minor_by_steps(const DeltaMatroid& d, std::span<const std::pair<int, MinorKind>> steps);

struct MinorEntry {
  Mask deleted = 0;
  Mask contracted = 0;
  DeltaMatroid minor;
};

/// Visits every disjoint (deleted, contracted) pair, fewest removed elements
/// first, then by deleted mask, then by contracted mask. Return false from
/// the visitor to stop.
void for_each_minor(const DeltaMatroid& d, const std::function<bool(const MinorEntry&)>& visit);
std::vector<MinorEntry> minors(const DeltaMatroid& d);

/// S1..S5 of the excluded-minor characterisation of binary delta-matroids.
const DeltaMatroid& excluded_minor(int i);

class ExcludedMinorTable {
 public:
  struct Entry {
    int index = 0;  // 1..5
    Mask twist = 0;
  };

  static const ExcludedMinorTable& instance();

  /// Smallest (index, twist) whose twisted excluded minor has this form.
  std::optional<Entry> lookup(const CanonicalForm& form) const;
  std::size_t size() const { return forms_.size(); }

 private:
  ExcludedMinorTable();
  std::vector<std::pair<CanonicalForm, Entry>> forms_;  // sorted by form
};

struct ExcludedMinorWitness {
  Mask deleted = 0;
  Mask contracted = 0;
  int index = 0;
  Mask twist = 0;  // over the ground set of S_index
  friend bool operator==(const ExcludedMinorWitness&, const ExcludedMinorWitness&) = default;
};

/// Looks for a minor on three or four elements isomorphic to a twist of S1..S5.
std::optional<ExcludedMinorWitness> contains_excluded_minor(const DeltaMatroid& d);

/// F, F^{x1,y1}, F^{x2,y2}, F^{x1,y2}, F^{x2,y1}, F^{x1,y1,x2,y2} with
/// x1, x2 in F and y1, y2 outside F.
struct S4Pattern {
  Mask base = 0;
  int x1 = 0;
  int x2 = 0;
  int y1 = 0;
  int y2 = 0;
  std::array<Mask, 6> sets() const;
  friend bool operator==(const S4Pattern&, const S4Pattern&) = default;
};

bool is_s4_pattern(const DeltaMatroid& d, const S4Pattern& p);

/// Tries bases of the upper matroid first, then the remaining feasible sets
/// in ascending mask order.
std::optional<S4Pattern> find_s4_pattern(const DeltaMatroid& d);

}  // namespace deltamat
