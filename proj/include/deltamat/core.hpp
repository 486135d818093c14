#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace deltamat {

/// Subset of the ground set {0..n-1}; bit i set iff element i is present.
using Mask = std::uint32_t;

inline constexpr int kMaxElements = 30;

/// Malformed user input: unknown labels, duplicate sets, oversize ground sets.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its domain (e.g. a non-normal argument).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Two independent routes disagreed, or a closed operation produced garbage.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr Mask bit(int i) { return Mask{1} << i; }
constexpr Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }
constexpr int popcount(Mask m) { return std::popcount(m); }

/// Labelled ground set plus a sorted, duplicate-free family of feasible masks.
class SetSystem {
 public:
  /// Sorts the family. Throws InputError on duplicate labels, duplicate or
  /// out-of-range masks, an empty family, or more than kMaxElements elements.
  SetSystem(std::vector<std::string> elements, std::vector<Mask> feasible);

  /// Elements labelled "1".."n".
  static SetSystem with_default_labels(int n, std::vector<Mask> feasible);

  int size() const { return static_cast<int>(elements_.size()); }
  Mask ground() const { return full_mask(size()); }
  const std::vector<std::string>& elements() const { return elements_; }
  std::span<const Mask> feasible() const { return feasible_; }
  bool contains(Mask m) const;

  /// Throws InputError naming the label if it is not in the ground set.
  int index_of(std::string_view label) const;
  Mask mask_of(std::span<const std::string> labels) const;
  std::vector<std::string> labels_of(Mask m) const;

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

 private:
  std::vector<std::string> elements_;
  std::vector<Mask> feasible_;
};

std::vector<std::string> default_labels(int n);

/// Witness that the symmetric exchange axiom fails: no y in first^second
/// makes first^{element,y} feasible.
struct SeaViolation {
  Mask first = 0;
  Mask second = 0;
  int element = 0;
  friend bool operator==(const SeaViolation&, const SeaViolation&) = default;
};

namespace detail {
struct Trusted;
}

/// A set system known to satisfy the symmetric exchange axiom. Only
/// validate_sea and the closed operations below can produce one.
class DeltaMatroid {
 public:
  const SetSystem& system() const { return system_; }
  int size() const { return system_.size(); }
  Mask ground() const { return system_.ground(); }
  const std::vector<std::string>& elements() const { return system_.elements(); }
  std::span<const Mask> feasible() const { return system_.feasible(); }
  bool contains(Mask m) const { return system_.contains(m); }

  friend bool operator==(const DeltaMatroid&, const DeltaMatroid&) = default;

 private:
  friend struct detail::Trusted;
  explicit DeltaMatroid(SetSystem s) : system_(std::move(s)) {}
  SetSystem system_;
};

using SeaResult = std::variant<DeltaMatroid, SeaViolation>;

SeaResult validate_sea(const SetSystem& s, int workers = 1);

/// Like validate_sea but throws InputError describing the violation.
DeltaMatroid to_delta_matroid(const SetSystem& s, int workers = 1);

DeltaMatroid twist(const DeltaMatroid& d, Mask a);
DeltaMatroid twist(const DeltaMatroid& d, std::span<const std::string> labels);
DeltaMatroid dual(const DeltaMatroid& d);

enum class MinorKind { Delete, Contract };

/// Removes element e. A loop or coloop gives the same result for both kinds.
DeltaMatroid elementary_minor(const DeltaMatroid& d, int e, MinorKind kind);

struct WidthProfile {
  int r_min = 0;
  int r_max = 0;
  int width = 0;
  friend bool operator==(const WidthProfile&, const WidthProfile&) = default;
};

WidthProfile width_profile(const DeltaMatroid& d);

/// Profile of d twisted by a, computed from |a ^ X| without building the twist.
WidthProfile twist_profile(std::span<const Mask> family, Mask a);

struct LoopsColoops {
  Mask loops = 0;
  Mask coloops = 0;
  friend bool operator==(const LoopsColoops&, const LoopsColoops&) = default;
};

LoopsColoops loops_and_coloops(const DeltaMatroid& d);

enum class Extremal { Upper, Lower };

std::vector<Mask> extremal_matroid(const DeltaMatroid& d, Extremal which);

/// Even: every feasible set has the same cardinality parity. Odd otherwise.
enum class Parity { Even, Odd };

Parity parity(const DeltaMatroid& d);
bool is_normal(const DeltaMatroid& d);

/// Drops elements that lie in no feasible set.
DeltaMatroid trim_unused(const DeltaMatroid& d);

/// Removes bit e from m, shifting higher bits down by one.
constexpr Mask squeeze_out(Mask m, int e) {
  const Mask low = m & (bit(e) - 1);
  return ((m >> (e + 1)) << e) | low;
}

std::string format_set(const SetSystem& s, Mask m);

}  // namespace deltamat
