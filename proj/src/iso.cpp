#include "deltamat/iso.hpp"

#include <algorithm>
#include <numeric>

#include "detail.hpp"

namespace deltamat {

std::string CanonicalForm::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

namespace {

Mask apply_permutation(Mask m, std::span<const int> position) {
  Mask out = 0;
  for (; m != 0; m &= m - 1) out |= bit(position[std::countr_zero(m)]);
  return out;
}

// Element classes that a canonical relabelling may permute among themselves,
// listed in the order their target positions are assigned.
std::vector<std::vector<int>> permutable_classes(int n, std::span<const Mask> family) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (n <= kExactIsoElements) return {order};

  // Invariant: how many feasible sets of each size contain the element.
  std::vector<std::vector<int>> signature(n, std::vector<int>(n + 1, 0));
  for (Mask f : family) {
    const int size = popcount(f);
    for (Mask m = f; m != 0; m &= m - 1) ++signature[std::countr_zero(m)][size];
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return signature[a] < signature[b]; });
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < n; ++i) {
    if (i == 0 || signature[order[i]] != signature[order[i - 1]]) classes.emplace_back();
    classes.back().push_back(order[i]);
  }
  return classes;
}

}  // namespace

CanonicalForm canonical_form(int n, std::span<const Mask> family) {
  if (n > kIsoCap) {
    throw InputError("canonical forms are limited to " + std::to_string(kIsoCap) + " elements");
  }
  auto classes = permutable_classes(n, family);
  for (auto& c : classes) std::sort(c.begin(), c.end());

  std::vector<int> position(n);
  std::vector<Mask> best;
  std::vector<Mask> candidate(family.size());
  bool more = true;
  while (more) {
    int offset = 0;
    for (const auto& c : classes) {
      for (std::size_t j = 0; j < c.size(); ++j) position[c[j]] = offset + static_cast<int>(j);
      offset += static_cast<int>(c.size());
    }
    for (std::size_t i = 0; i < family.size(); ++i) {
      candidate[i] = apply_permutation(family[i], position);
    }
    std::sort(candidate.begin(), candidate.end());
    if (best.empty() || candidate < best) best = candidate;

    // Odometer over the per-class permutations.
    more = false;
    for (auto& c : classes) {
      if (std::next_permutation(c.begin(), c.end())) {
        more = true;
        break;
      }
    }
  }

  CanonicalForm form;
  form.bytes.reserve(1 + 4 * best.size());
  form.bytes.push_back(static_cast<std::uint8_t>(n));
  for (Mask m : best) {
    for (int shift = 24; shift >= 0; shift -= 8) {
      form.bytes.push_back(static_cast<std::uint8_t>(m >> shift));
    }
  }
  return form;
}

CanonicalForm canonical_form(const SetSystem& s) { return canonical_form(s.size(), s.feasible()); }

bool is_isomorphic(const SetSystem& a, const SetSystem& b) {
  if (a.size() != b.size() || a.feasible().size() != b.feasible().size()) return false;
  return canonical_form(a) == canonical_form(b);
}

SetSystem relabel(const SetSystem& s, std::span<const int> perm) {
  const int n = s.size();
  if (static_cast<int>(perm.size()) != n) throw InputError("permutation has the wrong length");
  std::vector<std::string> labels(n);
  std::vector<bool> used(n, false);
  for (int i = 0; i < n; ++i) {
    if (perm[i] < 0 || perm[i] >= n || used[perm[i]]) throw InputError("not a permutation");
    used[perm[i]] = true;
    labels[perm[i]] = s.elements()[i];
  }
  std::vector<Mask> family;
  family.reserve(s.feasible().size());
  for (Mask f : s.feasible()) family.push_back(apply_permutation(f, perm));
  return SetSystem(std::move(labels), std::move(family));
}

namespace {

// One elementary minor on an uncompressed family; e keeps its bit position
// and is cleared from every surviving set.
void minor_step(std::vector<Mask>& family, int e, MinorKind kind) {
  const Mask b = bit(e);
  Mask any = 0;
  Mask all = ~Mask{0};
  for (Mask f : family) {
    any |= f;
    all &= f;
  }
  const bool loop_or_coloop = !(any & b) || (all & b);
  std::vector<Mask> out;
  out.reserve(family.size());
  for (Mask f : family) {
    if (loop_or_coloop || (kind == MinorKind::Delete) == !(f & b)) out.push_back(f & ~b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  family = std::move(out);
}

std::vector<Mask> minor_family(std::span<const Mask> feasible, Mask deleted, Mask contracted) {
  std::vector<Mask> family(feasible.begin(), feasible.end());
  for (Mask m = deleted; m != 0; m &= m - 1) minor_step(family, std::countr_zero(m), MinorKind::Delete);
  for (Mask m = contracted; m != 0; m &= m - 1) {
    minor_step(family, std::countr_zero(m), MinorKind::Contract);
  }
  return family;
}

DeltaMatroid compress(const DeltaMatroid& d, std::vector<Mask> family, Mask removed) {
  auto labels = d.elements();
  for (int e = d.size() - 1; e >= 0; --e) {
    if (!(removed & bit(e))) continue;
    for (Mask& f : family) f = squeeze_out(f, e);
    labels.erase(labels.begin() + e);
  }
  return detail::Trusted::make(SetSystem(std::move(labels), std::move(family)));
}

}  // namespace

DeltaMatroid minor(const DeltaMatroid& d, Mask deleted, Mask contracted) {
  if ((deleted & contracted) != 0) throw InputError("deleted and contracted sets overlap");
  if (((deleted | contracted) & ~d.ground()) != 0) throw InputError("minor uses unknown elements");
  return compress(d, minor_family(d.feasible(), deleted, contracted), deleted | contracted);
}

DeltaMatroid minor_by_steps(const DeltaMatroid& d,
                            std::span<const std::pair<int, MinorKind>> steps) {
  std::vector<Mask> family(d.feasible().begin(), d.feasible().end());
  Mask removed = 0;
  for (auto [e, kind] : steps) {
    if (e < 0 || e >= d.size() || (removed & bit(e))) {
      throw InputError("minor step names an unknown or already removed element");
    }
    minor_step(family, e, kind);
    removed |= bit(e);
  }
  return compress(d, std::move(family), removed);
}

namespace {

// Calls visit(deleted, contracted) in the documented order.
template <typename Visit>
void for_each_minor_pair(int n, int min_removed, int max_removed, Visit&& visit) {
  const Mask subsets = bit(n);
  for (int removed = min_removed; removed <= max_removed; ++removed) {
    for (Mask del = 0; del < subsets; ++del) {
      if (popcount(del) > removed) continue;
      for (Mask con = 0; con < subsets; ++con) {
        if ((con & del) != 0 || popcount(del | con) != removed) continue;
        if (!visit(del, con)) return;
      }
    }
  }
}

}  // namespace

void for_each_minor(const DeltaMatroid& d, const std::function<bool(const MinorEntry&)>& visit) {
  for_each_minor_pair(d.size(), 0, d.size(), [&](Mask del, Mask con) {
    return visit(MinorEntry{del, con, minor(d, del, con)});
  });
}

std::vector<MinorEntry> minors(const DeltaMatroid& d) {
  std::vector<MinorEntry> out;
  for_each_minor(d, [&](const MinorEntry& e) {
    out.push_back(e);
    return true;
  });
  return out;
}

const DeltaMatroid& excluded_minor(int i) {
  static const std::array<DeltaMatroid, 5> table = {
      to_delta_matroid(SetSystem::with_default_labels(3, {0b000, 0b011, 0b101, 0b110, 0b111})),
      to_delta_matroid(
          SetSystem::with_default_labels(3, {0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110})),
      to_delta_matroid(
          SetSystem::with_default_labels(3, {0b000, 0b010, 0b100, 0b011, 0b101, 0b111})),
      to_delta_matroid(SetSystem::with_default_labels(
          4, {0b0000, 0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100})),
      to_delta_matroid(
          SetSystem::with_default_labels(4, {0b0000, 0b0011, 0b1001, 0b0110, 0b1100, 0b1111})),
  };
  if (i < 1 || i > 5) throw InputError("excluded minors are numbered 1..5");
  return table[i - 1];
}

ExcludedMinorTable::ExcludedMinorTable() {
  for (int i = 1; i <= 5; ++i) {
    const DeltaMatroid& s = excluded_minor(i);
    for (Mask b = 0; b <= s.ground(); ++b) {
      const DeltaMatroid t = twist(s, b);
      forms_.emplace_back(canonical_form(t.system()), Entry{i, b});
    }
  }
  // Stable sort keeps the smallest (index, twist) first among equal forms.
  std::stable_sort(forms_.begin(), forms_.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  forms_.erase(std::unique(forms_.begin(), forms_.end(),
                           [](const auto& a, const auto& b) { return a.first == b.first; }),
               forms_.end());
}

const ExcludedMinorTable& ExcludedMinorTable::instance() {
  static const ExcludedMinorTable table;
  return table;
}

std::optional<ExcludedMinorTable::Entry> ExcludedMinorTable::lookup(
    const CanonicalForm& form) const {
  auto it = std::lower_bound(forms_.begin(), forms_.end(), form,
                             [](const auto& entry, const CanonicalForm& f) { return entry.first < f; });
  if (it == forms_.end() || it->first != form) return std::nullopt;
  return it->second;
}

std::optional<ExcludedMinorWitness> contains_excluded_minor(const DeltaMatroid& d) {
  const int n = d.size();
  if (n < 3) return std::nullopt;
  const auto& table = ExcludedMinorTable::instance();
  std::optional<ExcludedMinorWitness> found;
  for_each_minor_pair(n, std::max(0, n - 4), n - 3, [&](Mask del, Mask con) {
    const auto family = minor_family(d.feasible(), del, con);
    // Twists of S1..S5 have between 5 and 7 feasible sets.
    if (family.size() < 5 || family.size() > 7) return true;
    std::vector<Mask> compact = family;
    const Mask removed = del | con;
    for (int e = n - 1; e >= 0; --e) {
      if (!(removed & bit(e))) continue;
      for (Mask& f : compact) f = squeeze_out(f, e);
    }
    if (auto entry = table.lookup(canonical_form(n - popcount(removed), compact))) {
      found = ExcludedMinorWitness{del, con, entry->index, entry->twist};
      return false;
    }
    return true;
  });
  return found;
}

std::array<Mask, 6> S4Pattern::sets() const {
  const Mask a = bit(x1) | bit(y1);
  const Mask b = bit(x2) | bit(y2);
  return {base,
          base ^ a,
          base ^ b,
          base ^ bit(x1) ^ bit(y2),
          base ^ bit(x2) ^ bit(y1),
          base ^ a ^ b};
}

bool is_s4_pattern(const DeltaMatroid& d, const S4Pattern& p) {
  const Mask inside = bit(p.x1) | bit(p.x2);
  const Mask outside = bit(p.y1) | bit(p.y2);
  if (p.x1 == p.x2 || p.y1 == p.y2) return false;
  if ((p.base & inside) != inside || (p.base & outside) != 0) return false;
  if (((inside | outside) & ~d.ground()) != 0) return false;
  for (Mask s : p.sets()) {
    if (!d.contains(s)) return false;
  }
  return true;
}

std::optional<S4Pattern> find_s4_pattern(const DeltaMatroid& d) {
  if (d.feasible().size() < 6) return std::nullopt;
  const std::vector<Mask> upper = extremal_matroid(d, Extremal::Upper);
  std::vector<Mask> order = upper;
  for (Mask f : d.feasible()) {
    if (!std::binary_search(upper.begin(), upper.end(), f)) order.push_back(f);
  }

  for (Mask f : order) {
    const Mask outside = d.ground() & ~f;
    for (Mask a = f; a != 0; a &= a - 1) {
      const int x1 = std::countr_zero(a);
      for (Mask b = a & (a - 1); b != 0; b &= b - 1) {
        const int x2 = std::countr_zero(b);
        for (Mask c = outside; c != 0; c &= c - 1) {
          const int y1 = std::countr_zero(c);
          for (Mask e = c & (c - 1); e != 0; e &= e - 1) {
            const S4Pattern p{f, x1, x2, y1, std::countr_zero(e)};
            if (is_s4_pattern(d, p)) return p;
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace deltamat
