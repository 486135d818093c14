#pragma once

#include <initializer_list>
#include <vector>

#include "deltamat/core.hpp"

namespace deltamat::test {

// Sets written with 1-based labels, as on paper: {{}, {1, 2}} etc.
inline Mask set_of(std::initializer_list<int> labels) {
  Mask m = 0;
  for (int l : labels) m |= bit(l - 1);
  return m;
}

inline std::vector<Mask> family_of(std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<Mask> out;
  for (auto s : sets) out.push_back(set_of(s));
  return out;
}

inline SetSystem system_of(int n, std::initializer_list<std::initializer_list<int>> sets) {
  return SetSystem::with_default_labels(n, family_of(sets));
}

inline DeltaMatroid matroid_of(int n, std::initializer_list<std::initializer_list<int>> sets) {
  return to_delta_matroid(system_of(n, sets));
}

// Straight from the definition: no precomputed tables, no bitmaps.
inline bool sea_holds_naive(const std::vector<Mask>& family, int n) {
  auto has = [&](Mask m) {
    for (Mask f : family) {
      if (f == m) return true;
    }
    return false;
  };
  for (Mask f1 : family) {
    for (Mask f2 : family) {
      for (int x = 0; x < n; ++x) {
        if (!((f1 ^ f2) & bit(x))) continue;
        bool ok = false;
        for (int y = 0; y < n; ++y) {
          if (((f1 ^ f2) & bit(y)) && has(f1 ^ (bit(x) | bit(y)))) ok = true;
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

inline std::vector<Mask> family_from_code(std::uint64_t code, int n) {
  std::vector<Mask> family;
  for (Mask m = 0; m < bit(n); ++m) {
    if ((code >> m) & 1U) family.push_back(m);
  }
  return family;
}

}  // namespace deltamat::test
