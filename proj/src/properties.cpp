#include "deltamat/properties.hpp"

#include <algorithm>
#include <sstream>

#include "deltamat/gf2.hpp"
#include "deltamat/io.hpp"
#include "deltamat/random.hpp"

namespace deltamat::properties {

namespace {

template <typename Check>
Outcome run(std::uint64_t cases, std::uint64_t seed, Check&& check) {
  Outcome out;
  sampling::Engine rng(seed);
  for (std::uint64_t i = 0; i < cases; ++i) {
    ++out.cases;
    if (auto failure = check(rng)) {
      if (out.failures++ == 0) out.first_failure = *failure;
    }
  }
  return out;
}

std::string describe(const DeltaMatroid& d) {
  auto text = serialize_set_system(d.system());
  text.pop_back();
  return text;
}

std::optional<std::string> fail(const DeltaMatroid& d, const std::string& what) {
  return what + " on " + describe(d);
}

bool contains_sorted(std::span<const Mask> bases, Mask m) {
  return std::binary_search(bases.begin(), bases.end(), m);
}

// Visits every (F, x, x', y, y') with F, F^{x,y}, F^{x',y'} bases, x < x'
// inside F, y != y' outside F.
template <typename Visit>
std::optional<ExchangeQuad> scan_quads(std::span<const Mask> bases, int n, Visit&& visit) {
  for (Mask f : bases) {
    const Mask outside = full_mask(n) & ~f;
    for (Mask a = f; a != 0; a &= a - 1) {
      const int x = std::countr_zero(a);
      for (Mask b = a & (a - 1); b != 0; b &= b - 1) {
        const int x2 = std::countr_zero(b);
        for (Mask c = outside; c != 0; c &= c - 1) {
          const int y = std::countr_zero(c);
          for (Mask e = outside; e != 0; e &= e - 1) {
            const int y2 = std::countr_zero(e);
            if (y == y2) continue;
            if (!contains_sorted(bases, f ^ bit(x) ^ bit(y))) continue;
            if (!contains_sorted(bases, f ^ bit(x2) ^ bit(y2))) continue;
            const ExchangeQuad q{f, x, x2, y, y2};
            if (!visit(q)) return q;
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<ExchangeQuad> find_disjunction_failure(std::span<const Mask> bases, int n) {
  return scan_quads(bases, n, [&](const ExchangeQuad& q) {
    const Mask both = q.base ^ bit(q.x) ^ bit(q.y) ^ bit(q.x2) ^ bit(q.y2);
    const bool crossed = contains_sorted(bases, q.base ^ bit(q.x) ^ bit(q.y2)) &&
                         contains_sorted(bases, q.base ^ bit(q.x2) ^ bit(q.y));
    return contains_sorted(bases, both) || crossed;
  });
}

std::optional<ExchangeQuad> find_full_exchange_failure(std::span<const Mask> bases, int n) {
  return scan_quads(bases, n, [&](const ExchangeQuad& q) {
    const Mask both = q.base ^ bit(q.x) ^ bit(q.y) ^ bit(q.x2) ^ bit(q.y2);
    if (!contains_sorted(bases, both)) return true;
    for (int alpha : {q.y, q.y2}) {
      if (!contains_sorted(bases, q.base ^ bit(q.x) ^ bit(alpha))) return false;
      if (!contains_sorted(bases, q.base ^ bit(q.x2) ^ bit(alpha))) return false;
    }
    return true;
  });
}

Outcome twist_group_law(std::uint64_t cases, std::uint64_t seed, int max_n) {
  return run(cases, seed, [&](sampling::Engine& rng) -> std::optional<std::string> {
    const DeltaMatroid d = sampling::random_delta_matroid(rng, max_n);
    const Mask a = sampling::random_subset(rng, d.size());
    const Mask b = sampling::random_subset(rng, d.size());
    if (twist(twist(d, a), b) != twist(d, a ^ b)) return fail(d, "twist composition");
    if (twist(d, 0) != d) return fail(d, "empty twist");
    if (dual(d) != twist(d, d.ground())) return fail(d, "dual vs full twist");
    if (dual(dual(d)) != d) return fail(d, "dual involution");
    return std::nullopt;
  });
}

Outcome parity_preservation(std::uint64_t cases, std::uint64_t seed, int max_n) {
  return run(cases, seed, [&](sampling::Engine& rng) -> std::optional<std::string> {
    const DeltaMatroid d = sampling::random_delta_matroid(rng, max_n);
    const Parity p = parity(d);
    if (parity(twist(d, sampling::random_subset(rng, d.size()))) != p) return fail(d, "twist parity");
    if (p == Parity::Even) {
      for (int e = 0; e < d.size(); ++e) {
        for (MinorKind k : {MinorKind::Delete, MinorKind::Contract}) {
          if (parity(elementary_minor(d, e, k)) != Parity::Even) return fail(d, "minor parity");
        }
      }
    }
    return std::nullopt;
  });
}

Outcome twist_minor_commutation(std::uint64_t cases, std::uint64_t seed, int max_n) {
  return run(cases, seed, [&](sampling::Engine& rng) -> std::optional<std::string> {
    DeltaMatroid d = sampling::random_delta_matroid(rng, max_n);
    const Mask f = sampling::random_subset(rng, d.size());
    const int e = static_cast<int>(sampling::below(rng, d.size()));
    const DeltaMatroid twisted = twist(d, f);
    const Mask rest = squeeze_out(f & ~bit(e), e);
    const auto contract = [&](const DeltaMatroid& m) { return elementary_minor(m, e, MinorKind::Contract); };
    const auto remove = [&](const DeltaMatroid& m) { return elementary_minor(m, e, MinorKind::Delete); };
    if (!(f & bit(e))) {
      if (contract(twisted) != twist(contract(d), rest)) return fail(d, "contract, e not in F");
      if (remove(twisted) != twist(remove(d), rest)) return fail(d, "delete, e not in F");
    } else {
      if (contract(twisted) != twist(remove(d), rest)) return fail(d, "contract, e in F");
      if (remove(twisted) != twist(contract(d), rest)) return fail(d, "delete, e in F");
    }
    return std::nullopt;
  });
}

Outcome upper_lower_duality(std::uint64_t cases, std::uint64_t seed, int max_n) {
  return run(cases, seed, [&](sampling::Engine& rng) -> std::optional<std::string> {
    const DeltaMatroid d = sampling::random_delta_matroid(rng, max_n);
    std::vector<Mask> complemented;
    for (Mask b : extremal_matroid(d, Extremal::Upper)) complemented.push_back(d.ground() & ~b);
    std::sort(complemented.begin(), complemented.end());
    if (complemented != extremal_matroid(dual(d), Extremal::Lower)) return fail(d, "upper/lower");
    return std::nullopt;
  });
}

Outcome exchange_disjunction(std::uint64_t cases, std::uint64_t seed, int max_n) {
  return run(cases, seed, [&](sampling::Engine& rng) -> std::optional<std::string> {
    const DeltaMatroid d = sampling::random_delta_matroid(rng, max_n);
    if (auto q = find_disjunction_failure(extremal_matroid(d, Extremal::Upper), d.size())) {
      std::ostringstream os;
      os << "exchange disjunction at F=" << q->base << " x=" << q->x << " x'=" << q->x2
         << " y=" << q->y << " y'=" << q->y2;
      return fail(d, os.str());
    }
    return std::nullopt;
  });
}

Outcome matrix_round_trip(std::uint64_t cases, std::uint64_t seed, int max_n) {
  return run(cases, seed, [&](sampling::Engine& rng) -> std::optional<std::string> {
    const int n = 1 + static_cast<int>(sampling::below(rng, max_n));
    const DeltaMatroid d = matroid_from_matrix(sampling::random_symmetric_matrix(rng, n));
    const auto verdict = is_binary(d, BinaryMethod::Matrix);
    if (!verdict.binary) return fail(d, "D(A) not recognised as binary");
    if (matroid_from_matrix(verdict.matrix_witness->matrix) != twist(d, verdict.matrix_witness->twist)) {
      return fail(d, "matrix witness does not reproduce D");
    }
    return std::nullopt;
  });
}

}  // namespace deltamat::properties
