#include "deltamat/core.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "deltamat/kernels.hpp"
#include "detail.hpp"

namespace deltamat {

namespace {

std::vector<Mask> sorted_unique(std::vector<Mask> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

}  // namespace

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

SetSystem::SetSystem(std::vector<std::string> elements, std::vector<Mask> feasible)
    : elements_(std::move(elements)), feasible_(std::move(feasible)) {
  if (static_cast<int>(elements_.size()) > kMaxElements) {
    throw InputError("ground set has " + std::to_string(elements_.size()) +
                     " elements; at most " + std::to_string(kMaxElements) + " are supported");
  }
  std::set<std::string_view> seen;
  for (const auto& label : elements_) {
    if (!seen.insert(label).second) throw InputError("duplicate element label '" + label + "'");
  }
  if (feasible_.empty()) throw InputError("feasible family is empty");
  const Mask ground = full_mask(size());
  std::sort(feasible_.begin(), feasible_.end());
  for (std::size_t i = 0; i < feasible_.size(); ++i) {
    if ((feasible_[i] & ~ground) != 0) {
      throw InputError("feasible mask " + std::to_string(feasible_[i]) +
                       " uses elements outside the ground set");
    }
    if (i > 0 && feasible_[i] == feasible_[i - 1]) {
      throw InputError("duplicate feasible set " + format_set(*this, feasible_[i]));
    }
  }
}

SetSystem SetSystem::with_default_labels(int n, std::vector<Mask> feasible) {
  return SetSystem(default_labels(n), std::move(feasible));
}

bool SetSystem::contains(Mask m) const {
  return std::binary_search(feasible_.begin(), feasible_.end(), m);
}

int SetSystem::index_of(std::string_view label) const {
  auto it = std::find(elements_.begin(), elements_.end(), label);
  if (it == elements_.end()) throw InputError("unknown element label '" + std::string(label) + "'");
  return static_cast<int>(it - elements_.begin());
}

Mask SetSystem::mask_of(std::span<const std::string> labels) const {
  Mask m = 0;
  for (const auto& label : labels) {
    const Mask b = bit(index_of(label));
    if (m & b) throw InputError("element label '" + label + "' repeated in a set");
    m |= b;
  }
  return m;
}

std::vector<std::string> SetSystem::labels_of(Mask m) const {
  std::vector<std::string> out;
  for (int i = 0; i < size(); ++i) {
    if (m & bit(i)) out.push_back(elements_[i]);
  }
  return out;
}

std::string format_set(const SetSystem& s, Mask m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i = 0; i < s.size(); ++i) {
    if (!(m & bit(i))) continue;
    if (!first) os << ',';
    os << s.elements()[i];
    first = false;
  }
  os << '}';
  return os.str();
}

DeltaMatroid detail::Trusted::make(SetSystem s) {
#ifndef NDEBUG
  if (kernels::sea_violation_serial(s.feasible(), s.size())) {
    throw ConsistencyError("closed operation produced a family violating the exchange axiom");
  }
#endif
  return DeltaMatroid(std::move(s));
}

DeltaMatroid detail::Trusted::validated(SetSystem s) { return DeltaMatroid(std::move(s)); }

SeaResult validate_sea(const SetSystem& s, int workers) {
  auto violation = workers == 1 ? kernels::sea_violation_serial(s.feasible(), s.size())
                                : kernels::sea_violation_parallel(s.feasible(), s.size(), workers);
  if (violation) return *violation;
  return detail::Trusted::validated(s);
}

DeltaMatroid to_delta_matroid(const SetSystem& s, int workers) {
  auto result = validate_sea(s, workers);
  if (auto* v = std::get_if<SeaViolation>(&result)) {
    throw InputError("exchange axiom fails for F1=" + format_set(s, v->first) +
                     ", F2=" + format_set(s, v->second) + ", x=" + s.elements()[v->element]);
  }
  return std::get<DeltaMatroid>(std::move(result));
}

DeltaMatroid twist(const DeltaMatroid& d, Mask a) {
  if ((a & ~d.ground()) != 0) throw InputError("twisting set uses elements outside the ground set");
  std::vector<Mask> out;
  out.reserve(d.feasible().size());
  for (Mask x : d.feasible()) out.push_back(x ^ a);
  return detail::Trusted::make(SetSystem(d.elements(), std::move(out)));
}

DeltaMatroid twist(const DeltaMatroid& d, std::span<const std::string> labels) {
  return twist(d, d.system().mask_of(labels));
}

DeltaMatroid dual(const DeltaMatroid& d) { return twist(d, d.ground()); }

DeltaMatroid elementary_minor(const DeltaMatroid& d, int e, MinorKind kind) {
  if (e < 0 || e >= d.size()) throw InputError("element index out of range");
  const auto lc = loops_and_coloops(d);
  const Mask b = bit(e);
  std::vector<Mask> out;
  for (Mask f : d.feasible()) {
    if ((lc.loops | lc.coloops) & b) {
      out.push_back(squeeze_out(f, e));
    } else if (kind == MinorKind::Delete) {
      if (!(f & b)) out.push_back(squeeze_out(f, e));
    } else if (f & b) {
      out.push_back(squeeze_out(f, e));
    }
  }
  auto labels = d.elements();
  labels.erase(labels.begin() + e);
  return detail::Trusted::make(SetSystem(std::move(labels), sorted_unique(std::move(out))));
}

WidthProfile twist_profile(std::span<const Mask> family, Mask a) {
  int lo = kMaxElements + 1;
  int hi = -1;
  for (Mask x : family) {
    const int c = popcount(a ^ x);
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  return {lo, hi, hi - lo};
}

WidthProfile width_profile(const DeltaMatroid& d) { return twist_profile(d.feasible(), 0); }

LoopsColoops loops_and_coloops(const DeltaMatroid& d) {
  Mask any = 0;
  Mask all = d.ground();
  for (Mask f : d.feasible()) {
    any |= f;
    all &= f;
  }
  return {d.ground() & ~any, all};
}

std::vector<Mask> extremal_matroid(const DeltaMatroid& d, Extremal which) {
  const auto profile = width_profile(d);
  const int target = which == Extremal::Upper ? profile.r_max : profile.r_min;
  std::vector<Mask> bases;
  for (Mask f : d.feasible()) {
    if (popcount(f) == target) bases.push_back(f);
  }
  return bases;
}

Parity parity(const DeltaMatroid& d) {
  const int p = popcount(d.feasible().front()) & 1;
  for (Mask f : d.feasible()) {
    if ((popcount(f) & 1) != p) return Parity::Odd;
  }
  return Parity::Even;
}

bool is_normal(const DeltaMatroid& d) { return d.feasible().front() == 0; }

DeltaMatroid trim_unused(const DeltaMatroid& d) {
  const Mask loops = loops_and_coloops(d).loops;
  std::vector<Mask> family(d.feasible().begin(), d.feasible().end());
  auto labels = d.elements();
  for (int e = d.size() - 1; e >= 0; --e) {
    if (!(loops & bit(e))) continue;
    for (Mask& f : family) f = squeeze_out(f, e);
    labels.erase(labels.begin() + e);
  }
  return detail::Trusted::make(SetSystem(std::move(labels), std::move(family)));
}

}  // namespace deltamat
