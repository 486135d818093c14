#include "deltamat/search.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "deltamat/gf2.hpp"
#include "deltamat/iso.hpp"
#include "deltamat/kernels.hpp"
#include "deltamat/poly.hpp"
#include "detail.hpp"

namespace deltamat {

DeltaMatroid build_dn(int n) {
  if (n < 1 || n > kMaxElements) throw InputError("D^n needs 1 <= n <= 30");
  std::vector<Mask> family;
  family.reserve(std::size_t{1} << (n - 1));
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < subsets; ++m) {
    if (popcount(static_cast<Mask>(m)) % 2 == 0) family.push_back(static_cast<Mask>(m));
  }
  return detail::Trusted::make(SetSystem::with_default_labels(n, std::move(family)));
}

namespace {

// ---------------------------------------------------------------------------
// Exhaustive enumeration. Ground sets have at most six elements, so a family
// is a 64-bit membership map over mask values.

using Members = std::uint64_t;

bool member(Members m, Mask f) { return (m >> f) & 1U; }

// A violation (F1, F2, x) is fatal once every repair F1^{x,y} is either odd
// (never a candidate) or an even mask already decided against, i.e. below
// `undecided_from` and absent. With undecided_from past every mask this is the
// full exchange-axiom check.
bool has_fatal_violation(Members included, Mask undecided_from) {
  for (Members a = included; a != 0; a &= a - 1) {
    const Mask f1 = static_cast<Mask>(std::countr_zero(a));
    for (Members b = included; b != 0; b &= b - 1) {
      const Mask f2 = static_cast<Mask>(std::countr_zero(b));
      const Mask diff = f1 ^ f2;
      for (Mask xs = diff; xs != 0; xs &= xs - 1) {
        const Mask x = bit(std::countr_zero(xs));
        bool repairable = false;
        for (Mask ys = diff; ys != 0 && !repairable; ys &= ys - 1) {
          const Mask y = bit(std::countr_zero(ys));
          const Mask r = f1 ^ x ^ (x == y ? 0 : y);
          repairable = member(included, r) || (popcount(r) % 2 == 0 && r >= undecided_from);
        }
        if (!repairable) return true;
      }
    }
  }
  return false;
}

std::vector<Mask> even_candidates(int n) {
  std::vector<Mask> out;
  for (Mask m = 1; m < bit(n); ++m) {
    if (popcount(m) % 2 == 0) out.push_back(m);
  }
  return out;
}

std::vector<Mask> to_family(Members m) {
  std::vector<Mask> out;
  for (; m != 0; m &= m - 1) out.push_back(static_cast<Mask>(std::countr_zero(m)));
  return out;
}

struct ClassInfo {
  std::vector<Mask> representative;  // lexicographically least member
  std::uint64_t count = 0;
};

using ClassMap = std::map<CanonicalForm, ClassInfo>;

void add_to_classes(ClassMap& classes, int n, std::vector<Mask> family, std::uint64_t count = 1) {
  auto form = canonical_form(n, family);
  auto [it, inserted] = classes.try_emplace(std::move(form));
  ClassInfo& info = it->second;
  if (inserted || family < info.representative) info.representative = std::move(family);
  info.count += count;
}

void merge_classes(ClassMap& into, const ClassMap& from) {
  for (const auto& [form, info] : from) {
    auto [it, inserted] = into.try_emplace(form, info);
    if (inserted) continue;
    it->second.count += info.count;
    if (info.representative < it->second.representative) {
      it->second.representative = info.representative;
    }
  }
}

struct PartitionResult {
  std::uint64_t leaves = 0;
  std::uint64_t valid = 0;
  std::vector<Members> families;  // in DFS order
  ClassMap classes;
};

class EvenFamilyDfs {
 public:
  EvenFamilyDfs(int n, bool keep_families, bool classify)
      : n_(n), candidates_(even_candidates(n)), keep_(keep_families), classify_(classify) {}

  std::size_t candidate_count() const { return candidates_.size(); }

  // Fixes the first `depth` inclusion decisions from the bits of `prefix`.
  PartitionResult run(std::size_t depth, std::uint64_t prefix) const {
    PartitionResult out;
    Members included = 1;  // the empty set
    for (std::size_t k = 0; k < depth; ++k) {
      if ((prefix >> k) & 1U) included |= Members{1} << candidates_[k];
    }
    if (!has_fatal_violation(included, next_undecided(depth))) descend(depth, included, out);
    return out;
  }

 private:
  Mask next_undecided(std::size_t k) const {
    return k < candidates_.size() ? candidates_[k] : bit(n_);
  }

  void descend(std::size_t k, Members included, PartitionResult& out) const {
    if (k == candidates_.size()) {
      ++out.leaves;
      if (has_fatal_violation(included, bit(n_))) return;
      ++out.valid;
      if (keep_) out.families.push_back(included);
      if (classify_) add_to_classes(out.classes, n_, to_family(included));
      return;
    }
    const Mask undecided = next_undecided(k + 1);
    const Members with = included | (Members{1} << candidates_[k]);
    if (!has_fatal_violation(with, undecided)) descend(k + 1, with, out);
    if (!has_fatal_violation(included, undecided)) descend(k + 1, included, out);
  }

  int n_;
  std::vector<Mask> candidates_;
  bool keep_;
  bool classify_;
};

constexpr std::size_t kPartitionDepth = 6;

std::vector<PartitionResult> run_partitions(int n, bool keep, bool classify, int workers) {
  if (n < 0 || n > kExhaustiveMaxElements) {
    throw InputError("exhaustive enumeration supports n <= " +
                     std::to_string(kExhaustiveMaxElements) + "; use sampled search beyond");
  }
  const EvenFamilyDfs dfs(n, keep, classify);
  const std::size_t depth = std::min(kPartitionDepth, dfs.candidate_count());
  const auto partitions = static_cast<std::int64_t>(std::uint64_t{1} << depth);
  std::vector<PartitionResult> results(partitions);
#pragma omp parallel for num_threads(kernels::effective_workers(workers)) schedule(dynamic, 1)
  for (std::int64_t p = 0; p < partitions; ++p) {
    results[p] = dfs.run(depth, static_cast<std::uint64_t>(p));
  }
  return results;
}

struct ClassVerdict {
  bool binary = false;
  bool single_term = false;
  std::optional<Violation> violation;
};

ClassVerdict classify(int n, const std::vector<Mask>& family) {
  const DeltaMatroid d = detail::Trusted::make(SetSystem::with_default_labels(n, family));
  ClassVerdict v;
  v.binary = is_binary(d, BinaryMethod::Both).binary;
  const TwistPolynomial poly = twist_polynomial(d);
  v.single_term = is_single_term(poly);

  const DeltaMatroid trimmed = trim_unused(d);
  const bool trimmed_binary = is_binary(trimmed, BinaryMethod::Both).binary;
  const bool trimmed_single = is_single_term(twist_polynomial(trimmed));

  const bool before = !v.binary && v.single_term;
  const bool after = !trimmed_binary && trimmed_single;
  if (before || after) {
    v.violation = Violation{family,       canonical_form(n, family).hex(), to_text(poly), before,
                            after,        trimmed.size()};
  }
  return v;
}

void fill_classification(SearchReport& report, const ClassMap& classes, int workers) {
  std::vector<const ClassMap::value_type*> entries;
  entries.reserve(classes.size());
  for (const auto& entry : classes) entries.push_back(&entry);
  std::vector<ClassVerdict> verdicts(entries.size());
  const auto count = static_cast<std::int64_t>(entries.size());
#pragma omp parallel for num_threads(kernels::effective_workers(workers)) schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    verdicts[i] = classify(report.n, entries[i]->second.representative);
  }

  report.iso_classes = entries.size();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::uint64_t members = entries[i]->second.count;
    if (!verdicts[i].binary) {
      report.non_binary += members;
      ++report.non_binary_classes;
    }
    if (verdicts[i].single_term) {
      report.single_term += members;
      ++report.single_term_classes;
    }
    if (verdicts[i].violation) report.violations.push_back(*verdicts[i].violation);
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t kSampleChunk = 1024;

}  // namespace

std::vector<DeltaMatroid> enumerate_even_normal(int n, bool up_to_iso, int workers) {
  const auto results = run_partitions(n, !up_to_iso, up_to_iso, workers);
  std::vector<DeltaMatroid> out;
  if (up_to_iso) {
    ClassMap classes;
    for (const auto& r : results) merge_classes(classes, r.classes);
    for (const auto& [form, info] : classes) {
      out.push_back(detail::Trusted::make(SetSystem::with_default_labels(n, info.representative)));
    }
    return out;
  }
  for (const auto& r : results) {
    for (Members m : r.families) {
      out.push_back(detail::Trusted::make(SetSystem::with_default_labels(n, to_family(m))));
    }
  }
  return out;
}

SearchReport verify_main_theorem(int n, int workers) {
  const auto start = std::chrono::steady_clock::now();
  const auto results = run_partitions(n, false, true, workers);
  SearchReport report;
  report.n = n;
  report.candidates = std::uint64_t{1} << even_candidates(n).size();
  ClassMap classes;
  for (const auto& r : results) {
    report.scanned += r.leaves;
    report.sea_valid += r.valid;
    merge_classes(classes, r.classes);
  }
  report.even_normal = report.sea_valid;
  fill_classification(report, classes, workers);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

SearchReport sample_search(int n, std::uint64_t trials, std::uint64_t seed, int workers) {
  if (n < 1 || n > kIsoCap) {
    throw InputError("sampled search supports 1 <= n <= " + std::to_string(kIsoCap));
  }
  const auto start = std::chrono::steady_clock::now();
  SearchReport report;
  report.n = n;
  report.sampled = true;
  report.seed = seed;
  report.candidates = trials;
  report.scanned = trials;

  const std::vector<Mask> candidates = even_candidates(n);
  const auto chunks = static_cast<std::int64_t>((trials + kSampleChunk - 1) / kSampleChunk);
  std::vector<ClassMap> chunk_classes(chunks);
  std::vector<std::uint64_t> chunk_valid(chunks, 0);
#pragma omp parallel for num_threads(kernels::effective_workers(workers)) schedule(dynamic, 1)
  for (std::int64_t c = 0; c < chunks; ++c) {
    std::mt19937_64 engine(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(c))));
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * kSampleChunk;
    const std::uint64_t end = std::min(trials, begin + kSampleChunk);
    std::vector<Mask> family;
    for (std::uint64_t t = begin; t < end; ++t) {
      family.assign(1, 0);
      std::uint64_t bits = 0;
      for (std::size_t k = 0; k < candidates.size(); ++k) {
        if (k % 64 == 0) bits = engine();
        if ((bits >> (k % 64)) & 1U) family.push_back(candidates[k]);
      }
      if (kernels::sea_violation_serial(family, n)) continue;
      ++chunk_valid[c];
      add_to_classes(chunk_classes[c], n, family);
    }
  }
  ClassMap classes;
  for (std::int64_t c = 0; c < chunks; ++c) {
    report.sea_valid += chunk_valid[c];
    merge_classes(classes, chunk_classes[c]);
  }
  report.even_normal = report.sea_valid;
  fill_classification(report, classes, workers);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

namespace {

std::string family_text(const std::vector<Mask>& family, int n) {
  const SetSystem s = SetSystem::with_default_labels(n, family);
  std::string out = "{";
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i) out += ',';
    out += format_set(s, s.feasible()[i]);
  }
  return out + "}";
}

}  // namespace

std::string format_report_text(const SearchReport& r) {
  std::ostringstream os;
  os << "search n=" << r.n << (r.sampled ? " (sampled, seed " + std::to_string(r.seed) + ")" : " (exhaustive)")
     << '\n'
     << "  candidate families:      " << r.candidates << '\n'
     << "  families checked:        " << r.scanned << '\n'
     << "  exchange-axiom valid:    " << r.sea_valid << '\n'
     << "  even normal:             " << r.even_normal << '\n'
     << "  isomorphism classes:     " << r.iso_classes << '\n'
     << "  non-binary:              " << r.non_binary << " (" << r.non_binary_classes
     << " classes)\n"
     << "  single-term polynomial:  " << r.single_term << " (" << r.single_term_classes
     << " classes)\n"
     << "  violations:              " << r.violations.size() << '\n';
  for (const auto& v : r.violations) {
    os << "    " << family_text(v.family, r.n) << "  poly " << v.polynomial
       << (v.before_trim ? "  [untrimmed]" : "") << (v.after_trim ? "  [trimmed]" : "") << '\n';
  }
  os << (r.violations.empty() ? "verdict: no violations\n" : "verdict: VIOLATIONS FOUND\n");
  return os.str();
}

std::string format_report_kv(const SearchReport& r) {
  std::ostringstream os;
  os << "n=" << r.n << '\n'
     << "mode=" << (r.sampled ? "sampled" : "exhaustive") << '\n';
  if (r.sampled) os << "seed=" << r.seed << '\n';
  os << "candidates=" << r.candidates << '\n'
     << "scanned=" << r.scanned << '\n'
     << "sea_valid=" << r.sea_valid << '\n'
     << "even_normal=" << r.even_normal << '\n'
     << "iso_classes=" << r.iso_classes << '\n'
     << "non_binary=" << r.non_binary << '\n'
     << "non_binary_classes=" << r.non_binary_classes << '\n'
     << "single_term=" << r.single_term << '\n'
     << "single_term_classes=" << r.single_term_classes << '\n'
     << "violations=" << r.violations.size() << '\n';
  for (std::size_t i = 0; i < r.violations.size(); ++i) {
    const auto& v = r.violations[i];
    os << "violation." << i << ".canonical=" << v.canonical_hex << '\n'
       << "violation." << i << ".family=" << family_text(v.family, r.n) << '\n'
       << "violation." << i << ".polynomial=" << v.polynomial << '\n'
       << "violation." << i << ".before_trim=" << v.before_trim << '\n'
       << "violation." << i << ".after_trim=" << v.after_trim << '\n';
  }
  return os.str();
}

std::string to_string(WidthCondition c) {
  switch (c) {
    case WidthCondition::ElementInEveryMaximum: return "element-in-every-maximum";
    case WidthCondition::PairOutsideMaximum: return "pair-outside-maximum";
    case WidthCondition::GroundFeasible: return "ground-set-feasible";
  }
  return "unknown";
}

std::vector<ConditionFiring> check_necessary_conditions(const DeltaMatroid& d) {
  if (!is_normal(d)) throw PreconditionError("necessary conditions need the empty set feasible");
  if (parity(d) != Parity::Even) throw PreconditionError("necessary conditions need an even delta-matroid");
  const int width = width_profile(d).width;
  auto delta = [&](Mask a) { return twist_profile(d.feasible(), a).width - width; };
  const std::vector<Mask> maxima = extremal_matroid(d, Extremal::Upper);
  std::vector<ConditionFiring> out;

  Mask common = d.ground();
  for (Mask f : maxima) common &= f;
  if (common != 0) {
    const Mask x = bit(std::countr_zero(common));
    out.push_back({WidthCondition::ElementInEveryMaximum, x, maxima.front(), delta(x)});
  }

  bool pair_found = false;
  for (Mask pair : d.feasible()) {
    if (popcount(pair) != 2 || pair_found) continue;
    for (Mask f : maxima) {
      if ((f & pair) == 0) {
        out.push_back({WidthCondition::PairOutsideMaximum, pair, f, delta(pair)});
        pair_found = true;
        break;
      }
    }
  }

  if (d.contains(d.ground()) && d.feasible().size() != (std::size_t{1} << d.size())) {
    Mask missing = 0;
    while (d.contains(missing)) ++missing;
    out.push_back({WidthCondition::GroundFeasible, missing, d.ground(), delta(missing)});
  }
  return out;
}

}  // namespace deltamat
