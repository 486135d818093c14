#include "deltamat/acceptance.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "deltamat/gf2.hpp"
#include "deltamat/iso.hpp"
#include "deltamat/kernels.hpp"
#include "deltamat/poly.hpp"
#include "deltamat/properties.hpp"
#include "deltamat/search.hpp"

namespace deltamat::acceptance {

namespace {

struct Check {
  bool passed = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok && passed) detail << "FAILED: " << what << "; ";
    passed = passed && ok;
  }
};

using Clock = std::chrono::steady_clock;

Check even_sets_exchange_axiom() {
  Check c;
  for (int n = 1; n <= 10; ++n) {
    const DeltaMatroid dn = build_dn(n);
    c.require(std::holds_alternative<DeltaMatroid>(validate_sea(dn.system())),
              "D^" + std::to_string(n) + " violates the exchange axiom");
  }
  c.detail << "D^1..D^10 validated";
  return c;
}

Check twist_rank_profile() {
  Check c;
  for (int n : {3, 5, 7}) {
    const DeltaMatroid dn = build_dn(n);
    std::uint64_t checked = 0;
    for (Mask a = 0; a < bit(n); ++a) {
      const WidthProfile expected =
          popcount(a) % 2 == 0 ? WidthProfile{0, n - 1, n - 1} : WidthProfile{1, n, n - 1};
      c.require(twist_profile(dn.feasible(), a) == expected,
                "profile of D^" + std::to_string(n) + " twisted by mask " + std::to_string(a));
      ++checked;
    }
    c.detail << "n=" << n << ": " << checked << " twists; ";
  }
  return c;
}

Check corollary_polynomial(int workers) {
  Check c;
  for (int n : {3, 5, 7}) {
    const DeltaMatroid dn = build_dn(n);
    const std::uint64_t all = std::uint64_t{1} << n;
    const auto half = twist_polynomial(dn, ExponentConvention::HalfWidth, workers);
    const auto full = twist_polynomial(dn, ExponentConvention::Width, workers);
    c.require(half.coefficients == std::map<int, std::uint64_t>{{(n - 1) / 2, all}},
              "half-width polynomial of D^" + std::to_string(n));
    c.require(full.coefficients == std::map<int, std::uint64_t>{{n - 1, all}},
              "width polynomial of D^" + std::to_string(n));
    c.detail << "D^" << n << ": " << to_text(half) << " | " << to_text(full) << "; ";
  }
  return c;
}

Check fixed_widths() {
  Check c;
  struct Case {
    int index;
    Mask twist;
    int width;
  };
  // Twisting sets written over labels 1..4, bit i-1 for label i.
  for (const Case& k : {Case{4, 0, 2}, Case{4, 0b0011, 4}, Case{5, 0, 4}, Case{5, 0b0101, 0},
                        Case{2, 0b0001, 3}}) {
    const int got = width_profile(twist(excluded_minor(k.index), k.twist)).width;
    c.require(got == k.width, "w(S" + std::to_string(k.index) + "*" +
                                  format_set(excluded_minor(k.index).system(), k.twist) +
                                  ") = " + std::to_string(got));
    c.detail << "w(S" << k.index << "*" << format_set(excluded_minor(k.index).system(), k.twist)
             << ")=" << got << " ";
  }
  return c;
}

Check width_changing_twist() {
  Check c;
  for (int i = 1; i <= 5; ++i) {
    const DeltaMatroid& s = excluded_minor(i);
    const int base = width_profile(s).width;
    std::optional<Mask> found;
    for (Mask a = 0; a <= s.ground() && !found; ++a) {
      if (twist_profile(s.feasible(), a).width != base) found = a;
    }
    c.require(found.has_value(), "no width-changing twist for S" + std::to_string(i));
    if (found) {
      c.detail << "S" << i << ": A=" << format_set(s.system(), *found) << " w "
               << base << "->" << twist_profile(s.feasible(), *found).width << "; ";
    }
  }
  return c;
}

Check binary_method_agreement() {
  Check c;
  std::uint64_t systems = 0, valid = 0, binary = 0;
  for (int n = 0; n <= 4; ++n) {
    const std::uint64_t families = std::uint64_t{1} << (std::uint64_t{1} << n);
    for (std::uint64_t code = 1; code < families; ++code) {
      std::vector<Mask> family;
      for (Mask m = 0; m < bit(n); ++m) {
        if ((code >> m) & 1U) family.push_back(m);
      }
      ++systems;
      auto result = validate_sea(SetSystem::with_default_labels(n, family));
      const auto* d = std::get_if<DeltaMatroid>(&result);
      if (!d) continue;
      ++valid;
      const bool by_matrix = is_binary(*d, BinaryMethod::Matrix).binary;
      const bool by_minor = is_binary(*d, BinaryMethod::ExcludedMinor).binary;
      c.require(by_matrix == by_minor, "methods disagree on " + std::to_string(n) +
                                           "-element family code " + std::to_string(code));
      binary += by_matrix;
    }
  }
  c.detail << systems << " set systems, " << valid << " delta-matroids, " << binary
           << " binary, " << (valid - binary) << " non-binary";
  return c;
}

Check main_theorem(const Options& o) {
  Check c;
  for (int n = 1; n <= o.max_n; ++n) {
    const SearchReport r = verify_main_theorem(n, o.workers);
    c.require(r.violations.empty(), "violation at n=" + std::to_string(n));
    c.detail << "n=" << n << ": " << r.even_normal << " even normal, " << r.iso_classes
             << " classes, " << r.non_binary_classes << " non-binary classes, "
             << r.violations.size() << " violations; ";
  }
  if (o.sample_trials > 0) {
    const SearchReport r = sample_search(o.sample_n, o.sample_trials, o.sample_seed, o.workers);
    c.require(r.violations.empty(), "violation in sampled search");
    c.detail << "sampled n=" << o.sample_n << " seed " << o.sample_seed << ": " << r.sea_valid
             << "/" << r.scanned << " valid, " << r.non_binary << " non-binary, "
             << r.violations.size() << " violations";
  }
  return c;
}

Check property_suites(const Options& o) {
  Check c;
  const std::uint64_t n = o.property_cases;
  const std::uint64_t s = o.property_seed;
  const std::pair<const char*, properties::Outcome> suites[] = {
      {"twist-group", properties::twist_group_law(n, s)},
      {"parity", properties::parity_preservation(n, s + 1)},
      {"twist-minor", properties::twist_minor_commutation(n, s + 2)},
      {"upper-lower-dual", properties::upper_lower_duality(n, s + 3)},
      {"exchange-disjunction", properties::exchange_disjunction(n, s + 4)},
      {"matrix-round-trip", properties::matrix_round_trip(n, s + 5)},
  };
  for (const auto& [name, outcome] : suites) {
    c.require(outcome.ok() && outcome.cases >= 1000,
              std::string(name) + ": " + outcome.first_failure);
    c.detail << name << " " << outcome.cases - outcome.failures << "/" << outcome.cases << "; ";
  }
  return c;
}

Check necessary_conditions_consistency() {
  Check c;
  std::uint64_t non_binary = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const DeltaMatroid& d : enumerate_even_normal(n, false)) {
      if (is_binary(d, BinaryMethod::Matrix).binary) continue;
      ++non_binary;
      bool fired = false;
      for (Mask f : d.feasible()) {
        if (!check_necessary_conditions(twist(d, f)).empty()) {
          fired = true;
          break;
        }
      }
      c.require(fired, "no condition fires on a twist of a non-binary D, n=" + std::to_string(n));
    }
  }
  c.detail << non_binary << " even normal non-binary delta-matroids checked";
  return c;
}

Check determinism(int workers) {
  Check c;
  const SearchReport one = verify_main_theorem(5, 1);
  const SearchReport many = verify_main_theorem(5, std::max(4, workers));
  c.require(format_report_text(one) == format_report_text(many) &&
                format_report_kv(one) == format_report_kv(many),
            "n=5 reports differ between 1 and 4 workers");
  c.detail << "n=5 reports identical for 1 and " << std::max(4, workers) << " workers";
  return c;
}

}  // namespace

std::vector<Result> run_all(const Options& options,
                            const std::function<void(const Result&)>& on_result) {
  struct Spec {
    const char* key;
    const char* title;
    double limit;
    std::function<Check()> body;
  };
  const std::vector<Spec> specs = {
      {"even-sets-exchange-axiom", "even subsets form a delta-matroid (n=1..10)", 1.0,
       even_sets_exchange_axiom},
      {"twist-rank-profile", "rank profile of every twist of D^n (n=3,5,7)", 5.0,
       twist_rank_profile},
      {"dn-polynomial", "twist polynomial of D^n is 2^n z^((n-1)/2)", 0,
       [&] { return corollary_polynomial(options.workers); }},
      {"fixed-widths", "widths of S4, S5, S2 and their twists", 0, fixed_widths},
      {"width-changing-twist", "each S_i has a twist of different width", 1.0,
       width_changing_twist},
      {"binary-method-agreement", "matrix and excluded-minor tests agree (n<=4)", 60.0,
       binary_method_agreement},
      {"main-theorem", "no even normal non-binary single-term delta-matroid", 300.0,
       [&] { return main_theorem(options); }},
      {"property-suites", "algebraic identities on seeded random cases", 0,
       [&] { return property_suites(options); }},
      {"necessary-conditions", "a width condition fires on some twist (n<=4)", 0,
       necessary_conditions_consistency},
      {"search-determinism", "n=5 search report independent of worker count", 0,
       [&] { return determinism(options.workers); }},
  };

  std::vector<Result> results;
  int number = 0;
  for (const auto& spec : specs) {
    Result r;
    r.number = ++number;
    r.key = spec.key;
    r.title = spec.title;
    r.time_limit = spec.limit;
    const auto start = Clock::now();
    Check check;
    try {
      check = spec.body();
    } catch (const std::exception& e) {
      check.passed = false;
      check.detail << "exception: " << e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    r.passed = check.passed;
    r.detail = check.detail.str();
    if (r.time_limit > 0 && r.seconds >= r.time_limit) {
      r.passed = false;
      r.detail += " (over time limit)";
    }
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_line(const Result& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << r.number << "  " << std::left
     << std::setw(26) << r.key << std::right << std::fixed << std::setprecision(2) << std::setw(8)
     << r.seconds << "s";
  if (r.time_limit > 0) os << " (limit " << std::setprecision(0) << r.time_limit << "s)";
  os << "  " << r.title << "\n        " << r.detail;
  return os.str();
}

}  // namespace deltamat::acceptance
