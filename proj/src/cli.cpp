#include "deltamat/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "deltamat/acceptance.hpp"
#include "deltamat/gf2.hpp"
#include "deltamat/io.hpp"
#include "deltamat/iso.hpp"
#include "deltamat/poly.hpp"
#include "deltamat/search.hpp"

namespace deltamat {

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

int default_workers() {
  if (const char* env = std::getenv("DELTAMAT_WORKERS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      throw InputError(std::string("DELTAMAT_WORKERS is not a number: '") + env + "'");
    }
  }
  return 1;
}

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path.empty() || path == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw InputError("cannot open '" + path + "'");
    buffer << file.rdbuf();
  }
  return buffer.str();
}

SetSystem load_system(const std::string& path, std::istream& in) {
  return parse_set_system(read_source(path, in));
}

DeltaMatroid load_matroid(const std::string& path, std::istream& in) {
  return to_delta_matroid(load_system(path, in));
}

std::vector<std::string> non_empty(const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (const auto& l : labels) {
    if (!l.empty()) out.push_back(l);
  }
  return out;
}

std::string matrix_text(const Gf2SymMatrix& a) {
  std::ostringstream os;
  for (int i = 0; i < a.dimension(); ++i) {
    os << "  ";
    for (int j = 0; j < a.dimension(); ++j) os << (a.get(i, j) ? '1' : '0');
    os << '\n';
  }
  return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Delta-matroid twists, minors, binary representability and twist polynomials"};
  app.require_subcommand(1);

  std::string file, file2;
  std::vector<std::string> twist_set, delete_set, contract_set;
  bool half_width = false, pairs = false;
  std::string method = "matrix", format = "text";
  int workers = 0, n = 0, max_n = 5;
  std::uint64_t sample = 0, seed = 42, trials = 100000, cases = 1000;
  bool sample_given = false;

  auto* validate = app.add_subcommand("validate", "check the exchange axiom");
  validate->add_option("file", file, "set-system file (default stdin)");

  auto* twist_cmd = app.add_subcommand("twist", "twist by a set of labels");
  twist_cmd->add_option("file", file);
  twist_cmd->add_option("--set", twist_set, "comma-separated labels")->delimiter(',')->required();

  auto* dual_cmd = app.add_subcommand("dual", "dual delta-matroid");
  dual_cmd->add_option("file", file);

  auto* minor_cmd = app.add_subcommand("minor", "delete then contract elements");
  minor_cmd->add_option("file", file);
  minor_cmd->add_option("--delete", delete_set)->delimiter(',');
  minor_cmd->add_option("--contract", contract_set)->delimiter(',');

  auto* width_cmd = app.add_subcommand("width", "r_min, r_max and width");
  width_cmd->add_option("file", file);

  auto* poly_cmd = app.add_subcommand("poly", "twist polynomial");
  poly_cmd->add_option("file", file);
  poly_cmd->add_flag("--half-width", half_width, "halve every exponent");
  poly_cmd->add_flag("--pairs", pairs, "print exponent:coefficient pairs");
  poly_cmd->add_option("--parallel", workers)->check(CLI::PositiveNumber);

  auto* binary_cmd = app.add_subcommand("binary", "binary representability");
  binary_cmd->add_option("file", file);
  binary_cmd->add_option("--method", method)->check(CLI::IsMember({"matrix", "minor", "both"}));

  auto* iso_cmd = app.add_subcommand("iso", "isomorphism test");
  iso_cmd->add_option("file1", file)->required();
  iso_cmd->add_option("file2", file2)->required();

  auto* dn_cmd = app.add_subcommand("dn", "even-subset delta-matroid D^n");
  dn_cmd->add_option("n", n)->required()->check(CLI::Range(1, kMaxElements));

  auto* search_cmd = app.add_subcommand("search", "search for counterexamples");
  search_cmd->add_option("--n", n)->required();
  search_cmd->add_option("--parallel", workers)->check(CLI::PositiveNumber);
  auto* sample_opt = search_cmd->add_option("--sample", sample, "number of sampled families");
  search_cmd->add_option("--seed", seed)->needs(sample_opt);
  search_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "kv"}));

  auto* verify_cmd = app.add_subcommand("verify-paper", "run the acceptance checks");
  verify_cmd->add_option("--max-n", max_n)->check(CLI::Range(1, kExhaustiveMaxElements));
  verify_cmd->add_option("--sample-trials", trials);
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--cases", cases, "cases per property suite");
  verify_cmd->add_option("--parallel", workers)->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitTrue : kExitInput;
  }
  sample_given = sample_opt->count() > 0;

  try {
    if (workers == 0) workers = default_workers();

    if (*validate) {
      const SetSystem s = load_system(file, in);
      const auto result = validate_sea(s);
      if (const auto* v = std::get_if<SeaViolation>(&result)) {
        out << "invalid: F1=" << format_set(s, v->first) << " F2=" << format_set(s, v->second)
            << " x=" << s.elements()[v->element] << '\n';
        return kExitFalse;
      }
      out << "valid\n";
      return kExitTrue;
    }
    if (*twist_cmd) {
      const DeltaMatroid d = load_matroid(file, in);
      out << serialize_set_system(twist(d, non_empty(twist_set)).system());
      return kExitTrue;
    }
    if (*dual_cmd) {
      out << serialize_set_system(dual(load_matroid(file, in)).system());
      return kExitTrue;
    }
    if (*minor_cmd) {
      const DeltaMatroid d = load_matroid(file, in);
      const Mask del = d.system().mask_of(non_empty(delete_set));
      const Mask con = d.system().mask_of(non_empty(contract_set));
      out << serialize_set_system(minor(d, del, con).system());
      return kExitTrue;
    }
    if (*width_cmd) {
      const auto p = width_profile(load_matroid(file, in));
      out << "r_min=" << p.r_min << " r_max=" << p.r_max << " width=" << p.width << '\n';
      return kExitTrue;
    }
    if (*poly_cmd) {
      const auto p = twist_polynomial(
          load_matroid(file, in),
          half_width ? ExponentConvention::HalfWidth : ExponentConvention::Width, workers);
      out << (pairs ? to_pairs(p) : to_text(p)) << '\n';
      return kExitTrue;
    }
    if (*binary_cmd) {
      const DeltaMatroid d = load_matroid(file, in);
      const BinaryMethod m = method == "matrix"  ? BinaryMethod::Matrix
                             : method == "minor" ? BinaryMethod::ExcludedMinor
                                                 : BinaryMethod::Both;
      const BinaryVerdict v = is_binary(d, m);
      out << (v.binary ? "binary" : "non-binary") << '\n';
      if (v.matrix_witness) {
        out << "twist: " << format_set(d.system(), v.matrix_witness->twist) << "\nmatrix:\n"
            << matrix_text(v.matrix_witness->matrix);
      }
      if (v.minor_witness) {
        const auto& w = *v.minor_witness;
        out << "excluded minor: delete " << format_set(d.system(), w.deleted) << " contract "
            << format_set(d.system(), w.contracted) << " ~ S" << w.index << "*"
            << format_set(excluded_minor(w.index).system(), w.twist) << '\n';
      }
      return v.binary ? kExitTrue : kExitFalse;
    }
    if (*iso_cmd) {
      const bool same = is_isomorphic(load_system(file, in), load_system(file2, in));
      out << (same ? "isomorphic" : "not isomorphic") << '\n';
      return same ? kExitTrue : kExitFalse;
    }
    if (*dn_cmd) {
      out << serialize_set_system(build_dn(n).system());
      return kExitTrue;
    }
    if (*search_cmd) {
      const SearchReport r =
          sample_given ? sample_search(n, sample, seed, workers) : verify_main_theorem(n, workers);
      out << (format == "kv" ? format_report_kv(r) : format_report_text(r));
      err << "elapsed " << r.elapsed.count() << " s\n";
      return r.violations.empty() ? kExitTrue : kExitFalse;
    }
    if (*verify_cmd) {
      acceptance::Options o;
      o.max_n = max_n;
      o.sample_trials = trials;
      o.sample_seed = seed;
      o.property_cases = cases;
      o.workers = workers;
      bool all = true;
      acceptance::run_all(o, [&](const acceptance::Result& r) {
        out << acceptance::format_line(r) << '\n' << std::flush;
        all = all && r.passed;
      });
      out << (all ? "all checks passed" : "SOME CHECKS FAILED") << '\n';
      return all ? kExitTrue : kExitFalse;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ConsistencyError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInput;
}

}  // namespace deltamat
