#include "kreg/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kreg/bounds.hpp"
#include "kreg/construct.hpp"
#include "kreg/errors.hpp"
#include "kreg/gorenstein.hpp"
#include "kreg/secant.hpp"

namespace kreg {

using ordered_json = nlohmann::ordered_json;

namespace {

// A --map argument names either a fixture or a file with one polynomial per
// line; variable names are inferred from the file.
struct LoadedMap {
  PolyMap map;
  std::string id;
  std::size_t default_k = 0;
  Rational default_radius = Rational(1);
};

std::vector<std::string> infer_variables(const std::vector<std::string>& lines) {
  std::set<std::string> seen;
  for (const auto& line : lines) {
    for (std::size_t i = 0; i < line.size();) {
      unsigned char c = line[i];
      if (std::isalpha(c) || c == '_') {
        std::size_t j = i;
        while (j < line.size() &&
               (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_'))
          ++j;
        seen.insert(line.substr(i, j - i));
        i = j;
      } else {
        ++i;
      }
    }
  }
  std::vector<std::string> names(seen.begin(), seen.end());
  const bool all_tn = std::all_of(names.begin(), names.end(), [](const std::string& n) {
    if (n.size() < 2 || n[0] != 't') return false;
    return std::all_of(n.begin() + 1, n.end(),
                       [](unsigned char c) { return std::isdigit(c); });
  });
  if (all_tn) {
    std::sort(names.begin(), names.end(), [](const auto& a, const auto& b) {
      return std::stol(a.substr(1)) < std::stol(b.substr(1));
    });
    return names;
  }
  const std::vector<std::string> stu{"s", "t", "u"};
  if (std::all_of(names.begin(), names.end(), [&](const std::string& n) {
        return std::find(stu.begin(), stu.end(), n) != stu.end();
      })) {
    std::vector<std::string> ordered;
    for (const auto& n : stu)
      if (seen.count(n)) ordered.push_back(n);
    return ordered;
  }
  return names;  // lexicographic fallback
}

LoadedMap load_map(const std::string& spec, const std::string& kind) {
  LoadedMap lm;
  try {
    FixtureInfo fi = fixture(spec);
    lm.map = std::move(fi.map);
    lm.id = spec;
    lm.default_k = fi.claimed_k;
    lm.default_radius = fi.default_radius;
    return lm;
  } catch (const UnknownExampleError&) {
  }
  std::ifstream in(spec);
  if (!in) throw Error("'" + spec + "' is neither a known example nor a readable file");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    auto notspace = [](unsigned char c) { return !std::isspace(c); };
    if (std::find_if(line.begin(), line.end(), notspace) == line.end()) continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw Error("'" + spec + "' contains no polynomials");
  auto names = infer_variables(lines);
  if (names.empty()) names = {"t1"};
  lm.map.num_vars = names.size();
  lm.map.var_names = names;
  lm.map.kind = kind_from_name(kind);
  for (const auto& l : lines)
    lm.map.components.push_back(parse_polynomial(l, names));
  lm.id = spec;
  return lm;
}

void print_map(std::ostream& out, const PolyMap& map) {
  for (const auto& c : map.components)
    out << to_string(c, map.var_names) << "\n";
}

ordered_json map_json(const PolyMap& map) {
  ordered_json j;
  j["kind"] = kind_name(map.kind);
  j["variables"] = map.var_names;
  j["components"] = ordered_json::array();
  for (const auto& c : map.components)
    j["components"].push_back(to_string(c, map.var_names));
  return j;
}

void print_report_text(std::ostream& out, const RegularityReport& rep) {
  out << rep.map_id << ": " << (rep.passed ? "PASSED" : "COUNTEREXAMPLE")
      << " (k=" << rep.k << ", kind=" << kind_name(rep.kind)
      << ", radius=" << rep.domain.radius.str() << ", seed=" << rep.seed << ")\n";
  for (const auto& s : rep.strategies)
    out << "  " << s.name << ": " << s.trials << " trials, " << s.failures
        << " failures\n";
  if (rep.counterexample) {
    out << "  counterexample (" << rep.counterexample->strategy << " trial "
        << rep.counterexample->trial << "):\n";
    for (const auto& p : rep.counterexample->config.points) {
      out << "    (";
      for (std::size_t i = 0; i < p.size(); ++i)
        out << (i ? ", " : "") << p[i].str();
      out << ")\n";
    }
    out << "  kernel vector: (";
    const auto& kv = rep.counterexample->kernel_vector;
    for (std::size_t i = 0; i < kv.size(); ++i)
      out << (i ? ", " : "") << kv[i].str();
    out << ")\n";
  }
  for (const auto& w : rep.warnings) out << "  warning: " << w << "\n";
  out << "note: PASSED is probabilistic evidence; counterexamples are exact proofs\n";
}

struct VerifyArgs {
  std::string map;
  std::size_t k = 0;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::string radius;
  std::uint64_t prime = 2147483647;
  std::string kind = "linear";
  std::string output = "text";
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  LoadedMap lm = load_map(a.map, a.kind);
  std::size_t k = a.k ? a.k : lm.default_k;
  if (k == 0) throw Error("--k is required for file maps");
  Rational radius = a.radius.empty() ? lm.default_radius : Rational::parse(a.radius);
  CheckOptions opts;
  opts.prime = a.prime;
  opts.map_id = lm.id;
  RegularityReport rep =
      check_regularity(lm.map, k, DomainBall::origin(lm.map.num_vars, radius),
                       a.trials, a.seed, opts);
  if (a.output == "json") out << rep.to_json() << "\n";
  else print_report_text(out, rep);
  return rep.passed ? 0 : 1;
}

struct ConstructArgs {
  std::size_t m = 0, k = 0;
  std::int64_t n = -1;
  std::uint64_t seed = 0;
  std::uint64_t budget = 32;
  std::uint64_t trials = 1000;
  std::string radius = "1/8";
  std::uint64_t prime = 2147483647;
  std::string output = "text";
};

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
  ConstructOptions opts;
  opts.budget = a.budget;
  opts.trials = a.trials;
  opts.radius = Rational::parse(a.radius);
  opts.prime = a.prime;
  std::optional<std::size_t> n;
  if (a.n >= 0) n = static_cast<std::size_t>(a.n);
  try {
    ConstructedMap cm = construct_k_regular(a.m, a.k, n, a.seed, opts);
    if (a.output == "json") {
      ordered_json j;
      j["schema"] = 1;
      j["m"] = cm.m;
      j["k"] = cm.k;
      j["n"] = cm.n;
      j["method"] = cm.method;
      j["projection_seed"] = cm.projection_seed;
      j["attempts"] = cm.attempts;
      j["map"] = map_json(cm.map);
      j["report"] = ordered_json::parse(cm.report.to_json());
      if (cm.infeasible_warning) j["infeasible_warning"] = *cm.infeasible_warning;
      out << j.dump(2) << "\n";
    } else {
      // Map in the polynomial text format, then the verification report.
      print_map(out, cm.map);
      out << "\n" << cm.report.to_json() << "\n";
      if (cm.infeasible_warning) out << "warning: " << *cm.infeasible_warning << "\n";
    }
    return cm.infeasible_warning ? 1 : 0;
  } catch (const BudgetExhaustedError& e) {
    out << "construction failed: " << e.what() << "\n";
    if (e.infeasible_warning) out << "warning: " << *e.infeasible_warning << "\n";
    if (!e.best_report.strategies.empty()) {
      out << "best failing attempt:\n";
      print_report_text(out, e.best_report);
    }
    return 1;
  }
}

struct SecantArgs {
  std::size_t m = 0, d = 0, k = 0;
  bool oracle = false;
  std::uint64_t prime = 2147483647;
  std::uint64_t seed = 0;
  unsigned reps = 3;
  std::size_t cap = 300;
  std::string output = "text";
};

int cmd_secant(const SecantArgs& a, std::ostream& out) {
  SecantDimResult r = secant_dimension(a.m, a.d, a.k);
  std::optional<std::size_t> oracle;
  if (a.oracle) {
    TerraciniOptions topts;
    topts.prime = a.prime;
    topts.seed = a.seed;
    topts.repetitions = a.reps;
    topts.cap = a.cap;
    oracle = terracini_dimension(a.m, a.d, a.k, topts);
  }
  if (a.output == "json") {
    ordered_json j = ordered_json::parse(r.to_json());
    if (oracle) {
      ordered_json oj;
      oj["value"] = *oracle;
      oj["prime"] = a.prime;
      oj["repetitions"] = a.reps;
      oj["seed"] = a.seed;
      j["oracle"] = oj;
    }
    out << j.dump(2) << "\n";
  } else {
    out << "secant variety of the degree-" << a.d << " Veronese of P^" << a.m
        << ", k=" << a.k << "\n";
    out << "  ambient dimension:  " << r.ambient_dim << "\n";
    out << "  expected dimension: " << r.expected_dim << "\n";
    out << "  defective:          " << (r.defective ? "yes" : "no") << "\n";
    if (r.actual_dim) out << "  known dimension:    " << *r.actual_dim << "\n";
    if (oracle) out << "  oracle dimension:   " << *oracle << "\n";
  }
  return 0;
}

struct ApolarArgs {
  std::string poly;
  std::string file;
  std::string vars;
  int max_degree = -1;
  std::string output = "text";
};

int cmd_apolar(const ApolarArgs& a, std::ostream& out) {
  std::string text = a.poly;
  if (text.empty() && !a.file.empty()) {
    std::ifstream in(a.file);
    if (!in) throw Error("cannot read '" + a.file + "'");
    std::getline(in, text);
  }
  if (text.empty()) throw Error("provide --poly or --file");
  std::vector<std::string> names;
  if (!a.vars.empty()) {
    std::stringstream ss(a.vars);
    std::string item;
    while (std::getline(ss, item, ',')) names.push_back(item);
  } else {
    names = infer_variables({text});
    if (names.empty()) names = {"t1"};
  }
  Polynomial f = parse_polynomial(text, names);
  if (f.is_zero()) throw Error("the zero polynomial has no apolar algebra");
  const bool homogeneous = f.is_homogeneous();
  HilbertProfile profile = apolar_profile(f, homogeneous);
  unsigned maxdeg = a.max_degree >= 1 ? static_cast<unsigned>(a.max_degree)
                                      : static_cast<unsigned>(f.degree()) + 1;
  auto gens = annihilator_generators(f, maxdeg);

  std::vector<std::string> opnames;
  for (const auto& n : names) opnames.push_back("a_" + n);

  if (a.output == "json") {
    ordered_json j;
    j["schema"] = 1;
    j["polynomial"] = to_string(f, names);
    j["homogeneous"] = homogeneous;
    if (!profile.hilbert_function.empty())
      j["hilbert_function"] = profile.hilbert_function;
    j["socle_degree"] = profile.socle_degree;
    j["length"] = profile.length;
    j["embedding_dim"] = profile.embedding_dim;
    j["annihilator_generators"] = ordered_json::array();
    for (const auto& g : gens)
      j["annihilator_generators"].push_back(to_string(g, opnames));
    out << j.dump(2) << "\n";
  } else {
    out << "apolar algebra of " << to_string(f, names) << "\n";
    if (!profile.hilbert_function.empty()) {
      out << "  Hilbert function: (";
      for (std::size_t i = 0; i < profile.hilbert_function.size(); ++i)
        out << (i ? "," : "") << profile.hilbert_function[i];
      out << ")\n";
    } else {
      out << "  Hilbert function: not computed (inhomogeneous generator)\n";
    }
    out << "  length:        " << profile.length << "\n";
    out << "  socle degree:  " << profile.socle_degree << "\n";
    out << "  embedding dim: " << profile.embedding_dim << "\n";
    out << "  annihilator generators up to degree " << maxdeg << ":\n";
    for (const auto& g : gens)
      out << "    " << to_string(g, opnames) << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact toolkit for k-regular polynomial maps"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check k-regularity of a map");
  verify->add_option("--map", va.map, "example name or polynomial file")->required();
  verify->add_option("--k", va.k, "number of points (defaults to the example's claim)");
  verify->add_option("--trials", va.trials, "trials per strategy")->default_val(1000);
  verify->add_option("--seed", va.seed, "RNG seed")->default_val(0);
  verify->add_option("--radius", va.radius, "domain ball radius (rational)");
  verify->add_option("--prime", va.prime, "fast-rank modulus")->default_val(2147483647);
  verify->add_option("--kind", va.kind, "map kind for file maps")
      ->default_val("linear")
      ->check(CLI::IsMember({"affine", "linear", "projective"}));
  verify->add_option("--output", va.output)->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build a verified k-regular map");
  construct->add_option("--m", ca.m, "source dimension")->required();
  construct->add_option("--k", ca.k, "regularity order")->required();
  construct->add_option("--n", ca.n, "affine target dimension (map gets n+1 components)");
  construct->add_option("--seed", ca.seed)->default_val(0);
  construct->add_option("--budget", ca.budget, "projection attempts")->default_val(32);
  construct->add_option("--trials", ca.trials, "verification trials per strategy")
      ->default_val(1000);
  construct->add_option("--radius", ca.radius, "verification ball radius")
      ->default_val("1/8");
  construct->add_option("--prime", ca.prime)->default_val(2147483647);
  construct->add_option("--output", ca.output)->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));

  std::string example_name;
  auto* example = app.add_subcommand("example", "print a named example map");
  example->add_option("name", example_name, "example name")->required();

  SecantArgs sa;
  auto* secant = app.add_subcommand("secant-dim", "secant variety dimensions of Veronese embeddings");
  secant->add_option("--m", sa.m)->required();
  secant->add_option("--d", sa.d)->required();
  secant->add_option("--k", sa.k)->required();
  secant->add_flag("--oracle", sa.oracle, "run the Terracini rank oracle");
  secant->add_option("--prime", sa.prime)->default_val(2147483647);
  secant->add_option("--seed", sa.seed)->default_val(0);
  secant->add_option("--reps", sa.reps, "oracle repetitions")->default_val(3);
  secant->add_option("--cap", sa.cap, "largest allowed C(m+d,d)")->default_val(300);
  secant->add_option("--output", sa.output)->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));

  ApolarArgs aa;
  auto* apolar = app.add_subcommand("apolar", "Hilbert profile and annihilator of a dual generator");
  apolar->add_option("--poly", aa.poly, "polynomial text");
  apolar->add_option("--file", aa.file, "file with the polynomial on the first line");
  apolar->add_option("--vars", aa.vars, "comma-separated variable names");
  apolar->add_option("--max-degree", aa.max_degree, "generator search degree");
  apolar->add_option("--output", aa.output)->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));

  std::size_t audit_k = 0, audit_m = 0;
  std::string audit_output = "text";
  auto* audit = app.add_subcommand("decomp-audit", "punctual Gorenstein dimension audit");
  audit->add_option("--k", audit_k)->required();
  audit->add_option("--m", audit_m)->required();
  audit->add_option("--output", audit_output)->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));

  std::size_t kmax = 10;
  std::string m_list = "1,2,3";
  std::string table_output = "text";
  auto* table = app.add_subcommand("bounds-table", "bounds for the minimal ambient dimension");
  table->add_option("--kmax", kmax)->default_val(10);
  table->add_option("--m", m_list, "comma-separated source dimensions")->default_val("1,2,3");
  table->add_option("--output", table_output)->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(va, out);
    if (construct->parsed()) return cmd_construct(ca, out);
    if (example->parsed()) {
      print_map(out, example_map(example_name));
      return 0;
    }
    if (secant->parsed()) return cmd_secant(sa, out);
    if (apolar->parsed()) return cmd_apolar(aa, out);
    if (audit->parsed()) {
      NegligibilityReport rep = negligibility_audit(audit_k, audit_m);
      if (audit_output == "json") out << rep.to_json() << "\n";
      else out << rep.to_text() << "\n" << rep.to_json() << "\n";
      return 0;
    }
    if (table->parsed()) {
      std::vector<std::size_t> ms;
      std::stringstream ss(m_list);
      std::string item;
      while (std::getline(ss, item, ',')) ms.push_back(std::stoul(item));
      auto cells = bounds_table(kmax, ms);
      if (table_output == "json") out << bounds_table_json(cells) << "\n";
      else out << bounds_table_text(cells);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace kreg
