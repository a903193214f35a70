// hodge: command-line front end for the intersection-number library.
//
// Exit codes: 0 ok, 1 failed verification, 2 bad flags, 3 domain error or
// underdetermined solver.

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hodge/cache.hpp"
#include "hodge/checks.hpp"
#include "hodge/hodge.hpp"
#include "hodge/obstruction.hpp"
#include "hodge/psi.hpp"
#include "hodge/series1d.hpp"

using json = nlohmann::json;
using namespace hodge;

namespace {

enum class Format { Pretty, Csv, Json };

struct Options {
  Format format = Format::Pretty;
  std::string cache_path;
  bool no_cache = false;
  bool stats = false;
};

struct FlagError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<int>& ks) {
  std::string out;
  for (std::size_t i = 0; i < ks.size(); ++i) out += (i ? "," : "") + std::to_string(ks[i]);
  return out;
}

/// One integral value in the requested format.
void print_value(const Options& opt, const json& fields, const std::vector<std::string>& csv_columns,
                 const Rational& value) {
  switch (opt.format) {
    case Format::Pretty:
      std::cout << to_string(value) << '\n';
      break;
    case Format::Json: {
      json out = fields;
      out["value"] = to_string(value);
      std::cout << out.dump() << '\n';
      break;
    }
    case Format::Csv: {
      for (const auto& c : csv_columns) std::cout << c << ',';
      std::cout << "value\n";
      for (const auto& c : csv_columns) {
        const auto& f = fields.at(c);
        std::cout << (f.is_string() ? f.get<std::string>() : f.dump()) << ',';
      }
      std::cout << to_string(value) << '\n';
      break;
    }
  }
}

std::vector<Insertion> parse_insertions(const std::vector<std::string>& items) {
  std::vector<Insertion> out;
  for (const auto& item : items) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw FlagError("insertion '" + item + "' is not of the form a:k");
    try {
      std::size_t u1 = 0, u2 = 0;
      const std::string a = item.substr(0, colon), k = item.substr(colon + 1);
      Insertion ins{std::stoi(a, &u1), std::stoi(k, &u2)};
      if (u1 != a.size() || u2 != k.size()) throw FlagError("bad insertion '" + item + "'");
      out.push_back(ins);
    } catch (const std::invalid_argument&) {
      throw FlagError("bad insertion '" + item + "'");
    } catch (const std::out_of_range&) {
      throw FlagError("bad insertion '" + item + "'");
    }
  }
  return out;
}

void print_checks(const Options& opt, const std::string& suite, const std::vector<CheckResult>& results) {
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  if (opt.format == Format::Json) {
    json checks = json::array();
    for (const auto& r : results) checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    std::cout << json{{"suite", suite}, {"passed", all}, {"checks", checks}}.dump() << '\n';
  } else if (opt.format == Format::Csv) {
    std::cout << "suite,check,passed,detail\n";
    for (const auto& r : results)
      std::cout << suite << ",\"" << r.name << "\"," << (r.passed ? "true" : "false") << ",\"" << r.detail << "\"\n";
  } else {
    for (const auto& r : results) std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name << ": " << r.detail << '\n';
    std::cout << suite << ": " << (all ? "all checks passed" : "FAILED") << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact psi and lambda intersection numbers on moduli spaces of curves"};
  app.require_subcommand(1);
  Options opt;
  std::string format = "pretty";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"pretty", "csv", "json"}));
  app.add_option("--cache", opt.cache_path, std::string("Cache file (default: $") + kCacheEnvVar + ")");
  app.add_flag("--no-cache", opt.no_cache, "Do not read or write a cache file");
  app.add_flag("--stats", opt.stats, "Report cache statistics on stderr");

  int genus = 0, max_genus = 5, min_genus = 1, dim = 1, max_points = -1;
  std::vector<int> exponents;
  std::string klass, method = "closed", target_spec, suite;
  std::vector<std::string> insertions;
  bool absolute = false, timings = false;

  auto* psi = app.add_subcommand("psi", "Pure psi integral <tau_k1 ... tau_kn>_g");
  psi->add_option("--genus,-g", genus, "Genus")->required();
  psi->add_option("--exponents,-k", exponents, "Comma-separated psi exponents")->delimiter(',')->required();

  auto* lambda = app.add_subcommand("lambda", "Hodge integrals and constants");
  lambda->add_option("--class", klass, "g | gg | gm1 | ggm2 | cube | c | b")
      ->required()
      ->check(CLI::IsMember({"g", "gg", "gm1", "ggm2", "cube", "c", "b"}));
  lambda->add_option("--genus,-g", genus, "Genus")->required();
  lambda->add_option("--exponents,-k", exponents, "Comma-separated psi exponents")->delimiter(',');
  lambda->add_option("--method", method, "closed | recursion (classes g, gg)")
      ->check(CLI::IsMember({"closed", "recursion"}));

  auto* kappa = app.add_subcommand("kappa", "Integral of kappa_{i1}...kappa_{im} lambda_g lambda_{g-1} over M_g");
  kappa->add_option("--genus,-g", genus, "Genus")->required();
  kappa->add_option("--indices,-i", exponents, "Comma-separated kappa indices")->delimiter(',');

  auto* bseq = app.add_subcommand("bseq", "b_0 .. b_G from the series (t/2)/sin(t/2)");
  bseq->add_option("--max-genus", max_genus, "Largest genus")->required()->check(CLI::NonNegativeNumber);

  auto* table = app.add_subcommand("table", "Table of b_g and c_g");
  table->add_option("--min-genus", min_genus, "Smallest genus")->check(CLI::PositiveNumber);
  table->add_option("--max-genus", max_genus, "Largest genus")->check(CLI::NonNegativeNumber);

  auto* euler = app.add_subcommand("euler", "Euler class of the obstruction bundle");
  euler->add_option("--dim,-r", dim, "Dimension of the target")->required();
  euler->add_option("--genus,-g", genus, "Genus")->required();
  euler->add_flag("--absolute", absolute, "Print lambda indices as numbers instead of relative to g");

  auto* gw0 = app.add_subcommand("gw0", "Degree-0 descendent Gromov-Witten invariant");
  gw0->add_option("--target", target_spec, "point | P1 | P2 | P3 | Pn")->required();
  gw0->add_option("--genus,-g", genus, "Genus")->required();
  gw0->add_option("--insertions", insertions, "Comma-separated a:k (class H^a, descendent level k)")->delimiter(',');

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite_help = "One of:";
  for (const auto& s : suite_names()) suite_help += " " + s;
  verify->add_option("--suite", suite, suite_help)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-genus", max_genus, "Genus bound (suite default if omitted)");
  verify->add_option("--max-points", max_points, "Marked-point bound (suite default if omitted)");
  verify->add_flag("--timings", timings, "Print per-check run times on stderr");

  auto* cache = app.add_subcommand("cache", "Inspect or compact the cache file");
  cache->require_subcommand(1);
  auto* cache_info = cache->add_subcommand("info", "Report the cache file status");
  auto* cache_compact = cache->add_subcommand("compact", "Merge and rewrite the cache file in key order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  opt.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Pretty;
  const bool verify_max_genus_given = verify->count("--max-genus") > 0;

  std::optional<std::filesystem::path> cache_path;
  if (!opt.no_cache) {
    if (!opt.cache_path.empty()) cache_path = std::filesystem::path(opt.cache_path);
    else cache_path = default_cache_path();
  }
  CacheLoadReport loaded;
  if (cache_path && !cache->parsed()) {
    loaded = load_cache(*cache_path, integral_cache());
    if (!loaded.warning.empty()) std::cerr << "warning: " << loaded.warning << '\n';
  }
  integral_cache().reset_misses();

  int status = 0;
  try {
    if (psi->parsed()) {
      const Rational v = psi_integral(genus, exponents);
      print_value(opt, {{"genus", genus}, {"exponents", join(IntegralKey(ClassTag::None, genus, exponents).exponents)}},
                  {"genus", "exponents"}, v);
    } else if (lambda->parsed()) {
      Rational v;
      const bool needs_exponents = klass != "cube" && klass != "c" && klass != "b";
      if (needs_exponents && exponents.empty()) throw FlagError("--exponents is required for class " + klass);
      if (!needs_exponents && !exponents.empty()) throw FlagError("--exponents is not used by class " + klass);
      const bool recursion = method == "recursion";
      if (recursion && klass != "g" && klass != "gg") throw FlagError("--method recursion applies to classes g and gg");
      if (klass == "g") v = recursion ? lambda_g_solver(genus, exponents) : lambda_g(genus, exponents);
      else if (klass == "gg") v = recursion ? lambda_g_gm1_solver(genus, exponents) : lambda_g_gm1(genus, exponents);
      else if (klass == "gm1") v = lambda_gm1(genus, exponents);
      else if (klass == "ggm2") v = lambda_g_gm2(genus, exponents);
      else if (klass == "cube") v = lambda_cube(genus);
      else if (klass == "c") v = c_constant(genus);
      else v = b_constant(genus);
      json fields{{"class", klass}, {"genus", genus}};
      std::vector<std::string> cols{"class", "genus"};
      if (needs_exponents) {
        fields["exponents"] = join(IntegralKey(ClassTag::None, genus, exponents).exponents);
        cols.push_back("exponents");
      }
      print_value(opt, fields, cols, v);
    } else if (kappa->parsed()) {
      const Rational v = kappa_lambda_integral(genus, exponents);
      print_value(opt, {{"genus", genus}, {"indices", join(exponents)}}, {"genus", "indices"}, v);
    } else if (bseq->parsed()) {
      const auto b = b_sequence(max_genus);
      if (opt.format == Format::Json) {
        json arr = json::array();
        for (const auto& x : b) arr.push_back(to_string(x));
        std::cout << json{{"b", arr}}.dump() << '\n';
      } else if (opt.format == Format::Csv) {
        std::cout << "genus,b\n";
        for (std::size_t g = 0; g < b.size(); ++g) std::cout << g << ',' << to_string(b[g]) << '\n';
      } else {
        std::cout << '[';
        for (std::size_t g = 0; g < b.size(); ++g) std::cout << (g ? ", " : "") << to_string(b[g]);
        std::cout << "]\n";
      }
    } else if (table->parsed()) {
      const auto rows = constant_table(min_genus, max_genus);
      if (opt.format == Format::Json) {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back({{"genus", r.genus}, {"b", to_string(r.b)}, {"c", to_string(r.c)}});
        std::cout << json{{"rows", arr}}.dump() << '\n';
      } else if (opt.format == Format::Csv) {
        std::cout << "genus,b,c\n";
        for (const auto& r : rows) std::cout << r.genus << ',' << to_string(r.b) << ',' << to_string(r.c) << '\n';
      } else {
        std::size_t wb = 3, wc = 3;
        for (const auto& r : rows) {
          wb = std::max(wb, to_string(r.b).size());
          wc = std::max(wc, to_string(r.c).size());
        }
        std::ostringstream os;
        os << std::left << std::setw(3) << "g" << " | " << std::setw(static_cast<int>(wb)) << "b_g" << " | " << "c_g\n";
        os << std::string(3, '-') << "-+-" << std::string(wb, '-') << "-+-" << std::string(wc, '-') << '\n';
        for (const auto& r : rows)
          os << std::left << std::setw(3) << r.genus << " | " << std::setw(static_cast<int>(wb)) << to_string(r.b)
             << " | " << to_string(r.c) << '\n';
        std::cout << os.str();
      }
    } else if (euler->parsed()) {
      const LambdaRingElem e = genus == 1 ? euler_class_genus1(dim) : euler_class(dim, genus);
      const std::string expr = format_expression(e, !absolute);
      if (opt.format == Format::Json) {
        std::cout << json{{"dim", dim}, {"genus", genus}, {"expression", expr}}.dump() << '\n';
      } else if (opt.format == Format::Csv) {
        std::cout << "dim,genus,expression\n" << dim << ',' << genus << ",\"" << expr << "\"\n";
      } else {
        std::cout << expr << '\n';
      }
    } else if (gw0->parsed()) {
      const Target x = Target::parse(target_spec);
      const auto ins = parse_insertions(insertions);
      std::string ins_text;
      for (const auto& i : ins) ins_text += (ins_text.empty() ? "" : ",") + std::to_string(i.class_index) + ":" + std::to_string(i.level);
      print_value(opt, {{"target", x.name}, {"genus", genus}, {"insertions", ins_text}}, {"target", "genus", "insertions"},
                  degree0_gw(x, genus, ins));
    } else if (verify->parsed()) {
      SuiteOptions so;
      if (verify_max_genus_given) so.max_genus = max_genus;
      so.max_points = max_points;
      const auto results = run_suite(suite, so);
      print_checks(opt, suite, results);
      if (timings)
        for (const auto& r : results) std::cerr << r.name << ": " << r.seconds << " s\n";
      for (const auto& r : results)
        if (!r.passed) status = 1;
    } else if (cache->parsed()) {
      if (!cache_path) throw FlagError(std::string("no cache file: pass --cache or set ") + kCacheEnvVar);
      if (cache_info->parsed()) {
        IntegralTable scratch;
        const auto rep = load_cache(*cache_path, scratch);
        if (opt.format == Format::Json) {
          std::cout << json{{"path", cache_path->string()}, {"found", rep.found}, {"version_ok", rep.version_ok},
                            {"entries", rep.loaded}, {"malformed", rep.malformed}}
                           .dump()
                    << '\n';
        } else {
          std::cout << "path: " << cache_path->string() << "\nfound: " << (rep.found ? "yes" : "no")
                    << "\nversion: " << (rep.version_ok ? "ok" : "mismatch") << "\nentries: " << rep.loaded
                    << "\nmalformed: " << rep.malformed << '\n';
        }
      } else if (cache_compact->parsed()) {
        IntegralTable merged;
        const std::size_t n = compact_cache(*cache_path, merged);
        std::cout << "compacted " << n << " entries into " << cache_path->string() << '\n';
      }
    }
  } catch (const FlagError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Underdetermined& e) {
    std::cerr << "underdetermined: " << e.what() << '\n';
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 3;
  }

  if (opt.stats)
    std::cerr << "cache: loaded " << loaded.loaded << ", computed " << integral_cache().misses() << '\n';
  if (cache_path && !cache->parsed()) {
    try {
      append_cache(*cache_path, integral_cache());
    } catch (const std::exception& e) {
      std::cerr << "warning: " << e.what() << '\n';
    }
  }
  return status;
}
