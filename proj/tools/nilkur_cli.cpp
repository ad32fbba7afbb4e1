// nilkur: Kuranishi obstruction ideals of complex parallelisable nilmanifolds
// and of nilmanifolds with a left-invariant complex structure.

#include "nilkur/catalog.hpp"
#include "nilkur/groebner.hpp"
#include "nilkur/kuranishi.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace nilkur;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kCheckFailure = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_salamon(const std::string& s) {
  const auto p = s.find_first_not_of(" \t\r\n");
  return p != std::string::npos && s[p] == '(';
}

struct AnalyzeOptions {
  std::string input;
  bool json = false;
  bool general = false;
  std::optional<unsigned> max_degree;
  std::optional<std::string> order;
};

KuranishiReport run_analysis(const AnalyzeOptions& o) {
  std::string text = o.input;
  if (!looks_like_salamon(text)) text = read_file(o.input);
  if (o.general || text.find("dw") != std::string::npos) {
    const ComplexStructureAlgebra H = parse_complex_structure(text);
    validate(H);
    if (classify_complex_structure(H) != ComplexStructureKind::parallelisable && !o.max_degree)
      throw MissingDegreeCap("a non-parallelisable structure needs --max-degree");
    return analyze(H, o.max_degree.value_or(0), o.input);
  }
  const LieAlgebra L = looks_like_salamon(text)
                           ? parse_salamon(text.substr(0, text.find_last_of(')') + 1))
                           : parse_structure_constants(text);
  validate(L);
  KuranishiReport r = analyze(L, looks_like_salamon(o.input) ? "" : o.input);
  return r;
}

int cmd_analyze(const AnalyzeOptions& o) {
  const KuranishiReport r = run_analysis(o);
  std::vector<Polynomial> basis;
  if (o.order) {
    const OrderKind kind = *o.order == "lex" ? OrderKind::lex : OrderKind::grevlex;
    basis = buchberger(IdealGens(r.generators), kind).polys();
  }
  if (o.json) {
    json j = json::parse(to_json(r));
    if (o.order) {
      json a = json::array();
      for (const auto& p : basis) a.push_back(p.to_string());
      j["groebner_basis"] = {{"order", *o.order}, {"polys", a}};
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << to_text(r);
    if (o.order) {
      std::cout << "groebner basis (" << *o.order << "), " << basis.size() << " elements\n";
      for (const auto& p : basis) std::cout << "    " << p.to_string() << '\n';
    }
  }
  return kOk;
}

template <typename T>
std::string opt_str(const std::optional<T>& v) {
  if (!v) return "-";
  if constexpr (std::is_same_v<T, bool>)
    return *v ? "yes" : "no";
  else
    return std::to_string(*v);
}

int cmd_catalog(bool as_json) {
  if (as_json) {
    json a = json::array();
    for (const auto& e : catalog()) {
      json j = {{"name", e.name}, {"definition", e.definition}, {"general", e.general}};
      if (e.nu) j["nu"] = *e.nu;
      if (e.h1_theta) j["h1_theta"] = *e.h1_theta;
      if (e.smooth) j["smooth"] = *e.smooth;
      if (e.d) j["d"] = *e.d;
      if (!e.generators.empty()) j["generators"] = e.generators;
      if (!e.ideal_stem.empty()) j["printed_ideal"] = std::string(embedded_ideal_text(e.ideal_stem));
      if (!e.note.empty()) j["note"] = e.note;
      a.push_back(j);
    }
    std::cout << a.dump(2) << '\n';
    return kOk;
  }
  std::cout << std::left << std::setw(20) << "name" << std::setw(30) << "definition" << std::setw(5) << "nu"
            << std::setw(6) << "h1" << std::setw(8) << "smooth" << "d\n";
  for (const auto& e : catalog()) {
    std::string def = e.general ? "(general structure)" : e.definition;
    std::cout << std::setw(20) << e.name << std::setw(30) << def << std::setw(5) << opt_str(e.nu) << std::setw(6)
              << opt_str(e.h1_theta) << std::setw(8) << opt_str(e.smooth) << opt_str(e.d) << '\n';
  }
  return kOk;
}

int cmd_verify(const std::string& selector, const VerifyOptions& options, bool as_json) {
  std::vector<const CatalogEntry*> entries;
  if (selector == "all") {
    for (const auto& e : catalog()) entries.push_back(&e);
  } else {
    const CatalogEntry* e = find_entry(selector);
    if (!e) throw InputError("unknown catalog entry '" + selector + "' (see `nilkur catalog`)");
    entries.push_back(e);
  }
  const auto results = verify(entries, options);
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& r : results) {
    if (r.status == CheckStatus::pass) ++passed;
    if (r.status == CheckStatus::fail) ++failed;
    if (r.status == CheckStatus::skipped) ++skipped;
  }
  const std::size_t decided = passed + failed;
  if (as_json) {
    json a = json::array();
    for (const auto& r : results)
      a.push_back({{"entry", r.entry},
                   {"check", r.check},
                   {"status", to_string(r.status)},
                   {"detail", r.detail},
                   {"seconds", r.seconds}});
    std::cout << json{{"results", a}, {"passed", passed}, {"failed", failed}, {"skipped", skipped}}.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      std::ostringstream t;
      t << std::fixed << std::setprecision(3) << r.seconds << "s";
      std::cout << to_string(r.status) << "  " << std::left << std::setw(20) << r.entry << std::setw(22) << r.check
                << r.detail << "  [" << t.str() << "]\n";
    }
    std::cout << "PASSED " << passed << "/" << decided << '\n';
    if (skipped) std::cout << "SKIPPED " << skipped << '\n';
  }
  return failed ? kCheckFailure : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kuranishi obstruction ideals of nilmanifolds"};
  app.require_subcommand(1);

  AnalyzeOptions ao;
  auto* analyze_cmd = app.add_subcommand("analyze", "analyse an algebra given in Salamon notation or as a file");
  analyze_cmd->add_option("input", ao.input, "Salamon string such as \"(0,0,12,13)\" or a file")->required();
  analyze_cmd->add_flag("--json", ao.json, "print the report as JSON");
  analyze_cmd->add_flag("--general", ao.general, "read the input as a complex structure (dw notation)");
  analyze_cmd->add_option("--max-degree", ao.max_degree, "cap on the recursion degree")->check(CLI::Range(1u, 64u));
  analyze_cmd->add_option("--order", ao.order, "also print a reduced Groebner basis in this order")
      ->check(CLI::IsMember({"grevlex", "lex"}));

  bool catalog_json = false;
  auto* catalog_cmd = app.add_subcommand("catalog", "list the embedded algebras with their expected values");
  catalog_cmd->add_flag("--json", catalog_json, "print as JSON");

  std::string selector;
  VerifyOptions vo;
  bool verify_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "check computed results against the embedded catalog");
  verify_cmd->add_option("selector", selector, "\"all\" or an entry name / Salamon string")->required();
  verify_cmd->add_option("--timeout", vo.timeout_seconds, "seconds allowed per Groebner computation")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--jobs", vo.jobs, "entries verified concurrently")->check(CLI::Range(1u, 256u));
  verify_cmd->add_flag("--json", verify_json, "print results as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(ao);
    if (*catalog_cmd) return cmd_catalog(catalog_json);
    if (*verify_cmd) return cmd_verify(selector, vo, verify_json);
  } catch (const Timeout& e) {
    std::cerr << "nilkur: " << e.what() << '\n';
    return kCheckFailure;
  } catch (const ClosednessViolation& e) {
    std::cerr << "nilkur: " << e.what() << '\n';
    return kCheckFailure;
  } catch (const std::exception& e) {
    std::cerr << "nilkur: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
