#include "monotri/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include "monotri/brute.hpp"
#include "monotri/closed_forms.hpp"
#include "monotri/errors.hpp"
#include "monotri/genfun.hpp"
#include "monotri/verify.hpp"

namespace monotri::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSymbolicGuard = 9;
constexpr int kVsasmBruteGuard = 7;

struct Outcome {
  Json result;
  std::string text;  // text-mode rendering of result
  std::string method;
  std::vector<std::string> warnings;
  int code = kOk;
};

struct Common {
  std::string format = "text";
  std::string output;
  bool unsafe = false;
};

std::vector<long> iota_row(int n) {
  std::vector<long> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1L);
  return v;
}

std::string join(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

void guard(bool ok, bool unsafe, const std::string& what) {
  if (!ok && !unsafe) throw InvalidInput(what + " exceeds the size guard; pass --unsafe-sizes to override");
}

Outcome count_outcome(const BigInt& v, std::string method) {
  Outcome o;
  o.result = to_string(v);
  o.text = to_string(v);
  o.method = std::move(method);
  return o;
}

// Runs a second method and turns a disagreement into exit code 1.
void crosscheck(Outcome& o, const std::string& other_method, const BigInt& primary, const BigInt& other) {
  o.method += "+" + other_method;
  if (primary != other) {
    o.code = kMismatch;
    o.warnings.push_back("crosscheck mismatch: " + other_method + " gives " + to_string(other));
  }
}

BigInt exact(const Rational& r, const char* what) { return to_integer(r, what); }

// --- hmt count ---------------------------------------------------------------

struct HmtCount {
  int rows = 1;
  long max = 1;
  std::vector<long> bottom;
  std::string method = "recursion";
  bool weak = false;
  bool cross = false;
};

BigInt hmt_count_by(const HmtCount& q, const std::string& method, bool unsafe) {
  const bool symbolic = method != "brute" && method != "recursion";
  if (symbolic) guard(q.rows <= kSymbolicGuard, unsafe, "symbolic polynomial with " + std::to_string(q.rows) + " rows");
  if (q.weak) {
    if (method == "brute") return count_weak_hmt_brute(q.rows, q.max, q.bottom);
    return exact(beta(q.rows, q.max, q.bottom), "beta");
  }
  if (method == "brute") return count_hmt_brute(q.rows, q.max, q.bottom);
  if (method == "recursion") return exact(gamma_recursive(q.rows, q.max, q.bottom), "recursion");
  if (method == "theorem") return gamma_value(q.rows, q.max, q.bottom);
  if (method == "beta") return exact(gamma_via_beta(q.rows, q.max, q.bottom), "beta route");
  return exact(gamma_via_gamma_bar(q.rows, q.max, q.bottom), "gamma-bar route");
}

Outcome hmt_count(const HmtCount& q, bool unsafe) {
  check_hmt_input(q.rows, q.max, q.bottom);
  if (q.weak && q.method != "brute" && q.method != "beta") {
    throw InvalidInput("weak-row counts support --method brute or beta");
  }
  const BigInt v = hmt_count_by(q, q.method, unsafe);
  Outcome o = count_outcome(v, q.method);
  if (q.cross) {
    const std::string other = q.method == "brute" ? (q.weak ? "beta" : "recursion") : "brute";
    crosscheck(o, other, v, hmt_count_by(q, other, unsafe));
  }
  return o;
}

// --- hmt poly ----------------------------------------------------------------

Outcome hmt_poly(int rows, const std::string& target, bool unsafe) {
  if (rows < 1) throw InvalidInput("--rows must be positive");
  guard(rows <= kSymbolicGuard, unsafe, "symbolic polynomial with " + std::to_string(rows) + " rows");
  MultiPoly p;
  if (target == "gamma") p = gamma_theorem1(rows);
  else if (target == "gamma_star") p = gamma_star(rows);
  else if (target == "gamma_bar") p = gamma_bar(rows);
  else if (target == "alpha") p = alpha_poly(rows);
  else p = gamma_base(rows);
  Outcome o;
  o.text = to_string(p);
  o.result = o.text;
  o.method = target == "alpha" ? "alpha-operator" : target == "beta_base" ? "product" : "theorem";
  return o;
}

// --- mt count ----------------------------------------------------------------

BigInt mt_count_by(const std::vector<long>& bottom, const std::string& method) {
  if (method == "brute") return count_mt_brute(bottom);
  return alpha_value(static_cast<int>(bottom.size()), bottom);
}

Outcome mt_count(const std::vector<long>& bottom, const std::string& method, bool cross) {
  if (bottom.empty()) throw InvalidInput("--bottom must not be empty");
  for (std::size_t i = 1; i < bottom.size(); ++i) {
    if (bottom[i] <= bottom[i - 1]) throw InvalidInput("bottom row must be strictly increasing: " + join(bottom));
  }
  const BigInt v = mt_count_by(bottom, method);
  Outcome o = count_outcome(v, method);
  if (cross) {
    const std::string other = method == "brute" ? "alpha" : "brute";
    crosscheck(o, other, v, mt_count_by(bottom, other));
  }
  return o;
}

// --- asm count ---------------------------------------------------------------

BigInt asm_count_by(int n, const std::string& method, bool unsafe, std::vector<std::string>& warnings) {
  if (method == "enumerate") {
    guard(n <= kAsmSizeGuard, unsafe, "ASM enumeration of order " + std::to_string(n));
    auto e = enumerate_asm(n, {}, unsafe ? n : kAsmSizeGuard);
    warnings.insert(warnings.end(), e.warnings.begin(), e.warnings.end());
    return e.count;
  }
  if (method == "alpha") return alpha_value(n, iota_row(n));
  if (method == "constant-term") {
    guard(n <= kAsmSizeGuard, unsafe, "constant-term extraction of order " + std::to_string(n));
    return asm_constant_term(n);
  }
  return asm_count(n);
}

Outcome asm_count_cmd(int n, const std::string& method, bool cross, bool unsafe) {
  if (n < 1) throw InvalidInput("--size must be positive");
  std::vector<std::string> warnings;
  const BigInt v = asm_count_by(n, method, unsafe, warnings);
  Outcome o = count_outcome(v, method);
  o.warnings = warnings;
  if (cross) {
    std::string other = method == "product" ? "enumerate" : "product";
    if (other == "enumerate" && n > kAsmSizeGuard && !unsafe) other = "alpha";
    crosscheck(o, other, v, asm_count_by(n, other, unsafe, o.warnings));
  }
  return o;
}

// --- vsasm count -------------------------------------------------------------

BigInt vsasm_count_by(int size, const std::string& method, bool unsafe) {
  const int half = (size - 1) / 2;
  if (method == "brute") {
    guard(size <= kVsasmBruteGuard, unsafe, "VSASM enumeration of order " + std::to_string(size));
    return count_vsasm_brute(half, size);
  }
  if (method == "hmt") return count_hmt_brute(2 * half, half, iota_row(half));
  return vsasm_count(half);
}

Outcome vsasm_count_cmd(int size, const std::string& method, bool cross, bool unsafe) {
  if (size < 3 || size % 2 == 0) throw InvalidInput("--size must be an odd order >= 3");
  const BigInt v = vsasm_count_by(size, method, unsafe);
  Outcome o = count_outcome(v, method);
  if (cross) {
    std::string other = method == "product" ? "brute" : "product";
    if (other == "brute" && size > kVsasmBruteGuard && !unsafe) other = "hmt";
    crosscheck(o, other, v, vsasm_count_by(size, other, unsafe));
  }
  return o;
}

// --- gf coeff ----------------------------------------------------------------

Outcome gf_coeff_cmd(const std::string& family, int rows, std::optional<long> max, const std::vector<long>& exps,
                     bool unsafe) {
  GfQuery q;
  q.family = *parse_gf_family(family);
  q.n = rows;
  q.x = max;
  q.exponents = exps;
  if (q.family == GfFamily::HMT && !max) throw InvalidInput("the hmt family needs --max");
  if (q.family != GfFamily::HMT && max) throw InvalidInput("--max only applies to the hmt family");
  if (q.family == GfFamily::ASM_CONSTANT_TERM) {
    guard(rows <= kAsmSizeGuard, unsafe, "constant-term extraction of order " + std::to_string(rows));
  }
  GfResult r = gf_coeff(q);
  Outcome o = count_outcome(r.value, family);
  o.warnings = std::move(r.warnings);
  return o;
}

// --- verify ------------------------------------------------------------------

Outcome verify_cmd(const VerifyOptions& opts) {
  const VerifyReport rep = run_verify(opts);
  Outcome o;
  o.method = "suite:" + opts.suite;
  Json props = Json::array();
  std::ostringstream text;
  for (const auto& p : rep.properties) {
    Json j;
    j["name"] = p.name;
    j["instances"] = p.instances;
    j["failures"] = p.failures;
    j["passed"] = p.passed();
    j["counterexample"] = p.counterexample ? Json(*p.counterexample) : Json(nullptr);
    props.push_back(std::move(j));
    text << (p.passed() ? "PASS " : "FAIL ") << p.name << " (" << p.instances << " instances";
    if (p.failures) text << ", " << p.failures << " failures";
    text << ")";
    if (p.counterexample) text << ": " << *p.counterexample;
    text << "\n";
  }
  text << (rep.passed() ? "all properties passed" : "some properties failed");
  o.result = Json{{"passed", rep.passed()}, {"properties", std::move(props)}};
  o.text = text.str();
  o.code = rep.passed() ? kOk : kMismatch;
  return o;
}

void emit(const Common& c, const Json& query, const Outcome& o, long elapsed_ms, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (!c.output.empty()) {
    file.open(c.output);
    if (!file) throw InvalidInput("cannot open output file '" + c.output + "'");
    sink = &file;
  }
  if (c.format == "json") {
    Json env;
    env["query"] = query;
    env["result"] = o.result;
    env["method"] = o.method;
    env["elapsed_ms"] = elapsed_ms;
    env["warnings"] = o.warnings;
    *sink << env.dump(2) << "\n";
  } else {
    *sink << o.text << "\n";
    for (const auto& w : o.warnings) err << "warning: " << w << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counting of halved monotone triangles, monotone triangles and ASMs", "monotri"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->envname("MONOTRI_FORMAT");
    sub->add_option("--output", common.output, "Write the result to this file");
    sub->add_flag("--unsafe-sizes", common.unsafe, "Lift the size guards");
  };

  std::function<Outcome()> action;
  Json query;

  // hmt count / hmt poly
  auto* hmt = app.add_subcommand("hmt", "Halved monotone triangles");
  hmt->require_subcommand(1);
  HmtCount hc;
  auto* hmt_count_app = hmt->add_subcommand("count", "Count halved triangles with a given bottom row");
  hmt_count_app->add_option("--rows", hc.rows, "Number of rows n")->required();
  hmt_count_app->add_option("--max", hc.max, "Upper bound x on all entries")->required();
  hmt_count_app->add_option("--bottom", hc.bottom, "Bottom row, comma separated")->required()->delimiter(',');
  hmt_count_app->add_option("--method", hc.method, "Counting method")
      ->check(CLI::IsMember({"brute", "recursion", "theorem", "beta", "gamma-bar"}));
  hmt_count_app->add_flag("--weak", hc.weak, "Count weakly increasing rows instead");
  hmt_count_app->add_flag("--crosscheck", hc.cross, "Also run a second method and compare");
  add_common(hmt_count_app);
  hmt_count_app->callback([&] {
    if (hc.weak && hmt_count_app->get_option("--method")->count() == 0) hc.method = "beta";
    query = {{"command", "hmt count"}, {"rows", hc.rows}, {"max", hc.max}, {"bottom", hc.bottom}, {"weak", hc.weak}};
    action = [&] { return hmt_count(hc, common.unsafe); };
  });

  int poly_rows = 1;
  std::string target = "gamma";
  auto* hmt_poly_app = hmt->add_subcommand("poly", "Print a counting polynomial");
  hmt_poly_app->add_option("--rows", poly_rows, "Number of rows n")->required();
  hmt_poly_app->add_option("--target", target, "Which polynomial")
      ->check(CLI::IsMember({"gamma", "gamma_star", "gamma_bar", "alpha", "beta_base"}));
  add_common(hmt_poly_app);
  hmt_poly_app->callback([&] {
    query = {{"command", "hmt poly"}, {"rows", poly_rows}, {"target", target}};
    action = [&] { return hmt_poly(poly_rows, target, common.unsafe); };
  });

  // mt count
  std::vector<long> mt_bottom;
  std::string mt_method = "alpha";
  bool mt_cross = false;
  auto* mt = app.add_subcommand("mt", "Monotone triangles");
  mt->require_subcommand(1);
  auto* mt_count_app = mt->add_subcommand("count", "Count monotone triangles with a given bottom row");
  mt_count_app->add_option("--bottom", mt_bottom, "Bottom row, comma separated")->required()->delimiter(',');
  mt_count_app->add_option("--method", mt_method, "Counting method")->check(CLI::IsMember({"brute", "alpha"}));
  mt_count_app->add_flag("--crosscheck", mt_cross, "Also run a second method and compare");
  add_common(mt_count_app);
  mt_count_app->callback([&] {
    query = {{"command", "mt count"}, {"bottom", mt_bottom}};
    action = [&] { return mt_count(mt_bottom, mt_method, mt_cross); };
  });

  // asm count
  int asm_size = 1;
  std::string asm_method = "product";
  bool asm_cross = false;
  auto* asm_app = app.add_subcommand("asm", "Alternating sign matrices");
  asm_app->require_subcommand(1);
  auto* asm_count_app = asm_app->add_subcommand("count", "Count n x n alternating sign matrices");
  asm_count_app->add_option("--size", asm_size, "Order n")->required();
  asm_count_app->add_option("--method", asm_method, "Counting method")
      ->check(CLI::IsMember({"enumerate", "alpha", "constant-term", "product"}));
  asm_count_app->add_flag("--crosscheck", asm_cross, "Also run a second method and compare");
  add_common(asm_count_app);
  asm_count_app->callback([&] {
    query = {{"command", "asm count"}, {"size", asm_size}};
    action = [&] { return asm_count_cmd(asm_size, asm_method, asm_cross, common.unsafe); };
  });

  // vsasm count
  int vs_size = 3;
  std::string vs_method = "product";
  bool vs_cross = false;
  auto* vs_app = app.add_subcommand("vsasm", "Vertically symmetric alternating sign matrices");
  vs_app->require_subcommand(1);
  auto* vs_count_app = vs_app->add_subcommand("count", "Count vertically symmetric ASMs of odd order");
  vs_count_app->add_option("--size", vs_size, "Odd order 2n+1")->required();
  vs_count_app->add_option("--method", vs_method, "Counting method")->check(CLI::IsMember({"brute", "hmt", "product"}));
  vs_count_app->add_flag("--crosscheck", vs_cross, "Also run a second method and compare");
  add_common(vs_count_app);
  vs_count_app->callback([&] {
    query = {{"command", "vsasm count"}, {"size", vs_size}};
    action = [&] { return vsasm_count_cmd(vs_size, vs_method, vs_cross, common.unsafe); };
  });

  // gf coeff
  std::string family = "mt";
  int gf_rows = 1;
  std::optional<long> gf_max;
  std::vector<long> exps;
  auto* gf = app.add_subcommand("gf", "Generating-function coefficients");
  gf->require_subcommand(1);
  auto* gf_coeff_app = gf->add_subcommand("coeff", "Extract one coefficient");
  gf_coeff_app->add_option("--family", family, "mt, hmt or asm-constant-term")
      ->check(CLI::IsMember({"mt", "hmt", "asm-constant-term"}));
  gf_coeff_app->add_option("--rows", gf_rows, "n")->required();
  gf_coeff_app->add_option("--max", gf_max, "x (hmt only)");
  gf_coeff_app->add_option("--exponents", exps, "Exponent vector, comma separated")->delimiter(',');
  add_common(gf_coeff_app);
  gf_coeff_app->callback([&] {
    query = {{"command", "gf coeff"}, {"family", family}, {"rows", gf_rows}, {"exponents", exps}};
    if (gf_max) query["max"] = *gf_max;
    action = [&] { return gf_coeff_cmd(family, gf_rows, gf_max, exps, common.unsafe); };
  });

  // verify
  VerifyOptions vopts;
  auto* verify_app = app.add_subcommand("verify", "Run property suites");
  verify_app->add_option("--suite", vopts.suite, "Suite name")
      ->check(CLI::IsMember({"all", "recursion", "operators", "symmetry", "genfun", "asm"}));
  verify_app->add_option("--max-rows", vopts.max_rows, "Largest row count in exhaustive checks");
  verify_app->add_option("--max-x", vopts.max_x, "Largest x in exhaustive checks");
  verify_app->add_option("--seed", vopts.seed, "Seed for randomized properties");
  verify_app->add_option("--instances", vopts.instances, "Random instances per property");
  add_common(verify_app);
  verify_app->callback([&] {
    vopts.unsafe_sizes = common.unsafe;
    query = {{"command", "verify"},   {"suite", vopts.suite}, {"max_rows", vopts.max_rows},
             {"max_x", vopts.max_x}, {"seed", vopts.seed},   {"instances", vopts.instances}};
    action = [&] { return verify_cmd(vopts); };
  });

  std::vector<const char*> argv{"monotri"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = action();
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    emit(common, query, o, static_cast<long>(ms), out, err);
    return o.code;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const NotInvertible& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace monotri::cli
