// Command-line front end: analysis, construction, realization, plot data.
//
// Output contract: stdout carries only the payload; provenance (inputs,
// version, windows/bounds, heuristic flags) goes to stderr as "# key: value"
// lines in text/csv mode and into the JSON envelope in json mode. JSON
// envelopes use sorted keys, so parse + re-dump is byte-identical.

#include <CLI11.hpp>
#include <json.hpp>

#include <ctime>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "numon/catenary.hpp"
#include "numon/construction.hpp"
#include "numon/factorization.hpp"
#include "numon/monoid.hpp"
#include "numon/oracle.hpp"
#include "numon/serialize.hpp"
#include "numon/version.hpp"

namespace {

using numon::Value;
using Json = nlohmann::json;

std::string join(const std::vector<Value>& values, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string angled(const std::vector<Value>& g) { return "<" + join(g) + ">"; }
std::string braced(const std::vector<Value>& v) { return "{" + join(v) + "}"; }

std::string iso_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<Value> parse_list_arg(const std::string& name,
                                  const std::string& text) {
  try {
    return numon::parse_value_list(text);
  } catch (const std::invalid_argument& ex) {
    throw CLI::ValidationError(name, ex.what());
  }
}

Json monoid_json(const numon::NumericalMonoid& S) {
  Json obj;
  obj["frobenius"] = S.frobenius();
  obj["generators"] = S.generators();
  return obj;
}

// Everything a command handler needs to emit its result.
struct Emitter {
  std::string format = "text";  // text | json | csv
  bool timestamp = true;

  Json env;  // json-mode envelope, filled by the handler
  Json env_prov = Json::object();  // typed copies for the json envelope
  std::vector<std::pair<std::string, std::string>> prov;

  void provenance(const std::string& key, const std::string& value) {
    prov.emplace_back(key, value);
    env_prov[key] = value;
  }
  void provenance(const std::string& key, const char* value) {
    provenance(key, std::string(value));
  }
  void provenance(const std::string& key, Value value) {
    prov.emplace_back(key, std::to_string(value));
    env_prov[key] = value;
  }
  void provenance(const std::string& key, bool value) {
    prov.emplace_back(key, value ? "true" : "false");
    env_prov[key] = value;
  }

  bool json() const { return format == "json"; }
  bool csv() const { return format == "csv"; }

  // Call after the handler has written any text/csv payload to stdout.
  void finish(const std::string& command) {
    if (json()) {
      env["command"] = command;
      env["version"] = std::string(numon::kVersionString);
      env.update(env_prov);
      if (timestamp) env["timestamp"] = iso_now();
      std::cout << env.dump() << "\n";
      return;
    }
    std::cerr << "# command: " << command << "\n";
    for (const auto& [k, v] : prov) std::cerr << "# " << k << ": " << v << "\n";
    std::cerr << "# version: " << numon::kVersionString << "\n";
    if (timestamp) std::cerr << "# timestamp: " << iso_now() << "\n";
  }
};

void cmd_analyze(Emitter& em, const std::string& gens_arg,
                 std::optional<Value> window,
                 const numon::CatenaryOptions& options) {
  const auto S = numon::new_monoid(parse_list_arg("generators", gens_arg));
  const auto apery = S.apery_set(S.smallest_generator());
  const auto betti = numon::betti_elements(S, options);
  Value catenary = 0;
  for (Value b : betti)
    catenary = std::max(catenary, numon::catenary_element(S, b, options));
  const auto cs = numon::catenary_set(S, window, options);

  em.provenance("input", gens_arg);
  em.provenance("window", cs.profile.window_end);
  em.provenance("tail_stable", cs.profile.tail_stable);
  if (em.json()) {
    em.env["monoid"] = monoid_json(S);
    em.env["apery"] = apery;
    em.env["betti"] = betti;
    em.env["catenary"] = catenary;
    em.env["cset"] = cs.values;
  } else {
    std::cout << "generators: " << join(S.generators()) << "\n"
              << "frobenius: " << S.frobenius() << "\n"
              << "apery: " << join(apery) << "\n"
              << "betti: " << join(betti) << "\n"
              << "catenary: " << catenary << "\n"
              << "cset: " << join(cs.values) << "\n";
  }
  em.finish("analyze");
}

void cmd_factorize(Emitter& em, const std::string& gens_arg, Value n) {
  const auto S = numon::new_monoid(parse_list_arg("generators", gens_arg));
  const auto z = numon::factorizations(S, n);
  em.provenance("input", gens_arg);
  em.provenance("n", n);
  if (em.json()) {
    em.env["factorizations"] = z;
  } else {
    for (const auto& a : z) std::cout << join(a) << "\n";
  }
  em.finish("factorize");
}

void cmd_catenary(Emitter& em, const std::string& gens_arg, Value n,
                  bool use_oracle, const numon::CatenaryOptions& options) {
  const auto S = numon::new_monoid(parse_list_arg("generators", gens_arg));
  const Value c = use_oracle ? numon::oracle::oracle_catenary(S, n)
                             : numon::catenary_element(S, n, options);
  em.provenance("input", gens_arg);
  em.provenance("n", n);
  if (use_oracle) em.provenance("oracle", true);
  if (em.json())
    em.env["catenary"] = c;
  else
    std::cout << c << "\n";
  em.finish("catenary");
}

void cmd_betti(Emitter& em, const std::string& gens_arg, bool use_oracle,
               const numon::CatenaryOptions& options) {
  const auto S = numon::new_monoid(parse_list_arg("generators", gens_arg));
  const Value scan_end = numon::betti_scan_end(S);
  const auto betti = use_oracle ? numon::oracle::oracle_betti(S, scan_end)
                                : numon::betti_elements(S, options);
  em.provenance("input", gens_arg);
  em.provenance("scan_end", scan_end);
  if (use_oracle) em.provenance("oracle", true);
  if (em.json())
    em.env["betti"] = betti;
  else
    std::cout << join(betti) << "\n";
  em.finish("betti");
}

void cmd_cset(Emitter& em, const std::string& gens_arg,
              std::optional<Value> window,
              const numon::CatenaryOptions& options) {
  const auto S = numon::new_monoid(parse_list_arg("generators", gens_arg));
  const auto cs = numon::catenary_set(S, window, options);
  em.provenance("input", gens_arg);
  em.provenance("window", cs.profile.window_end);
  em.provenance("tail_stable", cs.profile.tail_stable);
  if (em.json())
    em.env["cset"] = cs.values;
  else
    std::cout << join(cs.values) << "\n";
  em.finish("cset");
}

void cmd_glue(Emitter& em, const std::string& g1_arg, Value d1,
              const std::string& g2_arg, Value d2) {
  const auto s1 = numon::new_monoid(parse_list_arg("g1", g1_arg));
  const auto s2 = numon::new_monoid(parse_list_arg("g2", g2_arg));
  const auto gluing = numon::glue(s1, d1, s2, d2);
  em.provenance("input", g1_arg + " *" + std::to_string(d1) + " + " + g2_arg +
                             " *" + std::to_string(d2));
  if (em.json()) {
    em.env["d"] = gluing.spec.d;
    em.env["monoid"] = monoid_json(gluing.result);
  } else {
    std::cout << "d: " << gluing.spec.d << "\n"
              << "generators: " << join(gluing.result.generators()) << "\n"
              << "frobenius: " << gluing.result.frobenius() << "\n";
  }
  em.finish("glue");
}

void cmd_adjoin(Emitter& em, const std::string& gens_arg, Value c, Value b,
                const numon::CatenaryOptions& options) {
  const auto S = numon::new_monoid(parse_list_arg("generators", gens_arg));
  const auto step = numon::adjoin(S, c, b, options);
  const auto betti = numon::adjoined_betti(step, options);
  em.provenance("input", gens_arg + " c=" + std::to_string(c) +
                             " b=" + std::to_string(b));
  // The claimed set is exact: adjoin keeps only the base degrees that
  // survive the shift by b.  The base window that seeded it is reported.
  em.provenance("base_window",
                numon::default_window_end(step.base, options));
  if (em.json()) {
    em.env["c"] = step.c;
    em.env["b"] = step.b;
    em.env["cb"] = step.cb;
    em.env["monoid"] = monoid_json(step.result);
    em.env["cset"] = step.claimed_set;
    em.env["betti"] = betti;
  } else {
    std::cout << "c: " << step.c << "\n"
              << "b: " << step.b << "\n"
              << "cb: " << step.cb << "\n"
              << "generators: " << join(step.result.generators()) << "\n"
              << "cset: " << join(step.claimed_set) << "\n"
              << "betti: " << join(betti) << "\n";
  }
  em.finish("adjoin");
}

int cmd_realize(Emitter& em, const std::string& target_arg,
                const std::string& blist_arg, bool explicit_policy,
                std::optional<Value> verify_budget,
                const numon::CatenaryOptions& options) {
  const auto target = parse_list_arg("target", target_arg);
  const auto blist = explicit_policy
                         ? parse_list_arg("--b-list", blist_arg)
                         : std::vector<Value>{};
  const auto policy = explicit_policy ? numon::BPolicy::Explicit
                                      : numon::BPolicy::Smallest;
  const auto trace = numon::realize(target, policy, blist, options);

  em.provenance("input", target_arg);
  em.provenance("policy", explicit_policy ? "explicit" : "smallest");
  // Catenary sets in the trace come from the verified base plus the
  // adjoin recursion, not from a windowed sweep.
  em.provenance("exact", true);

  if (em.json()) {
    em.env["target"] = trace.target;
    Json base;
    base["monoid"] = monoid_json(trace.base);
    base["cset"] = trace.base_set;
    em.env["base"] = base;
    Json steps = Json::array();
    for (const auto& step : trace.steps) {
      Json row;
      row["c"] = step.c;
      row["b"] = step.b;
      row["cb"] = step.cb;
      row["monoid"] = monoid_json(step.result);
      row["cset"] = step.claimed_set;
      steps.push_back(row);
    }
    em.env["steps"] = steps;
    Json final_obj;
    final_obj["monoid"] = monoid_json(trace.final_monoid);
    final_obj["cset"] = trace.final_set;
    em.env["final"] = final_obj;
  } else if (em.csv()) {
    std::cout << "c,b,generators,catenary_set\n";
    std::cout << ",," << join(trace.base.generators(), " ") << ","
              << join(trace.base_set, " ") << "\n";
    for (const auto& step : trace.steps)
      std::cout << step.c << "," << step.b << ","
                << join(step.result.generators(), " ") << ","
                << join(step.claimed_set, " ") << "\n";
  } else {
    std::cout << "c  b  monoid  catenary set\n";
    std::cout << "-  -  " << angled(trace.base.generators()) << "  "
              << braced(trace.base_set) << "\n";
    for (const auto& step : trace.steps)
      std::cout << step.c << "  " << step.b << "  "
                << angled(step.result.generators()) << "  "
                << braced(step.claimed_set) << "\n";
  }

  int exit_code = 0;
  if (verify_budget) {
    const auto report = numon::verify_trace(trace, *verify_budget, options);
    if (em.json()) {
      Json checks = Json::array();
      for (const auto& check : report.checks) {
        Json row;
        row["name"] = check.name;
        row["pass"] = check.pass;
        row["detail"] = check.detail;
        checks.push_back(row);
      }
      Json verify;
      verify["checks"] = checks;
      verify["all_pass"] = report.all_pass;
      em.env["verify"] = verify;
    } else {
      for (const auto& check : report.checks)
        std::cout << "verify: " << check.name << ": "
                  << (check.pass ? "pass" : "FAIL")
                  << (check.detail.empty() || check.pass
                          ? ""
                          : " (" + check.detail + ")")
                  << "\n";
      std::cout << (report.all_pass ? "verify: all checks passed"
                                    : "verify: FAILED")
                << "\n";
    }
    em.provenance("verify_budget", *verify_budget);
    if (!report.all_pass) exit_code = 1;
  }
  em.finish("realize");
  return exit_code;
}

void cmd_plot_data(Emitter& em, const std::string& gens_arg,
                   std::optional<Value> window,
                   const numon::CatenaryOptions& options) {
  const auto S = numon::new_monoid(parse_list_arg("generators", gens_arg));
  const auto cs = numon::catenary_set(S, window, options);
  em.provenance("input", gens_arg);
  em.provenance("window", cs.profile.window_end);
  em.provenance("tail_stable", cs.profile.tail_stable);
  if (em.json()) {
    Json rows = Json::array();
    for (const auto& entry : cs.profile.entries)
      rows.push_back({entry.element, entry.catenary});
    em.env["rows"] = rows;
  } else {
    std::cout << "n,catenary\n";
    for (const auto& entry : cs.profile.entries)
      std::cout << entry.element << "," << entry.catenary << "\n";
  }
  em.finish("plot-data");
}

}  // namespace

int main(int argc, char** argv) {
  Emitter em;
  numon::CatenaryOptions options;
  int exit_code = 0;

  CLI::App app{
      "factorization invariants and catenary-degree realization for "
      "numerical monoids"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(numon::kVersionString));
  app.add_option("--format", em.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  bool no_timestamp = false;
  app.add_flag("--no-timestamp", no_timestamp,
               "Omit the timestamp from provenance output");
  app.add_option("--threads", options.threads,
                 "Worker threads for windowed sweeps (0 = hardware)");
  app.add_option("--cap", options.factorization_cap,
                 "Per-element factorization cap before ExplosionGuard")
      ->capture_default_str();

  std::string gens_arg, g2_arg, target_arg, blist_arg;
  Value n = 0, c = 0, b = 0, d1 = 1, d2 = 1;
  std::optional<Value> window, verify_budget;
  bool use_oracle = false;

  auto* analyze = app.add_subcommand(
      "analyze", "Generators, Frobenius, Apery, Betti, catenary data");
  analyze->add_option("generators", gens_arg, "Comma-separated generators")
      ->required();
  analyze->add_option("--window", window, "Catenary sweep window end");
  analyze->callback([&] {
    em.timestamp = !no_timestamp;
    cmd_analyze(em, gens_arg, window, options);
  });

  auto* factorize =
      app.add_subcommand("factorize", "All factorizations of an element");
  factorize->add_option("generators", gens_arg, "Comma-separated generators")
      ->required();
  factorize->add_option("n", n, "Element to factor")->required();
  factorize->callback([&] {
    em.timestamp = !no_timestamp;
    cmd_factorize(em, gens_arg, n);
  });

  auto* catenary =
      app.add_subcommand("catenary", "Catenary degree of one element");
  catenary->add_option("generators", gens_arg, "Comma-separated generators")
      ->required();
  catenary->add_option("n", n, "Element")->required();
  catenary->add_flag("--use-oracle", use_oracle)->group("");
  catenary->callback([&] {
    em.timestamp = !no_timestamp;
    cmd_catenary(em, gens_arg, n, use_oracle, options);
  });

  auto* betti = app.add_subcommand("betti", "Betti elements of a monoid");
  betti->add_option("generators", gens_arg, "Comma-separated generators")
      ->required();
  betti->add_flag("--use-oracle", use_oracle)->group("");
  betti->callback([&] {
    em.timestamp = !no_timestamp;
    cmd_betti(em, gens_arg, use_oracle, options);
  });

  auto* cset = app.add_subcommand("cset", "Set of catenary degrees");
  cset->add_option("generators", gens_arg, "Comma-separated generators")
      ->required();
  cset->add_option("--window", window, "Sweep window end (default heuristic)");
  cset->callback([&] {
    em.timestamp = !no_timestamp;
    cmd_cset(em, gens_arg, window, options);
  });

  auto* glue = app.add_subcommand("glue", "Gluing d1*S1 + d2*S2");
  glue->add_option("g1", gens_arg, "Generators of S1")->required();
  glue->add_option("d1", d1, "Scale for S1")->required();
  glue->add_option("g2", g2_arg, "Generators of S2")->required();
  glue->add_option("d2", d2, "Scale for S2")->required();
  glue->callback([&] {
    em.timestamp = !no_timestamp;
    cmd_glue(em, gens_arg, d1, g2_arg, d2);
  });

  auto* adjoin =
      app.add_subcommand("adjoin", "Scaled adjoin <c*n_1,...,c*n_k,b>");
  adjoin->add_option("generators", gens_arg, "Base generators")->required();
  adjoin->add_option("c", c, "Scale; must exceed the base catenary degree")
      ->required();
  adjoin->add_option("b", b, "Adjoined generator; base element coprime to c")
      ->required();
  adjoin->callback([&] {
    em.timestamp = !no_timestamp;
    cmd_adjoin(em, gens_arg, c, b, options);
  });

  auto* realize = app.add_subcommand(
      "realize", "Build a monoid with a prescribed set of catenary degrees");
  realize->add_option("target", target_arg, "Target set, comma-separated")
      ->required();
  auto* blist_opt =
      realize->add_option("--b-list", blist_arg,
                          "Comma-separated b values (explicit policy)");
  realize->add_option("--verify", verify_budget,
                      "Cross-check the trace; window budget per direct check");
  realize->callback([&] {
    em.timestamp = !no_timestamp;
    exit_code = cmd_realize(em, target_arg, blist_arg,
                            blist_opt->count() > 0, verify_budget, options);
  });

  auto* plot = app.add_subcommand(
      "plot-data", "CSV of (element, catenary degree) over a window");
  plot->add_option("generators", gens_arg, "Comma-separated generators")
      ->required();
  plot->add_option("--window", window, "Sweep window end (default heuristic)");
  plot->callback([&] {
    em.timestamp = !no_timestamp;
    cmd_plot_data(em, gens_arg, window, options);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const numon::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return exit_code;
}
