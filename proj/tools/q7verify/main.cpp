// q7verify: compute both sides of the Chern class identity behind the
// Q7 weak-coupling tadpole relation and compare them exactly.
//
// Exit codes: 0 the identity holds (or every batch entry behaves as
// documented), 1 a verification failed, 2 usage or configuration error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "verdier/report.hpp"

using namespace verdier;

namespace {

struct RunConfig {
  BaseSpec base{BaseSpec::Kind::Pn, 3};
  int l_degree = 1;
  DeltaRule delta_rule = DeltaRule::SD;
  EmitFormat format = EmitFormat::Table;
  std::optional<std::string> out_path;
};

BaseSpec parse_base(const std::string& text) {
  if (text.size() == 2 && text[0] == 'P' && text[1] >= '0' && text[1] <= '9') {
    const int n = text[1] - '0';
    if (n < 1 || n > 4)
      throw ConfigError("base " + text + " out of range (P1..P4)");
    return {BaseSpec::Kind::Pn, n};
  }
  if (text.rfind("formal:", 0) == 0) {
    int d = 0;
    try {
      d = std::stoi(text.substr(7));
    } catch (const std::exception&) {
      throw ConfigError("malformed base '" + text + "'");
    }
    if (d < 1 || d > 4)
      throw ConfigError("formal base dimension out of range (1..4)");
    return {BaseSpec::Kind::Formal, d};
  }
  throw ConfigError("malformed base '" + text + "' (use P1..P4 or formal:d)");
}

DeltaRule parse_variant(const std::string& text) {
  if (text == "sd") return DeltaRule::SD;
  if (text == "printed") return DeltaRule::Printed;
  throw ConfigError("unknown variant '" + text + "' (use sd or printed)");
}

// Config file: {"base": {"kind":"Pn","n":3} | {"kind":"formal","dim":3},
// "L": {"degree":1}, "variant":"sd", "emit":"table", "out":"path"}.
// Command-line flags override file values.
RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("malformed config file: " + std::string(e.what()));
  }
  RunConfig config;
  try {
    if (doc.contains("base")) {
      const auto& base = doc.at("base");
      const std::string kind = base.at("kind").get<std::string>();
      if (kind == "Pn") {
        config.base = parse_base("P" + std::to_string(base.at("n").get<int>()));
      } else if (kind == "formal") {
        config.base =
            parse_base("formal:" + std::to_string(base.at("dim").get<int>()));
      } else {
        throw ConfigError("unknown base kind '" + kind + "'");
      }
    }
    if (doc.contains("L")) config.l_degree = doc.at("L").at("degree").get<int>();
    if (doc.contains("variant"))
      config.delta_rule = parse_variant(doc.at("variant").get<std::string>());
    if (doc.contains("emit")) {
      auto format = parse_emit_format(doc.at("emit").get<std::string>());
      if (!format) throw ConfigError("unknown emit format in config file");
      config.format = *format;
    }
    if (doc.contains("out")) config.out_path = doc.at("out").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("malformed config file: " + std::string(e.what()));
  }
  return config;
}

void write_output(const std::string& text, const std::optional<std::string>& path) {
  if (!path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) throw ConfigError("cannot write to '" + *path + "'");
  out << text;
}

int run_verify(const RunConfig& config) {
  Q7Model model = build_model(config.base, config.l_degree);
  VerificationReport report = verify(model, {config.delta_rule, std::nullopt});
  write_output(emit(report, config.format), config.out_path);
  return report.pass ? 0 : 1;
}

// the full matrix: every base and L degree the batch identity covers,
// under both delta rules
std::vector<VerificationReport> run_matrix() {
  static const std::pair<int, int> numeric[] = {{1, 1}, {1, 2}, {2, 1}, {2, 3},
                                                {3, 1}, {3, 2}, {3, 4}};
  std::vector<VerificationReport> reports;
  for (DeltaRule rule : {DeltaRule::SD, DeltaRule::Printed}) {
    for (const auto& [n, l] : numeric) {
      Q7Model model = build_model({BaseSpec::Kind::Pn, n}, l);
      reports.push_back(verify(model, {rule, std::nullopt}));
    }
    for (int d = 1; d <= 4; ++d) {
      Q7Model model = build_model({BaseSpec::Kind::Formal, d}, 1);
      reports.push_back(verify(model, {rule, std::nullopt}));
    }
  }
  return reports;
}

int run_verify_all(EmitFormat format, const std::optional<std::string>& out) {
  std::vector<VerificationReport> reports = run_matrix();
  write_output(emit_summary(reports, format), out);
  for (const auto& report : reports)
    if (!expected_verdict(report)) return 1;
  return 0;
}

// named models for spot-checking the engine against classical values
using ChiEntry = std::pair<std::string, std::function<Integral()>>;

const std::vector<std::pair<std::string, ChiEntry>>& chi_catalog() {
  auto ci = [](int n, std::vector<int> degrees) {
    return [n, degrees = std::move(degrees)]() {
      Space pn = projective_space(n);
      std::vector<Polynomial> classes;
      for (int d : degrees) classes.push_back(Rational(d) * pn.ring().var("H"));
      return integrate(pn, csm_smooth_ci({pn, std::move(classes)}));
    };
  };
  static const std::vector<std::pair<std::string, ChiEntry>> catalog = {
      {"P1", {"projective line", [] { return euler_characteristic(projective_space(1)); }}},
      {"P2", {"projective plane", [] { return euler_characteristic(projective_space(2)); }}},
      {"P3", {"projective 3-space", [] { return euler_characteristic(projective_space(3)); }}},
      {"P4", {"projective 4-space", [] { return euler_characteristic(projective_space(4)); }}},
      {"quadric-P3", {"smooth quadric surface", ci(3, {2})}},
      {"cubic-P3", {"smooth cubic surface", ci(3, {3})}},
      {"quartic-P3", {"smooth quartic (K3) surface", ci(3, {4})}},
      {"ci22-P3", {"(2,2) elliptic quartic curve", ci(3, {2, 2})}},
      {"cubic-P2", {"smooth plane cubic curve", ci(2, {3})}},
      {"blowup-pt-P2",
       {"P2 blown up at a point",
        [] {
          Space p2 = projective_space(2);
          Polynomial h = p2.ring().var("H");
          return euler_characteristic(blowup_ci(p2, {{h, h}}));
        }}},
      {"blowup-pt-P3",
       {"P3 blown up at a point",
        [] {
          Space p3 = projective_space(3);
          Polynomial h = p3.ring().var("H");
          return euler_characteristic(blowup_ci(p3, {{h, h, h}}));
        }}},
      {"blowup-line-P3",
       {"P3 blown up along a line",
        [] {
          Space p3 = projective_space(3);
          Polynomial h = p3.ring().var("H");
          return euler_characteristic(blowup_ci(p3, {{h, h}}));
        }}},
      {"nodal-quartic-P3",
       {"quartic surface with 8 ordinary double points",
        [] {
          Space p3 = projective_space(3);
          Polynomial h = p3.ring().var("H");
          Polynomial two_h = Rational(2) * h;
          return integrate(p3, csm_a1_hypersurface({p3, Rational(4) * h},
                                                   {{two_h, two_h, two_h}}));
        }}},
      {"nodal-quartic-resolution-P3",
       {"blowup resolution of the 8-nodal quartic",
        [] {
          Space p3 = projective_space(3);
          Polynomial h = p3.ring().var("H");
          Polynomial two_h = Rational(2) * h;
          Space blowup = blowup_ci(p3, {{two_h, two_h, two_h}});
          Polynomial d_strict = pullback(blowup, Rational(4) * h) -
                                Rational(2) * blowup.ring().var("e");
          return integrate(blowup,
                           fulton_hypersurface_class({blowup, d_strict}));
        }}},
  };
  return catalog;
}

int run_chi(const std::string& space, bool list) {
  if (list) {
    for (const auto& [name, entry] : chi_catalog())
      std::cout << name << "  (" << entry.first << ")\n";
    return 0;
  }
  for (const auto& [name, entry] : chi_catalog()) {
    if (name != space) continue;
    std::cout << "chi(" << name << ") = " << integral_str(entry.second()) << "\n";
    return 0;
  }
  std::cerr << "unknown space '" << space << "'; try --list\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of the Q7 weak-coupling Chern class identity"};
  app.require_subcommand(1);

  std::string base_str = "P3";
  int l_degree = 1;
  std::string variant_str = "sd";
  std::string emit_str = "table";
  std::string out_path;
  std::string config_path;

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "verify one configuration");
  verify_cmd->add_option("--base", base_str, "base: P1..P4 or formal:d (d in 1..4)");
  verify_cmd->add_option("--L", l_degree, "degree of L on a Pn base (>= 1)");
  verify_cmd->add_option("--variant", variant_str, "delta rule: sd or printed");
  verify_cmd->add_option("--emit", emit_str, "output format: table, json or csv");
  verify_cmd->add_option("--out", out_path, "write the report to a file");
  verify_cmd->add_option("--config", config_path,
                         "JSON config file; flags override its values");

  std::string all_emit_str = "table";
  std::string all_out_path;
  CLI::App* all_cmd = app.add_subcommand(
      "verify-all", "run the full base/L/variant matrix and summarize");
  all_cmd->add_option("--emit", all_emit_str, "output format: table, json or csv");
  all_cmd->add_option("--out", all_out_path, "write the summary to a file");

  std::string chi_space;
  bool chi_list = false;
  CLI::App* chi_cmd = app.add_subcommand(
      "chi", "Euler characteristic of a named reference model");
  chi_cmd->add_option("--space", chi_space, "model name, e.g. quadric-P3");
  chi_cmd->add_flag("--list", chi_list, "list the available models");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(verify_cmd)) {
      RunConfig config;
      if (verify_cmd->count("--config") > 0)
        config = load_config_file(config_path);
      if (verify_cmd->count("--base") > 0 || verify_cmd->count("--config") == 0)
        config.base = parse_base(base_str);
      if (verify_cmd->count("--L") > 0) config.l_degree = l_degree;
      if (verify_cmd->count("--variant") > 0)
        config.delta_rule = parse_variant(variant_str);
      if (verify_cmd->count("--emit") > 0) {
        auto format = parse_emit_format(emit_str);
        if (!format) throw ConfigError("unknown emit format '" + emit_str + "'");
        config.format = *format;
      }
      if (verify_cmd->count("--out") > 0) config.out_path = out_path;
      return run_verify(config);
    }
    if (app.got_subcommand(all_cmd)) {
      auto format = parse_emit_format(all_emit_str);
      if (!format)
        throw ConfigError("unknown emit format '" + all_emit_str + "'");
      std::optional<std::string> out;
      if (all_cmd->count("--out") > 0) out = all_out_path;
      return run_verify_all(*format, out);
    }
    if (app.got_subcommand(chi_cmd)) {
      if (!chi_list && chi_cmd->count("--space") == 0)
        throw ConfigError("chi needs --space <name> or --list");
      return run_chi(chi_space, chi_list);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
