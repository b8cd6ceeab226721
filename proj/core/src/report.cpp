#include "verdier/report.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace verdier {

namespace {

using json = nlohmann::ordered_json;

json rational_json(const Rational& q) {
  if (is_integer(q)) return numerator(q).convert_to<long long>();
  return q.str();
}

json integral_json(const Integral& v) {
  if (is_numeric(v)) return rational_json(as_number(v));
  return as_class(v).str();
}

json config_json(const VerificationReport& r) {
  json config;
  if (r.base_spec.kind == BaseSpec::Kind::Pn) {
    config["base"] = {{"kind", "Pn"}, {"n", r.base_spec.dim}};
    config["L"] = {{"degree", r.l_degree}};
  } else {
    config["base"] = {{"kind", "formal"}, {"dim", r.base_spec.dim}};
  }
  return config;
}

json report_json(const VerificationReport& r) {
  json root;
  root["config"] = config_json(r);
  root["variant"] = {{"delta_rule", std::string(delta_rule_name(r.flags.delta_rule))},
                     {"fiber_tables", r.flags.fiber_tables ? "custom" : "default"}};

  json lhs_by_degree = json::object();
  json rhs_by_degree = json::object();
  for (const auto& row : r.rows) {
    lhs_by_degree[std::to_string(row.degree)] = row.lhs;
    rhs_by_degree[std::to_string(row.degree)] = row.rhs;
  }
  root["lhs"] = {{"by_degree", std::move(lhs_by_degree)},
                 {"chi", integral_json(r.lhs_chi)}};

  json cf = json::object();
  for (const auto& [name, c] : r.rhs_cf.coeffs()) cf[name] = c;
  json rhs;
  rhs["cf"] = std::move(cf);
  rhs["by_degree"] = std::move(rhs_by_degree);
  rhs["chi"] = integral_json(r.rhs_chi);
  if (!r.strata_chi.empty()) {
    json strata = json::object();
    for (const auto& [name, chi] : r.strata_chi) strata[name] = rational_json(chi);
    rhs["strata_chi"] = std::move(strata);
  }
  root["rhs"] = std::move(rhs);

  if (r.orientifold) {
    const auto& o = *r.orientifold;
    root["orientifold"] = {
        {"chi_o", {{"D1", rational_json(o.chi_o_d1)}, {"D2", rational_json(o.chi_o_d2)}}},
        {"total", rational_json(o.total)},
        {"matches_rhs", o.matches_rhs},
        {"double_cover",
         {{"two_chi_Y", rational_json(o.two_chi_y)},
          {"sum", rational_json(o.double_cover_sum)},
          {"chi_D1bar", rational_json(o.chi_d1bar)},
          {"chi_D2bar", rational_json(o.chi_d2bar)},
          {"chi_S2bar", rational_json(o.chi_s2bar)},
          {"matches", o.double_cover_matches},
          {"caveat", o.caveat}}}};
  }

  root["verdict"] = r.pass ? "pass" : "fail";
  root["notes"] = r.notes;
  return root;
}

std::string emit_table(const VerificationReport& r) {
  std::ostringstream os;
  os << "== Q7 weak-coupling verification ==\n";
  os << "config : base " << r.base_spec.str();
  if (r.base_spec.kind == BaseSpec::Kind::Pn) os << ", deg L = " << r.l_degree;
  os << "\n";
  os << "variant: delta rule " << delta_rule_name(r.flags.delta_rule)
     << ", fiber tables " << (r.flags.fiber_tables ? "custom" : "default") << "\n";
  os << "rhs constructible function: " << r.rhs_cf.str() << "\n\n";

  os << "degree | equal | lhs | rhs\n";
  for (const auto& row : r.rows)
    os << row.degree << " | " << (row.equal ? "yes" : "NO") << " | " << row.lhs
       << " | " << row.rhs << "\n";
  os << "chi: lhs " << integral_str(r.lhs_chi) << ", rhs " << integral_str(r.rhs_chi)
     << (r.chi_equal ? "" : "  (MISMATCH)") << "\n";

  if (!r.strata_chi.empty()) {
    os << "\nstrata chi:";
    for (const auto& [name, chi] : r.strata_chi) os << " " << name << "=" << chi;
    os << "\n";
  }
  if (r.orientifold) {
    const auto& o = *r.orientifold;
    os << "orientifold: chi_o(D1)=" << o.chi_o_d1 << " chi_o(D2)=" << o.chi_o_d2
       << " total 2*chi(O)+chi_o(D1)+chi_o(D2)=" << o.total
       << (o.matches_rhs ? " (matches rhs)" : " (DOES NOT match rhs)") << "\n";
    os << "double cover (informational): 2*chi(Y)=" << o.two_chi_y
       << " vs 4*chi(O)+2*chi(D1bar)+chi(D2bar)-chi(S2bar)=" << o.double_cover_sum
       << " [chi(D1bar)=" << o.chi_d1bar << " chi(D2bar)=" << o.chi_d2bar
       << " chi(S2bar)=" << o.chi_s2bar << "]"
       << (o.double_cover_matches ? " (closes)" : " (does not close)") << "\n";
    os << "  " << o.caveat << "\n";
  }

  if (!r.notes.empty()) {
    os << "\nnotes:\n";
    for (const auto& note : r.notes) os << "  - " << note << "\n";
  }
  os << "\nverdict: " << (r.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string emit_csv(const VerificationReport& r) {
  std::ostringstream os;
  os << "degree,lhs,rhs,equal\n";
  for (const auto& row : r.rows)
    os << row.degree << "," << row.lhs << "," << row.rhs << ","
       << (row.equal ? "true" : "false") << "\n";
  return os.str();
}

std::string config_label(const VerificationReport& r) {
  std::string label = r.base_spec.str();
  if (r.base_spec.kind == BaseSpec::Kind::Pn)
    label += " L=" + std::to_string(r.l_degree);
  return label;
}

}  // namespace

std::optional<EmitFormat> parse_emit_format(std::string_view name) {
  if (name == "table") return EmitFormat::Table;
  if (name == "json") return EmitFormat::Json;
  if (name == "csv") return EmitFormat::Csv;
  return std::nullopt;
}

std::string_view emit_format_name(EmitFormat format) {
  switch (format) {
    case EmitFormat::Table:
      return "table";
    case EmitFormat::Json:
      return "json";
    case EmitFormat::Csv:
      return "csv";
  }
  return "table";
}

std::string emit(const VerificationReport& report, EmitFormat format) {
  switch (format) {
    case EmitFormat::Table:
      return emit_table(report);
    case EmitFormat::Json:
      return report_json(report).dump(2) + "\n";
    case EmitFormat::Csv:
      return emit_csv(report);
  }
  throw ConfigError("unknown emit format");
}

bool expected_verdict(const VerificationReport& report) {
  const bool should_pass = report.flags.delta_rule == DeltaRule::SD;
  return report.pass == should_pass;
}

std::string emit_summary(const std::vector<VerificationReport>& reports,
                         EmitFormat format) {
  if (format == EmitFormat::Json) {
    json root = json::array();
    for (const auto& r : reports) {
      root.push_back({{"config", config_json(r)},
                      {"delta_rule", std::string(delta_rule_name(r.flags.delta_rule))},
                      {"lhs_chi", integral_json(r.lhs_chi)},
                      {"rhs_chi", integral_json(r.rhs_chi)},
                      {"verdict", r.pass ? "pass" : "fail"},
                      {"as_expected", expected_verdict(r)}});
    }
    return root.dump(2) + "\n";
  }

  std::ostringstream os;
  if (format == EmitFormat::Csv) {
    os << "config,delta_rule,lhs_chi,rhs_chi,verdict,as_expected\n";
    for (const auto& r : reports)
      os << config_label(r) << "," << delta_rule_name(r.flags.delta_rule) << ","
         << integral_str(r.lhs_chi) << "," << integral_str(r.rhs_chi) << ","
         << (r.pass ? "pass" : "fail") << ","
         << (expected_verdict(r) ? "true" : "false") << "\n";
    return os.str();
  }

  os << "config | delta | lhs chi | rhs chi | verdict | as expected\n";
  for (const auto& r : reports)
    os << config_label(r) << " | " << delta_rule_name(r.flags.delta_rule) << " | "
       << integral_str(r.lhs_chi) << " | " << integral_str(r.rhs_chi) << " | "
       << (r.pass ? "pass" : "FAIL") << " | " << (expected_verdict(r) ? "yes" : "NO")
       << "\n";
  return os.str();
}

}  // namespace verdier
