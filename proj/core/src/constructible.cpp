#include "verdier/constructible.hpp"

#include <sstream>

namespace verdier {

void StrataRegistry::add(std::string name, int expected_codim, Polynomial csm) {
  if (name.empty()) throw RegistryError("empty stratum name");
  if (!csm.ring().same(base_.ring()))
    throw RegistryError("stratum '" + name + "' class not on the base ring");
  if (strata_.contains(name))
    throw RegistryError("duplicate stratum '" + name + "'");
  if (expected_codim > base_.dim() && !csm.is_zero())
    throw RegistryError("stratum '" + name +
                        "' is empty by codimension but has a nonzero class");
  Integral chi = integrate(base_, csm);
  Stratum stratum{name, expected_codim, std::move(csm), std::move(chi)};
  strata_.emplace(std::move(name), std::move(stratum));
}

bool StrataRegistry::contains(std::string_view name) const {
  return strata_.find(name) != strata_.end();
}

const Stratum& StrataRegistry::at(std::string_view name) const {
  auto it = strata_.find(name);
  if (it == strata_.end())
    throw RegistryError("unknown stratum '" + std::string(name) + "'");
  return it->second;
}

std::vector<std::string> StrataRegistry::names() const {
  std::vector<std::string> out;
  out.reserve(strata_.size());
  for (const auto& [name, s] : strata_) out.push_back(name);
  return out;
}

ConstructibleFunction ConstructibleFunction::indicator(std::string name) {
  ConstructibleFunction f;
  f.coeffs_.emplace(std::move(name), 1);
  return f;
}

int ConstructibleFunction::coeff(std::string_view name) const {
  auto it = coeffs_.find(std::string(name));
  return it == coeffs_.end() ? 0 : it->second;
}

ConstructibleFunction& ConstructibleFunction::operator+=(
    const ConstructibleFunction& rhs) {
  for (const auto& [name, c] : rhs.coeffs_) {
    auto [it, inserted] = coeffs_.emplace(name, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

ConstructibleFunction& ConstructibleFunction::operator-=(
    const ConstructibleFunction& rhs) {
  ConstructibleFunction neg = rhs;
  neg *= -1;
  return *this += neg;
}

ConstructibleFunction& ConstructibleFunction::operator*=(int n) {
  if (n == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [name, c] : coeffs_) c *= n;
  return *this;
}

std::string ConstructibleFunction::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, c] : coeffs_) {
    const int mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) os << mag << "*";
    os << "1_" << name;
  }
  return os.str();
}

ConstructibleFunction pushforward_stratified(const FibrationTable& table) {
  std::set<std::string> seen;
  for (const auto& [name, chi] : table.chain)
    if (!seen.insert(name).second)
      throw RegistryError("fibration chain repeats stratum '" + name + "'");

  ConstructibleFunction result;
  for (std::size_t i = 0; i < table.chain.size(); ++i) {
    const auto& [v, fiber_chi] = table.chain[i];
    ConstructibleFunction step = ConstructibleFunction::indicator(v);
    if (i + 1 < table.chain.size())
      step -= ConstructibleFunction::indicator(table.chain[i + 1].first);
    result += fiber_chi * step;
  }
  return result;
}

std::string_view delta_rule_name(DeltaRule rule) {
  return rule == DeltaRule::SD ? "sd" : "printed";
}

ConstructibleFunction specialization_function(const NCDescriptor& nc,
                                              DeltaRule rule) {
  if (nc.components.empty())
    throw RegistryError("central divisor needs at least one component");
  ConstructibleFunction result;
  int total_multiplicity = 0;
  for (const auto& comp : nc.components) {
    if (comp.multiplicity < 1)
      throw RegistryError("component '" + comp.name + "' multiplicity must be >= 1");
    result += comp.multiplicity * ConstructibleFunction::indicator(comp.name);
    total_multiplicity += comp.multiplicity;
  }
  if (nc.pairwise_intersection) {
    const int overlap = rule == DeltaRule::SD ? total_multiplicity : 1;
    result -= overlap * ConstructibleFunction::indicator(*nc.pairwise_intersection);
  }
  return result;
}

Rational euler_cf(const ConstructibleFunction& f, const StrataRegistry& registry) {
  Rational total = 0;
  for (const auto& [name, c] : f.coeffs()) {
    const Stratum& s = registry.at(name);
    if (!is_numeric(s.chi))
      throw RegistryError("stratum '" + name + "' has no numeric chi");
    total += Rational(c) * as_number(s.chi);
  }
  return total;
}

Polynomial csm_cf(const ConstructibleFunction& f, const StrataRegistry& registry) {
  Polynomial total = registry.base().ring().zero();
  for (const auto& [name, c] : f.coeffs())
    total += Rational(c) * registry.at(name).csm;
  return total;
}

int evaluate_at(const ConstructibleFunction& f,
                const std::set<std::string>& containing_strata) {
  int value = 0;
  for (const auto& name : containing_strata) value += f.coeff(name);
  return value;
}

}  // namespace verdier
