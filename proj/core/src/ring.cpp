#include "verdier/ring.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace verdier {

namespace detail {

struct RingImpl {
  struct Rule {
    int power = 0;
    std::map<Exponents, Rational> replacement;
  };

  std::vector<GeneratorSpec> gens;
  std::map<std::string, int, std::less<>> index;
  int truncation = 0;
  std::vector<std::optional<Rule>> rules;  // at most one rule per generator

  int degree_of(const Exponents& e) const {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * gens[i].degree;
    return d;
  }

  // index of the first generator whose rule applies to e, or -1
  int first_reducible(const Exponents& e) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (rules[i] && e[i] >= rules[i]->power) return static_cast<int>(i);
    return -1;
  }
};

}  // namespace detail

using detail::RingImpl;
using Terms = Polynomial::Terms;

namespace {

void accumulate(Terms& terms, const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

// One rewrite step: replace gen^power inside the monomial, push the
// products back into the work map. Degree is preserved by homogeneity.
void apply_rule(const RingImpl& ring, Terms& work, const Exponents& e,
                const Rational& c, int gen) {
  const auto& rule = *ring.rules[gen];
  Exponents base = e;
  base[gen] -= rule.power;
  for (const auto& [re, rc] : rule.replacement) {
    Exponents ne = base;
    for (std::size_t i = 0; i < ne.size(); ++i) ne[i] += re[i];
    accumulate(work, ne, c * rc);
  }
}

Terms reduce_all(const RingImpl& ring, Terms work) {
  Terms out;
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    int gen = ring.first_reducible(node.key());
    if (gen < 0) {
      accumulate(out, node.key(), node.mapped());
    } else {
      apply_rule(ring, work, node.key(), node.mapped(), gen);
    }
  }
  return out;
}

Exponents exponents_from_named(const RingImpl& ring, const NamedMonomial& m) {
  Exponents e(ring.gens.size(), 0);
  for (const auto& [name, exp] : m) {
    auto it = ring.index.find(name);
    if (it == ring.index.end())
      throw RingError("unknown generator '" + name + "'");
    if (exp < 0) throw RingError("negative exponent for '" + name + "'");
    e[it->second] = exp;
  }
  return e;
}

Terms gather(const RingImpl& ring, const TermList& terms) {
  Terms raw;
  for (const auto& [mono, coeff] : terms) {
    Exponents e = exponents_from_named(ring, mono);
    if (ring.degree_of(e) > ring.truncation) continue;
    accumulate(raw, e, coeff);
  }
  return raw;
}

void validate_rule(const RingImpl& ring, const RewriteRuleSpec& spec,
                   const RingImpl::Rule& rule, int gen) {
  const int lead_degree = rule.power * ring.gens[gen].degree;
  for (const auto& [e, c] : rule.replacement) {
    if (ring.degree_of(e) != lead_degree)
      throw RingError("rule degree mismatch for '" + spec.generator + "'");
    if (e[gen] >= rule.power)
      throw RingError("rule for '" + spec.generator +
                      "' does not lower its own power");
  }
}

// The rewrite order terminates when the dependency graph among ruled
// generators (g depends on h if h != g occurs in g's replacement and h
// is ruled) is acyclic; each step then strictly decreases a
// well-founded lexicographic measure.
void check_termination(const RingImpl& ring) {
  const int n = static_cast<int>(ring.gens.size());
  std::vector<std::vector<int>> deps(n);
  for (int g = 0; g < n; ++g) {
    if (!ring.rules[g]) continue;
    for (const auto& [e, c] : ring.rules[g]->replacement)
      for (int h = 0; h < n; ++h)
        if (h != g && e[h] > 0 && ring.rules[h]) deps[g].push_back(h);
  }
  std::vector<int> state(n, 0);  // 0 unvisited, 1 on stack, 2 done
  std::function<void(int)> visit = [&](int g) {
    state[g] = 1;
    for (int h : deps[g]) {
      if (state[h] == 1)
        throw RingError("non-terminating rule order (cycle through '" +
                        ring.gens[g].name + "')");
      if (state[h] == 0) visit(h);
    }
    state[g] = 2;
  };
  for (int g = 0; g < n; ++g)
    if (state[g] == 0) visit(g);
}

}  // namespace

Ring::Ring(RingSpec spec) {
  auto impl = std::make_shared<RingImpl>();
  if (spec.truncation < 0) throw RingError("negative truncation");
  impl->truncation = spec.truncation;
  impl->gens = std::move(spec.generators);
  for (std::size_t i = 0; i < impl->gens.size(); ++i) {
    const auto& g = impl->gens[i];
    if (g.name.empty()) throw RingError("empty generator name");
    if (g.degree < 1) throw RingError("generator '" + g.name + "' has degree < 1");
    if (!impl->index.emplace(g.name, static_cast<int>(i)).second)
      throw RingError("duplicate generator name '" + g.name + "'");
  }
  impl->rules.resize(impl->gens.size());
  for (const auto& rs : spec.rules) {
    auto idx = impl->index.find(rs.generator);
    if (idx == impl->index.end())
      throw RingError("rule on unknown generator '" + rs.generator + "'");
    if (rs.power < 1)
      throw RingError("rule power must be >= 1 for '" + rs.generator + "'");
    if (impl->rules[idx->second])
      throw RingError("duplicate rule for generator '" + rs.generator + "'");
    RingImpl::Rule rule;
    rule.power = rs.power;
    for (const auto& [mono, coeff] : rs.replacement)
      accumulate(rule.replacement, exponents_from_named(*impl, mono), coeff);
    validate_rule(*impl, rs, rule, idx->second);
    impl->rules[idx->second] = std::move(rule);
  }
  check_termination(*impl);
  impl_ = std::move(impl);
}

int Ring::generator_count() const { return static_cast<int>(impl_->gens.size()); }

int Ring::truncation() const { return impl_->truncation; }

const GeneratorSpec& Ring::generator(int i) const { return impl_->gens.at(i); }

std::optional<int> Ring::generator_index(std::string_view name) const {
  auto it = impl_->index.find(name);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

int Ring::degree_of(const Exponents& e) const {
  if (e.size() != impl_->gens.size()) throw RingError("exponent vector size mismatch");
  return impl_->degree_of(e);
}

Polynomial Ring::zero() const { return Polynomial(impl_, {}); }

Polynomial Ring::one() const { return constant(1); }

Polynomial Ring::constant(Rational c) const {
  Terms t;
  if (c != 0) t.emplace(Exponents(impl_->gens.size(), 0), std::move(c));
  return Polynomial(impl_, std::move(t));
}

Polynomial Ring::var(std::string_view name) const {
  auto idx = generator_index(name);
  if (!idx) throw RingError("unknown generator '" + std::string(name) + "'");
  Exponents e(impl_->gens.size(), 0);
  e[*idx] = 1;
  return monomial(e);
}

Polynomial Ring::monomial(const Exponents& e) const {
  if (e.size() != impl_->gens.size()) throw RingError("exponent vector size mismatch");
  for (int x : e)
    if (x < 0) throw RingError("negative exponent");
  Terms t;
  if (impl_->degree_of(e) <= impl_->truncation) t.emplace(e, 1);
  return Polynomial(impl_, reduce_all(*impl_, std::move(t)));
}

Polynomial Ring::make(const TermList& terms) const {
  return Polynomial(impl_, reduce_all(*impl_, gather(*impl_, terms)));
}

Polynomial Ring::make(const std::vector<std::pair<Exponents, Rational>>& terms) const {
  Terms raw;
  for (const auto& [e, c] : terms) {
    if (e.size() != impl_->gens.size())
      throw RingError("exponent vector size mismatch");
    if (impl_->degree_of(e) > impl_->truncation) continue;
    accumulate(raw, e, c);
  }
  return Polynomial(impl_, reduce_all(*impl_, std::move(raw)));
}

std::vector<Exponents> Ring::irreducible_monomials(int degree) const {
  std::vector<Exponents> out;
  if (degree < 0 || degree > impl_->truncation) return out;
  const int n = static_cast<int>(impl_->gens.size());
  Exponents cur(n, 0);
  std::function<void(int, int)> rec = [&](int i, int remaining) {
    if (i == n) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    const int d = impl_->gens[i].degree;
    int max_exp = remaining / d;
    if (impl_->rules[i]) max_exp = std::min(max_exp, impl_->rules[i]->power - 1);
    for (int k = 0; k <= max_exp; ++k) {
      cur[i] = k;
      rec(i + 1, remaining - k * d);
    }
    cur[i] = 0;
  };
  rec(0, degree);
  return out;
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Exponents(impl_->gens.size(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::max_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, impl_->degree_of(e));
  return d;
}

bool Polynomial::is_homogeneous(int degree) const {
  for (const auto& [e, c] : terms_)
    if (impl_->degree_of(e) != degree) return false;
  return true;
}

Polynomial Polynomial::operator-() const {
  Terms t = terms_;
  for (auto& [e, c] : t) c = -c;
  return Polynomial(impl_, std::move(t));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (impl_ != rhs.impl_) throw RingError("mixed rings");
  for (const auto& [e, c] : rhs.terms_) accumulate(terms_, e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (impl_ != rhs.impl_) throw RingError("mixed rings");
  for (const auto& [e, c] : rhs.terms_) accumulate(terms_, e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (impl_ != rhs.impl_) throw RingError("mixed rings");
  const RingImpl& ring = *impl_;
  Terms prod;
  for (const auto& [ea, ca] : terms_) {
    const int da = ring.degree_of(ea);
    for (const auto& [eb, cb] : rhs.terms_) {
      if (da + ring.degree_of(eb) > ring.truncation) continue;
      Exponents e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      accumulate(prod, e, ca * cb);
    }
  }
  terms_ = reduce_all(ring, std::move(prod));
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) throw RingError("negative power");
  Polynomial result = Ring(impl_).one();
  for (int i = 0; i < k; ++i) result *= *this;
  return result;
}

Polynomial Polynomial::inverse_of_unit() const {
  if (constant_term() != 1)
    throw RingError("inverse_of_unit requires constant term 1");
  const Ring ring(impl_);
  // geometric series: (1 + n)^{-1} = sum (-n)^k, n nilpotent by truncation
  Polynomial minus_n = ring.one() - *this;
  Polynomial result = ring.one();
  Polynomial power = ring.one();
  for (int i = 1; i <= ring.truncation(); ++i) {
    power *= minus_n;
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

Polynomial Polynomial::component(int d) const {
  if (d < 0 || d > impl_->truncation)
    throw RingError("grade component out of range");
  Terms t;
  for (const auto& [e, c] : terms_)
    if (impl_->degree_of(e) == d) t.emplace(e, c);
  return Polynomial(impl_, std::move(t));
}

Rational Polynomial::coefficient(const Exponents& e) const {
  if (e.size() != impl_->gens.size()) throw RingError("exponent vector size mismatch");
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::coefficient(const NamedMonomial& m) const {
  return coefficient(exponents_from_named(*impl_, m));
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  return impl_ == rhs.impl_ && terms_ == rhs.terms_;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, Rational>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
    const int da = impl_->degree_of(a.first), db = impl_->degree_of(b.first);
    if (da != db) return da < db;
    return a.first < b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += impl_->gens[i].name;
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << mag.str();
    } else if (mag == 1) {
      os << mono;
    } else {
      os << mag.str() << "*" << mono;
    }
  }
  return os.str();
}

Polynomial normalize_with_order(const Ring& ring, const TermList& terms,
                                std::mt19937_64& rng) {
  const RingImpl& impl = *ring.impl_;
  Terms work = gather(impl, terms);
  for (;;) {
    // collect every reducible (monomial, rule) pair and pick one at random
    std::vector<std::pair<Exponents, int>> reducible;
    for (const auto& [e, c] : work)
      for (std::size_t i = 0; i < e.size(); ++i)
        if (impl.rules[i] && e[i] >= impl.rules[i]->power)
          reducible.emplace_back(e, static_cast<int>(i));
    if (reducible.empty()) break;
    const auto& [e, gen] =
        reducible[std::uniform_int_distribution<std::size_t>(0, reducible.size() - 1)(rng)];
    auto node = work.extract(e);
    apply_rule(impl, work, node.key(), node.mapped(), gen);
  }
  return Polynomial(ring.impl_, std::move(work));
}

}  // namespace verdier
