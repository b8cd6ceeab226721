#pragma once

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "verdier/errors.hpp"
#include "verdier/rational.hpp"

namespace verdier {

// Truncated graded-commutative polynomial rings with generator-power
// rewrite rules. This is the substrate for every Chow ring in the
// library: A(P^n) = Q[H]/(H^{n+1}), projective-bundle rings with the
// Grothendieck relation zeta^3 -> -L*zeta^2, blowup rings free in the
// exceptional class, and formal base rings Q[L,c1..cd] truncated at the
// base dimension.
//
// Values are immutable after construction and safe to share across
// threads. Equality of polynomials is equality of normal forms.

// Exponent vector parallel to the ring's generator list.
using Exponents = std::vector<int>;

// Monomial written by generator name, e.g. {{"H",2}}.
using NamedMonomial = std::map<std::string, int>;

// Raw term data: used to build polynomials and rewrite-rule replacements.
using TermList = std::vector<std::pair<NamedMonomial, Rational>>;

struct GeneratorSpec {
  std::string name;
  int degree = 1;  // cohomological degree (codimension units), >= 1
};

// Leading generator-power -> replacement of the same graded degree;
// every replacement monomial carries a strictly lower power of the
// leading generator, so rewriting terminates.
struct RewriteRuleSpec {
  std::string generator;
  int power = 0;
  TermList replacement;  // empty list = zero
};

struct RingSpec {
  std::vector<GeneratorSpec> generators;
  std::vector<RewriteRuleSpec> rules;
  int truncation = 0;  // total weighted degree bound = ambient dimension
};

namespace detail {
struct RingImpl;
}

class Polynomial;

class Ring {
 public:
  // Validates the presentation: unique generator names, homogeneous
  // replacements, termination of the rewrite order.
  explicit Ring(RingSpec spec);

  int generator_count() const;
  int truncation() const;
  const GeneratorSpec& generator(int i) const;
  std::optional<int> generator_index(std::string_view name) const;

  // total weighted degree of an exponent vector
  int degree_of(const Exponents& e) const;

  Polynomial zero() const;
  Polynomial one() const;
  Polynomial constant(Rational c) const;
  Polynomial var(std::string_view name) const;  // a single generator
  Polynomial monomial(const Exponents& e) const;
  Polynomial make(const TermList& terms) const;
  Polynomial make(const std::vector<std::pair<Exponents, Rational>>& terms) const;

  // all rewrite-irreducible monomials of the given weighted degree
  std::vector<Exponents> irreducible_monomials(int degree) const;

  // identity, not structural equality
  bool same(const Ring& other) const { return impl_ == other.impl_; }

 private:
  friend class Polynomial;
  friend Polynomial normalize_with_order(const Ring&, const TermList&,
                                         std::mt19937_64&);
  explicit Ring(std::shared_ptr<const detail::RingImpl> impl)
      : impl_(std::move(impl)) {}

  std::shared_ptr<const detail::RingImpl> impl_;
};

// Sparse exact-rational polynomial kept in rewrite normal form: every
// stored monomial is irreducible, has weighted degree <= truncation and
// a nonzero coefficient. Arithmetic between different ring instances
// throws RingError.
class Polynomial {
 public:
  using Terms = std::map<Exponents, Rational>;

  Ring ring() const { return Ring(impl_); }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Rational constant_term() const;
  // highest weighted degree among stored terms; 0 for the zero polynomial
  int max_degree() const;
  // true when every term has the given weighted degree (zero passes)
  bool is_homogeneous(int degree) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }

  Polynomial pow(int k) const;

  // multiplicative inverse up to truncation; requires constant term 1
  Polynomial inverse_of_unit() const;

  // sum of the terms of weighted degree d; d must lie in [0, truncation]
  Polynomial component(int d) const;

  Rational coefficient(const Exponents& e) const;
  Rational coefficient(const NamedMonomial& m) const;

  // same ring instance and identical normal forms
  bool operator==(const Polynomial& rhs) const;
  bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

  // canonical text form, terms sorted by degree then lexicographically,
  // e.g. "1 + 4*H + 6*H^2"; the zero polynomial prints as "0"
  std::string str() const;

 private:
  friend class Ring;
  friend Polynomial normalize_with_order(const Ring&, const TermList&,
                                         std::mt19937_64&);
  Polynomial(std::shared_ptr<const detail::RingImpl> impl, Terms terms)
      : impl_(std::move(impl)), terms_(std::move(terms)) {}

  std::shared_ptr<const detail::RingImpl> impl_;
  Terms terms_;
};

// Test hook: normalize raw terms reducing in a randomized order. The
// result must agree with Ring::make for every seed (confluence).
Polynomial normalize_with_order(const Ring& ring, const TermList& terms,
                                std::mt19937_64& rng);

}  // namespace verdier
