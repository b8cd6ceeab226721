#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "verdier/spaces.hpp"

namespace verdier {

// Constructible-function calculus over a registry of named closed
// strata. Strata are purely symbolic: each carries its expected
// codimension, its CSM class on the base ring and the resulting Euler
// characteristic. All geometric content (which loci are smooth, what
// the fibers look like) enters through those attached invariants.

struct Stratum {
  std::string name;
  int expected_codim = 0;
  Polynomial csm;  // class on the base ring; zero when the locus is empty
  Integral chi;    // degree of csm: a number, or the top class over a formal base
};

class StrataRegistry {
 public:
  explicit StrataRegistry(Space base) : base_(std::move(base)) {}

  const Space& base() const { return base_; }

  // chi is computed from the class by integration; a stratum whose
  // expected codimension exceeds dim(B) must carry the zero class
  void add(std::string name, int expected_codim, Polynomial csm);

  bool contains(std::string_view name) const;
  const Stratum& at(std::string_view name) const;  // RegistryError when unknown
  std::vector<std::string> names() const;          // sorted

 private:
  Space base_;
  std::map<std::string, Stratum, std::less<>> strata_;
};

// Finite integer combination of indicator functions of named closed
// strata; zero coefficients are never stored.
class ConstructibleFunction {
 public:
  ConstructibleFunction() = default;  // the zero function

  static ConstructibleFunction indicator(std::string name);

  int coeff(std::string_view name) const;  // 0 when absent
  const std::map<std::string, int>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  ConstructibleFunction& operator+=(const ConstructibleFunction& rhs);
  ConstructibleFunction& operator-=(const ConstructibleFunction& rhs);
  ConstructibleFunction& operator*=(int n);

  friend ConstructibleFunction operator+(ConstructibleFunction a,
                                         const ConstructibleFunction& b) {
    return a += b;
  }
  friend ConstructibleFunction operator-(ConstructibleFunction a,
                                         const ConstructibleFunction& b) {
    return a -= b;
  }
  friend ConstructibleFunction operator*(int n, ConstructibleFunction a) {
    return a *= n;
  }

  bool operator==(const ConstructibleFunction&) const = default;

  // canonical text, e.g. "2*1_B + 2*1_D1 - 1_S1"
  std::string str() const;

 private:
  std::map<std::string, int> coeffs_;
};

// Stratification chain with fiber Euler characteristics: closed strata
// V_1 > V_2 > ... (each W_i is the next stratum, the last W is empty)
// with chi(F_i) the Euler characteristic of the fiber over V_i \ V_{i+1}.
struct FibrationTable {
  std::vector<std::pair<std::string, int>> chain;
};

// f_* 1_Z = sum_i chi(F_i) (1_{V_i} - 1_{W_i}), telescoped.
ConstructibleFunction pushforward_stratified(const FibrationTable& table);

// How the specialization function treats points on more than one
// component of the central divisor: SD assigns the value 0 there
// (overlap coefficient -(m_1 + ... + m_k)); Printed keeps overlap
// coefficient -1. Printed does not reproduce the verified pushforward
// and exists for regression comparison.
enum class DeltaRule { SD, Printed };

std::string_view delta_rule_name(DeltaRule rule);  // "sd" / "printed"

struct NCComponent {
  std::string name;
  int multiplicity = 1;
};

// Normal-crossing central divisor with smooth components meeting along
// a single mutual intersection (all this artifact needs).
struct NCDescriptor {
  std::vector<NCComponent> components;
  std::optional<std::string> pairwise_intersection;
};

// The multiplicity function of the central fiber: value m_i on
// D_i minus the overlap, and on the overlap the value chosen by rule.
ConstructibleFunction specialization_function(const NCDescriptor& nc,
                                              DeltaRule rule = DeltaRule::SD);

// sum coeff(S) * chi(S); every referenced stratum must have numeric chi
Rational euler_cf(const ConstructibleFunction& f, const StrataRegistry& registry);

// sum coeff(S) * csm(S) on the base ring
Polynomial csm_cf(const ConstructibleFunction& f, const StrataRegistry& registry);

// value of f at a point described by the set of closed strata
// containing it
int evaluate_at(const ConstructibleFunction& f,
                const std::set<std::string>& containing_strata);

}  // namespace verdier
