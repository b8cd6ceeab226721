#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "verdier/chern.hpp"
#include "verdier/constructible.hpp"
#include "verdier/spaces.hpp"

namespace verdier {

// The Q7 elliptic fibration Y in P(O + O + L) over a base B, cut by a
// cubic of class 3*zeta + 2L, together with the strata its weak-coupling
// limit produces on B:
//
//   O  orientifold plane, class 2L          (smooth)
//   D1 first brane (reduced), class 2L      (smooth)
//   S1 = D1 ∩ O, complete intersection (2L, 2L)
//   D2 second brane, class 4L, transversal A1 singularities along S2
//   S2 complete intersection (2L, 2L, 2L)
//
// Both sides of the Chern class identity
//
//   phi_* c_SM(1_Y) = c_SM(2*1_O + 2*1_D1 - 1_S1 + 1_D2 - 1_S2)
//
// are computed independently: the left entirely upstairs in the
// projective bundle, the right entirely downstairs from the strata
// registry (with D2 resolved by a base blowup). The degree-zero part of
// the identity is the tadpole relation
//
//   chi(Y) = 2 chi(O) + 2 chi(D1) - chi(S1) + chi(D2) - chi(S2).

struct BaseSpec {
  enum class Kind { Pn, Formal };
  Kind kind = Kind::Pn;
  int dim = 3;

  std::string str() const;  // "P3", "formal:2"
};

// Overridable modeling choices. The default fiber tables are the conic
// degeneration data of the three covering components: chains of closed
// strata of B with the fiber Euler characteristic over each stratum.
struct VariantFlags {
  DeltaRule delta_rule = DeltaRule::SD;
  std::optional<std::map<std::string, FibrationTable>> fiber_tables;
};

struct Q7Model {
  BaseSpec base_spec;
  int l_degree = 1;  // meaningful for Pn bases only
  Space base;
  Polynomial l_class;   // on the base ring
  Space ambient;        // P(O + O + L)
  Polynomial y_class;   // 3*zeta + 2L on the ambient ring
  StrataRegistry registry;
  std::map<std::string, FibrationTable> tables;  // keys "D1", "D2", "X"
};

// Euler characteristic of a plane conic by the rank of its symmetric
// matrix: rank 3 a smooth conic, rank 2 two lines meeting at a point,
// rank 1 a double line.
int conic_fiber_euler(int rank);

// Table for a conic fibration whose matrix rank drops 3, 2, 1 along the
// given chain of closed strata.
FibrationTable conic_rank_table(const std::vector<std::string>& chain);

// Pn bases need 1 <= n <= 4 and l_degree >= 1 (L = l_degree * H);
// formal bases need 1 <= d <= 4 (L stays symbolic, l_degree ignored).
Q7Model build_model(const BaseSpec& spec, int l_degree);

// phi_* c_SM(1_Y) on B, computed upstairs.
Polynomial lhs_class(const Q7Model& model);

// The pushforward of the specialization function to B: the
// multiplicity function delta on the covering components, pushed
// through the fiber tables.
ConstructibleFunction rhs_constructible(const Q7Model& model,
                                        const VariantFlags& flags);

// c_SM of a constructible function over the model's strata registry.
Polynomial rhs_class(const Q7Model& model, const ConstructibleFunction& cf);

struct OrientifoldSection {
  Rational chi_o_d1;  // 2 chi(D1) - chi(S1)
  Rational chi_o_d2;  // chi(D2) - chi(S2)
  Rational total;     // 2 chi(O) + chi_o(D1) + chi_o(D2)
  bool matches_rhs;

  // Informational comparison against the double-cover form
  //   2 chi(Y) = 4 chi(O) + 2 chi(D1bar) + chi(D2bar) - chi(S2bar)
  // using set-theoretic pullbacks chi(Dbar) = 2 chi(D) - chi(D ∩ O).
  Rational two_chi_y;
  Rational double_cover_sum;
  Rational chi_d1bar, chi_d2bar, chi_s2bar;
  bool double_cover_matches;
  std::string caveat;
};

// Numeric bases only; throws ConfigError over a formal base.
OrientifoldSection orientifold_report(const Q7Model& model);

struct DegreeRow {
  int degree;
  std::string lhs;
  std::string rhs;
  bool equal;
};

struct VerificationReport {
  BaseSpec base_spec;
  int l_degree;
  VariantFlags flags;
  ConstructibleFunction rhs_cf;
  std::vector<DegreeRow> rows;  // degrees 0..dim(B)
  Integral lhs_chi;
  Integral rhs_chi;
  bool chi_equal;
  std::map<std::string, Rational> strata_chi;  // empty over formal bases
  std::optional<OrientifoldSection> orientifold;
  bool pass;
  std::vector<std::string> notes;
};

// Computes both sides, compares them degree by degree and at Euler
// level, and assembles the report. Failures are verdicts, not errors.
VerificationReport verify(const Q7Model& model, const VariantFlags& flags);

}  // namespace verdier
