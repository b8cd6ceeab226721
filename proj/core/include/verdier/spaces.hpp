#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "verdier/ring.hpp"

namespace verdier {

// Modeled varieties: the ring presentation of the Chow ring, the
// dimension, the total Chern class of the (possibly formal) tangent
// bundle, and pushforward/degree data. Four kinds are supported:
//
//   ProjectiveSpace(n)   A(P^n) = Q[H]/(H^{n+1}), integrate(H^n) = 1
//   FormalBase(d)        Q[L, c1..cd] truncated at d, no numeric degree
//   ProjBundleOOL        P(O + O + L) over a base, hyperplane class zeta
//                        with Grothendieck relation zeta^3 = -L*zeta^2
//   BlowupCI             blowup along a smooth complete intersection of
//                        r degree-1 hypersurface classes, exceptional
//                        class e kept free, Segre pushforward rule
//
// Spaces are immutable and cheap to copy.

enum class SpaceKind { ProjectiveSpace, FormalBase, ProjBundleOOL, BlowupCI };

// Degree-1 classes of the hypersurfaces cutting a blowup center.
struct CenterSpec {
  std::vector<Polynomial> classes;
};

class Space {
 public:
  SpaceKind kind() const;
  int dim() const;
  const Ring& ring() const;
  const Polynomial& tangent_class() const;

  bool has_base() const;
  const Space& base() const;  // throws SpaceError when there is none

  // degree-1 class L of the bundle (ProjBundleOOL only), on the base ring
  const Polynomial& bundle_class() const;
  // center classes d1..dr (BlowupCI only), on the base ring
  const std::vector<Polynomial>& center_classes() const;

  std::string description() const;  // "P3", "formal:2", ...

  struct Impl;

 private:
  friend Space projective_space(int);
  friend Space formal_base(int);
  friend Space proj_bundle_ool(const Space&, const Polynomial&);
  friend Space blowup_ci(const Space&, const CenterSpec&);
  friend Polynomial pullback(const Space&, const Polynomial&);
  friend Polynomial pushforward_to_base(const Space&, const Polynomial&);
  explicit Space(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

Space projective_space(int n);
Space formal_base(int d);

// P(O + O + L) as a bundle of lines; l_class must be homogeneous of
// degree 1 on the base. Adds the generator "zeta".
Space proj_bundle_ool(const Space& base, const Polynomial& l_class);

// Blowup along a smooth complete intersection of 1 <= r <= dim(base)
// degree-1 classes. Adds the free generator "e".
Space blowup_ci(const Space& base, const CenterSpec& center);

// Reinterpret a base class in the total space's ring.
Polynomial pullback(const Space& space, const Polynomial& on_base);

// Proper pushforward to the base ring. For the projective bundle this
// extracts the zeta^2 coefficient of a = a0 + a1*zeta + a2*zeta^2; for
// the blowup it applies e^k -> 0 (1 <= k < r) and
// e^k -> (-1)^{k-1} * (d1...dr) * s_{k-r} for k >= r, where the s_j
// expand 1 / ((1+d1)...(1+dr)).
Polynomial pushforward_to_base(const Space& space, const Polynomial& a);

// Degree map: a number for numeric spaces, the top-degree class for
// formal bases.
using Integral = std::variant<Rational, Polynomial>;

inline bool is_numeric(const Integral& v) { return std::holds_alternative<Rational>(v); }
inline const Rational& as_number(const Integral& v) { return std::get<Rational>(v); }
inline const Polynomial& as_class(const Integral& v) { return std::get<Polynomial>(v); }
std::string integral_str(const Integral& v);
bool integral_eq(const Integral& a, const Integral& b);

Integral integrate(const Space& space, const Polynomial& a);

// Gauss-Bonnet: the degree of the top Chern class of the tangent bundle.
Integral euler_characteristic(const Space& space);

}  // namespace verdier
