#pragma once

#include "verdier/spaces.hpp"

namespace verdier {

// Characteristic-class formulas used by the verifier. All inputs are
// divisor classes; genericity (smoothness of the named loci) is a
// documented precondition and is never checked at class level.

struct HypersurfaceSpec {
  Space ambient;
  Polynomial divisor_class;  // pure degree 1, in the ambient ring
};

struct CISpec {
  Space ambient;
  std::vector<Polynomial> classes;  // degree-1 classes cutting the locus
};

// CSM class of a smooth complete intersection, pushed into the ambient
// ring: c(TX) * prod(v_i / (1 + v_i)). An empty list gives the ambient
// itself; more classes than dim(X) gives the zero class (empty locus).
Polynomial csm_smooth_ci(const CISpec& ci);

// Chern-Fulton class of a hypersurface: c(TX) * D / (1 + D). Agrees
// with csm_smooth_ci for smooth hypersurfaces and computes the class of
// the specialized central fiber for the families handled here.
Polynomial fulton_hypersurface_class(const HypersurfaceSpec& h);

// CSM class of a hypersurface with transversal A1 singularities along a
// smooth complete intersection Z of degree-1 classes, via the
// single-blowup resolution: D~ = pullback(D) - 2e is smooth upstairs,
// the exceptional fibers over Z are smooth conics, and
//
//   csm(D) = push(c(TBl) * D~ / (1 + D~)) - csm(Z).
//
// When Z's codimension exceeds dim(B) the center is empty and the
// Fulton class of D is returned unchanged.
Polynomial csm_a1_hypersurface(const HypersurfaceSpec& h, const CenterSpec& center);

// phi_* c_SM(1_Y) on the base for a smooth hypersurface Y in a
// projective bundle P(O + O + L).
Polynomial pushforward_csm_hypersurface(const HypersurfaceSpec& h);

}  // namespace verdier
