#include "verdier/chern.hpp"

namespace verdier {

namespace {

void require_on_ring(const Polynomial& p, const Space& sp, const char* what) {
  if (!p.ring().same(sp.ring()))
    throw SpaceError(std::string(what) + " not in the ambient ring");
}

void require_degree_one(const Polynomial& p, const char* what) {
  if (!p.is_homogeneous(1))
    throw SpaceError(std::string(what) + " must be homogeneous of degree 1");
}

}  // namespace

Polynomial csm_smooth_ci(const CISpec& ci) {
  const Ring& ring = ci.ambient.ring();
  if (static_cast<int>(ci.classes.size()) > ci.ambient.dim())
    return ring.zero();  // generic complete intersection is empty
  Polynomial result = ci.ambient.tangent_class();
  for (const auto& v : ci.classes) {
    require_on_ring(v, ci.ambient, "complete-intersection class");
    require_degree_one(v, "complete-intersection class");
    result *= v * (ring.one() + v).inverse_of_unit();
  }
  return result;
}

Polynomial fulton_hypersurface_class(const HypersurfaceSpec& h) {
  require_on_ring(h.divisor_class, h.ambient, "divisor class");
  require_degree_one(h.divisor_class, "divisor class");
  const Ring& ring = h.ambient.ring();
  return h.ambient.tangent_class() * h.divisor_class *
         (ring.one() + h.divisor_class).inverse_of_unit();
}

Polynomial csm_a1_hypersurface(const HypersurfaceSpec& h, const CenterSpec& center) {
  require_on_ring(h.divisor_class, h.ambient, "divisor class");
  const int r = static_cast<int>(center.classes.size());
  if (r > h.ambient.dim()) return fulton_hypersurface_class(h);

  Space blowup = blowup_ci(h.ambient, center);
  Polynomial d_strict =
      pullback(blowup, h.divisor_class) - Rational(2) * blowup.ring().var("e");
  Polynomial resolved = fulton_hypersurface_class({blowup, std::move(d_strict)});
  return pushforward_to_base(blowup, resolved) -
         csm_smooth_ci({h.ambient, center.classes});
}

Polynomial pushforward_csm_hypersurface(const HypersurfaceSpec& h) {
  if (h.ambient.kind() != SpaceKind::ProjBundleOOL)
    throw SpaceError("pushforward_csm_hypersurface needs a projective bundle");
  return pushforward_to_base(h.ambient, fulton_hypersurface_class(h));
}

}  // namespace verdier
