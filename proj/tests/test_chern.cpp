#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/random_values.hpp"
#include "verdier/chern.hpp"

using namespace verdier;
using vtest::random_divisor_class;

namespace {

Rational degree_of(const Space& sp, const Polynomial& cls) {
  return as_number(integrate(sp, cls));
}

}  // namespace

TEST_CASE("classical Euler numbers of smooth complete intersections") {
  Space p3 = projective_space(3);
  Polynomial h = p3.ring().var("H");

  CHECK(degree_of(p3, csm_smooth_ci({p3, {Rational(2) * h}})) == 4);   // quadric
  CHECK(degree_of(p3, csm_smooth_ci({p3, {Rational(3) * h}})) == 9);   // cubic surface
  CHECK(degree_of(p3, csm_smooth_ci({p3, {Rational(4) * h}})) == 24);  // K3 quartic
  CHECK(degree_of(p3, csm_smooth_ci({p3, {Rational(2) * h, Rational(2) * h}})) ==
        0);  // elliptic quartic curve
  CHECK(degree_of(p3, csm_smooth_ci({p3, {h, h}})) == 2);  // line

  Space p2 = projective_space(2);
  Polynomial h2 = p2.ring().var("H");
  CHECK(degree_of(p2, csm_smooth_ci({p2, {Rational(3) * h2}})) == 0);  // plane cubic
  CHECK(degree_of(p2, csm_smooth_ci({p2, {Rational(2) * h2}})) == 2);  // conic

  // the empty intersection is the ambient space itself
  for (int n = 0; n <= 4; ++n) {
    Space pn = projective_space(n);
    CHECK(degree_of(pn, csm_smooth_ci({pn, {}})) == n + 1);
  }

  // more classes than the dimension cuts out nothing
  CHECK(csm_smooth_ci({p2, {h2, h2, h2}}).is_zero());
}

TEST_CASE("Fulton class of a hypersurface") {
  Space p3 = projective_space(3);
  Polynomial h = p3.ring().var("H");

  // degree only depends on the class: a quartic contributes the smooth
  // Euler number 24 no matter how singular the actual section is
  CHECK(degree_of(p3, fulton_hypersurface_class({p3, Rational(4) * h})) == 24);
  CHECK(fulton_hypersurface_class({p3, p3.ring().zero()}).is_zero());
  CHECK_THROWS_AS(fulton_hypersurface_class({p3, p3.ring().one()}), SpaceError);
  CHECK_THROWS_AS(fulton_hypersurface_class({p3, h.pow(2)}), SpaceError);
}

TEST_CASE("Fulton agrees with CSM on smooth hypersurface classes") {
  std::mt19937_64 rng(1123);
  Space p3 = projective_space(3);
  Space f3 = formal_base(3);
  Space f2 = formal_base(2);
  Space bundle = proj_bundle_ool(f2, f2.ring().var("L"));

  for (const Space& sp : {p3, f3, bundle}) {
    for (int i = 0; i < 150; ++i) {
      Polynomial d = random_divisor_class(sp.ring(), rng);
      CHECK(fulton_hypersurface_class({sp, d}) == csm_smooth_ci({sp, {d}}));
    }
  }
}

TEST_CASE("CSM of a quartic with ordinary double points along 8 points") {
  Space p3 = projective_space(3);
  Polynomial h = p3.ring().var("H");
  Polynomial two_h = Rational(2) * h;
  HypersurfaceSpec quartic{p3, Rational(4) * h};
  CenterSpec nodes{{two_h, two_h, two_h}};

  // Milnor oracle, frozen by hand: the A1 Milnor fiber on a surface has
  // chi 2, the center (2,2,2) cuts 2*2*2 = 8 nodes, and a smooth
  // quartic is a K3: chi = 24 - 8*2 + 8*1 = 16.
  CHECK(degree_of(p3, csm_a1_hypersurface(quartic, nodes)) == 16);

  // the resolved surface upstairs: chi(D~) = chi(D) + 8*(chi(conic)-1)
  Space blowup = blowup_ci(p3, nodes);
  Polynomial d_strict =
      pullback(blowup, quartic.divisor_class) - Rational(2) * blowup.ring().var("e");
  CHECK(degree_of(blowup, fulton_hypersurface_class({blowup, d_strict})) == 24);
}

TEST_CASE("csm_a1 does not depend on the order of the center classes") {
  Space p3 = projective_space(3);
  Polynomial h = p3.ring().var("H");
  HypersurfaceSpec d{p3, Rational(6) * h};
  Polynomial a = h, b = Rational(2) * h, c = Rational(3) * h;
  Polynomial reference = csm_a1_hypersurface(d, {{a, b, c}});
  CHECK(csm_a1_hypersurface(d, {{c, a, b}}) == reference);
  CHECK(csm_a1_hypersurface(d, {{b, c, a}}) == reference);
}

TEST_CASE("csm_a1 degrades to the Fulton class when the center is empty") {
  Space p1 = projective_space(1);
  Polynomial l = p1.ring().var("H");
  HypersurfaceSpec four_points{p1, Rational(4) * l};
  CenterSpec center{{Rational(2) * l, Rational(2) * l, Rational(2) * l}};
  Polynomial cls = csm_a1_hypersurface(four_points, center);
  CHECK(cls == fulton_hypersurface_class(four_points));
  CHECK(degree_of(p1, cls) == 4);
}

TEST_CASE("pushforward of the CSM class of a bundle hypersurface") {
  // over a formal curve: phi_* c_SM(Y) = 12 L on the nose
  Space f1 = formal_base(1);
  Space bundle = proj_bundle_ool(f1, f1.ring().var("L"));
  Polynomial y = Rational(3) * bundle.ring().var("zeta") +
                 Rational(2) * pullback(bundle, f1.ring().var("L"));
  CHECK(pushforward_csm_hypersurface({bundle, y}) ==
        Rational(12) * f1.ring().var("L"));

  // over a point the hypersurface is a plane cubic
  Space pt = projective_space(0);
  Space plane = proj_bundle_ool(pt, pt.ring().zero());
  Polynomial cubic = Rational(3) * plane.ring().var("zeta");
  CHECK(degree_of(pt, pushforward_csm_hypersurface({plane, cubic})) == 0);

  // over P1 with L = H the discriminant has degree 12
  Space p1 = projective_space(1);
  Space bundle_p1 = proj_bundle_ool(p1, p1.ring().var("H"));
  Polynomial y1 = Rational(3) * bundle_p1.ring().var("zeta") +
                  Rational(2) * pullback(bundle_p1, p1.ring().var("H"));
  CHECK(degree_of(p1, pushforward_csm_hypersurface({bundle_p1, y1})) == 12);

  CHECK_THROWS_AS(pushforward_csm_hypersurface({p1, p1.ring().var("H")}),
                  SpaceError);
}
