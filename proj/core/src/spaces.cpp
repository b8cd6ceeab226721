#include "verdier/spaces.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace verdier {

struct Space::Impl {
  SpaceKind kind;
  int dim;
  RingSpec ring_spec;  // kept so extensions can append generators
  Ring ring;
  Polynomial tangent;
  std::optional<Space> base;
  std::optional<Polynomial> l_class;   // bundle only, on base ring
  std::vector<Polynomial> center;      // blowup only, on base ring
  std::vector<Polynomial> segre;       // blowup: s_j of 1/prod(1+d_i), on base ring
  std::optional<Polynomial> center_product;  // blowup: d1*...*dr on base ring
  std::string description;
};

namespace {

NamedMonomial named_monomial(const Ring& ring, const Exponents& e) {
  NamedMonomial m;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > 0) m.emplace(ring.generator(static_cast<int>(i)).name, e[i]);
  return m;
}

TermList named_terms(const Polynomial& p) {
  TermList out;
  const Ring ring = p.ring();
  for (const auto& [e, c] : p.terms()) out.emplace_back(named_monomial(ring, e), c);
  return out;
}

// degree-1 homogeneous; the zero class passes (it is the only degree-1
// class over a point)
void require_degree_one(const Polynomial& p, const char* what) {
  if (!p.is_homogeneous(1))
    throw SpaceError(std::string(what) + " must be homogeneous of degree 1");
}

// Base generators stay a prefix of the extended ring's generators, so
// classes transfer by extending or truncating exponent vectors.
Polynomial transfer_prefix(const Polynomial& from, const Ring& to, int to_size) {
  std::vector<std::pair<Exponents, Rational>> terms;
  for (const auto& [e, c] : from.terms()) {
    Exponents ne(to_size, 0);
    std::copy(e.begin(), e.end(), ne.begin());
    terms.emplace_back(std::move(ne), c);
  }
  return to.make(terms);
}

}  // namespace

SpaceKind Space::kind() const { return impl_->kind; }
int Space::dim() const { return impl_->dim; }
const Ring& Space::ring() const { return impl_->ring; }
const Polynomial& Space::tangent_class() const { return impl_->tangent; }
bool Space::has_base() const { return impl_->base.has_value(); }

const Space& Space::base() const {
  if (!impl_->base) throw SpaceError(impl_->description + " has no base");
  return *impl_->base;
}

const Polynomial& Space::bundle_class() const {
  if (!impl_->l_class)
    throw SpaceError(impl_->description + " is not a projective bundle");
  return *impl_->l_class;
}

const std::vector<Polynomial>& Space::center_classes() const {
  if (impl_->kind != SpaceKind::BlowupCI)
    throw SpaceError(impl_->description + " is not a blowup");
  return impl_->center;
}

std::string Space::description() const { return impl_->description; }

Space projective_space(int n) {
  if (n < 0) throw SpaceError("projective space dimension must be >= 0");
  RingSpec spec;
  spec.generators = {{"H", 1}};
  spec.rules = {{"H", n + 1, {}}};
  spec.truncation = n;
  Ring ring(spec);
  Polynomial tangent = (ring.one() + ring.var("H")).pow(n + 1);
  return Space(std::make_shared<const Space::Impl>(Space::Impl{
      SpaceKind::ProjectiveSpace, n, std::move(spec), ring, std::move(tangent),
      std::nullopt, std::nullopt, {}, {}, std::nullopt,
      "P" + std::to_string(n)}));
}

Space formal_base(int d) {
  if (d < 1) throw SpaceError("formal base dimension must be >= 1");
  RingSpec spec;
  spec.generators.push_back({"L", 1});
  for (int i = 1; i <= d; ++i)
    spec.generators.push_back({"c" + std::to_string(i), i});
  spec.truncation = d;
  Ring ring(spec);
  Polynomial tangent = ring.one();
  for (int i = 1; i <= d; ++i) tangent += ring.var("c" + std::to_string(i));
  return Space(std::make_shared<const Space::Impl>(Space::Impl{
      SpaceKind::FormalBase, d, std::move(spec), ring, std::move(tangent),
      std::nullopt, std::nullopt, {}, {}, std::nullopt,
      "formal:" + std::to_string(d)}));
}

Space proj_bundle_ool(const Space& base, const Polynomial& l_class) {
  if (!l_class.ring().same(base.ring()))
    throw SpaceError("bundle class not on the base ring");
  require_degree_one(l_class, "bundle class L");
  const int dim = base.dim() + 2;

  RingSpec spec = base.impl_->ring_spec;
  if (base.ring().generator_index("zeta"))
    throw SpaceError("base ring already has a generator 'zeta'");
  spec.generators.push_back({"zeta", 1});
  spec.truncation = dim;

  // Grothendieck relation for c(E) = 1 + L: zeta^3 -> -L*zeta^2
  RewriteRuleSpec rule;
  rule.generator = "zeta";
  rule.power = 3;
  for (auto& [mono, coeff] : named_terms(l_class)) {
    NamedMonomial m = std::move(mono);
    m["zeta"] = 2;
    rule.replacement.emplace_back(std::move(m), -coeff);
  }
  spec.rules.push_back(std::move(rule));

  Ring ring(spec);
  const int n = ring.generator_count();
  Polynomial zeta = ring.var("zeta");
  Polynomial l_up = transfer_prefix(l_class, ring, n);
  Polynomial tb_up = transfer_prefix(base.tangent_class(), ring, n);
  Polynomial one_zeta = ring.one() + zeta;
  Polynomial tangent = tb_up * one_zeta * one_zeta * (one_zeta + l_up);

  return Space(std::make_shared<const Space::Impl>(Space::Impl{
      SpaceKind::ProjBundleOOL, dim, std::move(spec), ring, std::move(tangent),
      base, l_class, {}, {}, std::nullopt,
      "P(O+O+L) over " + base.description()}));
}

Space blowup_ci(const Space& base, const CenterSpec& center) {
  const int r = static_cast<int>(center.classes.size());
  if (r < 1) throw SpaceError("blowup center needs at least one class");
  if (r > base.dim())
    throw SpaceError("blowup center codimension exceeds the base dimension");
  for (const auto& d : center.classes) {
    if (!d.ring().same(base.ring()))
      throw SpaceError("center class not on the base ring");
    require_degree_one(d, "center class");
    if (d.is_zero()) throw SpaceError("center class must be nonzero");
  }
  const int dim = base.dim();

  RingSpec spec = base.impl_->ring_spec;
  if (base.ring().generator_index("e"))
    throw SpaceError("base ring already has a generator 'e'");
  spec.generators.push_back({"e", 1});
  spec.truncation = dim;  // e stays free; only truncation bounds it

  Ring ring(spec);
  const int n = ring.generator_count();
  Polynomial e = ring.var("e");

  // c(TBl) = c(TB) * (1+e) * prod(1 + d_i - e) / prod(1 + d_i),
  // exact for smooth complete-intersection centers
  Polynomial tangent = transfer_prefix(base.tangent_class(), ring, n);
  tangent *= ring.one() + e;
  Polynomial normal_up = ring.one();
  for (const auto& d : center.classes) {
    Polynomial d_up = transfer_prefix(d, ring, n);
    tangent *= ring.one() + d_up - e;
    normal_up *= ring.one() + d_up;
  }
  tangent *= normal_up.inverse_of_unit();

  // Segre expansion on the base: s_j components of 1/prod(1+d_i)
  Polynomial normal = base.ring().one();
  Polynomial product = base.ring().one();
  for (const auto& d : center.classes) {
    normal *= base.ring().one() + d;
    product *= d;
  }
  Polynomial segre_total = normal.inverse_of_unit();
  std::vector<Polynomial> segre;
  for (int j = 0; j <= base.ring().truncation(); ++j)
    segre.push_back(segre_total.component(j));

  return Space(std::make_shared<const Space::Impl>(Space::Impl{
      SpaceKind::BlowupCI, dim, std::move(spec), ring, std::move(tangent), base,
      std::nullopt, center.classes, std::move(segre), std::move(product),
      "Bl_ci(" + std::to_string(r) + ") " + base.description()}));
}

Polynomial pullback(const Space& space, const Polynomial& on_base) {
  if (!space.has_base()) throw SpaceError(space.description() + " has no base");
  if (!on_base.ring().same(space.base().ring()))
    throw SpaceError("pullback argument not on the base ring");
  return transfer_prefix(on_base, space.ring(), space.ring().generator_count());
}

Polynomial pushforward_to_base(const Space& space, const Polynomial& a) {
  if (!space.has_base()) throw SpaceError(space.description() + " has no base");
  if (!a.ring().same(space.ring()))
    throw SpaceError("pushforward argument not on the total ring");
  const Ring& base_ring = space.base().ring();
  const int base_n = base_ring.generator_count();
  const int fiber_idx = space.ring().generator_count() - 1;  // "zeta" or "e"

  if (space.kind() == SpaceKind::ProjBundleOOL) {
    // a = a0 + a1*zeta + a2*zeta^2  ->  a2
    std::vector<std::pair<Exponents, Rational>> terms;
    for (const auto& [e, c] : a.terms()) {
      if (e[fiber_idx] != 2) continue;
      terms.emplace_back(Exponents(e.begin(), e.begin() + base_n), c);
    }
    return base_ring.make(terms);
  }

  if (space.kind() == SpaceKind::BlowupCI) {
    const int r = static_cast<int>(space.center_classes().size());
    const auto& segre = space.impl_->segre;
    const Polynomial& product = *space.impl_->center_product;
    Polynomial result = base_ring.zero();
    for (const auto& [e, c] : a.terms()) {
      const int k = e[fiber_idx];
      Polynomial base_part =
          c * base_ring.make({{Exponents(e.begin(), e.begin() + base_n), 1}});
      if (k == 0) {
        result += base_part;
      } else if (k >= r) {
        const Rational sign = (k - 1) % 2 == 0 ? 1 : -1;
        result += sign * base_part * product * segre.at(k - r);
      }
      // 1 <= k < r pushes to zero
    }
    return result;
  }

  throw SpaceError(space.description() + " has no pushforward to a base");
}

std::string integral_str(const Integral& v) {
  return is_numeric(v) ? to_string(as_number(v)) : as_class(v).str();
}

bool integral_eq(const Integral& a, const Integral& b) {
  if (is_numeric(a) != is_numeric(b)) return false;
  if (is_numeric(a)) return as_number(a) == as_number(b);
  return as_class(a) == as_class(b);
}

Integral integrate(const Space& space, const Polynomial& a) {
  if (!a.ring().same(space.ring()))
    throw SpaceError("integrand not on the space's ring");
  switch (space.kind()) {
    case SpaceKind::ProjectiveSpace: {
      Exponents top{space.dim()};
      return a.coefficient(top);
    }
    case SpaceKind::FormalBase:
      return a.component(space.dim());
    case SpaceKind::ProjBundleOOL:
    case SpaceKind::BlowupCI:
      return integrate(space.base(), pushforward_to_base(space, a));
  }
  throw SpaceError("unknown space kind");
}

Integral euler_characteristic(const Space& space) {
  return integrate(space, space.tangent_class().component(space.dim()));
}

}  // namespace verdier
