#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <thread>

#include "verdier/q7.hpp"

using namespace verdier;

namespace {

using CF = ConstructibleFunction;

Rational chi_of(const Q7Model& model, const char* name) {
  return as_number(model.registry.at(name).chi);
}

BaseSpec pn(int n) { return {BaseSpec::Kind::Pn, n}; }
BaseSpec formal(int d) { return {BaseSpec::Kind::Formal, d}; }

}  // namespace

TEST_CASE("model strata over P1: zeros of the section classes") {
  Q7Model model = build_model(pn(1), 1);
  CHECK(chi_of(model, "O") == 2);
  CHECK(chi_of(model, "D1") == 2);
  CHECK(chi_of(model, "S1") == 0);  // empty: codim 2 over a curve
  CHECK(chi_of(model, "D2") == 4);
  CHECK(chi_of(model, "S2") == 0);
  CHECK(model.registry.at("S1").csm.is_zero());
}

TEST_CASE("model strata over P3") {
  Q7Model model = build_model(pn(3), 1);
  CHECK(chi_of(model, "O") == 4);   // quadric
  CHECK(chi_of(model, "D1") == 4);
  CHECK(chi_of(model, "S1") == 0);  // (2,2) elliptic curve
  CHECK(chi_of(model, "D2") == 16); // 8-nodal quartic
  CHECK(chi_of(model, "S2") == 8);  // 8 points
}

TEST_CASE("model strata over a formal curve stay symbolic") {
  Q7Model model = build_model(formal(1), 1);
  Polynomial two_l = Rational(2) * model.base.ring().var("L");
  CHECK(model.registry.at("O").csm == two_l);
  CHECK(model.registry.at("D1").csm == two_l);
  CHECK(model.registry.at("D2").csm == Rational(2) * two_l);
  CHECK(model.registry.at("S1").csm.is_zero());
  CHECK(model.registry.at("S2").csm.is_zero());
}

TEST_CASE("model construction guards") {
  CHECK_THROWS_AS(build_model(pn(0), 1), ConfigError);
  CHECK_THROWS_AS(build_model(pn(5), 1), ConfigError);
  CHECK_THROWS_AS(build_model(pn(2), 0), ConfigError);
  CHECK_THROWS_AS(build_model(formal(5), 1), ConfigError);
}

TEST_CASE("conic fiber data by matrix rank") {
  CHECK(conic_fiber_euler(3) == 2);
  CHECK(conic_fiber_euler(2) == 3);
  CHECK(conic_fiber_euler(1) == 2);
  CHECK_THROWS_AS(conic_fiber_euler(0), ConfigError);

  FibrationTable d2 = conic_rank_table({"B", "D2", "S2"});
  REQUIRE(d2.chain.size() == 3);
  CHECK(d2.chain[0] == std::pair<std::string, int>{"B", 2});
  CHECK(d2.chain[1] == std::pair<std::string, int>{"D2", 3});
  CHECK(d2.chain[2] == std::pair<std::string, int>{"S2", 2});

  Q7Model model = build_model(pn(1), 1);
  CHECK(model.tables.at("D2").chain == d2.chain);
  // the D1 cover degenerates to two disjoint lines first: fiber chi 4,
  // not the rank-2 value 3
  CHECK(model.tables.at("D1").chain ==
        decltype(d2.chain){{"B", 2}, {"D1", 4}, {"S1", 3}});
}

TEST_CASE("left side: the pushforward class of Y") {
  Q7Model formal_model = build_model(formal(1), 1);
  CHECK(lhs_class(formal_model) ==
        Rational(12) * formal_model.base.ring().var("L"));

  Q7Model p1_model = build_model(pn(1), 1);
  CHECK(as_number(integrate(p1_model.base, lhs_class(p1_model))) == 12);
}

TEST_CASE("right side: the pushed specialization function") {
  Q7Model model = build_model(pn(1), 1);

  CF sd = rhs_constructible(model, {});
  CHECK(sd == 2 * CF::indicator("O") + 2 * CF::indicator("D1") -
                  CF::indicator("S1") + CF::indicator("D2") -
                  CF::indicator("S2"));
  CHECK(euler_cf(sd, model.registry) == 12);

  CF printed = rhs_constructible(model, {DeltaRule::Printed, std::nullopt});
  CHECK(printed == 2 * CF::indicator("B") + CF::indicator("O") +
                       2 * CF::indicator("D1") - CF::indicator("S1") +
                       CF::indicator("D2") - CF::indicator("S2"));
  CHECK(euler_cf(printed, model.registry) == 14);

  // the two delta rules differ by 2*1_B - 1_O: chi difference 2 chi(B) - chi(O)
  CHECK(euler_cf(printed, model.registry) - euler_cf(sd, model.registry) ==
        2 * 2 - 2);
}

TEST_CASE("right side CSM class over a formal curve") {
  Q7Model model = build_model(formal(1), 1);
  CF sd = rhs_constructible(model, {});
  CHECK(rhs_class(model, sd) == Rational(12) * model.base.ring().var("L"));
}

TEST_CASE("verification passes with the SD delta rule") {
  // every numeric base with deg L in {1, 2, anticanonical}
  for (const auto& [spec, l] : std::vector<std::pair<BaseSpec, int>>{
           {pn(1), 1}, {pn(1), 2}, {pn(2), 1}, {pn(2), 2}, {pn(2), 3},
           {pn(3), 1}, {pn(3), 2}, {pn(3), 4}}) {
    Q7Model model = build_model(spec, l);
    VerificationReport report = verify(model, {});
    CHECK(report.pass);
    CHECK(report.chi_equal);
    for (const auto& row : report.rows) CHECK(row.equal);
  }
  Q7Model p1 = build_model(pn(1), 1);
  VerificationReport report = verify(p1, {});
  CHECK(as_number(report.lhs_chi) == 12);
  CHECK(as_number(report.rhs_chi) == 12);
}

TEST_CASE("verification fails with the printed delta rule") {
  Q7Model model = build_model(pn(1), 1);
  VerificationReport report = verify(model, {DeltaRule::Printed, std::nullopt});
  CHECK_FALSE(report.pass);
  CHECK(as_number(report.lhs_chi) == 12);
  CHECK(as_number(report.rhs_chi) == 14);
}

TEST_CASE("verification over formal bases is an exact class identity") {
  for (int d = 1; d <= 3; ++d) {
    Q7Model model = build_model(formal(d), 1);
    VerificationReport report = verify(model, {});
    CHECK(report.pass);
  }
  Q7Model model = build_model(formal(1), 1);
  VerificationReport report = verify(model, {});
  CHECK_FALSE(is_numeric(report.lhs_chi));
  CHECK(as_class(report.lhs_chi) == Rational(12) * model.base.ring().var("L"));
}

TEST_CASE("fiber table overrides flow through the verdict") {
  Q7Model model = build_model(pn(1), 1);
  auto tables = model.tables;
  tables.at("X").chain[0].second = 3;  // not a double cover any more
  VerificationReport report = verify(model, {DeltaRule::SD, tables});
  CHECK_FALSE(report.pass);
}

TEST_CASE("orientifold Euler characteristics") {
  Q7Model p1 = build_model(pn(1), 1);
  OrientifoldSection section = orientifold_report(p1);
  CHECK(section.chi_o_d1 == 4);
  CHECK(section.chi_o_d2 == 4);
  CHECK(section.total == 12);
  CHECK(section.matches_rhs);
  // over a curve S2 is empty, so the naive double-cover count closes
  CHECK(section.two_chi_y == 24);
  CHECK(section.double_cover_sum == 24);
  CHECK(section.double_cover_matches);

  Q7Model p3 = build_model(pn(3), 1);
  OrientifoldSection s3 = orientifold_report(p3);
  CHECK(s3.chi_o_d1 == 8);
  CHECK(s3.chi_o_d2 == 8);
  CHECK(s3.total == 24);
  CHECK(s3.matches_rhs);
  // D2bar is tangent to the ramification locus: the naive count misses
  CHECK(s3.two_chi_y == 48);
  CHECK(s3.double_cover_sum == 56);
  CHECK_FALSE(s3.double_cover_matches);

  CHECK_THROWS_AS(orientifold_report(build_model(formal(1), 1)), ConfigError);
}

TEST_CASE("the identity also holds on the largest supported bases") {
  CHECK(verify(build_model(pn(4), 1), {}).pass);
  CHECK(verify(build_model(formal(4), 1), {}).pass);
}

TEST_CASE("a shared model can be verified from many threads") {
  Q7Model model = build_model(pn(2), 1);
  VerificationReport reference = verify(model, {});
  std::vector<std::thread> workers;
  std::array<bool, 8> agree{};
  for (std::size_t t = 0; t < agree.size(); ++t) {
    workers.emplace_back([&, t] {
      VerificationReport report = verify(model, {});
      bool same = report.pass == reference.pass &&
                  integral_eq(report.lhs_chi, reference.lhs_chi) &&
                  report.rhs_cf == reference.rhs_cf;
      for (std::size_t d = 0; d < report.rows.size(); ++d)
        same = same && report.rows[d].lhs == reference.rows[d].lhs;
      agree[t] = same;
    });
  }
  for (auto& w : workers) w.join();
  for (bool same : agree) CHECK(same);
}

TEST_CASE("reports embed the orientifold section for numeric bases only") {
  VerificationReport numeric = verify(build_model(pn(2), 1), {});
  CHECK(numeric.orientifold.has_value());
  CHECK_FALSE(numeric.strata_chi.empty());

  VerificationReport symbolic = verify(build_model(formal(2), 1), {});
  CHECK_FALSE(symbolic.orientifold.has_value());
  CHECK(symbolic.strata_chi.empty());
}
