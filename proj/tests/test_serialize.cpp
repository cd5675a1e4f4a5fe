#include "doctest.h"
#include "g11/verify.hpp"

using namespace g11;

TEST_CASE("term lists round trip") {
  Field F(101);
  auto R = Ring::make(F, 3);
  auto f = parse_poly(R, "3*x0^2*x2 - x1^3 + 7");
  auto j = to_json(f);
  CHECK(j.dump() == "[[[0,3,0],100],[[2,0,1],3],[[0,0,0],7]]");
  CHECK(poly_from_json(R, j) == f);
  CHECK(poly_from_json(R, json::parse("[[[1,0,0],-1]]")) == parse_poly(R, "-x0"));
  CHECK_THROWS_AS(poly_from_json(R, json::parse("[[[1,0],1]]")), std::invalid_argument);
}

TEST_CASE("curve files round trip") {
  Field F(12347);
  auto c = canonical_curve(6, F, 42);
  auto j = curve_file(c);
  auto back = curve_from_file(json::parse(j.dump()));
  CHECK(curve_file(back).dump() == j.dump());
  CHECK(back.model->form == c.model->form);
  CHECK(back.model->pencils.size() == 6);
  CHECK(back.model->pencils[5].kind == PencilKind::CubicResidual);
  CHECK(back.ideal.gens().size() == 36);
  CHECK(verify_model(*back.model).ok());
  CHECK(pencil_sections(back, 5).type_one());
}

TEST_CASE("betti and table rows") {
  BettiTable b;
  b.set(0, 0, 1);
  b.set(1, 2, 27);
  b.set(2, 3, 96);
  b.set(3, 4, 127);
  CHECK(betti_from_json(to_json(b)) == b);
  SyzygySchemeReport r;
  r.subset = {0, 5};
  r.a = 1;
  r.b = 1;
  r.dim = 2;
  r.degree = 18;
  r.linear_strand = b;
  CHECK(table_row(r) == "a=1 b=1 | dim 2 deg 18 genus - | 1 27 96 127 | {1,6}");
  CHECK(to_json(r)["pencils"].dump() == "[1,6]");
}

TEST_CASE("assertion reports are reproducible") {
  Field F(7919);
  auto c = canonical_curve(7, F, 3);
  auto r1 = run_assertion("severi-tangent", c, 3).to_json().dump();
  auto r2 = run_assertion("severi-tangent", canonical_curve(7, F, 3), 3).to_json().dump();
  CHECK(r1 == r2);
  CHECK(run_assertion("severi-tangent", c, 3).pass);
  CHECK_THROWS_AS(run_assertion("g310", c, 3), std::invalid_argument);
  CHECK_THROWS_AS(run_assertion("nonsense", c, 3), std::invalid_argument);
}
