#include "doctest.h"
#include "g11/canonical.hpp"

using namespace g11;

TEST_CASE("canonical model of a five-pencil curve") {
  Field F(12347);
  auto m = random_model(6, F, 42);
  auto c = canonical_ideal(m);
  CHECK(c.adjoints.size() == 11);
  CHECK(c.ideal.gens().size() == 36);
  auto h = hilbert(c.ideal);
  CHECK(h.projective_dim() == 1);
  CHECK(h.degree == 20);
  CHECK(h.genus() == 11);
  for (int i = 0; i < int(m.pencils.size()); ++i) {
    CAPTURE(i);
    auto ps = pencil_sections(c, i);
    CHECK(ps.fiber0.size() == 6);
    CHECK(ps.type_one());
    auto s = scroll(c, ps);
    CHECK(s.minors.size() == 15);
    CHECK(minors_in_ideal(s, c.ideal));
    auto hs = hilbert(s.ideal);
    CHECK(hs.projective_dim() == 5);
    CHECK(hs.degree == 6);
  }
}

TEST_CASE("adjoint basis detects a misplaced point") {
  Field F(12347);
  auto m = random_model(5, F, 1);
  m.specs[0].p.x[0] = F.add(m.specs[0].p.x[0], 1);
  m.specs[1].p = m.specs[0].p;
  CHECK_THROWS_AS(adjoint_basis(m), GenericityFailure);
}

TEST_CASE("canonical models for every k") {
  Field F(12347);
  for (int k : {4, 10, 20}) {
    CAPTURE(k);
    auto m = random_model(k, F, 42);
    auto c = canonical_ideal(m);
    auto h = hilbert(c.ideal);
    CHECK(h.projective_dim() == 1);
    CHECK(h.degree == 20);
    for (int i = 0; i < int(m.pencils.size()); ++i) {
      if (m.pencils[i].kind == PencilKind::FourSecant) continue;
      CAPTURE(i);
      auto ps = pencil_sections(c, i);
      CHECK(ps.type_one());
      auto s = scroll(c, ps);
      CHECK(minors_in_ideal(s, c.ideal));
      CHECK(hilbert(s.ideal).degree == 6);
    }
  }
}

TEST_CASE("syzygy schemes of a nine-pencil curve") {
  Field F(12347);
  auto m = random_model(9, F, 42);
  auto c = canonical_ideal(m);
  std::vector<ScrollData> sc;
  for (int i = 0; i < 9; ++i) sc.push_back(scroll(c, i));
  struct Row {
    std::vector<int> subset;
    int dim;
    long long deg;
    long long genus;
  };
  std::vector<Row> rows{{{5, 6}, 2, 18, -1},       {{0, 5}, 2, 18, -1},         {{0, 1}, 2, 18, -1},
                        {{0, 5, 6}, 1, 20, 11},    {{0, 1, 2}, 2, 16, -1},      {{5, 6, 7}, 1, 21, 12},
                        {{0, 1, 5}, 1, 21, 12},    {{0, 1, 2, 3}, 2, 15, -1},   {{0, 1, 2, 3, 4}, 2, 15, -1},
                        {{0, 5, 6, 7}, 1, 20, 11}, {{0, 1, 2, 3, 4, 5, 6}, 1, 20, 11}};
  for (auto& r : rows) {
    CAPTURE(r.subset);
    auto rep = syzygy_scheme(c, sc, r.subset);
    CHECK(rep.dim == r.dim);
    CHECK(rep.degree == r.deg);
    if (r.genus >= 0) CHECK(rep.genus == r.genus);
  }
}

TEST_CASE("critical Betti numbers count pencils") {
  Field F(12347);
  for (int k : {5, 10}) {
    CAPTURE(k);
    auto c = canonical_ideal(random_model(k, F, 42));
    std::mt19937_64 rng(5);
    auto art = linear_section(c.ideal, 2, rng);
    GradedQuotient A(art.ideal);
    CHECK(A.dim(1) == 9);
    CHECK(A.dim(2) == 9);
    CHECK(A.dim(3) == 1);
    CHECK(koszul_betti(A, 1, 2) == 36);
    CHECK(koszul_betti(A, 2, 3) == 160);
    CHECK(koszul_betti(A, 4, 6) == 5 * k);
    CHECK(koszul_betti(A, 5, 6) == 5 * k);
  }
}
