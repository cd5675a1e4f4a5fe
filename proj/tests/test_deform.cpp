#include "doctest.h"
#include "g11/deform.hpp"

using namespace g11;

TEST_CASE("severi tangent dimensions") {
  Field F(12347);
  for (int m = 0; m <= 4; ++m) {
    CAPTURE(m);
    auto sev = severi_tangent(random_model(5 + m, F, 42));
    CHECK(sev.kernel_dim == std::size_t(33 - m));
  }
  CHECK(severi_tangent(random_model(10, F, 42)).kernel_dim == 34);
}

TEST_CASE("normal space, obstruction matrix and differential rank for k=5") {
  Field F(12347);
  auto m = random_model(5, F, 42);
  auto c = canonical_ideal(m);
  auto ks = normal_space(c);
  CHECK(ks.syzygies == 160);
  CHECK(ks.sections.cols() == 150);
  CHECK(ks.trivial.cols() == 120);
  CHECK(ks.complement.cols() == 30);
  std::vector<ScrollData> sc;
  for (int i = 0; i < 5; ++i) sc.push_back(scroll(c, i));
  auto M = obstruction_matrix(c, ks, 7, sc);
  CHECK(M.beta_51 == 25);
  CHECK(M.beta_42 == 25);
  CHECK(M.size == 25);
  auto fr = factor_M(M, 3);
  CHECK_MESSAGE(fr.ok, fr.failure);
  CHECK(fr.forms.size() == 5);
  CHECK(fr.forms_rank == 5);
  for (auto w : fr.w_ranks) CHECK(w == 20);
  CHECK(entry_span_dim(M) == 5);
  auto sev = severi_tangent(m);
  auto dr = differential_rank(c, ks, sev);
  CHECK(dr.image_in_normal_space);
  CHECK(dr.intersection == 8);
  CHECK(dr.rank == 25);
  CHECK(dr.pgl_rank == 8);
  CHECK(dr.pgl_in_intersection);
}

TEST_CASE("octic and g^3_10 spans") {
  Field F(12347);
  {
    auto m = random_model(10, F, 42);
    auto c = canonical_ideal(m);
    auto ks = normal_space(c);
    CHECK(ks.sections.cols() == 150);
    std::vector<ScrollData> sc;
    for (int i = 0; i < 10; ++i) sc.push_back(scroll(c, i));
    auto M = obstruction_matrix(c, ks, 7, sc);
    CHECK(M.beta_51 == 50);
    auto fr = factor_M(M, 3);
    CHECK_MESSAGE(fr.ok, fr.failure);
    CHECK(fr.forms_rank == 4);
    CHECK(entry_span_dim(M) == 4);
    auto dr = differential_rank(c, ks, severi_tangent(m));
    CHECK(dr.rank == 26);
    CHECK(dr.intersection == 8);
  }
  {
    auto m = random_model(20, F, 42);
    auto c = canonical_ideal(m);
    auto ks = normal_space(c);
    auto M = obstruction_matrix(c, ks, 7);
    CHECK(M.beta_51 == 100);
    CHECK(M.beta_42 == 100);
    CHECK(entry_span_dim(M) == 5);
  }
}
