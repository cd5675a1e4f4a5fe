#include "doctest.h"
#include "g11/resolution.hpp"

using namespace g11;

namespace {

std::vector<Poly> rnc_minors(const RingPtr& R, std::size_t c) {
  // 2x2 minors of [[x0..x_{c-1}],[x1..x_c]]
  std::vector<Poly> out;
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = a + 1; b < c; ++b)
      out.push_back(Poly::variable(R, a) * Poly::variable(R, b + 1) - Poly::variable(R, b) * Poly::variable(R, a + 1));
  return out;
}

}  // namespace

TEST_CASE("Koszul complex of the maximal ideal") {
  Field F(101);
  auto R = Ring::make(F, 3);
  Ideal m(R, {Poly::variable(R, 0), Poly::variable(R, 1), Poly::variable(R, 2)});
  auto res = resolve(m, 5);
  CHECK(is_complex(res));
  auto b = betti_table(res);
  CHECK(b.get(0, 0) == 1);
  CHECK(b.get(1, 1) == 3);
  CHECK(b.get(2, 2) == 3);
  CHECK(b.get(3, 3) == 1);
  for (int i = 0; i <= 3; ++i) CHECK(koszul_betti(m, i, i) == b.get(i, i));
  CHECK(koszul_betti(m, 2, 1) == 0);
}

TEST_CASE("twisted cubic resolution") {
  Field F(12347);
  auto R = Ring::make(F, 4);
  Ideal I(R, rnc_minors(R, 3));
  auto res = resolve(I, 3);
  CHECK(is_complex(res));
  CHECK(res.minimal);
  auto b = betti_table(res);
  CHECK(b.get(1, 2) == 3);
  CHECK(b.get(2, 3) == 2);
  CHECK(b.get(3, 4) == 0);
  CHECK(koszul_betti(I, 1, 2) == 3);
  CHECK(koszul_betti(I, 2, 3) == 2);
  CHECK(koszul_betti(I, 2, 4) == 0);
  CHECK(b.to_grid() == "       0 1 2\ntotal: 1 3 2\n    0: 1 . .\n    1: . 3 2\n");
}

TEST_CASE("minimalize removes trivial summands") {
  Field F(101);
  auto R = Ring::make(F, 4);
  Ideal I(R, rnc_minors(R, 3));
  auto res = resolve(I, 3);
  CHECK(minimalize(res).maps == res.maps);
  // F1 + S(-2) --> F0, F2 + S(-2) --> F1 + S(-2) with identity on the extra summand
  Resolution bad = res;
  auto& d1 = bad.maps[0];
  auto& d2 = bad.maps[1];
  Poly q = rnc_minors(R, 3)[0] + rnc_minors(R, 3)[2];
  d1.src_deg.push_back(2);
  d1.entries[0].push_back(q);
  d2.tgt_deg.push_back(2);
  d2.entries.push_back(std::vector<Poly>(d2.cols(), Poly(R)));
  d2.src_deg.push_back(2);
  for (std::size_t i = 0; i < d2.rows(); ++i) d2.entries[i].push_back(Poly(R));
  // column maps onto e_extra - e_0 - e_2 so that the composite vanishes
  d2.entries[3].back() = Poly::constant(R, 1);
  d2.entries[0].back() = Poly::constant(R, F.neg(1));
  d2.entries[2].back() = Poly::constant(R, F.neg(1));
  CHECK(is_complex(bad));
  auto m = minimalize(bad);
  CHECK(is_complex(m));
  CHECK(betti_table(m) == betti_table(res));
  CHECK(m.maps[0].cols() == 3);
}

TEST_CASE("Eagon-Northcott ranks of a 2x6 scroll") {
  Field F(12347);
  auto R = Ring::make(F, 7);
  Ideal I(R, rnc_minors(R, 6));
  auto res = resolve(I, 6);
  auto b = betti_table(res);
  std::vector<long long> expect{15, 40, 45, 24, 5};
  for (int i = 1; i <= 5; ++i) CHECK(b.get(i, i + 1) == expect[i - 1]);
  CHECK(b.get(6, 7) == 0);
  GradedQuotient A(I);
  CHECK(koszul_betti(A, 3, 4) == 45);
  CHECK(koszul_betti(A, 5, 6) == 5);
}

TEST_CASE("chain maps") {
  Field F(101);
  auto R = Ring::make(F, 4);
  Ideal I(R, rnc_minors(R, 3));
  auto res = resolve(I, 3);
  auto V = chain_map(res, res, FreeModuleMap::identity(R, {0}));
  REQUIRE(V.size() == 3);
  CHECK(V[1] == FreeModuleMap::identity(R, res.degrees(1)));
  CHECK(V[2] == FreeModuleMap::identity(R, res.degrees(2)));
  FreeModuleMap zero(R, {0}, {0});
  for (auto& v : chain_map(res, res, zero)) CHECK(v.is_zero());
  // inclusion (x0x2 - x1^2) into the twisted cubic ideal
  Ideal J(R, {rnc_minors(R, 3)[0]});
  auto rj = resolve(J, 2);
  auto W = chain_map(rj, res, FreeModuleMap::identity(R, {0}));
  for (std::size_t k = 1; k < W.size(); ++k)
    CHECK(compose(res.maps[k - 1], W[k]) == compose(W[k - 1], rj.maps[k - 1]));
}

TEST_CASE("wedge basis and section") {
  auto w = wedge_basis(4, 2);
  CHECK(w == std::vector<std::uint32_t>{3, 5, 9, 6, 10, 12});
  Field F(12347);
  auto R = Ring::make(F, 4);
  Ideal I(R, rnc_minors(R, 3));
  std::mt19937_64 rng(1);
  auto s = linear_section(I, 2, rng);
  auto h = hilbert(s.ideal);
  CHECK(h.krull_dim == 0);
  CHECK(h.degree == 3);
}
