#include <random>

#include "doctest.h"
#include "g11/matrix.hpp"
#include "oracles.hpp"

using namespace g11;

namespace {

Matrix random_matrix(const Field& F, std::size_t r, std::size_t c, std::mt19937_64& rng, std::size_t rank_cap = 0) {
  std::uniform_int_distribution<Scalar> d(0, F.prime() - 1);
  if (!rank_cap) {
    Matrix m(F, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
  }
  Matrix a(F, r, rank_cap), b(F, rank_cap, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < rank_cap; ++j) a(i, j) = d(rng);
  for (std::size_t i = 0; i < rank_cap; ++i)
    for (std::size_t j = 0; j < c; ++j) b(i, j) = d(rng);
  return a * b;
}

std::vector<std::vector<long long>> to_ll(const Matrix& m) {
  std::vector<std::vector<long long>> out(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

}  // namespace

TEST_CASE("rref small cases") {
  Field F7(7);
  auto r = rref(Matrix::identity(F7, 3));
  CHECK(r.reduced == Matrix::identity(F7, 3));
  CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});
  auto s = rref(Matrix::from_rows(F7, {{1, 2}, {2, 4}}));
  CHECK(s.reduced == Matrix::from_rows(F7, {{1, 2}, {0, 0}}));
  CHECK(s.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rank agrees with elimination oracle") {
  Field F(101);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    Matrix m = random_matrix(F, 20, 30, rng, t % 2 ? 0 : 5 + t / 2);
    auto r = rref(m);
    CHECK(r.pivots.size() == oracle::rank(to_ll(m), 101));
    CHECK(rank(m) == r.pivots.size());
    CHECK(rref(r.reduced).reduced == r.reduced);
  }
  CHECK(rank(Matrix(F, 4, 5)) == 0);
  CHECK(rank(Matrix::identity(F, 3)) == 3);
}

TEST_CASE("kernel basis") {
  Field F5(5);
  CHECK(kernel_basis(Matrix::identity(F5, 4)).cols() == 0);
  Matrix a = Matrix::from_rows(F5, {{1, 1, 0}});
  Matrix k = kernel_basis(a);
  CHECK(k.cols() == 2);
  CHECK((a * k).is_zero());
  Field F(12347);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    Matrix m = random_matrix(F, 15 + t, 25, rng, 3 + t);
    Matrix kb = kernel_basis(m);
    CHECK(kb.cols() + rank(m) == m.cols());
    CHECK((m * kb).is_zero());
  }
}

TEST_CASE("solve") {
  Field F7(7);
  auto r = solve(Matrix::from_rows(F7, {{2}}), Matrix::from_rows(F7, {{3}}));
  REQUIRE(r.ok());
  CHECK((*r.solution)(0, 0) == 5);
  Field F(12347);
  std::mt19937_64 rng(5);
  Matrix b = random_matrix(F, 6, 4, rng);
  auto id = solve(Matrix::identity(F, 6), b);
  REQUIRE(id.ok());
  CHECK(*id.solution == b);
  // span of dimension 30 inside GF(p)^200; a vector outside is rejected
  Matrix a = random_matrix(F, 200, 30, rng);
  Matrix x = random_matrix(F, 30, 2, rng);
  auto in = solve(a, a * x);
  REQUIRE(in.ok());
  CHECK(a * *in.solution == a * x);
  Matrix outside(F, 200, 1);
  Echelon e(F, 200);
  for (std::size_t j = 0; j < a.cols(); ++j) e.insert(a.column(j));
  for (std::size_t i = 0; i < 200; ++i) {
    std::vector<Scalar> u(200, 0);
    u[i] = 1;
    if (!e.contains(u)) {
      outside(i, 0) = 1;
      break;
    }
  }
  auto bad = solve(a, a * x.columns(0, 1) + outside);
  CHECK(!bad.ok());
  CHECK(bad.inconsistent_columns == std::vector<std::size_t>{0});
}

TEST_CASE("intersect spans") {
  Field F(101);
  std::mt19937_64 rng(11);
  Matrix a = random_matrix(F, 10, 4, rng), b = random_matrix(F, 10, 6, rng);
  CHECK(rank(a.hstack(b)) == 10);
  CHECK(intersect_spans(a, b).cols() == 0);
  CHECK(intersect_spans(a, a).cols() == 4);
  Matrix c = a.columns(0, 2).hstack(random_matrix(F, 10, 3, rng));
  Matrix i = intersect_spans(a, c);
  CHECK(i.cols() == 2);
  CHECK(solve(a, i).ok());
  CHECK(solve(c, i).ok());
}
