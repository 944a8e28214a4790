#include <random>
#include <set>

#include "doctest.h"
#include "segrev/gf2.hpp"

using namespace segrev;

TEST_CASE("rank basics") {
  CHECK(rank(BinMatrix::identity(2)) == 2);
  CHECK(rank(BinMatrix(3, 3)) == 0);
  BinMatrix m(2, 2);
  m.set(0, 0, true);
  m.set(0, 1, true);
  m.set(1, 0, true);
  m.set(1, 1, true);
  CHECK(rank(m) == 1);
}

TEST_CASE("rank equals rank of transpose") {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    BinMatrix m(3 + rng() % 4, 3 + rng() % 5);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m.set(i, j, rng() & 1);
    CHECK(rank(m) == rank(m.transposed()));
  }
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(BinMatrix::identity(2)).empty());

  BinMatrix parity(1, 2);
  parity.set(0, 0, true);
  parity.set(0, 1, true);
  auto kb = kernel_basis(parity);
  REQUIRE(kb.size() == 1);
  CHECK(kb[0] == BinVector::from_bits({1, 1}));

  // 2x4 [[1,0,1,0],[0,1,0,1]]: expectations frozen from exhaustive check of
  // all 16 vectors (exactly 4 are annihilated, spanned by 2 basis vectors)
  BinMatrix m(2, 4);
  m.set(0, 0, true);
  m.set(0, 2, true);
  m.set(1, 1, true);
  m.set(1, 3, true);
  auto basis = kernel_basis(m);
  REQUIRE(basis.size() == 2);
  std::set<std::uint64_t> span{0};
  for (const auto& b : basis) {
    CHECK(m.apply(b).is_zero());
    for (auto s : std::set<std::uint64_t>(span)) span.insert(s ^ b.low_word());
  }
  int annihilated = 0;
  for (std::uint64_t x = 0; x < 16; ++x) {
    BinVector v(4, x);
    if (m.apply(v).is_zero()) {
      ++annihilated;
      CHECK(span.count(x) == 1);
    }
  }
  CHECK(annihilated == 4);
}

TEST_CASE("rank-nullity over random matrices") {
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    BinMatrix m(1 + rng() % 6, 1 + rng() % 8);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m.set(i, j, rng() & 1);
    CHECK(rank(m) + kernel_basis(m).size() == m.cols());
  }
}

TEST_CASE("subspace enumeration counts match the Gaussian binomial") {
  CHECK(gaussian_binomial(2, 1) == 3);
  CHECK(gaussian_binomial(6, 3) == 1395);
  CHECK(gaussian_binomial(8, 4) == 200787);

  for (auto [n, k] : {std::pair{2, 1}, {4, 2}, {6, 3}}) {
    std::set<BinMatrix> seen;
    enumerate_k_subspaces(n, k, [&](const BinMatrix& m) {
      CHECK(m.rref() == m);  // canonical form is a fixed point
      CHECK(seen.insert(m).second);
    });
    CHECK(seen.size() == gaussian_binomial(n, k));
  }
}

TEST_CASE("vector addition is an involution") {
  std::mt19937 rng(3);
  for (int t = 0; t < 100; ++t) {
    std::size_t len = 1 + rng() % 100;
    BinVector x(len), y(len);
    for (std::size_t i = 0; i < len; ++i) {
      x.set(i, rng() & 1);
      y.set(i, rng() & 1);
    }
    CHECK(((x ^ y) ^ y) == x);
  }
}

TEST_CASE("inverse and determinant") {
  std::mt19937 rng(5);
  int invertible = 0;
  for (int t = 0; t < 100; ++t) {
    BinMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m.set(i, j, rng() & 1);
    if (det(m)) {
      ++invertible;
      CHECK(m * m.inverse() == BinMatrix::identity(4));
    }
  }
  CHECK(invertible > 10);
}
