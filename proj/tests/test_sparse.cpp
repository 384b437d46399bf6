#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "extell/sparse.hpp"

using namespace extell;

namespace {

std::uint64_t rng_state = 42;
std::uint64_t next_u64() {
  std::uint64_t z = (rng_state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SparseMatrix random_matrix(int rows, int cols, int fill_percent) {
  SparseMatrix a;
  a.rows = rows;
  a.cols = cols;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (next_u64() % 100 < static_cast<std::uint64_t>(fill_percent))
        a.add(r, c, static_cast<std::int64_t>(next_u64() % 7) - 3);
  return a;
}

}  // namespace

TEST_CASE("rank of trivial matrices") {
  SparseMatrix z;
  z.rows = 5;
  z.cols = 7;
  CHECK(rank(z).rank == 0);

  SparseMatrix id;
  id.rows = id.cols = 6;
  for (int i = 0; i < 6; ++i) id.add(i, i, 1);
  CHECK(rank(id).rank == 6);
  CHECK(rank_exact(id) == 6);

  // identity-pattern with repeated rows
  SparseMatrix a;
  a.rows = 4;
  a.cols = 3;
  a.add(0, 0, 2);
  a.add(1, 1, -1);
  a.add(2, 0, 4);  // multiple of row 0
  a.add(3, 2, 5);
  CHECK(rank(a).rank == 3);
}

TEST_CASE("modular and exact ranks agree on random matrices") {
  for (int trial = 0; trial < 30; ++trial) {
    SparseMatrix a = random_matrix(12 + trial % 9, 10 + trial % 7, 25);
    RankOptions opts;
    opts.seed = trial + 1;
    int rm = rank(a, opts).rank;
    int re = rank_exact(a);
    CHECK(rm == re);
    // a second pair of primes gives the same answer
    opts.seed = 1000 + trial;
    CHECK(rank(a, opts).rank == re);
  }
}

TEST_CASE("rank result carries two prime witnesses") {
  SparseMatrix a = random_matrix(8, 8, 40);
  RankOptions opts;
  opts.seed = 7;
  RankResult r = rank(a, opts);
  REQUIRE(r.primes.size() >= 2);
  CHECK(r.primes[0] != r.primes[1]);
  for (auto p : r.primes) CHECK(p >= (1ull << 31));
}

TEST_CASE("exact elimination handles rank-deficient integer matrices") {
  // rows 0+1 = row 2
  SparseMatrix a;
  a.rows = 3;
  a.cols = 4;
  std::int64_t r0[] = {1, 2, 0, -1};
  std::int64_t r1[] = {3, 0, 5, 2};
  for (int c = 0; c < 4; ++c) {
    a.add(0, c, r0[c]);
    a.add(1, c, r1[c]);
    a.add(2, c, r0[c] + r1[c]);
  }
  CHECK(rank_exact(a) == 2);
  CHECK(rank(a).rank == 2);
}

TEST_CASE("extends_rank distinguishes image membership") {
  SparseMatrix a;
  a.rows = 3;
  a.cols = 2;
  a.add(0, 0, 1);
  a.add(1, 1, 1);
  CHECK(!extends_rank(a, {{0, 2}}));          // in the column span
  CHECK(extends_rank(a, {{2, 1}}));           // new direction
  CHECK(!extends_rank(a, {{0, 1}, {1, -4}}));  // still in the span
}

TEST_CASE("transpose and product") {
  SparseMatrix a;
  a.rows = 2;
  a.cols = 3;
  a.add(0, 1, 2);
  a.add(1, 2, -1);
  SparseMatrix at = a.transposed();
  CHECK(at.rows == 3);
  CHECK(at.cols == 2);
  SparseMatrix p = SparseMatrix::product(a, at);
  CHECK(p.rows == 2);
  CHECK(p.cols == 2);
  // A A^T = diag(4, 1)
  CHECK(p.entries.size() == 2);
  CHECK(rank(p).rank == 2);
}

TEST_CASE("random_prime31 produces distinct 32-bit primes") {
  std::uint64_t state = 99;
  auto p1 = random_prime31(state);
  auto p2 = random_prime31(state);
  CHECK(p1 != p2);
  CHECK(p1 >= (1ull << 31));
  CHECK(p1 < (1ull << 32));
}
