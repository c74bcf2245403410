#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles/oracles.hpp"
#include "plethysm/errors.hpp"
#include "plethysm/module_vector.hpp"
#include "plethysm/sparse_matrix.hpp"
#include "plethysm/tabloid.hpp"

using namespace plethysm;

namespace {

SparseRationalMatrix random_matrix(std::mt19937& rng, int rows, int cols, double density, int rank_hint = -1) {
  std::uniform_real_distribution<double> coin(0, 1);
  std::uniform_int_distribution<int> value(-4, 4), den(1, 3);
  std::vector<std::tuple<int, int, Rational>> entries;
  if (rank_hint < 0) {
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        if (coin(rng) < density) entries.emplace_back(r, c, make_rational(value(rng), den(rng)));
    return SparseRationalMatrix::from_triplets(rows, cols, std::move(entries));
  }
  // Product of rows x k and k x cols factors, so the rank is at most k.
  std::vector<std::vector<int>> a(rows, std::vector<int>(rank_hint)), b(rank_hint, std::vector<int>(cols));
  for (auto& row : a)
    for (int& x : row) x = coin(rng) < density ? value(rng) : 0;
  for (auto& row : b)
    for (int& x : row) x = coin(rng) < density ? value(rng) : 0;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      long s = 0;
      for (int k = 0; k < rank_hint; ++k) s += long(a[r][k]) * b[k][c];
      if (s) entries.emplace_back(r, c, make_rational(s));
    }
  return SparseRationalMatrix::from_triplets(rows, cols, std::move(entries));
}

std::vector<std::vector<mpq_class>> dense(const SparseRationalMatrix& m) {
  std::vector<std::vector<mpq_class>> out(m.rows(), std::vector<mpq_class>(m.cols()));
  for (int c = 0; c < m.cols(); ++c)
    for (const auto& [r, q] : m.column(c)) out[r][c] = q;
  return out;
}

SparseRationalMatrix transform(const SparseRationalMatrix& m, const std::vector<int>& row_perm,
                               const std::vector<int>& col_perm, const std::vector<Rational>& row_scale) {
  std::vector<std::tuple<int, int, Rational>> entries;
  for (int c = 0; c < m.cols(); ++c)
    for (const auto& [r, q] : m.column(c)) entries.emplace_back(row_perm[r], col_perm[c], q * row_scale[r]);
  return SparseRationalMatrix::from_triplets(m.rows(), m.cols(), std::move(entries));
}

}  // namespace

TEST_CASE("matrix construction") {
  auto m = SparseRationalMatrix::from_triplets(2, 2, {{0, 0, 1}, {0, 0, 2}, {1, 1, make_rational(1, 2)}, {1, 0, 0}});
  CHECK(m.nnz() == 2);
  CHECK(m.at(0, 0) == 3);
  CHECK(m.at(1, 0) == 0);
  CHECK(m.at(1, 1) == make_rational(1, 2));
  CHECK_THROWS_AS(SparseRationalMatrix::from_triplets(2, 2, {{2, 0, 1}}), UsageError);
  CHECK_THROWS_AS(SparseRationalMatrix(-1, 2), UsageError);
  CHECK(m.transpose().transpose() == m);

  std::string text = m.to_coordinate_list();
  CHECK(text.rfind("# 2 2 2\n", 0) == 0);
  CHECK(SparseRationalMatrix::from_coordinate_list(text) == m);
  CHECK_THROWS_AS(SparseRationalMatrix::from_coordinate_list("2 2 1"), UsageError);
}

TEST_CASE("rank basics") {
  CHECK(rank(SparseRationalMatrix(5, 4)) == 0);
  CHECK(rank(SparseRationalMatrix(0, 0)) == 0);
  for (int n : {1, 7, 40}) {
    CHECK(rank(SparseRationalMatrix::identity(n)) == static_cast<std::size_t>(n));
    CHECK(is_injective(SparseRationalMatrix::identity(n)));
  }
  CHECK_FALSE(is_injective(SparseRationalMatrix::from_triplets(2, 3, {{0, 0, 1}, {1, 1, 1}, {0, 2, 1}})));
  CHECK_FALSE(is_injective(SparseRationalMatrix(0, 1)));
  CHECK(is_injective(SparseRationalMatrix(3, 0)));
}

TEST_CASE("rank agrees with dense elimination") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 80; ++trial) {
    std::uniform_int_distribution<int> dim(1, 30);
    int rows = dim(rng), cols = dim(rng);
    int hint = trial % 2 ? std::uniform_int_distribution<int>(0, std::min(rows, cols))(rng) : -1;
    auto m = random_matrix(rng, rows, cols, 0.3, hint);
    std::size_t expected = oracle::dense_rank(dense(m));
    CHECK(rank(m) == expected);
    CHECK(rank(m, PivotOrder::LastRow) == expected);
    if (hint >= 0) CHECK(expected <= static_cast<std::size_t>(hint));
  }
}

TEST_CASE("rank invariants on random samples") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> dim(1, 60);
    int rows = dim(rng), cols = dim(rng);
    int hint = std::uniform_int_distribution<int>(0, std::min(rows, cols))(rng);
    auto m = random_matrix(rng, rows, cols, 0.15, trial % 3 ? hint : -1);
    std::size_t r = rank(m);
    CHECK(rank(m.transpose()) == r);
    CHECK(rank(m, PivotOrder::LastRow) == r);

    std::vector<int> rp(rows), cp(cols);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    std::vector<Rational> scale(rows);
    std::uniform_int_distribution<int> nz(1, 9);
    for (auto& s : scale) s = make_rational(nz(rng) * (nz(rng) % 2 ? 1 : -1), nz(rng));
    CHECK(rank(transform(m, rp, cp, scale)) == r);
  }
}

TEST_CASE("span rank") {
  using V = TabloidVector;
  std::vector<V> none;
  CHECK(span_rank(none) == 0);
  V a(Composition{1, 1});
  a.add(make_tabloid({{1}, {2}}), 1);
  a.add(make_tabloid({{2}, {1}}), -1);
  CHECK(span_rank(std::vector<V>{a, a}) == 1);
  V b = a;
  b *= make_rational(-3, 2);
  CHECK(span_rank(std::vector<V>{a, b}) == 1);
  V c(Composition{1, 1});
  c.add(make_tabloid({{1}, {2}}), 1);
  CHECK(span_rank(std::vector<V>{a, c}) == 2);
  V other(Composition{2});
  other.add(make_tabloid({{1, 2}}), 1);
  CHECK_THROWS_AS(span_rank(std::vector<V>{a, other}), UsageError);
}

TEST_CASE("ranks of Foulkes-Howe matrices") {
  auto f23 = fh_map_matrix(Partition{2}, Partition{3});
  CHECK(f23.rows() == 15);
  CHECK(f23.cols() == 10);
  CHECK(rank(f23) == 10);
  CHECK(rank(f23, PivotOrder::LastRow) == 10);
  CHECK(oracle::dense_rank(dense(f23)) == 10);
  auto f22 = fh_map_matrix(Partition{2}, Partition{2});
  CHECK(rank(f22) == 3);
  CHECK(is_injective(f22));
}
