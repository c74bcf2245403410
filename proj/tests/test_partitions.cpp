#include <doctest.h>

#include "oracles/oracles.hpp"
#include "plethysm/errors.hpp"
#include "plethysm/partition.hpp"

using namespace plethysm;

TEST_CASE("construction validates parts") {
  CHECK_THROWS_AS(Partition({2, 3}), UsageError);
  CHECK_THROWS_AS(Partition({0, 2}), UsageError);
  CHECK(Partition({2, 0}) == Partition{2});
  CHECK(Partition::from_unsorted({1, 0, 3, 2}) == Partition{3, 2, 1});
  CHECK(Partition{}.size() == 0);
  CHECK(Partition{4, 2, 2}.size() == 8);
  CHECK(Partition{1, 1, 1}.is_column());
  CHECK_FALSE(Partition{}.is_column());
  CHECK_FALSE(Partition{2}.is_column());
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(conjugate(Partition{2, 2}) == Partition{2, 2});
  for (int n = 0; n <= 12; ++n)
    for (const auto& p : enumerate_partitions(n)) {
      CHECK(conjugate(conjugate(p)) == p);
      CHECK(conjugate(p).size() == n);
    }
}

TEST_CASE("union, sum and repeat") {
  CHECK(union_parts(Partition{2, 2}, Partition{3, 1}) == Partition{3, 2, 2, 1});
  CHECK(union_parts(Partition{3, 1}, Partition{}) == Partition{3, 1});
  CHECK(union_parts(Partition{1}, Partition{1}) == Partition{1, 1});
  CHECK(add_parts(Partition{2, 2}, Partition{1}) == Partition{3, 2});
  CHECK(add_parts(Partition{4, 2}, Partition{2, 2}) == Partition{6, 4});
  CHECK(add_parts(Partition{3, 1}, Partition{}) == Partition{3, 1});
  CHECK(repeat(Partition{2, 1}, 2) == Partition{2, 2, 1, 1});
  CHECK(repeat(Partition{3}, 3) == Partition{3, 3, 3});
  CHECK(repeat(Partition{4, 1}, 1) == Partition{4, 1});
  CHECK_THROWS_AS(repeat(Partition{1}, 0), UsageError);
  CHECK(column(3) == Partition{1, 1, 1});

  // Union and sum are exchanged by conjugation.
  for (const auto& a : enumerate_partitions(5))
    for (const auto& b : enumerate_partitions(4))
      CHECK(conjugate(union_parts(a, b)) == add_parts(conjugate(a), conjugate(b)));
}

TEST_CASE("enumeration") {
  CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});
  CHECK(enumerate_partitions(4).size() == 5);
  CHECK(enumerate_partitions(10).size() == 42);
  auto four = enumerate_partitions(4);
  CHECK(four.front() == Partition{4});
  CHECK(four.back() == Partition{1, 1, 1, 1});
  CHECK_THROWS_AS(enumerate_partitions(-1), UsageError);
  CHECK_THROWS_AS(enumerate_partitions(41), ResourceError);
  CHECK(enumerate_partitions(41, 50).size() == 44583);

  for (int n = 0; n <= 15; ++n) {
    auto ours = enumerate_partitions(n);
    auto theirs = oracle::partitions(n);
    REQUIRE(ours.size() == theirs.size());
    for (std::size_t i = 0; i < ours.size(); ++i) CHECK(ours[i].parts() == theirs[i]);
    for (std::size_t i = 1; i < ours.size(); ++i) CHECK(RevLex{}(ours[i - 1], ours[i]));
  }
}

TEST_CASE("hook lengths and centralizers") {
  CHECK(num_standard_tableaux(Partition{5}) == 1);
  CHECK(num_standard_tableaux(Partition{2, 1}) == 2);
  CHECK(num_standard_tableaux(Partition{3, 2}) == 5);
  CHECK(z_of(Partition{2, 1}) == 2);
  CHECK(z_of(Partition{1, 1, 1}) == 6);
  CHECK(z_of(Partition{2, 2}) == 8);

  for (int n = 1; n <= 10; ++n) {
    Integer sum_sq = 0;
    Rational class_sum = 0;
    for (const auto& p : enumerate_partitions(n)) {
      Integer f = num_standard_tableaux(p);
      CHECK(f == oracle::standard_tableaux(p.parts()));
      sum_sq += f * f;
      class_sum += Rational(1) / Rational(z_of(p));
    }
    CHECK(sum_sq == factorial(n));
    CHECK(class_sum == 1);
  }
}

TEST_CASE("parsing and printing") {
  CHECK(parse_partition("3,2,1") == Partition{3, 2, 1});
  CHECK(parse_partition("4,1") == Partition{4, 1});
  CHECK_THROWS_AS(parse_partition("4, 1"), UsageError);
  for (const char* empty : {"", "--", "()", "[]"}) CHECK(parse_partition(empty) == Partition{});
  CHECK_THROWS_AS(parse_partition("2,x"), UsageError);
  CHECK_THROWS_AS(parse_partition("1,2"), UsageError);
  CHECK_THROWS_AS(parse_partition("2,,1"), UsageError);
  CHECK(Partition{3, 2, 1}.to_string() == "3,2,1");
  CHECK(Partition{}.to_string() == "");
  for (const auto& p : enumerate_partitions(8)) CHECK(parse_partition(p.to_string()) == p);
}

TEST_CASE("binomials") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(3, 5) == 0);
}
