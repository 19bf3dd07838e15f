#include "doctest.h"

#include "heisfock/errors.hpp"
#include "heisfock/oracle/oracle.hpp"
#include "heisfock/partition.hpp"
#include "heisfock/strips.hpp"

using namespace heisfock;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("construction rejects non-canonical input") {
  CHECK(kind_of([] { Partition({1, 2}); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { Partition({2, 0}); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { Partition({-1}); }) == ErrorKind::InvalidInput);
  CHECK(Partition::from_padded({3, 1, 0, 0}) == Partition{3, 1});
  CHECK(kind_of([] { Partition::from_padded({1, 3}); }) == ErrorKind::NotAPartition);
  CHECK(Partition{}.size() == 0);
  CHECK(Partition{4, 2, 2}.multiplicity(2) == 2);
  CHECK(Partition{3, 1}.to_string() == "(3,1)");
}

TEST_CASE("partitions_of is complete and descending") {
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) {
    const auto ps = partitions_of(n);
    CHECK(ps.size() == static_cast<std::size_t>(counts[n]));
    for (std::size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1] > ps[i]);
  }
  CHECK(partitions_of(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
}

TEST_CASE("content_sum examples") {
  CHECK(content_sum(Partition{2, 1}) == 0);
  CHECK(content_sum(Partition{3}) == 3);
  CHECK(content_sum(Partition{}) == 0);
}

TEST_CASE("d_stat examples") {
  CHECK(d_stat(Partition{5}) == 0);
  CHECK(d_stat(Partition{1, 1, 1}) == 3);
  CHECK(d_stat(Partition{3, 1}) == 1);
}

TEST_CASE("transpose examples") {
  CHECK(transpose(Partition{3, 1}) == Partition{2, 1, 1});
  CHECK(transpose(Partition{}) == Partition{});
  CHECK(transpose(Partition{1, 1, 1}) == Partition{3});
}

TEST_CASE("partwise_add examples") {
  CHECK(partwise_add(Partition{1, 1}, 3, Partition{1}) == Partition{4, 1});
  CHECK(partwise_add(Partition{3, 2}, 7, Partition{}) == Partition{3, 2});
  CHECK(partwise_add(Partition{1}, 2, Partition{1, 1}) == Partition{3, 2});
  CHECK(partwise_add(Partition{}, 3, Partition{2}) == Partition{6});
}

TEST_CASE("is_coprime examples") {
  CHECK(is_coprime(Partition{3, 3, 1}, 3));
  CHECK(oracle::coprime_by_search(Partition{3, 3, 1}, 3));
  for (int b = 1; b <= 5; ++b) CHECK_FALSE(is_coprime(Partition{b}, b));
  CHECK_FALSE(is_coprime(Partition{2, 1}, 1));
  CHECK(is_coprime(Partition{}, 1));
}

TEST_CASE("coprime_decompose examples") {
  CHECK(coprime_decompose(Partition{4, 1}, 3) == std::pair{Partition{1, 1}, Partition{1}});
  CHECK(coprime_decompose(Partition{3, 3, 1}, 3) == std::pair{Partition{3, 3, 1}, Partition{}});
  CHECK(coprime_decompose(Partition{3}, 3) == std::pair{Partition{}, Partition{1}});
  CHECK(coprime_decompose(Partition{}, 3) == std::pair{Partition{}, Partition{}});
  CHECK(coprime_decompose(Partition{2, 1}, 1) == std::pair{Partition{}, Partition{2, 1}});
}

TEST_CASE("transpose is an involution and negates contents") {
  for (int n = 0; n <= 20; ++n) {
    for (const Partition& eta : partitions_of(n)) {
      REQUIRE(transpose(transpose(eta)) == eta);
      if (n <= 14) CHECK(content_sum(transpose(eta)) == -content_sum(eta));
    }
  }
}

TEST_CASE("d_stat equals sum of binomials of column heights") {
  for (int n = 0; n <= 12; ++n) {
    for (const Partition& eta : partitions_of(n)) {
      long long expected = 0;
      const Partition columns = transpose(eta);
      for (int h : columns.parts()) expected += static_cast<long long>(h) * (h - 1) / 2;
      CHECK(d_stat(eta) == expected);
    }
  }
}

TEST_CASE("coprime_decompose is the unique exhaustive-search decomposition") {
  for (int b = 2; b <= 5; ++b) {
    for (int n = 0; n <= 12; ++n) {
      for (const Partition& eta : partitions_of(n)) {
        const auto [mu, tau] = coprime_decompose(eta, b);
        CHECK(partwise_add(mu, b, tau) == eta);
        CHECK(is_coprime(mu, b));
        CHECK(is_coprime(eta, b) == oracle::coprime_by_search(eta, b));
        const auto found = oracle::exhaustive_coprime_decompositions(eta, b);
        REQUIRE(found.size() == 1);
        CHECK(found.front() == std::pair{mu, tau});
      }
    }
  }
}

TEST_CASE("contains") {
  CHECK(contains(Partition{3, 2}, Partition{2, 2}));
  CHECK_FALSE(contains(Partition{3, 2}, Partition{1, 1, 1}));
  CHECK(contains(Partition{1}, Partition{}));
}

TEST_CASE("border strips") {
  // s_1 * p_2 = s_3 - s_111.
  const auto moves = add_border_strips(Partition{1}, 2);
  REQUIRE(moves.size() == 2);
  CHECK(moves[0].result == Partition{3});
  CHECK(moves[0].sign == 1);
  CHECK(moves[1].result == Partition{1, 1, 1});
  CHECK(moves[1].sign == -1);
  const auto removed = remove_border_strips(Partition{3, 1}, 2);
  REQUIRE(removed.size() == 1);
  CHECK(removed[0].result == Partition{1, 1});
  CHECK(removed[0].sign == 1);
  CHECK(add_horizontal_strips(Partition{1}, 2) == std::vector<Partition>{{3}, {2, 1}});
  for (int n = 1; n <= 8; ++n) {
    for (const Partition& mu : partitions_of(n)) {
      for (int k = 1; k <= 4; ++k) {
        for (const StripMove& m : add_border_strips(mu, k)) {
          bool back = false;
          for (const StripMove& r : remove_border_strips(m.result, k)) back = back || (r.result == mu && r.sign == m.sign);
          CHECK(back);
        }
      }
    }
  }
}
