#include <doctest.h>

#include <algorithm>

#include "permgrowth/errors.hpp"
#include "permgrowth/peaks.hpp"
#include "test_support.hpp"

using namespace permgrowth;
using namespace permgrowth::testing;

namespace {

PeakSet word_peaks(const WordSpec& spec, int n) {
  return PeakSet::from_position_set(
      word_to_set(word_prefix(spec, static_cast<std::size_t>(n - 1))));
}

}  // namespace

TEST_SUITE("peaks") {

TEST_CASE("PeakSet parsing and validation") {
  CHECK(PeakSet::parse_csv("2,5,9").positions() == std::vector<int>{2, 5, 9});
  CHECK(PeakSet::parse_csv("9,2,5").positions() == std::vector<int>{2, 5, 9});
  CHECK(PeakSet::parse_csv("").empty());
  CHECK_THROWS_AS(PeakSet::parse_csv("1,4"), std::invalid_argument);
  CHECK_THROWS_AS(PeakSet::parse_csv("2,x"), std::invalid_argument);
  CHECK_THROWS_AS(PeakSet({3, 3}), std::invalid_argument);
}

TEST_CASE("admissibility") {
  CHECK_FALSE(is_admissible(PeakSet({2, 3}), 6));
  CHECK(is_admissible(PeakSet(), 5));
  CHECK(is_admissible(PeakSet({2, 5}), 6));
  CHECK_FALSE(is_admissible(PeakSet({2, 5}), 5));  // 5 > n-1
  CHECK_FALSE(is_admissible(PeakSet({6}), 6));
}

TEST_CASE("maximal alternating partition") {
  const PeakSet s({3, 6, 9, 12, 14, 16, 19, 21, 24, 27, 29, 31, 34, 36});
  const AlternatingPartition p = maximal_alternating_partition(s);
  REQUIRE(p.blocks.size() == 8);
  CHECK(p.blocks[0].positions() == std::vector<int>{3});
  CHECK(p.blocks[1].positions() == std::vector<int>{6});
  CHECK(p.blocks[2].positions() == std::vector<int>{9});
  CHECK(p.blocks[3].positions() == std::vector<int>{12, 14, 16});
  CHECK(p.blocks[4].positions() == std::vector<int>{19, 21});
  CHECK(p.blocks[5].positions() == std::vector<int>{24});
  CHECK(p.blocks[6].positions() == std::vector<int>{27, 29, 31});
  CHECK(p.blocks[7].positions() == std::vector<int>{34, 36});

  CHECK(maximal_alternating_partition(PeakSet()).blocks.empty());
  const AlternatingPartition single = maximal_alternating_partition(PeakSet({2, 4, 6}));
  REQUIRE(single.blocks.size() == 1);
  CHECK(single.blocks[0].positions() == std::vector<int>{2, 4, 6});
}

TEST_CASE("count_Q") {
  CHECK(count_Q(PeakSet({2}), 4) == 8);
  CHECK(count_Q(PeakSet({3}), 5) == 40);
  for (int n = 1; n <= 8; ++n)
    CHECK(count_Q(PeakSet(), n) == factorial(static_cast<unsigned long>(n)));
  CHECK_THROWS_AS(count_Q(PeakSet({2, 3}), 7), std::invalid_argument);
  CHECK_THROWS_AS(count_Q(PeakSet({2, 5}), 5), std::invalid_argument);
}

TEST_CASE("admissible_supersets") {
  const auto only = admissible_supersets(PeakSet({3}), 5);
  REQUIRE(only.size() == 1);
  CHECK(only[0] == PeakSet({3}));

  auto of_empty = admissible_supersets(PeakSet(), 4);
  std::sort(of_empty.begin(), of_empty.end());
  REQUIRE(of_empty.size() == 3);
  CHECK(of_empty[0] == PeakSet());
  CHECK(of_empty[1] == PeakSet({2}));
  CHECK(of_empty[2] == PeakSet({3}));

  const auto pinned = admissible_supersets(PeakSet({2, 5}), 6);
  REQUIRE(pinned.size() == 1);
  CHECK(pinned[0] == PeakSet({2, 5}));

  CHECK_THROWS_AS(admissible_supersets(PeakSet(), 40, 100), resource_limit_error);
}

TEST_CASE("count_peak_ie basics") {
  CHECK(count_peak_ie(PeakSet({3}), 5) == 40);
  CHECK(count_peak_ie(PeakSet(), 4) == 8);
  CHECK(count_peak_ie(PeakSet({2, 3}), 6) == 0);
}

TEST_CASE("count_peak_closed") {
  CHECK(*count_peak_closed(PeakSet({2}), 4) == 8);
  CHECK(*count_peak_closed(PeakSet({2, 5}), 6) == 80);
  CHECK_FALSE(count_peak_closed(PeakSet({3}), 5).has_value());
  CHECK_THROWS_AS(count_peak_closed(PeakSet({2}), 3), std::invalid_argument);
}

TEST_CASE("count_peak_split") {
  CHECK(count_peak_split(PeakSet({2, 5}), 8) == 2688);
  CHECK(count_peak_split(PeakSet({3}), 5) == 40);
  for (int n = 1; n <= 10; ++n) {
    Count pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
    CHECK(count_peak_split(PeakSet(), n) == pow2);
  }
}

TEST_CASE("brute force oracle") {
  CHECK(brute_force_peak(PeakSet(), 3) == 4);
  CHECK(brute_force_peak(PeakSet({2}), 3) == 2);
  CHECK(brute_force_peak(PeakSet({2, 3}), 5) == 0);
  CHECK_THROWS_AS(brute_force_peak(PeakSet(), 12), resource_limit_error);
}

TEST_CASE("triple agreement, partition, Q-consistency for n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    const auto hist = peak_histogram(n);
    const auto all = admissible_supersets(PeakSet(), n);
    Count total = 0;
    for (const PeakSet& s : all) {
      const Count ie = count_peak_ie(s, n);
      REQUIRE(ie == count_peak_split(s, n));
      const auto it = hist.find(s.positions());
      REQUIRE(ie == Count(it == hist.end() ? 0 : it->second));
      total += ie;

      Count q_sum = 0;
      for (const PeakSet& t : admissible_supersets(s, n)) q_sum += count_peak_ie(t, n);
      REQUIRE(q_sum == count_Q(s, n));
    }
    REQUIRE(total == factorial(static_cast<unsigned long>(n)));
  }
}

TEST_CASE("closed forms match brute force for 4 <= n <= 9") {
  for (int n = 4; n <= 9; ++n) {
    CHECK(*count_peak_closed(PeakSet({2}), n) == brute_force_peak(PeakSet({2}), n));
    const PeakSet edge({2, n - 1});
    CHECK(*count_peak_closed(edge, n) == brute_force_peak(edge, n));
  }
}

TEST_CASE("periodic product formula: pinned values") {
  CHECK(count_peak_periodic(2, 2, 9) == 13440);
  CHECK(count_peak_periodic(2, 2, 16) == Count("44281036800"));
  CHECK(count_peak_periodic(2, 2, 7) ==
        brute_force_peak(word_peaks(periodic_peak_word(2, 2), 7), 7));
  CHECK_THROWS_AS(count_peak_periodic(1, 2, 10), std::invalid_argument);
  CHECK_THROWS_AS(count_peak_periodic(2, 2, 6), std::invalid_argument);
}

TEST_CASE("periodic product formula equals inclusion-exclusion") {
  struct Range {
    long a, b;
    int lo, hi;
  };
  // (3,2) up to 40 exercises every residual case including the merged
  // two-letter tails and the r' = 5 chain residual
  const Range ranges[] = {{2, 2, 7, 30}, {3, 2, 10, 40}, {3, 3, 10, 40}, {2, 5, 7, 30}};
  for (const Range& r : ranges) {
    const WordSpec w = periodic_peak_word(r.a, r.b);
    for (int n = r.lo; n <= r.hi; ++n)
      REQUIRE(count_peak_periodic(r.a, r.b, n) == count_peak_ie(word_peaks(w, n), n));
  }
}

TEST_CASE("periodic peak word spelling") {
  CHECK(periodic_peak_word(2, 2).str() == "[0100100100]");
  CHECK(periodic_peak_word(3, 4).str() == "[010010010010000]");
}

}  // TEST_SUITE
