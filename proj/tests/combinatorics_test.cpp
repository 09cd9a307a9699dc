#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "taylor/combinatorics.hpp"

using taylor::Word;

namespace {

// Brute force: every function from {0..n-1} onto {0..k-1} is an ordered
// partition with k blocks.
std::size_t count_ordered_by_functions(std::size_t n) {
  std::size_t total = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    std::size_t assignments = 1;
    for (std::size_t i = 0; i < n; ++i) assignments *= k;
    for (std::size_t code = 0; code < assignments; ++code) {
      std::vector<bool> hit(k, false);
      std::size_t c = code;
      for (std::size_t i = 0; i < n; ++i) {
        hit[c % k] = true;
        c /= k;
      }
      if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) ++total;
    }
  }
  return n == 0 ? 1 : total;
}

std::vector<int> range_set(int n) {
  std::vector<int> s;
  for (int i = 1; i <= n; ++i) s.push_back(i);
  return s;
}

}  // namespace

TEST(Word, WeightAndFactorial) {
  EXPECT_EQ(taylor::weight(Word::parse("0110")), 2U);
  EXPECT_EQ(taylor::weight(Word::parse("0000")), 0U);
  EXPECT_EQ(taylor::weight(Word::parse("111")), 3U);
  EXPECT_EQ(taylor::position_factorial(Word::parse("110")), 2);
  EXPECT_EQ(taylor::position_factorial(Word::parse("011")), 6);
  EXPECT_EQ(taylor::position_factorial(Word::parse("000")), 1);
  EXPECT_EQ(taylor::position_factorial(Word()), 1);
}

TEST(Word, ParseRoundTrip) {
  const Word w = Word::parse("0110");
  EXPECT_EQ(w.to_string(), "0110");
  EXPECT_FALSE(w.at(1));
  EXPECT_TRUE(w.at(2));
  EXPECT_EQ(w.bits(), 6U);
  EXPECT_EQ(Word::parse("10").concat(Word::parse("01")).to_string(), "1001");
  EXPECT_THROW(Word::parse("012"), taylor::DomainError);
}

TEST(Splits2, Examples) {
  auto s = taylor::splits2(Word::parse("00"));
  ASSERT_EQ(s.size(), 1U);
  EXPECT_EQ(s[0].first.to_string(), "00");

  s = taylor::splits2(Word::parse("10"));
  ASSERT_EQ(s.size(), 2U);
  EXPECT_EQ(s[0].first.to_string(), "00");
  EXPECT_EQ(s[0].second.to_string(), "10");
  EXPECT_EQ(s[1].first.to_string(), "10");
  EXPECT_EQ(s[1].second.to_string(), "00");

  s = taylor::splits2(Word::parse("11"));
  std::vector<std::pair<std::string, std::string>> got;
  for (auto& [a, b] : s) got.emplace_back(a.to_string(), b.to_string());
  const std::vector<std::pair<std::string, std::string>> want{
      {"00", "11"}, {"01", "10"}, {"10", "01"}, {"11", "00"}};
  EXPECT_EQ(got, want);
}

TEST(Splits2, ExhaustiveAgainstPairEnumeration) {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (std::uint64_t bits = 0; bits < (1U << n); ++bits) {
      const Word w(n, bits);
      std::set<std::pair<std::uint64_t, std::uint64_t>> oracle;
      for (std::uint64_t a = 0; a < (1U << n); ++a) {
        for (std::uint64_t b = 0; b < (1U << n); ++b) {
          if ((a & b) == 0 && (a | b) == bits) oracle.emplace(a, b);
        }
      }
      std::set<std::pair<std::uint64_t, std::uint64_t>> got;
      for (auto& [a, b] : taylor::splits2(w)) got.emplace(a.bits(), b.bits());
      EXPECT_EQ(got, oracle);
      EXPECT_EQ(taylor::splits2(w).size(), std::size_t{1} << taylor::weight(w));
    }
  }
}

TEST(Partitions, OrderedExamples) {
  auto p = taylor::ordered_partitions({1, 2});
  ASSERT_EQ(p.size(), 3U);
  EXPECT_EQ(p[0], (std::vector<taylor::Block>{{1, 2}}));
  EXPECT_EQ(p[1], (std::vector<taylor::Block>{{1}, {2}}));
  EXPECT_EQ(p[2], (std::vector<taylor::Block>{{2}, {1}}));
  EXPECT_EQ(taylor::ordered_partitions({1}).size(), 1U);
  EXPECT_EQ(taylor::ordered_partitions({1, 2, 3}).size(), 13U);
  auto empty = taylor::ordered_partitions({});
  ASSERT_EQ(empty.size(), 1U);
  EXPECT_TRUE(empty[0].empty());
}

TEST(Partitions, OrderedCountsMatchSurjections) {
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(taylor::ordered_partitions(range_set(n)).size(), count_ordered_by_functions(n)) << n;
  }
}

TEST(Partitions, BellNumbers) {
  const std::vector<std::size_t> bell{1, 1, 2, 5, 15, 52, 203, 877, 4140};
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(taylor::unordered_partitions(range_set(n)).size(), bell[n]);
  auto p = taylor::unordered_partitions({1, 2});
  ASSERT_EQ(p.size(), 2U);
}

TEST(Partitions, UnorderedAreDistinctAndCovering) {
  const auto parts = taylor::unordered_partitions(range_set(5));
  std::set<std::set<std::vector<int>>> seen;
  for (const auto& partition : parts) {
    std::vector<int> all;
    for (const auto& b : partition) {
      EXPECT_FALSE(b.empty());
      all.insert(all.end(), b.begin(), b.end());
    }
    std::sort(all.begin(), all.end());
    EXPECT_EQ(all, range_set(5));
    seen.emplace(partition.begin(), partition.end());
  }
  EXPECT_EQ(seen.size(), parts.size());
}

TEST(Partitions, OrderedIsKFactorialFoldUnordered) {
  const auto ordered = taylor::ordered_partitions(range_set(5));
  std::map<std::set<std::vector<int>>, std::size_t> classes;
  for (const auto& p : ordered) ++classes[std::set<std::vector<int>>(p.begin(), p.end())];
  for (const auto& [cls, count] : classes) {
    EXPECT_EQ(taylor::BigInt(count), taylor::factorial(cls.size()));
  }
  EXPECT_EQ(classes.size(), 52U);
}

TEST(Partitions, BlockSizeCountsAreMultinomials) {
  for (int n = 1; n <= 7; ++n) {
    std::map<std::vector<std::size_t>, std::size_t> by_sizes;
    for (const auto& p : taylor::ordered_partitions(range_set(n))) {
      std::vector<std::size_t> sizes;
      for (const auto& b : p) sizes.push_back(b.size());
      ++by_sizes[sizes];
    }
    for (const auto& [sizes, count] : by_sizes) {
      EXPECT_EQ(taylor::BigInt(count), taylor::multinomial(n, sizes));
    }
  }
}

TEST(Compositions, Examples) {
  using V = std::vector<std::vector<std::size_t>>;
  EXPECT_EQ(taylor::compositions(1), (V{{1}}));
  EXPECT_EQ(taylor::compositions(2), (V{{2}, {1, 1}}));
  EXPECT_EQ(taylor::compositions(3), (V{{3}, {1, 2}, {2, 1}, {1, 1, 1}}));
  EXPECT_TRUE(taylor::compositions(0).empty());
  for (std::size_t n = 1; n <= 10; ++n) EXPECT_EQ(taylor::compositions(n).size(), std::size_t{1} << (n - 1));
}

TEST(Multinomial, Examples) {
  EXPECT_EQ(taylor::multinomial(3, {1, 2}), 3);
  EXPECT_EQ(taylor::multinomial(5, {5}), 1);
  EXPECT_THROW(taylor::multinomial(3, {1, 1}), taylor::DomainError);
  // Ordered (2,2) splits of {1,2,3,4}: choose the first block.
  std::size_t count = 0;
  for (unsigned mask = 0; mask < 16; ++mask) {
    if (__builtin_popcount(mask) == 2) ++count;
  }
  EXPECT_EQ(taylor::multinomial(4, {2, 2}), taylor::BigInt(count));
  EXPECT_EQ(taylor::factorial(20), taylor::BigInt("2432902008176640000"));
  EXPECT_EQ(taylor::factorial(25).get_str(), "15511210043330985984000000");
}
