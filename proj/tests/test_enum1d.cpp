#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "riviera/core1d.hpp"
#include "riviera/enum1d.hpp"
#include "riviera/error.hpp"

using namespace riviera;

namespace {

std::vector<std::string> strings(const std::vector<Configuration1D>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) out.push_back(c.str());
  return out;
}

std::vector<long> as_longs(const std::vector<mpz_class>& v, std::size_t from = 0) {
  std::vector<long> out;
  for (std::size_t i = from; i < v.size(); ++i) out.push_back(v[i].get_si());
  return out;
}

bool in_family(const Configuration1D& c, Family family) {
  const auto f = classify_1d(c);
  switch (family) {
    case Family::riviera: return f.jammed;
    case Family::predator: return f.p_resistant;
    case Family::altruist: return f.a_resistant;
    case Family::es: return f.es;
    case Family::flory: break;
  }
  const auto& s = c.str();
  if (s.find("11") != std::string::npos) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') continue;
    const bool west_free = i == 0 || s[i - 1] == '0';
    const bool east_free = i + 1 == s.size() || s[i + 1] == '0';
    if (west_free && east_free) return false;
  }
  return true;
}

}  // namespace

TEST(Enumerate1D, Examples) {
  EXPECT_EQ(strings(enumerate_1d(3, Family::predator)), (std::vector<std::string>{"101"}));
  EXPECT_TRUE(enumerate_1d(3, Family::es).empty());
  EXPECT_EQ(strings(enumerate_1d(4, Family::es)), (std::vector<std::string>{"1011", "1101"}));
  EXPECT_EQ(strings(enumerate_1d(3, Family::riviera)), (std::vector<std::string>{"011", "101", "110"}));
  EXPECT_EQ(strings(enumerate_1d(0, Family::es)), (std::vector<std::string>{""}));
}

TEST(Enumerate1D, MaskKernelMatchesSemanticPredicates) {
  for (Family family : kAllFamilies) {
    for (int n = 0; n <= 14; ++n) {
      std::vector<std::string> expected;
      for (unsigned mask = 0; mask < (1U << n); ++mask) {
        std::string s;
        for (int i = n - 1; i >= 0; --i) s.push_back(((mask >> i) & 1U) ? '1' : '0');
        if (in_family(Configuration1D::parse(s), family)) expected.push_back(s);
      }
      ASSERT_EQ(strings(enumerate_1d(n, family)), expected) << to_string(family) << " n=" << n;
    }
  }
}

TEST(Enumerate1D, OutputIsSorted) {
  const auto all = strings(enumerate_1d(16, Family::riviera));
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
}

TEST(Enumerate1D, CapExceeded) {
  EnumCaps caps;
  caps.max_length_1d = 10;
  try {
    enumerate_1d(11, Family::predator, caps);
    FAIL() << "expected CapExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
  EXPECT_NO_THROW(count_table_brute(10, Family::predator, caps));
  EXPECT_THROW(count_table_brute(11, Family::predator, caps), Error);
}

TEST(CountTableBrute, Entries) {
  EXPECT_EQ(count_table_brute(11, Family::predator).at(11, 7), 10);
  EXPECT_EQ(count_table_brute(5, Family::es).at(5, 4), 1);
  const auto riviera = count_table_brute(3, Family::riviera).length_totals();
  EXPECT_EQ(riviera[3], 3);
}

TEST(CountTableBrute, ZeroIsNeverStored) {
  const auto table = count_table_brute(16, Family::altruist);
  for (const auto& [key, value] : table.entries()) EXPECT_GT(value, 0);
}

TEST(Totals, PredatorLengthAxis) {
  // n = 0..8 (the n = 0 term is the empty strip).
  const auto t = totals(count_table_brute(8, Family::predator), Axis::length, 8);
  EXPECT_EQ(as_longs(t), (std::vector<long>{1, 1, 1, 1, 2, 2, 3, 4, 5}));
}

TEST(Totals, PredatorOccupancyAxisIsFibonacci) {
  const auto t = totals(count_table_brute(11, Family::predator), Axis::occupancy, 5);
  EXPECT_EQ(as_longs(t, 1), (std::vector<long>{1, 2, 3, 5, 8}));
}

TEST(Totals, EsLengthAxis) {
  const auto t = totals(count_table_brute(6, Family::es), Axis::length, 6);
  EXPECT_EQ(as_longs(t, 1), (std::vector<long>{1, 1, 0, 2, 1, 1}));
}

TEST(Totals, OccupancyNeedsLongEnoughTable) {
  const auto table = count_table_brute(8, Family::predator);
  EXPECT_NO_THROW(totals(table, Axis::occupancy, 3));
  try {
    totals(table, Axis::occupancy, 4);
    FAIL() << "expected InsufficientTable";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InsufficientTable);
  }
}

TEST(Families, NestAtTheCountLevel) {
  const int n_max = 18;
  const auto r = count_table_brute(n_max, Family::riviera);
  const auto p = count_table_brute(n_max, Family::predator);
  const auto a = count_table_brute(n_max, Family::altruist);
  const auto es = count_table_brute(n_max, Family::es);
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      const mpz_class lo = std::min(p.at(n, k), a.at(n, k));
      const mpz_class hi = std::max(p.at(n, k), a.at(n, k));
      ASSERT_LE(es.at(n, k), lo) << n << "," << k;
      ASSERT_LE(hi, r.at(n, k)) << n << "," << k;
    }
  }
}

TEST(Families, PredatorSupport) {
  const auto table = count_table_brute(20, Family::predator);
  for (const auto& [key, value] : table.entries()) {
    const auto [n, k] = key;
    if (n == 0) continue;
    EXPECT_GE(2 * k - n - 1, 0) << n << "," << k;
    EXPECT_GE(n - k + 1, 2 * k - n - 1) << n << "," << k;
  }
}

TEST(Families, FloryAndPredatorShareThePadovanRecurrence) {
  const auto p = count_table_brute(24, Family::predator).length_totals();
  const auto f = count_table_brute(24, Family::flory).length_totals();
  for (int n = 6; n <= 24; ++n) {
    EXPECT_EQ(p[n], p[n - 2] + p[n - 3]) << n;
    EXPECT_EQ(f[n], f[n - 2] + f[n - 3]) << n;
  }
}

TEST(Families, FloryStripsAreComplementsOfPaddedPredatorStrips) {
  for (int n = 0; n <= 16; ++n) {
    for (const auto& c : enumerate_1d(n, Family::flory)) {
      std::string padded = "1";
      for (char ch : c.str()) padded.push_back(ch == '1' ? '0' : '1');
      padded.push_back('1');
      EXPECT_TRUE(classify_1d(Configuration1D::parse(padded)).p_resistant) << c.str();
    }
    EXPECT_EQ(enumerate_1d(n, Family::flory).size(), enumerate_1d(n + 2, Family::predator).size()) << n;
  }
}

TEST(Families, PredatorComplementsAvoid11And000) {
  for (int n = 1; n <= 18; ++n) {
    for (const auto& c : enumerate_1d(n, Family::predator)) {
      std::string neg;
      for (char ch : c.str()) neg.push_back(ch == '1' ? '0' : '1');
      ASSERT_EQ(neg.find("11"), std::string::npos) << neg;
      ASSERT_EQ(neg.find("000"), std::string::npos) << neg;
    }
  }
}

TEST(Families, EsLengthsMissOnlyThree) {
  const auto t = count_table_brute(22, Family::es).length_totals();
  for (int n = 1; n <= 22; ++n) {
    if (n == 3) {
      EXPECT_EQ(t[n], 0);
    } else {
      EXPECT_GT(t[n], 0) << n;
    }
  }
}
