#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "riviera/family.hpp"

namespace riviera {

/// Sparse table of exact counts J_{k,n}: entries[(n, k)] for lengths up
/// to max_length. Absent keys mean zero; zero is never stored.
class CountTable {
 public:
  using Key = std::pair<int, int>;  // (n, k)

  CountTable(Family family, int max_length) : family_(family), max_length_(max_length) {}

  Family family() const noexcept { return family_; }
  int max_length() const noexcept { return max_length_; }

  mpz_class at(int n, int k) const;
  void set(int n, int k, const mpz_class& value);
  void add(int n, int k, const mpz_class& value);

  const std::map<Key, mpz_class>& entries() const& noexcept { return entries_; }
  const std::map<Key, mpz_class>& entries() && = delete;

  /// Row totals over k for n = 0..max_length.
  std::vector<mpz_class> length_totals() const;

  friend bool operator==(const CountTable& a, const CountTable& b) {
    return a.max_length_ == b.max_length_ && a.entries_ == b.entries_;
  }

 private:
  Family family_;
  int max_length_;
  std::map<Key, mpz_class> entries_;
};

enum class Axis { length, occupancy };

/// Totals along an axis. For the occupancy axis every length that can
/// hold k houses must be in the table (n <= 2k+1, or 3k+2 for flory); otherwise Error(InsufficientTable).
std::vector<mpz_class> totals(const CountTable& table, Axis axis, int max_index);

/// First entry where the tables differ, if any.
std::optional<CountTable::Key> first_difference(const CountTable& a, const CountTable& b);

}  // namespace riviera
