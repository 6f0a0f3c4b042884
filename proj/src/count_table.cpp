#include "riviera/count_table.hpp"

#include <string>

#include "riviera/error.hpp"

namespace riviera {

mpz_class CountTable::at(int n, int k) const {
  auto it = entries_.find({n, k});
  return it == entries_.end() ? mpz_class(0) : it->second;
}

void CountTable::set(int n, int k, const mpz_class& value) {
  if (value == 0) {
    entries_.erase({n, k});
  } else {
    entries_[{n, k}] = value;
  }
}

void CountTable::add(int n, int k, const mpz_class& value) {
  set(n, k, at(n, k) + value);
}

std::vector<mpz_class> CountTable::length_totals() const {
  std::vector<mpz_class> out(static_cast<std::size_t>(max_length_ + 1), 0);
  for (const auto& [key, value] : entries_) out[static_cast<std::size_t>(key.first)] += value;
  return out;
}

std::vector<mpz_class> totals(const CountTable& table, Axis axis, int max_index) {
  if (max_index < 0) return {};
  std::vector<mpz_class> out(static_cast<std::size_t>(max_index + 1), 0);
  if (axis == Axis::length) {
    if (max_index > table.max_length()) {
      throw Error(ErrorKind::InsufficientTable,
                  "length totals up to " + std::to_string(max_index) + " need n_max >= that");
    }
    for (const auto& [key, value] : table.entries()) {
      if (key.first <= max_index) out[static_cast<std::size_t>(key.first)] += value;
    }
    return out;
  }
  // Flory strips can be sparser (density down to 1/3).
  const int needed = table.family() == Family::flory ? 3 * max_index + 2 : 2 * max_index + 1;
  if (table.max_length() < needed) {
    throw Error(ErrorKind::InsufficientTable,
                "occupancy totals up to k=" + std::to_string(max_index) + " need n_max >= " +
                    std::to_string(needed));
  }
  for (const auto& [key, value] : table.entries()) {
    if (key.second <= max_index) out[static_cast<std::size_t>(key.second)] += value;
  }
  return out;
}

std::optional<CountTable::Key> first_difference(const CountTable& a, const CountTable& b) {
  auto ia = a.entries().begin();
  auto ib = b.entries().begin();
  while (ia != a.entries().end() || ib != b.entries().end()) {
    if (ia == a.entries().end()) return ib->first;
    if (ib == b.entries().end()) return ia->first;
    if (ia->first != ib->first) return std::min(ia->first, ib->first);
    if (ia->second != ib->second) return ia->first;
    ++ia;
    ++ib;
  }
  if (a.max_length() != b.max_length()) {
    return CountTable::Key{std::min(a.max_length(), b.max_length()) + 1, 0};
  }
  return std::nullopt;
}

}  // namespace riviera
