#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace riviera {

/// A strip of lots, west to east. `true` marks a house.
///
/// Indices are 0-based throughout the API (the usual prose numbering of
/// lots starts at 1). Sunlight arrives from the east and west only; the
/// two ends of the strip always receive light from outside.
class Configuration1D {
 public:
  Configuration1D() = default;
  explicit Configuration1D(std::vector<bool> lots) : lots_(std::move(lots)) {}

  /// Parses a string over {0,1}. Throws Error(InvalidArgument) on any other character.
  static Configuration1D parse(std::string_view text);

  std::string str() const;

  std::size_t size() const noexcept { return lots_.size(); }
  bool empty() const noexcept { return lots_.empty(); }
  bool operator[](std::size_t i) const { return lots_[i]; }
  std::size_t occupancy() const noexcept;

  Configuration1D with_house(std::size_t i) const;
  Configuration1D reversed() const;

  const std::vector<bool>& lots() const noexcept { return lots_; }

  friend bool operator==(const Configuration1D&, const Configuration1D&) = default;
  friend auto operator<=>(const Configuration1D&, const Configuration1D&) = default;

 private:
  std::vector<bool> lots_;
};

struct SiteReport {
  std::vector<std::size_t> empty_sites;
  std::vector<std::size_t> predator_sites;
  std::vector<std::size_t> altruist_sites;
};

struct Classification {
  bool permissible = false;
  bool jammed = false;
  bool p_resistant = false;
  bool a_resistant = false;
  bool es = false;

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// True iff house `i` has an empty neighbour or sits at an end of the strip.
bool has_light(const Configuration1D& c, std::size_t i);

bool is_permissible_1d(const Configuration1D& c);
bool is_jammed_1d(const Configuration1D& c);

/// Predator and altruist sites of a jammed configuration. Throws
/// Error(NotJammed) otherwise: both notions only make sense once the
/// strip is jammed.
SiteReport site_report_1d(const Configuration1D& c);

Classification classify_1d(const Configuration1D& c);

}  // namespace riviera
