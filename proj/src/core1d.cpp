#include "riviera/core1d.hpp"

#include <algorithm>

#include "riviera/error.hpp"

namespace riviera {

Configuration1D Configuration1D::parse(std::string_view text) {
  std::vector<bool> lots;
  lots.reserve(text.size());
  for (char ch : text) {
    if (ch != '0' && ch != '1') {
      throw Error(ErrorKind::InvalidArgument,
                  "configuration must be a string over {0,1}, got '" + std::string(text) + "'");
    }
    lots.push_back(ch == '1');
  }
  return Configuration1D(std::move(lots));
}

std::string Configuration1D::str() const {
  std::string out;
  out.reserve(lots_.size());
  for (bool lot : lots_) out.push_back(lot ? '1' : '0');
  return out;
}

std::size_t Configuration1D::occupancy() const noexcept {
  return static_cast<std::size_t>(std::count(lots_.begin(), lots_.end(), true));
}

Configuration1D Configuration1D::with_house(std::size_t i) const {
  auto lots = lots_;
  lots.at(i) = true;
  return Configuration1D(std::move(lots));
}

Configuration1D Configuration1D::reversed() const {
  return Configuration1D(std::vector<bool>(lots_.rbegin(), lots_.rend()));
}

bool has_light(const Configuration1D& c, std::size_t i) {
  const bool west_open = i == 0 || !c[i - 1];
  const bool east_open = i + 1 == c.size() || !c[i + 1];
  return west_open || east_open;
}

bool is_permissible_1d(const Configuration1D& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] && !has_light(c, i)) return false;
  }
  return true;
}

bool is_jammed_1d(const Configuration1D& c) {
  if (!is_permissible_1d(c)) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i] && is_permissible_1d(c.with_house(i))) return false;
  }
  return true;
}

namespace {

// Building on `i` leaves every pre-existing house with an open side.
bool blocks_nobody(const Configuration1D& c, std::size_t i) {
  const auto after = c.with_house(i);
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] && !has_light(after, j)) return false;
  }
  return true;
}

}  // namespace

SiteReport site_report_1d(const Configuration1D& c) {
  if (!is_jammed_1d(c)) {
    throw Error(ErrorKind::NotJammed, "site report requested for non-jammed '" + c.str() + "'");
  }
  SiteReport report;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i]) continue;
    report.empty_sites.push_back(i);
    if (has_light(c.with_house(i), i)) report.predator_sites.push_back(i);
    if (blocks_nobody(c, i)) report.altruist_sites.push_back(i);
  }
  return report;
}

Classification classify_1d(const Configuration1D& c) {
  Classification flags;
  flags.permissible = is_permissible_1d(c);
  flags.jammed = flags.permissible && is_jammed_1d(c);
  if (!flags.jammed) return flags;
  const auto report = site_report_1d(c);
  flags.p_resistant = report.predator_sites.empty();
  flags.a_resistant = report.altruist_sites.empty();
  flags.es = flags.p_resistant && flags.a_resistant;
  return flags;
}

}  // namespace riviera
