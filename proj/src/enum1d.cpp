#include "riviera/enum1d.hpp"

#include <bit>
#include <string>

#include "riviera/error.hpp"

namespace riviera {
namespace {

using Mask = std::uint32_t;

// Houses with both neighbours occupied; bits outside the strip count as
// empty, which gives the boundary lots their outside light.
Mask blocked(Mask lots, Mask full) { return lots & (lots << 1) & (lots >> 1) & full; }

bool riviera_jammed(Mask lots, Mask full) {
  if (blocked(lots, full) != 0) return false;
  for (Mask empty = ~lots & full; empty != 0; empty &= empty - 1) {
    const Mask site = empty & (~empty + 1);
    if (blocked(lots | site, full) == 0) return false;
  }
  return true;
}

bool flory_jammed(Mask lots, Mask full) {
  if ((lots & (lots >> 1)) != 0) return false;
  for (Mask empty = ~lots & full; empty != 0; empty &= empty - 1) {
    const Mask grown = lots | (empty & (~empty + 1));
    if ((grown & (grown >> 1)) == 0) return false;
  }
  return true;
}

void check_cap(int n, const EnumCaps& caps) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative length");
  if (n > caps.max_length_1d || n > 30) {
    throw Error(ErrorKind::CapExceeded, "length " + std::to_string(n) + " exceeds enumeration cap " +
                                            std::to_string(caps.max_length_1d));
  }
}

Configuration1D unpack(Mask lots, int n) {
  std::vector<bool> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = ((lots >> (n - 1 - i)) & 1U) != 0;
  return Configuration1D(std::move(out));
}

}  // namespace

bool in_family_mask(Mask lots, int n, Family family) {
  const Mask full = n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  if (family == Family::flory) return flory_jammed(lots, full);
  if (!riviera_jammed(lots, full)) return false;
  if (family == Family::riviera) return true;

  bool predator_site = false;
  bool altruist_site = false;
  for (Mask empty = ~lots & full; empty != 0; empty &= empty - 1) {
    const Mask site = empty & (~empty + 1);
    const Mask after = blocked(lots | site, full);
    if ((after & site) == 0) predator_site = true;
    if ((after & lots) == 0) altruist_site = true;
  }
  switch (family) {
    case Family::predator: return !predator_site;
    case Family::altruist: return !altruist_site;
    case Family::es: return !predator_site && !altruist_site;
    default: return false;
  }
}

std::vector<Configuration1D> enumerate_1d(int n, Family family, const EnumCaps& caps) {
  check_cap(n, caps);
  std::vector<Configuration1D> out;
  const Mask end = Mask{1} << n;
  for (Mask lots = 0; lots < end; ++lots) {
    if (in_family_mask(lots, n, family)) out.push_back(unpack(lots, n));
  }
  return out;
}

CountTable count_table_brute(int n_max, Family family, const EnumCaps& caps) {
  check_cap(n_max, caps);
  CountTable table(family, n_max);
  for (int n = 0; n <= n_max; ++n) {
    std::vector<unsigned long> by_k(static_cast<std::size_t>(n + 1), 0);
    const Mask end = Mask{1} << n;
    for (Mask lots = 0; lots < end; ++lots) {
      if (in_family_mask(lots, n, family)) ++by_k[static_cast<std::size_t>(std::popcount(lots))];
    }
    for (int k = 0; k <= n; ++k) table.set(n, k, mpz_class(by_k[static_cast<std::size_t>(k)]));
  }
  return table;
}

}  // namespace riviera
