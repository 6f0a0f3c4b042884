#pragma once

#include <cstdint>
#include <vector>

#include "riviera/caps.hpp"
#include "riviera/core1d.hpp"
#include "riviera/count_table.hpp"
#include "riviera/family.hpp"

namespace riviera {

/// Membership test on a packed strip: lot i is bit (n-1-i), so numeric
/// order of masks is lexicographic order of the strings. Implements the
/// same semantic definitions as core1d (light, jamming, predator and
/// altruist sites), bit-parallel.
bool in_family_mask(std::uint32_t lots, int n, Family family);

/// All strips of length n in the family, lexicographically ordered.
/// Throws Error(CapExceeded) when n exceeds caps.max_length_1d.
std::vector<Configuration1D> enumerate_1d(int n, Family family, const EnumCaps& caps = {});

/// Brute-force counts J_{k,n} for all n <= n_max.
CountTable count_table_brute(int n_max, Family family, const EnumCaps& caps = {});

}  // namespace riviera
