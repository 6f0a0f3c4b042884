#pragma once

#include <array>
#include <string_view>

namespace riviera {

/// Ensembles of jammed strips. `flory` is the jammed set of the
/// no-two-adjacent deposition model and is only enumerated, never
/// produced from a generating function.
enum class Family { riviera, predator, altruist, es, flory };

inline constexpr std::array<Family, 5> kAllFamilies = {
    Family::riviera, Family::predator, Family::altruist, Family::es, Family::flory};

std::string_view to_string(Family family);

/// Accepts the canonical names plus the short aliases p, a, es.
Family parse_family(std::string_view name);

}  // namespace riviera
