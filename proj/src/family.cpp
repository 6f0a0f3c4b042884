#include "riviera/family.hpp"

#include <string>

#include "riviera/error.hpp"

namespace riviera {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::riviera: return "riviera";
    case Family::predator: return "predator";
    case Family::altruist: return "altruist";
    case Family::es: return "es";
    case Family::flory: return "flory";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  if (name == "riviera" || name == "jammed") return Family::riviera;
  if (name == "predator" || name == "p") return Family::predator;
  if (name == "altruist" || name == "a") return Family::altruist;
  if (name == "es") return Family::es;
  if (name == "flory") return Family::flory;
  throw Error(ErrorKind::InvalidArgument, "unknown family '" + std::string(name) + "'");
}

}  // namespace riviera
