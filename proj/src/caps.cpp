#include "riviera/caps.hpp"

#include <cstdlib>
#include <string>

#include "riviera/error.hpp"

namespace riviera {

EnumCaps EnumCaps::from_env() {
  EnumCaps caps;
  const char* raw = std::getenv("RIVIERA_CAP");
  if (raw == nullptr || *raw == '\0') return caps;
  const std::string text(raw);
  try {
    const auto comma = text.find(',');
    caps.max_length_1d = std::stoi(text.substr(0, comma));
    if (comma != std::string::npos) caps.max_cells_2d = std::stoi(text.substr(comma + 1));
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, "RIVIERA_CAP must be 'N' or 'N,C', got '" + text + "'");
  }
  return caps;
}

}  // namespace riviera
