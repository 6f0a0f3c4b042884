#pragma once

namespace riviera {

/// Work limits for the exhaustive oracles.
struct EnumCaps {
  int max_length_1d = 24;  // 2^24 strings
  int max_cells_2d = 30;   // admits 5x6 and 3x9
  int max_letters_lr = 24;

  /// Defaults overridden by RIVIERA_CAP, formatted "N" (1D length) or
  /// "N,C" (1D length, 2D cell count).
  static EnumCaps from_env();
};

}  // namespace riviera
