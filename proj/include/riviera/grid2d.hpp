#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "riviera/caps.hpp"
#include "riviera/core1d.hpp"
#include "riviera/family.hpp"

namespace riviera {

/// m x n tract of lots. Row 0 is the northern edge, row m-1 the southern
/// one; column 0 is the western edge. Light comes from east, west and
/// south, and the three corresponding borders never obstruct it.
class Grid2D {
 public:
  Grid2D(int rows, int cols);
  Grid2D(int rows, int cols, std::vector<std::uint8_t> cells);

  /// Newline-separated rows of 0/1, north first. A trailing newline is accepted.
  static Grid2D parse(std::string_view text);
  std::string str() const;

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  bool operator()(int r, int c) const { return cells_[index(r, c)] != 0; }
  void set(int r, int c, bool house) { cells_[index(r, c)] = house ? 1 : 0; }
  Grid2D with_house(int r, int c) const;

  int occupancy() const;
  int row_occupancy(int r) const;

  friend bool operator==(const Grid2D&, const Grid2D&) = default;
  friend auto operator<=>(const Grid2D&, const Grid2D&) = default;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }

  int rows_;
  int cols_;
  std::vector<std::uint8_t> cells_;
};

/// True iff the house at (r, c) has an open east, west or south side.
bool has_light(const Grid2D& g, int r, int c);

bool is_permissible_2d(const Grid2D& g);
bool is_jammed_2d(const Grid2D& g);

struct Cell {
  int r = 0;
  int c = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct SiteReport2D {
  std::vector<Cell> empty_sites;
  std::vector<Cell> predator_sites;
  std::vector<Cell> altruist_sites;
};

/// Throws Error(NotJammed) unless g is jammed.
SiteReport2D site_report_2d(const Grid2D& g);
Classification classify_2d(const Grid2D& g);
bool in_family_2d(const Grid2D& g, Family family);

/// Family members on an m x n tract in row-major lexicographic order.
///
/// Rows are placed north to south; a row is checked in full once the row
/// below it exists, since light, jamming and both invader rules only look
/// one row down and one row up. Error(CapExceeded) if m*n exceeds the cap.
std::vector<Grid2D> enumerate_2d(int m, int n, Family family, const EnumCaps& caps = {});

/// Pattern generators: check, brick, rake, stripe, rake_stripe.
///
///   check        (r + c) even, plus every west, east and south border lot;
///                n != 3.
///   brick        empty lots at c = 3 + 2r (mod 4), then the border is
///                filled greedily (row-major) wherever a house still fits.
///                m, n >= 3.
///   rake         rows of 0110..., southern row full; n = 0 (mod 4).
///   stripe       full rows alternating with 10...01, full on top; m even.
///   rake_stripe  rake rows, then one full row, then 10...01 at the
///                southern edge; n = 0 (mod 4), m >= 3.
///
/// Error(UnsupportedSize) outside those shapes or for m, n < 2.
Grid2D generate_pattern(std::string_view name, int m, int n);

/// Smallest occupancy of any jammed m x n configuration (m, n >= 2):
/// mn/2 + 2 if n = 0 (mod 4), m(n+2)/2 if n = 2 (mod 4), m(n+1)/2 + 1 if n odd.
int min_occupancy_bound(int m, int n);

/// Skeleton shared by every ES configuration when m, n > 2.
struct ESTemplate {
  int m = 0;
  int n = 0;
  std::vector<std::string> rows;   // '0', '1', '*'; north first
  std::vector<int> star_rows;      // 0-based, north first
  std::vector<int> pair_columns;   // 0-based western column of each pair
};

/// Error(NoESExists) with the failing condition unless m, n > 2,
/// n = 0 (mod 3) and m odd.
ESTemplate es_template(int m, int n);
int es_occupancy(int m, int n);

/// Letter grid over {L, R}; L means the western lot of a pair is empty.
class LRGrid {
 public:
  LRGrid(int rows, int cols, std::vector<char> letters);
  static LRGrid parse(std::string_view text);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  char operator()(int r, int c) const {
    return letters_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)];
  }
  std::string str() const;

  friend bool operator==(const LRGrid&, const LRGrid&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<char> letters_;
};

/// Checks the four forbidden constellations: R over R beside L below
/// (top-left R, bottom-left R, bottom-right L); L over L beside R below
/// (top-right L, bottom-left R, bottom-right L); L over L in the first
/// column; R over R in the last column.
bool lr_valid(const LRGrid& grid);

/// All valid M x N letter grids, lexicographic with L < R.
std::vector<LRGrid> lr_enumerate(int rows, int cols, const EnumCaps& caps = {});

/// Fills the ES template: letter row 0 is the northernmost star row and
/// letter column 0 the westernmost pair. Error(DimensionMismatch) unless
/// (rows, cols) = ((m-1)/2, (n-3)/3).
Grid2D lr_to_es(const LRGrid& grid, int m, int n);

enum class CountMethod { brute, lr, automatic };

/// Number of ES configurations on an m x n tract.
///
/// brute: enumerate_2d. lr: letter grids when m, n > 2, zero when the
/// structure rules them out. automatic: lr for m, n > 2; otherwise 1 for
/// m = 1 or n <= 2, and the one-row ES count for m = 2.
mpz_class es_count(int m, int n, CountMethod method, const EnumCaps& caps = {});

}  // namespace riviera
