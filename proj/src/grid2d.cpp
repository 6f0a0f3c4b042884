#include "riviera/grid2d.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "riviera/error.hpp"
#include "riviera/gfcount.hpp"

namespace riviera {

Grid2D::Grid2D(int rows, int cols) : Grid2D(rows, cols, {}) {}

Grid2D::Grid2D(int rows, int cols, std::vector<std::uint8_t> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  if (rows <= 0 || cols <= 0) throw Error(ErrorKind::InvalidArgument, "grid dimensions must be positive");
  const auto size = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  if (cells_.empty()) cells_.assign(size, 0);
  if (cells_.size() != size) throw Error(ErrorKind::DimensionMismatch, "cell count does not match m x n");
}

Grid2D Grid2D::parse(std::string_view text) {
  std::vector<std::string> lines;
  std::string current;
  for (char ch : text) {
    if (ch == '\r') continue;
    if (ch == '\n') {
      lines.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  if (!current.empty()) lines.push_back(current);
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw Error(ErrorKind::InvalidArgument, "empty grid text");
  const auto cols = lines.front().size();
  std::vector<std::uint8_t> cells;
  for (const auto& line : lines) {
    if (line.size() != cols) throw Error(ErrorKind::InvalidArgument, "ragged grid rows");
    for (char ch : line) {
      if (ch != '0' && ch != '1') throw Error(ErrorKind::InvalidArgument, "grid rows must be over {0,1}");
      cells.push_back(ch == '1' ? 1 : 0);
    }
  }
  return Grid2D(static_cast<int>(lines.size()), static_cast<int>(cols), std::move(cells));
}

std::string Grid2D::str() const {
  std::string out;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out.push_back((*this)(r, c) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

Grid2D Grid2D::with_house(int r, int c) const {
  Grid2D out = *this;
  out.set(r, c, true);
  return out;
}

int Grid2D::occupancy() const { return static_cast<int>(std::count(cells_.begin(), cells_.end(), 1)); }

int Grid2D::row_occupancy(int r) const {
  int total = 0;
  for (int c = 0; c < cols_; ++c) total += (*this)(r, c) ? 1 : 0;
  return total;
}

bool has_light(const Grid2D& g, int r, int c) {
  const bool west = c == 0 || !g(r, c - 1);
  const bool east = c + 1 == g.cols() || !g(r, c + 1);
  const bool south = r + 1 == g.rows() || !g(r + 1, c);
  return west || east || south;
}

bool is_permissible_2d(const Grid2D& g) {
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) {
      if (g(r, c) && !has_light(g, r, c)) return false;
    }
  }
  return true;
}

bool is_jammed_2d(const Grid2D& g) {
  if (!is_permissible_2d(g)) return false;
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) {
      if (!g(r, c) && is_permissible_2d(g.with_house(r, c))) return false;
    }
  }
  return true;
}

namespace {

// Houses of g whose light the new house at (r, c) could take: the
// western, eastern and northern neighbours.
bool blocks_nobody(const Grid2D& g, int r, int c) {
  const Grid2D after = g.with_house(r, c);
  const Cell neighbours[] = {{r, c - 1}, {r, c + 1}, {r - 1, c}};
  for (const auto& [nr, nc] : neighbours) {
    if (nr < 0 || nc < 0 || nc >= g.cols()) continue;
    if (g(nr, nc) && !has_light(after, nr, nc)) return false;
  }
  return true;
}

}  // namespace

SiteReport2D site_report_2d(const Grid2D& g) {
  if (!is_jammed_2d(g)) throw Error(ErrorKind::NotJammed, "site report requested for a non-jammed grid");
  SiteReport2D report;
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) {
      if (g(r, c)) continue;
      report.empty_sites.push_back({r, c});
      if (has_light(g.with_house(r, c), r, c)) report.predator_sites.push_back({r, c});
      if (blocks_nobody(g, r, c)) report.altruist_sites.push_back({r, c});
    }
  }
  return report;
}

Classification classify_2d(const Grid2D& g) {
  Classification flags;
  flags.permissible = is_permissible_2d(g);
  flags.jammed = flags.permissible && is_jammed_2d(g);
  if (!flags.jammed) return flags;
  const auto report = site_report_2d(g);
  flags.p_resistant = report.predator_sites.empty();
  flags.a_resistant = report.altruist_sites.empty();
  flags.es = flags.p_resistant && flags.a_resistant;
  return flags;
}

bool in_family_2d(const Grid2D& g, Family family) {
  const auto flags = classify_2d(g);
  switch (family) {
    case Family::riviera: return flags.jammed;
    case Family::predator: return flags.p_resistant;
    case Family::altruist: return flags.a_resistant;
    case Family::es: return flags.es;
    case Family::flory: break;
  }
  throw Error(ErrorKind::InvalidArgument, "flory has no two-dimensional version");
}

namespace {

using RowMask = std::uint32_t;

// One row of the search, packed; bits outside the row read as empty.
// West/east orientation of the bits is irrelevant: every rule is
// mirror-symmetric.
struct RowRules {
  RowMask full;

  RowMask shift_up(RowMask x) const { return (x << 1) & full; }
  static RowMask shift_down(RowMask x) { return x >> 1; }

  // Does row `mid` pass every local rule for `family`, given the row to
  // its north (0 if none) and south (0 if it is the southern edge)?
  bool row_ok(RowMask north, RowMask mid, RowMask south, Family family) const {
    const RowMask west = shift_up(mid);
    const RowMask east = shift_down(mid);
    if ((mid & west & east & south) != 0) return false;  // a house in darkness

    const RowMask empty = ~mid & full;
    const RowMask self_blocked = west & east & south;
    const RowMask blocks_other = shift_up(mid & west & south) | shift_down(mid & east & south) |
                                 (north & shift_up(north) & shift_down(north));
    if ((empty & ~(self_blocked | blocks_other)) != 0) return false;  // a house would still fit
    switch (family) {
      case Family::riviera: return true;
      case Family::predator: return (empty & ~self_blocked) == 0;
      case Family::altruist: return (empty & ~blocks_other) == 0;
      case Family::es: return (empty & ~self_blocked) == 0 && (empty & ~blocks_other) == 0;
      case Family::flory: break;
    }
    return false;
  }
};

}  // namespace

std::vector<Grid2D> enumerate_2d(int m, int n, Family family, const EnumCaps& caps) {
  if (m <= 0 || n <= 0) throw Error(ErrorKind::InvalidArgument, "grid dimensions must be positive");
  if (family == Family::flory) throw Error(ErrorKind::InvalidArgument, "flory has no two-dimensional version");
  if (m * n > caps.max_cells_2d || n > 30) {
    throw Error(ErrorKind::CapExceeded, std::to_string(m) + "x" + std::to_string(n) +
                                            " exceeds the 2D cell cap " + std::to_string(caps.max_cells_2d));
  }
  const RowRules rules{(RowMask{1} << n) - 1};
  const RowMask row_count = RowMask{1} << n;
  std::vector<RowMask> rows(static_cast<std::size_t>(m), 0);
  std::vector<Grid2D> out;

  auto emit = [&] {
    Grid2D g(m, n);
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < n; ++c) g.set(r, c, ((rows[static_cast<std::size_t>(r)] >> (n - 1 - c)) & 1U) != 0);
    }
    out.push_back(std::move(g));
  };
  auto north_of = [&](int r) { return r == 0 ? RowMask{0} : rows[static_cast<std::size_t>(r - 1)]; };

  std::function<void(int)> place = [&](int r) {
    for (RowMask pattern = 0; pattern < row_count; ++pattern) {
      rows[static_cast<std::size_t>(r)] = pattern;
      if (r > 0 && !rules.row_ok(north_of(r - 1), rows[static_cast<std::size_t>(r - 1)], pattern, family)) {
        continue;
      }
      if (r + 1 == m) {
        if (rules.row_ok(north_of(r), pattern, 0, family)) emit();
      } else {
        place(r + 1);
      }
    }
  };
  place(0);
  return out;
}

namespace {

Grid2D fill_rows(int m, int n, const std::function<bool(int, int)>& house) {
  Grid2D g(m, n);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) g.set(r, c, house(r, c));
  }
  return g;
}

[[noreturn]] void unsupported(std::string_view name, int m, int n, const std::string& why) {
  throw Error(ErrorKind::UnsupportedSize, std::string(name) + " pattern at " + std::to_string(m) + "x" +
                                              std::to_string(n) + ": " + why);
}

}  // namespace

Grid2D generate_pattern(std::string_view name, int m, int n) {
  if (m < 2 || n < 2) unsupported(name, m, n, "needs m, n >= 2");
  if (name == "check") {
    if (n == 3) unsupported(name, m, n, "three columns leave a house with no open side");
    return fill_rows(m, n, [&](int r, int c) { return (r + c) % 2 == 0 || c == 0 || c == n - 1 || r == m - 1; });
  }
  if (name == "brick") {
    if (m < 3 || n < 3) unsupported(name, m, n, "needs m, n >= 3");
    Grid2D g = fill_rows(m, n, [](int r, int c) { return c % 4 != (3 + 2 * r) % 4; });
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < n; ++c) {
        if (!g(r, c) && is_permissible_2d(g.with_house(r, c))) g.set(r, c, true);
      }
    }
    return g;
  }
  if (name == "rake") {
    if (n % 4 != 0) unsupported(name, m, n, "needs n divisible by 4");
    return fill_rows(m, n, [&](int r, int c) { return r == m - 1 || c % 4 == 1 || c % 4 == 2; });
  }
  if (name == "stripe") {
    if (m % 2 != 0) unsupported(name, m, n, "needs an even number of rows");
    return fill_rows(m, n, [&](int r, int c) { return r % 2 == 0 || c == 0 || c == n - 1; });
  }
  if (name == "rake_stripe") {
    if (n % 4 != 0) unsupported(name, m, n, "needs n divisible by 4");
    if (m < 3) unsupported(name, m, n, "needs m >= 3");
    return fill_rows(m, n, [&](int r, int c) {
      if (r == m - 1) return c == 0 || c == n - 1;
      if (r == m - 2) return true;
      return c % 4 == 1 || c % 4 == 2;
    });
  }
  throw Error(ErrorKind::InvalidArgument, "unknown pattern '" + std::string(name) + "'");
}

int min_occupancy_bound(int m, int n) {
  if (m < 2 || n < 2) throw Error(ErrorKind::InvalidArgument, "occupancy bound needs m, n >= 2");
  if (n % 4 == 0) return m * n / 2 + 2;
  if (n % 4 == 2) return m * (n + 2) / 2;
  return m * (n + 1) / 2 + 1;
}

ESTemplate es_template(int m, int n) {
  if (m <= 2 || n <= 2) throw Error(ErrorKind::NoESExists, "the ES template needs m, n > 2");
  if (n % 3 != 0) throw Error(ErrorKind::NoESExists, "n = " + std::to_string(n) + " is not divisible by 3");
  if (m % 2 == 0) throw Error(ErrorKind::NoESExists, "m = " + std::to_string(m) + " is even");
  ESTemplate t;
  t.m = m;
  t.n = n;
  for (int j = 1; 3 * j < n; ++j) t.pair_columns.push_back(3 * j - 1);

  std::string bricked;
  for (int c = 0; c < n; ++c) bricked.push_back(c % 3 == 1 ? '0' : '1');
  std::string starred(static_cast<std::size_t>(n), '1');
  for (int c : t.pair_columns) starred[static_cast<std::size_t>(c)] = starred[static_cast<std::size_t>(c) + 1] = '*';

  for (int r = 0; r < m; ++r) {
    const int from_south = m - 1 - r;
    if (from_south == 0) {
      t.rows.emplace_back(static_cast<std::size_t>(n), '1');
    } else if (from_south % 2 == 1) {
      t.rows.push_back(bricked);
    } else {
      t.rows.push_back(starred);
      t.star_rows.push_back(r);
    }
  }
  return t;
}

int es_occupancy(int m, int n) {
  es_template(m, n);  // validates
  return m * n - (m - 1) * (2 * n - 3) / 6;
}

LRGrid::LRGrid(int rows, int cols, std::vector<char> letters)
    : rows_(rows), cols_(cols), letters_(std::move(letters)) {
  if (rows <= 0 || cols <= 0) throw Error(ErrorKind::InvalidArgument, "letter grid dimensions must be positive");
  if (letters_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    throw Error(ErrorKind::DimensionMismatch, "letter count does not match M x N");
  }
  for (char ch : letters_) {
    if (ch != 'L' && ch != 'R') throw Error(ErrorKind::InvalidArgument, "letters must be L or R");
  }
}

LRGrid LRGrid::parse(std::string_view text) {
  std::vector<char> letters;
  int rows = 0;
  int cols = -1;
  std::string line;
  auto flush = [&] {
    if (line.empty()) return;
    if (cols >= 0 && static_cast<int>(line.size()) != cols) {
      throw Error(ErrorKind::InvalidArgument, "ragged letter rows");
    }
    cols = static_cast<int>(line.size());
    letters.insert(letters.end(), line.begin(), line.end());
    ++rows;
    line.clear();
  };
  for (char ch : text) {
    if (ch == '\n') {
      flush();
    } else if (ch != '\r') {
      line.push_back(ch);
    }
  }
  flush();
  return LRGrid(rows, std::max(cols, 0), std::move(letters));
}

std::string LRGrid::str() const {
  std::string out;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out.push_back((*this)(r, c));
    out.push_back('\n');
  }
  return out;
}

bool lr_valid(const LRGrid& g) {
  for (int r = 0; r + 1 < g.rows(); ++r) {
    if (g(r, 0) == 'L' && g(r + 1, 0) == 'L') return false;
    if (g(r, g.cols() - 1) == 'R' && g(r + 1, g.cols() - 1) == 'R') return false;
    for (int c = 0; c + 1 < g.cols(); ++c) {
      const bool below_rl = g(r + 1, c) == 'R' && g(r + 1, c + 1) == 'L';
      if (below_rl && (g(r, c) == 'R' || g(r, c + 1) == 'L')) return false;
    }
  }
  return true;
}

std::vector<LRGrid> lr_enumerate(int rows, int cols, const EnumCaps& caps) {
  if (rows <= 0 || cols <= 0) throw Error(ErrorKind::InvalidArgument, "letter grid dimensions must be positive");
  const int letters = rows * cols;
  if (letters > caps.max_letters_lr || letters > 30) {
    throw Error(ErrorKind::CapExceeded, "letter grid " + std::to_string(rows) + "x" + std::to_string(cols) +
                                            " exceeds the cap of " + std::to_string(caps.max_letters_lr));
  }
  std::vector<LRGrid> out;
  const std::uint32_t end = std::uint32_t{1} << letters;
  for (std::uint32_t bits = 0; bits < end; ++bits) {
    std::vector<char> cells(static_cast<std::size_t>(letters));
    for (int i = 0; i < letters; ++i) cells[static_cast<std::size_t>(i)] = ((bits >> (letters - 1 - i)) & 1U) ? 'R' : 'L';
    LRGrid grid(rows, cols, std::move(cells));
    if (lr_valid(grid)) out.push_back(std::move(grid));
  }
  return out;
}

Grid2D lr_to_es(const LRGrid& grid, int m, int n) {
  const ESTemplate t = es_template(m, n);
  if (grid.rows() != static_cast<int>(t.star_rows.size()) || grid.cols() != static_cast<int>(t.pair_columns.size())) {
    throw Error(ErrorKind::DimensionMismatch, "letter grid " + std::to_string(grid.rows()) + "x" +
                                                  std::to_string(grid.cols()) + " does not fit a " +
                                                  std::to_string(m) + "x" + std::to_string(n) + " tract");
  }
  Grid2D g(m, n);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) g.set(r, c, t.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] == '1');
  }
  for (int i = 0; i < grid.rows(); ++i) {
    const int r = t.star_rows[static_cast<std::size_t>(i)];
    for (int j = 0; j < grid.cols(); ++j) {
      const int c = t.pair_columns[static_cast<std::size_t>(j)];
      const bool left_empty = grid(i, j) == 'L';
      g.set(r, c, !left_empty);
      g.set(r, c + 1, left_empty);
    }
  }
  return g;
}

mpz_class es_count(int m, int n, CountMethod method, const EnumCaps& caps) {
  if (m <= 0 || n <= 0) throw Error(ErrorKind::InvalidArgument, "grid dimensions must be positive");
  if (method == CountMethod::brute) return mpz_class(enumerate_2d(m, n, Family::es, caps).size());
  if (m > 2 && n > 2) {
    if (n % 3 != 0 || m % 2 == 0) return 0;
    if (n == 3) return 1;  // no star pairs: the template is the only grid
    return mpz_class(lr_enumerate((m - 1) / 2, (n - 3) / 3, caps).size());
  }
  if (method == CountMethod::lr) {
    throw Error(ErrorKind::InvalidArgument, "the letter-grid count needs m, n > 2");
  }
  if (m == 1 || n <= 2) return 1;
  // m == 2: the southern row is full and the northern row is a one-row ES strip.
  return length_totals_by_recurrence(gf_closed(Family::es), n)[static_cast<std::size_t>(n)];
}

}  // namespace riviera
