#include "riviera/gfcount.hpp"

#include <algorithm>
#include <stdexcept>

#include "riviera/error.hpp"

namespace riviera {
namespace {

using UPoly = std::vector<mpz_class>;  // coefficients by x-degree

void require_unit_constant(const BiPoly& denominator) {
  if (denominator.coeff(0, 0) != 1) {
    throw Error(ErrorKind::InvalidArgument,
                "denominator constant term must be 1, got " + to_string(denominator));
  }
}

void require_k_at_most_n(const RationalGF& gf) {
  for (const BiPoly* p : {&gf.numerator, &gf.denominator}) {
    for (const auto& [m, c] : p->terms()) {
      if (m.x > m.y) {
        throw Error(ErrorKind::InvalidArgument,
                    "term with more houses than lots in " + to_string(*p));
      }
    }
  }
}

// y-slices of p: slice[b] is the x-polynomial multiplying y^b.
std::vector<UPoly> y_slices(const BiPoly& p, int max_y) {
  std::vector<UPoly> slices(static_cast<std::size_t>(max_y + 1));
  for (const auto& [m, c] : p.terms()) {
    if (m.y > max_y) continue;
    auto& s = slices[static_cast<std::size_t>(m.y)];
    if (s.size() <= static_cast<std::size_t>(m.x)) s.resize(static_cast<std::size_t>(m.x) + 1, 0);
    s[static_cast<std::size_t>(m.x)] += c;
  }
  return slices;
}

void check_nonnegative(const mpz_class& value, int n, int k, const RationalGF& gf) {
  if (value < 0) {
    throw Error(ErrorKind::NegativeCoefficient,
                "coefficient of x^" + std::to_string(k) + " y^" + std::to_string(n) + " is " +
                    value.get_str() + " in the " + std::string(to_string(gf.family)) + " series");
  }
}

bool avoids(const std::string& word, const std::vector<std::string>& forbidden) {
  return std::none_of(forbidden.begin(), forbidden.end(),
                      [&](const std::string& f) { return word.find(f) != std::string::npos; });
}

int houses(const std::string& word) { return static_cast<int>(std::count(word.begin(), word.end(), '1')); }

}  // namespace

bool equivalent(const RationalGF& a, const RationalGF& b) {
  return a.numerator * b.denominator == b.numerator * a.denominator;
}

RationalGF gf_closed(Family family) {
  switch (family) {
    case Family::riviera:
      return {1 + xy(1, 1) - xy(1, 2) + xy(2, 2) + xy(2, 3) - xy(3, 5),
              1 - xy(1, 2) - xy(2, 3) - xy(2, 4) + xy(3, 6), family};
    case Family::predator:
      return {1 + xy(1, 1) - xy(1, 2) + xy(2, 2) - xy(2, 3), 1 - xy(1, 2) - xy(2, 3), family};
    case Family::altruist:
      return {1 + xy(1, 1) + xy(2, 2) + xy(2, 3) + xy(3, 4),
              1 - xy(2, 3) - xy(2, 4) - xy(3, 5), family};
    case Family::es:
      return {1 + xy(1, 1) + xy(2, 2) - xy(2, 3) + xy(3, 4) - xy(3, 5),
              1 - xy(2, 3) - xy(3, 5), family};
    case Family::flory:
      break;
  }
  throw Error(ErrorKind::InvalidArgument, "no closed generating function for the flory family");
}

TransferSystem block_system(Family family) {
  TransferSystem sys;
  sys.offset = BiPoly(1);
  if (family == Family::riviera || family == Family::altruist) {
    // Blocks 01, 011, 0011. Starting blocks drop their leading empty lot;
    // 011 and 0011 may additionally close with one trailing empty lot.
    sys.start.resize(3);
    sys.start << xy(1, 1), xy(2, 2), xy(2, 3);
    sys.step.resize(3, 3);
    sys.step << xy(1, 2), xy(2, 3), BiPoly(0),
                xy(1, 2), xy(2, 3), xy(2, 4),
                xy(1, 2), xy(2, 3), xy(2, 4);
    if (family == Family::altruist) sys.step(0, 0) = BiPoly(0);  // 01 -> 01 would make 01010
    sys.end.resize(3);
    sys.end << BiPoly(1), 1 + kY, 1 + kY;
    return sys;
  }
  if (family == Family::es) {
    sys.start.resize(2);
    sys.start << xy(1, 1), xy(2, 2);
    sys.step.resize(2, 2);
    sys.step << BiPoly(0), xy(2, 3),
                xy(1, 2), xy(2, 3);
    sys.end.resize(2);
    sys.end << BiPoly(1), BiPoly(1);
    return sys;
  }
  throw Error(ErrorKind::InvalidArgument,
              "no block system for the " + std::string(to_string(family)) + " family");
}

BiPoly determinant(PolyMatrix m) {
  const auto n = m.rows();
  if (n != m.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  if (n == 0) return BiPoly(1);
  BiPoly previous(1);
  bool negate = false;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && m(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return BiPoly(0);
      m.row(k).swap(m.row(pivot));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = exact_divide(m(i, j) * m(k, k) - m(i, k) * m(k, j), previous);
      }
      m(i, k) = BiPoly(0);
    }
    previous = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

RationalGF gf_from_blocks(const TransferSystem& system, Family family) {
  const auto n = system.step.rows();
  if (system.step.cols() != n || system.start.size() != n || system.end.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "transfer system shapes are inconsistent");
  }
  const PolyMatrix lhs = PolyMatrix::Identity(n, n) - system.step;
  BiPoly det = determinant(lhs);
  if (det.is_zero()) throw Error(ErrorKind::SingularSystem, "det(I - step) vanishes");

  // start^T (I - S)^{-1} end = sum_i start_i det_i / det  (Cramer).
  BiPoly numerator = system.offset * det;
  for (Eigen::Index i = 0; i < n; ++i) {
    PolyMatrix replaced = lhs;
    replaced.col(i) = system.end;
    numerator += system.start(i) * determinant(std::move(replaced));
  }
  if (det.coeff(0, 0) == -1) {
    det = -det;
    numerator = -numerator;
  }
  return {std::move(numerator), std::move(det), family};
}

RationalGF gf_from_blocks(Family family) { return gf_from_blocks(block_system(family), family); }

TransferDigraph build_digraph(const std::vector<std::string>& forbidden, bool occupied_ends) {
  TransferDigraph g;
  for (int bits = 0; bits < 8; ++bits) {
    std::string w;
    for (int i = 2; i >= 0; --i) w.push_back(((bits >> i) & 1) ? '1' : '0');
    if (avoids(w, forbidden)) g.vertices.push_back(w);
  }
  const auto size = static_cast<Eigen::Index>(g.vertices.size());
  g.step = PolyMatrix::Constant(size, size, BiPoly(0));
  g.start = PolyVector::Constant(size, BiPoly(0));
  g.end = PolyVector::Constant(size, BiPoly(0));
  for (Eigen::Index i = 0; i < size; ++i) {
    const auto& u = g.vertices[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < size; ++j) {
      const auto& v = g.vertices[static_cast<std::size_t>(j)];
      if (u.substr(1) != v.substr(0, 2) || !avoids(u + v.back(), forbidden)) continue;
      g.step(i, j) = v.back() == '1' ? kX : BiPoly(1);
    }
    if (!occupied_ends || u.front() == '1') g.start(i) = xy(houses(u), 0);
    if (!occupied_ends || u.back() == '1') g.end(i) = BiPoly(1);
  }
  g.head = BiPoly(1);
  for (int len = 1; len < 3; ++len) {
    for (int bits = 0; bits < (1 << len); ++bits) {
      std::string w;
      for (int i = len - 1; i >= 0; --i) w.push_back(((bits >> i) & 1) ? '1' : '0');
      if (!avoids(w, forbidden)) continue;
      if (occupied_ends && (w.front() != '1' || w.back() != '1')) continue;
      g.head += xy(houses(w), len);
    }
  }
  return g;
}

TransferDigraph predator_digraph() {
  return build_digraph({"111", "000", "0100", "0010", "00"}, true);
}

CountTable series_from_digraph(const TransferDigraph& graph, int n_max, Family family) {
  CountTable table(family, n_max);
  for (const auto& [m, c] : graph.head.terms()) {
    if (m.y <= n_max) table.add(m.y, m.x, c);
  }
  PolyVector row = graph.start;  // start^T A^(n-3), kept as a column
  for (int n = 3; n <= n_max; ++n) {
    const BiPoly value = (row.transpose() * graph.end).value();
    for (const auto& [m, c] : value.terms()) table.add(n, m.x, c);
    row = (row.transpose() * graph.step).transpose();
  }
  return table;
}

CountTable series_expand(const RationalGF& gf, int n_max) {
  const auto den = y_slices(gf.denominator, n_max);
  if (den.empty() || den[0] != UPoly{1}) {
    throw Error(ErrorKind::InvalidArgument,
                "series_expand needs the y^0 part of the denominator to be 1, got " +
                    to_string(gf.denominator));
  }
  const auto num = y_slices(gf.numerator, n_max);
  std::vector<UPoly> series(static_cast<std::size_t>(n_max + 1));
  CountTable table(gf.family, n_max);
  for (int n = 0; n <= n_max; ++n) {
    UPoly s = num[static_cast<std::size_t>(n)];
    for (int j = 1; j <= n; ++j) {
      const auto& d = den[static_cast<std::size_t>(j)];
      const auto& prev = series[static_cast<std::size_t>(n - j)];
      if (d.empty() || prev.empty()) continue;
      if (s.size() < d.size() + prev.size() - 1) s.resize(d.size() + prev.size() - 1, 0);
      for (std::size_t a = 0; a < d.size(); ++a) {
        if (d[a] == 0) continue;
        for (std::size_t b = 0; b < prev.size(); ++b) s[a + b] -= d[a] * prev[b];
      }
    }
    for (std::size_t k = 0; k < s.size(); ++k) {
      check_nonnegative(s[k], n, static_cast<int>(k), gf);
      table.set(n, static_cast<int>(k), s[k]);
    }
    series[static_cast<std::size_t>(n)] = std::move(s);
  }
  return table;
}

namespace {

// One step of J_{k,n} = N_{k,n} - sum_{(a,b) != (0,0)} D_{a,b} J_{k-a,n-b};
// `rows(n - b)` must return row n-b (index k) for every b in 1..deg_y(D).
template <typename RowAt>
std::vector<mpz_class> recurrence_step(const RationalGF& gf, int n, RowAt&& rows) {
  std::vector<mpz_class> row(static_cast<std::size_t>(n + 1), 0);
  for (const auto& [m, c] : gf.numerator.terms()) {
    if (m.y == n) row[static_cast<std::size_t>(m.x)] += c;
  }
  for (const auto& [m, c] : gf.denominator.terms()) {
    if (m.y == 0 || m.y > n) continue;  // y^0 part is exactly 1 (checked by callers)
    const std::vector<mpz_class>& prev = rows(n - m.y);
    for (std::size_t k = static_cast<std::size_t>(m.x); k < row.size(); ++k) {
      const std::size_t src = k - static_cast<std::size_t>(m.x);
      if (src < prev.size() && prev[src] != 0) row[k] -= c * prev[src];
    }
  }
  return row;
}

void require_recurrence_shape(const RationalGF& gf) {
  require_unit_constant(gf.denominator);
  require_k_at_most_n(gf);
  for (const auto& [m, c] : gf.denominator.terms()) {
    if (m.y == 0 && m.x > 0) {
      throw Error(ErrorKind::InvalidArgument, "denominator has a pure x term: " + to_string(gf.denominator));
    }
  }
}

}  // namespace

CountTable counts_by_recurrence(const RationalGF& gf, int n_max) {
  require_recurrence_shape(gf);
  std::vector<std::vector<mpz_class>> rows;
  rows.reserve(static_cast<std::size_t>(n_max + 1));
  CountTable table(gf.family, n_max);
  for (int n = 0; n <= n_max; ++n) {
    rows.push_back(recurrence_step(gf, n, [&](int i) -> const std::vector<mpz_class>& {
      return rows[static_cast<std::size_t>(i)];
    }));
    const auto& row = rows.back();
    for (std::size_t k = 0; k < row.size(); ++k) {
      check_nonnegative(row[k], n, static_cast<int>(k), gf);
      table.set(n, static_cast<int>(k), row[k]);
    }
  }
  return table;
}

CountTable counts_by_recurrence(Family family, int n_max) {
  return counts_by_recurrence(gf_closed(family), n_max);
}

std::vector<mpz_class> recurrence_row(const RationalGF& gf, int n) {
  require_recurrence_shape(gf);
  const auto window = static_cast<std::size_t>(gf.denominator.degree_y() + 1);
  std::vector<std::vector<mpz_class>> ring(window);
  for (int i = 0; i <= n; ++i) {
    ring[static_cast<std::size_t>(i) % window] =
        recurrence_step(gf, i, [&](int j) -> const std::vector<mpz_class>& {
          return ring[static_cast<std::size_t>(j) % window];
        });
  }
  return ring[static_cast<std::size_t>(n) % window];
}

std::vector<mpz_class> length_totals_by_recurrence(const RationalGF& gf, int n) {
  const auto num = at_x_one(gf.numerator);
  const auto den = at_x_one(gf.denominator);
  if (den.empty() || den[0] != 1) {
    throw Error(ErrorKind::InvalidArgument, "q(1, 0) must be 1 for a length recurrence");
  }
  std::vector<mpz_class> c(static_cast<std::size_t>(n + 1), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    mpz_class value = i < num.size() ? num[i] : mpz_class(0);
    for (std::size_t j = 1; j < den.size() && j <= i; ++j) value -= den[j] * c[i - j];
    c[i] = value;
  }
  return c;
}

mpz_class predator_closed_form(int k, int n) {
  if (k < 0 || n < 0 || k > n) {
    throw Error(ErrorKind::InvalidArgument, "predator_closed_form needs 0 <= k <= n");
  }
  // The construction starts from an alternating strip with at least one
  // house; the empty strip is the one extra term of the series.
  if (n == 0) return 1;
  const int top = n - k + 1;
  const int bottom = 2 * k - n - 1;
  if (bottom < 0 || bottom > top) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
  return out;
}

std::vector<mpz_class> recurrence_residuals(const RationalGF& gf, Axis axis,
                                            const std::vector<mpz_class>& sequence) {
  const auto q = axis == Axis::length ? at_x_one(gf.denominator) : at_y_one(gf.denominator);
  std::vector<mpz_class> out(sequence.size(), 0);
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    for (std::size_t j = 0; j < q.size() && j <= i; ++j) out[i] += q[j] * sequence[i - j];
  }
  return out;
}

}  // namespace riviera
