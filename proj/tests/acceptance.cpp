// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "riviera/complexity.hpp"
#include "riviera/enum1d.hpp"
#include "riviera/error.hpp"
#include "riviera/gfcount.hpp"
#include "riviera/grid2d.hpp"

using namespace riviera;

namespace {

using Failures = std::vector<std::string>;

template <typename... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

void expect(Failures& f, bool ok, const std::string& what) {
  if (!ok) f.push_back(what);
}

std::vector<mpz_class> fibonacci(int n) {
  std::vector<mpz_class> f = {0, 1};
  while (static_cast<int>(f.size()) <= n) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  return f;
}

double root_of_one_minus(std::initializer_list<int> exponents) {
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    double v = 1.0;
    for (int e : exponents) v -= std::pow(mid, e);
    (v > 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

EnumCaps desk_caps() {
  EnumCaps caps;
  caps.max_cells_2d = 36;  // admits 6x6 for the parity sweep
  return caps;
}

Failures oracle_equivalence() {
  Failures f;
  const int n_max = 18;
  for (Family family : {Family::riviera, Family::predator, Family::altruist, Family::es}) {
    const auto brute = count_table_brute(n_max, family);
    const auto series = series_expand(gf_closed(family), n_max);
    const auto rec = counts_by_recurrence(family, n_max);
    if (auto d = first_difference(brute, series)) {
      f.push_back(cat(to_string(family), " brute vs series at (", d->first, ",", d->second, ")"));
    }
    if (auto d = first_difference(brute, rec)) {
      f.push_back(cat(to_string(family), " brute vs recurrence at (", d->first, ",", d->second, ")"));
    }
    if (family != Family::predator) continue;
    for (int n = 0; n <= n_max; ++n) {
      for (int k = 0; k <= n; ++k) {
        expect(f, predator_closed_form(k, n) == brute.at(n, k), cat("predator closed form at (", n, ",", k, ")"));
      }
    }
  }
  return f;
}

Failures gf_identities() {
  Failures f;
  for (Family family : {Family::riviera, Family::altruist, Family::es}) {
    expect(f, equivalent(gf_from_blocks(family), gf_closed(family)), cat(to_string(family), " block GF"));
  }
  const auto digraph = series_from_digraph(predator_digraph(), 40, Family::predator);
  if (auto d = first_difference(digraph, series_expand(gf_closed(Family::predator), 40))) {
    f.push_back(cat("digraph series differs at (", d->first, ",", d->second, ")"));
  }
  return f;
}

Failures sequence_identities() {
  Failures f;
  const int top = 30;
  auto length = [&](Family family) { return length_totals_by_recurrence(gf_closed(family), top); };
  auto occupancy = [&](Family family) {
    return totals(counts_by_recurrence(family, 2 * top + 1), Axis::occupancy, top);
  };
  const auto fib = fibonacci(top + 2);

  const auto pl = length(Family::predator);
  for (int n = 4; n <= top; ++n) expect(f, pl[n] == pl[n - 2] + pl[n - 3], cat("predator length Padovan n=", n));
  const auto po = occupancy(Family::predator);
  for (int k = 1; k <= top; ++k) expect(f, po[k] == fib[k + 1], cat("predator occupancy Fibonacci k=", k));

  const auto al = length(Family::altruist);
  for (int n = 5; n <= top; ++n) {
    expect(f, al[n] == al[n - 3] + al[n - 4] + al[n - 5], cat("altruist length recurrence n=", n));
  }
  const auto ao = occupancy(Family::altruist);
  for (int k = 1; k <= top; ++k) {
    expect(f, ao[k] == fib[k + 2] + (k % 2 == 0 ? 1 : -1), cat("altruist occupancy F+(-1)^k k=", k));
  }

  const auto el = length(Family::es);
  for (int n = 6; n <= top; ++n) expect(f, el[n] == el[n - 3] + el[n - 5], cat("es length recurrence n=", n));
  for (int n = 1; n <= top; ++n) expect(f, (el[n] == 0) == (n == 3), cat("es length zero pattern n=", n));
  const auto eo = occupancy(Family::es);
  for (int k = 4; k <= top; ++k) expect(f, eo[k] == eo[k - 2] + eo[k - 3], cat("es occupancy Padovan k=", k));
  return f;
}

Failures complexity_agreement() {
  Failures f;
  for (Family family : {Family::predator, Family::altruist, Family::es}) {
    const auto q = gf_closed(family).denominator;
    for (double rho : support(family).interior_grid(50)) {
      const double gap = std::abs(kl_solve(q, rho).s - s_closed(family, rho));
      expect(f, gap < 1e-10, cat(to_string(family), " KL gap ", gap, " at rho=", rho));
    }
  }
  for (double rho : support(Family::predator).interior_grid(50)) {
    expect(f, s_closed(Family::altruist, rho) == s_closed(Family::predator, rho), cat("S^A != S^P at ", rho));
    expect(f, std::abs(s_closed(Family::predator, rho) - s_closed(Family::flory, 1 - rho)) < 1e-14,
           cat("S^P != S^Flory(1-rho) at ", rho));
  }
  auto empirical = [&](Family family, std::vector<double> rhos) {
    const auto curve = s_empirical_curve(family, rhos, 2000);
    for (const auto& p : curve) {
      const double gap = std::abs(p.s - s_closed(family, p.rho));
      expect(f, gap < 0.01, cat(to_string(family), " empirical gap ", gap, " at rho=", p.rho));
    }
  };
  empirical(Family::predator, {0.55, 0.60, 0.64});
  empirical(Family::altruist, {0.55, 0.60, 0.64});
  empirical(Family::es, {0.62, 0.65});
  return f;
}

Failures equilibrium() {
  Failures f;
  const double plastic = -std::log(root_of_one_minus({2, 3}));
  for (Family family : {Family::predator, Family::altruist}) {
    const auto eq = equilibrium_density(family);
    expect(f, std::abs(eq.rho_star - 0.588553) < 1e-4, cat(to_string(family), " rho* = ", eq.rho_star));
    expect(f, std::abs(eq.s_star - 0.281200) < 1e-6, cat(to_string(family), " S* = ", eq.s_star));
    expect(f, std::abs(eq.s_star - plastic) < 1e-6, cat(to_string(family), " S* vs ln(plastic)"));
    expect(f, std::abs(eq.s_star - length_growth_log(family, 2000)) < 1e-4, cat(to_string(family), " growth"));
  }
  const auto es = equilibrium_density(Family::es);
  expect(f, std::abs(es.s_star + std::log(root_of_one_minus({3, 5}))) < 1e-6, "es S* vs root of 1-y^3-y^5");
  expect(f, std::abs(es.s_star - length_growth_log(Family::es, 2000)) < 1e-4, "es S* vs growth");
  return f;
}

Failures es_structure() {
  Failures f;
  const auto caps = desk_caps();
  const std::vector<std::pair<std::pair<int, int>, long>> pinned = {{{3, 3}, 1}, {{5, 6}, 2}};
  for (const auto& [size, expected] : pinned) {
    expect(f, es_count(size.first, size.second, CountMethod::brute, caps) == expected,
           cat("es_count ", size.first, "x", size.second));
  }
  for (const auto& [m, n] : std::vector<std::pair<int, int>>{{3, 3}, {3, 6}, {5, 3}, {5, 6}, {3, 9}}) {
    const auto brute = es_count(m, n, CountMethod::brute, caps);
    const auto letters = es_count(m, n, CountMethod::lr, caps);
    expect(f, brute == letters, cat("brute ", brute.get_str(), " vs L/R ", letters.get_str(), " at ", m, "x", n));
  }
  for (int m = 1; m <= 6; ++m) {
    for (int n = 1; n <= 6; ++n) {
      const auto grids = enumerate_2d(m, n, Family::es, caps);
      if (m > 2 && n > 2 && (n % 3 != 0 || m % 2 == 0)) {
        expect(f, grids.empty(), cat("ES grids exist at ", m, "x", n));
        continue;
      }
      if (m <= 2 || n <= 2) continue;
      std::string bricked;
      for (int c = 0; c < n; ++c) bricked.push_back(c % 3 == 1 ? '0' : '1');
      for (const auto& g : grids) {
        expect(f, g.occupancy() == es_occupancy(m, n), cat("ES occupancy at ", m, "x", n));
        expect(f, g.row_occupancy(m - 1) == n, cat("southern row not full at ", m, "x", n));
        for (int r = m - 2; r >= 0; r -= 2) {
          std::string row;
          for (int c = 0; c < n; ++c) row.push_back(g(r, c) ? '1' : '0');
          expect(f, row == bricked, cat("odd-row law fails at ", m, "x", n, " row ", r));
        }
      }
    }
  }
  return f;
}

Failures densities() {
  Failures f;
  std::vector<std::pair<int, int>> sizes = {{4, 5}};
  for (int m = 2; m <= 4; ++m) {
    for (int n = 2; n <= 4; ++n) sizes.emplace_back(m, n);
  }
  for (const auto& [m, n] : sizes) {
    int best = m * n;
    for (const auto& g : enumerate_2d(m, n, Family::riviera)) best = std::min(best, g.occupancy());
    expect(f, best == min_occupancy_bound(m, n), cat("min occupancy ", best, " at ", m, "x", n));
  }
  for (int m = 2; m <= 9; ++m) {
    for (int n = 2; n <= 12; ++n) {
      if (n != 3) expect(f, classify_2d(generate_pattern("check", m, n)).p_resistant, cat("check ", m, "x", n));
      if (m >= 3 && n >= 3) {
        expect(f, classify_2d(generate_pattern("brick", m, n)).a_resistant, cat("brick ", m, "x", n));
      }
      if (m >= 3 && n % 4 == 0) {
        expect(f, classify_2d(generate_pattern("rake_stripe", m, n)).a_resistant, cat("rake_stripe ", m, "x", n));
      }
    }
  }
  expect(f, generate_pattern("rake_stripe", 6, 8).occupancy() == 26, "rake_stripe(6,8) occupancy");
  for (int m = 2; m <= 4; ++m) {
    for (int n = 2; n <= 7; ++n) {
      for (const auto& g : enumerate_2d(m, n, Family::predator)) {
        const int r = g.row_occupancy(m - 2);
        expect(f, r <= 2 * ((n + 2) / 3), cat("penultimate row law at ", m, "x", n));
        for (int row = 0; row < m - 2; ++row) {
          expect(f, g.row_occupancy(row) <= r + 1, cat("row growth law at ", m, "x", n));
        }
      }
    }
  }
  return f;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome evaluate(const std::function<Failures()>& check, double& seconds) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    const auto failures = check();
    out.pass = failures.empty();
    if (!failures.empty()) out.detail = cat(failures.size(), " failure(s), first: ", failures.front());
  } catch (const std::exception& e) {
    out.detail = cat("exception: ", e.what());
  }
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Failures()> check;
  };
  const std::vector<Criterion> criteria = {
      {1, "oracle equivalence (brute = series = recurrence = closed form, n <= 18)", oracle_equivalence},
      {2, "GF identities (blocks = closed, digraph series to order 40)", gf_identities},
      {3, "sequence identities (n, k <= 30)", sequence_identities},
      {4, "complexity agreement (KL, closed, empirical n = 2000)", complexity_agreement},
      {5, "equilibrium densities and entropies", equilibrium},
      {6, "2D ES structure and counts", es_structure},
      {7, "2D densities, patterns and row laws", densities},
  };
  bool all = true;
  bool finite_2d = true;
  for (const auto& c : criteria) {
    double seconds = 0.0;
    const auto out = evaluate(c.check, seconds);
    all = all && out.pass;
    if (c.id >= 6) finite_2d = finite_2d && out.pass;
    std::printf("criterion %d: %s  %s  (%.2fs)%s%s\n", c.id, out.pass ? "PASS" : "FAIL", c.title, seconds,
                out.detail.empty() ? "" : "  ", out.detail.c_str());
  }
  std::printf("criterion 8: %s  asymptotic 2D claims, checked as finite-size properties via criteria 6-7\n",
              finite_2d ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
