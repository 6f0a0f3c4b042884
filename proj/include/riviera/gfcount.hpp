#pragma once

#include <string>
#include <vector>

#include "riviera/bipoly.hpp"
#include "riviera/count_table.hpp"
#include "riviera/family.hpp"

namespace riviera {

/// numerator / denominator as a formal power series in x (houses) and y
/// (lots). The denominator's y^0 part must be exactly 1.
struct RationalGF {
  BiPoly numerator;
  BiPoly denominator;
  Family family = Family::riviera;
};

/// N1*D2 == N2*D1.
bool equivalent(const RationalGF& a, const RationalGF& b);

/// The closed rational generating functions for riviera, predator,
/// altruist and es. Flory has none here: Error(InvalidArgument).
RationalGF gf_closed(Family family);

/// GF = offset + start^T (I - step)^{-1} end.
///
/// Block form: each step glues one block of lots; `step(i, j)` is the
/// weight x^houses y^lots of block j when it follows block i (zero when
/// the transition is forbidden).
struct TransferSystem {
  PolyVector start;
  PolyMatrix step;
  PolyVector end;
  BiPoly offset;
};

/// Block systems built from the blocks 01, 011, 0011 (riviera,
/// altruist) and 01, 011 (es).
TransferSystem block_system(Family family);

/// Solves the block system with fraction-free (Bareiss) determinants and
/// Cramer's rule. Throws Error(SingularSystem) when det(I - step) == 0,
/// Error(DimensionMismatch) on inconsistent shapes.
RationalGF gf_from_blocks(const TransferSystem& system, Family family);
RationalGF gf_from_blocks(Family family);

/// Bareiss determinant over Z[x,y].
BiPoly determinant(PolyMatrix m);

/// Lot-by-lot transfer digraph: vertices are the admissible windows of
/// three lots, an edge appends one lot. Weights carry x only; y is the
/// walk length.
struct TransferDigraph {
  std::vector<std::string> vertices;
  PolyMatrix step;  // A(x)
  PolyVector start;  // x^(houses in the starting window)
  PolyVector end;    // 1 on admissible final windows
  BiPoly head;       // strips shorter than the window
};

/// Builds the digraph for strips avoiding every word in `forbidden`,
/// starting and ending with a house when `occupied_ends` is set.
TransferDigraph build_digraph(const std::vector<std::string>& forbidden, bool occupied_ends);

/// The predator digraph: forbidden 111, 000, 0100, 0010, 00; occupied ends.
TransferDigraph predator_digraph();

/// head + sum_{n>=3} start^T A^(n-3) end y^n, truncated at n_max.
CountTable series_from_digraph(const TransferDigraph& graph, int n_max, Family family);

/// Coefficients [x^k y^n] for n <= n_max by long division in y.
/// Throws Error(NegativeCoefficient) if a coefficient comes out negative.
CountTable series_expand(const RationalGF& gf, int n_max);

/// Entrywise recurrence read off the denominator, with the numerator
/// supplying the corrections for small n.
CountTable counts_by_recurrence(const RationalGF& gf, int n_max);
CountTable counts_by_recurrence(Family family, int n_max);

/// Row n of the recurrence (index k = 0..n), computed with a rolling
/// window of rows so n in the thousands stays cheap.
std::vector<mpz_class> recurrence_row(const RationalGF& gf, int n);

/// Length totals c_0..c_n from the x = 1 specialisation.
std::vector<mpz_class> length_totals_by_recurrence(const RationalGF& gf, int n);

/// C(n-k+1, 2k-n-1), zero outside the binomial's range.
mpz_class predator_closed_form(int k, int n);

/// Univariate residual (q * c)_i of a sequence c against the x = 1
/// (length axis) or y = 1 (occupancy axis) denominator. Vanishes past the
/// numerator's degree exactly when c obeys the recurrence.
std::vector<mpz_class> recurrence_residuals(const RationalGF& gf, Axis axis,
                                            const std::vector<mpz_class>& sequence);

}  // namespace riviera
