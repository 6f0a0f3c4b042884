#pragma once

#include <optional>
#include <vector>

#include "riviera/bipoly.hpp"
#include "riviera/family.hpp"

namespace riviera {

enum class ComplexityMethod { closed, kl, empirical };

/// One sample of a configurational-entropy curve, in nats per lot.
struct ComplexityPoint {
  double rho = 0.0;
  double s = 0.0;
  std::optional<double> x0;  // kl only
  std::optional<double> y0;  // kl only
  ComplexityMethod method = ComplexityMethod::closed;
  int n = 0;  // empirical only
};

/// Open density interval on which the entropy is positive.
struct SupportInterval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double rho) const { return rho > lo && rho < hi; }
  /// `points` equally spaced interior densities lo + (hi-lo) i/(points+1).
  std::vector<double> interior_grid(int points) const;
};

SupportInterval support(Family family);

/// Closed-form entropy curves for predator, altruist (same curve), es and
/// flory. Error(OutOfSupport) outside the open support; riviera has no
/// closed form here (Error(InvalidArgument)).
double s_closed(Family family, double rho);
double s_closed_derivative(Family family, double rho);

/// KL route: solve q(x0, y0) = 0 and rho = (x q_x)/(y q_y) at (x0, y0),
/// then S = -rho ln x0 - ln y0.
///
/// q must be 1 minus a polynomial with positive coefficients (the shape
/// of every shipped denominator); its support is (min a/b, max a/b) over
/// the terms x^a y^b. Newton runs in (ln x, ln y) with continuation in
/// rho from the equilibrium point x0 = 1.
ComplexityPoint kl_solve(const BiPoly& denominator, double rho);

/// Support of the KL curve for a denominator of the shape above.
SupportInterval kl_support(const BiPoly& denominator);

/// Positive root of q(1, y) = 0.
double unit_x_root(const BiPoly& denominator);

/// ln(J_{floor(rho n), n}) / n from exact recurrence counts; 0 when the
/// count vanishes. n >= 10.
ComplexityPoint s_empirical(Family family, double rho, int n);

/// s_empirical at every rho, sharing one recurrence row.
std::vector<ComplexityPoint> s_empirical_curve(Family family, const std::vector<double>& rhos, int n);

/// Natural log of a big integer to double accuracy, without overflow.
double log_big(const mpz_class& value);

/// ln(c_n / c_{n-1}) for the family's length totals.
double length_growth_log(Family family, int n);

struct Equilibrium {
  double rho_star = 0.0;
  double s_star = 0.0;
};

/// Maximiser of the closed-form curve, by bisection on its derivative.
Equilibrium equilibrium_density(Family family);

}  // namespace riviera
