#include "riviera/complexity.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "riviera/error.hpp"
#include "riviera/gfcount.hpp"

namespace riviera {
namespace {

// t ln t, extended continuously to t = 0.
double xlogx(double t) { return t > 0.0 ? t * std::log(t) : 0.0; }

void require_in_support(Family family, double rho) {
  const auto sup = support(family);
  if (!sup.contains(rho)) {
    throw Error(ErrorKind::OutOfSupport, "rho = " + std::to_string(rho) + " outside (" +
                                             std::to_string(sup.lo) + ", " + std::to_string(sup.hi) +
                                             ") for " + std::string(to_string(family)));
  }
}

// A polynomial evaluated in logarithmic coordinates u = ln x, v = ln y.
struct LogPoly {
  struct Term {
    double coeff;
    int a;
    int b;
  };
  std::vector<Term> terms;

  explicit LogPoly(const BiPoly& p) {
    for (const auto& [m, c] : p.terms()) terms.push_back({c.get_d(), m.x, m.y});
  }
  double operator()(double u, double v) const {
    double sum = 0.0;
    for (const auto& t : terms) sum += t.coeff * std::exp(t.a * u + t.b * v);
    return sum;
  }
};

// Residuals and Jacobian of the KL system in (u, v).
class KlSystem {
 public:
  explicit KlSystem(const BiPoly& q)
      : q_(q),
        qx_(theta_x(q)),
        qy_(theta_y(q)),
        qxx_(theta_x(theta_x(q))),
        qxy_(theta_x(theta_y(q))),
        qyy_(theta_y(theta_y(q))) {}

  Eigen::Vector2d residual(const Eigen::Vector2d& p, double rho) const {
    return {q_(p[0], p[1]), qx_(p[0], p[1]) - rho * qy_(p[0], p[1])};
  }

  Eigen::Matrix2d jacobian(const Eigen::Vector2d& p, double rho) const {
    const double u = p[0];
    const double v = p[1];
    Eigen::Matrix2d j;
    j << qx_(u, v), qy_(u, v),
         qxx_(u, v) - rho * qxy_(u, v), qxy_(u, v) - rho * qyy_(u, v);
    return j;
  }

  // d(u, v)/d(rho) along the solution curve.
  Eigen::Vector2d tangent(const Eigen::Vector2d& p, double rho) const {
    return jacobian(p, rho).fullPivLu().solve(Eigen::Vector2d(0.0, qy_(p[0], p[1])));
  }

  double rho_at(const Eigen::Vector2d& p) const { return qx_(p[0], p[1]) / qy_(p[0], p[1]); }

 private:
  LogPoly q_, qx_, qy_, qxx_, qxy_, qyy_;
};

constexpr double kResidualTolerance = 1e-12;

// Damped Newton; returns false if the residual cannot be driven below
// the tolerance.
bool newton(const KlSystem& sys, Eigen::Vector2d& p, double rho) {
  Eigen::Vector2d r = sys.residual(p, rho);
  double norm = r.cwiseAbs().maxCoeff();
  for (int iter = 0; iter < 60; ++iter) {
    if (norm < 1e-15) return true;
    const Eigen::Vector2d step = sys.jacobian(p, rho).fullPivLu().solve(-r);
    if (!step.allFinite()) return false;
    double damping = 1.0;
    bool improved = false;
    for (int halvings = 0; halvings < 30; ++halvings, damping *= 0.5) {
      const Eigen::Vector2d trial = p + damping * step;
      const Eigen::Vector2d tr = sys.residual(trial, rho);
      const double tn = tr.cwiseAbs().maxCoeff();
      if (std::isfinite(tn) && tn < norm) {
        p = trial;
        r = tr;
        norm = tn;
        improved = true;
        break;
      }
    }
    if (!improved) break;  // at the floating-point floor
  }
  return norm < kResidualTolerance;
}

void require_kl_shape(const BiPoly& q) {
  if (q.coeff(0, 0) != 1) {
    throw Error(ErrorKind::InvalidArgument, "KL denominator must have constant term 1");
  }
  bool any = false;
  for (const auto& [m, c] : q.terms()) {
    if (m.x == 0 && m.y == 0) continue;
    if (c >= 0 || m.y == 0) {
      throw Error(ErrorKind::InvalidArgument,
                  "KL denominator must be 1 - (positive terms in y): " + to_string(q));
    }
    any = true;
  }
  if (!any) throw Error(ErrorKind::InvalidArgument, "KL denominator is constant");
}

}  // namespace

std::vector<double> SupportInterval::interior_grid(int points) const {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(std::max(points, 0)));
  for (int i = 1; i <= points; ++i) grid.push_back(lo + (hi - lo) * i / (points + 1));
  return grid;
}

SupportInterval support(Family family) {
  switch (family) {
    case Family::riviera:
    case Family::predator:
    case Family::altruist: return {1.0 / 2.0, 2.0 / 3.0};
    case Family::es: return {3.0 / 5.0, 2.0 / 3.0};
    case Family::flory: return {1.0 / 3.0, 1.0 / 2.0};
  }
  return {};
}

double s_closed(Family family, double rho) {
  if (family == Family::riviera) {
    throw Error(ErrorKind::InvalidArgument, "no closed entropy curve for the full riviera ensemble");
  }
  require_in_support(family, rho);
  switch (family) {
    case Family::predator:
    case Family::altruist: return xlogx(1 - rho) - xlogx(2 * rho - 1) - xlogx(2 - 3 * rho);
    case Family::es: return xlogx(2 * rho - 1) - xlogx(2 - 3 * rho) - xlogx(5 * rho - 3);
    case Family::flory: return xlogx(rho) - xlogx(1 - 2 * rho) - xlogx(3 * rho - 1);
    default: break;
  }
  return 0.0;
}

double s_closed_derivative(Family family, double rho) {
  if (family == Family::riviera) {
    throw Error(ErrorKind::InvalidArgument, "no closed entropy curve for the full riviera ensemble");
  }
  require_in_support(family, rho);
  switch (family) {
    case Family::predator:
    case Family::altruist:
      return -std::log(1 - rho) - 2 * std::log(2 * rho - 1) + 3 * std::log(2 - 3 * rho);
    case Family::es:
      return 2 * std::log(2 * rho - 1) + 3 * std::log(2 - 3 * rho) - 5 * std::log(5 * rho - 3);
    case Family::flory:
      return std::log(rho) + 2 * std::log(1 - 2 * rho) - 3 * std::log(3 * rho - 1);
    default: break;
  }
  return 0.0;
}

SupportInterval kl_support(const BiPoly& denominator) {
  require_kl_shape(denominator);
  SupportInterval sup{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const auto& [m, c] : denominator.terms()) {
    if (m.y == 0) continue;
    const double ratio = static_cast<double>(m.x) / m.y;
    sup.lo = std::min(sup.lo, ratio);
    sup.hi = std::max(sup.hi, ratio);
  }
  return sup;
}

double unit_x_root(const BiPoly& denominator) {
  require_kl_shape(denominator);
  const LogPoly q(denominator);
  // q(1, e^v) decreases in v from 1 at v = -inf.
  double lo = -1.0;
  while (q(0.0, lo) <= 0.0) lo *= 2.0;
  double hi = 1.0;
  while (q(0.0, hi) >= 0.0) hi *= 2.0;
  for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
    const double mid = 0.5 * (lo + hi);
    (q(0.0, mid) > 0.0 ? lo : hi) = mid;
  }
  return std::exp(0.5 * (lo + hi));
}

ComplexityPoint kl_solve(const BiPoly& denominator, double rho) {
  const auto sup = kl_support(denominator);
  if (!sup.contains(rho)) {
    throw Error(ErrorKind::OutOfSupport, "rho = " + std::to_string(rho) + " outside the KL support (" +
                                             std::to_string(sup.lo) + ", " + std::to_string(sup.hi) + ")");
  }
  const KlSystem sys(denominator);
  Eigen::Vector2d p(0.0, std::log(unit_x_root(denominator)));
  double current = sys.rho_at(p);

  double step = 0.02;
  while (current != rho) {
    const double remaining = rho - current;
    const double delta = std::abs(remaining) <= step ? remaining : std::copysign(step, remaining);
    Eigen::Vector2d trial = p + delta * sys.tangent(p, current);
    if (trial.allFinite() && newton(sys, trial, current + delta)) {
      p = trial;
      current = std::abs(remaining) <= step ? rho : current + delta;
      step = std::min(step * 1.5, 0.05);
    } else {
      step *= 0.5;
      if (step < 1e-14) {
        throw Error(ErrorKind::NoConvergence, "KL continuation stalled at rho = " + std::to_string(current));
      }
    }
  }
  if (!newton(sys, p, rho)) {
    throw Error(ErrorKind::NoConvergence, "KL Newton residual above tolerance at rho = " + std::to_string(rho));
  }
  ComplexityPoint point;
  point.rho = rho;
  point.method = ComplexityMethod::kl;
  point.x0 = std::exp(p[0]);
  point.y0 = std::exp(p[1]);
  point.s = -rho * p[0] - p[1];
  return point;
}

double log_big(const mpz_class& value) {
  if (value <= 0) throw Error(ErrorKind::InvalidArgument, "log of a non-positive count");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

std::vector<ComplexityPoint> s_empirical_curve(Family family, const std::vector<double>& rhos, int n) {
  if (n < 10) throw Error(ErrorKind::InvalidArgument, "empirical entropy needs n >= 10");
  for (double rho : rhos) {
    if (!(rho >= 0.0 && rho <= 1.0)) throw Error(ErrorKind::InvalidArgument, "rho must lie in [0, 1]");
  }
  const auto row = recurrence_row(gf_closed(family), n);
  std::vector<ComplexityPoint> out;
  out.reserve(rhos.size());
  for (double rho : rhos) {
    const int k = static_cast<int>(std::floor(rho * n + 1e-9));
    const auto& count = row[static_cast<std::size_t>(k)];
    ComplexityPoint point;
    point.rho = rho;
    point.method = ComplexityMethod::empirical;
    point.n = n;
    point.s = count == 0 ? 0.0 : log_big(count) / n;
    out.push_back(point);
  }
  return out;
}

ComplexityPoint s_empirical(Family family, double rho, int n) {
  return s_empirical_curve(family, {rho}, n).front();
}

double length_growth_log(Family family, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "growth ratio needs n >= 1");
  const auto totals = length_totals_by_recurrence(gf_closed(family), n);
  return log_big(totals[static_cast<std::size_t>(n)]) - log_big(totals[static_cast<std::size_t>(n - 1)]);
}

Equilibrium equilibrium_density(Family family) {
  if (family == Family::riviera) {
    throw Error(ErrorKind::InvalidArgument, "no closed entropy curve for the full riviera ensemble");
  }
  const auto sup = support(family);
  // The curves are strictly concave: S' runs from +inf to -inf.
  double lo = sup.lo;
  double hi = sup.hi;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (s_closed_derivative(family, mid) > 0.0 ? lo : hi) = mid;
  }
  const double rho_star = 0.5 * (lo + hi);
  return {rho_star, s_closed(family, rho_star)};
}

}  // namespace riviera
