#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace riviera {

/// Exponent pair (deg_x, deg_y). x marks a house, y marks a lot.
struct Monomial {
  int x = 0;
  int y = 0;

  // y-major order: the series engines walk lengths first.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Sparse bivariate polynomial over a coefficient ring. Zero coefficients
/// are never stored, so structural equality is polynomial equality.
template <typename Coeff>
class BasicBiPoly {
 public:
  using Terms = std::map<Monomial, Coeff>;

  BasicBiPoly() = default;
  BasicBiPoly(int constant) { add_term({0, 0}, Coeff(constant)); }  // NOLINT: Eigen needs Scalar(0)
  BasicBiPoly(const Coeff& coeff, Monomial m) { add_term(m, coeff); }

  static BasicBiPoly monomial(int dx, int dy, const Coeff& coeff = Coeff(1)) {
    return BasicBiPoly(coeff, Monomial{dx, dy});
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Coeff coeff(int dx, int dy) const {
    auto it = terms_.find(Monomial{dx, dy});
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(Monomial m, const Coeff& c) {
    if (m.x < 0 || m.y < 0) throw std::invalid_argument("negative exponent in BiPoly term");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Largest term in y-major order.
  std::pair<Monomial, Coeff> leading() const { return *terms_.rbegin(); }

  int degree_x() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.x);
    return d;
  }
  int degree_y() const { return terms_.empty() ? 0 : terms_.rbegin()->first.y; }

  BasicBiPoly& operator+=(const BasicBiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  BasicBiPoly& operator-=(const BasicBiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  BasicBiPoly& operator*=(const BasicBiPoly& o) { return *this = *this * o; }

  friend BasicBiPoly operator+(BasicBiPoly a, const BasicBiPoly& b) { return a += b; }
  friend BasicBiPoly operator-(BasicBiPoly a, const BasicBiPoly& b) { return a -= b; }
  friend BasicBiPoly operator-(const BasicBiPoly& a) {
    BasicBiPoly out;
    for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
    return out;
  }
  friend BasicBiPoly operator*(const BasicBiPoly& a, const BasicBiPoly& b) {
    BasicBiPoly out;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) out.add_term({ma.x + mb.x, ma.y + mb.y}, Coeff(ca * cb));
    }
    return out;
  }
  friend bool operator==(const BasicBiPoly& a, const BasicBiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BasicBiPoly& a, const BasicBiPoly& b) { return !(a == b); }

 private:
  Terms terms_;
};

using BiPoly = BasicBiPoly<mpz_class>;

inline const BiPoly kX = BiPoly::monomial(1, 0);
inline const BiPoly kY = BiPoly::monomial(0, 1);

/// x^dx y^dy with coefficient c; reads close to the printed formulas.
inline BiPoly xy(int dx, int dy, long c = 1) { return BiPoly::monomial(dx, dy, mpz_class(c)); }

/// Euler operator x d/dx: scales each term by its x-degree.
template <typename Coeff>
BasicBiPoly<Coeff> theta_x(const BasicBiPoly<Coeff>& p) {
  BasicBiPoly<Coeff> out;
  for (const auto& [m, c] : p.terms()) out.add_term(m, Coeff(c * m.x));
  return out;
}

/// Euler operator y d/dy.
template <typename Coeff>
BasicBiPoly<Coeff> theta_y(const BasicBiPoly<Coeff>& p) {
  BasicBiPoly<Coeff> out;
  for (const auto& [m, c] : p.terms()) out.add_term(m, Coeff(c * m.y));
  return out;
}

namespace detail {
template <typename T>
T coeff_as(const mpz_class& c) {
  return static_cast<T>(c.get_d());
}
template <typename T>
T coeff_as(const T& c) {
  return c;
}
}  // namespace detail

template <typename T, typename Coeff>
T evaluate(const BasicBiPoly<Coeff>& p, T x, T y) {
  T sum(0);
  for (const auto& [m, c] : p.terms()) {
    sum += detail::coeff_as<T>(c) * std::pow(x, m.x) * std::pow(y, m.y);
  }
  return sum;
}

/// Coefficients of p(1, y) indexed by y-degree (or p(x, 1) by x-degree).
template <typename Coeff>
std::vector<Coeff> at_x_one(const BasicBiPoly<Coeff>& p) {
  std::vector<Coeff> out(static_cast<std::size_t>(p.degree_y() + 1), Coeff(0));
  for (const auto& [m, c] : p.terms()) out[static_cast<std::size_t>(m.y)] += c;
  return out;
}
template <typename Coeff>
std::vector<Coeff> at_y_one(const BasicBiPoly<Coeff>& p) {
  std::vector<Coeff> out(static_cast<std::size_t>(p.degree_x() + 1), Coeff(0));
  for (const auto& [m, c] : p.terms()) out[static_cast<std::size_t>(m.x)] += c;
  return out;
}

/// Quotient of an exact division a / b over Z[x,y]. Throws
/// std::domain_error if b does not divide a.
BiPoly exact_divide(BiPoly a, const BiPoly& b);

/// Human-readable form, e.g. "1 - x*y^2 - x^2*y^3" (terms in y-major order).
std::string to_string(const BiPoly& p);

}  // namespace riviera

namespace Eigen {

template <>
struct NumTraits<riviera::BiPoly> : GenericNumTraits<riviera::BiPoly> {
  using Real = riviera::BiPoly;
  using NonInteger = riviera::BiPoly;
  using Literal = riviera::BiPoly;
  using Nested = riviera::BiPoly;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 200,
  };
};

}  // namespace Eigen

namespace riviera {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using PolyMatrix = Matrix<BiPoly>;
using PolyVector = Vector<BiPoly>;

}  // namespace riviera
