#include "riviera/bipoly.hpp"

#include <sstream>

namespace riviera {

BiPoly exact_divide(BiPoly a, const BiPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  const auto [lead_m, lead_c] = b.leading();
  BiPoly quotient;
  while (!a.is_zero()) {
    const auto [m, c] = a.leading();
    const Monomial shift{m.x - lead_m.x, m.y - lead_m.y};
    if (shift.x < 0 || shift.y < 0 || !mpz_divisible_p(c.get_mpz_t(), lead_c.get_mpz_t())) {
      throw std::domain_error("polynomial division is not exact");
    }
    const BiPoly term(mpz_class(c / lead_c), shift);
    quotient += term;
    a -= term * b;
  }
  return quotient;
}

std::string to_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    mpz_class magnitude = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool bare = m.x == 0 && m.y == 0;
    if (magnitude != 1 || bare) {
      out << magnitude.get_str();
      if (!bare) out << '*';
    }
    bool need_star = false;
    if (m.x > 0) {
      out << 'x';
      if (m.x > 1) out << '^' << m.x;
      need_star = true;
    }
    if (m.y > 0) {
      if (need_star) out << '*';
      out << 'y';
      if (m.y > 1) out << '^' << m.y;
    }
  }
  return out.str();
}

}  // namespace riviera
