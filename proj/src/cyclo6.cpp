#include "skeinhom/cyclo6.hpp"

#include <array>

namespace skeinhom {

Cyclo6 Cyclo6::zeta_pow(std::int64_t k) {
  static const std::array<std::array<int, 2>, 6> powers = {{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};
  auto r = static_cast<std::size_t>(((k % 6) + 6) % 6);
  return {powers[r][0], powers[r][1]};
}

Cyclo6& Cyclo6::operator+=(const Cyclo6& other) {
  a += other.a;
  b += other.b;
  return *this;
}

Cyclo6& Cyclo6::operator-=(const Cyclo6& other) {
  a -= other.a;
  b -= other.b;
  return *this;
}

// (a + b z)(c + d z) = ac + (ad + bc) z + bd z^2, z^2 = z - 1
Cyclo6 operator*(const Cyclo6& x, const Cyclo6& y) {
  mpz_class bd = x.b * y.b;
  return {x.a * y.a - bd, x.a * y.b + x.b * y.a + bd};
}

std::string Cyclo6::to_string() const {
  if (b == 0) return a.get_str();
  std::string zeta_part = (b == 1 ? "" : b == -1 ? "-" : b.get_str()) + std::string("ζ");
  if (a == 0) return zeta_part;
  if (b < 0) return a.get_str() + " - " + (b == -1 ? std::string("") : mpz_class(-b).get_str()) + "ζ";
  return a.get_str() + " + " + zeta_part;
}

Cyclo6 epsilon_scalar(const LaurentPoly& p) {
  Cyclo6 out;
  for (const auto& [e, c] : p.terms()) out += Cyclo6::zeta_pow(e).scaled(c);
  return out;
}

}  // namespace skeinhom
