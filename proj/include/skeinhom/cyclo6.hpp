#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "skeinhom/laurent.hpp"

namespace skeinhom {

/// a + b*zeta in Z[zeta], zeta a primitive sixth root of unity, reduced by zeta^2 = zeta - 1.
struct Cyclo6 {
  mpz_class a = 0;
  mpz_class b = 0;

  Cyclo6() = default;
  Cyclo6(mpz_class a_, mpz_class b_) : a(std::move(a_)), b(std::move(b_)) {}

  static Cyclo6 one() { return {1, 0}; }
  static Cyclo6 zeta() { return {0, 1}; }
  /// zeta^k for any integer k.
  static Cyclo6 zeta_pow(std::int64_t k);

  bool is_zero() const { return a == 0 && b == 0; }

  Cyclo6& operator+=(const Cyclo6& other);
  Cyclo6& operator-=(const Cyclo6& other);
  friend Cyclo6 operator+(Cyclo6 x, const Cyclo6& y) { return x += y; }
  friend Cyclo6 operator-(Cyclo6 x, const Cyclo6& y) { return x -= y; }
  friend Cyclo6 operator*(const Cyclo6& x, const Cyclo6& y);
  Cyclo6 operator-() const { return {-a, -b}; }
  Cyclo6 scaled(const mpz_class& k) const { return {a * k, b * k}; }

  friend bool operator==(const Cyclo6& x, const Cyclo6& y) { return x.a == y.a && x.b == y.b; }

  std::string to_string() const;
};

/// Ring homomorphism Z[A, A^-1] -> Z[zeta], A -> zeta.
Cyclo6 epsilon_scalar(const LaurentPoly& p);

}  // namespace skeinhom
