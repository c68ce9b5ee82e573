#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <gmpxx.h>

namespace skeinhom {

/// Exact element of Z[A, A^-1] in sparse form: exponent -> nonzero coefficient.
class LaurentPoly {
 public:
  using Exponent = std::int64_t;
  using Coefficient = mpz_class;
  using TermMap = std::map<Exponent, Coefficient>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT: integers embed implicitly
  LaurentPoly(const Coefficient& constant);  // NOLINT

  static LaurentPoly monomial(Exponent exponent, const Coefficient& coefficient = 1);
  /// The variable A.
  static LaurentPoly A() { return monomial(1); }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Coefficient coefficient(Exponent exponent) const;

  /// Adds c*A^e, pruning the term if it cancels.
  void add_term(Exponent exponent, const Coefficient& coefficient);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) { return lhs.terms_ == rhs.terms_; }

  LaurentPoly pow(unsigned exponent) const;

  /// Human-readable form, descending exponent: "A^3 + 1 - 2A^-2".
  std::string to_string() const;

 private:
  TermMap terms_;
};

/// Value of a trivial circle: -A^2 - A^-2.
const LaurentPoly& circle_factor();

}  // namespace skeinhom
