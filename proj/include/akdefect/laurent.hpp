#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace akdefect {

using Rational = mpq_class;

// Laurent polynomial in one variable y with exact rational coefficients.
// Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT: integers promote naturally
  static LaurentPoly monomial(int exponent, Rational coefficient = 1);
  // y^h - 1 for any integer h (zero when h = 0)
  static LaurentPoly binomial(int exponent);
  // [h]_y = 1 + y + ... + y^{h-1}, h >= 1
  static LaurentPoly q_integer(int h);

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Rational>& terms() const { return terms_; }
  Rational coefficient(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;
  // max - min exponent; 0 for monomials
  int span() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  LaurentPoly operator-() const;

  bool operator==(const LaurentPoly& other) const { return terms_ == other.terms_; }

  // "(0, 1/1) (2, -1/1)": sorted (exponent, numerator/denominator) pairs.
  std::string serialize() const;
  static LaurentPoly deserialize(const std::string& text);
  // "1 - y^-2", "3/2*y^3 + y"
  std::string to_string() const;

 private:
  void set(int exponent, const Rational& value);
  std::map<int, Rational> terms_;
};

// q with p = q * divisor; throws InexactDivision if divisor does not divide p
// in Q[y, 1/y]. Throws InvalidArgument on a zero divisor.
LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& divisor);

// Phi_e over Q, e >= 1.
LaurentPoly cyclotomic_poly(int e);

// Largest k with Phi_e^k | p; p nonzero.
int nu_phi(const LaurentPoly& p, int e);

}  // namespace akdefect
