#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace cygro {

using Rational = mpq_class;
using Integer = mpz_class;

/// Dense univariate polynomial with exact rational coefficients.
/// Coefficient i of variable t^i; trailing zeros are trimmed; the zero
/// polynomial has an empty coefficient vector and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Polynomial constant(const Rational& value);
  static Polynomial from_ints(const std::vector<long>& coeffs);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& coeff(std::size_t i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational evaluate(const Rational& t) const;
  Polynomial derivative() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& s) const;
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  bool divides(const Polynomial& divisor) const;  // divisor | *this exactly

  /// Scales so the leading coefficient is 1 (zero polynomial unchanged).
  Polynomial monic() const;
  /// Scales so coefficients are coprime integers with positive leading term.
  Polynomial primitive_integer() const;

 private:
  std::vector<Rational> c_;
  void trim();
};

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);  // monic
Polynomial poly_lcm(const Polynomial& a, const Polynomial& b);

/// "[c0,c1,...]" with integer or p/q tokens, no trailing zeros.
std::string to_string(const Polynomial& p);
std::string to_string(const Rational& r);

/// Number of distinct real roots of a square-free polynomial in (lo, hi],
/// by Sturm's theorem.
int sturm_roots_in(const Polynomial& square_free, const Rational& lo, const Rational& hi);

/// Smallest real root of p in (0, upper], or nullopt. The bracket shrinks
/// until hi-lo <= width unless the root is hit exactly (lo == hi). Uses the
/// rational root theorem first, then Sturm bisection on the square-free part.
struct RootBracket {
  Rational lo, hi;
  bool exact = false;
};
std::optional<RootBracket> smallest_root_in_unit(const Polynomial& p, const Rational& width);

}  // namespace cygro
