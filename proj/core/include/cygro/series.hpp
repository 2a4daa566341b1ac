#pragma once

#include <span>
#include <string>
#include <vector>

#include "cygro/polynomial.hpp"

namespace cygro {

/// An exact rational generating function P(t)/Q(t), normalized so Q(0) = 1
/// and gcd(P, Q) = 1, together with the prefix of coefficients that was
/// verified against an independent oracle.
class RationalSeries {
 public:
  RationalSeries() : den_(Polynomial::constant(Rational(1))) {}
  /// Reduces and normalizes; throws InputError when den(0) = 0.
  static RationalSeries from_fraction(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  const std::vector<Rational>& verified_prefix() const { return prefix_; }
  void set_verified_prefix(std::vector<Rational> prefix);

  /// First n Taylor coefficients.
  std::vector<Rational> expand(std::size_t n) const;

  RationalSeries operator+(const RationalSeries& o) const;
  RationalSeries operator*(const RationalSeries& o) const;
  /// Multiplication by (1 - t) turns a cumulative series into its increments;
  /// division goes the other way (sphere <-> ball).
  RationalSeries times_one_minus_t() const;
  RationalSeries over_one_minus_t() const;
  RationalSeries scaled(const Rational& s) const;
  RationalSeries shifted(std::uint32_t power) const;  // multiply by t^power

  /// Equality as rational functions (cross multiplication).
  bool same_function(const RationalSeries& o) const;

 private:
  Polynomial num_;
  Polynomial den_;
  std::vector<Rational> prefix_;
};

/// `num=[...] den=[...] prefix=[...]` with integer or p/q tokens.
std::string to_string(const RationalSeries& s);

/// Fits the minimal-order linear recurrence that generates `terms`
/// (Berlekamp-Massey style, exact arithmetic) and returns the reduced
/// rational function whose expansion reproduces every supplied term.
///
/// Requires terms.size() >= 2*max_order + 2; the result is guaranteed
/// correct whenever the true generating function has denominator degree
/// <= max_order (e.g. max_order >= automaton state count, since the
/// denominator divides det(Id - A t)). Throws InputError when no
/// recurrence of order <= max_order fits.
RationalSeries series_from_sequence(std::span<const Rational> terms, std::uint32_t max_order);

std::vector<Rational> to_rationals(const std::vector<Integer>& v);

}  // namespace cygro
