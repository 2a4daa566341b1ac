#include "cygro/series.hpp"

#include <algorithm>

#include "cygro/errors.hpp"

namespace cygro {

RationalSeries RationalSeries::from_fraction(Polynomial num, Polynomial den) {
  if (den.coeff(0) == 0) throw InputError("series denominator vanishes at t = 0");
  RationalSeries s;
  if (num.is_zero()) {
    s.num_ = Polynomial{};
    s.den_ = Polynomial::constant(Rational(1));
    return s;
  }
  Polynomial g = poly_gcd(num, den);
  if (g.degree() >= 1) {
    num = num.divmod(g).first;
    den = den.divmod(g).first;
  }
  Rational scale = Rational(1) / den.coeff(0);
  s.num_ = num * scale;
  s.den_ = den * scale;
  return s;
}

void RationalSeries::set_verified_prefix(std::vector<Rational> prefix) {
  prefix_ = std::move(prefix);
  std::vector<Rational> got = expand(prefix_.size());
  for (std::size_t i = 0; i < prefix_.size(); ++i)
    if (got[i] != prefix_[i])
      throw VerificationError("series coefficient " + std::to_string(i) +
                              " does not match its verified prefix: series gives " +
                              to_string(got[i]) + ", oracle says " + to_string(prefix_[i]));
}

std::vector<Rational> RationalSeries::expand(std::size_t n) const {
  // c_n = num_n - sum_{i>=1} den_i c_{n-i}; den_0 = 1 by normalization
  std::vector<Rational> c(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    Rational acc = num_.coeff(i);
    for (std::size_t j = 1; j <= std::min<std::size_t>(i, static_cast<std::size_t>(std::max(0, den_.degree()))); ++j)
      acc -= den_.coeff(j) * c[i - j];
    c[i] = acc;
  }
  return c;
}

RationalSeries RationalSeries::operator+(const RationalSeries& o) const {
  return from_fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalSeries RationalSeries::operator*(const RationalSeries& o) const {
  return from_fraction(num_ * o.num_, den_ * o.den_);
}

RationalSeries RationalSeries::times_one_minus_t() const {
  Polynomial one_minus_t = Polynomial::from_ints({1, -1});
  return from_fraction(num_ * one_minus_t, den_);
}

RationalSeries RationalSeries::over_one_minus_t() const {
  Polynomial one_minus_t = Polynomial::from_ints({1, -1});
  return from_fraction(num_, den_ * one_minus_t);
}

RationalSeries RationalSeries::scaled(const Rational& s) const {
  return from_fraction(num_ * s, den_);
}

RationalSeries RationalSeries::shifted(std::uint32_t power) const {
  std::vector<Rational> t_pow(power + 1, Rational(0));
  t_pow[power] = 1;
  return from_fraction(num_ * Polynomial(std::move(t_pow)), den_);
}

bool RationalSeries::same_function(const RationalSeries& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

std::string to_string(const RationalSeries& s) {
  std::string out = "num=" + to_string(s.num()) + " den=" + to_string(s.den()) + " prefix=[";
  const auto& p = s.verified_prefix();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += to_string(p[i]);
  }
  out += "]";
  return out;
}

namespace {

/// Is there q_1..q_L with c_n = sum q_i c_{n-i} for all L <= n < T?
/// Exact Gaussian elimination on the (T-L) x L linear system.
std::optional<std::vector<Rational>> fit_recurrence(std::span<const Rational> c, std::size_t L) {
  const std::size_t rows = c.size() - L;
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(L + 1, Rational(0)));
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t n = L + r;
    for (std::size_t i = 1; i <= L; ++i) m[r][i - 1] = c[n - i];
    m[r][L] = c[n];
  }
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < L && rank < rows; ++col) {
    std::size_t sel = rows;
    for (std::size_t r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        sel = r;
        break;
      }
    if (sel == rows) continue;
    std::swap(m[rank], m[sel]);
    Rational inv = Rational(1) / m[rank][col];
    for (auto& v : m[rank]) v *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t k = col; k <= L; ++k) m[r][k] -= f * m[rank][k];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (m[r][L] != 0) return std::nullopt;  // inconsistent
  std::vector<Rational> q(L, Rational(0));  // free variables fixed at zero
  for (std::size_t r = 0; r < rank; ++r) q[pivot_col[r]] = m[r][L];
  // back-substitute the free-variable columns (already eliminated above since
  // we used full row reduction)
  return q;
}

}  // namespace

RationalSeries series_from_sequence(std::span<const Rational> terms, std::uint32_t max_order) {
  if (terms.size() < 2 * static_cast<std::size_t>(max_order) + 2)
    throw InputError("series_from_sequence needs at least 2*max_order+2 = " +
                     std::to_string(2 * max_order + 2) + " terms, got " +
                     std::to_string(terms.size()));
  for (std::uint32_t L = 0; L <= max_order; ++L) {
    auto q = fit_recurrence(terms, L);
    if (!q) continue;
    // Q(t) = 1 - q_1 t - ... - q_L t^L; P = (Q * C) truncated below t^L.
    std::vector<Rational> qc(L + 1, Rational(0));
    qc[0] = 1;
    for (std::size_t i = 1; i <= L; ++i) qc[i] = -(*q)[i - 1];
    Polynomial den((std::vector<Rational>(qc)));
    std::vector<Rational> num_c(L, Rational(0));
    for (std::size_t n = 0; n < L; ++n) {
      Rational acc(0);
      for (std::size_t i = 0; i <= std::min<std::size_t>(n, L); ++i) acc += qc[i] * terms[n - i];
      num_c[n] = acc;
    }
    RationalSeries s = RationalSeries::from_fraction(Polynomial(std::move(num_c)), den);
    // must reproduce every supplied term (holds by construction; re-checked
    // cheaply because it is the contract)
    std::vector<Rational> back = s.expand(terms.size());
    bool ok = true;
    for (std::size_t i = 0; i < terms.size(); ++i)
      if (back[i] != terms[i]) {
        ok = false;
        break;
      }
    if (ok) return s;
  }
  throw InputError("no linear recurrence of order <= " + std::to_string(max_order) +
                   " fits the supplied terms (insufficient terms or non-rational sequence)");
}

std::vector<Rational> to_rationals(const std::vector<Integer>& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& z : v) out.emplace_back(z);
  return out;
}

}  // namespace cygro
