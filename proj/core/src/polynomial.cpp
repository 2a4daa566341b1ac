#include "cygro/polynomial.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "cygro/errors.hpp"

namespace cygro {

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::constant(const Rational& value) {
  return Polynomial(std::vector<Rational>{value});
}

Polynomial Polynomial::from_ints(const std::vector<long>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return Polynomial(std::move(c));
}

const Rational& Polynomial::coeff(std::size_t i) const {
  static const Rational zero(0);
  return i < c_.size() ? c_[i] : zero;
}

Rational Polynomial::evaluate(const Rational& t) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Rational& s) const {
  std::vector<Rational> r = c_;
  for (auto& v : r) v *= s;
  return Polynomial(std::move(r));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw InputError("polynomial division by zero");
  std::vector<Rational> rem = c_;
  std::vector<Rational> quot;
  const int dd = divisor.degree();
  const Rational& lead = divisor.c_.back();
  while (static_cast<int>(rem.size()) - 1 >= dd) {
    Rational q = rem.back() / lead;
    std::size_t shift = rem.size() - 1 - static_cast<std::size_t>(dd);
    if (quot.size() < shift + 1) quot.resize(shift + 1, Rational(0));
    quot[shift] = q;
    for (int i = 0; i <= dd; ++i) rem[shift + static_cast<std::size_t>(i)] -= q * divisor.c_[static_cast<std::size_t>(i)];
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (rem.size() <= static_cast<std::size_t>(dd)) break;
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

bool Polynomial::divides(const Polynomial& divisor) const {
  if (is_zero()) return true;
  return divmod(divisor).second.is_zero();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return *this * (Rational(1) / c_.back());
}

Polynomial Polynomial::primitive_integer() const {
  if (is_zero()) return {};
  Integer den_lcm(1);
  for (const auto& q : c_) {
    Integer d = q.get_den();
    Integer g;
    mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    den_lcm = den_lcm / g * d;
  }
  std::vector<Rational> ints;
  ints.reserve(c_.size());
  Integer content(0);
  for (const auto& q : c_) {
    Integer v = q.get_num() * (den_lcm / q.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.emplace_back(v);
  }
  Polynomial p(std::move(ints));
  p = p * Rational(1, content);
  if (p.c_.back() < 0) p = p * Rational(-1);
  return p;
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Polynomial g = poly_gcd(a, b);
  return (a * b).divmod(g).first;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Polynomial& p) {
  std::string out = "[";
  const auto& c = p.coeffs();
  if (c.empty()) out += "0";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += to_string(c[i]);
  }
  out += "]";
  return out;
}

namespace {

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  std::vector<Polynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    const Polynomial& a = chain[chain.size() - 2];
    const Polynomial& b = chain.back();
    Polynomial r = a.divmod(b).second * Rational(-1);
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_changes(const std::vector<Polynomial>& chain, const Rational& t) {
  int changes = 0, prev = 0;
  for (const auto& p : chain) {
    Rational v = p.evaluate(t);
    int s = sgn(v);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

int sturm_roots_in(const Polynomial& square_free, const Rational& lo, const Rational& hi) {
  auto chain = sturm_chain(square_free);
  return sign_changes(chain, lo) - sign_changes(chain, hi);
}

std::optional<RootBracket> smallest_root_in_unit(const Polynomial& p, const Rational& width) {
  if (p.is_zero()) throw InputError("smallest_root_in_unit: zero polynomial");
  Polynomial sf = p.divmod(poly_gcd(p, p.derivative())).first;  // square-free part
  if (sf.coeff(0) == 0) {
    // t = 0 is a (simple, by square-freeness) root but lies outside (0, 1]
    std::vector<Rational> shifted(sf.coeffs().begin() + 1, sf.coeffs().end());
    sf = Polynomial(std::move(shifted));
    if (sf.degree() < 1) return std::nullopt;
  }

  // Exact rational roots in (0, 1] via the rational root theorem, deflated so
  // that Sturm evaluation below never lands on a root. The divisor scan is
  // skipped when the integer coefficients are too large for it; then only
  // t = 1 (the common polynomial-growth root) is tried exactly.
  std::optional<Rational> exact_min;
  auto note_exact = [&](const Rational& r) {
    if (!exact_min || r < *exact_min) exact_min = r;
  };
  auto deflate = [&](const Rational& r) {
    Polynomial factor(std::vector<Rational>{-r, Rational(1)});
    sf = sf.divmod(factor).first;
  };
  Polynomial pi = sf.primitive_integer();
  Integer a0 = pi.coeff(0).get_num();
  Integer ad = pi.coeffs().back().get_num();
  mpz_abs(a0.get_mpz_t(), a0.get_mpz_t());
  mpz_abs(ad.get_mpz_t(), ad.get_mpz_t());
  if (a0 <= 4096 && ad <= 4096) {
    for (Integer n(1); n <= a0; ++n) {
      if (a0 % n != 0) continue;
      for (Integer d(1); d <= ad; ++d) {
        if (ad % d != 0) continue;
        Rational cand(n, d);
        cand.canonicalize();
        if (cand > 1 || pi.evaluate(cand) != 0) continue;
        note_exact(cand);
        if (sf.evaluate(cand) == 0) deflate(cand);
      }
    }
  } else if (sf.evaluate(Rational(1)) == 0) {
    note_exact(Rational(1));
    deflate(Rational(1));
  }

  if (sf.degree() >= 1) {
    Rational upper = exact_min ? *exact_min : Rational(1);
    if (sturm_roots_in(sf, Rational(0), upper) > 0) {
      // Bisect for the smallest remaining root: invariant count(0, hi] >= 1.
      Rational lo(0), hi = upper;
      while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        if (sf.evaluate(mid) == 0) {
          // a rational root the divisor scan did not cover
          note_exact(mid);
          deflate(mid);
          if (sturm_roots_in(sf, Rational(0), mid) > 0) {
            hi = mid;
            continue;
          }
          return RootBracket{mid, mid, true};
        }
        if (sturm_roots_in(sf, Rational(0), mid) > 0)
          hi = mid;
        else
          lo = mid;
      }
      return RootBracket{lo, hi, false};
    }
  }
  if (exact_min) return RootBracket{*exact_min, *exact_min, true};
  return std::nullopt;
}

}  // namespace cygro
