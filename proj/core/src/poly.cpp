#include "mopoly/poly.hpp"

#include <sstream>

#include "mopoly/error.hpp"

namespace mopoly {

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(Rational c) {
  Poly p;
  p.coeffs_.push_back(std::move(c));
  p.trim();
  return p;
}

Poly Poly::x() { return monomial(1, 1); }

Poly Poly::monomial(int degree, Rational c) {
  if (degree < 0) throw ContractError("Poly::monomial: negative degree");
  Poly p;
  if (c != 0) {
    p.coeffs_.assign(static_cast<size_t>(degree) + 1, Rational(0));
    p.coeffs_.back() = std::move(c);
  }
  return p;
}

Rational Poly::coeff(int i) const {
  if (i < 0 || static_cast<size_t>(i) >= coeffs_.size()) return Rational(0);
  return coeffs_[static_cast<size_t>(i)];
}

Rational Poly::leading() const {
  if (is_zero()) throw ContractError("Poly::leading: zero polynomial");
  return coeffs_.back();
}

bool Poly::is_monic() const { return !is_zero() && coeffs_.back() == 1; }

Rational Poly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  *this = *this * rhs;
  return *this;
}

Poly Poly::operator-() const {
  Poly p(*this);
  for (auto& a : p.coeffs_) a = -a;
  return p;
}

Poly operator+(Poly lhs, const Poly& rhs) {
  lhs += rhs;
  return lhs;
}

Poly operator-(Poly lhs, const Poly& rhs) {
  lhs -= rhs;
  return lhs;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Poly();
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return Poly(std::move(out));
}

Poly operator*(const Rational& c, Poly p) {
  p *= c;
  return p;
}

Poly operator*(Poly p, const Rational& c) {
  p *= c;
  return p;
}

Poly Poly::times_x() const {
  if (is_zero()) return Poly();
  std::vector<Rational> out;
  out.reserve(coeffs_.size() + 1);
  out.emplace_back(0);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return Poly(std::move(out));
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Rational> out;
  out.reserve(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i)
    out.push_back(Rational(static_cast<long>(i)) * coeffs_[i]);
  return Poly(std::move(out));
}

DivRem divrem(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw ContractError("divrem: division by zero polynomial");
  Poly rem = p;
  Poly quot;
  const Rational lead = q.leading();
  const int dq = q.degree();
  while (!rem.is_zero() && rem.degree() >= dq) {
    Rational c = rem.leading() / lead;
    int shift = rem.degree() - dq;
    Poly term = Poly::monomial(shift, c);
    quot += term;
    rem -= term * q;
  }
  return {std::move(quot), std::move(rem)};
}

Poly gcd(const Poly& p, const Poly& q) {
  Poly a = p, b = q;
  while (!b.is_zero()) {
    Poly r = divrem(a, b).rem;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  Rational inv = Rational(1) / a.leading();
  return inv * a;
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw ContractError("squarefree_part: zero polynomial");
  if (p.degree() == 0) return Poly::constant(1);
  Poly g = gcd(p, p.derivative());
  Poly q = divrem(p, g).quot;
  Rational inv = Rational(1) / q.leading();
  return inv * q;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coeff(i);
    if (c == 0) continue;
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    bool unit = (mag == 1);
    if (i == 0) {
      out << to_string(mag);
    } else {
      if (!unit) out << to_string(mag) << "*";
      out << "x";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

}  // namespace mopoly
