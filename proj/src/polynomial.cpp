// Copyright (c) 2026 the vortex-atlas authors
// SPDX-License-Identifier: Apache-2.0

#include "vortexatlas/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace vortex {

std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      Integer num(text.substr(0, slash));
      Integer den(text.substr(slash + 1));
      if (den == 0) return std::nullopt;
      return rat(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) {
      return Rational(Integer(text));
    }
    std::string head = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (frac.find_first_not_of("0123456789") != std::string::npos)
      return std::nullopt;
    bool negative = !head.empty() && head[0] == '-';
    if (head == "-" || head == "+" || head.empty()) head += "0";
    Integer whole(head);
    Integer scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer digits = frac.empty() ? Integer(0) : Integer(frac);
    Integer num = abs(whole) * scale + digits;
    if (negative) num = -num;
    return rat(num, scale);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::string to_string(const Rational& q) { return q.get_str(); }

Poly Poly::monomial(const Rational& c, int k) {
  if (sign(c) == 0) return Poly();
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && sign(c_.back()) == 0) c_.pop_back();
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Poly::eval_double(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + it->get_d();
  return acc;
}

int Poly::sign_at_pos_inf() const {
  return is_zero() ? 0 : sign(c_.back());
}

int Poly::sign_at_neg_inf() const {
  if (is_zero()) return 0;
  int s = sign(c_.back());
  return (degree() % 2 == 0) ? s : -s;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(long(i));
  return Poly(std::move(d));
}

Poly Poly::operator-() const {
  std::vector<Rational> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
  return Poly(std::move(v));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(v));
}

Poly Poly::operator*(const Rational& s) const {
  std::vector<Rational> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * s;
  return Poly(std::move(v));
}

Poly Poly::operator/(const Rational& s) const {
  if (sign(s) == 0) throw std::domain_error("division by zero scalar");
  return *this * Rational(1 / s);
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<Rational> rem = c_;
  int dd = d.degree();
  int rd = static_cast<int>(rem.size()) - 1;
  if (rd < dd) return {Poly(), *this};
  std::vector<Rational> quot(rd - dd + 1, Rational(0));
  const Rational& lead = d.leading();
  for (int k = rd; k >= dd; --k) {
    if (sign(rem[k]) == 0) continue;
    Rational q = rem[k] / lead;
    quot[k - dd] = q;
    for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= q * d[j];
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::divide_exact(const Poly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x / x.leading();  // monic
}

Poly Poly::square_free_part() const {
  if (is_zero()) throw std::domain_error("square-free part of zero");
  if (degree() == 0) return Poly::constant(Rational(1));
  Poly g = gcd(*this, derivative());
  return divide_exact(g).primitive_part();
}

Poly Poly::primitive_part() const {
  if (is_zero()) return *this;
  Integer den_lcm = 1;
  for (const auto& q : c_) {
    Integer d = q.get_den();
    den_lcm = lcm(den_lcm, d);
  }
  Integer num_gcd = 0;
  for (const auto& q : c_) {
    Integer scaled = q.get_num() * (den_lcm / q.get_den());
    num_gcd = ::gcd(num_gcd, scaled);
  }
  if (num_gcd == 0) return *this;
  Rational scale = rat(den_lcm, num_gcd);
  if (scale < 0) scale = -scale;
  return *this * scale;
}

Rational Poly::root_bound() const {
  if (is_zero() || degree() == 0) return Rational(1);
  Rational maxratio(0);
  const Rational lead = abs_val(leading());
  for (int i = 0; i < degree(); ++i) {
    Rational r = abs_val(c_[i]) / lead;
    if (r > maxratio) maxratio = r;
  }
  return maxratio + 1;
}

int Poly::coefficient_sign_variations() const {
  int variations = 0, prev = 0;
  for (const auto& q : c_) {
    int s = sign(q);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (sign(c_[i]) == 0) continue;
    Rational c = c_[i];
    if (first) {
      if (sign(c) < 0) out << "-";
      first = false;
    } else {
      out << (sign(c) < 0 ? " - " : " + ");
    }
    Rational a = abs_val(c);
    if (i == 0 || a != 1) out << vortex::to_string(a);
    if (i > 0) {
      if (a != 1) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

std::vector<double> to_double_coeffs(const Poly& p) {
  std::vector<double> v(p.coeffs().size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = p[i].get_d();
  return v;
}

double eval_double_coeffs(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace vortex
