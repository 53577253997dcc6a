// Copyright (c) 2026 the vortex-atlas authors
// SPDX-License-Identifier: Apache-2.0

#include "vortexatlas/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vortex {

BiPoly BiPoly::constant(const Rational& c) {
  BiPoly p;
  p.add_term(c, 0, 0);
  return p;
}

BiPoly BiPoly::variable(int var) {
  BiPoly p;
  p.add_term(Rational(1), var == 0 ? 1 : 0, var == 0 ? 0 : 1);
  return p;
}

BiPoly BiPoly::term(const Rational& c, int e0, int e1) {
  BiPoly p;
  p.add_term(c, e0, e1);
  return p;
}

void BiPoly::add_term(const Rational& c, int e0, int e1) {
  if (sign(c) == 0) return;
  Key k{e0, e1};
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (sign(it->second) == 0) terms_.erase(it);
  }
}

int BiPoly::degree(int var) const {
  int d = -1;
  for (const auto& [k, c] : terms_)
    d = std::max(d, var == 0 ? k.first : k.second);
  return d;
}

BiPoly BiPoly::operator-() const {
  BiPoly r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(c, k.first, k.second);
  return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly r;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_)
      r.add_term(ca * cb, ka.first + kb.first, ka.second + kb.second);
  return r;
}

BiPoly BiPoly::operator*(const Rational& s) const {
  BiPoly r;
  if (sign(s) == 0) return r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
  return r;
}

BiPoly BiPoly::pow(int n) const {
  BiPoly r = constant(Rational(1));
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

BiPoly BiPoly::derivative(int var) const {
  BiPoly r;
  for (const auto& [k, c] : terms_) {
    int e = var == 0 ? k.first : k.second;
    if (e == 0) continue;
    r.add_term(c * Rational(e), var == 0 ? k.first - 1 : k.first,
               var == 0 ? k.second : k.second - 1);
  }
  return r;
}

std::vector<Poly> BiPoly::coefficients_in(int var) const {
  int d = degree(var);
  if (d < 0) return {};
  int other_d = degree(1 - var);
  std::vector<std::vector<Rational>> rows(
      d + 1, std::vector<Rational>(other_d + 1, Rational(0)));
  for (const auto& [k, c] : terms_) {
    int e = var == 0 ? k.first : k.second;
    int f = var == 0 ? k.second : k.first;
    rows[e][f] = c;
  }
  std::vector<Poly> out;
  out.reserve(d + 1);
  for (auto& row : rows) out.emplace_back(std::move(row));
  return out;
}

Poly BiPoly::substitute(int var, const Rational& value) const {
  auto coeffs = coefficients_in(var);
  Poly acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * value + *it;
  return acc;
}

double BiPoly::eval_double(double x0, double x1) const {
  double acc = 0.0;
  for (const auto& [k, c] : terms_) {
    double t = c.get_d();
    for (int i = 0; i < k.first; ++i) t *= x0;
    for (int i = 0; i < k.second; ++i) t *= x1;
    acc += t;
  }
  return acc;
}

std::optional<BiPoly> BiPoly::divide_exact_in(int main_var,
                                              const BiPoly& divisor) const {
  int dd = divisor.degree(main_var);
  if (dd < 0) return std::nullopt;
  auto div_coeffs = divisor.coefficients_in(main_var);
  const Poly& lead = div_coeffs[dd];
  if (lead.degree() != 0) return std::nullopt;  // leading coeff must be const
  Rational lead_c = lead[0];

  auto rem_coeffs = coefficients_in(main_var);
  int rd = static_cast<int>(rem_coeffs.size()) - 1;
  if (rd < dd) return is_zero() ? std::optional<BiPoly>(BiPoly()) : std::nullopt;

  std::vector<Poly> quot(rd - dd + 1);
  for (int k = rd; k >= dd; --k) {
    Poly q = rem_coeffs[k] / lead_c;
    quot[k - dd] = q;
    for (int j = 0; j <= dd; ++j)
      rem_coeffs[k - dd + j] = rem_coeffs[k - dd + j] - q * div_coeffs[j];
  }
  for (int j = 0; j < dd; ++j)
    if (!rem_coeffs[j].is_zero()) return std::nullopt;

  BiPoly result;
  for (size_t e = 0; e < quot.size(); ++e)
    for (int f = 0; f <= quot[e].degree(); ++f)
      result.add_term(quot[e][f], main_var == 0 ? int(e) : f,
                      main_var == 0 ? f : int(e));
  return result;
}

BiPoly BiPoly::primitive_part() const {
  if (is_zero()) return *this;
  Integer den_lcm = 1;
  for (const auto& [k, c] : terms_) {
    Integer d = c.get_den();
    den_lcm = lcm(den_lcm, d);
  }
  Integer num_gcd = 0;
  for (const auto& [k, c] : terms_)
    num_gcd = ::gcd(num_gcd, Integer(c.get_num() * (den_lcm / c.get_den())));
  Rational scale = rat(den_lcm, num_gcd);
  if (scale < 0) scale = -scale;
  return *this * scale;
}

std::string BiPoly::to_string(const std::string& v0,
                              const std::string& v1) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    if (first) {
      if (sign(c) < 0) out << "-";
      first = false;
    } else {
      out << (sign(c) < 0 ? " - " : " + ");
    }
    Rational a = abs_val(c);
    bool has_var = k.first > 0 || k.second > 0;
    if (!has_var || a != 1) out << vortex::to_string(a);
    if (k.first > 0) {
      out << v0;
      if (k.first > 1) out << "^" << k.first;
    }
    if (k.second > 0) {
      out << v1;
      if (k.second > 1) out << "^" << k.second;
    }
  }
  return out.str();
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const size_t n = m.size();
  if (n == 0) return Rational(1);
  // Bareiss fraction-free elimination.
  Rational denom(1);
  int sign_flips = 0;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (sign(m[k][k]) == 0) {
      size_t pivot = k + 1;
      while (pivot < n && sign(m[pivot][k]) == 0) ++pivot;
      if (pivot == n) return Rational(0);
      std::swap(m[k], m[pivot]);
      ++sign_flips;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / denom;
      }
      m[i][k] = 0;
    }
    denom = m[k][k];
  }
  Rational det = m[n - 1][n - 1];
  return (sign_flips % 2) ? Rational(-det) : det;
}

Poly interpolate(const std::vector<Rational>& xs,
                 const std::vector<Rational>& ys) {
  const size_t n = xs.size();
  // Newton form for O(n^2) exact interpolation.
  std::vector<Rational> coef = ys;
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i)
      coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
  Poly result = Poly::constant(coef[n - 1]);
  for (size_t i = n - 1; i-- > 0;) {
    Poly lin({-xs[i], Rational(1)});
    result = result * lin + Poly::constant(coef[i]);
  }
  return result;
}

Poly resultant(const BiPoly& f, const BiPoly& g, int var) {
  const int m = f.degree(var);
  const int n = g.degree(var);
  if (m <= 0 || n <= 0)
    throw std::domain_error(
        "resultant: inputs must have positive degree in the eliminated "
        "variable");
  const int keep = 1 - var;
  auto fc = f.coefficients_in(var);
  auto gc = g.coefficients_in(var);
  const Poly& flead = fc[m];
  const Poly& glead = gc[n];

  // Degree bound for the resultant in the kept variable.
  const int bound = m * g.degree(keep) + n * f.degree(keep);
  const size_t samples = static_cast<size_t>(bound + 1);

  std::vector<Rational> xs, ys;
  xs.reserve(samples);
  ys.reserve(samples);
  long t = 0;
  while (xs.size() < samples) {
    Rational x(t);
    // Degree drops would make the specialized Sylvester determinant
    // disagree with the specialized resultant; skip those points.
    if (flead.sign_at(x) != 0 && glead.sign_at(x) != 0) {
      const size_t dim = static_cast<size_t>(m + n);
      std::vector<std::vector<Rational>> syl(
          dim, std::vector<Rational>(dim, Rational(0)));
      for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j)
          syl[row][row + (m - j)] = fc[j].eval(x);
      for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j)
          syl[n + row][row + (n - j)] = gc[j].eval(x);
      xs.push_back(x);
      ys.push_back(determinant(std::move(syl)));
    }
    t = (t <= 0) ? 1 - t : -t;  // 0, 1, -1, 2, -2, ...
  }
  return interpolate(xs, ys);
}

}  // namespace vortex
