// Copyright (c) 2026 the vortex-atlas authors
// SPDX-License-Identifier: Apache-2.0

#include "vortexatlas/sturm.hpp"

#include <algorithm>
#include <stdexcept>

namespace vortex {

namespace {

int variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

int variations_at(const std::vector<Poly>& chain, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) signs.push_back(p.sign_at(x));
  return variations(signs);
}

int variations_at(const std::vector<Poly>& chain, const ExtendedRational& x) {
  if (x.is_finite()) return variations_at(chain, x.value);
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain)
    signs.push_back(x.kind == ExtendedRational::Kind::PosInf
                        ? p.sign_at_pos_inf()
                        : p.sign_at_neg_inf());
  return variations(signs);
}

// Sturm count on a prebuilt chain over (lo, hi].
int chain_count(const std::vector<Poly>& chain, const ExtendedRational& lo,
                const ExtendedRational& hi) {
  return variations_at(chain, lo) - variations_at(chain, hi);
}

}  // namespace

std::vector<Poly> sturm_sequence(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("Sturm sequence of zero");
  std::vector<Poly> chain;
  chain.push_back(p);
  if (p.degree() == 0) return chain;
  chain.push_back(p.derivative());
  while (chain.back().degree() > 0) {
    Poly r = chain[chain.size() - 2].divmod(chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int count_real_roots(const Poly& p, const ExtendedRational& lo,
                     const ExtendedRational& hi) {
  if (p.is_zero()) throw std::domain_error("root count of zero polynomial");
  if (lo.is_finite() && hi.is_finite() && !(lo.value < hi.value))
    throw std::domain_error("empty interval");
  if (p.degree() == 0) return 0;
  auto chain = sturm_sequence(p.square_free_part());
  return chain_count(chain, lo, hi);
}

int count_real_roots(const Poly& p) {
  return count_real_roots(p, ExtendedRational::neg_inf(),
                          ExtendedRational::pos_inf());
}

namespace {

struct Isolator {
  std::vector<Poly> chain;   // Sturm chain of the square-free part
  const Poly* q = nullptr;   // square-free part
  std::vector<RootInterval> out;

  int count(const Rational& lo, const Rational& hi) const {
    return variations_at(chain, lo) - variations_at(chain, hi);
  }

  // Requires q(lo) != 0.  Emits intervals with non-root endpoints.
  void split(const Rational& lo, const Rational& hi, int n) {
    if (n == 0) return;
    if (n == 1 && q->sign_at(hi) != 0) {
      out.push_back({lo, hi, 1});
      return;
    }
    Rational mid = (lo + hi) / 2;
    if (q->sign_at(mid) == 0) {
      // Exact root at the midpoint: fence it off with a shrinking collar.
      Rational delta = (hi - lo) / 4;
      while (q->sign_at(mid - delta) == 0 || q->sign_at(mid + delta) == 0 ||
             count(mid - delta, mid + delta) != 1) {
        delta /= 2;
      }
      int left = count(lo, mid - delta);
      split(lo, mid - delta, left);
      out.push_back({mid - delta, mid + delta, 1});
      int right = count(mid + delta, hi);
      split(mid + delta, hi, right);
      return;
    }
    int left = count(lo, mid);
    split(lo, mid, left);
    split(mid, hi, n - left);
  }
};

}  // namespace

std::vector<RootInterval> isolate_roots(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("cannot isolate roots of zero");
  if (p.degree() == 0) return {};
  Poly q = p.square_free_part();
  if (q.degree() == 0) return {};

  Isolator iso;
  iso.chain = sturm_sequence(q);
  iso.q = &q;
  Rational bound = q.root_bound();
  int total = iso.count(-bound, bound);
  iso.split(-bound, bound, total);
  std::sort(iso.out.begin(), iso.out.end(),
            [](const RootInterval& a, const RootInterval& b) {
              return a.lo < b.lo;
            });

  // Multiplicity hints from the iterated gcd chain: a root of multiplicity
  // m in p survives in gcd(p, p'), gcd of that with its derivative, and so
  // on m-1 times.
  std::vector<Poly> gcd_chain;
  Poly d = Poly::gcd(p, p.derivative());
  while (d.degree() > 0) {
    gcd_chain.push_back(d.square_free_part());
    d = Poly::gcd(d, d.derivative());
  }
  if (!gcd_chain.empty()) {
    for (auto& iv : iso.out) {
      int mult = 1;
      for (const auto& layer : gcd_chain) {
        auto layer_chain = sturm_sequence(layer);
        if (variations_at(layer_chain, iv.lo) -
                variations_at(layer_chain, iv.hi) ==
            1)
          ++mult;
        else
          break;
      }
      iv.multiplicity = mult;
    }
  }
  return iso.out;
}

RootInterval refine_root(const Poly& p, const RootInterval& interval,
                         const Rational& eps) {
  if (sign(eps) <= 0) throw std::domain_error("refine_root: eps must be > 0");
  Poly q = p.square_free_part();
  Rational lo = interval.lo, hi = interval.hi;
  int slo = q.sign_at(lo);
  int shi = q.sign_at(hi);
  if (slo == 0 || shi == 0 || slo == shi)
    throw std::runtime_error(
        "refine_root: interval does not bracket a sign change of the "
        "square-free part");
  while (hi - lo >= eps) {
    Rational mid = (lo + hi) / 2;
    int sm = q.sign_at(mid);
    if (sm == 0) {
      // The root is exactly the midpoint; return a tight collar around it.
      Rational delta = (hi - lo) / 4;
      while (delta * 2 >= eps) delta /= 2;
      while (q.sign_at(mid - delta) == 0 || q.sign_at(mid + delta) == 0)
        delta /= 2;
      return {mid - delta, mid + delta, interval.multiplicity};
    }
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi, interval.multiplicity};
}

std::vector<double> real_roots_double(const Poly& p) {
  std::vector<double> roots;
  Rational eps = rat(1, 1000000000000000L);  // 1e-15
  for (const auto& iv : isolate_roots(p)) {
    RootInterval fine = refine_root(p, iv, eps);
    roots.push_back(fine.midpoint_double());
  }
  return roots;
}

}  // namespace vortex
