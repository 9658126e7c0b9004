#include "symbound/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace symbound {

namespace {

void check_domain(unsigned n, unsigned k, unsigned gamma) {
  if (n < 2) throw std::invalid_argument("bounds: n must be >= 2");
  if (k < n + 1) throw std::invalid_argument("bounds: k must be >= n+1");
  if (gamma < 1 || gamma > k - n)
    throw std::invalid_argument("bounds: gamma must satisfy 1 <= gamma <= k-n");
}

}  // namespace

Int inner_ratio(unsigned n, unsigned k, unsigned gamma, unsigned i) {
  check_domain(n, k, gamma);
  if (i > (n - 1) / 2)
    throw std::invalid_argument("inner_ratio: i must satisfy 0 <= i <= floor((n-1)/2)");
  const Int top = binomial(n + k - gamma - 1 - 2 * i, n - 1);
  const Int bottom = binomial(n, 2 * i + 1);
  return ceil_div(top, bottom);
}

DeltaValue delta(unsigned n, unsigned k, unsigned gamma) {
  check_domain(n, k, gamma);
  Int best;
  unsigned best_i = 0;
  for (unsigned i = 0; i <= (n - 1) / 2; ++i) {
    Int v = inner_ratio(n, k, gamma, i);
    if (i == 0 || v < best) {
      best = v;
      best_i = i;
    }
  }
  return {ceil_div(best, pow_int(Int(n), gamma - 1)), best_i};
}

BoundReport summand_bound(unsigned n, unsigned k, unsigned gamma) {
  DeltaValue d = delta(n, k, gamma);
  BoundReport r;
  r.n = n;
  r.k = k;
  r.gamma = gamma;
  r.delta = d.value;
  r.bound = floor_div(binomial(n + k - 1, n - 1), d.value);
  r.argmin_i = d.argmin_i;
  r.trivial = (d.value == 1);
  return r;
}

bool ceiling_identity_check(const Rat& a, unsigned long m) {
  if (m == 0) throw std::invalid_argument("ceiling_identity_check: m must be >= 1");
  const Int mi(static_cast<unsigned long>(m));
  const Int lhs = ceil_div(ceil_rat(a), mi);
  const Int rhs = ceil_rat(a / Rat(mi));
  return lhs == rhs;
}

bool delta_recursion_check(unsigned n, unsigned k, unsigned gamma) {
  check_domain(n, k, gamma);
  for (unsigned beta = 1; beta < gamma; ++beta) {
    const Int lhs = ceil_div(delta(n, k - gamma + beta, beta).value, Int(n));
    const Int rhs = delta(n, k - gamma + beta + 1, beta + 1).value;
    if (lhs != rhs) return false;
  }
  return true;
}

bool delta_inequalities_check(unsigned n, unsigned k, unsigned gamma) {
  check_domain(n, k, gamma);
  for (unsigned beta = 1; beta < gamma; ++beta) {
    const Int target = delta(n, k - gamma + beta + 1, beta + 1).value;
    // Both index families live inside 0 <= i <= floor((n-1)/2).
    for (unsigned j = 1; 2 * j <= beta - 1 && j <= (n - 1) / 2; ++j) {
      const Int lhs =
          ceil_div(delta(n, k - gamma + beta - 2 * j, beta - 2 * j).value, binomial(n, 2 * j + 1));
      if (lhs < target) return false;
    }
    for (unsigned i = (beta - 1) / 2 + 1; i <= (n - 1) / 2; ++i) {
      const Int lhs =
          ceil_div(binomial(n + k - gamma + beta - 1 - 2 * i, n - 1), binomial(n, 2 * i + 1));
      if (lhs < target) return false;
    }
  }
  return true;
}

ArgminReport argmin_location_check(unsigned n, unsigned k, unsigned gamma) {
  DeltaValue d = delta(n, k, gamma);
  ArgminReport r;
  r.argmin_i = d.argmin_i;
  r.predicted = n / 4;
  const bool in_regime = k >= n * n;
  r.matches = in_regime && r.argmin_i == r.predicted;
  return r;
}

TrivialityReport triviality_threshold_check(unsigned n, unsigned k) {
  if (n < 2) throw std::invalid_argument("triviality_threshold_check: n must be >= 2");
  if (k < n * n)
    throw std::invalid_argument("triviality_threshold_check: requires k >= n^2");
  TrivialityReport r;
  // Smallest integer t with n^t >= k^n, i.e. ceil(n log k / log n), exactly.
  const Int kn = pow_int(Int(k), n);
  Int nt = 1;
  unsigned t = 0;
  while (nt < kn) {
    nt *= n;
    ++t;
  }
  r.log_threshold = t;
  for (unsigned gamma = 1; gamma <= k - n; ++gamma) {
    if (delta(n, k, gamma).value == 1) {
      r.has_gamma_star = true;
      r.gamma_star = gamma;
      break;
    }
  }
  r.consistent = r.has_gamma_star ? r.gamma_star <= r.log_threshold
                                  : r.log_threshold > k - n;
  return r;
}

bool central_binomial_inequality(unsigned n) {
  if (n < 2) throw std::invalid_argument("central_binomial_inequality: n must be >= 2");
  const Int lhs = binomial(n, 2 * (n / 4) + 1) * (n + 1);
  return lhs > pow_int(Int(2), n - 1);
}

AsymptoticReference asymptotic_reference(unsigned n) {
  if (n < 1) throw std::invalid_argument("asymptotic_reference: n must be >= 1");
  AsymptoticReference r;
  r.central = binomial(n, n / 2);
  r.stirling = std::pow(2.0, n + 0.5) / std::sqrt(std::numbers::pi * n);
  return r;
}

Int sym2_bound(unsigned long p, unsigned n) {
  if (!is_prime(p)) throw std::domain_error("sym2_bound: p must be prime");
  if (n < 1) throw std::invalid_argument("sym2_bound: n must be >= 1");
  const Int pn = pow_int(Int(p), n);
  const Int p2n = pn * pn;
  const Int p2n1 = p2n / Int(p);
  return floor_div(p2n + 2 * p2n1 + pn, Int(4));
}

Int sym2_bound_second_route(unsigned long p, unsigned n) {
  if (!is_prime(p)) throw std::domain_error("sym2_bound_second_route: p must be prime");
  if (n < 1) throw std::invalid_argument("sym2_bound_second_route: n must be >= 1");
  const Int pn = pow_int(Int(p), n);
  const Int p2n = pn * pn;
  const Int p2n1 = p2n / Int(p);
  // (p^{2n}+p^n)/2 is integral for every prime p.
  return floor_div((p2n + pn) / 2 - p2n1, Int(2)) + p2n1;
}

}  // namespace symbound
