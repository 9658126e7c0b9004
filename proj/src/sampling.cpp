#include "symbound/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace symbound {

long RationalSampler::pick(long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("pick: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1u;
  return lo + static_cast<long>(rng_() % span);
}

Rat RationalSampler::nonzero_rational(long max_abs) {
  const long num = pick(1, max_abs);
  const long den = pick(1, max_abs);
  const bool neg = (rng_() & 1u) != 0;
  Rat r(neg ? -num : num, den);
  r.canonicalize();
  return r;
}

std::vector<Rat> RationalSampler::satake_alphas(unsigned n, long max_abs) {
  std::vector<Rat> v(n);
  for (auto& a : v) a = nonzero_rational(max_abs);
  return v;
}

std::vector<Rat> RationalSampler::distinct_point(unsigned n, long max_abs) {
  std::vector<Rat> v;
  v.reserve(n);
  while (v.size() < n) {
    Rat c = nonzero_rational(max_abs);
    if (std::find(v.begin(), v.end(), c) == v.end()) v.push_back(c);
  }
  return v;
}

Rat RationalSampler::evaluation_parameter(long max_den) {
  const long den = pick(2, max_den);
  const long num = pick(1, den - 1);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat RationalSampler::wide_rational(long max_num, long max_den) {
  const long num = pick(-max_num, max_num);
  const long den = pick(1, max_den);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace symbound
