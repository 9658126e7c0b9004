#include "symbound/numeric.hpp"

#include <stdexcept>

namespace symbound {

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int pow_int(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Int ceil_div(const Int& a, const Int& b) {
  if (sgn(b) <= 0) throw std::invalid_argument("ceil_div: divisor must be positive");
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int floor_div(const Int& a, const Int& b) {
  if (sgn(b) <= 0) throw std::invalid_argument("floor_div: divisor must be positive");
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int ceil_rat(const Rat& a) {
  // mpq_class keeps the denominator positive after canonicalization.
  return ceil_div(a.get_num(), a.get_den());
}

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string decimal(const Int& v) { return v.get_str(); }

std::string decimal(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace symbound
