#pragma once

#include <gmpxx.h>

#include <string>

namespace symbound {

// Exact arithmetic used throughout the engine. No floating point enters any
// identity or bound computation; doubles appear only in character tables and
// in explicitly-approximate asymptotic references.
using Int = mpz_class;
using Rat = mpq_class;

// C(n, k); zero when k > n.
Int binomial(unsigned long n, unsigned long k);

Int pow_int(const Int& base, unsigned long exp);

// ceil(a / b) and floor(a / b) for b > 0, via integer division.
Int ceil_div(const Int& a, const Int& b);
Int floor_div(const Int& a, const Int& b);

// ceil of an exact rational.
Int ceil_rat(const Rat& a);

// Trial division; adequate for the prime parameters handled here.
bool is_prime(unsigned long p);

std::string decimal(const Int& v);
std::string decimal(const Rat& v);  // "p/q" (or "p" when q = 1)

}  // namespace symbound
