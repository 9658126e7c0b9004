#pragma once

#include "symbound/numeric.hpp"

namespace symbound {

// Result of the summand-degree bound calculation for GL(n), symmetric k-th
// power, with the cuspidality-relaxation parameter gamma.
struct BoundReport {
  unsigned n = 0;
  unsigned k = 0;
  unsigned gamma = 0;
  Int delta;        // lower bound for the degree of any cuspidal summand
  Int bound;        // floor( C(n+k-1, n-1) / delta )
  unsigned argmin_i = 0;  // smallest index attaining the inner minimum
  bool trivial = false;   // delta == 1
};

// ceil( C(n+k-gamma-1-2i, n-1) / C(n, 2i+1) ), exact integer arithmetic.
// Domain: n >= 2, k >= n+1, 1 <= gamma <= k-n, 0 <= i <= floor((n-1)/2).
Int inner_ratio(unsigned n, unsigned k, unsigned gamma, unsigned i);

struct DeltaValue {
  Int value;
  unsigned argmin_i;
};

// ceil( min_i inner_ratio / n^{gamma-1} ), minimum by full scan over
// 0 <= i <= floor((n-1)/2); smallest index wins ties.
DeltaValue delta(unsigned n, unsigned k, unsigned gamma);

BoundReport summand_bound(unsigned n, unsigned k, unsigned gamma);

// ceil(ceil(a)/m) == ceil(a/m); holds for every rational a and m >= 1.
bool ceiling_identity_check(const Rat& a, unsigned long m);

// For each 1 <= beta < gamma, checks the exact recursion
//   ceil( delta(n, k-gamma+beta, beta) / n ) == delta(n, k-gamma+beta+1, beta+1).
// gamma = 1 is vacuously true.
bool delta_recursion_check(unsigned n, unsigned k, unsigned gamma);

// For each 1 <= beta < gamma, checks the two floor/ceiling inequality
// families that bound delta(n, k-gamma+beta+1, beta+1) from below:
//   ceil( delta(n, k-gamma+beta-2j, beta-2j) / C(n,2j+1) )  for 1 <= j <= floor((beta-1)/2),
//   ceil( C(n+k-gamma+beta-1-2i, n-1) / C(n,2i+1) )         for floor((beta-1)/2) < i <= floor((n-1)/2).
bool delta_inequalities_check(unsigned n, unsigned k, unsigned gamma);

struct ArgminReport {
  unsigned argmin_i;
  unsigned predicted;  // floor(n/4)
  bool matches;        // asserted only in the k >= n^2 regime; false below it
};

// Compares the full-scan argmin with floor(n/4). The scan, never the
// prediction, feeds delta; below k = n^2 the location claim is not asserted
// and matches is reported false.
ArgminReport argmin_location_check(unsigned n, unsigned k, unsigned gamma);

struct TrivialityReport {
  bool has_gamma_star = false;
  unsigned gamma_star = 0;   // smallest gamma with delta == 1, when one exists
  unsigned log_threshold;  // ceil(n log k / log n), computed exactly
  bool consistent;
};

// Scans gamma = 1..k-n for the first trivial delta and compares against the
// threshold ceil(n log k / log n) (smallest t with n^t >= k^n). Requires
// k >= n^2.
TrivialityReport triviality_threshold_check(unsigned n, unsigned k);

// C(n, 2*floor(n/4)+1) * (n+1) > 2^{n-1}, checked exactly.
bool central_binomial_inequality(unsigned n);

struct AsymptoticReference {
  Int central;      // C(n, floor(n/2))
  double stirling;  // 2^{n+1/2} / sqrt(pi*n), approximate by construction
};

AsymptoticReference asymptotic_reference(unsigned n);

// floor( (p^{2n} + 2 p^{2n-1} + p^n) / 4 ) for prime p; rejects composites.
Int sym2_bound(unsigned long p, unsigned n);

// Second route to the same value, following the counting argument:
// floor( ((p^{2n} + p^n)/2 - p^{2n-1}) / 2 ) + p^{2n-1}.
Int sym2_bound_second_route(unsigned long p, unsigned n);

}  // namespace symbound
