#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "symbound/bounds.hpp"
#include "symbound/sampling.hpp"

using namespace symbound;

namespace {

// Brute-force route to delta: naive rational arithmetic end to end, ceilings
// taken on exact fractions rather than by integer division.
Int delta_rational_oracle(unsigned n, unsigned k, unsigned gamma) {
  Rat best;
  bool first = true;
  for (unsigned i = 0; i <= (n - 1) / 2; ++i) {
    Rat ratio = Rat(binomial(n + k - gamma - 1 - 2 * i, n - 1)) / Rat(binomial(n, 2 * i + 1));
    Rat ceiled(ceil_rat(ratio));
    if (first || ceiled < best) {
      best = ceiled;
      first = false;
    }
  }
  return ceil_rat(best / Rat(pow_int(Int(n), gamma - 1)));
}

}  // namespace

TEST_CASE("inner ratio fixtures") {
  CHECK(inner_ratio(2, 7, 2, 0) == 3);
  CHECK(inner_ratio(3, 7, 1, 0) == 10);
  CHECK(inner_ratio(3, 7, 1, 1) == 15);
  CHECK_THROWS_AS(inner_ratio(3, 7, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(inner_ratio(3, 7, 5, 0), std::invalid_argument);
  CHECK_THROWS_AS(inner_ratio(1, 7, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(inner_ratio(3, 3, 1, 0), std::invalid_argument);
}

TEST_CASE("delta fixtures") {
  CHECK(delta(2, 7, 2).value == 2);
  CHECK(delta(3, 7, 1).value == 10);
  CHECK(delta(3, 7, 1).argmin_i == 0);
  // gamma = 1 leaves the inner minimum untouched.
  for (unsigned n = 2; n <= 5; ++n)
    for (unsigned k = n + 1; k <= n + 6; ++k) {
      Int m = inner_ratio(n, k, 1, 0);
      for (unsigned i = 1; i <= (n - 1) / 2; ++i) m = std::min(m, inner_ratio(n, k, 1, i));
      CHECK(delta(n, k, 1).value == m);
    }
}

TEST_CASE("delta agrees with the rational-arithmetic oracle") {
  for (unsigned n = 2; n <= 6; ++n)
    for (unsigned gamma = 1; gamma <= 4; ++gamma)
      for (unsigned k = n + gamma; k <= n + gamma + 10; ++k)
        CHECK(delta(n, k, gamma).value == delta_rational_oracle(n, k, gamma));
}

TEST_CASE("summand bound reports") {
  BoundReport r = summand_bound(3, 7, 1);
  CHECK(r.bound == 3);
  CHECK(r.delta == 10);
  CHECK(!r.trivial);
  CHECK(summand_bound(2, 7, 2).bound == 4);

  // Report invariants across a grid.
  for (unsigned n = 2; n <= 6; ++n)
    for (unsigned gamma = 1; gamma <= 3; ++gamma)
      for (unsigned k = n + gamma; k <= n + gamma + 8; ++k) {
        BoundReport b = summand_bound(n, k, gamma);
        CHECK(b.delta >= 1);
        CHECK(b.delta <= binomial(n + k - gamma - 1, n - 1));
        CHECK(b.bound >= 1);
        CHECK(b.argmin_i <= (n - 1) / 2);
        CHECK(b.trivial == (b.delta == 1));
        if (b.trivial) CHECK(b.bound == binomial(n + k - 1, n - 1));
      }
}

TEST_CASE("n = 2 closed forms") {
  for (unsigned k = 3; k <= 40; ++k) {
    CHECK(delta(2, k, 1).value == ceil_div(Int(k), Int(2)));
    Int b = summand_bound(2, k, 1).bound;
    CHECK((b == 2 || b == 3));
  }
}

TEST_CASE("ceiling identity") {
  CHECK(ceiling_identity_check(Rat(7, 2), 2));
  for (long a = -20; a <= 20; ++a)
    for (unsigned long m = 1; m <= 7; ++m) CHECK(ceiling_identity_check(Rat(a), m));
  RationalSampler sampler(kDefaultSeed + 20);
  for (int trial = 0; trial < 2000; ++trial) {
    Rat a = sampler.wide_rational();
    for (unsigned long m = 1; m <= 50; ++m) CHECK(ceiling_identity_check(a, m));
  }
  CHECK_THROWS_AS(ceiling_identity_check(Rat(1), 0), std::invalid_argument);
}

TEST_CASE("delta recursion") {
  CHECK(delta_recursion_check(2, 9, 3));
  CHECK(delta_recursion_check(2, 9, 1));  // vacuous
  CHECK(delta_recursion_check(5, 40, 4));
  for (unsigned n = 2; n <= 6; ++n)
    for (unsigned gamma = 1; gamma <= 4; ++gamma)
      for (unsigned k = n + gamma; k <= n + gamma + 10; ++k)
        CHECK(delta_recursion_check(n, k, gamma));
}

TEST_CASE("delta floor inequalities") {
  CHECK(delta_inequalities_check(5, 30, 3));
  CHECK(delta_inequalities_check(3, 20, 5));
  CHECK(delta_inequalities_check(4, 10, 1));  // vacuous
  for (unsigned n = 2; n <= 6; ++n)
    for (unsigned gamma = 1; gamma <= 4; ++gamma)
      for (unsigned k = n + gamma; k <= n + gamma + 10; ++k)
        CHECK(delta_inequalities_check(n, k, gamma));
}

TEST_CASE("argmin location") {
  auto r = argmin_location_check(5, 40, 1);
  CHECK(r.argmin_i == 1);
  CHECK(r.predicted == 1);
  CHECK(r.matches);

  auto r2 = argmin_location_check(2, 7, 2);
  CHECK(r2.argmin_i == 0);
  CHECK(r2.predicted == 0);

  auto r8 = argmin_location_check(8, 70, 1);
  CHECK(r8.argmin_i == 2);
  CHECK(r8.matches);

  // Below the k >= n^2 regime the location claim is not asserted.
  CHECK(!argmin_location_check(6, 12, 1).matches);

  // Full grid, including the gamma = n column.
  for (unsigned n = 5; n <= 24; ++n)
    for (unsigned gamma : {1u, 2u, n}) {
      auto rg = argmin_location_check(n, n * n * n, gamma);
      CHECK(rg.matches);
      CHECK(rg.argmin_i == n / 4);
    }
}

TEST_CASE("delta is monotone nonincreasing in gamma") {
  for (unsigned n = 2; n <= 6; ++n) {
    const unsigned k = n * n + n;
    Int prev;
    for (unsigned gamma = 1; gamma <= k - n; ++gamma) {
      Int v = delta(n, k, gamma).value;
      if (gamma > 1) CHECK(v <= prev);
      prev = v;
    }
  }
}

TEST_CASE("triviality threshold") {
  for (unsigned n = 2; n <= 8; ++n) {
    const unsigned k = n * n + n;
    auto r = triviality_threshold_check(n, k);
    CHECK(r.consistent);
    CHECK(r.has_gamma_star);
    CHECK(r.gamma_star <= r.log_threshold);
    // gamma_star really is the first trivial value.
    CHECK(delta(n, k, r.gamma_star).value == 1);
    if (r.gamma_star > 1) CHECK(delta(n, k, r.gamma_star - 1).value > 1);
  }
  CHECK_THROWS_AS(triviality_threshold_check(3, 8), std::invalid_argument);
}

TEST_CASE("central binomial inequality") {
  for (unsigned n = 2; n <= 1000; ++n) CHECK(central_binomial_inequality(n));
}

TEST_CASE("asymptotic reference") {
  CHECK(asymptotic_reference(4).central == 6);
  auto r = asymptotic_reference(10);
  CHECK(r.central == 252);
  CHECK(r.stirling == doctest::Approx(258.3695).epsilon(1e-4));
}

TEST_CASE("sym2 bound") {
  CHECK(sym2_bound(3, 1) == 4);
  CHECK(sym2_bound(2, 1) == 2);
  CHECK(sym2_bound(2, 2) == 9);
  CHECK_THROWS_AS(sym2_bound(4, 1), std::domain_error);
  CHECK_THROWS_AS(sym2_bound(1, 1), std::domain_error);

  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul})
    for (unsigned n = 1; n <= 4; ++n) {
      CHECK(sym2_bound(p, n) == sym2_bound_second_route(p, n));
      CHECK(sym2_bound(p, n) < pow_int(Int(p), 2 * n));
    }
}
