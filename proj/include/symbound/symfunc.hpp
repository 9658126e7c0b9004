#pragma once

#include <map>
#include <vector>

#include "symbound/numeric.hpp"
#include "symbound/partition.hpp"

namespace symbound {

// Homogeneous symmetric polynomial in num_vars variables, stored in the
// monomial basis M_lambda with exact integer coefficients. Keys have
// length <= num_vars and weight = degree; zero coefficients are never stored.
// The zero polynomial has an empty map and keeps its degree tag.
class SymPoly {
 public:
  using TermMap = std::map<Partition, Int, PartitionOrder>;

  SymPoly(unsigned num_vars, unsigned degree);

  unsigned num_vars() const { return num_vars_; }
  unsigned degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Int coeff(const Partition& key) const;

  // Adds c * M_key; erases the entry if the coefficient cancels.
  void add_term(const Partition& key, const Int& c);

  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly& operator*=(const Int& c);
  bool operator==(const SymPoly& o) const;
  bool operator!=(const SymPoly& o) const { return !(*this == o); }

 private:
  unsigned num_vars_;
  unsigned degree_;
  TermMap terms_;
};

// Expansion in the Schur basis: key -> coefficient of S_key. Carries the same
// key constraints as SymPoly. Coefficients of genuine effective characters
// are nonnegative, but the type allows any integer.
struct SchurExpansion {
  unsigned num_vars = 0;
  unsigned degree = 0;
  std::map<Partition, Int, PartitionOrder> coeffs;

  bool operator==(const SchurExpansion& o) const {
    return num_vars == o.num_vars && degree == o.degree && coeffs == o.coeffs;
  }
};

// All distinct permutations of lambda zero-padded to n entries, in
// lexicographic order. Rejects length(lambda) > n.
std::vector<std::vector<unsigned>> exponent_vectors(const Partition& lambda, unsigned n);

// Basis element M_lambda in n variables. Rejects length(lambda) > n.
SymPoly monomial(const Partition& lambda, unsigned n);

// Kostka number K_{mu,lambda}: semistandard tableaux of shape mu and content
// lambda (rows weakly increasing, columns strictly increasing), counted by
// depth-first filling. Rejects weight(mu) != weight(lambda).
Int kostka(const Partition& mu, const Partition& lambda);

// S_mu in n variables via S_mu = sum_lambda K_{mu,lambda} M_lambda.
// Shapes with more than n rows give the zero polynomial.
SymPoly schur(const Partition& mu, unsigned n);

// Independent route for S_mu: the bialternant det(x_j^{mu_i+n-i}) / det(x_j^{n-i})
// evaluated exactly. Rejects coincident coordinates and length(mu) > n.
Rat schur_bialternant_eval(const Partition& mu, const std::vector<Rat>& point);

// Exact product in the monomial basis. Rejects a variable-count mismatch.
SymPoly multiply(const SymPoly& a, const SymPoly& b);

Rat eval(const SymPoly& p, const std::vector<Rat>& point);

// Change of basis to Schur coefficients by back-substitution along the
// canonical order; the Kostka matrix is unitriangular with respect to it.
SchurExpansion schur_expand(const SymPoly& p);

// Littlewood-Richardson coefficients N_{a,b,nu} restricted to at most n
// parts, computed as schur_expand(schur(a,n) * schur(b,n)).
SchurExpansion lr_coefficients(const Partition& a, const Partition& b, unsigned n);

struct SchurIdentityReport {
  bool holds;
  SymPoly lhs;
  SymPoly rhs;
};

// Checks, coefficient by coefficient in n variables, that
//   sum_{i=0..floor(n/2)} S_(k-2i) * S_(1^{2i})
//     = sum_{i=0..ceil(n/2)-1} S_(k-2i-1) * S_(1^{2i+1}).
// Requires k >= n; smaller k is rejected with its own diagnostic.
SchurIdentityReport schur_identity_check(unsigned n, unsigned k);

}  // namespace symbound
