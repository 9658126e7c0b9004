#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "symbound/numeric.hpp"
#include "symbound/partition.hpp"

namespace symbound {

// Raised by local_factor when the evaluation parameter hits a pole; callers
// resample the parameter and retry.
struct pole_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Eigenvalue vector of an unramified local conjugacy class: n nonzero exact
// rationals.
class SatakeClass {
 public:
  explicit SatakeClass(std::vector<Rat> alphas);
  const std::vector<Rat>& alphas() const { return alphas_; }
  unsigned degree() const { return static_cast<unsigned>(alphas_.size()); }

 private:
  std::vector<Rat> alphas_;
};

// Multiset of exact rationals; kept sorted so equality is multiset equality.
class EigenMultiset {
 public:
  EigenMultiset() = default;
  explicit EigenMultiset(std::vector<Rat> values);
  const std::vector<Rat>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool operator==(const EigenMultiset& o) const { return values_ == o.values_; }

 private:
  std::vector<Rat> values_;
};

struct LocalFactorValue {
  Rat value;  // product of (1 - e*t)^{-1} over the multiset
  Rat t;
};

// All degree-k monomials in the eigenvalues (symmetric power); |.| = C(n+k-1, k).
EigenMultiset sym_eigen(const SatakeClass& a, unsigned k);

// All k-fold products of distinct eigenvalues (exterior power); |.| = C(n, k).
// Rejects k > n.
EigenMultiset ext_eigen(const SatakeClass& a, unsigned k);

// All pairwise products with multiplicity; |.| = |e1| * |e2|.
EigenMultiset tensor_eigen(const EigenMultiset& e1, const EigenMultiset& e2);

// Reciprocals (contragredient). Rejects a zero member.
EigenMultiset dual_eigen(const EigenMultiset& e);

// Exact product of (1 - e*t)^{-1}; throws pole_error when some e*t = 1.
LocalFactorValue local_factor(const EigenMultiset& e, const Rat& t);

struct LFactorIdentityReport {
  bool holds;
  Rat lhs;
  Rat rhs;
};

// Checks, at the sample parameter t, that
//   prod_{i=0..floor(n/2)}  L(sym^{k-2i} (x) ext^{2i})
//     = prod_{i=0..ceil(n/2)-1} L(sym^{k-2i-1} (x) ext^{2i+1}),
// every factor evaluated exactly. Requires k >= n; propagates pole_error.
LFactorIdentityReport lfactor_identity_check(const SatakeClass& a, unsigned k, const Rat& t);

// Rows of the representation <-> Schur polynomial dictionary.
enum class CorrespondenceEntry {
  kSym,          // sym^k            <-> single row (k)
  kExt,          // ext^k            <-> single column (1^k)
  kDet,          // central char     <-> (1^n)
  kDetDualStd,   // det x dual(std)  <-> (1^{n-1})
  kDetDualSym,   // det^k x dual(sym^k) <-> (k^{n-1})
  kDetDualExt,   // det x dual(ext^k)   <-> (1^{n-k})
  kDetAdjoint,   // det x adjoint    <-> (2, 1^{n-2})
};

std::string entry_name(CorrespondenceEntry e);

// All seven entries in a fixed order (reporting convenience).
const std::vector<CorrespondenceEntry>& all_correspondence_entries();

// True when the entry's shape makes sense at degree n with power k.
bool entry_valid(CorrespondenceEntry e, unsigned n, unsigned k);

// True for the rows parameterized by the power k.
bool entry_uses_k(CorrespondenceEntry e);

struct CorrespondenceReport {
  CorrespondenceEntry entry;
  unsigned n;
  unsigned k;
  bool holds;
};

// Builds the claimed eigenvalue multiset of the entry from a and certifies,
// by comparing power sums for m = 1..|claim| (Newton's identities), that it
// coincides with the monomial multiset of the matching Schur polynomial at
// the eigenvalues. k parameterizes the sym/ext entries and is ignored by the
// others. Rejects entries invalid for this n (see entry_valid).
CorrespondenceReport verify_correspondence(const SatakeClass& a, CorrespondenceEntry entry,
                                           unsigned k = 1);

}  // namespace symbound
