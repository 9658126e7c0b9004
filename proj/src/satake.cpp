#include "symbound/satake.hpp"

#include <algorithm>
#include <stdexcept>

#include "symbound/symfunc.hpp"

namespace symbound {

SatakeClass::SatakeClass(std::vector<Rat> alphas) : alphas_(std::move(alphas)) {
  if (alphas_.empty()) throw std::invalid_argument("SatakeClass: need at least one eigenvalue");
  for (const Rat& a : alphas_)
    if (a == 0) throw std::invalid_argument("SatakeClass: eigenvalues must be nonzero");
}

EigenMultiset::EigenMultiset(std::vector<Rat> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
}

EigenMultiset sym_eigen(const SatakeClass& a, unsigned k) {
  const auto& al = a.alphas();
  const unsigned n = a.degree();
  std::vector<Rat> out;
  // Monomials of total degree k, built with nondecreasing index choices.
  struct Frame { unsigned idx, left; Rat val; };
  std::vector<Rat> stack;
  std::vector<Frame> work{{0, k, Rat(1)}};
  while (!work.empty()) {
    Frame f = work.back();
    work.pop_back();
    if (f.left == 0) {
      out.push_back(f.val);
      continue;
    }
    if (f.idx == n) continue;
    // Either skip variable idx or take one more power of it.
    work.push_back({f.idx + 1, f.left, f.val});
    work.push_back({f.idx, f.left - 1, f.val * al[f.idx]});
  }
  return EigenMultiset(std::move(out));
}

EigenMultiset ext_eigen(const SatakeClass& a, unsigned k) {
  const unsigned n = a.degree();
  if (k > n) throw std::invalid_argument("ext_eigen: k exceeds the class degree");
  const auto& al = a.alphas();
  std::vector<Rat> out;
  std::vector<unsigned> idx(k);
  // k-subsets in lexicographic order.
  for (unsigned i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Rat v = 1;
    for (unsigned i : idx) v *= al[i];
    out.push_back(v);
    if (k == 0) break;
    unsigned i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (unsigned j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return EigenMultiset(std::move(out));
}

EigenMultiset tensor_eigen(const EigenMultiset& e1, const EigenMultiset& e2) {
  std::vector<Rat> out;
  out.reserve(e1.size() * e2.size());
  for (const Rat& x : e1.values())
    for (const Rat& y : e2.values()) out.push_back(x * y);
  return EigenMultiset(std::move(out));
}

EigenMultiset dual_eigen(const EigenMultiset& e) {
  std::vector<Rat> out;
  out.reserve(e.size());
  for (const Rat& x : e.values()) {
    if (x == 0) throw std::invalid_argument("dual_eigen: zero eigenvalue has no reciprocal");
    out.push_back(1 / x);
  }
  return EigenMultiset(std::move(out));
}

LocalFactorValue local_factor(const EigenMultiset& e, const Rat& t) {
  // Accumulate numerator and denominator separately; one canonicalization at
  // the end instead of a gcd per factor.
  Int num = 1, den = 1;
  for (const Rat& ev : e.values()) {
    Rat f = 1 - ev * t;
    if (f == 0) throw pole_error("local_factor: sample parameter hits a pole");
    num *= f.get_den();
    den *= f.get_num();
  }
  Rat value(num, den);
  value.canonicalize();
  return {value, t};
}

LFactorIdentityReport lfactor_identity_check(const SatakeClass& a, unsigned k, const Rat& t) {
  const unsigned n = a.degree();
  if (k < n)
    throw std::domain_error("lfactor_identity_check: identity is asserted only for k >= n");
  Rat lhs = 1, rhs = 1;
  for (unsigned i = 0; 2 * i <= n; ++i)
    lhs *= local_factor(tensor_eigen(sym_eigen(a, k - 2 * i), ext_eigen(a, 2 * i)), t).value;
  for (unsigned i = 0; 2 * i + 1 <= n; ++i)
    rhs *= local_factor(tensor_eigen(sym_eigen(a, k - 2 * i - 1), ext_eigen(a, 2 * i + 1)), t)
               .value;
  return {lhs == rhs, lhs, rhs};
}

std::string entry_name(CorrespondenceEntry e) {
  switch (e) {
    case CorrespondenceEntry::kSym: return "sym";
    case CorrespondenceEntry::kExt: return "ext";
    case CorrespondenceEntry::kDet: return "det";
    case CorrespondenceEntry::kDetDualStd: return "det-dual-std";
    case CorrespondenceEntry::kDetDualSym: return "det-dual-sym";
    case CorrespondenceEntry::kDetDualExt: return "det-dual-ext";
    case CorrespondenceEntry::kDetAdjoint: return "det-adjoint";
  }
  return "?";
}

const std::vector<CorrespondenceEntry>& all_correspondence_entries() {
  static const std::vector<CorrespondenceEntry> entries{
      CorrespondenceEntry::kSym,        CorrespondenceEntry::kExt,
      CorrespondenceEntry::kDet,        CorrespondenceEntry::kDetDualStd,
      CorrespondenceEntry::kDetDualSym, CorrespondenceEntry::kDetDualExt,
      CorrespondenceEntry::kDetAdjoint,
  };
  return entries;
}

bool entry_valid(CorrespondenceEntry e, unsigned n, unsigned k) {
  switch (e) {
    case CorrespondenceEntry::kSym: return true;
    case CorrespondenceEntry::kExt: return k <= n;
    case CorrespondenceEntry::kDet: return true;
    case CorrespondenceEntry::kDetDualStd: return n >= 1;
    case CorrespondenceEntry::kDetDualSym: return true;
    case CorrespondenceEntry::kDetDualExt: return k <= n;
    case CorrespondenceEntry::kDetAdjoint: return n >= 2;
  }
  return false;
}

bool entry_uses_k(CorrespondenceEntry e) {
  switch (e) {
    case CorrespondenceEntry::kSym:
    case CorrespondenceEntry::kExt:
    case CorrespondenceEntry::kDetDualSym:
    case CorrespondenceEntry::kDetDualExt:
      return true;
    default:
      return false;
  }
}

namespace {

Partition entry_shape(CorrespondenceEntry e, unsigned n, unsigned k) {
  auto rep = [](unsigned value, unsigned count) {
    return count == 0 ? Partition() : Partition(std::vector<unsigned>(count, value));
  };
  switch (e) {
    case CorrespondenceEntry::kSym: return rep(k, k == 0 ? 0 : 1);
    case CorrespondenceEntry::kExt: return rep(1, k);
    case CorrespondenceEntry::kDet: return rep(1, n);
    case CorrespondenceEntry::kDetDualStd: return rep(1, n - 1);
    case CorrespondenceEntry::kDetDualSym: return rep(k, k == 0 ? 0 : n - 1);
    case CorrespondenceEntry::kDetDualExt: return rep(1, n - k);
    case CorrespondenceEntry::kDetAdjoint: {
      std::vector<unsigned> parts(n - 1, 1u);
      parts[0] = 2;
      return Partition(std::move(parts));
    }
  }
  return Partition();
}

std::vector<Rat> claimed_eigenvalues(CorrespondenceEntry e, const SatakeClass& a, unsigned k) {
  const auto& al = a.alphas();
  const unsigned n = a.degree();
  Rat det = 1;
  for (const Rat& x : al) det *= x;
  std::vector<Rat> out;
  switch (e) {
    case CorrespondenceEntry::kSym:
      return sym_eigen(a, k).values();
    case CorrespondenceEntry::kExt:
      return ext_eigen(a, k).values();
    case CorrespondenceEntry::kDet:
      return {det};
    case CorrespondenceEntry::kDetDualStd:
      for (const Rat& x : al) out.push_back(det / x);
      return out;
    case CorrespondenceEntry::kDetDualSym: {
      Rat detk = 1;
      for (unsigned i = 0; i < k; ++i) detk *= det;
      const EigenMultiset sym = sym_eigen(a, k);
      for (const Rat& v : sym.values()) out.push_back(detk / v);
      return out;
    }
    case CorrespondenceEntry::kDetDualExt: {
      const EigenMultiset ext = ext_eigen(a, k);
      for (const Rat& v : ext.values()) out.push_back(det / v);
      return out;
    }
    case CorrespondenceEntry::kDetAdjoint:
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
          if (i != j) out.push_back(det * al[i] / al[j]);
      for (unsigned i = 0; i + 1 < n; ++i) out.push_back(det);
      return out;
  }
  return out;
}

}  // namespace

CorrespondenceReport verify_correspondence(const SatakeClass& a, CorrespondenceEntry entry,
                                           unsigned k) {
  const unsigned n = a.degree();
  if (!entry_valid(entry, n, k))
    throw std::invalid_argument("verify_correspondence: entry shape is invalid for this degree");

  const Partition shape = entry_shape(entry, n, k);
  const std::vector<Rat> claim = claimed_eigenvalues(entry, a, k);

  // Monomial multiset of the Schur polynomial at the eigenvalues: each key
  // contributes its exponent permutations with the Kostka coefficient as
  // multiplicity. Power sums of this multiset are exactly the evaluations of
  // the polynomial at the powered points (alpha_1^m, ..., alpha_n^m).
  const SymPoly s = schur(shape, n);
  std::vector<std::pair<Rat, Int>> schur_values;
  Int schur_card = 0;
  for (const auto& [key, c] : s.terms()) {
    for (const auto& ev : exponent_vectors(key, n)) {
      Rat v = 1;
      for (unsigned i = 0; i < n; ++i)
        for (unsigned r = 0; r < ev[i]; ++r) v *= a.alphas()[i];
      schur_values.emplace_back(v, c);
      schur_card += c;
    }
  }
  if (schur_card != Int(static_cast<unsigned long>(claim.size())))
    return {entry, n, k, false};

  // Equal cardinality + equal power sums for m = 1..|claim| certifies
  // multiset equality.
  std::vector<Rat> claim_pow(claim);
  std::vector<Rat> schur_pow(schur_values.size());
  for (std::size_t i = 0; i < schur_values.size(); ++i) schur_pow[i] = schur_values[i].first;
  for (std::size_t m = 1; m <= claim.size(); ++m) {
    if (m > 1) {
      for (std::size_t i = 0; i < claim_pow.size(); ++i) claim_pow[i] *= claim[i];
      for (std::size_t i = 0; i < schur_pow.size(); ++i) schur_pow[i] *= schur_values[i].first;
    }
    Rat claim_sum = 0, schur_sum = 0;
    for (const Rat& v : claim_pow) claim_sum += v;
    for (std::size_t i = 0; i < schur_pow.size(); ++i)
      schur_sum += schur_pow[i] * Rat(schur_values[i].second);
    if (claim_sum != schur_sum) return {entry, n, k, false};
  }
  return {entry, n, k, true};
}

}  // namespace symbound
