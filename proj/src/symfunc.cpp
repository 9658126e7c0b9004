#include "symbound/symfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace symbound {

SymPoly::SymPoly(unsigned num_vars, unsigned degree)
    : num_vars_(num_vars), degree_(degree) {
  if (num_vars_ == 0) throw std::invalid_argument("SymPoly: need at least one variable");
}

Int SymPoly::coeff(const Partition& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Int(0) : it->second;
}

void SymPoly::add_term(const Partition& key, const Int& c) {
  if (c == 0) return;
  if (key.length() > num_vars_)
    throw std::invalid_argument("SymPoly: key has more parts than variables");
  if (key.weight() != degree_)
    throw std::invalid_argument("SymPoly: key weight differs from polynomial degree");
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  if (o.num_vars_ != num_vars_ || o.degree_ != degree_)
    throw std::invalid_argument("SymPoly: sum requires matching variables and degree");
  for (const auto& [key, c] : o.terms_) add_term(key, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  if (o.num_vars_ != num_vars_ || o.degree_ != degree_)
    throw std::invalid_argument("SymPoly: difference requires matching variables and degree");
  for (const auto& [key, c] : o.terms_) add_term(key, -c);
  return *this;
}

SymPoly& SymPoly::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

bool SymPoly::operator==(const SymPoly& o) const {
  return num_vars_ == o.num_vars_ && degree_ == o.degree_ && terms_ == o.terms_;
}

std::vector<std::vector<unsigned>> exponent_vectors(const Partition& lambda, unsigned n) {
  if (lambda.length() > n)
    throw std::invalid_argument("exponent_vectors: more parts than variables");
  std::vector<unsigned> v(n, 0u);
  for (std::size_t i = 0; i < lambda.length(); ++i) v[i] = lambda.parts()[i];
  std::sort(v.begin(), v.end());
  std::vector<std::vector<unsigned>> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

SymPoly monomial(const Partition& lambda, unsigned n) {
  if (lambda.length() > n)
    throw std::invalid_argument("monomial: more parts than variables");
  SymPoly p(n, lambda.weight());
  p.add_term(lambda, 1);
  return p;
}

namespace {

// Backtracking fill of the diagram of mu, cell by cell in row-major order.
// remaining[e] counts unused entries of value e+1.
Int count_tableaux(const std::vector<unsigned>& shape, std::vector<unsigned>& remaining,
                   std::vector<std::vector<unsigned>>& fill, std::size_t row, std::size_t col) {
  if (row == shape.size()) return 1;
  std::size_t nrow = row, ncol = col + 1;
  if (ncol == shape[row]) {
    nrow = row + 1;
    ncol = 0;
  }
  const unsigned lo_row = col > 0 ? fill[row][col - 1] : 1u;               // weakly increasing
  const unsigned lo_col = row > 0 && col < shape[row - 1] ? fill[row - 1][col] + 1u : 1u;
  Int total = 0;
  for (unsigned e = std::max(lo_row, lo_col); e <= remaining.size(); ++e) {
    if (remaining[e - 1] == 0) continue;
    --remaining[e - 1];
    fill[row][col] = e;
    total += count_tableaux(shape, remaining, fill, nrow, ncol);
    ++remaining[e - 1];
  }
  return total;
}

}  // namespace

Int kostka(const Partition& mu, const Partition& lambda) {
  if (mu.weight() != lambda.weight())
    throw std::invalid_argument("kostka: shape and content weights differ");
  if (mu.empty()) return 1;
  std::vector<unsigned> remaining(lambda.parts());
  std::vector<std::vector<unsigned>> fill(mu.length());
  for (std::size_t r = 0; r < mu.length(); ++r) fill[r].assign(mu.parts()[r], 0u);
  return count_tableaux(mu.parts(), remaining, fill, 0, 0);
}

SymPoly schur(const Partition& mu, unsigned n) {
  SymPoly p(n, mu.weight());
  if (mu.length() > n) return p;  // vanishing convention for deep shapes
  for (const Partition& lambda : partitions_of(mu.weight(), n)) {
    Int k = kostka(mu, lambda);
    if (k != 0) p.add_term(lambda, k);
  }
  return p;
}

namespace {

Rat det(std::vector<std::vector<Rat>> m) {
  const std::size_t n = m.size();
  Rat result = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return Rat(0);
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      result = -result;
    }
    result *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rat f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return result;
}

}  // namespace

Rat schur_bialternant_eval(const Partition& mu, const std::vector<Rat>& point) {
  const std::size_t n = point.size();
  if (n == 0) throw std::invalid_argument("schur_bialternant_eval: empty point");
  if (mu.length() > n)
    throw std::invalid_argument("schur_bialternant_eval: more parts than variables");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (point[i] == point[j])
        throw std::invalid_argument(
            "schur_bialternant_eval: coordinates must be pairwise distinct");

  auto power_matrix = [&](const std::vector<unsigned long>& exps) {
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Int np, dp;
        mpz_pow_ui(np.get_mpz_t(), point[j].get_num().get_mpz_t(), exps[i]);
        mpz_pow_ui(dp.get_mpz_t(), point[j].get_den().get_mpz_t(), exps[i]);
        Rat v(np, dp);
        v.canonicalize();
        m[i][j] = v;
      }
    return m;
  };

  std::vector<unsigned long> num_exps(n), den_exps(n);
  for (std::size_t i = 0; i < n; ++i) {
    num_exps[i] = mu.part(i) + (n - 1 - i);
    den_exps[i] = n - 1 - i;
  }
  return det(power_matrix(num_exps)) / det(power_matrix(den_exps));
}

SymPoly multiply(const SymPoly& a, const SymPoly& b) {
  if (a.num_vars() != b.num_vars())
    throw std::invalid_argument("multiply: variable counts differ");
  const unsigned n = a.num_vars();
  SymPoly p(n, a.degree() + b.degree());
  if (a.is_zero() || b.is_zero()) return p;

  // coeff of M_nu in M_lambda * M_mu is the number of permutation pairs
  // (p, q) with p + q equal to nu itself, so only weakly decreasing sums
  // need to be kept.
  for (const auto& [ka, ca] : a.terms()) {
    const auto perms_a = exponent_vectors(ka, n);
    for (const auto& [kb, cb] : b.terms()) {
      const auto perms_b = exponent_vectors(kb, n);
      const Int c = ca * cb;
      std::vector<unsigned> sum(n);
      for (const auto& pa : perms_a) {
        for (const auto& pb : perms_b) {
          bool sorted = true;
          for (unsigned i = 0; i < n; ++i) {
            sum[i] = pa[i] + pb[i];
            if (i > 0 && sum[i] > sum[i - 1]) {
              sorted = false;
              break;
            }
          }
          if (sorted) p.add_term(Partition(sum), c);
        }
      }
    }
  }
  return p;
}

Rat eval(const SymPoly& p, const std::vector<Rat>& point) {
  if (point.size() != p.num_vars())
    throw std::invalid_argument("eval: point size differs from variable count");
  const unsigned n = p.num_vars();
  // Power table x_i^e for e up to the degree.
  std::vector<std::vector<Rat>> pw(n);
  for (unsigned i = 0; i < n; ++i) {
    pw[i].resize(p.degree() + 1);
    pw[i][0] = 1;
    for (unsigned e = 1; e <= p.degree(); ++e) pw[i][e] = pw[i][e - 1] * point[i];
  }
  Rat total = 0;
  for (const auto& [key, c] : p.terms()) {
    Rat msum = 0;
    for (const auto& ev : exponent_vectors(key, n)) {
      Rat term = 1;
      for (unsigned i = 0; i < n; ++i)
        if (ev[i] != 0) term *= pw[i][ev[i]];
      msum += term;
    }
    total += Rat(c) * msum;
  }
  return total;
}

SchurExpansion schur_expand(const SymPoly& p) {
  SchurExpansion ex;
  ex.num_vars = p.num_vars();
  ex.degree = p.degree();
  SymPoly rest = p;
  while (!rest.is_zero()) {
    // First key in canonical order is maximal in dominance among the
    // remaining ones, so its monomial coefficient is its Schur coefficient.
    const auto& [mu, c] = *rest.terms().begin();
    Partition shape = mu;
    Int coeff = c;
    ex.coeffs.emplace(shape, coeff);
    SymPoly s = schur(shape, p.num_vars());
    s *= coeff;
    rest -= s;
  }
  return ex;
}

SchurExpansion lr_coefficients(const Partition& a, const Partition& b, unsigned n) {
  return schur_expand(multiply(schur(a, n), schur(b, n)));
}

namespace {

Partition column_shape(unsigned ones) {
  return ones == 0 ? Partition() : Partition(std::vector<unsigned>(ones, 1u));
}

Partition row_shape(unsigned k) {
  return k == 0 ? Partition() : Partition(std::vector<unsigned>{k});
}

}  // namespace

SchurIdentityReport schur_identity_check(unsigned n, unsigned k) {
  if (n == 0) throw std::invalid_argument("schur_identity_check: n must be >= 1");
  if (k < n)
    throw std::domain_error("schur_identity_check: identity is asserted only for k >= n");
  SymPoly lhs(n, k), rhs(n, k);
  for (unsigned i = 0; 2 * i <= n; ++i)
    lhs += multiply(schur(row_shape(k - 2 * i), n), schur(column_shape(2 * i), n));
  for (unsigned i = 0; 2 * i + 1 <= n; ++i)
    rhs += multiply(schur(row_shape(k - 2 * i - 1), n), schur(column_shape(2 * i + 1), n));
  return {lhs == rhs, lhs, rhs};
}

}  // namespace symbound
