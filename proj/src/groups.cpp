#include "symbound/groups.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace symbound {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::complex<double> root_of_unity(unsigned long num, unsigned long den) {
  const double angle = kTwoPi * static_cast<double>(num % den) / static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

unsigned CharTable::irrep_dim(std::size_t i) const {
  const double d = irreducibles.at(i).values.at(0).real();
  return static_cast<unsigned>(std::lround(d));
}

std::complex<double> CharTable::inner_product(const ClassFunction& a,
                                              const ClassFunction& b) const {
  if (a.values.size() != class_count() || b.values.size() != class_count())
    throw std::invalid_argument("inner_product: class count mismatch");
  std::complex<double> s = 0.0;
  for (std::size_t c = 0; c < class_count(); ++c)
    s += static_cast<double>(class_sizes[c]) * a.values[c] * std::conj(b.values[c]);
  return s / static_cast<double>(order);
}

void CharTable::validate(double tol) const {
  unsigned long size_sum = 0;
  for (unsigned long s : class_sizes) size_sum += s;
  if (size_sum != order) throw std::runtime_error(name + ": class sizes do not sum to |G|");
  unsigned long dim_sq = 0;
  for (std::size_t i = 0; i < irreducibles.size(); ++i) {
    const unsigned d = irrep_dim(i);
    dim_sq += static_cast<unsigned long>(d) * d;
  }
  if (dim_sq != order)
    throw std::runtime_error(name + ": squared dimensions do not sum to |G|");
  for (std::size_t i = 0; i < irreducibles.size(); ++i)
    for (std::size_t j = 0; j < irreducibles.size(); ++j) {
      const std::complex<double> ip = inner_product(irreducibles[i], irreducibles[j]);
      const double expect = i == j ? 1.0 : 0.0;
      if (std::abs(ip - expect) > tol)
        throw std::runtime_error(name + ": row orthogonality violated");
    }
}

unsigned long Decomposition::summand_count() const {
  unsigned long s = 0;
  for (unsigned long m : multiplicities) s += m;
  return s;
}

namespace {

// Heisenberg group element (x, y, z), the unitriangular matrix with
// off-diagonal entries x, y and corner z over Z/p.
struct HeElem {
  unsigned long x, y, z;
};

struct HeisenbergGroup {
  unsigned long p;

  unsigned long index(const HeElem& e) const { return (e.x * p + e.y) * p + e.z; }
  HeElem element(unsigned long idx) const {
    return {idx / (p * p), (idx / p) % p, idx % p};
  }
  HeElem mul(const HeElem& a, const HeElem& b) const {
    return {(a.x + b.x) % p, (a.y + b.y) % p, (a.z + b.z + a.x * b.y) % p};
  }
  // (x,y,z)^{-1} = (-x, -y, -z + x*y)
  HeElem inverse(const HeElem& a) const {
    return {(p - a.x) % p, (p - a.y) % p, ((p - a.z) % p + a.x * a.y) % p};
  }
};

}  // namespace

CharTable heisenberg_table(unsigned long p) {
  if (!is_prime(p)) throw std::domain_error("heisenberg_table: p must be prime");
  const HeisenbergGroup g{p};
  const unsigned long order = p * p * p;

  // Conjugacy classes by direct orbit computation, discovered in element
  // order so the identity class is first and the center classes follow.
  std::vector<long> class_of(order, -1);
  std::vector<unsigned long> class_rep;
  std::vector<unsigned long> class_sizes;
  for (unsigned long idx = 0; idx < order; ++idx) {
    if (class_of[idx] != -1) continue;
    const unsigned cls = static_cast<unsigned>(class_rep.size());
    class_rep.push_back(idx);
    unsigned long size = 0;
    const HeElem e = g.element(idx);
    for (unsigned long h = 0; h < order; ++h) {
      const HeElem hh = g.element(h);
      const HeElem conj = g.mul(g.mul(hh, e), g.inverse(hh));
      const unsigned long ci = g.index(conj);
      if (class_of[ci] == -1) {
        class_of[ci] = cls;
        ++size;
      }
    }
    class_sizes.push_back(size);
  }

  CharTable t;
  t.name = p == 2 ? "D8" : "He_" + std::to_string(p);
  t.order = order;
  t.class_sizes = class_sizes;
  for (unsigned long rep : class_rep) {
    const HeElem e = g.element(rep);
    t.class_labels.push_back("(" + std::to_string(e.x) + "," + std::to_string(e.y) + "," +
                             std::to_string(e.z) + ")");
  }

  for (unsigned m : {2u, 3u}) {
    std::vector<unsigned> pm(class_rep.size());
    for (std::size_t c = 0; c < class_rep.size(); ++c) {
      HeElem e = g.element(class_rep[c]);
      HeElem acc{0, 0, 0};
      for (unsigned r = 0; r < m; ++r) acc = g.mul(acc, e);
      pm[c] = static_cast<unsigned>(class_of[g.index(acc)]);
    }
    t.power_maps.emplace(m, std::move(pm));
  }

  // p^2 linear characters, pulled back from the abelianization (x, y).
  for (unsigned long j = 0; j < p; ++j)
    for (unsigned long l = 0; l < p; ++l) {
      ClassFunction chi;
      for (unsigned long rep : class_rep) {
        const HeElem e = g.element(rep);
        chi.values.push_back(root_of_unity(j * e.x + l * e.y, p));
      }
      t.irreducibles.push_back(std::move(chi));
    }
  // p-1 characters of degree p: p * (central character) on the center,
  // zero elsewhere.
  for (unsigned long u = 1; u < p; ++u) {
    ClassFunction chi;
    for (unsigned long rep : class_rep) {
      const HeElem e = g.element(rep);
      if (e.x == 0 && e.y == 0)
        chi.values.push_back(static_cast<double>(p) * root_of_unity(u * e.z, p));
      else
        chi.values.push_back(0.0);
    }
    t.irreducibles.push_back(std::move(chi));
  }

  t.validate();
  return t;
}

CharTable a4_table() {
  CharTable t;
  t.name = "A4";
  t.class_labels = {"1", "(2,2)", "3a", "3b"};
  t.class_sizes = {1, 3, 4, 4};
  t.order = 12;
  // Squaring fixes 1 and the involutions and swaps the two 3-cycle classes;
  // cubing sends 3-cycles to the identity.
  t.power_maps.emplace(2u, std::vector<unsigned>{0, 0, 3, 2});
  t.power_maps.emplace(3u, std::vector<unsigned>{0, 1, 0, 0});
  const std::complex<double> w = root_of_unity(1, 3);
  const std::complex<double> w2 = root_of_unity(2, 3);
  t.irreducibles = {
      {{1.0, 1.0, 1.0, 1.0}},
      {{1.0, 1.0, w, w2}},
      {{1.0, 1.0, w2, w}},
      {{3.0, -1.0, 0.0, 0.0}},
  };
  t.validate();
  return t;
}

ClassFunction tensor_power(const ClassFunction& chi, unsigned m) {
  if (m == 0) throw std::invalid_argument("tensor_power: m must be >= 1");
  ClassFunction out;
  out.values.reserve(chi.values.size());
  for (const auto& v : chi.values) {
    std::complex<double> acc = v;
    for (unsigned r = 1; r < m; ++r) acc *= v;
    out.values.push_back(acc);
  }
  return out;
}

std::pair<ClassFunction, ClassFunction> sym2_alt2(const ClassFunction& chi,
                                                  const CharTable& table) {
  auto it = table.power_maps.find(2u);
  if (it == table.power_maps.end())
    throw std::invalid_argument("sym2_alt2: table has no exponent-2 power map");
  const auto& sq = it->second;
  if (chi.values.size() != table.class_count())
    throw std::invalid_argument("sym2_alt2: class count mismatch");
  ClassFunction sym, alt;
  for (std::size_t c = 0; c < chi.values.size(); ++c) {
    const std::complex<double> v2 = chi.values[c] * chi.values[c];
    const std::complex<double> vs = chi.values[sq[c]];
    sym.values.push_back((v2 + vs) / 2.0);
    alt.values.push_back((v2 - vs) / 2.0);
  }
  return {sym, alt};
}

unsigned long multiplicity(const ClassFunction& chi, const ClassFunction& irr,
                           const CharTable& table, double tol) {
  const std::complex<double> ip = table.inner_product(chi, irr);
  const double rounded = std::round(ip.real());
  if (std::abs(ip.real() - rounded) > tol || std::abs(ip.imag()) > tol || rounded < 0)
    throw std::runtime_error("multiplicity: inner product is not a nonnegative integer");
  return static_cast<unsigned long>(rounded);
}

Decomposition decompose(const ClassFunction& chi, const CharTable& table, double tol) {
  Decomposition d;
  d.multiplicities.reserve(table.irreducibles.size());
  for (const auto& irr : table.irreducibles)
    d.multiplicities.push_back(multiplicity(chi, irr, table, tol));
  double worst = 0.0;
  for (std::size_t c = 0; c < table.class_count(); ++c) {
    std::complex<double> rec = 0.0;
    for (std::size_t i = 0; i < table.irreducibles.size(); ++i)
      rec += static_cast<double>(d.multiplicities[i]) * table.irreducibles[i].values[c];
    worst = std::max(worst, std::abs(rec - chi.values[c]));
  }
  d.residual_norm = worst;
  if (worst > tol)
    throw std::runtime_error("decompose: reconstruction residual exceeds tolerance");
  return d;
}

CharTable product_table(const std::vector<CharTable>& tables) {
  if (tables.empty()) throw std::invalid_argument("product_table: need at least one factor");
  CharTable acc = tables[0];
  for (std::size_t fi = 1; fi < tables.size(); ++fi) {
    const CharTable& b = tables[fi];
    CharTable t;
    t.name = acc.name + "x" + b.name;
    t.order = acc.order * b.order;
    for (std::size_t i = 0; i < acc.class_count(); ++i)
      for (std::size_t j = 0; j < b.class_count(); ++j) {
        t.class_labels.push_back(acc.class_labels[i] + "|" + b.class_labels[j]);
        t.class_sizes.push_back(acc.class_sizes[i] * b.class_sizes[j]);
      }
    for (const auto& [m, pa] : acc.power_maps) {
      auto it = b.power_maps.find(m);
      if (it == b.power_maps.end()) continue;
      const auto& pb = it->second;
      std::vector<unsigned> pm;
      pm.reserve(t.class_count());
      for (std::size_t i = 0; i < acc.class_count(); ++i)
        for (std::size_t j = 0; j < b.class_count(); ++j)
          pm.push_back(static_cast<unsigned>(pa[i] * b.class_count() + pb[j]));
      t.power_maps.emplace(m, std::move(pm));
    }
    for (const auto& ca : acc.irreducibles)
      for (const auto& cb : b.irreducibles) {
        ClassFunction chi;
        chi.values.reserve(t.class_count());
        for (std::size_t i = 0; i < acc.class_count(); ++i)
          for (std::size_t j = 0; j < b.class_count(); ++j)
            chi.values.push_back(ca.values[i] * cb.values[j]);
        t.irreducibles.push_back(std::move(chi));
      }
    acc = std::move(t);
  }
  acc.validate();
  return acc;
}

namespace {

// (a + b*sqrt(5)) / 2 value pairs for the degree-2 rows, one per class in
// the layout [1], [-1], [a], [a^2], [a^3], [a^4], [b], [b^2], [c].
constexpr int kIcoA[9] = {4, -4, 1, -1, 1, -1, 2, -2, 0};
constexpr int kIcoB[9] = {0, 0, 1, 1, -1, -1, 0, 0, 0};

}  // namespace

std::pair<ClassFunction, ClassFunction> icosahedral_degree2_characters() {
  const double s5 = std::sqrt(5.0);
  ClassFunction rho, rho_tau;
  for (int c = 0; c < 9; ++c) {
    rho.values.push_back((kIcoA[c] + kIcoB[c] * s5) / 2.0);
    rho_tau.values.push_back((kIcoA[c] - kIcoB[c] * s5) / 2.0);
  }
  return {rho, rho_tau};
}

const std::vector<std::string>& icosahedral_class_labels() {
  static const std::vector<std::string> labels{"[1]",   "[-1]",  "[a]",  "[a^2]", "[a^3]",
                                               "[a^4]", "[b]",   "[b^2]", "[c]"};
  return labels;
}

}  // namespace symbound
