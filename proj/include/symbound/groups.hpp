#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "symbound/numeric.hpp"

namespace symbound {

// Class function on a finite group: one complex value per conjugacy class.
struct ClassFunction {
  std::vector<std::complex<double>> values;
};

// Conjugacy-class data of a finite group with its irreducible characters.
// power_maps[m][c] is the class of g^m for g in class c.
struct CharTable {
  std::string name;
  std::vector<std::string> class_labels;
  std::vector<unsigned long> class_sizes;
  unsigned long order = 0;
  std::map<unsigned, std::vector<unsigned>> power_maps;
  std::vector<ClassFunction> irreducibles;

  std::size_t class_count() const { return class_sizes.size(); }
  unsigned irrep_dim(std::size_t i) const;  // value at the identity class, rounded

  // Class-size-weighted Hermitian inner product (1/|G|) sum size_c a(c) conj(b(c)).
  std::complex<double> inner_product(const ClassFunction& a, const ClassFunction& b) const;

  // Checks sum of sizes, sum of squared dimensions and row orthogonality;
  // throws std::runtime_error on violation.
  void validate(double tol = 1e-9) const;
};

struct Decomposition {
  std::vector<unsigned long> multiplicities;  // one per irreducible, in table order
  double residual_norm = 0.0;

  unsigned long summand_count() const;
};

// Character table of the Heisenberg group of order p^3 (upper unitriangular
// 3x3 matrices over Z/p): p^2 linear characters trivial on the center and
// p-1 characters of degree p supported on the center. Class data comes from
// brute-force enumeration of the group elements; power maps are provided for
// exponents 2 and 3. p = 2 gives the dihedral group of order 8. Rejects
// composite p.
CharTable heisenberg_table(unsigned long p);

// Alternating group A4: classes 1, (2,2), two 3-cycle classes (sizes
// 1,3,4,4); irreducibles of dimensions 1,1,1,3. The squaring map swaps the
// two 3-cycle classes.
CharTable a4_table();

// Pointwise m-th power of the character values (character of the m-fold
// tensor power).
ClassFunction tensor_power(const ClassFunction& chi, unsigned m);

// Symmetric and alternating square of a character:
//   sym2(c) = (chi(c)^2 + chi(c^2)) / 2,  alt2(c) = (chi(c)^2 - chi(c^2)) / 2.
// Requires the table to carry the exponent-2 power map.
std::pair<ClassFunction, ClassFunction> sym2_alt2(const ClassFunction& chi,
                                                  const CharTable& table);

// Inner product with an irreducible, rounded to the nearest integer; rejects
// values further than tol from an integer (inconsistent table data).
unsigned long multiplicity(const ClassFunction& chi, const ClassFunction& irr,
                           const CharTable& table, double tol = 1e-6);

// Multiplicities against every irreducible plus an exact-reconstruction
// residual check.
Decomposition decompose(const ClassFunction& chi, const CharTable& table, double tol = 1e-6);

// Direct product: classes are tuples, sizes multiply, irreducibles are outer
// tensor products, power maps act componentwise (common exponents only).
CharTable product_table(const std::vector<CharTable>& tables);

// The two degree-2 complex irreducible characters of the binary icosahedral
// group over its 9-class layout, exchanged by the field automorphism
// sqrt(5) -> -sqrt(5). Values are (a + b*sqrt(5))/2 with integer a, b.
std::pair<ClassFunction, ClassFunction> icosahedral_degree2_characters();

const std::vector<std::string>& icosahedral_class_labels();

}  // namespace symbound
