#ifndef AKV_CHERN_HPP
#define AKV_CHERN_HPP

#include <string>
#include <utility>
#include <vector>

#include "akv/graded.hpp"

namespace akv {

enum class Flavor { Plain, Azumaya, Tangent, Derived };

std::string flavor_name(Flavor f);

// Named formal Hermitian bundle with rank and Chern data. c1 must be pure
// degree 1, c2 pure degree 2. Azumaya symbols carry c1 = 0 (imposed at
// declaration, rational coefficients) and a perfect-square rank; tangent
// symbols have rank 1 and c2 = 0. Derived symbols remember how they were
// built.
struct BundleSymbol {
  std::string name;
  int rank = 1;
  GradedClass c1;
  GradedClass c2;
  Flavor flavor = Flavor::Plain;
  std::string provenance;
};

BundleSymbol make_bundle(std::string name, int rank, GradedClass c1,
                         GradedClass c2, Flavor flavor = Flavor::Plain);
// Generic module symbol: fresh generators c1(name), c2(name).
BundleSymbol make_module(std::string name, int rank);
// c1 is forced to zero; rank must be a perfect square.
BundleSymbol make_azumaya(std::string name, int rank, GradedClass c2);
BundleSymbol make_azumaya(std::string name, int rank);  // c2 = c2(name)
BundleSymbol make_tangent(std::string name, GradedClass c1);
BundleSymbol make_tangent(std::string name);  // c1 = c1(name)
// Rank-1 bundle with generator c1(name) and c2 = 0.
BundleSymbol make_line(std::string name);

bool is_perfect_square(long n);
// n with n^2 = rank(a); requires an Azumaya symbol.
int morita_rank(const BundleSymbol& a);

// rank + c1 + (c1^2 - 2 c2)/2, truncated at degree 2.
GradedClass chern_character(const BundleSymbol& b);

// Same rank, c1 negated, c2 unchanged; ch picks up a sign on odd degrees.
BundleSymbol dual_symbol(const BundleSymbol& b);

// 1 + c1/2 + (c1^2 + c2)/12.
GradedClass todd(const BundleSymbol& b);

// ch(m) * ch(a)^{-1/2}. a must be Azumaya.
GradedClass a_chern_character(const BundleSymbol& m, const BundleSymbol& a);

// Degree-1 part of the a-Chern character; equals c1(m)/n for rank(a) = n^2,
// which is asserted internally.
GradedClass a_c1(const BundleSymbol& m, const BundleSymbol& a);

// Symbol for Hom_A(m, n), with Chern data read off from
// ch(dual(m)) ch(n) ch(a)^{-1}: rank is the degree-0 part (must be a positive
// integer), c1 the degree-1 part, c2 = (c1^2 - 2 ch^(2))/2. The class is also
// recomputed as ach(dual(m), a) * ach(n, a) and both routes must agree.
BundleSymbol hom_a_chern(const BundleSymbol& m, const BundleSymbol& n,
                         const BundleSymbol& a);

// Riemann-Roch bookkeeping for the determinant line:
//   pushforward(grade(ch(e) Td(t), 2)) - rank(e) (1-g) * analytic generator.
// t must be a tangent symbol.
BaseClass lambda_c1(const BundleSymbol& e, const BundleSymbol& t,
                    const Rational& genus);

struct PairingReport {
  BaseClass lhs;  // alternating sum of the four lambda classes
  BaseClass rhs;  // -pi_*(a_c1(m) a_c1(n))
  bool equal = false;
  std::vector<std::pair<std::string, BaseClass>> lambdas;
  int rank_a = 1, rank_m = 1, rank_n = 1;
  int morita = 1;  // sqrt of rank_a
  Rational genus;
  bool rank_hypothesis = true;  // rank(m) == rank(n) == rank(a)

  // Mirrors the derivation line by line, one equation per line.
  std::string render_text() const;
};

// First Chern class of the A-Deligne pairing <m, n>_A versus the closed form.
// Requires a Azumaya and t tangent. The line-bundle hypothesis
// rank(m) == rank(n) == rank(a) is enforced unless allow_rank_mismatch is set,
// in which case both sides are still computed and reported (no claim is made
// in that regime; the report simply carries the discrepancy).
PairingReport deligne_pairing_c1(const BundleSymbol& m, const BundleSymbol& n,
                                 const BundleSymbol& a, const BundleSymbol& t,
                                 const Rational& genus,
                                 bool allow_rank_mismatch = false);

}  // namespace akv

#endif
