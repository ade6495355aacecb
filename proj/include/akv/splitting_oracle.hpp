#ifndef AKV_SPLITTING_ORACLE_HPP
#define AKV_SPLITTING_ORACLE_HPP

#include <array>

#include "akv/graded.hpp"

namespace akv::oracle {

// Independent route for rank-2 characteristic classes via two formal Chern
// roots. Works on a dense coefficient vector over the fixed monomial basis
// {1, a, b, a^2, a*b, b^2} with its own truncated arithmetic; deliberately
// shares no code with the graded ring or the bundle calculus it cross-checks.
struct DensePoly {
  // c0, ca, cb, caa, cab, cbb
  std::array<Rational, 6> c{};

  static DensePoly constant(Rational v);
  static DensePoly root(Rational coeff_a, Rational coeff_b);  // degree-1

  DensePoly operator+(const DensePoly& o) const;
  DensePoly operator*(const DensePoly& o) const;  // truncated above degree 2
  DensePoly scaled(const Rational& s) const;
  bool operator==(const DensePoly&) const = default;
};

// exp truncated at degree 2: 1 + x + x^2/2, for a pure degree-1 x.
DensePoly exp_trunc(const DensePoly& x);

// Rank-1 Todd series truncated at degree 2: 1 + x/2 + x^2/12.
DensePoly todd1(const DensePoly& x);

// Chern character of the rank-2 bundle with roots x, y: exp(x) + exp(y).
DensePoly ch_rank2(const DensePoly& x, const DensePoly& y);

// Todd class of the same bundle: todd1(x) * todd1(y).
DensePoly todd_rank2(const DensePoly& x, const DensePoly& y);

// Reads a GradedClass over the two generators ga, gb into the dense basis.
// Throws if the class involves any other generator.
DensePoly from_graded(const GradedClass& g, const Generator& ga,
                      const Generator& gb);

}  // namespace akv::oracle

#endif
