#ifndef AKV_CHECKS_HPP
#define AKV_CHECKS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "akv/chern.hpp"
#include "akv/json_io.hpp"

namespace akv::checks {

// Outcome of one named check. Every check here implements a module-level
// invariant from the Hermitian suite or the bundle calculus; the CLI and the
// script interpreter are thin layers over these.
struct CheckResult {
  bool pass = false;
  Json payload;
};

// Residual suites for the canonical isometries. lemma is one of: iota, alpha,
// swap, trace, natiso, bidual, riesz. dims: one dimension per space the lemma
// takes (1, 2 or 3 entries); when empty, each seeded instance draws its
// dimensions by cycling 1..dims_max. Pass iff every residual is < 1e-9.
CheckResult isometry_suite(const std::string& lemma, std::vector<int> dims,
                           int seeds, int dims_max, std::uint64_t seed_offset);

// Number of spaces the lemma takes; 0 for unknown names.
int isometry_arity(const std::string& lemma);

// Deligne-pairing identity. With exact_value set, additionally asserts the
// closed form: both sides literally equal -1/rank(a) * pi_*(c1(m) c1(n)) with
// no analytic term and no other monomials (requires m, n with generic
// single-generator c1 data).
CheckResult pairing(const BundleSymbol& m, const BundleSymbol& n,
                    const BundleSymbol& a, const BundleSymbol& t,
                    const Rational& genus, bool exact_value);

// Closed form of ch(a)^{-1/2}: 1/n + c2(a)/(2 n^3), and the exact inverse
// square contract y*y*ch(a) == 1.
CheckResult sqrt_form(const BundleSymbol& a);

// a_c1(m, a) == c1(m)/n structurally.
CheckResult ac1_form(const BundleSymbol& m, const BundleSymbol& a);

// ch of an Azumaya symbol is rank - c2, degree-1 part zero, and the dual
// symbol has the same ch.
CheckResult azumaya_ch(const BundleSymbol& a);

// The two routes to ch(Hom_A(m,n)) agree:
// ch(dual m) ch(n) ch(a)^{-1} == ach(dual m, a) * ach(n, a).
CheckResult hom_consistency(const BundleSymbol& m, const BundleSymbol& n,
                            const BundleSymbol& a);

// Rank-2 ch and Todd against the independent splitting-principle oracle,
// exact rational equality on seeded random roots.
CheckResult split_oracle(int seeds, std::uint64_t seed_offset);

// Ring axioms, degreewise product consistency, and the invert_unit /
// invert_sqrt_unit contracts on seeded random classes. Exact.
CheckResult ring_axioms(int seeds, std::uint64_t seed_offset);

}  // namespace akv::checks

#endif
