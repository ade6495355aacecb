#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "akv/chern.hpp"
#include "akv/json_io.hpp"
#include "akv/rng.hpp"
#include "akv/splitting_oracle.hpp"

using namespace akv;

namespace {

GradedClass gc(const Generator& g) { return GradedClass(g); }

const GradedClass one{Rational(1)};

GradedClass random_deg1(SplitMix64& rng) {
  GradedClass::Deg1Map d;
  for (const Generator& g : {c1_gen("P"), c1_gen("Q"), aux_gen("w")})
    if (rng.next() % 2) d[g] = rat(rng.next_int(-9, 9), rng.next_int(1, 9));
  return GradedClass::from_parts(0, std::move(d), {});
}

GradedClass random_deg2(SplitMix64& rng) {
  GradedClass::Deg2Map d;
  for (const Monomial& m :
       {Monomial::atom(c2_gen("P")), Monomial::pair_of(c1_gen("P"), c1_gen("Q"))})
    if (rng.next() % 2) d[m] = rat(rng.next_int(-9, 9), rng.next_int(1, 9));
  return GradedClass::from_parts(0, {}, std::move(d));
}

}  // namespace

TEST_CASE("symbol factories enforce flavor invariants") {
  CHECK(make_azumaya("A", 4).rank == 4);
  CHECK(make_azumaya("A", 4).c1.is_zero());
  CHECK_THROWS_AS(make_azumaya("A", 5), NotAzumaya);
  CHECK_THROWS_AS(
      make_bundle("A", 4, gc(c1_gen("A")), GradedClass(), Flavor::Azumaya),
      NotAzumaya);
  CHECK_THROWS_AS(
      make_bundle("T", 2, gc(c1_gen("T")), GradedClass(), Flavor::Tangent),
      NotTangent);
  CHECK_THROWS_AS(make_bundle("X", 0, GradedClass(), GradedClass()), Error);
  // c1 must be pure degree 1
  CHECK_THROWS_AS(make_bundle("X", 2, gc(c2_gen("X")), GradedClass()), Error);
  CHECK(morita_rank(make_azumaya("A", 49)) == 7);
}

TEST_CASE("chern_character") {
  BundleSymbol a = make_azumaya("A", 4);
  CHECK(chern_character(a) == GradedClass(Rational(4)) - gc(c2_gen("A")));

  // line bundle: truncated exponential of c1
  GradedClass x = gc(c1_gen("L"));
  BundleSymbol line = make_line("L");
  CHECK(chern_character(line) ==
        one + x + scale(rat(1, 2), mul(x, x)));

  // rank 2: 2 + c1 + (c1^2 - 2 c2)/2
  GradedClass y = gc(c2_gen("S"));
  BundleSymbol s = make_bundle("S", 2, x, y);
  GradedClass expected =
      GradedClass(Rational(2)) + x +
      scale(rat(1, 2), mul(x, x) - scale(Rational(2), y));
  CHECK(chern_character(s) == expected);
}

TEST_CASE("chern_character matches the splitting-principle oracle") {
  const Generator g1 = aux_gen("r1");
  const Generator g2 = aux_gen("r2");
  SplitMix64 rng(17);
  for (int k = 0; k < 50; ++k) {
    const Rational p = rat(rng.next_int(-5, 5), rng.next_int(1, 4));
    const Rational q = rat(rng.next_int(-5, 5), rng.next_int(1, 4));
    const Rational r = rat(rng.next_int(-5, 5), rng.next_int(1, 4));
    const Rational s = rat(rng.next_int(-5, 5), rng.next_int(1, 4));
    GradedClass x = scale(p, gc(g1)) + scale(q, gc(g2));
    GradedClass y = scale(r, gc(g1)) + scale(s, gc(g2));
    BundleSymbol b = make_bundle("S", 2, x + y, mul(x, y));

    oracle::DensePoly xr = oracle::DensePoly::root(p, q);
    oracle::DensePoly yr = oracle::DensePoly::root(r, s);
    CHECK(oracle::from_graded(chern_character(b), g1, g2) ==
          oracle::ch_rank2(xr, yr));
    CHECK(oracle::from_graded(todd(b), g1, g2) == oracle::todd_rank2(xr, yr));
  }
}

TEST_CASE("dual_symbol") {
  BundleSymbol l = make_line("L");
  BundleSymbol ld = dual_symbol(l);
  CHECK(ld.c1 == neg(l.c1));
  CHECK(ld.rank == 1);
  CHECK(ld.flavor == Flavor::Derived);
  CHECK(ld.provenance == "dual(L)");

  BundleSymbol a = make_azumaya("A", 9);
  CHECK(chern_character(dual_symbol(a)) == chern_character(a));

  BundleSymbol m = make_module("M", 3);
  BundleSymbol mdd = dual_symbol(dual_symbol(m));
  CHECK(mdd.c1 == m.c1);
  CHECK(mdd.c2 == m.c2);
  CHECK(mdd.rank == m.rank);

  // ch of the dual is the degree-wise sign alternation
  SplitMix64 rng(3);
  for (int k = 0; k < 40; ++k) {
    BundleSymbol b = make_bundle("B", 1 + static_cast<int>(rng.next_int(0, 5)),
                                 random_deg1(rng), random_deg2(rng));
    GradedClass ch = chern_character(b);
    GradedClass chd = chern_character(dual_symbol(b));
    CHECK(grade(chd, 0) == grade(ch, 0));
    CHECK(grade(chd, 1) == neg(grade(ch, 1)));
    CHECK(grade(chd, 2) == grade(ch, 2));
  }
}

TEST_CASE("todd") {
  BundleSymbol trivial = make_bundle("O", 1, GradedClass(), GradedClass());
  CHECK(todd(trivial) == one);

  BundleSymbol t = make_tangent("T");
  GradedClass t1 = gc(c1_gen("T"));
  CHECK(todd(t) == one + scale(rat(1, 2), t1) + scale(rat(1, 12), mul(t1, t1)));

  GradedClass x = gc(c1_gen("S"));
  GradedClass y = gc(c2_gen("S"));
  BundleSymbol s = make_bundle("S", 2, x, y);
  CHECK(todd(s) == one + scale(rat(1, 2), x) +
                       scale(rat(1, 12), mul(x, x) + y));
}

TEST_CASE("a_chern_character and a_c1") {
  BundleSymbol a4 = make_azumaya("A", 4);
  CHECK(grade(a_chern_character(a4, a4), 1).is_zero());
  CHECK(a_c1(a4, a4).is_zero());

  BundleSymbol m = make_module("M", 4);
  CHECK(grade(a_chern_character(m, a4), 1) == scale(rat(1, 2), gc(c1_gen("M"))));
  CHECK(a_c1(m, a4) == scale(rat(1, 2), gc(c1_gen("M"))));

  BundleSymbol a9 = make_azumaya("B", 9);
  BundleSymbol m9 = make_module("M9", 9);
  CHECK(a_c1(m9, a9) == scale(rat(1, 3), gc(c1_gen("M9"))));

  // trivial algebra: the a-Chern character is the plain one
  BundleSymbol o = make_azumaya("O", 1, GradedClass());
  CHECK(a_chern_character(m, o) == chern_character(m));

  CHECK_THROWS_AS(a_chern_character(m, make_module("P", 4)), NotAzumaya);
}

TEST_CASE("hom_a_chern") {
  BundleSymbol a = make_azumaya("A", 4);
  BundleSymbol haa = hom_a_chern(a, a, a);
  CHECK(haa.rank == 4);
  CHECK(haa.flavor == Flavor::Derived);

  BundleSymbol m = make_module("M", 4);
  BundleSymbol n = make_module("N", 4);
  BundleSymbol h = hom_a_chern(m, n, a);
  CHECK(h.rank == 4);  // rk(M) rk(N) / rk(A), the Morita count
  CHECK(chern_character(h) ==
        mul(mul(chern_character(dual_symbol(m)), chern_character(n)),
            invert_unit(chern_character(a))));
  CHECK(chern_character(h) ==
        mul(a_chern_character(dual_symbol(m), a), a_chern_character(n, a)));

  // trivial algebra: Hom_O(M, N) has the Chern data of dual(M) (x) N
  BundleSymbol o = make_azumaya("O", 1, GradedClass());
  BundleSymbol m2 = make_module("M2", 2);
  BundleSymbol n3 = make_module("N3", 3);
  BundleSymbol ho = hom_a_chern(m2, n3, o);
  CHECK(ho.rank == 6);
  CHECK(chern_character(ho) ==
        mul(chern_character(dual_symbol(m2)), chern_character(n3)));

  CHECK_THROWS_AS(hom_a_chern(m2, n3, a), NonIntegralRank);  // 6/4
}

TEST_CASE("lambda_c1") {
  BundleSymbol t = make_tangent("T");
  GradedClass t1 = gc(c1_gen("T"));
  const Monomial tsq = Monomial::pair_of(c1_gen("T"), c1_gen("T"));

  BundleSymbol e1 = make_bundle("E", 1, GradedClass(), GradedClass());
  BaseClass at_g1 = lambda_c1(e1, t, Rational(1));
  CHECK(at_g1 == BaseClass::pushed_atom(tsq, rat(1, 12)));
  CHECK(at_g1.analytic() == 0);

  BaseClass at_g0 = lambda_c1(e1, t, Rational(0));
  CHECK(at_g0 == BaseClass::pushed_atom(tsq, rat(1, 12)) +
                     BaseClass::analytic_term(Rational(-1)));

  // the analytic coefficient is rank-linear
  BundleSymbol e2 = make_bundle("E2", 2, GradedClass(), GradedClass());
  for (int g = -1; g <= 3; ++g) {
    CHECK(lambda_c1(e2, t, Rational(g)).analytic() ==
          Rational(2) * lambda_c1(e1, t, Rational(g)).analytic());
  }

  CHECK_THROWS_AS(lambda_c1(e1, make_module("X", 1), Rational(0)), NotTangent);
}

TEST_CASE("deligne_pairing_c1") {
  BundleSymbol t = make_tangent("T");

  SUBCASE("m = n = a collapses to zero") {
    BundleSymbol a = make_azumaya("A", 4);
    PairingReport rep = deligne_pairing_c1(a, a, a, t, Rational(0));
    CHECK(rep.equal);
    CHECK(rep.lhs.is_zero());
    CHECK(rep.rhs.is_zero());
  }

  SUBCASE("generic rank 4: -(1/4) pi(c1(M) c1(N))") {
    BundleSymbol a = make_azumaya("A", 4);
    BundleSymbol m = make_module("M", 4);
    BundleSymbol n = make_module("N", 4);
    const BaseClass expected = BaseClass::pushed_atom(
        Monomial::pair_of(c1_gen("M"), c1_gen("N")), rat(-1, 4));
    for (int g = 0; g <= 2; ++g) {
      PairingReport rep = deligne_pairing_c1(m, n, a, t, Rational(g));
      CHECK(rep.equal);
      CHECK(rep.lhs == expected);
      CHECK(rep.rhs == expected);
      CHECK(rep.lhs.analytic() == 0);
      CHECK(rep.morita == 2);
    }
  }

  SUBCASE("classical case: A = O_X recovers the dual of the Deligne pairing") {
    BundleSymbol o = make_azumaya("O", 1, GradedClass());
    BundleSymbol l = make_line("L");
    BundleSymbol k = make_line("K");
    PairingReport rep = deligne_pairing_c1(l, k, o, t, Rational(0));
    CHECK(rep.equal);
    CHECK(rep.lhs == BaseClass::pushed_atom(
                         Monomial::pair_of(c1_gen("L"), c1_gen("K")),
                         Rational(-1)));
  }

  SUBCASE("rank hypothesis") {
    BundleSymbol a = make_azumaya("A", 4);
    BundleSymbol m8 = make_module("M8", 8);
    BundleSymbol n = make_module("N", 4);
    CHECK_THROWS_AS(deligne_pairing_c1(m8, n, a, t, Rational(0)), RankMismatch);
    // computation is still offered on request; no claim, just a report
    PairingReport rep = deligne_pairing_c1(m8, n, a, t, Rational(0), true);
    CHECK_FALSE(rep.rank_hypothesis);
    CHECK(rep.lambdas.size() == 4);
  }

  SUBCASE("flavor validation") {
    BundleSymbol m = make_module("M", 4);
    BundleSymbol n = make_module("N", 4);
    CHECK_THROWS_AS(deligne_pairing_c1(m, n, m, t, Rational(0)), NotAzumaya);
    BundleSymbol a = make_azumaya("A", 4);
    CHECK_THROWS_AS(deligne_pairing_c1(m, n, a, n, Rational(0)), NotTangent);
  }
}

TEST_CASE("pairing report serialization and rendering") {
  BundleSymbol a = make_azumaya("A", 4);
  BundleSymbol m = make_module("M", 4);
  BundleSymbol n = make_module("N", 4);
  BundleSymbol t = make_tangent("T");
  PairingReport rep = deligne_pairing_c1(m, n, a, t, rat(1, 2));

  Json j = pairing_report_to_json(rep);
  CHECK(j["equal"] == true);
  CHECK(j["lambdas"].size() == 4);
  CHECK(j["parameters"]["n"] == 2);
  CHECK(j["parameters"]["g"] == "1/2");
  CHECK(j["lhs"]["pushed"]["c1(M)*c1(N)"] == "-1/4");
  CHECK(j["lhs"]["analytic"] == "0");

  std::string text = rep.render_text();
  CHECK(text.find("c1(<M,N>_A)") != std::string::npos);
  CHECK(text.find("equal: true") != std::string::npos);
  CHECK(text.find("-1/4*pi_*(c1(M)*c1(N))") != std::string::npos);
}
