#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "akv/graded.hpp"
#include "akv/json_io.hpp"
#include "akv/rng.hpp"

using namespace akv;

namespace {

const Generator m1 = c1_gen("M");
const Generator n1 = c1_gen("N");
const Generator a2 = c2_gen("A");

GradedClass gc(const Generator& g) { return GradedClass(g); }

GradedClass random_class(SplitMix64& rng) {
  const std::vector<Generator> deg1 = {m1, n1, aux_gen("u"), aux_gen("v")};
  const std::vector<Monomial> deg2 = {
      Monomial::atom(a2), Monomial::atom(c2_gen("B")),
      Monomial::pair_of(m1, n1), Monomial::pair_of(m1, m1)};
  GradedClass::Deg1Map d1;
  for (const Generator& g : deg1)
    if (rng.next() % 2) d1[g] = rat(rng.next_int(-9, 9), rng.next_int(1, 9));
  GradedClass::Deg2Map d2;
  for (const Monomial& m : deg2)
    if (rng.next() % 2) d2[m] = rat(rng.next_int(-9, 9), rng.next_int(1, 9));
  return GradedClass::from_parts(rat(rng.next_int(-9, 9), rng.next_int(1, 9)),
                                 std::move(d1), std::move(d2));
}

}  // namespace

TEST_CASE("generators and monomials normalize") {
  CHECK(m1.degree() == 1);
  CHECK(a2.degree() == 2);
  CHECK(aux_gen("t").degree() == 1);
  CHECK(Monomial::pair_of(n1, m1) == Monomial::pair_of(m1, n1));
  CHECK(Monomial::pair_of(m1, m1).str() == "c1(M)^2");
  CHECK(Monomial::pair_of(m1, n1).str() == "c1(M)*c1(N)");
  CHECK(Monomial::atom(a2).str() == "c2(A)");
  CHECK_THROWS_AS(Monomial::pair_of(m1, a2), Error);
  CHECK_THROWS_AS(Monomial::atom(m1), Error);
}

TEST_CASE("add") {
  GradedClass x = GradedClass(Rational(3)) + gc(m1);
  CHECK(add(x, GradedClass()) == x);
  CHECK(add(gc(m1), neg(gc(m1))).is_zero());
  GradedClass y = GradedClass(Rational(1)) + gc(n1);
  GradedClass expected = GradedClass(Rational(4)) + gc(m1) + gc(n1);
  CHECK(add(x, y) == expected);
}

TEST_CASE("mul produces order-normalized degree-2 monomials") {
  GradedClass p = mul(gc(m1), gc(n1));
  CHECK(p.coeff(Monomial::pair_of(n1, m1)) == 1);
  CHECK(p.deg2().size() == 1);

  GradedClass sq = mul(gc(m1), gc(m1));
  CHECK(sq.coeff(Monomial::pair_of(m1, m1)) == 1);

  // (2 + m1)(3 + n1) = 6 + 3 m1 + 2 n1 + m1 n1, by hand
  GradedClass lhs = mul(GradedClass(Rational(2)) + gc(m1),
                        GradedClass(Rational(3)) + gc(n1));
  GradedClass rhs = GradedClass(Rational(6)) + scale(Rational(3), gc(m1)) +
                    scale(Rational(2), gc(n1)) + mul(gc(m1), gc(n1));
  CHECK(lhs == rhs);
}

TEST_CASE("grade extracts pure components") {
  GradedClass x = GradedClass(Rational(4)) + gc(m1) + mul(gc(m1), gc(n1));
  CHECK(grade(x, 1) == gc(m1));
  CHECK(grade(x, 0) == GradedClass(Rational(4)));
  CHECK(grade(GradedClass(), 2).is_zero());
  CHECK_THROWS_AS(grade(x, 3), Error);
}

TEST_CASE("invert_unit") {
  const GradedClass one{Rational(1)};
  CHECK(invert_unit(one) == one);

  // (r - c2)^{-1} = 1/r + c2/r^2: geometric series with u = -c2/r
  const long r = 5;
  GradedClass x = GradedClass(Rational(r)) - gc(a2);
  GradedClass expected = GradedClass(rat(1, r)) + scale(rat(1, r * r), gc(a2));
  CHECK(invert_unit(x) == expected);

  CHECK_THROWS_AS(invert_unit(gc(m1)), NotAUnit);

  SplitMix64 rng(2024);
  for (int k = 0; k < 200; ++k) {
    GradedClass u = random_class(rng);
    if (u.deg0() == 0) u = u + GradedClass(Rational(rng.next_int(1, 7)));
    CHECK(mul(u, invert_unit(u)) == one);
  }
}

TEST_CASE("invert_sqrt_unit") {
  const GradedClass one{Rational(1)};
  CHECK(invert_sqrt_unit(one) == one);

  // (4 - c2)^{-1/2} = (1/2)(1 + c2/8) = 1/2 + c2/16: binomial series with
  // u = -c2/4; squaring and multiplying back by 4 - c2 gives exactly 1
  GradedClass x4 = GradedClass(Rational(4)) - gc(a2);
  GradedClass expected = GradedClass(rat(1, 2)) + scale(rat(1, 16), gc(a2));
  GradedClass y = invert_sqrt_unit(x4);
  CHECK(y == expected);
  CHECK(mul(mul(y, y), x4) == one);

  GradedClass x9 = GradedClass(Rational(9)) - gc(a2);
  GradedClass y9 = invert_sqrt_unit(x9);
  CHECK(mul(mul(y9, y9), x9) == one);

  // rational squares are fine, non-squares are rejected
  GradedClass xq = GradedClass(rat(9, 4)) + gc(m1);
  GradedClass yq = invert_sqrt_unit(xq);
  CHECK(mul(mul(yq, yq), xq) == one);
  CHECK_THROWS_AS(invert_sqrt_unit(GradedClass(Rational(3)) - gc(a2)),
                  NotAPerfectSquare);
  CHECK_THROWS_AS(invert_sqrt_unit(GradedClass(rat(9, 2))), NotAPerfectSquare);
  CHECK_THROWS_AS(invert_sqrt_unit(GradedClass(Rational(-4))), NotAPerfectSquare);
  CHECK_THROWS_AS(invert_sqrt_unit(gc(m1)), NotAUnit);

  SplitMix64 rng(99);
  for (int k = 0; k < 200; ++k) {
    GradedClass u = random_class(rng);
    const long root = rng.next_int(1, 12);
    GradedClass sq =
        GradedClass::from_parts(Rational(root * root), u.deg1(), u.deg2());
    GradedClass inv_root = invert_sqrt_unit(sq);
    CHECK(mul(mul(inv_root, inv_root), sq) == one);
  }
}

TEST_CASE("ring axioms on seeded classes, exact") {
  SplitMix64 rng(7);
  for (int k = 0; k < 200; ++k) {
    GradedClass x = random_class(rng);
    GradedClass y = random_class(rng);
    GradedClass z = random_class(rng);
    CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
    CHECK(mul(x, y) == mul(y, x));
    CHECK(mul(x, add(y, z)) == add(mul(x, y), mul(x, z)));
    CHECK(add(x, y) == add(y, x));
    CHECK(sub(x, x).is_zero());

    // grade k of a product is the Cauchy sum of the component products
    for (int g = 0; g <= 2; ++g) {
      GradedClass cauchy;
      for (int i = 0; i <= g; ++i)
        cauchy = add(cauchy, grade(mul(grade(x, i), grade(y, g - i)), g));
      CHECK(grade(mul(x, y), g) == cauchy);
    }
  }
}

TEST_CASE("canonical form stores no zeros") {
  GradedClass x = gc(m1) + gc(n1);
  GradedClass y = sub(x, gc(m1));
  CHECK(y.deg1().size() == 1);
  CHECK(y.deg1().count(m1) == 0);
  GradedClass z = sub(mul(gc(m1), gc(n1)), mul(gc(n1), gc(m1)));
  CHECK(z.deg2().empty());
}

TEST_CASE("pushforward") {
  GradedClass x = mul(gc(m1), gc(n1));
  BaseClass b = pushforward(x);
  CHECK(b.coeff(Monomial::pair_of(m1, n1)) == 1);
  CHECK(b.analytic() == 0);
  CHECK(pushforward(GradedClass()).is_zero());

  SplitMix64 rng(12);
  for (int k = 0; k < 50; ++k) {
    GradedClass u = grade(random_class(rng), 2);
    GradedClass v = grade(random_class(rng), 2);
    CHECK(pushforward(add(u, v)) == add(pushforward(u), pushforward(v)));
  }
}

TEST_CASE("base_equal and base arithmetic") {
  BaseClass x = BaseClass::pushed_atom(Monomial::pair_of(m1, n1), rat(2, 3));
  CHECK(base_equal(x, x));
  CHECK(base_equal(BaseClass::pushed_atom(Monomial::pair_of(m1, n1)),
                   BaseClass::pushed_atom(Monomial::pair_of(n1, m1))));
  CHECK_FALSE(base_equal(BaseClass::pushed_atom(Monomial::pair_of(m1, n1)),
                         BaseClass::pushed_atom(Monomial::pair_of(m1, m1))));

  BaseClass a = BaseClass::analytic_term(rat(5, 2));
  CHECK((x + a - x) == BaseClass::analytic_term(rat(5, 2)));
  CHECK(sub(a, a).is_zero());
  CHECK(scale(Rational(0), x).is_zero());
}

TEST_CASE("exactness: no floating point drift") {
  GradedClass third = scale(rat(1, 3), gc(m1));
  GradedClass back = scale(Rational(3), third);
  CHECK(back == gc(m1));
  Rational r = rat(1, 3) + rat(1, 6);
  CHECK(r == rat(1, 2));
}

TEST_CASE("JSON shape") {
  GradedClass x = GradedClass(rat(1, 2)) + gc(m1) +
                  scale(rat(-3, 4), mul(gc(m1), gc(n1))) + gc(a2);
  Json j = graded_to_json(x);
  CHECK(j["deg0"] == "1/2");
  CHECK(j["deg1"]["c1(M)"] == "1");
  CHECK(j["deg2"]["c1(M)*c1(N)"] == "-3/4");
  CHECK(j["deg2"]["c2(A)"] == "1");

  BaseClass b = BaseClass::pushed_atom(Monomial::pair_of(m1, n1), rat(-1, 4)) +
                BaseClass::analytic_term(Rational(2));
  Json jb = base_to_json(b);
  CHECK(jb["pushed"]["c1(M)*c1(N)"] == "-1/4");
  CHECK(jb["analytic"] == "2");
}

TEST_CASE("rendering") {
  GradedClass x = GradedClass(Rational(4)) - gc(a2);
  CHECK(x.str() == "4 - c2(A)");
  CHECK(GradedClass().str() == "0");
  BaseClass b = BaseClass::pushed_atom(Monomial::pair_of(m1, n1), rat(-1, 4));
  CHECK(b.str() == "-1/4*pi_*(c1(M)*c1(N))");
}
