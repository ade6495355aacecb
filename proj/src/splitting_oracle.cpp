#include "akv/splitting_oracle.hpp"

namespace akv::oracle {

DensePoly DensePoly::constant(Rational v) {
  DensePoly p;
  p.c[0] = std::move(v);
  return p;
}

DensePoly DensePoly::root(Rational coeff_a, Rational coeff_b) {
  DensePoly p;
  p.c[1] = std::move(coeff_a);
  p.c[2] = std::move(coeff_b);
  return p;
}

DensePoly DensePoly::operator+(const DensePoly& o) const {
  DensePoly out;
  for (int i = 0; i < 6; ++i) out.c[i] = c[i] + o.c[i];
  return out;
}

DensePoly DensePoly::operator*(const DensePoly& o) const {
  DensePoly out;
  // degree 0
  out.c[0] = c[0] * o.c[0];
  // degree 1
  out.c[1] = c[0] * o.c[1] + c[1] * o.c[0];
  out.c[2] = c[0] * o.c[2] + c[2] * o.c[0];
  // degree 2; anything above is dropped
  out.c[3] = c[0] * o.c[3] + c[3] * o.c[0] + c[1] * o.c[1];
  out.c[4] = c[0] * o.c[4] + c[4] * o.c[0] + c[1] * o.c[2] + c[2] * o.c[1];
  out.c[5] = c[0] * o.c[5] + c[5] * o.c[0] + c[2] * o.c[2];
  return out;
}

DensePoly DensePoly::scaled(const Rational& s) const {
  DensePoly out;
  for (int i = 0; i < 6; ++i) out.c[i] = c[i] * s;
  return out;
}

DensePoly exp_trunc(const DensePoly& x) {
  return DensePoly::constant(1) + x + (x * x).scaled(rat(1, 2));
}

DensePoly todd1(const DensePoly& x) {
  return DensePoly::constant(1) + x.scaled(rat(1, 2)) +
         (x * x).scaled(rat(1, 12));
}

DensePoly ch_rank2(const DensePoly& x, const DensePoly& y) {
  return exp_trunc(x) + exp_trunc(y);
}

DensePoly todd_rank2(const DensePoly& x, const DensePoly& y) {
  return todd1(x) * todd1(y);
}

DensePoly from_graded(const GradedClass& g, const Generator& ga,
                      const Generator& gb) {
  DensePoly out;
  out.c[0] = g.deg0();
  for (const auto& [gen, coeff] : g.deg1()) {
    if (gen == ga)
      out.c[1] = coeff;
    else if (gen == gb)
      out.c[2] = coeff;
    else
      throw Error("from_graded: unexpected generator " + gen.str());
  }
  const Monomial aa = Monomial::pair_of(ga, ga);
  const Monomial ab = Monomial::pair_of(ga, gb);
  const Monomial bb = Monomial::pair_of(gb, gb);
  for (const auto& [mon, coeff] : g.deg2()) {
    if (mon == aa)
      out.c[3] = coeff;
    else if (mon == ab)
      out.c[4] = coeff;
    else if (mon == bb)
      out.c[5] = coeff;
    else
      throw Error("from_graded: unexpected monomial " + mon.str());
  }
  return out;
}

}  // namespace akv::oracle
