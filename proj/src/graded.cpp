#include "akv/graded.hpp"

#include <iostream>
#include <sstream>

namespace akv {

namespace {

template <typename Map>
void strip_zeros(Map& m) {
  for (auto it = m.begin(); it != m.end();) {
    if (it->second == 0)
      it = m.erase(it);
    else
      ++it;
  }
}

template <typename Map, typename Key>
void accumulate(Map& m, const Key& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = m.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

// Renders "coef*term" with the usual cosmetic rules for 1 and -1.
void append_term(std::ostringstream& out, bool& first, const Rational& c,
                 const std::string& term) {
  std::string mag = to_string(abs(c));
  const bool negative = sgn(c) < 0;
  if (first) {
    if (negative) out << "-";
    first = false;
  } else {
    out << (negative ? " - " : " + ");
  }
  if (term.empty()) {
    out << mag;
  } else if (mag == "1") {
    out << term;
  } else {
    out << mag << "*" << term;
  }
}

}  // namespace

std::string Generator::str() const {
  switch (kind) {
    case GenKind::C1:
      return "c1(" + owner + ")";
    case GenKind::C2:
      return "c2(" + owner + ")";
    case GenKind::Aux:
      return "x(" + owner + ")";
  }
  return "?";
}

Generator c1_gen(std::string owner) { return Generator{GenKind::C1, std::move(owner)}; }
Generator c2_gen(std::string owner) { return Generator{GenKind::C2, std::move(owner)}; }
Generator aux_gen(std::string owner) { return Generator{GenKind::Aux, std::move(owner)}; }

Monomial Monomial::pair_of(Generator x, Generator y) {
  if (x.degree() != 1 || y.degree() != 1)
    throw Error("pair monomials take two degree-1 generators");
  if (y < x) std::swap(x, y);
  return Monomial{true, std::move(x), std::move(y)};
}

Monomial Monomial::atom(Generator g) {
  if (g.degree() != 2) throw Error("atom monomials take a degree-2 generator");
  return Monomial{false, std::move(g), Generator{}};
}

std::string Monomial::str() const {
  if (!is_pair) return a.str();
  if (a == b) return a.str() + "^2";
  return a.str() + "*" + b.str();
}

GradedClass::GradedClass(const Generator& g) {
  if (g.degree() == 1)
    deg1_.emplace(g, 1);
  else
    deg2_.emplace(Monomial::atom(g), 1);
}

GradedClass GradedClass::from_parts(Rational deg0, Deg1Map deg1, Deg2Map deg2) {
  GradedClass c;
  c.deg0_ = std::move(deg0);
  c.deg1_ = std::move(deg1);
  c.deg2_ = std::move(deg2);
  strip_zeros(c.deg1_);
  strip_zeros(c.deg2_);
  return c;
}

Rational GradedClass::coeff(const Generator& g) const {
  auto it = deg1_.find(g);
  return it == deg1_.end() ? Rational(0) : it->second;
}

Rational GradedClass::coeff(const Monomial& m) const {
  auto it = deg2_.find(m);
  return it == deg2_.end() ? Rational(0) : it->second;
}

std::string GradedClass::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  if (deg0_ != 0) append_term(out, first, deg0_, "");
  for (const auto& [g, c] : deg1_) append_term(out, first, c, g.str());
  for (const auto& [m, c] : deg2_) append_term(out, first, c, m.str());
  return out.str();
}

GradedClass add(const GradedClass& x, const GradedClass& y) {
  GradedClass::Deg1Map d1 = x.deg1();
  for (const auto& [g, c] : y.deg1()) accumulate(d1, g, c);
  GradedClass::Deg2Map d2 = x.deg2();
  for (const auto& [m, c] : y.deg2()) accumulate(d2, m, c);
  return GradedClass::from_parts(x.deg0() + y.deg0(), std::move(d1), std::move(d2));
}

GradedClass sub(const GradedClass& x, const GradedClass& y) { return add(x, neg(y)); }

GradedClass neg(const GradedClass& x) { return scale(Rational(-1), x); }

GradedClass scale(const Rational& c, const GradedClass& x) {
  if (c == 0) return GradedClass();
  GradedClass::Deg1Map d1 = x.deg1();
  for (auto& [g, v] : d1) v *= c;
  GradedClass::Deg2Map d2 = x.deg2();
  for (auto& [m, v] : d2) v *= c;
  return GradedClass::from_parts(Rational(c * x.deg0()), std::move(d1), std::move(d2));
}

GradedClass mul(const GradedClass& x, const GradedClass& y) {
  GradedClass::Deg1Map d1;
  for (const auto& [g, c] : x.deg1()) accumulate(d1, g, Rational(c * y.deg0()));
  for (const auto& [g, c] : y.deg1()) accumulate(d1, g, Rational(c * x.deg0()));

  GradedClass::Deg2Map d2;
  for (const auto& [m, c] : x.deg2()) accumulate(d2, m, Rational(c * y.deg0()));
  for (const auto& [m, c] : y.deg2()) accumulate(d2, m, Rational(c * x.deg0()));
  for (const auto& [g, c] : x.deg1())
    for (const auto& [h, d] : y.deg1())
      accumulate(d2, Monomial::pair_of(g, h), Rational(c * d));

  // Everything of degree >= 3 is discarded: the ring is truncated at the
  // dimension of the surface.
  return GradedClass::from_parts(Rational(x.deg0() * y.deg0()), std::move(d1),
                                 std::move(d2));
}

GradedClass grade(const GradedClass& x, int k) {
  switch (k) {
    case 0:
      return GradedClass(x.deg0());
    case 1:
      return GradedClass::from_parts(0, x.deg1(), {});
    case 2:
      return GradedClass::from_parts(0, {}, x.deg2());
    default:
      throw Error("grade index must be 0, 1, or 2");
  }
}

GradedClass invert_unit(const GradedClass& x) {
  if (x.deg0() == 0) throw NotAUnit("degree-0 part vanishes");
  const Rational r = x.deg0();
  Rational rinv = 1 / r;
  GradedClass u = scale(rinv, sub(x, GradedClass(r)));  // positive degree
  GradedClass series = sub(GradedClass(Rational(1)), u) + mul(u, u);
  return scale(rinv, series);
}

GradedClass invert_sqrt_unit(const GradedClass& x) {
  if (x.deg0() == 0) throw NotAUnit("degree-0 part vanishes");
  auto root = exact_sqrt(x.deg0());
  if (!root)
    throw NotAPerfectSquare("degree-0 part " + to_string(x.deg0()) +
                            " has no rational square root");
  const Rational r = x.deg0();
  GradedClass u = scale(Rational(1 / r), sub(x, GradedClass(r)));
  GradedClass series = GradedClass(Rational(1)) -
                       scale(rat(1, 2), u) + scale(rat(3, 8), mul(u, u));
  return scale(Rational(1 / *root), series);
}

BaseClass BaseClass::pushed_atom(const Monomial& m, Rational coeff) {
  BaseClass b;
  if (coeff != 0) b.pushed_.emplace(m, std::move(coeff));
  return b;
}

BaseClass BaseClass::analytic_term(Rational coeff) {
  BaseClass b;
  b.analytic_ = std::move(coeff);
  return b;
}

BaseClass BaseClass::from_parts(PushedMap pushed, Rational analytic) {
  BaseClass b;
  b.pushed_ = std::move(pushed);
  b.analytic_ = std::move(analytic);
  strip_zeros(b.pushed_);
  return b;
}

Rational BaseClass::coeff(const Monomial& m) const {
  auto it = pushed_.find(m);
  return it == pushed_.end() ? Rational(0) : it->second;
}

std::string BaseClass::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : pushed_) append_term(out, first, c, "pi_*(" + m.str() + ")");
  if (analytic_ != 0) append_term(out, first, analytic_, "a");
  return out.str();
}

BaseClass add(const BaseClass& x, const BaseClass& y) {
  BaseClass::PushedMap p = x.pushed();
  for (const auto& [m, c] : y.pushed()) accumulate(p, m, c);
  return BaseClass::from_parts(std::move(p), x.analytic() + y.analytic());
}

BaseClass sub(const BaseClass& x, const BaseClass& y) { return add(x, neg(y)); }

BaseClass neg(const BaseClass& x) { return scale(Rational(-1), x); }

BaseClass scale(const Rational& c, const BaseClass& x) {
  if (c == 0) return BaseClass();
  BaseClass::PushedMap p = x.pushed();
  for (auto& [m, v] : p) v *= c;
  return BaseClass::from_parts(std::move(p), Rational(c * x.analytic()));
}

BaseClass pushforward(const GradedClass& x) {
  if (x.deg0() != 0 || !x.deg1().empty())
    std::cerr << "akv: warning: pushforward drops degree-0/1 part of "
              << x.str() << "\n";
  return BaseClass::from_parts(x.deg2(), 0);
}

bool base_equal(const BaseClass& x, const BaseClass& y) { return x == y; }

}  // namespace akv
