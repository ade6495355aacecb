#ifndef AKV_GRADED_HPP
#define AKV_GRADED_HPP

#include <compare>
#include <map>
#include <string>
#include <utility>

#include "akv/errors.hpp"
#include "akv/rational.hpp"

namespace akv {

// Formal generators of the truncated graded ring. C1 and Aux generators live
// in degree 1, C2 generators in degree 2. A generator is identified by its
// kind and owning symbol name; value semantics, no registry.
enum class GenKind { C1, C2, Aux };

struct Generator {
  GenKind kind = GenKind::Aux;
  std::string owner;

  int degree() const { return kind == GenKind::C2 ? 2 : 1; }
  std::string str() const;
  auto operator<=>(const Generator&) const = default;
};

Generator c1_gen(std::string owner);
Generator c2_gen(std::string owner);
Generator aux_gen(std::string owner);

// Degree-2 monomial: an order-normalized pair of degree-1 generators, or a
// single degree-2 generator.
struct Monomial {
  bool is_pair = false;
  Generator a, b;  // b is meaningful only for pairs

  static Monomial pair_of(Generator x, Generator y);
  static Monomial atom(Generator g);
  std::string str() const;  // "c1(M)*c1(N)", "c1(M)^2", "c2(A)"
  auto operator<=>(const Monomial&) const = default;
};

// Element of the graded ring truncated above degree 2, with exact rational
// coefficients. Stored in canonical form: no zero coefficients, pair keys
// order-normalized. Equality is structural. Immutable in spirit; all
// operations return fresh values.
class GradedClass {
 public:
  using Deg1Map = std::map<Generator, Rational>;
  using Deg2Map = std::map<Monomial, Rational>;

  GradedClass() = default;
  explicit GradedClass(Rational scalar) : deg0_(std::move(scalar)) {}
  explicit GradedClass(const Generator& g);  // the generator as a class

  static GradedClass scalar(Rational r) { return GradedClass(std::move(r)); }
  static GradedClass from_parts(Rational deg0, Deg1Map deg1, Deg2Map deg2);

  const Rational& deg0() const { return deg0_; }
  const Deg1Map& deg1() const { return deg1_; }
  const Deg2Map& deg2() const { return deg2_; }

  bool is_zero() const { return deg0_ == 0 && deg1_.empty() && deg2_.empty(); }
  Rational coeff(const Generator& g) const;
  Rational coeff(const Monomial& m) const;

  std::string str() const;

  bool operator==(const GradedClass&) const = default;

 private:
  Rational deg0_ = 0;
  Deg1Map deg1_;
  Deg2Map deg2_;
};

GradedClass add(const GradedClass& x, const GradedClass& y);
GradedClass sub(const GradedClass& x, const GradedClass& y);
GradedClass neg(const GradedClass& x);
GradedClass scale(const Rational& c, const GradedClass& x);

// Graded commutative product, truncated above degree 2.
GradedClass mul(const GradedClass& x, const GradedClass& y);

// Pure degree-k component, k in {0, 1, 2}.
GradedClass grade(const GradedClass& x, int k);

// Truncated inverse of a unit: x = r(1+u), x^{-1} = r^{-1}(1 - u + u^2).
// Throws NotAUnit when deg0 vanishes. mul(x, invert_unit(x)) == 1 exactly.
GradedClass invert_unit(const GradedClass& x);

// Truncated x^{-1/2} = r^{-1/2}(1 - u/2 + 3u^2/8) for x = r(1+u) with r a
// rational square. Throws NotAUnit / NotAPerfectSquare. Squaring and
// multiplying back by x gives exactly 1.
GradedClass invert_sqrt_unit(const GradedClass& x);

inline GradedClass operator+(const GradedClass& x, const GradedClass& y) { return add(x, y); }
inline GradedClass operator-(const GradedClass& x, const GradedClass& y) { return sub(x, y); }
inline GradedClass operator-(const GradedClass& x) { return neg(x); }
inline GradedClass operator*(const GradedClass& x, const GradedClass& y) { return mul(x, y); }
inline GradedClass operator*(const Rational& c, const GradedClass& x) { return scale(c, x); }

// Formal class on the base: rational combinations of pushforward atoms
// pi_*(monomial) plus a multiple of the opaque analytic generator
// a(4*zeta'(-1) - 1/6), used only through linearity. Canonical form as above.
class BaseClass {
 public:
  using PushedMap = std::map<Monomial, Rational>;

  BaseClass() = default;
  static BaseClass pushed_atom(const Monomial& m, Rational coeff = 1);
  static BaseClass analytic_term(Rational coeff);
  static BaseClass from_parts(PushedMap pushed, Rational analytic);

  const PushedMap& pushed() const { return pushed_; }
  const Rational& analytic() const { return analytic_; }
  bool is_zero() const { return pushed_.empty() && analytic_ == 0; }
  Rational coeff(const Monomial& m) const;

  std::string str() const;

  bool operator==(const BaseClass&) const = default;

 private:
  PushedMap pushed_;
  Rational analytic_ = 0;
};

BaseClass add(const BaseClass& x, const BaseClass& y);
BaseClass sub(const BaseClass& x, const BaseClass& y);
BaseClass neg(const BaseClass& x);
BaseClass scale(const Rational& c, const BaseClass& x);

inline BaseClass operator+(const BaseClass& x, const BaseClass& y) { return add(x, y); }
inline BaseClass operator-(const BaseClass& x, const BaseClass& y) { return sub(x, y); }
inline BaseClass operator-(const BaseClass& x) { return neg(x); }
inline BaseClass operator*(const Rational& c, const BaseClass& x) { return scale(c, x); }

// Copies the degree-2 coefficients of x onto pi_*(.) atoms. Nonzero degree-0
// or degree-1 parts are dropped with a warning on stderr: only degree-2
// classes push to degree-1 base classes here.
BaseClass pushforward(const GradedClass& x);

// Structural equality of canonical forms. This is equality in the free formal
// model, which is what the verified derivations need; it says nothing about
// actual arithmetic Chow groups.
bool base_equal(const BaseClass& x, const BaseClass& y);

}  // namespace akv

#endif
