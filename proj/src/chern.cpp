#include "akv/chern.hpp"

#include <cmath>
#include <sstream>

namespace akv {

namespace {

void require_pure(const GradedClass& c, int degree, const std::string& what) {
  if (c != grade(c, degree))
    throw Error(what + " must be a pure degree-" + std::to_string(degree) +
                " class");
}

long integral_or_throw(const Rational& r, const std::string& what) {
  if (r.get_den() != 1)
    throw NonIntegralRank(what + " is not an integer: " + to_string(r));
  if (!r.get_num().fits_slong_p())
    throw NonIntegralRank(what + " out of range: " + to_string(r));
  return r.get_num().get_si();
}

void require_azumaya(const BundleSymbol& a) {
  if (a.flavor != Flavor::Azumaya)
    throw NotAzumaya("symbol '" + a.name + "' is not an Azumaya symbol");
}

}  // namespace

std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Plain:
      return "plain";
    case Flavor::Azumaya:
      return "azumaya";
    case Flavor::Tangent:
      return "tangent";
    case Flavor::Derived:
      return "derived";
  }
  return "?";
}

BundleSymbol make_bundle(std::string name, int rank, GradedClass c1,
                         GradedClass c2, Flavor flavor) {
  if (rank <= 0) throw Error("rank must be a positive integer");
  require_pure(c1, 1, "c1 of '" + name + "'");
  require_pure(c2, 2, "c2 of '" + name + "'");
  if (flavor == Flavor::Azumaya) {
    if (!is_perfect_square(rank))
      throw NotAzumaya("Azumaya rank " + std::to_string(rank) +
                       " is not a perfect square");
    if (!c1.is_zero())
      throw NotAzumaya("Azumaya symbols carry c1 = 0; got " + c1.str());
  }
  if (flavor == Flavor::Tangent) {
    if (rank != 1) throw NotTangent("tangent symbols have rank 1");
    if (!c2.is_zero()) throw NotTangent("tangent symbols carry c2 = 0");
  }
  return BundleSymbol{std::move(name), rank, std::move(c1), std::move(c2),
                      flavor, ""};
}

BundleSymbol make_module(std::string name, int rank) {
  GradedClass c1{c1_gen(name)};
  GradedClass c2{c2_gen(name)};
  return make_bundle(std::move(name), rank, std::move(c1), std::move(c2));
}

BundleSymbol make_azumaya(std::string name, int rank, GradedClass c2) {
  return make_bundle(std::move(name), rank, GradedClass(), std::move(c2),
                     Flavor::Azumaya);
}

BundleSymbol make_azumaya(std::string name, int rank) {
  GradedClass c2{c2_gen(name)};
  return make_azumaya(std::move(name), rank, std::move(c2));
}

BundleSymbol make_tangent(std::string name, GradedClass c1) {
  return make_bundle(std::move(name), 1, std::move(c1), GradedClass(),
                     Flavor::Tangent);
}

BundleSymbol make_tangent(std::string name) {
  GradedClass c1{c1_gen(name)};
  return make_tangent(std::move(name), std::move(c1));
}

BundleSymbol make_line(std::string name) {
  GradedClass c1{c1_gen(name)};
  return make_bundle(std::move(name), 1, std::move(c1), GradedClass());
}

bool is_perfect_square(long n) {
  if (n < 0) return false;
  long r = std::lround(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n;
}

int morita_rank(const BundleSymbol& a) {
  require_azumaya(a);
  long r = std::lround(std::sqrt(static_cast<double>(a.rank)));
  while (r * r > a.rank) --r;
  while ((r + 1) * (r + 1) <= a.rank) ++r;
  return static_cast<int>(r);
}

GradedClass chern_character(const BundleSymbol& b) {
  GradedClass ch2 = scale(rat(1, 2), mul(b.c1, b.c1) - scale(Rational(2), b.c2));
  return GradedClass(Rational(b.rank)) + b.c1 + ch2;
}

BundleSymbol dual_symbol(const BundleSymbol& b) {
  // c2 is unchanged under duals: forced by the sign alternation of ch, since
  // ch^(2) = (c1^2 - 2 c2)/2 and both c1^2 and ch^(2) are even.
  BundleSymbol d{b.name + "^", b.rank, neg(b.c1), b.c2, Flavor::Derived,
                 "dual(" + b.name + ")"};
  if (b.flavor == Flavor::Azumaya) d.flavor = Flavor::Azumaya;
  return d;
}

GradedClass todd(const BundleSymbol& b) {
  GradedClass td2 = scale(rat(1, 12), mul(b.c1, b.c1) + b.c2);
  return GradedClass(Rational(1)) + scale(rat(1, 2), b.c1) + td2;
}

GradedClass a_chern_character(const BundleSymbol& m, const BundleSymbol& a) {
  require_azumaya(a);
  return mul(chern_character(m), invert_sqrt_unit(chern_character(a)));
}

GradedClass a_c1(const BundleSymbol& m, const BundleSymbol& a) {
  GradedClass out = grade(a_chern_character(m, a), 1);
  // ch(a) has no degree-1 part, so this must reduce to c1(m)/n.
  const int n = morita_rank(a);
  if (out != scale(rat(1, n), m.c1))
    throw Error("a_c1 internal check failed: " + out.str());
  return out;
}

BundleSymbol hom_a_chern(const BundleSymbol& m, const BundleSymbol& n,
                         const BundleSymbol& a) {
  require_azumaya(a);
  GradedClass q = mul(mul(chern_character(dual_symbol(m)), chern_character(n)),
                      invert_unit(chern_character(a)));

  GradedClass q2 =
      mul(a_chern_character(dual_symbol(m), a), a_chern_character(n, a));
  if (q != q2)
    throw Error("hom_a_chern: the two Chern-character routes disagree: " +
                q.str() + " vs " + q2.str());

  const long rank = integral_or_throw(q.deg0(), "rank of Hom_A(" + m.name +
                                                    "," + n.name + ")");
  if (rank <= 0)
    throw NonIntegralRank("rank of Hom_A(" + m.name + "," + n.name +
                          ") is not positive");
  GradedClass c1 = grade(q, 1);
  GradedClass c2 = scale(rat(1, 2), mul(c1, c1) - scale(Rational(2), grade(q, 2)));
  BundleSymbol h{"Hom_" + a.name + "(" + m.name + "," + n.name + ")",
                 static_cast<int>(rank),
                 std::move(c1),
                 std::move(c2),
                 Flavor::Derived,
                 "hom_a(" + m.name + "," + n.name + ";" + a.name + ")"};
  return h;
}

BaseClass lambda_c1(const BundleSymbol& e, const BundleSymbol& t,
                    const Rational& genus) {
  if (t.flavor != Flavor::Tangent)
    throw NotTangent("symbol '" + t.name + "' is not a tangent symbol");
  BaseClass pushed = pushforward(grade(mul(chern_character(e), todd(t)), 2));
  Rational acoef = -Rational(e.rank) * (1 - genus);
  return pushed + BaseClass::analytic_term(acoef);
}

PairingReport deligne_pairing_c1(const BundleSymbol& m, const BundleSymbol& n,
                                 const BundleSymbol& a, const BundleSymbol& t,
                                 const Rational& genus,
                                 bool allow_rank_mismatch) {
  require_azumaya(a);
  if (t.flavor != Flavor::Tangent)
    throw NotTangent("symbol '" + t.name + "' is not a tangent symbol");
  const bool hypothesis = (m.rank == a.rank && n.rank == a.rank);
  if (!hypothesis && !allow_rank_mismatch)
    throw RankMismatch("rank(" + m.name + ") = " + std::to_string(m.rank) +
                       ", rank(" + n.name + ") = " + std::to_string(n.rank) +
                       ", rank(" + a.name + ") = " + std::to_string(a.rank) +
                       "; the pairing theorem assumes all three are equal");

  BundleSymbol h_mn = hom_a_chern(m, n, a);
  BundleSymbol h_ma = hom_a_chern(m, a, a);
  BundleSymbol h_an = hom_a_chern(a, n, a);
  BundleSymbol h_aa = hom_a_chern(a, a, a);

  BaseClass l_mn = lambda_c1(h_mn, t, genus);
  BaseClass l_ma = lambda_c1(h_ma, t, genus);
  BaseClass l_an = lambda_c1(h_an, t, genus);
  BaseClass l_aa = lambda_c1(h_aa, t, genus);

  PairingReport rep;
  rep.lhs = l_mn - l_ma - l_an + l_aa;
  rep.rhs = -pushforward(mul(a_c1(m, a), a_c1(n, a)));
  rep.equal = base_equal(rep.lhs, rep.rhs);
  rep.lambdas = {{"c1(lambda(" + h_mn.name + "))", l_mn},
                 {"c1(lambda(" + h_ma.name + "))", l_ma},
                 {"c1(lambda(" + h_an.name + "))", l_an},
                 {"c1(lambda(" + h_aa.name + "))", l_aa}};
  rep.rank_a = a.rank;
  rep.rank_m = m.rank;
  rep.rank_n = n.rank;
  rep.morita = morita_rank(a);
  rep.genus = genus;
  rep.rank_hypothesis = hypothesis;
  return rep;
}

std::string PairingReport::render_text() const {
  std::ostringstream out;
  out << "c1(<M,N>_A) = " << lambdas[0].first << " - " << lambdas[1].first
      << " - " << lambdas[2].first << " + " << lambdas[3].first << "\n";
  for (const auto& [label, value] : lambdas)
    out << "  " << label << " = " << value.str() << "\n";
  out << "lhs = " << lhs.str() << "\n";
  out << "rhs = -pi_*(c1_A(M) * c1_A(N)) = " << rhs.str() << "\n";
  out << "parameters: rank(A) = " << rank_a << " (n = " << morita
      << "), rank(M) = " << rank_m << ", rank(N) = " << rank_n
      << ", g = " << to_string(genus) << "\n";
  if (!rank_hypothesis)
    out << "note: rank hypothesis rk(A) = rk(M) = rk(N) does not hold; "
           "values reported without any claim\n";
  out << "equal: " << (equal ? "true" : "false") << "\n";
  return out.str();
}

}  // namespace akv
