#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "akv/hermitian.hpp"
#include "akv/json_io.hpp"

using namespace akv;

namespace {

constexpr double kTol = 1e-9;

Matrix ident(int n) { return Matrix::Identity(n, n); }

HermitianSpace standard(int n) { return make_space(n, ident(n)); }

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("make_space validates") {
  CHECK(standard(2).dim == 2);

  Matrix one(1, 1);
  one << Complex(2, 0);
  CHECK(make_space(1, one).gram(0, 0) == Complex(2, 0));

  // eigenvalues 3 and -1: Hermitian but indefinite
  Matrix bad(2, 2);
  bad << Complex(1, 0), Complex(2, 0), Complex(2, 0), Complex(1, 0);
  CHECK_THROWS_AS(make_space(2, bad), NotPositiveDefinite);

  Matrix skew(2, 2);
  skew << Complex(1, 0), Complex(0, 1), Complex(0, 1), Complex(1, 0);
  CHECK_THROWS_AS(make_space(2, skew), NotHermitian);

  CHECK_THROWS_AS(make_space(0, Matrix(0, 0)), Error);
  CHECK_THROWS_AS(make_space(2, ident(3)), DimensionMismatch);
}

TEST_CASE("random_space is deterministic and valid") {
  HermitianSpace a = random_space(3, 42);
  HermitianSpace b = random_space(3, 42);
  CHECK(a.gram == b.gram);  // bit-identical

  HermitianSpace c = random_space(1, 0);
  CHECK(c.gram(0, 0).imag() == 0.0);
  CHECK(c.gram(0, 0).real() > 0.0);

  CHECK_NOTHROW(make_space(4, random_space(4, 7).gram));
}

TEST_CASE("riesz map") {
  LinearMap theta = riesz(standard(2));
  CHECK(theta.conjugate_linear);
  CHECK(max_abs(theta.matrix - ident(2)) == 0.0);

  Matrix two(1, 1);
  two << Complex(2, 0);
  LinearMap theta2 = riesz(make_space(1, two));
  CVector e1(1);
  e1 << Complex(1, 0);
  CHECK(apply(theta2, e1)(0) == Complex(2, 0));

  // conjugate-linearity: theta(i v) = -i theta(v)
  HermitianSpace s = random_space(3, 5);
  LinearMap th = riesz(s);
  CVector v(3);
  v << Complex(1, 2), Complex(0, -1), Complex(3, 0);
  CVector lhs = apply(th, CVector(Complex(0, 1) * v));
  CVector rhs = Complex(0, -1) * apply(th, v);
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("dual_space") {
  CHECK(max_abs(dual_space(standard(3)).gram - ident(3)) < 1e-14);

  Matrix d(2, 2);
  d << Complex(2, 0), Complex(0, 0), Complex(0, 0), Complex(5, 0);
  Matrix dual = dual_space(make_space(2, d)).gram;
  CHECK(std::abs(dual(0, 0).real() - 0.5) < 1e-14);
  CHECK(std::abs(dual(1, 1).real() - 0.2) < 1e-14);

  for (int seed = 0; seed < 25; ++seed) {
    HermitianSpace s = random_space(1 + seed % 4, 100 + seed);
    HermitianSpace dd = dual_space(dual_space(s));
    CHECK(max_abs(dd.gram - s.gram) < kTol);
  }
}

TEST_CASE("tensor_space") {
  CHECK(max_abs(tensor_space(standard(2), standard(3)).gram - ident(6)) == 0.0);

  Matrix g2(1, 1), g3(1, 1);
  g2 << Complex(2, 0);
  g3 << Complex(3, 0);
  HermitianSpace t = tensor_space(make_space(1, g2), make_space(1, g3));
  CHECK(t.gram(0, 0) == Complex(6, 0));  // h(v,v') k(w,w') on the basis

  CHECK(tensor_space(random_space(2, 1), random_space(3, 2)).dim == 6);
}

TEST_CASE("hom_space") {
  HermitianSpace h = hom_space(standard(2), standard(3));
  CHECK(h.dim == 6);
  CHECK(max_abs(h.gram - ident(6)) < 1e-14);  // Frobenius inner product

  // norm^2 of the identity matrix in Hom(V,V) is dim V
  const int n = 3;
  HermitianSpace hv = hom_space(standard(n), standard(n));
  CVector vec_id = CVector::Zero(n * n);
  for (int i = 0; i < n; ++i) vec_id(i * n + i) = 1.0;  // E_{ii} entries
  const Complex norm2 = vec_id.transpose() * hv.gram * vec_id.conjugate();
  CHECK(std::abs(norm2.real() - n) < 1e-14);
  CHECK(std::abs(norm2.imag()) < 1e-14);
}

TEST_CASE("canonical_iota") {
  LinearMap i2 = canonical_iota(standard(2));
  CHECK_FALSE(i2.conjugate_linear);  // conj o conj = linear
  CHECK(max_abs(i2.matrix - ident(2)) == 0.0);

  for (int seed = 0; seed < 25; ++seed) {
    HermitianSpace s = random_space(1 + seed % 4, 200 + seed);
    LinearMap iota = canonical_iota(s);
    CHECK(max_abs(iota.matrix - ident(s.dim)) < kTol);  // evaluation map
    CHECK(isometry_residual(iota) < kTol);
  }
}

TEST_CASE("canonical_alpha") {
  CHECK(canonical_alpha(standard(1), standard(1)).matrix(0, 0) == 1.0);

  LinearMap a22 = canonical_alpha(standard(2), standard(2));
  CHECK(max_abs(a22.matrix - ident(4)) == 0.0);
  // alpha(e^1 (x) f^1) evaluated on e_1 (x) f_1 is 1
  CHECK(a22.matrix(0, 0) == 1.0);

  for (int seed = 0; seed < 25; ++seed) {
    HermitianSpace s1 = random_space(1 + seed % 3, 300 + 2 * seed);
    HermitianSpace s2 = random_space(1 + (seed / 3) % 3, 301 + 2 * seed);
    CHECK(isometry_residual(canonical_alpha(s1, s2)) < kTol);
  }
}

TEST_CASE("canonical_swap") {
  CHECK(max_abs(canonical_swap(standard(1), standard(4)).matrix - ident(4)) == 0.0);

  LinearMap sw = canonical_swap(standard(2), standard(2));
  Matrix expected = Matrix::Zero(4, 4);
  // e_i (x) f_j at i*2+j goes to f_j (x) e_i at j*2+i
  expected(0, 0) = 1;
  expected(2, 1) = 1;
  expected(1, 2) = 1;
  expected(3, 3) = 1;
  CHECK(max_abs(sw.matrix - expected) == 0.0);

  HermitianSpace s1 = random_space(2, 9), s2 = random_space(3, 10);
  LinearMap there = canonical_swap(s1, s2);
  LinearMap back = canonical_swap(s2, s1);
  CHECK(max_abs(compose(back, there).matrix - ident(6)) == 0.0);
  CHECK(isometry_residual(there) == 0.0);  // exact permutation of products
}

TEST_CASE("trace_pairing_map") {
  LinearMap t11 = trace_pairing_map(standard(1), standard(1));
  CHECK(t11.matrix(0, 0) == 1.0);

  // E_{ij} pairs to exactly 1 with E_{ji}, all other pairings vanish
  const int dv = 2, dw = 2;
  LinearMap tr = trace_pairing_map(standard(dv), standard(dw));
  for (int i = 0; i < dw; ++i)
    for (int j = 0; j < dv; ++j) {
      CVector phi = CVector::Zero(dv * dw);
      phi(j * dw + i) = 1.0;  // E_{ij}: row i in W, column j in V
      CVector functional = apply(tr, phi);
      for (int ii = 0; ii < dv; ++ii)
        for (int jj = 0; jj < dw; ++jj) {
          const Complex val = functional(jj * dv + ii);  // dual of E^{WV}_{ii jj}
          if (ii == j && jj == i)
            CHECK(val == Complex(1, 0));
          else
            CHECK(val == Complex(0, 0));
        }
    }

  for (int seed = 0; seed < 25; ++seed) {
    HermitianSpace s1 = random_space(1 + seed % 4, 400 + 2 * seed);
    HermitianSpace s2 = random_space(1 + (seed / 4) % 4, 401 + 2 * seed);
    LinearMap map = trace_pairing_map(s1, s2);
    CHECK(isometry_residual(map) < kTol);
    CHECK(std::abs(std::abs(map.matrix.determinant()) - 1.0) < 1e-12);  // perfect pairing
  }
}

TEST_CASE("isometry_residual") {
  HermitianSpace s = random_space(3, 77);
  CHECK(isometry_residual(identity_map(s)) == 0.0);

  HermitianSpace one = standard(1);
  Matrix scale2(1, 1);
  scale2 << Complex(2, 0);
  CHECK(isometry_residual(make_map(one, one, scale2)) == 3.0);  // |4 - 1|

  CHECK_THROWS_AS(make_map(standard(2), standard(2), Matrix::Zero(3, 2)),
                  DimensionMismatch);
  LinearMap broken{standard(2), standard(2), Matrix::Zero(3, 3), false};
  CHECK_THROWS_AS(isometry_residual(broken), DimensionMismatch);
}

TEST_CASE("riesz round trip and flag algebra") {
  for (int seed = 0; seed < 25; ++seed) {
    HermitianSpace s = random_space(1 + seed % 4, 500 + seed);
    LinearMap theta = riesz(s);
    LinearMap round = compose(inverse_map(theta), theta);
    CHECK_FALSE(round.conjugate_linear);
    CHECK(max_abs(round.matrix - ident(s.dim)) < kTol);
  }
}

TEST_CASE("tensor_map") {
  HermitianSpace s1 = random_space(2, 21), s2 = random_space(2, 22);
  LinearMap t = tensor_map(identity_map(s1), canonical_swap(s2, s2));
  CHECK(t.src.dim == 8);
  CHECK_FALSE(t.conjugate_linear);
  CHECK_THROWS_AS(tensor_map(riesz(s1), identity_map(s2)), Error);
  LinearMap rr = tensor_map(riesz(s1), riesz(s2));
  CHECK(rr.conjugate_linear);
}

TEST_CASE("natiso residual") {
  CHECK(natiso_residual(standard(1), standard(1), standard(1)) == 0.0);
  CHECK(natiso_residual(standard(2), standard(1), standard(1)) < kTol);

  for (int seed = 0; seed < 15; ++seed) {
    HermitianSpace e = random_space(2, 600 + 3 * seed);
    HermitianSpace m = random_space(2, 601 + 3 * seed);
    HermitianSpace n = random_space(2, 602 + 3 * seed);
    CHECK(natiso_residual(e, m, n) < kTol);
  }
  // mixed dimensions
  CHECK(natiso_residual(random_space(3, 31), random_space(2, 32),
                        random_space(3, 33)) < kTol);
}

TEST_CASE("matrix JSON round trip") {
  Matrix m = random_space(3, 8).gram;
  Json j = matrix_to_json(m);
  CHECK(j.is_array());
  CHECK(j.size() == 3);
  CHECK(j[0][0].size() == 2);  // [re, im]
  Matrix back = matrix_from_json(j);
  CHECK(max_abs(back - m) == 0.0);

  Json js = space_to_json(standard(2));
  CHECK(js["dim"] == 2);
}
