#include "akv/hermitian.hpp"

#include <Eigen/Cholesky>

#include <cmath>
#include <utility>

#include "akv/rng.hpp"

namespace akv {

namespace {

// Relative tolerance for the Hermitian-symmetry validation. Seeded Grams are
// exactly Hermitian by construction; this only guards hand-entered data.
constexpr double kHermitianTol = 1e-12;

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// Exactly Hermitian average of a nearly Hermitian matrix.
Matrix symmetrize(const Matrix& g) { return 0.5 * (g + Matrix(g.adjoint())); }

Matrix pd_inverse(const Matrix& g) {
  Eigen::LLT<Matrix> llt(g);
  Matrix inv = llt.solve(Matrix::Identity(g.rows(), g.cols()));
  return symmetrize(inv);
}

}  // namespace

HermitianSpace make_space(int dim, Matrix gram, std::string label) {
  if (dim <= 0) throw Error("space dimension must be a positive integer");
  if (gram.rows() != dim || gram.cols() != dim)
    throw DimensionMismatch("Gram matrix must be " + std::to_string(dim) + "x" +
                            std::to_string(dim));
  const double scale = std::max(1.0, max_abs(gram));
  if (max_abs(gram - Matrix(gram.adjoint())) > kHermitianTol * scale)
    throw NotHermitian("Gram matrix is not Hermitian");
  Matrix g = symmetrize(gram);
  Eigen::LLT<Matrix> llt(g);
  if (llt.info() != Eigen::Success)
    throw NotPositiveDefinite("Gram matrix is not positive definite");
  return HermitianSpace{dim, std::move(g), std::move(label)};
}

HermitianSpace random_space(int dim, std::uint64_t seed) {
  if (dim <= 0) throw Error("space dimension must be a positive integer");
  SplitMix64 rng(seed);
  Matrix b(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const double re = rng.next_symmetric();
      const double im = rng.next_symmetric();
      b(i, j) = Complex(re, im);
    }
  Matrix g = b * b.adjoint();
  g += (dim / 100.0) * Matrix::Identity(dim, dim);
  return make_space(dim, symmetrize(g), "seeded(" + std::to_string(dim) + ")");
}

LinearMap make_map(HermitianSpace src, HermitianSpace dst, Matrix m,
                   bool conjugate_linear) {
  if (m.rows() != dst.dim || m.cols() != src.dim)
    throw DimensionMismatch("map matrix must be dst.dim x src.dim");
  return LinearMap{std::move(src), std::move(dst), std::move(m), conjugate_linear};
}

CVector apply(const LinearMap& f, const CVector& v) {
  if (v.size() != f.src.dim)
    throw DimensionMismatch("vector length does not match map source");
  if (f.conjugate_linear) return f.matrix * v.conjugate();
  return f.matrix * v;
}

LinearMap compose(const LinearMap& g, const LinearMap& f) {
  if (f.dst.dim != g.src.dim)
    throw DimensionMismatch("composition: inner dimensions differ");
  Matrix inner = g.conjugate_linear ? Matrix(f.matrix.conjugate()) : f.matrix;
  return LinearMap{f.src, g.dst, g.matrix * inner,
                   g.conjugate_linear != f.conjugate_linear};
}

LinearMap inverse_map(const LinearMap& f) {
  if (f.src.dim != f.dst.dim)
    throw DimensionMismatch("only square maps can be inverted");
  Matrix inv = f.matrix.inverse();
  // w = M conj(v)  =>  v = conj(M^{-1}) conj(w)
  if (f.conjugate_linear) inv = inv.conjugate();
  return LinearMap{f.dst, f.src, std::move(inv), f.conjugate_linear};
}

LinearMap identity_map(const HermitianSpace& s) {
  return LinearMap{s, s, Matrix::Identity(s.dim, s.dim), false};
}

LinearMap tensor_map(const LinearMap& f, const LinearMap& g) {
  if (f.conjugate_linear != g.conjugate_linear)
    throw Error("tensor_map requires maps with equal linearity flags");
  return LinearMap{tensor_space(f.src, g.src), tensor_space(f.dst, g.dst),
                   kron(f.matrix, g.matrix), f.conjugate_linear};
}

HermitianSpace dual_space(const HermitianSpace& s) {
  // h^*(f, f') = conj(h(theta^{-1} f, theta^{-1} f')) works out to
  // Gram^* = conj(G^{-1}) in dual coordinates.
  Matrix dual_gram = pd_inverse(s.gram).conjugate();
  return HermitianSpace{s.dim, symmetrize(dual_gram), s.label + "^"};
}

HermitianSpace tensor_space(const HermitianSpace& a, const HermitianSpace& b) {
  return HermitianSpace{a.dim * b.dim, kron(a.gram, b.gram),
                        "(" + a.label + "x" + b.label + ")"};
}

HermitianSpace hom_space(const HermitianSpace& a, const HermitianSpace& b) {
  HermitianSpace t = tensor_space(dual_space(a), b);
  t.label = "Hom(" + a.label + "," + b.label + ")";
  return t;
}

LinearMap riesz(const HermitianSpace& s) {
  // theta(e_j) evaluated on e_i is h(e_i, e_j) = G[i][j], so the matrix in
  // dual coordinates is G, acting on conj(v).
  return LinearMap{s, dual_space(s), s.gram, true};
}

LinearMap canonical_iota(const HermitianSpace& s) {
  HermitianSpace d = dual_space(s);
  return compose(riesz(d), riesz(s));
}

LinearMap canonical_alpha(const HermitianSpace& a, const HermitianSpace& b) {
  HermitianSpace src = tensor_space(dual_space(a), dual_space(b));
  HermitianSpace dst = dual_space(tensor_space(a, b));
  return LinearMap{std::move(src), std::move(dst),
                   Matrix::Identity(a.dim * b.dim, a.dim * b.dim), false};
}

LinearMap canonical_swap(const HermitianSpace& a, const HermitianSpace& b) {
  const int n = a.dim * b.dim;
  Matrix p = Matrix::Zero(n, n);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < b.dim; ++j) p(j * a.dim + i, i * b.dim + j) = 1.0;
  return LinearMap{tensor_space(a, b), tensor_space(b, a), std::move(p), false};
}

LinearMap trace_pairing_map(const HermitianSpace& a, const HermitianSpace& b) {
  // trace(E^{ba}_{i'j'} o phi) = phi[j'][i'], so the functional coordinate at
  // index j'*a.dim+i' reads the phi coordinate at index i'*b.dim+j'.
  const int n = a.dim * b.dim;
  Matrix t = Matrix::Zero(n, n);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < b.dim; ++j) t(j * a.dim + i, i * b.dim + j) = 1.0;
  HermitianSpace src = hom_space(a, b);
  HermitianSpace dst = dual_space(hom_space(b, a));
  return LinearMap{std::move(src), std::move(dst), std::move(t), false};
}

double isometry_residual(const LinearMap& f) {
  if (f.matrix.rows() != f.dst.dim || f.matrix.cols() != f.src.dim)
    throw DimensionMismatch("map matrix does not match its endpoint spaces");
  Matrix pulled = f.matrix.transpose() * f.dst.gram * f.matrix.conjugate();
  Matrix ref = f.conjugate_linear ? Matrix(f.src.gram.conjugate()) : f.src.gram;
  return max_abs(pulled - ref);
}

double natiso_residual(const HermitianSpace& e, const HermitianSpace& m,
                       const HermitianSpace& n) {
  HermitianSpace dual_e = dual_space(e);
  HermitianSpace dual_m = dual_space(m);

  HermitianSpace lhs =
      tensor_space(tensor_space(tensor_space(dual_e, e), dual_m), n);
  HermitianSpace rhs =
      tensor_space(tensor_space(dual_space(tensor_space(e, m)), e), n);

  // (alpha_{E,M} (x) id (x) id) o (id (x) swap_{E,M^} (x) id). The alpha factor
  // is the identity matrix in these coordinates, so only the middle swap
  // contributes entries.
  const LinearMap sw = canonical_swap(e, dual_m);
  Matrix phi = kron(kron(Matrix::Identity(e.dim, e.dim), sw.matrix),
                    Matrix::Identity(n.dim, n.dim));
  return isometry_residual(LinearMap{lhs, rhs, std::move(phi), false});
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace akv
