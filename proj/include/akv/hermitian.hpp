#ifndef AKV_HERMITIAN_HPP
#define AKV_HERMITIAN_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <string>

#include "akv/errors.hpp"

namespace akv {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Finite-dimensional complex inner-product space, represented by its Gram
// matrix G[i][j] = h(e_i, e_j) in the standard basis.
//
// Convention used throughout: h is linear in the FIRST argument and
// conjugate-linear in the second,
//     h(u, v) = u^T G conj(v),
// so the Riesz map v -> h(-, v) is conjugate-linear. G must be Hermitian
// positive definite.
struct HermitianSpace {
  int dim = 0;
  Matrix gram;
  std::string label;
};

// Validates Hermitian symmetry and positive definiteness (Cholesky).
HermitianSpace make_space(int dim, Matrix gram, std::string label = "");

// Deterministic positive-definite instance: entries of B are drawn from a
// splitmix64 stream in [-1,1), G = B B^* + dim/100 * I. Bit-identical for a
// fixed seed.
HermitianSpace random_space(int dim, std::uint64_t seed);

// A map between spaces. Acts as v -> matrix * v, or v -> matrix * conj(v)
// when conjugate_linear is set (Riesz-type maps). matrix is dst.dim x src.dim.
struct LinearMap {
  HermitianSpace src, dst;
  Matrix matrix;
  bool conjugate_linear = false;
};

LinearMap make_map(HermitianSpace src, HermitianSpace dst, Matrix m,
                   bool conjugate_linear = false);

CVector apply(const LinearMap& f, const CVector& v);

// g after f. Flag algebra: conj o conj = linear, and the inner matrix is
// conjugated when the outer map is conjugate-linear.
LinearMap compose(const LinearMap& g, const LinearMap& f);

LinearMap inverse_map(const LinearMap& f);
LinearMap identity_map(const HermitianSpace& s);

// Kronecker product of two maps with equal flags; the result maps
// tensor(src_f, src_g) -> tensor(dst_f, dst_g).
LinearMap tensor_map(const LinearMap& f, const LinearMap& g);

// Dual space in dual coordinates. Gram of the induced dual product is
// conj(G^{-1}).
HermitianSpace dual_space(const HermitianSpace& s);

// Basis ordering for tensors is lexicographic with the left factor major:
// e_i (x) f_j sits at flat index i * dim2 + j. Gram is kron(G1, G2).
HermitianSpace tensor_space(const HermitianSpace& a, const HermitianSpace& b);

// Space of a->b matrices with the metric transported from dual(a) (x) b.
// The matrix unit E_{ji} (row j in b, column i in a) sits at flat index
// i * b.dim + j, i.e. vectors are column-major vectorizations.
HermitianSpace hom_space(const HermitianSpace& a, const HermitianSpace& b);

// Riesz map theta: v -> h(-, v). Conjugate-linear; matrix is G itself.
LinearMap riesz(const HermitianSpace& s);

// theta_{V*} o theta_V : V -> V**. Linear; equals the identity matrix in
// coordinates (the evaluation map).
LinearMap canonical_iota(const HermitianSpace& s);

// alpha : dual(a) (x) dual(b) -> dual(a (x) b), f (x) g -> (v (x) w -> f(v)g(w)).
// With the ordering above this is the identity matrix: the image of the basis
// functional e^i (x) f^j at index i*b.dim+j is the dual basis vector of
// e_i (x) f_j, which has the same index.
LinearMap canonical_alpha(const HermitianSpace& a, const HermitianSpace& b);

// Commutativity map a (x) b -> b (x) a; permutation e_i (x) f_j -> f_j (x) e_i.
LinearMap canonical_swap(const HermitianSpace& a, const HermitianSpace& b);

// Hom(a,b) -> Hom(b,a)^*, phi -> (psi -> trace(psi o phi)). A permutation
// matrix in the bases above.
LinearMap trace_pairing_map(const HermitianSpace& a, const HermitianSpace& b);

// Max-norm of the pullback defect. For a linear map: |M^T G_dst conj(M) - G_src|.
// For a conjugate-linear map the pulled-back form is compared against
// conj(G_src), which is the isometry condition satisfied by Riesz-type maps.
// 0 means exact isometry.
double isometry_residual(const LinearMap& f);

// Residual of the canonical isometry
//   dual(E) (x) E (x) dual(M) (x) N  ==  dual(E (x) M) (x) E (x) N
// built by composing a middle swap with an alpha factor (alpha contributes
// the identity matrix in these coordinates). Both sides are constructed from
// tensor_space/dual_space with left-associated tensor folds.
double natiso_residual(const HermitianSpace& e, const HermitianSpace& m,
                       const HermitianSpace& n);

Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace akv

#endif
