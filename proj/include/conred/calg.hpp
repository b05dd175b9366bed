#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conred/cindex.hpp"
#include "conred/exact.hpp"

namespace conred {

/// Flag of exact subspaces V_N ⊆ V_W ⊆ V_T = Q^ambient.
struct ConVectorSpace {
  int ambient = 0;
  Subspace w, n;

  ConVectorSpace() = default;
  ConVectorSpace(int ambient_, Subspace w_, Subspace n_);

  /// Coordinate flag spanned by the first dims.w / dims.n standard vectors.
  static ConVectorSpace coordinate_flag(const ConDim& dims);

  ConDim dims() const { return ConDim(ambient, w.dim(), n.dim()); }
  bool operator==(const ConVectorSpace& o) const {
    return ambient == o.ambient && w == o.w && n == o.n;
  }
};

/// Linear map between flags; constraint-ness is a checked predicate.
struct ConLinearMap {
  ConVectorSpace source, target;
  Mat matrix;  // target.ambient x source.ambient

  ConLinearMap(ConVectorSpace s, ConVectorSpace t, Mat m);
  bool is_constraint() const;
  static ConLinearMap identity(const ConVectorSpace& e);
};

struct MorphismClassification {
  bool mono = false, epi = false, regular_mono = false, regular_epi = false, iso = false;
};

/// Throws "NotConstraintMap" unless the map preserves the flags.
MorphismClassification classify_morphism(const ConLinearMap& phi);

/// Nested triple of subspaces of a common ambient space; unlike ConVectorSpace
/// the Total part need not be the full ambient (kernels and images are flags
/// sitting inside the source / target).
struct FlagTriple {
  Subspace t, w, n;

  FlagTriple() = default;
  FlagTriple(Subspace t_, Subspace w_, Subspace n_);
  ConDim dims() const { return ConDim(t.dim(), w.dim(), n.dim()); }
  /// Re-coordinatizes on a basis of t, giving a ConVectorSpace of ambient dim(t).
  ConVectorSpace as_space() const;
};

enum class KernelImageKind { Kernel, Image, RegularImage };
FlagTriple kernel_image(const ConLinearMap& phi, KernelImageKind which);

enum class ConstructKind { DSum, Tensor, StrongTensor, Dual, Hom };
/// Flag-level constructions over the ground field k = (Q,Q,0). Tensor/hom
/// coordinates are row-major Kronecker: (i,j) -> i*dim(F)+j for E⊗F, and
/// vec(M)[(r,c)] = r*dim(E)+c for Hom(E,F).
ConVectorSpace construct(ConstructKind kind, const ConVectorSpace& e,
                         const ConVectorSpace* f = nullptr);

/// Reduction E_W / E_N with deterministic representatives: the pivot-greedy
/// complement of E_N inside E_W. rep_rows holds the representative vectors.
struct ReducedSpace {
  int dim = 0;
  Mat rep_rows{0, 0};
  Subspace null_part;  // the subspace quotiented out

  /// Coordinates of v ∈ E_W in the quotient (drops the E_N component).
  std::vector<Rational> project(const std::vector<Rational>& v) const;
  /// Representative in the ambient space of quotient coordinates q.
  std::vector<Rational> lift(const std::vector<Rational>& q) const;
};

ReducedSpace reduce(const ConVectorSpace& e);
/// Induced matrix on the chosen complements; throws "NotConstraintMap".
Mat reduce(const ConLinearMap& phi);

/// Finite-dimensional unital associative algebra with a constraint flag.
/// Multiplication is stored as left-multiplication matrices per basis vector.
struct ConAlgebraFD {
  ConVectorSpace space;
  std::vector<Mat> lmul;  // lmul[i] = (y -> b_i · y)
  std::vector<Rational> unit;

  static ConAlgebraFD scalar_field();

  int dim() const { return space.ambient; }
  std::vector<Rational> product(const std::vector<Rational>& x,
                                const std::vector<Rational>& y) const;
  bool is_commutative() const;
  /// Associativity, unitality, W closed under product, N a two-sided ideal in
  /// W; with strong=true additionally N a two-sided ideal in T.
  void check_invariants(bool strong) const;
};

/// Right module over a ConAlgebraFD; act[a] is the matrix of (x -> x · b_a).
struct ConModuleFD {
  ConAlgebraFD algebra;
  ConVectorSpace space;
  std::vector<Mat> act;

  static ConModuleFD from_flag(const ConVectorSpace& e);  // module over k
  static ConModuleFD regular(const ConAlgebraFD& a);      // A over itself

  int dim() const { return space.ambient; }
  std::vector<Rational> action(const std::vector<Rational>& x,
                               const std::vector<Rational>& a) const;
  void check_invariants(bool strong) const;
};

ConModuleFD module_dsum(const ConModuleFD& e, const ConModuleFD& f);
/// ConHom_A(E,F) re-coordinatized on a basis of the A-linear maps; requires a
/// commutative base ("NonCommutativeBase"). embed maps hom-coordinates to
/// vec(matrix) coordinates of the Total matrix space.
struct HomModule {
  ConModuleFD hom;
  Mat embed;  // (dimF*dimE) x hom.dim()
};
HomModule module_hom(const ConModuleFD& e, const ConModuleFD& f);
HomModule module_dual(const ConModuleFD& e);

enum class TensorFlavor { Tensor, Strong };
/// E ⊗_A F (or ⊠_A): quotient of E ⊗_k F by the balancing subspace, flags the
/// images of the flavor-specific k-level flags ("BaseMismatch" if the bases differ).
ConModuleFD tensor_over_algebra(const ConModuleFD& e, const ConModuleFD& f, TensorFlavor flavor);

struct PlainAlgebra {
  int dim = 0;
  std::vector<Mat> lmul;
  std::vector<Rational> unit;
};
struct PlainModule {
  PlainAlgebra algebra;
  int dim = 0;
  std::vector<Mat> act;
};

PlainAlgebra reduce(const ConAlgebraFD& a);
PlainModule reduce(const ConModuleFD& e);
/// Tensor over the (plain, commutative) base algebra.
PlainModule plain_tensor_over_algebra(const PlainModule& e, const PlainModule& f);

enum class CanonicalIso { HomAsStrongTensor, DualOfTensor, DualOfStrongTensor, HomAdjunction };
/// The explicit canonical maps: F⊠E* → Hom(E,F) (y⊗α ↦ (x ↦ y·α(x))),
/// E*⊠F* → (E⊗F)*, E*⊗F* → (E⊠F)*, Hom(E⊗F,G) → Hom(F,G⊠E*). In the fixed
/// Kronecker coordinates each is the identity matrix between the two flags.
ConLinearMap canonical_iso(CanonicalIso which, const ConVectorSpace& e, const ConVectorSpace& f,
                           const ConVectorSpace* g = nullptr);

/// Dual basis data for a module: vectors e_j in E_T and A-linear covectors
/// e^j : E_T → A_T (as matrices), indexed by a constraint index set.
struct ConDualBasis {
  ConIndexSet index;
  std::vector<std::vector<Rational>> vectors;
  std::vector<Mat> covectors;  // each algebra.dim() x module.dim()
};

struct DualBasisReport {
  bool ok = true;
  std::string reason;
};
/// Reconstruction x = Σ e_j · e^j(x) on a Total basis plus the four class
/// conditions of a constraint dual basis. Never throws; failures carry a reason.
DualBasisReport verify_dual_basis(const ConModuleFD& e, const ConDualBasis& db);

/// Adapted dual basis of a flag (basis of N extended through W to T), indexed
/// by ({1..t},{1..w},{1..n}) after the adapted reordering.
ConDualBasis standard_dual_basis(const ConVectorSpace& e);

/// Constraint derivations of A inside End(A_T). The Total component solves the
/// Leibniz system; W and N are cut out by the flag conditions. Coordinates are
/// relative to a basis of the derivation space; embed maps them to row-major
/// vec(D) in End(A_T).
struct DerivationSpace {
  ConVectorSpace space;
  Mat embed;  // (dim*dim) x space.ambient
};
DerivationSpace derivations(const ConAlgebraFD& a);

/// Graded constraint Lie algebra: basis-aligned degrees, bracket structure
/// constants, degree shift k.
struct ConLieAlgebraFD {
  ConVectorSpace space;
  std::vector<int> degrees;                                // per ambient basis vector
  int shift_k = 0;
  std::vector<std::vector<std::vector<Rational>>> bracket;  // bracket[i][j] in ambient coords

  std::vector<Rational> apply(const std::vector<Rational>& x,
                              const std::vector<Rational>& y) const;
  /// Graded antisymmetry + graded Jacobi + the bracket being a constraint map
  /// for the plain tensor rule ([W,W]⊆W, [W,N]+[N,W]⊆N).
  void check_invariants() const;
};

struct PlainLieAlgebra {
  int dim = 0;
  std::vector<int> degrees;
  int shift_k = 0;
  std::vector<std::vector<std::vector<Rational>>> bracket;
};
PlainLieAlgebra reduce(const ConLieAlgebraFD& g);

}  // namespace conred
