#pragma once

#include <utility>
#include <vector>

#include "liepair/errors.hpp"
#include "liepair/matrix.hpp"
#include "liepair/report.hpp"

namespace liepair {

/// A sparse term coeff·x_index.
struct Term {
  int index;
  GaussScalar coeff;
};

/// Finite-dimensional Lie algebra given by structure constants
/// c(i,j,k) = k-th coordinate of [x_i, x_j]. The anchor is identically zero.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// Abelian algebra of the given dimension.
  explicit LieAlgebra(int dim);
  LieAlgebra(int dim, std::vector<GaussScalar> constants);

  int dim() const { return dim_; }
  const GaussScalar& c(int i, int j, int k) const { return c_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k]; }
  const std::vector<GaussScalar>& constants() const { return c_; }

  /// Sets [x_i, x_j] = v and [x_j, x_i] = −v.
  void set_bracket(int i, int j, const Vector& v);
  /// Overwrites one raw constant without antisymmetric completion.
  void set_constant(int i, int j, int k, const GaussScalar& value);

  /// Nonzero coordinates of [x_i, x_j].
  const std::vector<Term>& terms(int i, int j) const { return terms_[static_cast<std::size_t>(i) * dim_ + j]; }
  Vector bracket(int i, int j) const;
  Vector bracket(const Vector& x, const Vector& y) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.dim_ == b.dim_ && a.c_ == b.c_; }

 private:
  void refresh(int i, int j);

  int dim_ = 0;
  std::vector<GaussScalar> c_;
  std::vector<std::vector<Term>> terms_;
};

/// Antisymmetry and Jacobi on every basis triple, with exact residuals.
CheckReport validate_lie_algebra(const LieAlgebra& g);

/// Structure constants in the basis given by the columns of p.
LieAlgebra change_basis(const LieAlgebra& g, const Matrix& p);

/// Lie algebra 𝔡 with subalgebra 𝔤 spanned by the first dim_g basis vectors
/// and complement 𝔥 spanned by the rest; B = 𝔡/𝔤 is identified with 𝔥.
class LiePair {
 public:
  LiePair() = default;
  /// Throws SubalgebraNotClosed when 𝔤 is not closed under the bracket.
  LiePair(LieAlgebra d, int dim_g);

  const LieAlgebra& d() const { return d_; }
  const LieAlgebra& g() const { return g_; }
  int dim_d() const { return d_.dim(); }
  int dim_g() const { return dim_g_; }
  int dim_b() const { return d_.dim() - dim_g_; }
  /// Index in 𝔡 of the β-th complement vector, i.e. j(b_β).
  int j(int beta) const { return dim_g_ + beta; }

 private:
  LieAlgebra d_;
  LieAlgebra g_;
  int dim_g_ = 0;
};

LiePair make_pair(const LieAlgebra& d, int dim_g);

struct AdaptedBasis {
  LieAlgebra algebra;
  /// Columns are the new basis vectors written in the old basis.
  Matrix transition;
};

/// Moves the span to the front of the basis, completing it by the standard
/// vectors of smallest index. Throws NotASubalgebra when the span is
/// dependent or not closed.
AdaptedBasis adapt_basis(const LieAlgebra& d, const std::vector<Vector>& span_g);

/// Finite-dimensional representation of 𝔤: one matrix per basis vector.
struct GModule {
  int dim = 0;
  std::vector<Matrix> action;

  int dim_g() const { return static_cast<int>(action.size()); }
  friend bool operator==(const GModule&, const GModule&) = default;
};

/// ρ(a_i)ρ(a_j) − ρ(a_j)ρ(a_i) − ρ([a_i,a_j]) on all basis pairs.
CheckReport check_module(const LieAlgebra& g, const GModule& e);

GModule trivial_module(int dim_g, int dim);
/// B = 𝔡/𝔤 with ρ(a)q(l) = q[a,l].
GModule quotient_module(const LiePair& p);
GModule dual_module(const GModule& e);
/// Row-major tensor product: basis index x·dim(F) + y.
GModule tensor_module(const GModule& e, const GModule& f);
/// End E ≅ E ⊗ E*, vectorised row-major (row·dim + col), acting by commutator.
GModule end_module(const GModule& e);
/// Λ^k E over the lexicographic subset basis.
GModule exterior_power_module(const GModule& e, int k);
GModule direct_sum_module(const GModule& e, const GModule& f);
/// Module in the basis given by the columns of q.
GModule conjugate_module(const GModule& e, const Matrix& q);

/// Commutative 𝔤-algebra: module plus product constants mult(i,j,k).
struct GAlgebra {
  GModule module;
  std::vector<GaussScalar> mult;

  int dim() const { return module.dim; }
  const GaussScalar& m(int i, int j, int k) const {
    return mult[(static_cast<std::size_t>(i) * module.dim + j) * module.dim + k];
  }
  Vector product(const Vector& x, const Vector& y) const;
};

/// Commutativity, associativity, and the derivation rule for each ρ(a).
CheckReport check_g_algebra(const LieAlgebra& g, const GAlgebra& c);

/// The ground field with zero action.
GAlgebra unit_algebra(int dim_g);
/// ℚ[ε]/(ε²) with basis (1, ε) and the given action on ε (zero by default).
GAlgebra dual_numbers(int dim_g);

/// Two Lie algebras acting on each other: nabla[X] ∈ End B, delta[Y] ∈ End A.
struct MatchedPairData {
  LieAlgebra a;
  LieAlgebra b;
  std::vector<Matrix> nabla;
  std::vector<Matrix> delta;
};

/// Representation property of both actions and the two mixed identities.
CheckReport check_matched_pair(const MatchedPairData& m);

/// The bracket of A ⊕ B built from the data without checking the axioms.
LieAlgebra matched_bracket(const MatchedPairData& m);

/// A ⋈ B on A ⊕ B as a pair with 𝔤 = A; throws MatchedPairAxiomsFail.
LiePair matched_sum(const MatchedPairData& m);

/// Inverse of matched_sum for pairs whose complement 𝔥 is a subalgebra;
/// throws NotASubalgebra otherwise.
MatchedPairData decompose(const LiePair& p);

}  // namespace liepair
