#pragma once

#include <optional>
#include <vector>

#include "liepair/lie.hpp"
#include "liepair/multilinear.hpp"

namespace liepair {

/// Element of Λ^k 𝔤* ⊗ (⊗^l B*) ⊗ E. Coefficients are laid out as
/// ((I · dim_b^l + J) · dim_e + v) with I the lexicographic position of the
/// exterior multi-index and J the row-major tensor multi-index.
struct Cochain {
  int dim_g = 0;
  int k = 0;
  int dim_b = 0;
  int l = 0;
  int dim_e = 0;
  std::vector<GaussScalar> coeffs;

  static Cochain zero(int dim_g, int k, int dim_b, int l, int dim_e);

  std::size_t tensor_size() const;
  /// Size of the (J, v) block attached to one exterior multi-index.
  std::size_t block_size() const { return tensor_size() * static_cast<std::size_t>(dim_e); }
  std::size_t exterior_size() const { return exterior_index(dim_g).size(k); }

  GaussScalar& at(Mask I, std::size_t j, int v);
  const GaussScalar& at(Mask I, std::size_t j, int v) const;

  bool is_zero() const;
  bool same_shape(const Cochain& o) const;

  Cochain& operator+=(const Cochain& o);
  Cochain& operator-=(const Cochain& o);
  Cochain& operator*=(const GaussScalar& s);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(const GaussScalar& s, Cochain a) { return a *= s; }
  friend bool operator==(const Cochain&, const Cochain&) = default;
};

/// Cohomology in one degree: dimension plus deterministic representatives.
struct CohomologyResult {
  std::size_t dim = 0;
  std::vector<Cochain> representatives;
};

/// The Chevalley–Eilenberg complex of 𝔤 with values in (⊗^l B*) ⊗ E. The
/// action on the B* slots is folded into the module action, so one code path
/// serves every tensor arity.
class CEComplex {
 public:
  /// b may be any module when l = 0 (only its dimension is used for shapes).
  CEComplex(LieAlgebra g, GModule b, int l, GModule e);

  const LieAlgebra& g() const { return g_; }
  const GModule& b() const { return b_; }
  const GModule& e() const { return e_; }
  int l() const { return l_; }
  int dim_g() const { return g_.dim(); }

  Cochain zero(int k) const;
  std::size_t space_dim(int k) const;
  /// Basis cochain number `index` of degree k in coefficient order.
  Cochain basis(int k, std::size_t index) const;

  /// a_i · ω on one (J, v) block: E-action minus the B-action in each slot.
  std::vector<GaussScalar> act(int i, const std::vector<GaussScalar>& block) const;

  Cochain diff(const Cochain& w) const;
  /// Matrix of ∂: C^k → C^{k+1} in coefficient coordinates.
  Matrix diff_matrix(int k) const;

  bool is_cocycle(const Cochain& w) const { return diff(w).is_zero(); }
  /// φ with ∂φ = w (free variables zero), or nullopt when w is not exact.
  std::optional<Cochain> primitive(const Cochain& w) const;
  std::size_t cohomology_dim(int k) const;
  CohomologyResult cohomology(int k) const;

 private:
  LieAlgebra g_;
  GModule b_;
  int l_;
  GModule e_;
  std::size_t tensor_size_;
  // Sparse action entries (row, col, value) per 𝔤 basis vector.
  struct Entry {
    int row;
    int col;
    GaussScalar value;
  };
  std::vector<std::vector<Entry>> b_entries_;
  std::vector<std::vector<Entry>> e_entries_;
  // For each t, the pairs p < q with nonzero c(p, q, t).
  std::vector<std::vector<std::pair<std::pair<int, int>, GaussScalar>>> bracket_to_;
};

Cochain ce_diff(const CEComplex& cx, const Cochain& w);
bool is_cocycle(const CEComplex& cx, const Cochain& w);
std::optional<Cochain> coboundary_primitive(const CEComplex& cx, const Cochain& w);
/// Cohomology of 𝔤 with values in the module itself.
std::size_t cohomology_dim(const LieAlgebra& g, const GModule& e, int k);

}  // namespace liepair
