#pragma once

#include <map>
#include <optional>
#include <vector>

#include "liepair/atiyah.hpp"

namespace liepair {

/// Tensors determined by the splitting j(b_β) = x_{m+β}, p = first m
/// coordinates, q = last r coordinates, and a connection on B.
struct SplittingTensors {
  int dim_g = 0;
  int dim_b = 0;
  /// Δ_{b_β} a_i = Σ_{i′} delta[β](i′, i) a_{i′}, Δ_b a = p[j(b), i(a)].
  std::vector<Matrix> delta;
  /// Indexed by β₁·r + β₂.
  std::vector<Vector> alpha_map;  // p[j(b₁), j(b₂)] ∈ 𝔤
  std::vector<Vector> beta;       // ∇_{j b₁}b₂ − ∇_{j b₂}b₁ − q[j b₁, j b₂] ∈ B
  std::vector<Matrix> omega;      // curvature of ∇ on (j b₁, j b₂)

  /// β as a (k = 0, l = 2, B) cochain; Ω as a (k = 0, l = 2, End B) cochain.
  Cochain beta_cochain() const;
  Cochain omega_cochain() const;
};

/// The connection must be a connection on quotient_module(pair).
SplittingTensors splitting_tensors(const Connection& conn_b);

/// Connection on End E induced by a connection on E (commutator action),
/// vectorised row-major like end_module.
Connection end_connection(const Connection& conn);

/// ∂^∇: Λ^k𝔤* ⊗ (⊗^l B*) ⊗ E → Λ^k𝔤* ⊗ (⊗^{l+1} B*) ⊗ E, the new argument b₀
/// in the first slot:
/// (−1)^k (∂^∇ω)(a; b₀, b) = ∇_{j b₀}(ω(a; b)) − Σ ω(…Δ_{b₀}a_s…; b) − Σ ω(a; …∇_{j b₀}b_t…).
/// conn_e is the connection on the value space (w.dim_e = its module dim).
Cochain partial_nabla(const Connection& conn_b, const Connection& conn_e, const Cochain& w);

/// R_n ∈ Λ¹𝔤* ⊗ (⊗ⁿB*) ⊗ B (index n, 2 ≤ n ≤ depth) with
/// R₂(b₁, b₂)(a) = α_B(a; b₁)b₂ and R_{n+1} = ∂^∇R_n. When a connection on E
/// is attached, s[n] ∈ Λ¹𝔤* ⊗ (⊗^{n−1}B*) ⊗ End E holds S_n with the module
/// argument as the column index of End E.
struct BracketTower {
  int depth = 0;
  Connection conn_b;
  std::optional<Connection> conn_e;
  SplittingTensors split;
  std::vector<Cochain> r;
  std::vector<Cochain> s;

  const LiePair& pair() const { return conn_b.pair; }
  bool has_module() const { return conn_e.has_value(); }
};

BracketTower build_tower(const Connection& conn_b, int depth = 4);
BracketTower build_tower(const Connection& conn_b, const Connection& conn_e, int depth = 4);

/// Moves the last tensor slot of a (value F) cochain into the column index of
/// End F, and back.
Cochain tensor_to_end(const Cochain& w);
Cochain end_to_tensor(const Cochain& w, int dim_value);

/// ω′(b₁,…,b_l) = ω(b_{π(1)},…,b_{π(l)}).
Cochain permute_slots(const Cochain& w, const std::vector<int>& pi);

/// ⌊μ(b₁,…,ν(b′₁,…),…,b_l)⌋ with ν inserted at slot `pos` (0-based): the
/// shuffle sum over the exterior arguments. ν must be B-valued.
Cochain creep(const Cochain& mu, int pos, const Cochain& nu);

/// Homogeneous components ξ ⊗ f with f ∈ F ⊗ 𝒞 (index x·dim 𝒞 + c), one
/// cochain (l = 0) per exterior degree.
struct GradedElement {
  std::map<int, Cochain> parts;

  GradedElement() = default;
  explicit GradedElement(Cochain c) { parts.emplace(c.k, std::move(c)); }
  bool is_zero() const;
  GradedElement& operator+=(const GradedElement& o);
  friend bool operator==(const GradedElement& a, const GradedElement& b);
};

/// The multibrackets λ_k on V = Λ•𝔤* ⊗ B ⊗ 𝒞 and μ_k on W = Λ•𝔤* ⊗ E ⊗ 𝒞.
class LeibnizStructure {
 public:
  LeibnizStructure(BracketTower tower, GAlgebra algebra);

  const BracketTower& tower() const { return tower_; }
  const GAlgebra& algebra() const { return algebra_; }
  int dim_g() const { return tower_.pair().dim_g(); }
  int dim_c() const { return algebra_.dim(); }
  /// Fibre dimension of V and W (including the 𝒞 factor).
  int v_fibre() const { return tower_.pair().dim_b() * algebra_.dim(); }
  int w_fibre() const;
  const CEComplex& v_complex() const { return v_complex_; }
  const CEComplex& w_complex() const;

  /// λ_k on homogeneous arguments; λ₁ = ∂^A. Throws ArityBeyondTower.
  Cochain lambda(const std::vector<const Cochain*>& args) const;
  /// μ_k(v₁,…,v_{k−1}; w); μ₁ = ∂^A on W. Throws ArityBeyondTower.
  Cochain mu(const std::vector<const Cochain*>& args) const;

  Cochain v_zero(int k) const { return v_complex_.zero(k); }
  Cochain w_zero(int k) const { return w_complex().zero(k); }
  /// e^I ⊗ (f_x ⊗ c).
  Cochain v_basis(Mask I, int b, int c) const;
  Cochain w_basis(Mask I, int e, int c) const;

 private:
  BracketTower tower_;
  GAlgebra algebra_;
  CEComplex v_complex_;
  std::optional<CEComplex> w_complex_;
  // End-form copies of R_k and S_k used for contraction.
  std::vector<Cochain> r_end_;
};

/// The unextended brackets (𝒞 = ground field).
LeibnizStructure leibniz_structure(const BracketTower& tower);
/// Throws NotCommutativeAlgebra when 𝒞 is not commutative and
/// ValidationError when it is not a 𝔤-algebra otherwise.
LeibnizStructure extend_with_algebra(const BracketTower& tower, const GAlgebra& c);

GradedElement lambda_k(const LeibnizStructure& ls, const std::vector<GradedElement>& args);
GradedElement mu_k(const LeibnizStructure& ls, const std::vector<GradedElement>& args);

/// Exhaustive sweep of the Leibniz∞[1] identities for 1 ≤ n ≤ max_n over all
/// tuples of basis decomposables with exterior degree ≤ degree_cap. Throws
/// ArityBeyondTower when max_n exceeds the tower depth.
CheckReport verify_leibniz(const LeibnizStructure& ls, int max_n, int degree_cap);
/// Same for the module identities over tuples (v₁,…,v_{n−1}, w).
CheckReport verify_module(const LeibnizStructure& ls, int max_n, int degree_cap);

/// The binary bracket λ(v₁⊗v₂) = (−1)^{k₂} ξ₁∧ξ₂∧R₂(b₁,b₂) on V[−1].
Cochain binary_bracket(const BracketTower& t, const Cochain& v1, const Cochain& v2);
/// Θ(v₁⊗v₂) = (−1)^{k₁} ξ₁∧ξ₂⊗β(b₁,b₂).
Cochain theta_witness(const BracketTower& t, const Cochain& v1, const Cochain& v2);
/// Ξ(v₀⊗v₁⊗v₂) = (−1)^{k₀+k₂} ξ₀∧ξ₁∧ξ₂∧R₃(b₀,b₁,b₂).
Cochain xi_witness(const BracketTower& t, const Cochain& v0, const Cochain& v1, const Cochain& v2);

/// Every structural identity behind the Leibniz∞ theorem, exactly.
CheckReport check_proof_identities(const BracketTower& t, int degree_cap = 2);

struct SymmetryVerdict {
  int n = 0;
  bool fully_symmetric = true;
  std::optional<Violation> witness;
};
struct SymmetryReport {
  std::vector<SymmetryVerdict> verdicts;
  /// All R_n symmetric: the brackets define an L∞[1] structure.
  bool l_infinity = true;
};
SymmetryReport symmetry_report(const BracketTower& t);

/// λ₂ maps cocycle pairs to cocycles and (cocycle, coboundary) pairs in
/// either order to coboundaries, in every degree pair with k₁+k₂+1 ≤ dim 𝔤.
CheckReport check_cohomology_bracket(const LeibnizStructure& ls);

/// Thread count for sweeps: LIEPAIR_THREADS if set, else the hardware count.
unsigned sweep_threads();

}  // namespace liepair
