#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liepair/ce.hpp"

namespace liepair {

/// Linear map ∇: 𝔡 → End E whose 𝔤-slots are the module action.
struct Connection {
  LiePair pair;
  GModule module;
  std::vector<Matrix> nabla;

  /// ∇_x for a vector x ∈ 𝔡.
  Matrix along(const Vector& x) const;
};

/// ∇_{i(a)} = action(a), ∇_{j(b)} = 0.
Connection extend_by_zero(const LiePair& pair, const GModule& module);

/// The first dim_g slots must equal the module action.
CheckReport check_extension(const Connection& c);

/// ∇_{x_i}∇_{x_j} − ∇_{x_j}∇_{x_i} − ∇_{[x_i,x_j]}
Matrix curvature(const Connection& c, int i, int j);

/// Complex Λ•𝔤* ⊗ B* ⊗ End E that houses Atiyah cocycles.
CEComplex atiyah_complex(const LiePair& pair, const GModule& module);

/// a ⊗ b ↦ R(a, j(b)) as a (k=1, l=1, End E)-cochain; End E is vectorised
/// row-major. Throws NotACocycle if the result is not closed.
Cochain atiyah_cocycle(const Connection& c);

/// ∇_a∇_l − ∇_l∇_a − ∇_{[a,l]} for a ∈ 𝔤, l ∈ 𝔡.
CheckReport check_compatible(const Connection& c);

struct AtiyahClass {
  bool vanishes = false;
  Cochain representative;
  std::optional<Cochain> primitive;
  /// ∇′ = ∇ − φ on the complement slots, present when the class vanishes.
  std::optional<Connection> repaired;
};

AtiyahClass atiyah_class(const Connection& c);
AtiyahClass atiyah_class(const LiePair& pair, const GModule& module);

/// Connection with ∇_{j(b)} shifted by −φ(b) for φ ∈ B* ⊗ End E (k = 0, l = 1).
Connection shift_connection(const Connection& c, const Cochain& phi);

/// Block-diagonal connection on E₁ ⊕ E₂.
Connection direct_sum_connection(const Connection& c1, const Connection& c2);

/// Element of the graded-commutative algebra Λ𝔤* ⊗ ΛB* ⊗ End E, stored by
/// bidegree-carrying mask pairs. Products follow the Koszul rule
/// (x⊗y⊗X)(x′⊗y′⊗X′) = (−1)^{|y||x′|} (x∧x′)⊗(y∧y′)⊗XX′.
class FormAlgebraElement {
 public:
  FormAlgebraElement(int dim_g, int dim_b, int dim_e) : dim_g_(dim_g), dim_b_(dim_b), dim_e_(dim_e) {}
  static FormAlgebraElement one(int dim_g, int dim_b, int dim_e);
  /// The Atiyah cocycle read as Σ e^{a_i} ⊗ e^{b_β} ⊗ α(a_i; b_β).
  static FormAlgebraElement from_atiyah(const Cochain& alpha, int dim_e);

  int dim_g() const { return dim_g_; }
  int dim_b() const { return dim_b_; }
  int dim_e() const { return dim_e_; }
  const std::map<std::pair<Mask, Mask>, Matrix>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Mask x, Mask y, const Matrix& m);
  FormAlgebraElement& operator+=(const FormAlgebraElement& o);
  FormAlgebraElement operator*(const FormAlgebraElement& o) const;
  FormAlgebraElement scaled(const GaussScalar& s) const;
  /// Entrywise trace; the result has dim_e = 1.
  FormAlgebraElement trace() const;
  /// Entry (r, c) of the End E factor as a scalar (dim_e = 1) element.
  FormAlgebraElement entry(int r, int c) const;
  /// Component of bidegree (j, j) as a Λ^j𝔤* ⊗ Λ^jB* cochain (dim_e must be 1).
  Cochain component(int j) const;

  friend bool operator==(const FormAlgebraElement& a, const FormAlgebraElement& b) {
    return a.dim_g_ == b.dim_g_ && a.dim_b_ == b.dim_b_ && a.dim_e_ == b.dim_e_ && a.terms_ == b.terms_;
  }

 private:
  int dim_g_;
  int dim_b_;
  int dim_e_;
  std::map<std::pair<Mask, Mask>, Matrix> terms_;
};

/// Σ coeffs[n] xⁿ on a nilpotent element (terms past the list are dropped).
FormAlgebraElement power_series(const FormAlgebraElement& x, const std::vector<GaussScalar>& coeffs);

/// x/(1 − e^{−x}) = 1 + x/2 + x²/12 − x⁴/720 + …, exact up to x⁸.
const std::vector<GaussScalar>& todd_series();

/// Complex Λ•𝔤* ⊗ Λ^j B* for checking components of scalar classes.
CEComplex scalar_complex(const LiePair& pair, int j);

struct ScalarClass {
  int k = 0;
  /// tr(α^k) in Λ^k𝔤* ⊗ Λ^kB*.
  Cochain trace_part;
  /// The factor (1/k!)(i/2π)^k, never folded into the coefficients.
  std::string prefactor;
};

ScalarClass scalar_class(const Connection& c, int k);
ScalarClass scalar_class(const LiePair& pair, const GModule& module, int k);

struct ToddClass {
  /// components[j] lives in Λ^j𝔤* ⊗ Λ^jB*, j = 0 … min(dim 𝔤, dim B).
  std::vector<Cochain> components;
  FormAlgebraElement element;
};

/// det(α/(1 − e^{−α})) computed as exp(tr log(·)).
ToddClass todd_class(const Connection& c);
ToddClass todd_class(const LiePair& pair, const GModule& module);

}  // namespace liepair
