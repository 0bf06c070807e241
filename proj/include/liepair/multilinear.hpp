#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "liepair/scalar.hpp"

namespace liepair {

/// Exterior multi-indices are bitmasks over basis indices; bit t set means
/// the t-th dual basis covector appears. Within one degree, multi-indices are
/// ordered lexicographically as strictly increasing tuples.
using Mask = std::uint32_t;

int popcount(Mask m);
std::vector<int> mask_to_indices(Mask m);
Mask indices_to_mask(const std::vector<int>& idx);

/// Sign of e^I ∧ e^J relative to e^{I∪J}; 0 when the masks overlap.
int merge_sign(Mask i, Mask j);

/// Sorts an arbitrary index list; returns the permutation sign and the mask,
/// or sign 0 when an index repeats.
struct SortedIndex {
  int sign = 0;
  Mask mask = 0;
};
SortedIndex sort_indices(const std::vector<int>& idx);

/// Enumerates and ranks exterior multi-indices of a fixed ambient dimension.
class ExteriorIndex {
 public:
  explicit ExteriorIndex(int dim);

  int dim() const { return dim_; }
  std::size_t size(int degree) const;
  /// Mask of the position-th multi-index of the given degree.
  Mask mask(int degree, std::size_t position) const { return by_degree_[degree][position]; }
  const std::vector<Mask>& masks(int degree) const { return by_degree_[degree]; }
  /// Position of a mask within its own degree.
  std::size_t position(Mask m) const { return position_[m]; }

 private:
  int dim_;
  std::vector<std::vector<Mask>> by_degree_;
  std::vector<std::uint32_t> position_;
};

/// Shared, lazily built index tables (thread-safe).
const ExteriorIndex& exterior_index(int dim);

/// A permutation σ stored as its image sequence: position p holds σ(p).
using Permutation = std::vector<int>;

/// All (p,q)-shuffles of {0,…,p+q−1}: σ(0)<…<σ(p−1) and σ(p)<…<σ(p+q−1),
/// ordered lexicographically by the first block. There are C(p+q,p) of them.
std::vector<Permutation> enumerate_shuffles(int p, int q);

int permutation_sign(const Permutation& sigma);

/// Koszul sign ε with v_{σ(0)}⊙…⊙v_{σ(n−1)} = ε·v_0⊙…⊙v_{n−1} in the free
/// graded-commutative algebra; degrees[i] is the degree of v_i.
int koszul_sign(const Permutation& sigma, const std::vector<int>& degrees);

Permutation compose(const Permutation& outer, const Permutation& inner);

/// Coefficients of an element of Λ^degree(V*) over the lexicographic basis.
struct ExteriorForm {
  int dim = 0;
  int degree = 0;
  std::vector<GaussScalar> coeffs;

  static ExteriorForm zero(int dim, int degree);
  static ExteriorForm basis(int dim, Mask m);
  friend bool operator==(const ExteriorForm&, const ExteriorForm&) = default;
};

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b);
ExteriorForm operator+(const ExteriorForm& a, const ExteriorForm& b);
ExteriorForm operator*(const GaussScalar& s, const ExteriorForm& a);

/// Row-major encoding of tensor multi-indices J ∈ {0,…,base−1}^arity; the
/// first slot is the most significant digit.
class TensorIndex {
 public:
  TensorIndex(int base, int arity);
  int base() const { return base_; }
  int arity() const { return arity_; }
  std::size_t size() const { return size_; }
  std::size_t encode(const std::vector<int>& digits) const;
  std::vector<int> decode(std::size_t code) const;
  /// Stride of a slot within the encoding.
  std::size_t stride(int slot) const { return strides_[slot]; }

 private:
  int base_;
  int arity_;
  std::size_t size_;
  std::vector<std::size_t> strides_;
};

}  // namespace liepair
