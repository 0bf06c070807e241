#include "liepair/multilinear.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace liepair {

int popcount(Mask m) { return __builtin_popcount(m); }

std::vector<int> mask_to_indices(Mask m) {
  std::vector<int> out;
  for (int t = 0; m; ++t, m >>= 1) {
    if (m & 1u) out.push_back(t);
  }
  return out;
}

Mask indices_to_mask(const std::vector<int>& idx) {
  Mask m = 0;
  for (int t : idx) m |= Mask{1} << t;
  return m;
}

int merge_sign(Mask i, Mask j) {
  if (i & j) return 0;
  int inversions = 0;
  for (Mask rest = j; rest; rest &= rest - 1) {
    int t = __builtin_ctz(rest);
    Mask above = (t + 1 >= 32) ? 0 : (~Mask{0} << (t + 1));
    inversions += popcount(i & above);
  }
  return (inversions & 1) ? -1 : 1;
}

SortedIndex sort_indices(const std::vector<int>& idx) {
  SortedIndex out{1, 0};
  for (std::size_t a = 0; a < idx.size(); ++a) {
    Mask bit = Mask{1} << idx[a];
    if (out.mask & bit) return {0, 0};
    out.mask |= bit;
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      if (idx[a] > idx[b]) out.sign = -out.sign;
    }
  }
  return out;
}

ExteriorIndex::ExteriorIndex(int dim) : dim_(dim), by_degree_(dim + 1), position_(std::size_t{1} << dim) {
  if (dim < 0 || dim > 20) throw std::invalid_argument("exterior index dimension out of range");
  for (int k = 0; k <= dim; ++k) {
    // Lexicographic combinations of {0..dim-1} of size k.
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    while (true) {
      Mask m = indices_to_mask(comb);
      position_[m] = static_cast<std::uint32_t>(by_degree_[k].size());
      by_degree_[k].push_back(m);
      int i = k - 1;
      while (i >= 0 && comb[i] == dim - k + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
}

std::size_t ExteriorIndex::size(int degree) const {
  if (degree < 0 || degree > dim_) return 0;
  return by_degree_[degree].size();
}

const ExteriorIndex& exterior_index(int dim) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<ExteriorIndex>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[dim];
  if (!slot) slot = std::make_unique<ExteriorIndex>(dim);
  return *slot;
}

std::vector<Permutation> enumerate_shuffles(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("negative shuffle block");
  const int n = p + q;
  std::vector<Permutation> out;
  std::vector<int> first(p);
  for (int i = 0; i < p; ++i) first[i] = i;
  while (true) {
    Permutation sigma(first);
    std::vector<bool> used(n, false);
    for (int v : first) used[v] = true;
    for (int v = 0; v < n; ++v) {
      if (!used[v]) sigma.push_back(v);
    }
    out.push_back(std::move(sigma));
    int i = p - 1;
    while (i >= 0 && first[i] == n - p + i) --i;
    if (i < 0) break;
    ++first[i];
    for (int j = i + 1; j < p; ++j) first[j] = first[j - 1] + 1;
  }
  return out;
}

int permutation_sign(const Permutation& sigma) {
  int inversions = 0;
  for (std::size_t a = 0; a < sigma.size(); ++a) {
    for (std::size_t b = a + 1; b < sigma.size(); ++b) {
      if (sigma[a] > sigma[b]) ++inversions;
    }
  }
  return (inversions & 1) ? -1 : 1;
}

int koszul_sign(const Permutation& sigma, const std::vector<int>& degrees) {
  if (sigma.size() != degrees.size()) throw std::invalid_argument("koszul_sign: length mismatch");
  int sign = 1;
  for (std::size_t a = 0; a < sigma.size(); ++a) {
    for (std::size_t b = a + 1; b < sigma.size(); ++b) {
      if (sigma[a] > sigma[b] && (degrees[sigma[a]] & 1) && (degrees[sigma[b]] & 1)) sign = -sign;
    }
  }
  return sign;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation out(inner.size());
  for (std::size_t p = 0; p < inner.size(); ++p) out[p] = outer[inner[p]];
  return out;
}

ExteriorForm ExteriorForm::zero(int dim, int degree) {
  return {dim, degree, std::vector<GaussScalar>(exterior_index(dim).size(degree))};
}

ExteriorForm ExteriorForm::basis(int dim, Mask m) {
  ExteriorForm f = zero(dim, popcount(m));
  f.coeffs[exterior_index(dim).position(m)] = 1;
  return f;
}

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b) {
  if (a.dim != b.dim) throw std::invalid_argument("wedge: dimension mismatch");
  const auto& ext = exterior_index(a.dim);
  ExteriorForm out = ExteriorForm::zero(a.dim, a.degree + b.degree);
  if (a.degree + b.degree > a.dim) return out;
  for (std::size_t x = 0; x < a.coeffs.size(); ++x) {
    if (a.coeffs[x].is_zero()) continue;
    Mask mx = ext.mask(a.degree, x);
    for (std::size_t y = 0; y < b.coeffs.size(); ++y) {
      if (b.coeffs[y].is_zero()) continue;
      Mask my = ext.mask(b.degree, y);
      int s = merge_sign(mx, my);
      if (s == 0) continue;
      GaussScalar term = a.coeffs[x] * b.coeffs[y];
      auto& slot = out.coeffs[ext.position(mx | my)];
      if (s > 0) slot += term;
      else slot -= term;
    }
  }
  return out;
}

ExteriorForm operator+(const ExteriorForm& a, const ExteriorForm& b) {
  if (a.dim != b.dim || a.degree != b.degree) throw std::invalid_argument("form sum shape mismatch");
  ExteriorForm out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

ExteriorForm operator*(const GaussScalar& s, const ExteriorForm& a) {
  ExteriorForm out = a;
  for (auto& c : out.coeffs) c *= s;
  return out;
}

TensorIndex::TensorIndex(int base, int arity) : base_(base), arity_(arity), size_(1), strides_(arity) {
  for (int slot = arity - 1; slot >= 0; --slot) {
    strides_[slot] = size_;
    size_ *= static_cast<std::size_t>(base);
  }
}

std::size_t TensorIndex::encode(const std::vector<int>& digits) const {
  std::size_t code = 0;
  for (int slot = 0; slot < arity_; ++slot) code += strides_[slot] * static_cast<std::size_t>(digits[slot]);
  return code;
}

std::vector<int> TensorIndex::decode(std::size_t code) const {
  std::vector<int> digits(arity_);
  for (int slot = 0; slot < arity_; ++slot) {
    digits[slot] = static_cast<int>(code / strides_[slot]);
    code %= strides_[slot];
  }
  return digits;
}

}  // namespace liepair
