#pragma once

// Slow reference evaluations used as independent oracles in the tests. They
// evaluate cochains as multilinear functions on explicit argument lists
// instead of going through the coefficient-layout machinery.

#include <algorithm>
#include <vector>

#include "liepair/ce.hpp"

namespace oracle {

using namespace liepair;

// Value ω(a_{idx[0]}, …, a_{idx[k-1]}; b_J) for any index order, using
// alternation to sort; zero on repeated indices.
inline Vector eval(const Cochain& w, std::vector<int> idx, std::size_t J) {
  Vector out(w.dim_e);
  int sign = 1;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      if (idx[a] == idx[b]) return out;
      if (idx[a] > idx[b]) sign = -sign;
    }
  std::sort(idx.begin(), idx.end());
  Mask m = 0;
  for (int i : idx) m |= Mask{1} << i;
  for (int v = 0; v < w.dim_e; ++v) out[v] = sign > 0 ? w.at(m, J, v) : -w.at(m, J, v);
  return out;
}

inline std::vector<int> digits(std::size_t J, int base, int len) {
  std::vector<int> d(len);
  for (int s = len - 1; s >= 0; --s) {
    d[s] = static_cast<int>(J % base);
    J /= base;
  }
  return d;
}

inline std::size_t undigits(const std::vector<int>& d, int base) {
  std::size_t J = 0;
  for (int x : d) J = J * base + x;
  return J;
}

// (a·ω)(…; b_J) = ρ_E(a) ω(…; b_J) − Σ_s ω(…; …ρ_B(a) b_{J_s}…)
inline Vector act_value(const Cochain& w, const Matrix& rho_b, const Matrix& rho_e, const std::vector<int>& idx,
                        std::size_t J) {
  Vector out = rho_e * eval(w, idx, J);
  auto d = digits(J, w.dim_b, w.l);
  for (int s = 0; s < w.l; ++s) {
    for (int gamma = 0; gamma < w.dim_b; ++gamma) {
      GaussScalar coef = rho_b(gamma, d[s]);
      if (coef.is_zero()) continue;
      auto e = d;
      e[s] = gamma;
      axpy(out, -coef, eval(w, idx, undigits(e, w.dim_b)));
    }
  }
  return out;
}

// Textbook Chevalley–Eilenberg differential evaluated tuple by tuple.
inline Cochain ce_diff(const LieAlgebra& g, const GModule& b, const GModule& e, const Cochain& w) {
  Cochain out = Cochain::zero(w.dim_g, w.k + 1, w.dim_b, w.l, w.dim_e);
  const int m = g.dim();
  if (w.k + 1 > m) return out;
  for (Mask S : exterior_index(m).masks(w.k + 1)) {
    std::vector<int> a = mask_to_indices(S);
    for (std::size_t J = 0; J < w.tensor_size(); ++J) {
      Vector val(w.dim_e);
      for (int i = 0; i <= w.k; ++i) {
        std::vector<int> rest = a;
        rest.erase(rest.begin() + i);
        Matrix rb = w.l > 0 ? b.action[a[i]] : Matrix();
        Vector t = act_value(w, rb, e.action[a[i]], rest, J);
        axpy(val, i % 2 ? -1 : 1, t);
      }
      for (int i = 0; i <= w.k; ++i)
        for (int j = i + 1; j <= w.k; ++j) {
          std::vector<int> rest;
          for (int p = 0; p <= w.k; ++p)
            if (p != i && p != j) rest.push_back(a[p]);
          for (int t = 0; t < m; ++t) {
            GaussScalar c = g.c(a[i], a[j], t);
            if (c.is_zero()) continue;
            std::vector<int> args{t};
            args.insert(args.end(), rest.begin(), rest.end());
            axpy(val, (i + j) % 2 ? -c : c, eval(w, args, J));
          }
        }
      for (int v = 0; v < w.dim_e; ++v) out.at(S, J, v) = val[v];
    }
  }
  return out;
}

}  // namespace oracle
