#pragma once

#include <random>

#include "liepair/zoo.hpp"

namespace testfx {

using namespace liepair;

inline Cochain random_cochain(std::mt19937_64& rng, int dim_g, int k, int dim_b, int l, int dim_e) {
  Cochain c = Cochain::zero(dim_g, k, dim_b, l, dim_e);
  for (auto& x : c.coeffs)
    if (rng() % 2) x = static_cast<long>(rng() % 7) - 3;
  return c;
}

inline Matrix random_matrix(std::mt19937_64& rng, int r, int c) {
  Matrix m(r, c);
  for (auto& x : m.data()) x = static_cast<long>(rng() % 5) - 2;
  return m;
}

}  // namespace testfx
