#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "liepair/atiyah.hpp"

namespace liepair {

/// A pair together with named modules, connections (keyed by module name)
/// and commutative algebras, ready for export or verification.
struct Fixture {
  std::string name;
  LiePair pair;
  std::map<std::string, GModule> modules;
  std::map<std::string, Connection> connections;
  std::map<std::string, GAlgebra> algebras;
};

/// 𝔰𝔩₂ in the basis (h, e, f) with 𝔤 = span(h, e). Modules "B", "B*" and
/// "Hom(BxB,B)" = B*⊗B*⊗B.
Fixture sl2_fixture();
LiePair sl2_pair();

/// 𝔤𝔩_n(ℂ) = 𝔲_n ⋈ 𝔱_n as a real Lie algebra.
struct GlUnTn {
  MatchedPairData data;
  LiePair pair;
  /// ∇_X Y = XY on 𝔱_n (flat and torsion free), extending the 𝔲_n action.
  Connection connection;
  /// The complex matrices of the basis, 𝔲_n first then 𝔱_n.
  std::vector<Matrix> basis;
};
GlUnTn gl_un_tn(int n);
/// Same pair with ∇_X Y = YX on 𝔱_n, which has torsion and curvature.
Connection gl_un_tn_torsion_connection(const GlUnTn& g);

/// Matched pair (𝔤, 𝔤*) of a Lie bialgebra. cobracket[t] is the antisymmetric
/// coefficient matrix of δ(e_t) = Σ_{p<q} C(p,q) e_p∧e_q. Throws NotABialgebra.
MatchedPairData bialgebra_pair(const LieAlgebra& g, const std::vector<Matrix>& cobracket);
/// 𝔤 = span(x, y), [x,y] = y, δ(x) = 0, δ(y) = x∧y.
MatchedPairData aff2_bialgebra();

/// Heisenberg algebra (z | x, y), [x,y] = z, with 𝔤 the center.
LiePair heisenberg_pair();

/// Random pair of the requested dimensions (dim_d ≤ 8), built as a semidirect
/// product with a random flag-preserving change of basis. Deterministic in seed.
LiePair random_pair(int dim_d, int dim_g, std::uint64_t seed);
/// Random flat 2-dimensional module: two characters glued by a 1-cocycle.
GModule random_module(const LiePair& pair, std::uint64_t seed);
/// Random integer values on the complement slots.
Connection random_extension(const LiePair& pair, const GModule& module, std::uint64_t seed);

/// Standard modules of any pair: "B" and "B*".
std::map<std::string, GModule> standard_modules(const LiePair& pair);

std::vector<std::string> zoo_names();
/// Named fixture; "random" uses the seed. Throws std::out_of_range for
/// unknown names.
Fixture zoo_fixture(const std::string& name, std::uint64_t seed = 1);

}  // namespace liepair
