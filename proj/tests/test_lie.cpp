#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "liepair/lie.hpp"
#include "liepair/zoo.hpp"

using namespace liepair;

namespace {

// [x, y] = x on span(x, y)
LieAlgebra two_dim() {
  LieAlgebra g(2);
  g.set_bracket(0, 1, {1, 0});
  return g;
}

bool has_violation(const CheckReport& r, const std::string& id) {
  for (const auto& v : r.violations)
    if (v.identity == id) return true;
  return false;
}

}  // namespace

TEST(Validate, AbelianAndSl2AreLie) {
  EXPECT_TRUE(validate_lie_algebra(LieAlgebra(4)).ok());
  EXPECT_TRUE(validate_lie_algebra(sl2_pair().d()).ok());
  EXPECT_TRUE(validate_lie_algebra(two_dim()).ok());
}

TEST(Validate, CorruptedConstantIsReportedWithResidual) {
  LieAlgebra g = two_dim();
  g.set_constant(0, 1, 0, 0);
  g.set_constant(0, 1, 1, 1);  // [x,y] := y while [y,x] stays −x
  CheckReport r = validate_lie_algebra(g);
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(has_violation(r, "antisymmetry"));
  ASSERT_TRUE(has_violation(r, "jacobi"));
  // cyclic sum at (x, y, x): [[x,y],x] + [[y,x],x] + [[x,x],y] = [y,x] = −x
  bool found = false;
  for (const auto& v : r.violations) {
    if (v.identity == "jacobi" && v.indices == std::vector<int>{0, 1, 0}) {
      EXPECT_EQ(v.residual, (Vector{-1, 0}));
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(MakePair, Sl2OrderedHEF) {
  LiePair p = sl2_pair();
  EXPECT_EQ(p.dim_g(), 2);
  EXPECT_EQ(p.dim_b(), 1);
  EXPECT_TRUE(validate_lie_algebra(p.g()).ok());
}

TEST(MakePair, AbelianAnyDimG) {
  for (int m = 0; m <= 3; ++m) EXPECT_NO_THROW(make_pair(LieAlgebra(3), m));
}

TEST(MakePair, Sl2OrderedHFE) {
  LieAlgebra d(3);  // (h, f, e)
  d.set_bracket(2, 1, {1, 0, 0});
  d.set_bracket(0, 2, {0, 0, 2});
  d.set_bracket(0, 1, {0, -2, 0});
  LiePair p = make_pair(d, 2);
  EXPECT_EQ(quotient_module(p).action[0], Matrix(1, 1, {2}));
}

TEST(MakePair, NotClosedThrowsWithWitness) {
  LieAlgebra d(3);  // (e, f, h)
  d.set_bracket(0, 1, {0, 0, 1});
  d.set_bracket(2, 0, {2, 0, 0});
  d.set_bracket(2, 1, {0, -2, 0});
  try {
    make_pair(d, 2);
    FAIL() << "expected SubalgebraNotClosed";
  } catch (const SubalgebraNotClosed& e) {
    EXPECT_EQ(e.i, 0);
    EXPECT_EQ(e.j, 1);
  }
}

TEST(AdaptBasis, AlreadyAdaptedGivesIdentity) {
  LieAlgebra d = sl2_pair().d();
  auto res = adapt_basis(d, {Vector{1, 0, 0}, Vector{0, 1, 0}});
  EXPECT_EQ(res.transition, Matrix::identity(3));
  EXPECT_EQ(res.algebra, d);
}

TEST(AdaptBasis, ConjugatesStructureConstants) {
  LieAlgebra d = sl2_pair().d();
  auto res = adapt_basis(d, {Vector{1, 1, 0}, Vector{0, 1, 0}});
  EXPECT_TRUE(validate_lie_algebra(res.algebra).ok());
  // [h+e, e] = 2e = 2·(second new vector)
  EXPECT_EQ(res.algebra.bracket(0, 1), (Vector{0, 2, 0}));
  const Matrix& p = res.transition;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) EXPECT_EQ(p * res.algebra.bracket(a, b), d.bracket(p.column(a), p.column(b)));
  EXPECT_NO_THROW(make_pair(res.algebra, 2));
}

TEST(AdaptBasis, Errors) {
  LieAlgebra d = sl2_pair().d();
  EXPECT_THROW(adapt_basis(d, {Vector{1, 0, 0}, Vector{2, 0, 0}}), NotASubalgebra);
  EXPECT_THROW(adapt_basis(d, {Vector{0, 1, 0}, Vector{0, 0, 1}}), NotASubalgebra);
}

TEST(QuotientModule, Sl2) {
  GModule b = quotient_module(sl2_pair());
  ASSERT_EQ(b.dim, 1);
  EXPECT_EQ(b.action[0], Matrix(1, 1, {-2}));
  EXPECT_EQ(b.action[1], Matrix(1, 1, {0}));
}

TEST(QuotientModule, AbelianIsZero) {
  GModule b = quotient_module(make_pair(LieAlgebra(4), 2));
  for (const auto& a : b.action) EXPECT_TRUE(a.is_zero());
}

TEST(QuotientModule, MatchedPairRecoversNabla) {
  MatchedPairData m = aff2_bialgebra();
  EXPECT_EQ(quotient_module(matched_sum(m)).action, m.nabla);
  GlUnTn g = gl_un_tn(2);
  EXPECT_EQ(quotient_module(matched_sum(g.data)).action, g.data.nabla);
}

TEST(QuotientModule, AlwaysFlat) {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    LiePair p = random_pair(3 + seed % 4, 1 + seed % 3, seed);
    EXPECT_TRUE(check_module(p.g(), quotient_module(p)).ok()) << seed;
  }
}

TEST(ModuleOps, Examples) {
  GModule triv = trivial_module(2, 3);
  EXPECT_EQ(dual_module(triv), triv);
  Fixture f = sl2_fixture();
  const GModule& hom = f.modules.at("Hom(BxB,B)");
  ASSERT_EQ(hom.dim, 1);
  EXPECT_EQ(hom.action[0], Matrix(1, 1, {2}));
  EXPECT_EQ(hom.action[1], Matrix(1, 1, {0}));
  GModule one{1, {Matrix(1, 1, {5}), Matrix(1, 1, {0})}};
  for (const auto& a : end_module(one).action) EXPECT_TRUE(a.is_zero());
}

TEST(ModuleOps, ConstructionsStayFlat) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    LiePair p = random_pair(4 + seed % 3, 2, seed);
    const LieAlgebra& g = p.g();
    GModule b = quotient_module(p);
    GModule r = random_module(p, seed);
    ASSERT_TRUE(check_module(g, r).ok()) << seed;
    EXPECT_TRUE(check_module(g, dual_module(b)).ok());
    EXPECT_TRUE(check_module(g, tensor_module(b, r)).ok());
    EXPECT_TRUE(check_module(g, end_module(r)).ok());
    EXPECT_TRUE(check_module(g, direct_sum_module(b, r)).ok());
    for (int k = 0; k <= b.dim; ++k) EXPECT_TRUE(check_module(g, exterior_power_module(b, k)).ok());
  }
}

TEST(ModuleOps, ExteriorPowerEdges) {
  GModule r = random_module(random_pair(5, 2, 3), 3);
  EXPECT_EQ(exterior_power_module(r, 1), r);
  // top power of a 2-dim module is the trace character
  GModule top = exterior_power_module(r, 2);
  for (int a = 0; a < r.dim_g(); ++a) EXPECT_EQ(top.action[a], Matrix(1, 1, {trace(r.action[a])}));
}

TEST(MatchedPair, ZeroActionsValid) {
  MatchedPairData m{LieAlgebra(2), LieAlgebra(3), {}, {}};
  m.nabla.assign(2, Matrix(3, 3));
  m.delta.assign(3, Matrix(2, 2));
  EXPECT_TRUE(check_matched_pair(m).ok());
  LiePair p = matched_sum(m);
  EXPECT_EQ(p.d(), LieAlgebra(5));
}

TEST(MatchedPair, AbelianActingTriviallyWithArbitraryB) {
  LieAlgebra b(3);
  b.set_bracket(0, 1, {0, 0, 1});
  MatchedPairData m{LieAlgebra(2), b, std::vector<Matrix>(2, Matrix(3, 3)), std::vector<Matrix>(3, Matrix(2, 2))};
  EXPECT_TRUE(check_matched_pair(m).ok());
}

TEST(MatchedPair, U2T2ValidAndSumIsLie) {
  GlUnTn g = gl_un_tn(2);
  EXPECT_TRUE(check_matched_pair(g.data).ok());
  LiePair s = matched_sum(g.data);
  EXPECT_TRUE(validate_lie_algebra(s.d()).ok());
  EXPECT_EQ(s.d(), g.pair.d());
}

TEST(MatchedPair, DecomposeThenRebuild) {
  GlUnTn g = gl_un_tn(2);
  EXPECT_EQ(matched_sum(decompose(g.pair)).d(), g.pair.d());
  LiePair aff = matched_sum(aff2_bialgebra());
  EXPECT_EQ(matched_sum(decompose(aff)).d(), aff.d());
  // span(f) is a subalgebra, so 𝔰𝔩₂ = 𝔤 ⋈ span(f)
  EXPECT_EQ(matched_sum(decompose(sl2_pair())).d(), sl2_pair().d());
  EXPECT_THROW(decompose(heisenberg_pair()), NotASubalgebra);
}

TEST(MatchedPair, InjectedViolationBreaksJacobi) {
  std::mt19937_64 rng(17);
  MatchedPairData base = gl_un_tn(2).data;
  int broken = 0;
  for (int trial = 0; trial < 10; ++trial) {
    MatchedPairData m = base;
    int x = rng() % m.nabla.size(), r = rng() % 4, c = rng() % 4;
    m.nabla[x](r, c) += 1;
    CheckReport rep = check_matched_pair(m);
    EXPECT_FALSE(rep.ok());
    EXPECT_THROW(matched_sum(m), MatchedPairAxiomsFail);
    if (!validate_lie_algebra(matched_bracket(m)).ok()) ++broken;
  }
  EXPECT_EQ(broken, 10);
}

TEST(GAlgebra, Examples) {
  EXPECT_TRUE(check_g_algebra(LieAlgebra(2), dual_numbers(2)).ok());
  EXPECT_TRUE(check_g_algebra(LieAlgebra(2), unit_algebra(2)).ok());
  // ε ↦ ε is the Euler derivation of ℚ[ε]/(ε²)
  GAlgebra euler = dual_numbers(1);
  euler.module.action[0](1, 1) = 1;
  EXPECT_TRUE(check_g_algebra(LieAlgebra(1), euler).ok());
  // ε ↦ 1 is not: a·(ε·ε) − (a·ε)·ε − ε·(a·ε) = −2ε
  GAlgebra bad = dual_numbers(1);
  bad.module.action[0](0, 1) = 1;
  CheckReport r = check_g_algebra(LieAlgebra(1), bad);
  bool found = false;
  for (const auto& v : r.violations) {
    if (v.identity == "derivation" && v.indices == std::vector<int>{0, 1, 1}) {
      EXPECT_EQ(v.residual, (Vector{0, -2}));
      found = true;
    }
  }
  EXPECT_TRUE(found);
}
