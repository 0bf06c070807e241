#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "liepair/atiyah.hpp"
#include "liepair/zoo.hpp"

using namespace liepair;

namespace {

constexpr Mask H = 0b01, E = 0b10;

// Leibniz determinant over the commutative even part of Λ𝔤*⊗ΛB*.
FormAlgebraElement leibniz_det(const FormAlgebraElement& x) {
  const int d = x.dim_e();
  FormAlgebraElement det(x.dim_g(), x.dim_b(), 1);
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    FormAlgebraElement term = FormAlgebraElement::one(x.dim_g(), x.dim_b(), 1);
    for (int i = 0; i < d; ++i) term = term * x.entry(perm[i], i);
    det += term.scaled(permutation_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

std::vector<Fixture> fixtures() {
  std::vector<Fixture> out{sl2_fixture(), zoo_fixture("heisenberg"), zoo_fixture("aff2_bialgebra"),
                           zoo_fixture("u2t2")};
  for (std::uint64_t seed = 1; seed <= 5; ++seed) out.push_back(zoo_fixture("random", seed));
  return out;
}

}  // namespace

TEST(ExtendByZero, Examples) {
  LiePair ab = make_pair(LieAlgebra(3), 1);
  Connection c = extend_by_zero(ab, quotient_module(ab));
  for (const auto& m : c.nabla) EXPECT_TRUE(m.is_zero());

  Connection s = extend_by_zero(sl2_pair(), quotient_module(sl2_pair()));
  EXPECT_EQ(s.nabla[0], Matrix(1, 1, {-2}));
  EXPECT_EQ(s.nabla[1], Matrix(1, 1, {0}));
  EXPECT_EQ(s.nabla[2], Matrix(1, 1, {0}));
  EXPECT_TRUE(check_extension(s).ok());
}

TEST(Curvature, Sl2) {
  Connection s = extend_by_zero(sl2_pair(), quotient_module(sl2_pair()));
  EXPECT_TRUE(curvature(s, 0, 1).is_zero());
  EXPECT_EQ(curvature(s, 1, 2), Matrix(1, 1, {2}));
  EXPECT_EQ(curvature(s, 0, 2), Matrix(1, 1, {0}));
}

TEST(Curvature, VanishesOnSubalgebra) {
  for (const auto& f : fixtures()) {
    for (const auto& [name, mod] : f.modules) {
      Connection c = random_extension(f.pair, mod, 5);
      for (int i = 0; i < f.pair.dim_g(); ++i)
        for (int j = 0; j < f.pair.dim_g(); ++j) EXPECT_TRUE(curvature(c, i, j).is_zero()) << f.name << name;
    }
  }
}

TEST(AtiyahCocycle, Sl2) {
  Cochain a = atiyah_cocycle(extend_by_zero(sl2_pair(), quotient_module(sl2_pair())));
  EXPECT_EQ(a.at(E, 0, 0), GaussScalar(2));
  EXPECT_EQ(a.at(H, 0, 0), GaussScalar(0));
}

TEST(AtiyahCocycle, MatchedPairZeroGamma) {
  for (const MatchedPairData& m : {aff2_bialgebra(), gl_un_tn(2).data}) {
    LiePair p = matched_sum(m);
    Cochain a = atiyah_cocycle(extend_by_zero(p, quotient_module(p)));
    const int na = m.a.dim(), nb = m.b.dim();
    for (int i = 0; i < na; ++i)
      for (int b1 = 0; b1 < nb; ++b1) {
        // α(a_i; b1) b2 = ∇_{Δ_{b1} a_i} b2
        Matrix expected(nb, nb);
        for (int t = 0; t < na; ++t) expected += m.nabla[t] * m.delta[b1](t, i);
        for (int v = 0; v < nb * nb; ++v) EXPECT_EQ(a.at(Mask{1} << i, b1, v), expected.data()[v]);
      }
  }
}

TEST(AtiyahCocycle, ClosedForEveryExtension) {
  for (const auto& f : fixtures()) {
    for (const auto& [name, mod] : f.modules) {
      CEComplex cx = atiyah_complex(f.pair, mod);
      for (std::uint64_t seed = 1; seed <= 2; ++seed)
        EXPECT_TRUE(cx.is_cocycle(atiyah_cocycle(random_extension(f.pair, mod, seed)))) << f.name << name;
    }
  }
}

TEST(AtiyahClass, TrivialModuleVanishes) {
  for (const auto& f : fixtures()) {
    GModule triv = trivial_module(f.pair.dim_g(), 1);
    AtiyahClass a = atiyah_class(f.pair, triv);
    EXPECT_TRUE(a.vanishes);
    // a random extension has a nonzero cocycle that the repair removes
    AtiyahClass r = atiyah_class(random_extension(f.pair, triv, 9));
    ASSERT_TRUE(r.vanishes) << f.name;
    EXPECT_TRUE(check_compatible(*r.repaired).ok());
  }
}

TEST(AtiyahClass, Sl2DoesNotVanish) {
  Fixture f = sl2_fixture();
  AtiyahClass a = atiyah_class(f.pair, f.modules.at("B"));
  EXPECT_FALSE(a.vanishes);
  EXPECT_FALSE(a.primitive.has_value());
  EXPECT_EQ(atiyah_complex(f.pair, f.modules.at("B")).cohomology_dim(1), 1u);
}

TEST(AtiyahClass, DifferenceOfExtensionsIsExact) {
  for (const auto& f : fixtures()) {
    for (const auto& [name, mod] : f.modules) {
      Connection c1 = random_extension(f.pair, mod, 1), c2 = random_extension(f.pair, mod, 2);
      CEComplex cx = atiyah_complex(f.pair, mod);
      Cochain diff = atiyah_cocycle(c1) - atiyah_cocycle(c2);
      // φ(b) = ∇¹_{j(b)} − ∇²_{j(b)} satisfies ∂φ = α¹ − α²
      const int d = mod.dim;
      Cochain phi = cx.zero(0);
      for (int beta = 0; beta < f.pair.dim_b(); ++beta) {
        Matrix m = c1.nabla[f.pair.j(beta)] - c2.nabla[f.pair.j(beta)];
        for (int v = 0; v < d * d; ++v) phi.coeffs[beta * d * d + v] = m.data()[v];
      }
      EXPECT_EQ(cx.diff(phi), diff) << f.name << name;
      auto prim = cx.primitive(diff);
      ASSERT_TRUE(prim.has_value());
      EXPECT_EQ(cx.diff(*prim), diff);
      EXPECT_EQ(atiyah_class(c1).vanishes, atiyah_class(c2).vanishes);
    }
  }
}

TEST(AtiyahClass, VanishesIffRepairedIsCompatible) {
  for (const auto& f : fixtures()) {
    for (const auto& [name, mod] : f.modules) {
      AtiyahClass a = atiyah_class(random_extension(f.pair, mod, 3));
      EXPECT_EQ(a.vanishes, a.repaired.has_value());
      if (a.vanishes) {
        EXPECT_TRUE(check_compatible(*a.repaired).ok()) << f.name << name;
        EXPECT_TRUE(check_extension(*a.repaired).ok());
      }
    }
  }
}

TEST(ScalarClass, Examples) {
  Fixture f = sl2_fixture();
  ScalarClass c1 = scalar_class(f.pair, f.modules.at("B"), 1);
  EXPECT_EQ(c1.trace_part.at(E, 0, 0), GaussScalar(2));
  EXPECT_EQ(c1.trace_part.at(H, 0, 0), GaussScalar(0));
  EXPECT_EQ(c1.prefactor, "1/1*(i/(2*pi))^1");
  EXPECT_TRUE(scalar_class(f.pair, f.modules.at("B"), 2).trace_part.is_zero());
}

TEST(ScalarClass, AdditiveOnBlocksAndClosed) {
  Fixture f = zoo_fixture("u2t2");
  Connection c1 = random_extension(f.pair, f.modules.at("C2"), 4);
  Connection c2 = random_extension(f.pair, f.modules.at("trace"), 5);
  Connection sum = direct_sum_connection(c1, c2);
  for (int k = 1; k <= 4; ++k) {
    ScalarClass s = scalar_class(sum, k);
    EXPECT_EQ(s.trace_part, scalar_class(c1, k).trace_part + scalar_class(c2, k).trace_part);
    EXPECT_TRUE(scalar_complex(f.pair, k).is_cocycle(s.trace_part));
  }
}

TEST(Todd, ZeroCocycleGivesOne) {
  LiePair ab = make_pair(LieAlgebra(4), 2);
  ToddClass t = todd_class(ab, trivial_module(2, 3));
  EXPECT_EQ(t.element, FormAlgebraElement::one(2, 2, 1));
}

TEST(Todd, OneDimensionalModuleIsTheSeries) {
  Fixture f = zoo_fixture("u2t2");
  Connection c = random_extension(f.pair, f.modules.at("trace"), 6);
  auto alpha = FormAlgebraElement::from_atiyah(atiyah_cocycle(c), 1);
  EXPECT_EQ(todd_class(c).element, power_series(alpha, todd_series()));
}

TEST(Todd, MatchesLeibnizDeterminant) {
  Fixture f = zoo_fixture("u2t2");
  for (const std::string name : {"C2", "B"}) {
    Connection c = random_extension(f.pair, f.modules.at(name), 7);
    auto alpha = FormAlgebraElement::from_atiyah(atiyah_cocycle(c), c.module.dim);
    ToddClass t = todd_class(c);
    EXPECT_EQ(t.element, leibniz_det(power_series(alpha, todd_series()))) << name;
    EXPECT_EQ(t.components[0].coeffs, (Vector{1}));
    // not vacuous: the series reaches degree 2
    EXPECT_FALSE(t.components[1].is_zero());
    EXPECT_FALSE(t.components[2].is_zero());
  }
}

TEST(Todd, MultiplicativeOnBlocks) {
  Fixture f = zoo_fixture("u2t2");
  Connection c1 = random_extension(f.pair, f.modules.at("C2"), 8);
  Connection c2 = random_extension(f.pair, f.modules.at("trace"), 9);
  EXPECT_EQ(todd_class(direct_sum_connection(c1, c2)).element, todd_class(c1).element * todd_class(c2).element);
}
