#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "liepair/multilinear.hpp"

using namespace liepair;

namespace {

// Brute force: every permutation of n letters, filtered by the two
// monotonicity conditions on the blocks.
std::vector<Permutation> shuffles_by_filter(int p, int q) {
  Permutation perm(p + q);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Permutation> out;
  do {
    bool ok = std::is_sorted(perm.begin(), perm.begin() + p) && std::is_sorted(perm.begin() + p, perm.end());
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Bubble sort the symbols back into order, flipping the sign whenever two odd
// symbols pass each other.
int koszul_by_bubble(Permutation seq, const std::vector<int>& degrees) {
  int sign = 1;
  for (std::size_t pass = 0; pass < seq.size(); ++pass) {
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      if (seq[i] > seq[i + 1]) {
        if (degrees[seq[i]] % 2 && degrees[seq[i + 1]] % 2) sign = -sign;
        std::swap(seq[i], seq[i + 1]);
      }
    }
  }
  return sign;
}

ExteriorForm random_form(std::mt19937_64& rng, int dim, int degree) {
  ExteriorForm f = ExteriorForm::zero(dim, degree);
  for (auto& c : f.coeffs) c = static_cast<long>(rng() % 7) - 3;
  return f;
}

}  // namespace

TEST(Shuffles, SmallCases) {
  auto s0 = enumerate_shuffles(0, 3);
  ASSERT_EQ(s0.size(), 1u);
  EXPECT_EQ(s0[0], (Permutation{0, 1, 2}));
  auto s11 = enumerate_shuffles(1, 1);
  ASSERT_EQ(s11.size(), 2u);
  EXPECT_EQ(s11[0], (Permutation{0, 1}));
  EXPECT_EQ(s11[1], (Permutation{1, 0}));
  EXPECT_EQ(enumerate_shuffles(2, 2), shuffles_by_filter(2, 2));
  EXPECT_EQ(enumerate_shuffles(2, 2).size(), 6u);
}

TEST(Shuffles, CountAndFilterAgree) {
  for (int p = 0; p <= 8; ++p) {
    for (int q = 0; p + q <= 8; ++q) {
      auto s = enumerate_shuffles(p, q);
      EXPECT_EQ(s.size(), binomial(p + q, p));
      if (p + q <= 7) EXPECT_EQ(s, shuffles_by_filter(p, q));
    }
  }
}

TEST(Koszul, Examples) {
  EXPECT_EQ(koszul_sign({0, 1, 2}, {1, 3, 5}), 1);
  EXPECT_EQ(koszul_sign({1, 0}, {1, 1}), -1);
  EXPECT_EQ(koszul_sign({1, 0}, {1, 2}), 1);
}

TEST(Koszul, MatchesBubbleOracleAndIsMultiplicative) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    Permutation s(n), t(n);
    std::iota(s.begin(), s.end(), 0);
    std::iota(t.begin(), t.end(), 0);
    std::shuffle(s.begin(), s.end(), rng);
    std::shuffle(t.begin(), t.end(), rng);
    std::vector<int> deg(n);
    for (auto& d : deg) d = static_cast<int>(rng() % 4);
    EXPECT_EQ(koszul_sign(s, deg), koszul_by_bubble(s, deg));
    // Reordering by s and then by t: the second step sees the degrees as
    // they sit after the first.
    std::vector<int> moved(n);
    for (int p = 0; p < n; ++p) moved[p] = deg[s[p]];
    EXPECT_EQ(koszul_sign(compose(s, t), deg), koszul_sign(s, deg) * koszul_sign(t, moved));
    std::vector<int> odd(n, 1);
    EXPECT_EQ(koszul_sign(s, odd), permutation_sign(s));
  }
}

TEST(Wedge, Examples) {
  auto e1 = ExteriorForm::basis(3, 0b001), e2 = ExteriorForm::basis(3, 0b010);
  EXPECT_EQ(wedge(e1, e2), ExteriorForm::basis(3, 0b011));
  EXPECT_EQ(wedge(e2, e1), GaussScalar(-1) * ExteriorForm::basis(3, 0b011));
  EXPECT_EQ(wedge(e1 + e2, e2), ExteriorForm::basis(3, 0b011));
}

TEST(Wedge, AssociativeAndGradedCommutative) {
  std::mt19937_64 rng(9);
  for (int dim = 1; dim <= 4; ++dim) {
    for (int p = 0; p <= dim; ++p) {
      for (int q = 0; p + q <= dim; ++q) {
        for (int r = 0; p + q + r <= dim; ++r) {
          auto a = random_form(rng, dim, p), b = random_form(rng, dim, q), c = random_form(rng, dim, r);
          EXPECT_EQ(wedge(wedge(a, b), c), wedge(a, wedge(b, c)));
          GaussScalar s = (p * q) % 2 ? -1 : 1;
          EXPECT_EQ(wedge(a, b), s * wedge(b, a));
        }
      }
    }
  }
}

TEST(ExteriorIndex, LexOrderAndMergeSign) {
  const auto& ext = exterior_index(4);
  EXPECT_EQ(ext.size(2), 6u);
  std::vector<Mask> expected{0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100};
  EXPECT_EQ(ext.masks(2), expected);
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(ext.position(expected[i]), i);
  EXPECT_EQ(merge_sign(0b010, 0b001), -1);
  EXPECT_EQ(merge_sign(0b001, 0b110), 1);
  EXPECT_EQ(merge_sign(0b100, 0b011), 1);
  EXPECT_EQ(merge_sign(0b011, 0b010), 0);
  auto s = sort_indices({2, 0, 1});
  EXPECT_EQ(s.sign, 1);
  EXPECT_EQ(s.mask, 0b111u);
  EXPECT_EQ(sort_indices({1, 0}).sign, -1);
  EXPECT_EQ(sort_indices({1, 1}).sign, 0);
}

TEST(TensorIndex, EncodeDecode) {
  TensorIndex t(3, 3);
  EXPECT_EQ(t.size(), 27u);
  EXPECT_EQ(t.encode({1, 0, 2}), 11u);
  EXPECT_EQ(t.decode(11), (std::vector<int>{1, 0, 2}));
  TensorIndex empty(4, 0);
  EXPECT_EQ(empty.size(), 1u);
}
