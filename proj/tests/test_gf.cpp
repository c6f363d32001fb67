#include <gtest/gtest.h>

#include <random>
#include <set>

#include "blt/gf.hpp"

using namespace blt;
using namespace blt::gf;

TEST(Field, RejectsNonPrimeAndTwo) {
  EXPECT_THROW(Field(2), Error);
  EXPECT_THROW(Field(9), Error);
  EXPECT_THROW(Field(1), Error);
  EXPECT_THROW(Field(257), Error);
  EXPECT_NO_THROW(Field(251));
}

TEST(Field, InversesAndHalf) {
  for (unsigned q : {3u, 5u, 7u, 251u}) {
    Field f(q);
    for (unsigned a = 1; a < q; ++a) EXPECT_EQ(f.mul(Elem(a), f.inv(Elem(a))), 1);
    EXPECT_EQ(f.mul(f.half(), 2), 1);
  }
  EXPECT_EQ(Field(3).half(), 2);
  EXPECT_EQ(Field(5).reduce(-7), 3);
}

TEST(Matrix, RankKernelInverse) {
  Field f(3);
  auto m = Matrix::from_rows(f, {{1, 2, 0}, {2, 1, 0}, {0, 0, 1}}, 3);
  EXPECT_EQ(rank(m), 2);  // row 2 = 2 * row 1
  auto k = kernel(m);
  ASSERT_EQ(k.rows(), 1u);
  EXPECT_TRUE((m * k.transpose()).is_zero());
  auto id = Matrix::identity(f, 3);
  auto t = Matrix::from_rows(f, {{1, 1, 0}, {0, 1, 2}, {1, 0, 2}}, 3);  // det = 1
  EXPECT_EQ(t * inverse(t), id);
  EXPECT_THROW(inverse(m), Error);
}

TEST(Matrix, RrefIsIdempotent) {
  std::mt19937_64 rng(7);
  for (unsigned q : {3u, 5u}) {
    Field f(q);
    std::uniform_int_distribution<unsigned> d(0, q - 1);
    for (int trial = 0; trial < 200; ++trial) {
      Matrix m(f, 1 + trial % 5, 1 + (trial / 5) % 5);
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = Elem(d(rng));
      auto once = rref(m);
      auto twice = rref(once.reduced);
      EXPECT_EQ(once.reduced, twice.reduced);
      EXPECT_EQ(once.rank, twice.rank);
      EXPECT_EQ(once.rank, rank(m.transpose()));
    }
  }
}

TEST(Subspace, CanonicalEquality) {
  Field f(5);
  std::vector<Vector> a{{1, 2, 0}, {0, 1, 1}};
  std::vector<Vector> b{{1, 3, 1}, {2, 4, 0}};  // sum and double of a's rows
  EXPECT_EQ(Subspace::span(f, 3, a), Subspace::span(f, 3, b));
  EXPECT_EQ(SubspaceHash{}(Subspace::span(f, 3, a)), SubspaceHash{}(Subspace::span(f, 3, b)));
}

TEST(Subspace, GaussianBinomialExamples) {
  EXPECT_EQ(gaussian_binomial(4, 2, 3), 130u);
  EXPECT_EQ(gaussian_binomial(2, 1, 3), 4u);
  EXPECT_EQ(subspaces(Field(3), 4, 2).size(), 130u);
  EXPECT_EQ(subspaces(Field(3), 2, 1).size(), 4u);
}

TEST(Subspace, EnumerationCountsAndDistinctness) {
  for (unsigned q : {3u, 5u}) {
    Field f(q);
    for (std::size_t n = 0; n <= 5; ++n)
      for (std::size_t k = 0; k <= n; ++k) {
        if (q == 5 && n == 5 && (k == 2 || k == 3)) continue;  // 196,406 subspaces each; covered at q = 3
        auto all = subspaces(f, n, k);
        EXPECT_EQ(all.size(), gaussian_binomial(unsigned(n), unsigned(k), q)) << "n=" << n << " k=" << k << " q=" << q;
        std::set<Subspace> uniq(all.begin(), all.end());
        EXPECT_EQ(uniq.size(), all.size());
        for (const auto& s : all) EXPECT_EQ(s.dim(), k);
      }
  }
}

TEST(Subspace, ChunksPartitionTheEnumeration) {
  Field f(3);
  std::vector<Subspace> merged;
  for (std::size_t i = 0; i < 3; ++i)
    for_each_subspace(f, 4, 2, [&](const Subspace& s) { merged.push_back(s); }, Chunk{i, 3});
  std::set<Subspace> a(merged.begin(), merged.end());
  auto all = subspaces(f, 4, 2);
  EXPECT_EQ(merged.size(), all.size());
  EXPECT_EQ(a, std::set<Subspace>(all.begin(), all.end()));
}

TEST(Subspace, LatticeLaws) {
  Field f(3);
  auto lines = subspaces(f, 3, 1);
  auto planes = subspaces(f, 3, 2);
  for (const auto& a : lines)
    for (const auto& b : planes) {
      auto s = sum(a, b);
      auto i = intersect(a, b);
      EXPECT_EQ(s.dim() + i.dim(), a.dim() + b.dim());
      EXPECT_TRUE(s.contains(a));
      EXPECT_TRUE(s.contains(b));
      EXPECT_TRUE(a.contains(i));
      EXPECT_TRUE(b.contains(i));
      EXPECT_EQ(sum(a, b), sum(b, a));
      EXPECT_EQ(intersect(a, b), intersect(b, a));
      EXPECT_EQ(intersect(a, sum(a, b)), a);  // absorption
    }
  for (const auto& a : planes) EXPECT_EQ(a.annihilator().annihilator(), a);
}

TEST(Subspace, ComplementsCountAndSplit) {
  Field f(3);
  for (std::size_t k = 1; k < 4; ++k)
    for (const auto& u : subspaces(f, 4, k)) {
      std::size_t count = 0;
      for_each_complement(u, [&](const Subspace& v) {
        ++count;
        EXPECT_EQ(v.dim(), 4 - k);
        EXPECT_TRUE(sum(u, v).is_full());
      });
      std::size_t expect = 1;
      for (std::size_t i = 0; i < k * (4 - k); ++i) expect *= 3;
      EXPECT_EQ(count, expect);
    }
  EXPECT_THROW(complements(Subspace::zero(f, 3)), Error);
}

TEST(Subspace, ComplementIn) {
  Field f(5);
  for (const auto& s : subspaces(f, 4, 2)) {
    auto c = complement_in(s);
    EXPECT_EQ(c.dim(), 2u);
    EXPECT_TRUE(sum(s, c).is_full());
    EXPECT_EQ(intersect(s, c).dim(), 0u);
  }
}

TEST(EchelonAccumulator, MatchesRank) {
  Field f(3);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<unsigned> d(0, 2);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix m(f, 5, 4);
    EchelonAccumulator acc(f, 4);
    for (std::size_t r = 0; r < 5; ++r) {
      for (std::size_t c = 0; c < 4; ++c) m(r, c) = Elem(d(rng));
      acc.insert(m.row(r));
    }
    EXPECT_EQ(acc.rank(), rank(m));
  }
}
