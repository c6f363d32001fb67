#include <gtest/gtest.h>

#include <random>

#include "blt/altspace.hpp"
#include "blt/graph.hpp"

using namespace blt;
using namespace blt::alt;
using gf::Field;
using gf::Matrix;
using gf::Subspace;
using gf::Vector;

namespace {
const Field F3(3);

AltMatrixSpace of(const graph::Graph& g, Field f = F3) { return space_from_graph(g, f); }

graph::Graph two_k2() { return graph::Graph(4, {{0, 1}, {2, 3}}); }

Subspace span(std::size_t n, std::vector<Vector> v, Field f = F3) { return Subspace::span(f, n, v); }

Vector e(std::size_t n, std::size_t i) {
  Vector v(n, 0);
  v[i] = 1;
  return v;
}
}  // namespace

TEST(SpaceFromGraph, Examples) {
  auto k2 = of(graph::complete_graph(2));
  ASSERT_EQ(k2.dim(), 1u);
  EXPECT_EQ(k2.basis()[0], Matrix::from_rows(F3, {{0, 1}, {2, 0}}, 2));
  EXPECT_EQ(of(graph::path_graph(3)).dim(), 2u);
  EXPECT_EQ(of(graph::complete_graph(4)), AltMatrixSpace::full(F3, 4));
  EXPECT_EQ(of(graph::complete_graph(4)).dim(), 6u);
}

TEST(SpaceFromGraph, RejectsNonAlternating) {
  Matrix a(F3, 2, 2);
  a(0, 0) = 1;
  EXPECT_THROW(AltMatrixSpace(F3, 2, std::vector<Matrix>{a}), Error);
  Matrix b(F3, 2, 2);
  b(0, 1) = 1;
  b(1, 0) = 1;  // symmetric, not alternating
  EXPECT_THROW(AltMatrixSpace(F3, 2, std::vector<Matrix>{b}), Error);
}

TEST(Restrict, Examples) {
  auto k2 = of(graph::complete_graph(2));
  auto r = restrict(k2, span(2, {e(2, 0)}));
  EXPECT_EQ(r.ambient(), 1u);
  EXPECT_TRUE(r.is_zero());
  auto p3 = of(graph::path_graph(3));
  auto r2 = restrict(p3, span(3, {e(3, 0), e(3, 1)}));
  EXPECT_EQ(r2, k2);
  EXPECT_EQ(restrict(p3, Subspace::full(F3, 3)), p3);
  EXPECT_THROW(restrict(p3, Subspace::zero(F3, 3)), Error);
}

TEST(Decomposable, Examples) {
  EXPECT_FALSE(is_orth_decomposable(of(graph::complete_graph(2))).decomposable);
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_TRUE(is_orth_decomposable(AltMatrixSpace::zero(F3, n)).decomposable);
  auto d = is_orth_decomposable(of(two_k2()));
  ASSERT_TRUE(d.decomposable);
  ASSERT_TRUE(d.witness);
  EXPECT_EQ(d.witness->u.dim() + d.witness->v.dim(), 4u);
  EXPECT_TRUE(gf::sum(d.witness->u, d.witness->v).is_full());
  // a one-dimensional space with n > 2 always splits
  auto e12 = AltMatrixSpace(F3, 3, std::vector<Matrix>{elementary(F3, 3, 0, 1)});
  EXPECT_TRUE(is_orth_decomposable(e12).decomposable);
}

// The U + U^perp reduction agrees with the naive pair search on every space of ambient dim <= 3.
TEST(Decomposable, ReductionMatchesPairSearch) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::size_t total = n * (n - 1) / 2;
    auto full = AltMatrixSpace::full(F3, n);
    // every subspace of Λ(n, F_3): enumerate coefficient subspaces of F_3^total
    for (std::size_t k = 0; k <= total; ++k)
      for (const auto& coeffs : gf::subspaces(F3, total, k)) {
        std::vector<Matrix> gens;
        for (std::size_t r = 0; r < coeffs.dim(); ++r) {
          Matrix a(F3, n, n);
          for (std::size_t c = 0; c < total; ++c) a = a + full.basis()[c].scaled(coeffs.basis()(r, c));
          gens.push_back(a);
        }
        AltMatrixSpace a(F3, n, gens);
        const auto fast = is_orth_decomposable(a);
        if (!a.is_zero()) {
          ASSERT_EQ(fast.decomposable, is_orth_decomposable_by_pairs(a)) << "n=" << n << " k=" << k;
        }
        if (fast.witness) {
          for (const auto& m : a.basis())
            for (std::size_t i = 0; i < fast.witness->u.dim(); ++i)
              for (std::size_t j = 0; j < fast.witness->v.dim(); ++j)
                ASSERT_EQ(gf::bilinear(m, fast.witness->u.basis().row(i), fast.witness->v.basis().row(j)), 0);
        }
      }
  }
}

TEST(Kappa, Examples) {
  EXPECT_EQ(kappa_space(of(graph::complete_graph(2))).value, 1u);
  EXPECT_EQ(kappa_space(of(graph::complete_graph(4))).value, 3u);
  EXPECT_EQ(kappa_space(of(two_k2())).value, 0u);
  auto r = kappa_space(of(graph::path_graph(4)));
  EXPECT_EQ(r.value, 1u);
  EXPECT_EQ(r.w.dim(), 3u);
  EXPECT_TRUE(is_orth_decomposable(restrict(of(graph::path_graph(4)), r.w)).decomposable);
}

TEST(CutDim, Examples) {
  EXPECT_EQ(cut_dim(of(graph::complete_graph(2)), span(2, {e(2, 0)}), span(2, {e(2, 1)})), 1u);
  auto u = span(4, {e(4, 0), e(4, 1)});
  auto v = span(4, {e(4, 2), e(4, 3)});
  EXPECT_EQ(cut_dim(of(two_k2()), u, v), 0u);
  EXPECT_EQ(cut_dim(of(graph::cycle_graph(4)), u, v), 2u);
  EXPECT_THROW(cut_dim(of(graph::cycle_graph(4)), u, u), Error);
}

TEST(Lambda, Examples) {
  EXPECT_EQ(lambda_space(of(graph::complete_graph(2))).value, 1u);
  EXPECT_EQ(lambda_space(of(graph::cycle_graph(4))).value, 2u);
  EXPECT_EQ(lambda_space(of(two_k2())).value, 0u);
  EXPECT_EQ(lambda_space_oracle(of(graph::complete_graph(2))), 1u);
  EXPECT_EQ(lambda_space_oracle(AltMatrixSpace::zero(F3, 3)), 0u);
}

TEST(Lambda, WitnessIsConsistent) {
  for (auto g : {graph::cycle_graph(4), graph::complete_graph(4), graph::path_graph(5), graph::star_graph(3)}) {
    auto a = of(g);
    auto r = lambda_space(a);
    EXPECT_EQ(cut_dim(a, r.u, r.v), r.value);
    EXPECT_EQ(r.decomposable_part.dim(), a.dim() - r.value);
    EXPECT_TRUE(is_orth_decomposable(r.decomposable_part).decomposable);
    for (const auto& m : r.decomposable_part.basis()) EXPECT_TRUE(a.contains(m));
  }
}

TEST(Lambda, MatchesOracleOnRandomSpaces) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + trial % 2;
    const std::size_t m = 1 + trial % 4;
    auto a = random_space(F3, n, std::min(m, n * (n - 1) / 2), rng);
    EXPECT_EQ(lambda_space(a).value, lambda_space_oracle(a)) << "trial " << trial;
  }
}

TEST(Degree, Examples) {
  auto star = of(graph::star_graph(3));
  EXPECT_EQ(degree(star, e(4, 0)), 3u);
  EXPECT_EQ(degree(star, e(4, 2)), 1u);
  EXPECT_EQ(delta_space(star), 1u);
  EXPECT_EQ(degree(AltMatrixSpace::zero(F3, 3), e(3, 1)), 0u);
  EXPECT_THROW(degree(star, Vector(4, 0)), Error);
}

TEST(Degree, BasisVectorsMatchGraphDegree) {
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) {
      auto g = graph::graph_from_mask(n, mask);
      auto a = of(g);
      for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(degree(a, e(n, i)), g.degree(i));
    }
}

TEST(FullyConnected, Examples) {
  EXPECT_TRUE(is_fully_connected(AltMatrixSpace::full(F3, 3)));
  EXPECT_FALSE(is_fully_connected(of(graph::path_graph(3))));
  EXPECT_TRUE(is_fully_connected(field_ext_full_space(2, F3).space));
  EXPECT_EQ(kappa_space(AltMatrixSpace::full(F3, 4)).value, 3u);
}

TEST(FieldExtension, LeastIrreducibleAndRanks) {
  EXPECT_EQ(least_irreducible(2, F3), (Polynomial{1, 0, 1}));  // x^2 + 1
  EXPECT_EQ(least_irreducible(1, F3), (Polynomial{0, 1}));     // x
  auto one = field_ext_full_space(1, F3);
  EXPECT_EQ(one.space.dim(), 1u);
  EXPECT_TRUE(is_fully_connected(one.space));
  for (auto [s, q] : {std::pair<std::size_t, unsigned>{2, 3}, {3, 3}, {2, 5}}) {
    Field f(q);
    auto c = field_ext_full_space(s, f);
    EXPECT_EQ(c.space.dim(), s);
    EXPECT_TRUE(is_irreducible(c.modulus, f));
    EXPECT_TRUE(is_fully_connected(c.space));
  }
}

TEST(Separation, ConstructionAtQ3AndQ5) {
  for (unsigned q : {3u, 5u}) {
    Field f(q);
    auto inst = kappa_gt_lambda_instance(2, 2, f);
    EXPECT_EQ(inst.space.ambient(), 4u);
    EXPECT_EQ(inst.space.dim(), 4u);
    EXPECT_TRUE(is_fully_connected(inst.space));
    EXPECT_EQ(kappa_space(inst.space).value, 3u);
    EXPECT_LE(lambda_space(inst.space).value, 2u);
    auto d = is_orth_decomposable(inst.block_part);
    EXPECT_TRUE(d.decomposable);
    EXPECT_EQ(cut_dim(inst.space, span(4, {e(4, 0), e(4, 1)}, f), span(4, {e(4, 2), e(4, 3)}, f)), inst.d);
  }
  EXPECT_THROW(kappa_gt_lambda_instance(1, 1, F3), Error);
  EXPECT_THROW(kappa_gt_lambda_instance(2, 3, F3), Error);
}

TEST(Isometry, InvarianceOfParameters) {
  for (auto g : {graph::cycle_graph(4), graph::path_graph(4), graph::star_graph(3), graph::complete_graph(3)}) {
    auto a = of(g);
    const auto k = kappa_space(a).value, l = lambda_space(a).value, d = delta_space(a);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      auto b = random_isometry_image(a, seed);
      EXPECT_EQ(b.dim(), a.dim());
      EXPECT_EQ(kappa_space(b).value, k);
      EXPECT_EQ(lambda_space(b).value, l);
      EXPECT_EQ(delta_space(b), d);
    }
  }
  auto a = of(graph::cycle_graph(4));
  EXPECT_EQ(isometry_image(a, Matrix::identity(F3, 4)), a);
}

TEST(Guards, RefuseLargeInstances) {
  auto k7 = of(graph::complete_graph(7));
  EXPECT_THROW(kappa_space(k7), GuardExceeded);
  EXPECT_THROW(lambda_space(k7), GuardExceeded);
  std::mt19937_64 rng(1);
  EXPECT_THROW(lambda_space_oracle(random_space(F3, 5, 7, rng)), GuardExceeded);
}

// decomposable <=> kappa = 0 <=> lambda = 0, over all graphs on <= 4 vertices and random spaces
TEST(Equivalences, DecomposableIffZeroParameters) {
  std::vector<AltMatrixSpace> cases;
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) cases.push_back(of(graph::graph_from_mask(n, mask)));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) cases.push_back(random_space(Field(5), 4, 1 + i % 3, rng));
  for (const auto& a : cases) {
    const bool dec = is_orth_decomposable(a).decomposable;
    EXPECT_EQ(dec, kappa_space(a).value == 0);
    EXPECT_EQ(dec, lambda_space(a).value == 0);
  }
}
