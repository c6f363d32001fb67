/**
 * @file altspace.hpp
 * @brief Alternating matrix spaces and their connectivity parameters.
 *
 * An `AltMatrixSpace` is a subspace of the n x n alternating matrices over F_q. The three
 * parameters computed here are
 *
 *  - kappa: the least c such that restricting the space to some (n-c)-dimensional
 *    subspace W of F_q^n gives an orthogonally decomposable space;
 *  - lambda: the least c such that some codimension-c subspace of the space is orthogonally
 *    decomposable, computed as the minimum cut dimension over all splittings U ⊕ V of F_q^n;
 *  - delta: the least dimension of {A v : A in space} over nonzero v.
 *
 * All searches are exhaustive and deterministic. They visit subspaces in the canonical
 * order of `gf::for_each_subspace`, so witnesses are reproducible.
 *
 * Decomposability conventions: the zero space is decomposable in every ambient dimension
 * (including n = 1, where no nontrivial splitting exists). A one-dimensional space with
 * n > 2 is always decomposable; the search finds such splittings on its own.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "blt/error.hpp"
#include "blt/gf.hpp"
#include "blt/graph.hpp"

namespace blt::alt {

using gf::Elem;
using gf::Field;
using gf::Matrix;
using gf::Subspace;
using gf::Vector;

inline bool is_alternating(const Matrix& a) {
  if (a.rows() != a.cols()) return false;
  const Field f = a.field();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (a(i, i) != 0) return false;
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (a(j, i) != f.neg(a(i, j))) return false;
  }
  return true;
}

/// e_i e_j^t - e_j e_i^t
inline Matrix elementary(Field f, std::size_t n, std::size_t i, std::size_t j) {
  Matrix a(f, n, n);
  a(i, j) = 1;
  a(j, i) = f.neg(1);
  return a;
}

namespace detail {

/// Canonical basis of span(mats): RREF of the stacked row-major vectorizations.
inline std::vector<Matrix> canonical_basis(Field f, std::size_t rows, std::size_t cols, std::span<const Matrix> mats) {
  Matrix stacked(f, mats.size(), rows * cols);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (mats[i].rows() != rows || mats[i].cols() != cols) throw Error("matrix shape mismatch in span");
    gf::require_same_field(f, mats[i].field());
    std::copy(mats[i].data().begin(), mats[i].data().end(), stacked.row(i).begin());
  }
  auto e = gf::rref(std::move(stacked));
  std::vector<Matrix> basis;
  for (std::size_t r = 0; r < e.rank; ++r) {
    Matrix m(f, rows, cols);
    for (std::size_t k = 0; k < rows * cols; ++k) m(k / cols, k % cols) = e.reduced(r, k);
    basis.push_back(std::move(m));
  }
  return basis;
}

}  // namespace detail

class AltMatrixSpace {
 public:
  /// Span of `generators`, which must be alternating n x n matrices (dependence allowed).
  AltMatrixSpace(Field f, std::size_t n, std::span<const Matrix> generators) : field_(f), n_(n) {
    if (n == 0) throw Error("alternating matrix space needs n >= 1");
    for (const auto& g : generators)
      if (!is_alternating(g) || g.rows() != n) throw Error("generator is not an alternating " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    basis_ = detail::canonical_basis(f, n, n, generators);
  }
  AltMatrixSpace(Field f, std::size_t n, const std::vector<Matrix>& generators)
      : AltMatrixSpace(f, n, std::span<const Matrix>(generators)) {}

  static AltMatrixSpace zero(Field f, std::size_t n) { return AltMatrixSpace(f, n, std::vector<Matrix>{}); }
  /// The full space Λ(n, F_q).
  static AltMatrixSpace full(Field f, std::size_t n) {
    std::vector<Matrix> g;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) g.push_back(elementary(f, n, i, j));
    return AltMatrixSpace(f, n, g);
  }

  const Field& field() const noexcept { return field_; }
  std::size_t ambient() const noexcept { return n_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  bool is_zero() const noexcept { return basis_.empty(); }
  const std::vector<Matrix>& basis() const noexcept { return basis_; }

  bool contains(const Matrix& a) const {
    std::vector<Matrix> g = basis_;
    g.push_back(a);
    return detail::canonical_basis(field_, n_, n_, g).size() == dim();
  }

  friend bool operator==(const AltMatrixSpace& a, const AltMatrixSpace& b) noexcept {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.basis_ == b.basis_;
  }

 private:
  Field field_;
  std::size_t n_;
  std::vector<Matrix> basis_;
};

/// A subspace of the s x t matrices (not necessarily alternating), canonical basis.
class GeneralMatrixSpace {
 public:
  GeneralMatrixSpace(Field f, std::size_t rows, std::size_t cols, std::span<const Matrix> generators)
      : field_(f), rows_(rows), cols_(cols), basis_(detail::canonical_basis(f, rows, cols, generators)) {}
  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Matrix>& basis() const noexcept { return basis_; }

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Matrix> basis_;
};

/// A nontrivial splitting F^n = U ⊕ V with u^t A v = 0 for every A in the space.
struct OrthWitness {
  Subspace u;
  Subspace v;
};

struct Decomposition {
  bool decomposable = false;
  std::optional<OrthWitness> witness;  ///< absent for the n <= 1 convention
};

/// Size limits for the exhaustive solvers. `force` lifts them.
struct SearchOptions {
  std::size_t max_ambient = 6;
  std::size_t max_dim = 8;
  bool force = false;
};

inline void check_guard(const SearchOptions& opt, std::size_t n, std::size_t m, const char* what) {
  if (opt.force) return;
  if (n > opt.max_ambient || m > opt.max_dim)
    throw GuardExceeded(std::string(what) + ": n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                        " exceeds the search guard (n <= " + std::to_string(opt.max_ambient) +
                        ", m <= " + std::to_string(opt.max_dim) + "); pass --force to lift it");
}

/// Rows u^t A for every basis row u of `rows_of` and every generator A.
inline Matrix left_images(std::span<const Matrix> gens, const Matrix& rows_of) {
  const std::size_t n = rows_of.cols();
  Matrix out(rows_of.field(), rows_of.rows() * gens.size(), n);
  const Field f = rows_of.field();
  std::size_t r = 0;
  for (const auto& a : gens)
    for (std::size_t i = 0; i < rows_of.rows(); ++i, ++r)
      for (std::size_t c = 0; c < n; ++c) {
        unsigned acc = 0;
        for (std::size_t t = 0; t < n; ++t) acc += unsigned(rows_of(i, t)) * a(t, c);
        out(r, c) = f.reduce(acc);
      }
  return out;
}

/// {w : u^t A w = 0 for all u in U, A in gens}
inline Subspace orthogonal_complement(std::span<const Matrix> gens, const Subspace& u) {
  if (gens.empty() || u.is_zero()) return Subspace::full(u.field(), u.ambient());
  return Subspace::span(gf::kernel(left_images(gens, u.basis())));
}

/**
 * Decomposability of span(gens) ≤ Λ(d, F_q).
 *
 * A splitting U ⊕ V exists iff some U with 0 < dim U <= d/2 satisfies U + U^⊥ = F^d; V is
 * then any complement of U chosen inside U^⊥. Swapping U and V shows the dimension bound
 * loses nothing.
 */
inline Decomposition decompose_generators(Field f, std::size_t d, std::span<const Matrix> gens) {
  if (d <= 1) return {true, std::nullopt};
  for (const Subspace* u : gf::half_lattice(f, d)) {
    const Subspace perp = orthogonal_complement(gens, *u);
    if (u->dim() + perp.dim() < d) continue;
    gf::EchelonAccumulator acc(f, d);
    for (std::size_t r = 0; r < u->dim(); ++r) acc.insert(u->basis().row(r));
    std::vector<Vector> chosen;
    for (std::size_t r = 0; r < perp.dim(); ++r)
      if (acc.insert(perp.basis().row(r))) chosen.push_back(perp.basis().row_vector(r));
    if (acc.rank() == d) return {true, OrthWitness{*u, Subspace::span(f, d, chosen)}};
  }
  return {false, std::nullopt};
}

inline Decomposition is_orth_decomposable(const AltMatrixSpace& a) {
  return decompose_generators(a.field(), a.ambient(), a.basis());
}

/// Literal splitting test: every (U, V) pair with U ⊕ V = F^d. Validation only.
inline bool is_orth_decomposable_by_pairs(const AltMatrixSpace& a) {
  const std::size_t d = a.ambient();
  if (d <= 1) return true;
  const Field f = a.field();
  for (std::size_t k = 1; k < d; ++k)
    for (const auto& u : gf::cached_subspaces(f, d, k)) {
      bool found = false;
      gf::for_each_complement_basis(u, [&](const Matrix& v) {
        for (const auto& m : a.basis())
          for (std::size_t i = 0; i < u.dim(); ++i)
            for (std::size_t j = 0; j < v.rows(); ++j)
              if (gf::bilinear(m, u.basis().row(i), v.row(j)) != 0) return true;
        found = true;
        return false;
      });
      if (found) return true;
    }
  return false;
}

inline AltMatrixSpace space_from_graph(const graph::Graph& g, Field f) {
  std::vector<Matrix> gens;
  for (auto [i, j] : g.edges()) gens.push_back(elementary(f, g.vertex_count(), i, j));
  return AltMatrixSpace(f, g.vertex_count(), gens);
}

/// T A T^t for each generator, where the rows of `t` span W (T^t A T in column convention).
inline std::vector<Matrix> restrict_generators(std::span<const Matrix> gens, const Matrix& t) {
  std::vector<Matrix> out;
  out.reserve(gens.size());
  const Matrix tt = t.transpose();
  for (const auto& a : gens) out.push_back(t * a * tt);
  return out;
}

/// The restriction to W via its canonical basis, as a space in Λ(dim W, F_q).
inline AltMatrixSpace restrict(const AltMatrixSpace& a, const Subspace& w) {
  if (w.ambient() != a.ambient()) throw Error("restrict: subspace lives in the wrong ambient space");
  if (w.dim() == 0) throw Error("restrict: subspace must be nonzero");
  return AltMatrixSpace(a.field(), w.dim(), restrict_generators(a.basis(), w.basis()));
}

/// T^t A T for an invertible T.
inline AltMatrixSpace isometry_image(const AltMatrixSpace& a, const Matrix& t) {
  if (t.rows() != a.ambient() || gf::rank(t) != a.ambient()) throw Error("isometry needs an invertible n x n matrix");
  return AltMatrixSpace(a.field(), a.ambient(), restrict_generators(a.basis(), t.transpose()));
}

inline AltMatrixSpace random_isometry_image(const AltMatrixSpace& a, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return isometry_image(a, gf::random_invertible(a.field(), a.ambient(), rng));
}

/// Span of random alternating matrices, grown until it has dimension m.
template <class Rng>
AltMatrixSpace random_space(Field f, std::size_t n, std::size_t m, Rng& rng) {
  if (m > n * (n - 1) / 2) throw Error("requested dimension exceeds dim Λ(n)");
  std::uniform_int_distribution<unsigned> dist(0, f.q() - 1);
  std::vector<Matrix> gens;
  while (AltMatrixSpace(f, n, gens).dim() < m) {
    Matrix a(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        a(i, j) = Elem(dist(rng));
        a(j, i) = f.neg(a(i, j));
      }
    auto trial = gens;
    trial.push_back(a);
    if (AltMatrixSpace(f, n, trial).dim() > gens.size()) gens = std::move(trial);
  }
  return AltMatrixSpace(f, n, gens);
}

/// Lifts a vector of W-coordinates to F^n: x ↦ x^t T.
inline Subspace lift(const Subspace& inner, const Matrix& t) {
  if (inner.dim() == 0) return Subspace::zero(t.field(), t.cols());
  return Subspace::span(inner.basis() * t);
}

struct KappaResult {
  std::size_t value = 0;
  Subspace w;                          ///< (n - value)-dimensional subspace with decomposable restriction
  std::optional<OrthWitness> split;    ///< the splitting of W, lifted to F^n; absent when dim W = 1
};

inline KappaResult kappa_space(const AltMatrixSpace& a, const SearchOptions& opt = {}) {
  check_guard(opt, a.ambient(), a.dim(), "kappa");
  const Field f = a.field();
  const std::size_t n = a.ambient();
  for (std::size_t c = 0; c < n; ++c) {
    for (const auto& w : gf::cached_subspaces(f, n, n - c)) {
      const auto gens = restrict_generators(a.basis(), w.basis());
      auto dec = decompose_generators(f, n - c, gens);
      if (!dec.decomposable) continue;
      KappaResult res{c, w, std::nullopt};
      if (dec.witness) res.split = OrthWitness{lift(dec.witness->u, w.basis()), lift(dec.witness->v, w.basis())};
      return res;
    }
  }
  throw Error("kappa search exhausted");  // dim W = 1 always decomposes
}

namespace detail {

inline void require_splitting(const Subspace& u, const Subspace& v, std::size_t n) {
  if (u.ambient() != n || v.ambient() != n) throw Error("cut: subspaces live in the wrong ambient space");
  if (u.is_zero() || v.is_zero()) throw Error("cut: U and V must both be nontrivial");
  if (u.dim() + v.dim() != n || gf::sum(u, v).dim() != n) throw Error("cut: U ⊕ V is not a direct sum decomposition of F^n");
}

/// Vectorized blocks (u_a^t A v_b) for each generator, one row per generator.
inline Matrix cut_vectors(std::span<const Matrix> gens, const Matrix& ub, const Matrix& vb) {
  const Field f = ub.field();
  Matrix out(f, gens.size(), ub.rows() * vb.rows());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t a = 0; a < ub.rows(); ++a)
      for (std::size_t b = 0; b < vb.rows(); ++b) out(i, a * vb.rows() + b) = gf::bilinear(gens[i], ub.row(a), vb.row(b));
  return out;
}

}  // namespace detail

/// The cut space {T_1^t A T_2 : A in space} as a subspace of the dim U x dim V matrices.
inline GeneralMatrixSpace cut_space(const AltMatrixSpace& a, const Subspace& u, const Subspace& v) {
  detail::require_splitting(u, v, a.ambient());
  const auto vecs = detail::cut_vectors(a.basis(), u.basis(), v.basis());
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < vecs.rows(); ++i) {
    Matrix b(a.field(), u.dim(), v.dim());
    std::copy(vecs.row(i).begin(), vecs.row(i).end(), b.row(0).begin());
    blocks.push_back(std::move(b));
  }
  return GeneralMatrixSpace(a.field(), u.dim(), v.dim(), blocks);
}

inline std::size_t cut_dim(const AltMatrixSpace& a, const Subspace& u, const Subspace& v) {
  detail::require_splitting(u, v, a.ambient());
  return gf::rank(detail::cut_vectors(a.basis(), u.basis(), v.basis()));
}

struct LambdaResult {
  std::size_t value = 0;
  Subspace u;
  Subspace v;
  AltMatrixSpace decomposable_part;  ///< {A : cut image zero}, dimension m - value, split by (U, V)
};

/**
 * lambda as the minimum cut dimension over all nontrivial U ⊕ V = F^n.
 *
 * U runs over dimensions 1..n/2 in canonical order and V over all complements of U. For a
 * fixed U with basis u_a and non-pivot columns j, the complement with coefficient matrix M
 * has basis v_j = e_j + sum_a M[j][a] u_a, so every cut block is an affine function of M:
 *   u_a^t A v_j = (u_a^t A)_j + sum_b M[j][b] (u_a^t A u_b).
 * Rank accumulation stops once it reaches the best value found so far; the first pair in
 * enumeration order attaining the minimum is the witness.
 */
inline LambdaResult lambda_space(const AltMatrixSpace& a, const SearchOptions& opt = {}) {
  const std::size_t n = a.ambient(), m = a.dim();
  if (n < 2) throw Error("lambda needs n >= 2");
  check_guard(opt, n, m, "lambda");
  const Field f = a.field();
  const unsigned q = f.q();

  std::size_t best = m + 1;
  const Subspace* best_u = nullptr;
  std::vector<Elem> best_coeff;

  std::vector<Elem> block;
  gf::EchelonAccumulator acc(f, 1);
  for (const Subspace* up : gf::half_lattice(f, n)) {
    const Subspace& u = *up;
    const std::size_t k = u.dim(), rest = n - k;
    std::vector<std::size_t> free_cols;
    {
      std::vector<bool> is_piv(n, false);
      for (auto p : u.pivots()) is_piv[p] = true;
      for (std::size_t c = 0; c < n; ++c)
        if (!is_piv[c]) free_cols.push_back(c);
    }
    // per generator: R[a][j] = (u_a^t A)_{free_j}, G[a][b] = u_a^t A u_b
    const Matrix left = left_images(a.basis(), u.basis());  // row i*k + a = u_a^t A_i
    std::vector<Elem> r_blocks(m * k * rest), g_blocks(m * k * k);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t x = 0; x < k; ++x) {
        auto row = left.row(i * k + x);
        for (std::size_t j = 0; j < rest; ++j) r_blocks[(i * k + x) * rest + j] = row[free_cols[j]];
        for (std::size_t y = 0; y < k; ++y) g_blocks[(i * k + x) * k + y] = gf::dot(f, row, u.basis().row(y));
      }
    acc = gf::EchelonAccumulator(f, k * rest);
    block.assign(k * rest, 0);
    std::vector<Elem> coeff(rest * k, 0);
    while (true) {
      acc.clear();
      for (std::size_t i = 0; i < m && acc.rank() < best; ++i) {
        for (std::size_t x = 0; x < k; ++x)
          for (std::size_t j = 0; j < rest; ++j) {
            unsigned val = r_blocks[(i * k + x) * rest + j];
            for (std::size_t y = 0; y < k; ++y) val += unsigned(coeff[j * k + y]) * g_blocks[(i * k + x) * k + y];
            block[x * rest + j] = Elem(val % q);
          }
        acc.insert(block);
      }
      if (acc.rank() < best) {
        best = acc.rank();
        best_u = up;
        best_coeff = coeff;
        if (best == 0) break;
      }
      std::size_t t = coeff.size();
      while (t > 0) {
        if (++coeff[t - 1] < q) break;
        coeff[t - 1] = 0;
        --t;
      }
      if (t == 0) break;
    }
    if (best == 0) break;
  }

  // rebuild V from the recorded coefficient matrix
  const Subspace& u = *best_u;
  const std::size_t k = u.dim(), rest = n - k;
  std::vector<std::size_t> free_cols;
  {
    std::vector<bool> is_piv(n, false);
    for (auto p : u.pivots()) is_piv[p] = true;
    for (std::size_t c = 0; c < n; ++c)
      if (!is_piv[c]) free_cols.push_back(c);
  }
  Matrix vb(f, rest, n);
  for (std::size_t j = 0; j < rest; ++j) {
    vb(j, free_cols[j]) = 1;
    for (std::size_t x = 0; x < k; ++x)
      for (std::size_t c = 0; c < n; ++c) vb(j, c) = f.add(vb(j, c), f.mul(best_coeff[j * k + x], u.basis()(x, c)));
  }
  const Subspace v = Subspace::span(vb);

  // A' = {sum c_i A_i : sum c_i cut(A_i) = 0}
  const Matrix cuts = detail::cut_vectors(a.basis(), u.basis(), v.basis());
  const Matrix coeffs = gf::kernel(cuts.transpose());
  std::vector<Matrix> part;
  for (std::size_t r = 0; r < coeffs.rows(); ++r) {
    Matrix s(f, n, n);
    for (std::size_t i = 0; i < m; ++i)
      if (coeffs(r, i)) s = s + a.basis()[i].scaled(coeffs(r, i));
    part.push_back(std::move(s));
  }
  return {best, u, v, AltMatrixSpace(f, n, part)};
}

/// lambda straight from its definition: the largest decomposable subspace A' ≤ A.
inline std::size_t lambda_space_oracle(const AltMatrixSpace& a, std::size_t max_dim = 6) {
  const std::size_t m = a.dim();
  if (m > max_dim) throw GuardExceeded("lambda oracle is limited to dim <= " + std::to_string(max_dim));
  const Field f = a.field();
  for (std::size_t c = 0; c <= m; ++c) {
    bool found = false;
    gf::for_each_subspace(f, m, m - c, [&](const Subspace& s) {
      std::vector<Matrix> gens;
      for (std::size_t r = 0; r < s.dim(); ++r) {
        Matrix g(f, a.ambient(), a.ambient());
        for (std::size_t i = 0; i < m; ++i)
          if (s.basis()(r, i)) g = g + a.basis()[i].scaled(s.basis()(r, i));
        gens.push_back(std::move(g));
      }
      if (decompose_generators(f, a.ambient(), gens).decomposable) {
        found = true;
        return false;
      }
      return true;
    });
    if (found) return c;
  }
  return m;  // the zero subspace always decomposes
}

/// dim {A v : A in space}
inline std::size_t degree(const AltMatrixSpace& a, std::span<const Elem> v) {
  if (v.size() != a.ambient()) throw Error("degree: vector length does not match n");
  if (std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; })) throw Error("degree: zero vector");
  if (a.is_zero()) return 0;
  Matrix images(a.field(), a.dim(), a.ambient());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    auto img = gf::apply(a.basis()[i], v);
    std::copy(img.begin(), img.end(), images.row(i).begin());
  }
  return gf::rank(std::move(images));
}

/// Minimum degree over nonzero vectors (one representative per line).
inline std::size_t delta_space(const AltMatrixSpace& a) {
  std::size_t best = a.ambient();
  for (const auto& line : gf::cached_subspaces(a.field(), a.ambient(), 1)) {
    best = std::min(best, degree(a, line.basis().row(0)));
    if (best == 0) break;
  }
  return best;
}

/// Every pair of independent vectors is paired nontrivially by some matrix in the space.
inline bool is_fully_connected(const AltMatrixSpace& a) {
  const auto& lines = gf::cached_subspaces(a.field(), a.ambient(), 1);
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      bool seen = false;
      for (const auto& m : a.basis())
        if (gf::bilinear(m, lines[i].basis().row(0), lines[j].basis().row(0)) != 0) {
          seen = true;
          break;
        }
      if (!seen) return false;
    }
  return true;
}

/// Every nonzero u in F^s and v in F^t are paired nontrivially by some matrix.
inline bool is_fully_connected(const GeneralMatrixSpace& b) {
  const auto& left = gf::cached_subspaces(b.field(), b.rows(), 1);
  const auto& right = gf::cached_subspaces(b.field(), b.cols(), 1);
  for (const auto& u : left)
    for (const auto& v : right) {
      bool seen = false;
      for (const auto& m : b.basis())
        if (gf::bilinear(m, u.basis().row(0), v.basis().row(0)) != 0) {
          seen = true;
          break;
        }
      if (!seen) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Polynomials over F_q, coefficient vectors low degree first.

using Polynomial = std::vector<Elem>;

namespace detail {

inline void trim(Polynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Polynomial poly_mod(Polynomial a, const Polynomial& b, const Field& f) {
  trim(a);
  const Elem lead_inv = f.inv(b.back());
  while (a.size() >= b.size()) {
    const Elem c = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
    trim(a);
  }
  return a;
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-q digits of `code`.
inline Polynomial monic_from_code(std::size_t deg, std::uint64_t code, unsigned q) {
  Polynomial p(deg + 1, 0);
  for (std::size_t i = 0; i < deg; ++i, code /= q) p[i] = Elem(code % q);
  p[deg] = 1;
  return p;
}

inline std::uint64_t ipow(unsigned q, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= q;
  return r;
}

}  // namespace detail

/// Trial division by every monic polynomial of degree 1..deg/2.
inline bool is_irreducible(const Polynomial& p, const Field& f) {
  Polynomial a = p;
  detail::trim(a);
  if (a.size() < 2) return false;
  const std::size_t deg = a.size() - 1;
  for (std::size_t d = 1; 2 * d <= deg; ++d)
    for (std::uint64_t code = 0; code < detail::ipow(f.q(), d); ++code)
      if (detail::poly_mod(a, detail::monic_from_code(d, code, f.q()), f).empty()) return false;
  return true;
}

/// The least monic irreducible polynomial of degree s, ordered by (c_{s-1}, ..., c_0).
inline Polynomial least_irreducible(std::size_t s, const Field& f) {
  if (s == 0) throw Error("degree must be at least 1");
  for (std::uint64_t code = 0; code < detail::ipow(f.q(), s); ++code) {
    auto p = detail::monic_from_code(s, code, f.q());
    if (is_irreducible(p, f)) return p;
  }
  throw Error("no irreducible polynomial found");  // impossible over a finite field
}

/// Multiplication by x on the basis 1, x, ..., x^{s-1} (acting on column vectors).
inline Matrix companion(const Polynomial& p, const Field& f) {
  const std::size_t s = p.size() - 1;
  Matrix c(f, s, s);
  for (std::size_t j = 0; j + 1 < s; ++j) c(j + 1, j) = 1;
  for (std::size_t i = 0; i < s; ++i) c(i, s - 1) = f.neg(p[i]);
  return c;
}

struct FullSpaceConstruction {
  Polynomial modulus;            ///< monic irreducible of degree s, low degree first
  std::vector<Matrix> regular;   ///< C_1..C_s = I, C, ..., C^{s-1}: the regular representation of F_{q^s}
  std::vector<Matrix> generators;  ///< B_i, whose j-th column is the i-th column of C_j
  GeneralMatrixSpace space;      ///< span of the B_i
};

/// A fully connected s-dimensional subspace of the s x s matrices, built from F_{q^s}.
inline FullSpaceConstruction field_ext_full_space(std::size_t s, const Field& f) {
  if (s == 0) throw Error("field_ext_full_space needs s >= 1");
  auto p = least_irreducible(s, f);
  const Matrix c = companion(p, f);
  std::vector<Matrix> regular{Matrix::identity(f, s)};
  for (std::size_t j = 1; j < s; ++j) regular.push_back(regular.back() * c);
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < s; ++i) {
    Matrix b(f, s, s);
    for (std::size_t j = 0; j < s; ++j)
      for (std::size_t r = 0; r < s; ++r) b(r, j) = regular[j](r, i);
    gens.push_back(std::move(b));
  }
  GeneralMatrixSpace space(f, s, s, gens);
  return {std::move(p), std::move(regular), std::move(gens), std::move(space)};
}

struct SeparationInstance {
  std::size_t s = 0, t = 0, d = 0;
  AltMatrixSpace space;            ///< the fully connected space in Λ(s+t)
  AltMatrixSpace block_part;       ///< span of the C_{i,j} and D_{i,j}, split by the first s / last t coordinates
  std::vector<Matrix> b_generators;
};

/**
 * Fully connected space in Λ(s+t, F_q) built from a fully connected B ≤ M(s x t) of
 * dimension d < s+t-1: generators [0 B_i; -B_i^t 0] plus every elementary alternating
 * matrix supported on the top-left s x s block or the bottom-right t x t block.
 */
inline SeparationInstance kappa_gt_lambda_instance(std::size_t s, std::size_t t, std::span<const Matrix> b_gens, const Field& f) {
  const std::size_t n = s + t;
  GeneralMatrixSpace b(f, s, t, b_gens);
  const std::size_t d = b.dim();
  if (d + 1 >= n) throw Error("construction needs dim B < s + t - 1 (got d=" + std::to_string(d) + ", n=" + std::to_string(n) + ")");
  if (!is_fully_connected(b)) throw Error("construction needs a fully connected B");
  std::vector<Matrix> gens, blocks;
  for (const auto& bi : b_gens) {
    Matrix a(f, n, n);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < t; ++j) {
        a(i, s + j) = bi(i, j);
        a(s + j, i) = f.neg(bi(i, j));
      }
    gens.push_back(std::move(a));
  }
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j) blocks.push_back(elementary(f, n, i, j));
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j) blocks.push_back(elementary(f, n, s + i, s + j));
  gens.insert(gens.end(), blocks.begin(), blocks.end());
  return {s, t, d, AltMatrixSpace(f, n, gens), AltMatrixSpace(f, n, blocks),
          std::vector<Matrix>(b_gens.begin(), b_gens.end())};
}

/// Default instance: s = t, B from `field_ext_full_space(s)`.
inline SeparationInstance kappa_gt_lambda_instance(std::size_t s, std::size_t t, const Field& f) {
  if (s != t) throw Error("the default construction needs s == t; supply B explicitly otherwise");
  const auto full = field_ext_full_space(s, f);
  return kappa_gt_lambda_instance(s, t, full.generators, f);
}

}  // namespace blt::alt
