/**
 * @file gf.hpp
 * @brief Exact linear algebra over prime fields F_q and canonical subspace enumeration.
 *
 * Residues are stored as `std::uint8_t`, so the modulus is limited to odd primes q <= 251.
 * Every subspace is kept as the unique reduced row echelon form (RREF) of a spanning
 * matrix, which makes `Subspace` values directly comparable and hashable.
 *
 * Enumeration order of `for_each_subspace` is fixed: pivot column sets in lexicographic
 * order, and within a pivot pattern the free entries as an odometer (last free entry
 * fastest). The order is the same on every platform.
 */
#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include "blt/error.hpp"

namespace blt::gf {

using Elem = std::uint8_t;
using Vector = std::vector<Elem>;

inline constexpr unsigned kMaxModulus = 251;

constexpr bool is_prime(unsigned x) noexcept {
  if (x < 2) return false;
  for (unsigned d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

namespace detail {

inline const std::array<Elem, 256>& inverse_table(unsigned q) {
  static const auto tables = [] {
    std::vector<std::array<Elem, 256>> t(kMaxModulus + 1);
    for (unsigned p = 3; p <= kMaxModulus; ++p) {
      if (!is_prime(p)) continue;
      t[p].fill(0);
      for (unsigned a = 1; a < p; ++a) {
        // extended Euclid on (a, p)
        long long r0 = p, r1 = a, s0 = 0, s1 = 1;
        while (r1 != 0) {
          long long quot = r0 / r1;
          std::tie(r0, r1) = std::make_pair(r1, r0 - quot * r1);
          std::tie(s0, s1) = std::make_pair(s1, s0 - quot * s1);
        }
        long long inv = s0 % static_cast<long long>(p);
        if (inv < 0) inv += p;
        t[p][a] = static_cast<Elem>(inv);
      }
    }
    return t;
  }();
  return tables[q];
}

}  // namespace detail

/// The prime field F_q for an odd prime q in [3, 251].
class Field {
 public:
  explicit Field(unsigned q) : q_(q) {
    if (q == 2) throw Error("characteristic 2 is not supported (q must be an odd prime)");
    if (q < 3 || q > kMaxModulus || !is_prime(q))
      throw Error("modulus must be an odd prime in [3, 251], got " + std::to_string(q));
    inv_ = detail::inverse_table(q).data();
  }

  unsigned q() const noexcept { return q_; }

  Elem add(Elem a, Elem b) const noexcept {
    unsigned s = unsigned(a) + b;
    return Elem(s >= q_ ? s - q_ : s);
  }
  Elem sub(Elem a, Elem b) const noexcept { return Elem(a >= b ? a - b : a + q_ - b); }
  Elem neg(Elem a) const noexcept { return Elem(a == 0 ? 0 : q_ - a); }
  Elem mul(Elem a, Elem b) const noexcept { return Elem(unsigned(a) * b % q_); }
  /// Multiplicative inverse; `a` must be nonzero.
  Elem inv(Elem a) const noexcept { return inv_[a]; }
  /// 1/2 in F_q, computed as (q+1)/2.
  Elem half() const noexcept { return Elem((q_ + 1) / 2); }
  Elem reduce(long long x) const noexcept {
    long long r = x % static_cast<long long>(q_);
    return Elem(r < 0 ? r + q_ : r);
  }

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.q_ == b.q_; }

 private:
  unsigned q_;
  const Elem* inv_;
};

inline void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw Error("field mismatch: F_" + std::to_string(a.q()) + " vs F_" + std::to_string(b.q()));
}

/// Dense row-major matrix over F_q.
class Matrix {
 public:
  Matrix(Field f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Rows given as integers; each entry is reduced mod q.
  static Matrix from_rows(Field f, const std::vector<std::vector<long long>>& rows, std::size_t cols) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw Error("ragged matrix rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = f.reduce(rows[r][c]);
    }
    return m;
  }

  static Matrix from_vectors(Field f, std::size_t cols, std::span<const Vector> rows) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw Error("vector length does not match column count");
      std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
  }

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Elem& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::span<Elem> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const { return Vector(row(r).begin(), row(r).end()); }
  const std::vector<Elem>& data() const noexcept { return data_; }

  bool is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    require_same_field(field_, o.field_);
    if (cols_ != o.rows_) throw Error("matrix product dimension mismatch");
    Matrix p(field_, rows_, o.cols_);
    const unsigned q = field_.q();
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < o.cols_; ++j) {
        unsigned acc = 0;
        for (std::size_t k = 0; k < cols_; ++k) acc = (acc + unsigned((*this)(i, k)) * o(k, j)) % q;
        p(i, j) = Elem(acc);
      }
    return p;
  }

  Matrix operator+(const Matrix& o) const {
    require_same_field(field_, o.field_);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum dimension mismatch");
    Matrix s(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = field_.add(data_[i], o.data_[i]);
    return s;
  }

  Matrix scaled(Elem a) const {
    Matrix s(*this);
    for (auto& e : s.data_) e = field_.mul(e, a);
    return s;
  }

  /// Row-major flattening into a single vector of length rows*cols.
  Vector vectorized() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator<(const Matrix& a, const Matrix& b) noexcept {
    return std::tie(a.rows_, a.cols_, a.data_) < std::tie(b.rows_, b.cols_, b.data_);
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

inline Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  unsigned acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = (acc + unsigned(a[i]) * b[i]) % f.q();
  return Elem(acc);
}

/// x^t M y
inline Elem bilinear(const Matrix& m, std::span<const Elem> x, std::span<const Elem> y) {
  const unsigned q = m.field().q();
  unsigned acc = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    unsigned inner = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) inner += unsigned(m(i, j)) * y[j];
    acc = (acc + unsigned(x[i]) * (inner % q)) % q;
  }
  return Elem(acc);
}

/// M x
inline Vector apply(const Matrix& m, std::span<const Elem> x) {
  Vector out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = dot(m.field(), m.row(i), x);
  return out;
}

struct Echelon {
  Matrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form with unit pivots. Zero rows are kept at the bottom.
inline Echelon rref(Matrix m) {
  const Field f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(piv, k), m(r, k));
    const Elem s = f.inv(m(r, c));
    for (std::size_t k = c; k < m.cols(); ++k) m(r, k) = f.mul(m(r, k), s);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Elem factor = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(i, k) = f.sub(m(i, k), f.mul(factor, m(r, k)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), r, std::move(pivots)};
}

inline std::size_t rank(Matrix m) { return rref(std::move(m)).rank; }

/// Nonzero rows of the RREF, i.e. a canonical basis of the row space.
inline Matrix row_space_basis(const Matrix& m) {
  auto e = rref(m);
  Matrix b(m.field(), e.rank, m.cols());
  for (std::size_t r = 0; r < e.rank; ++r) std::copy(e.reduced.row(r).begin(), e.reduced.row(r).end(), b.row(r).begin());
  return b;
}

/// Basis (as rows) of the right null space {x : M x = 0}.
inline Matrix kernel(const Matrix& m) {
  const Field f = m.field();
  const auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix k(f, m.cols() - e.rank, m.cols());
  std::size_t out = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    k(out, free) = 1;
    for (std::size_t r = 0; r < e.rank; ++r) k(out, e.pivots[r]) = f.neg(e.reduced(r, free));
    ++out;
  }
  return k;
}

inline Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto e = rref(std::move(aug));
  if (e.rank < n || e.pivots[n - 1] != n - 1) throw Error("matrix is singular");
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

/// Incremental echelon basis over a fixed-length coordinate space, used by hot search loops.
/// Rows are kept reduced against each other's pivots so insertion costs O(rank * length).
class EchelonAccumulator {
 public:
  EchelonAccumulator(Field f, std::size_t length) : f_(f), len_(length) {}

  void clear() noexcept {
    rows_.clear();
    pivots_.clear();
  }
  std::size_t rank() const noexcept { return pivots_.size(); }

  /// Returns true if `v` was independent of the rows inserted so far.
  bool insert(std::span<const Elem> v) {
    scratch_.assign(v.begin(), v.end());
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      const Elem c = scratch_[pivots_[r]];
      if (c == 0) continue;
      const Elem* row = rows_.data() + r * len_;
      for (std::size_t k = 0; k < len_; ++k)
        if (row[k]) scratch_[k] = f_.sub(scratch_[k], f_.mul(c, row[k]));
    }
    std::size_t p = 0;
    while (p < len_ && scratch_[p] == 0) ++p;
    if (p == len_) return false;
    const Elem s = f_.inv(scratch_[p]);
    for (auto& e : scratch_) e = f_.mul(e, s);
    rows_.insert(rows_.end(), scratch_.begin(), scratch_.end());
    pivots_.push_back(p);
    return true;
  }

 private:
  Field f_;
  std::size_t len_;
  std::vector<Elem> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Elem> scratch_;
};

/// A subspace of F_q^n, stored as the RREF of a spanning set (nonzero rows only).
class Subspace {
 public:
  static Subspace zero(Field f, std::size_t n) { return Subspace(Matrix(f, 0, n), {}); }
  static Subspace full(Field f, std::size_t n) {
    std::vector<std::size_t> piv(n);
    std::iota(piv.begin(), piv.end(), std::size_t{0});
    return Subspace(Matrix::identity(f, n), std::move(piv));
  }
  /// Row span of `rows` (any spanning set, dependent rows allowed).
  static Subspace span(const Matrix& rows) {
    auto e = rref(rows);
    Matrix b(rows.field(), e.rank, rows.cols());
    for (std::size_t r = 0; r < e.rank; ++r)
      std::copy(e.reduced.row(r).begin(), e.reduced.row(r).end(), b.row(r).begin());
    return Subspace(std::move(b), std::move(e.pivots));
  }
  static Subspace span(Field f, std::size_t n, std::span<const Vector> vectors) {
    return span(Matrix::from_vectors(f, n, vectors));
  }
  /// Wraps a matrix already known to be in RREF with no zero rows. Not validated.
  static Subspace from_rref(Matrix basis, std::vector<std::size_t> pivots) {
    return Subspace(std::move(basis), std::move(pivots));
  }

  const Field& field() const noexcept { return basis_.field(); }
  std::size_t ambient() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient(); }

  /// Vectors orthogonal (under the standard dot product) to every basis row.
  Subspace annihilator() const {
    if (dim() == 0) return full(field(), ambient());
    return span(kernel(basis_));
  }

  bool contains(std::span<const Elem> v) const {
    if (v.size() != ambient()) throw Error("vector length does not match ambient dimension");
    const Field f = field();
    Vector w(v.begin(), v.end());
    for (std::size_t r = 0; r < dim(); ++r) {
      const Elem c = w[pivots_[r]];
      if (c == 0) continue;
      for (std::size_t k = 0; k < ambient(); ++k) w[k] = f.sub(w[k], f.mul(c, basis_(r, k)));
    }
    return std::all_of(w.begin(), w.end(), [](Elem e) { return e == 0; });
  }
  bool contains(const Subspace& s) const {
    for (std::size_t r = 0; r < s.dim(); ++r)
      if (!contains(s.basis().row(r))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) noexcept { return a.basis_ == b.basis_; }
  friend bool operator<(const Subspace& a, const Subspace& b) noexcept { return a.basis_ < b.basis_; }

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots) : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const noexcept {
    std::size_t h = s.ambient() * 1000003u + s.dim();
    for (Elem e : s.basis().data()) h = h * 131u + e;
    return h;
  }
};

namespace detail {
inline void require_same_ambient(const Subspace& a, const Subspace& b) {
  require_same_field(a.field(), b.field());
  if (a.ambient() != b.ambient())
    throw Error("subspace ambient dimensions differ: " + std::to_string(a.ambient()) + " vs " +
                std::to_string(b.ambient()));
}
inline Matrix stack(const Matrix& a, const Matrix& b) {
  Matrix s(a.field(), a.rows() + b.rows(), a.cols());
  std::copy(a.data().begin(), a.data().end(), s.row(0).begin());
  for (std::size_t r = 0; r < b.rows(); ++r) std::copy(b.row(r).begin(), b.row(r).end(), s.row(a.rows() + r).begin());
  return s;
}
}  // namespace detail

inline Subspace sum(const Subspace& a, const Subspace& b) {
  detail::require_same_ambient(a, b);
  if (a.dim() == 0) return b;
  if (b.dim() == 0) return a;
  return Subspace::span(detail::stack(a.basis(), b.basis()));
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
  detail::require_same_ambient(a, b);
  // S ∩ T = ann(ann S + ann T)
  return sum(a.annihilator(), b.annihilator()).annihilator();
}

/// Some C with S ⊕ C = superspace; greedy over the superspace's canonical basis.
inline Subspace complement_in(const Subspace& s, const Subspace& superspace) {
  detail::require_same_ambient(s, superspace);
  if (!superspace.contains(s)) throw Error("complement_in: subspace is not contained in the superspace");
  EchelonAccumulator acc(s.field(), s.ambient());
  for (std::size_t r = 0; r < s.dim(); ++r) acc.insert(s.basis().row(r));
  std::vector<Vector> chosen;
  for (std::size_t r = 0; r < superspace.dim(); ++r)
    if (acc.insert(superspace.basis().row(r))) chosen.push_back(superspace.basis().row_vector(r));
  return Subspace::span(s.field(), s.ambient(), chosen);
}

inline Subspace complement_in(const Subspace& s) { return complement_in(s, Subspace::full(s.field(), s.ambient())); }

/// Number of k-dimensional subspaces of F_q^n (product formula).
inline std::uint64_t gaussian_binomial(unsigned n, unsigned k, unsigned q) {
  if (k > n) return 0;
  // prod_{i<k} (q^{n-i} - 1) / (q^{i+1} - 1); every partial product is an integer
  std::uint64_t num = 1, den = 1;
  auto pw = [q](unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) r *= q;
    return r;
  };
  std::uint64_t result = 1;
  for (unsigned i = 0; i < k; ++i) {
    num = pw(n - i) - 1;
    den = pw(i + 1) - 1;
    result = result * num / den;
  }
  return result;
}

/// Round-robin split of an enumeration: item `i` is visited iff i % count == index.
struct Chunk {
  std::size_t index = 0;
  std::size_t count = 1;
};

namespace detail {
template <class Fn, class Arg>
bool invoke_continue(Fn& fn, Arg&& arg) {
  if constexpr (std::is_same_v<std::invoke_result_t<Fn&, Arg>, bool>)
    return fn(std::forward<Arg>(arg));
  else {
    fn(std::forward<Arg>(arg));
    return true;
  }
}
}  // namespace detail

/// Visits every k-dimensional subspace of F_q^n once, in canonical order.
/// `fn` may return bool; returning false stops the enumeration.
/// Returns false iff the visitor stopped early.
template <class Fn>
bool for_each_subspace(Field f, std::size_t n, std::size_t k, Fn&& fn, Chunk chunk = {}) {
  if (k > n) throw Error("subspace dimension " + std::to_string(k) + " exceeds ambient dimension " + std::to_string(n));
  if (chunk.count == 0 || chunk.index >= chunk.count) throw Error("invalid enumeration chunk");
  const unsigned q = f.q();
  std::size_t seq = 0;
  std::vector<std::size_t> piv(k);
  std::iota(piv.begin(), piv.end(), std::size_t{0});
  while (true) {
    std::vector<bool> is_piv(n, false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free_pos;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = piv[r] + 1; c < n; ++c)
        if (!is_piv[c]) free_pos.emplace_back(r, c);
    Matrix m(f, k, n);
    for (std::size_t r = 0; r < k; ++r) m(r, piv[r]) = 1;
    while (true) {
      if (seq++ % chunk.count == chunk.index) {
        if (!detail::invoke_continue(fn, Subspace::from_rref(m, piv))) return false;
      }
      // odometer over the free entries, last position fastest
      std::size_t i = free_pos.size();
      while (i > 0) {
        auto [r, c] = free_pos[i - 1];
        if (++m(r, c) < q) break;
        m(r, c) = 0;
        --i;
      }
      if (i == 0) break;
    }
    // next pivot combination in lexicographic order
    std::size_t i = k;
    while (i > 0 && piv[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  return true;
}

inline std::vector<Subspace> subspaces(Field f, std::size_t n, std::size_t k) {
  std::vector<Subspace> out;
  for_each_subspace(f, n, k, [&](const Subspace& s) { out.push_back(s); });
  return out;
}

/// Memoised `subspaces(f, n, k)`; the returned reference stays valid for the program's lifetime.
inline const std::vector<Subspace>& cached_subspaces(Field f, std::size_t n, std::size_t k) {
  static std::mutex mu;
  static std::map<std::tuple<unsigned, std::size_t, std::size_t>, std::vector<Subspace>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_tuple(f.q(), n, k);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, subspaces(f, n, k)).first;
  return it->second;
}

/// Every proper nontrivial subspace of F_q^n with dimension <= n/2, ascending by dimension.
inline std::vector<const Subspace*> half_lattice(Field f, std::size_t n) {
  std::vector<const Subspace*> out;
  for (std::size_t k = 1; k <= n / 2; ++k)
    for (const auto& s : cached_subspaces(f, n, k)) out.push_back(&s);
  return out;
}

/// Visits a (non-canonical) basis of every complement V of U in F_q^n, i.e. U ⊕ V = F_q^n.
/// The basis rows are e_j + sum_a M[j][a] u_a over the non-pivot columns j of U, with M
/// running through all (n-k) x k matrices as an odometer.
template <class Fn>
bool for_each_complement_basis(const Subspace& u, Fn&& fn) {
  const std::size_t n = u.ambient(), k = u.dim();
  if (k == 0 || k == n) throw Error("enumerate_complements needs 0 < dim U < n");
  const Field f = u.field();
  std::vector<bool> is_piv(n, false);
  for (auto p : u.pivots()) is_piv[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_piv[c]) free_cols.push_back(c);
  const std::size_t rows = n - k;
  std::vector<Elem> coeff(rows * k, 0);
  Matrix basis(f, rows, n);
  while (true) {
    for (std::size_t j = 0; j < rows; ++j) {
      auto row = basis.row(j);
      std::fill(row.begin(), row.end(), Elem{0});
      row[free_cols[j]] = 1;
      for (std::size_t a = 0; a < k; ++a) {
        const Elem c = coeff[j * k + a];
        if (!c) continue;
        for (std::size_t t = 0; t < n; ++t) row[t] = f.add(row[t], f.mul(c, u.basis()(a, t)));
      }
    }
    if (!detail::invoke_continue(fn, static_cast<const Matrix&>(basis))) return false;
    std::size_t i = coeff.size();
    while (i > 0) {
      if (++coeff[i - 1] < f.q()) break;
      coeff[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  return true;
}

/// Canonical form of each complement of U, in the same order as `for_each_complement_basis`.
template <class Fn>
bool for_each_complement(const Subspace& u, Fn&& fn) {
  return for_each_complement_basis(u, [&](const Matrix& b) { return detail::invoke_continue(fn, Subspace::span(b)); });
}

inline std::vector<Subspace> complements(const Subspace& u) {
  std::vector<Subspace> out;
  for_each_complement(u, [&](const Subspace& v) { out.push_back(v); });
  return out;
}

/// Uniformly random invertible n x n matrix (rejection sampling).
template <class Rng>
Matrix random_invertible(Field f, std::size_t n, Rng& rng) {
  std::uniform_int_distribution<unsigned> dist(0, f.q() - 1);
  while (true) {
    Matrix t(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t(i, j) = Elem(dist(rng));
    if (rank(t) == n) return t;
  }
}

/// Parses a list of residues; entries must already lie in [0, q).
inline Vector checked_vector(const Field& f, const std::vector<long long>& raw) {
  Vector v(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] < 0 || raw[i] >= static_cast<long long>(f.q()))
      throw Error("entry " + std::to_string(raw[i]) + " is outside [0, " + std::to_string(f.q()) + ")");
    v[i] = Elem(raw[i]);
  }
  return v;
}

}  // namespace blt::gf
