/**
 * @file bilinear.hpp
 * @brief Alternating bilinear maps F^n x F^n -> F^m given by an ordered matrix tuple.
 *
 * phi(v, u) = (v^t A_1 u, ..., v^t A_m u). The tuple is stored as given; it need not be
 * linearly independent (quotients and restrictions produce dependent tuples).
 */
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "blt/altspace.hpp"
#include "blt/error.hpp"
#include "blt/gf.hpp"

namespace blt::bilinear {

using gf::Elem;
using gf::Field;
using gf::Matrix;
using gf::Subspace;
using gf::Vector;

class AltBilinearMap {
 public:
  AltBilinearMap(Field f, std::size_t n, std::vector<Matrix> components)
      : field_(f), n_(n), components_(std::move(components)) {
    if (n == 0) throw Error("bilinear map needs domain dimension >= 1");
    for (const auto& a : components_) {
      gf::require_same_field(f, a.field());
      if (a.rows() != n || !alt::is_alternating(a)) throw Error("map component is not an alternating n x n matrix");
    }
  }

  const Field& field() const noexcept { return field_; }
  std::size_t domain_dim() const noexcept { return n_; }
  std::size_t codomain_dim() const noexcept { return components_.size(); }
  const std::vector<Matrix>& components() const noexcept { return components_; }

  Vector operator()(std::span<const Elem> v, std::span<const Elem> u) const {
    if (v.size() != n_ || u.size() != n_) throw Error("bilinear map argument has the wrong length");
    Vector out(components_.size());
    for (std::size_t k = 0; k < components_.size(); ++k) out[k] = gf::bilinear(components_[k], v, u);
    return out;
  }

  /// The span of the components.
  alt::AltMatrixSpace image_space() const { return alt::AltMatrixSpace(field_, n_, components_); }

 private:
  Field field_;
  std::size_t n_;
  std::vector<Matrix> components_;
};

/// phi with the canonical basis of `a` in order, or with `order` if given (must be a basis of `a`).
inline AltBilinearMap map_from_space(const alt::AltMatrixSpace& a, std::optional<std::vector<Matrix>> order = std::nullopt) {
  if (a.dim() == 0) throw Error("map_from_space needs a nonzero space");
  if (!order) return AltBilinearMap(a.field(), a.ambient(), a.basis());
  if (order->size() != a.dim() || !(alt::AltMatrixSpace(a.field(), a.ambient(), *order) == a))
    throw Error("supplied matrices are not an ordered basis of the space");
  return AltBilinearMap(a.field(), a.ambient(), std::move(*order));
}

/// span{phi(e_i, e_j) : i < j} = F^m
inline bool is_surjective(const AltBilinearMap& phi) {
  const std::size_t n = phi.domain_dim(), m = phi.codomain_dim();
  if (m == 0) return true;
  Matrix images(phi.field(), n * (n - 1) / 2, m);
  std::size_t r = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++r)
      for (std::size_t k = 0; k < m; ++k) images(r, k) = phi.components()[k](i, j);
  return gf::rank(std::move(images)) == m;
}

/// phi|_U in the coordinates of U's canonical basis.
inline AltBilinearMap restrict_map(const AltBilinearMap& phi, const Subspace& u) {
  if (u.ambient() != phi.domain_dim()) throw Error("restrict_map: subspace lives in the wrong space");
  if (u.is_zero()) throw Error("restrict_map: subspace must be nonzero");
  return AltBilinearMap(phi.field(), u.dim(), alt::restrict_generators(phi.components(), u.basis()));
}

/**
 * phi composed with F^m -> F^m / X.
 *
 * The codomain basis is the non-pivot unit vectors of X's canonical basis followed by the
 * basis of X; the coordinates along X are dropped. Component j of the quotient is
 * A_j - sum_a x_a[j] A_{pivot(a)}.
 */
inline AltBilinearMap quotient_map(const AltBilinearMap& phi, const Subspace& x) {
  const std::size_t m = phi.codomain_dim();
  if (x.ambient() != m) throw Error("quotient_map: subspace lives in the wrong codomain");
  const Field f = phi.field();
  std::vector<bool> is_piv(m, false);
  for (auto p : x.pivots()) is_piv[p] = true;
  std::vector<Matrix> comps;
  for (std::size_t j = 0; j < m; ++j) {
    if (is_piv[j]) continue;
    Matrix c = phi.components()[j];
    for (std::size_t a = 0; a < x.dim(); ++a)
      if (x.basis()(a, j)) c = c + phi.components()[x.pivots()[a]].scaled(f.neg(x.basis()(a, j)));
    comps.push_back(std::move(c));
  }
  return AltBilinearMap(f, phi.domain_dim(), std::move(comps));
}

/// Orthogonal decomposability of the map; the zero map and n = 1 decompose by convention.
inline alt::Decomposition is_orth_decomposable(const AltBilinearMap& phi) {
  return alt::decompose_generators(phi.field(), phi.domain_dim(), phi.components());
}

struct KappaMapResult {
  std::size_t value = 0;
  Subspace u;
};

inline KappaMapResult kappa_map(const AltBilinearMap& phi, const alt::SearchOptions& opt = {}) {
  alt::check_guard(opt, phi.domain_dim(), phi.codomain_dim(), "kappa_map");
  const std::size_t n = phi.domain_dim();
  for (std::size_t c = 0; c < n; ++c)
    for (const auto& u : gf::cached_subspaces(phi.field(), n, n - c))
      if (is_orth_decomposable(restrict_map(phi, u)).decomposable) return {c, u};
  throw Error("kappa_map search exhausted");
}

struct LambdaMapResult {
  std::size_t value = 0;
  Subspace x;
};

/// Least dim X such that phi / X decomposes; X runs upward in dimension.
inline LambdaMapResult lambda_map(const AltBilinearMap& phi, const alt::SearchOptions& opt = {}) {
  alt::check_guard(opt, phi.domain_dim(), phi.codomain_dim(), "lambda_map");
  const std::size_t m = phi.codomain_dim();
  for (std::size_t c = 0; c <= m; ++c) {
    std::optional<Subspace> hit;
    gf::for_each_subspace(phi.field(), m, c, [&](const Subspace& x) {
      if (!is_orth_decomposable(quotient_map(phi, x)).decomposable) return true;
      hit = x;
      return false;
    });
    if (hit) return {c, *hit};
  }
  throw Error("lambda_map search exhausted");  // X = F^m gives the zero map
}

}  // namespace blt::bilinear
