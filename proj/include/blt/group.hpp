/**
 * @file group.hpp
 * @brief The Baer group P_phi of an alternating bilinear map, and its kappa / lambda / delta.
 *
 * P_phi has underlying set F_p^n ⊕ F_p^m and product
 *   (v1, u1) ∘ (v2, u2) = (v1 + v2, u1 + u2 + phi(v1, v2) / 2).
 * Groups are never tabulated; elements are computed pairs. Exhaustive element scans are
 * limited by `ScanOptions::max_order`.
 *
 * Two central-decomposition oracles are provided:
 *  - the structured oracle searches pairs of subspaces (U_J, U_K) of the v-coordinates,
 *    which describe J[P,P] and K[P,P]; cross commutators are evaluated with the group law;
 *  - the lattice oracle (`LatticeGroup`) enumerates every subgroup of a tiny group and
 *    applies the definitions verbatim. It exists to validate the structured oracle.
 *
 * Convention: a group whose commutator map on its generating subspace is identically zero
 * and whose Frattini quotient has rank <= 1 (cyclic of order p, or trivial) counts as
 * centrally decomposable, mirroring the zero-space convention for matrix spaces.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "blt/bilinear.hpp"
#include "blt/error.hpp"
#include "blt/gf.hpp"

namespace blt::group {

using bilinear::AltBilinearMap;
using gf::Elem;
using gf::Field;
using gf::Matrix;
using gf::Subspace;
using gf::Vector;

struct GroupElement {
  Vector v;  ///< F_p^n part
  Vector u;  ///< F_p^m part
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Limit on exhaustive element scans (|P| <= max_order unless forced).
struct ScanOptions {
  std::uint64_t max_order = 6561;  // 3^8
  bool force = false;
};

class BaerGroup {
 public:
  BaerGroup(AltBilinearMap phi, unsigned p) : phi_(std::move(phi)) {
    if (p == 2) throw Error("Baer groups need an odd prime p");
    if (p != phi_.field().q())
      throw Error("p = " + std::to_string(p) + " does not match the map's field F_" + std::to_string(phi_.field().q()));
    if (!bilinear::is_surjective(phi_)) throw Error("phi must be surjective onto F_p^m");
  }

  const Field& field() const noexcept { return phi_.field(); }
  unsigned p() const noexcept { return phi_.field().q(); }
  std::size_t n() const noexcept { return phi_.domain_dim(); }
  std::size_t m() const noexcept { return phi_.codomain_dim(); }
  const AltBilinearMap& phi() const noexcept { return phi_; }

  /// p^(n+m), saturating at UINT64_MAX.
  std::uint64_t order() const noexcept {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < n() + m(); ++i) {
      if (r > UINT64_MAX / p()) return UINT64_MAX;
      r *= p();
    }
    return r;
  }

  GroupElement identity() const { return {Vector(n(), 0), Vector(m(), 0)}; }

  void check(const GroupElement& g) const {
    if (g.v.size() != n() || g.u.size() != m()) throw Error("element dimensions do not match the group");
  }

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const {
    check(a);
    check(b);
    const Field f = field();
    GroupElement r{Vector(n()), Vector(m())};
    for (std::size_t i = 0; i < n(); ++i) r.v[i] = f.add(a.v[i], b.v[i]);
    const Vector c = phi_(a.v, b.v);
    for (std::size_t k = 0; k < m(); ++k) r.u[k] = f.add(f.add(a.u[k], b.u[k]), f.mul(f.half(), c[k]));
    return r;
  }

  GroupElement inverse(const GroupElement& g) const {
    check(g);
    GroupElement r = g;
    for (auto& e : r.v) e = field().neg(e);
    for (auto& e : r.u) e = field().neg(e);
    return r;
  }

  GroupElement power(const GroupElement& g, long long k) const {
    GroupElement base = k < 0 ? inverse(g) : g;
    unsigned long long e = static_cast<unsigned long long>(k < 0 ? -k : k);
    GroupElement acc = identity();
    while (e) {
      if (e & 1u) acc = multiply(acc, base);
      base = multiply(base, base);
      e >>= 1;
    }
    return acc;
  }

  /// g h g^{-1} h^{-1}
  GroupElement commutator(const GroupElement& g, const GroupElement& h) const {
    return multiply(multiply(g, h), multiply(inverse(g), inverse(h)));
  }

  /// Elements indexed by their base-p digits, v first.
  GroupElement element(std::uint64_t index) const {
    GroupElement g{Vector(n()), Vector(m())};
    for (std::size_t i = 0; i < n(); ++i, index /= p()) g.v[i] = Elem(index % p());
    for (std::size_t k = 0; k < m(); ++k, index /= p()) g.u[k] = Elem(index % p());
    return g;
  }
  std::uint64_t index_of(const GroupElement& g) const {
    std::uint64_t idx = 0;
    for (std::size_t k = m(); k-- > 0;) idx = idx * p() + g.u[k];
    for (std::size_t i = n(); i-- > 0;) idx = idx * p() + g.v[i];
    return idx;
  }

  /// (e_i, 0)
  GroupElement generator(std::size_t i) const {
    GroupElement g = identity();
    g.v[i] = 1;
    return g;
  }

 private:
  AltBilinearMap phi_;
};

inline BaerGroup baer_group(const AltBilinearMap& phi, unsigned p) { return BaerGroup(phi, p); }

inline BaerGroup group_from_graph(const graph::Graph& g, unsigned p) {
  return BaerGroup(bilinear::map_from_space(alt::space_from_graph(g, Field(p))), p);
}

inline void check_scan(const BaerGroup& P, const ScanOptions& opt, const char* what) {
  if (!opt.force && P.order() > opt.max_order)
    throw GuardExceeded(std::string(what) + ": |P| = " + std::to_string(P.p()) + "^" + std::to_string(P.n() + P.m()) +
                        " exceeds the scan guard of " + std::to_string(opt.max_order) + " elements; pass --force to lift it");
}

/// Parses "v1,v2,...;u1,u2,..." into an element of P.
inline GroupElement parse_element(const BaerGroup& P, const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos) throw ParseError("element literal needs the form v1,...;u1,...");
  auto parse_list = [&](const std::string& part, std::size_t want) {
    std::vector<long long> raw;
    std::stringstream ss(part);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) {
        try {
          std::size_t used = 0;
          raw.push_back(std::stoll(tok, &used));
          if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
          throw ParseError("bad element entry '" + tok + "'");
        }
      }
    if (raw.size() != want) throw ParseError("element part has " + std::to_string(raw.size()) + " entries, expected " + std::to_string(want));
    return gf::checked_vector(P.field(), raw);
  };
  return {parse_list(text.substr(0, semi), P.n()), parse_list(text.substr(semi + 1), P.m())};
}

inline std::string format_element(const GroupElement& g) {
  std::string s;
  for (std::size_t i = 0; i < g.v.size(); ++i) s += (i ? "," : "") + std::to_string(g.v[i]);
  s += ";";
  for (std::size_t i = 0; i < g.u.size(); ++i) s += (i ? "," : "") + std::to_string(g.u[i]);
  return s;
}

/// The subgroup {(v, u) : v in U, u in X}; closed iff phi(U, U) ⊆ X.
struct SubgroupDescriptor {
  Subspace u;
  Subspace x;

  std::uint64_t order(unsigned p) const {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < u.dim() + x.dim(); ++i) r *= p;
    return r;
  }
};

/// span phi(U, U), with the values taken from group commutators of the basis of U.
inline Subspace commutator_span(const BaerGroup& P, const Subspace& u) {
  std::vector<Vector> vals;
  for (std::size_t a = 0; a < u.dim(); ++a)
    for (std::size_t b = a + 1; b < u.dim(); ++b)
      vals.push_back(P.commutator({u.basis().row_vector(a), Vector(P.m(), 0)}, {u.basis().row_vector(b), Vector(P.m(), 0)}).u);
  return Subspace::span(P.field(), P.m(), vals);
}

inline bool is_closed(const BaerGroup& P, const SubgroupDescriptor& s) {
  return s.x.contains(commutator_span(P, s.u));
}

/// [P, P] = {(0, u)}
inline SubgroupDescriptor commutator_subgroup(const BaerGroup& P) {
  return {Subspace::zero(P.field(), P.n()), commutator_span(P, Subspace::full(P.field(), P.n()))};
}

/// Z(P) = {(v, u) : v commutes with every generator}
inline SubgroupDescriptor center(const BaerGroup& P) {
  // v must satisfy [(v,0), (e_j,0)] = 1 for all j
  Matrix rows(P.field(), P.n() * P.m(), P.n());
  for (std::size_t j = 0; j < P.n(); ++j)
    for (std::size_t i = 0; i < P.n(); ++i) {
      const auto c = P.commutator(P.generator(i), P.generator(j)).u;
      for (std::size_t k = 0; k < P.m(); ++k) rows(j * P.m() + k, i) = c[k];
    }
  return {Subspace::span(gf::kernel(rows)), Subspace::full(P.field(), P.m())};
}

/// S_U: the smallest subgroup mapping onto U modulo [P, P].
inline SubgroupDescriptor regular_subgroup(const BaerGroup& P, const Subspace& u) {
  if (u.ambient() != P.n()) throw Error("regular_subgroup: U must live in F_p^n");
  return {u, commutator_span(P, u)};
}

/// N_X ≤ [P, P]
inline SubgroupDescriptor central_subgroup(const BaerGroup& P, const Subspace& x) {
  if (x.ambient() != P.m()) throw Error("central_subgroup: X must live in F_p^m");
  return {Subspace::zero(P.field(), P.n()), x};
}

/// [S, S] = S ∩ [P, P]. For a structured S these are span phi(U,U) and X.
inline bool is_regular(const BaerGroup& P, const SubgroupDescriptor& s) {
  if (!is_closed(P, s)) throw Error("is_regular: descriptor is not a subgroup");
  return commutator_span(P, s.u) == s.x;
}

/// Every element of a structured subgroup, in index order.
inline std::vector<GroupElement> elements(const BaerGroup& P, const SubgroupDescriptor& s) {
  std::vector<GroupElement> out;
  const Field f = P.field();
  const std::size_t k = s.u.dim() + s.x.dim();
  std::vector<Elem> coeff(k, 0);
  while (true) {
    GroupElement g = P.identity();
    for (std::size_t a = 0; a < s.u.dim(); ++a)
      for (std::size_t i = 0; i < P.n(); ++i) g.v[i] = f.add(g.v[i], f.mul(coeff[a], s.u.basis()(a, i)));
    for (std::size_t a = 0; a < s.x.dim(); ++a)
      for (std::size_t i = 0; i < P.m(); ++i) g.u[i] = f.add(g.u[i], f.mul(coeff[s.u.dim() + a], s.x.basis()(a, i)));
    out.push_back(std::move(g));
    std::size_t t = k;
    while (t > 0) {
      if (++coeff[t - 1] < P.p()) break;
      coeff[t - 1] = 0;
      --t;
    }
    if (t == 0) break;
  }
  return out;
}

/// |C_P(g)| by exhaustive scan, comparing g∘h with h∘g.
inline std::uint64_t centralizer_order(const BaerGroup& P, const GroupElement& g, const ScanOptions& opt = {}) {
  check_scan(P, opt, "centralizer");
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < P.order(); ++i) {
    const auto h = P.element(i);
    if (P.multiply(g, h) == P.multiply(h, g)) ++count;
  }
  return count;
}

namespace detail {
inline std::size_t log_p(std::uint64_t x, unsigned p) {
  std::size_t d = 0;
  while (x > 1) {
    if (x % p) throw Error("order is not a power of p");
    x /= p;
    ++d;
  }
  return d;
}
}  // namespace detail

/// n + m - log_p |C_P(g)|
inline std::size_t deg_element(const BaerGroup& P, const GroupElement& g, const ScanOptions& opt = {}) {
  return P.n() + P.m() - detail::log_p(centralizer_order(P, g, opt), P.p());
}

/**
 * Minimum degree over g outside [P, P].
 *
 * Every g is scanned; its centralizer is counted over the elements (w, 0) and multiplied by
 * p^m, since the second coordinate of h never affects whether g and h commute.
 */
inline std::size_t delta_group(const BaerGroup& P, const ScanOptions& opt = {}) {
  check_scan(P, opt, "delta_group");
  std::uint64_t pn = 1;
  for (std::size_t i = 0; i < P.n(); ++i) pn *= P.p();
  std::size_t best = P.n() + P.m();
  for (std::uint64_t i = 0; i < P.order(); ++i) {
    const auto g = P.element(i);
    if (std::all_of(g.v.begin(), g.v.end(), [](Elem e) { return e == 0; })) continue;
    std::uint64_t count = 0;
    for (std::uint64_t w = 0; w < pn; ++w) {
      const auto h = P.element(w);
      const auto c = P.commutator(g, h);
      if (std::all_of(c.u.begin(), c.u.end(), [](Elem e) { return e == 0; })) ++count;
    }
    const std::size_t d = detail::log_p(count, P.p()) + P.m();
    best = std::min(best, P.n() + P.m() - d);
  }
  return best;
}

/// phi_P read off from the commutators [(e_i, 0), (e_j, 0)].
inline AltBilinearMap commutator_map(const BaerGroup& P) {
  std::vector<Matrix> comps(P.m(), Matrix(P.field(), P.n(), P.n()));
  for (std::size_t i = 0; i < P.n(); ++i)
    for (std::size_t j = 0; j < P.n(); ++j) {
      const auto c = P.commutator(P.generator(i), P.generator(j)).u;
      for (std::size_t k = 0; k < P.m(); ++k) comps[k](i, j) = c[k];
    }
  return AltBilinearMap(P.field(), P.n(), std::move(comps));
}

struct CentralDecomposition {
  bool decomposable = false;
  std::optional<std::pair<SubgroupDescriptor, SubgroupDescriptor>> witness;  ///< (J, K); absent for the rank <= 1 convention
};

/// Limit for the structured oracle, expressed as the group order p^(n+m).
struct OracleOptions {
  std::uint64_t max_order = 729;  // 3^6
  bool force = false;
};

inline void check_oracle(const BaerGroup& P, const OracleOptions& opt, const char* what) {
  if (!opt.force && P.order() > opt.max_order)
    throw GuardExceeded(std::string(what) + ": |P| = " + std::to_string(P.p()) + "^" + std::to_string(P.n() + P.m()) +
                        " exceeds the oracle guard of " + std::to_string(opt.max_order) + " elements; pass --force to lift it");
}

/**
 * Central decomposability of H / N_X, where H is generated by {(v, 0) : v in U} and the
 * commutator subgroup (so H = S_U [S_U, S_U], with U = F^n giving P itself).
 *
 * By reduction to factors containing the commutator subgroup, a decomposition is a pair of
 * proper nonzero subspaces U_J, U_K of U with U_J + U_K = U and every commutator
 * [(a, 0), (b, 0)] (a in U_J, b in U_K) lying in N_X. The sum is not required to be direct.
 */
inline CentralDecomposition centrally_decompose(const BaerGroup& P, const Subspace& within, const Subspace& modulo,
                                                const OracleOptions& opt = {}) {
  check_oracle(P, opt, "central decomposition oracle");
  const Field f = P.field();
  const std::size_t d = within.dim();
  const Subspace derived = gf::sum(commutator_span(P, within), modulo);
  if (d <= 1) return {true, std::nullopt};

  // commutator values of the basis of U, reduced modulo X through the annihilator of X
  const Subspace ann = modulo.annihilator();
  const std::size_t r = ann.dim();
  std::vector<Vector> basis(d);
  for (std::size_t a = 0; a < d; ++a) basis[a] = within.basis().row_vector(a);
  // reduced[a][b] = ann · [(u_a,0), (u_b,0)]
  std::vector<Vector> reduced(d * d, Vector(r, 0));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const auto c = P.commutator({basis[a], Vector(P.m(), 0)}, {basis[b], Vector(P.m(), 0)}).u;
      for (std::size_t t = 0; t < r; ++t) reduced[a * d + b][t] = gf::dot(f, ann.basis().row(t), c);
    }

  // candidate factors in U-coordinates
  std::vector<const Subspace*> cands;
  for (std::size_t k = 1; k < d; ++k)
    for (const auto& s : gf::cached_subspaces(f, d, k)) cands.push_back(&s);

  // a^t R_t b for coordinate vectors a, b of U
  auto crosses_vanish = [&](const Subspace& j, const Subspace& k) {
    for (std::size_t x = 0; x < j.dim(); ++x)
      for (std::size_t y = 0; y < k.dim(); ++y)
        for (std::size_t t = 0; t < r; ++t) {
          unsigned acc = 0;
          for (std::size_t a = 0; a < d; ++a) {
            const Elem ja = j.basis()(x, a);
            if (!ja) continue;
            for (std::size_t b = 0; b < d; ++b) acc += unsigned(ja) * k.basis()(y, b) * reduced[a * d + b][t];
          }
          if (acc % f.q()) return false;
        }
    return true;
  };

  for (std::size_t i = 0; i < cands.size(); ++i)
    for (std::size_t j = i; j < cands.size(); ++j) {
      const Subspace& sj = *cands[i];
      const Subspace& sk = *cands[j];
      if (sj.dim() + sk.dim() < d) continue;
      if (!crosses_vanish(sj, sk)) continue;
      if (gf::sum(sj, sk).dim() != d) continue;
      const Subspace uj = alt::lift(sj, within.basis());
      const Subspace uk = alt::lift(sk, within.basis());
      return {true, std::make_pair(SubgroupDescriptor{uj, derived}, SubgroupDescriptor{uk, derived})};
    }
  return {false, std::nullopt};
}

inline CentralDecomposition is_centrally_decomposable(const BaerGroup& P, const OracleOptions& opt = {}) {
  return centrally_decompose(P, Subspace::full(P.field(), P.n()), Subspace::zero(P.field(), P.m()), opt);
}

/// P / N_X
inline CentralDecomposition is_centrally_decomposable_quotient(const BaerGroup& P, const Subspace& x, const OracleOptions& opt = {}) {
  return centrally_decompose(P, Subspace::full(P.field(), P.n()), x, opt);
}

struct KappaGroupResult {
  std::size_t value = 0;
  SubgroupDescriptor subgroup;  ///< a regular S_U with |S/[S,S]| = p^(n - value) that decomposes
};

/// Structured literal path: regular subgroups S_U, U of dimension n - s, s ascending.
inline KappaGroupResult kappa_group(const BaerGroup& P, const OracleOptions& opt = {}) {
  check_oracle(P, opt, "kappa_group");
  const std::size_t n = P.n();
  const Subspace trivial = Subspace::zero(P.field(), P.m());
  for (std::size_t s = 0; s < n; ++s)
    for (const auto& u : gf::cached_subspaces(P.field(), n, n - s)) {
      auto su = regular_subgroup(P, u);
      if (!is_regular(P, su)) throw Error("S_U failed the regularity check");
      if (centrally_decompose(P, u, trivial, opt).decomposable) return {s, std::move(su)};
    }
  throw Error("kappa_group search exhausted");
}

struct LambdaGroupResult {
  std::size_t value = 0;
  SubgroupDescriptor normal;  ///< N_X of order p^value with P / N_X decomposable
};

/// Structured literal path: central N_X ≤ [P, P] of order p^s, s ascending.
inline LambdaGroupResult lambda_group(const BaerGroup& P, const OracleOptions& opt = {}) {
  check_oracle(P, opt, "lambda_group");
  for (std::size_t s = 0; s <= P.m(); ++s)
    for (const auto& x : gf::cached_subspaces(P.field(), P.m(), s))
      if (is_centrally_decomposable_quotient(P, x, opt).decomposable) return {s, central_subgroup(P, x)};
  throw Error("lambda_group search exhausted");
}

/// Fast path: extract phi_P from commutators and solve on the map.
inline std::size_t kappa_group_fast(const BaerGroup& P, const alt::SearchOptions& opt = {}) {
  return bilinear::kappa_map(commutator_map(P), opt).value;
}
inline std::size_t lambda_group_fast(const BaerGroup& P, const alt::SearchOptions& opt = {}) {
  return bilinear::lambda_map(commutator_map(P), opt).value;
}

// ---------------------------------------------------------------------------
// Sanity scans

/// a(bc) = (ab)c over all triples.
inline bool check_associativity_exhaustive(const BaerGroup& P, const ScanOptions& opt = {.max_order = 81}) {
  check_scan(P, opt, "exhaustive associativity");
  for (std::uint64_t i = 0; i < P.order(); ++i)
    for (std::uint64_t j = 0; j < P.order(); ++j) {
      const auto a = P.element(i), b = P.element(j), ab = P.multiply(a, b);
      for (std::uint64_t k = 0; k < P.order(); ++k) {
        const auto c = P.element(k);
        if (P.multiply(ab, c) != P.multiply(a, P.multiply(b, c))) return false;
      }
    }
  return true;
}

inline bool check_associativity_sampled(const BaerGroup& P, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> dist(0, P.p() - 1);
  auto random_element = [&] {
    GroupElement g{Vector(P.n()), Vector(P.m())};
    for (auto& e : g.v) e = Elem(dist(rng));
    for (auto& e : g.u) e = Elem(dist(rng));
    return g;
  };
  for (std::size_t s = 0; s < samples; ++s) {
    const auto a = random_element(), b = random_element(), c = random_element();
    if (P.multiply(P.multiply(a, b), c) != P.multiply(a, P.multiply(b, c))) return false;
  }
  return true;
}

/// g^p = 1 for every g.
inline bool check_exponent(const BaerGroup& P, const ScanOptions& opt = {}) {
  check_scan(P, opt, "exponent scan");
  const auto e = P.identity();
  for (std::uint64_t i = 0; i < P.order(); ++i)
    if (P.power(P.element(i), P.p()) != e) return false;
  return true;
}

/// Element indices of the subgroup generated by all commutators, by closure under the product.
inline std::set<std::uint64_t> derived_subgroup_by_scan(const BaerGroup& P, const ScanOptions& opt = {}) {
  check_scan(P, opt, "commutator scan");
  std::set<std::uint64_t> gens;
  for (std::uint64_t i = 0; i < P.order(); ++i)
    for (std::uint64_t j = i + 1; j < P.order(); ++j) gens.insert(P.index_of(P.commutator(P.element(i), P.element(j))));
  std::set<std::uint64_t> closure{P.index_of(P.identity())};
  std::vector<std::uint64_t> frontier(closure.begin(), closure.end());
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (auto a : frontier)
      for (auto g : gens) {
        auto prod = P.index_of(P.multiply(P.element(a), P.element(g)));
        if (closure.insert(prod).second) next.push_back(prod);
      }
    frontier = std::move(next);
  }
  return closure;
}

/// Element indices commuting with every element.
inline std::set<std::uint64_t> center_by_scan(const BaerGroup& P, const ScanOptions& opt = {}) {
  check_scan(P, opt, "center scan");
  std::set<std::uint64_t> z;
  for (std::uint64_t i = 0; i < P.order(); ++i) {
    const auto g = P.element(i);
    bool central = true;
    for (std::uint64_t j = 0; j < P.order() && central; ++j) {
      const auto h = P.element(j);
      central = P.multiply(g, h) == P.multiply(h, g);
    }
    if (central) z.insert(i);
  }
  return z;
}

// ---------------------------------------------------------------------------
// Literal subgroup-lattice oracle for tiny groups

/**
 * A tiny Baer group with a full Cayley table and its complete subgroup lattice. Subgroups
 * are membership bitmaps. Used to check the structured oracle against the definitions.
 */
class LatticeGroup {
 public:
  using Set = std::vector<bool>;

  explicit LatticeGroup(const BaerGroup& P, std::uint64_t max_order = 81) : P_(P) {
    if (P.order() > max_order)
      throw GuardExceeded("lattice oracle is limited to |P| <= " + std::to_string(max_order));
    N_ = static_cast<std::size_t>(P.order());
    table_.resize(N_ * N_);
    for (std::size_t i = 0; i < N_; ++i)
      for (std::size_t j = 0; j < N_; ++j) table_[i * N_ + j] = static_cast<std::uint32_t>(P.index_of(P.multiply(P.element(i), P.element(j))));
    identity_ = static_cast<std::size_t>(P.index_of(P.identity()));
    inverse_.resize(N_);
    for (std::size_t i = 0; i < N_; ++i) inverse_[i] = static_cast<std::size_t>(P.index_of(P.inverse(P.element(i))));
    build_lattice();
    Set all(N_, true);
    derived_ = commutator_set(all, all);
    center_ = Set(N_, false);
    for (std::size_t g = 0; g < N_; ++g) {
      bool c = true;
      for (std::size_t h = 0; h < N_ && c; ++h) c = mul(g, h) == mul(h, g);
      center_[g] = c;
    }
  }

  std::size_t size() const noexcept { return N_; }
  const std::vector<Set>& subgroups() const noexcept { return lattice_; }
  std::size_t mul(std::size_t a, std::size_t b) const noexcept { return table_[a * N_ + b]; }
  std::size_t comm(std::size_t a, std::size_t b) const noexcept {
    return mul(mul(a, b), mul(inverse_[a], inverse_[b]));
  }

  static std::size_t count(const Set& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), true)); }

  /// Subgroup generated by the set.
  Set closure(const Set& gens) const {
    Set s(N_, false);
    s[identity_] = true;
    std::vector<std::size_t> members{identity_};
    std::vector<std::size_t> g;
    for (std::size_t i = 0; i < N_; ++i)
      if (gens[i]) g.push_back(i);
    for (std::size_t idx = 0; idx < members.size(); ++idx)
      for (auto x : g) {
        auto y = mul(members[idx], x);
        if (!s[y]) {
          s[y] = true;
          members.push_back(y);
        }
      }
    return s;
  }

  /// Subgroup generated by {[a, b] : a in A, b in B}.
  Set commutator_set(const Set& a, const Set& b) const {
    Set gens(N_, false);
    for (std::size_t i = 0; i < N_; ++i)
      if (a[i])
        for (std::size_t j = 0; j < N_; ++j)
          if (b[j]) gens[comm(i, j)] = true;
    return closure(gens);
  }

  bool commute_into(const Set& a, const Set& b, const Set& target) const {
    for (std::size_t i = 0; i < N_; ++i)
      if (a[i])
        for (std::size_t j = 0; j < N_; ++j)
          if (b[j] && !target[comm(i, j)]) return false;
    return true;
  }

  static Set intersect(const Set& a, const Set& b) {
    Set r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] && b[i];
    return r;
  }
  static bool subset(const Set& a, const Set& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] && !b[i]) return false;
    return true;
  }

  bool is_regular(const Set& s) const { return commutator_set(s, s) == intersect(s, derived_); }

  /**
   * H / N admits a central decomposition: subgroups N < J, K < H with [J, K] ≤ N and
   * JK = H. A quotient of order <= p is treated as decomposable (rank <= 1 convention).
   */
  bool centrally_decomposable(const Set& h, const Set& n) const {
    const std::size_t hs = count(h), ns = count(n);
    if (hs / ns <= P_.p()) return true;
    std::vector<const Set*> inner;
    for (const auto& s : lattice_)
      if (subset(n, s) && subset(s, h) && s != n && s != h) inner.push_back(&s);
    for (std::size_t i = 0; i < inner.size(); ++i)
      for (std::size_t j = i; j < inner.size(); ++j) {
        const Set& a = *inner[i];
        const Set& b = *inner[j];
        if (count(a) * count(b) / count(intersect(a, b)) != hs) continue;
        if (commute_into(a, b, n)) return true;
      }
    return false;
  }

  /// min s: a regular S with |S/[S,S]| = p^(n-s) decomposes centrally.
  std::size_t kappa() const {
    const Set trivial = closure(Set(N_, false));
    for (std::size_t s = 0; s < P_.n(); ++s) {
      std::size_t want = 1;
      for (std::size_t i = 0; i < P_.n() - s; ++i) want *= P_.p();
      for (const auto& sg : lattice_) {
        if (!is_regular(sg)) continue;
        if (count(sg) / count(commutator_set(sg, sg)) != want) continue;
        if (centrally_decomposable(sg, trivial)) return s;
      }
    }
    throw Error("lattice kappa search exhausted");
  }

  /// min s: a central N of order p^s with P / N decomposable; N ≤ [P,P] when `inside_derived`.
  std::size_t lambda(bool inside_derived = true) const {
    const Set all(N_, true);
    const Set& bound = inside_derived ? derived_ : center_;
    for (std::size_t s = 0; s <= P_.n() + P_.m(); ++s) {
      std::size_t want = 1;
      for (std::size_t i = 0; i < s; ++i) want *= P_.p();
      for (const auto& sg : lattice_)
        if (count(sg) == want && subset(sg, bound) && centrally_decomposable(all, sg)) return s;
    }
    throw Error("lattice lambda search exhausted");
  }

  const Set& derived() const noexcept { return derived_; }
  const Set& center_set() const noexcept { return center_; }

 private:
  void build_lattice() {
    std::set<Set> seen;
    Set trivial = closure(Set(N_, false));
    std::vector<Set> queue{trivial};
    seen.insert(trivial);
    for (std::size_t idx = 0; idx < queue.size(); ++idx) {
      const Set cur = queue[idx];
      for (std::size_t g = 0; g < N_; ++g) {
        if (cur[g]) continue;
        Set gens = cur;
        gens[g] = true;
        Set next = closure(gens);
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
    }
    lattice_ = std::move(queue);
  }

  const BaerGroup& P_;
  std::size_t N_ = 0;
  std::size_t identity_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<std::size_t> inverse_;
  std::vector<Set> lattice_;
  Set derived_;
  Set center_;
};

}  // namespace blt::group
