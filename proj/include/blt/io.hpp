// JSON readers and writers for matrix spaces, bilinear maps, groups and witnesses.
#pragma once

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "blt/altspace.hpp"
#include "blt/bilinear.hpp"
#include "blt/error.hpp"
#include "blt/gf.hpp"
#include "blt/group.hpp"

namespace blt::io {

using json = nlohmann::json;
using gf::Field;
using gf::Matrix;
using gf::Subspace;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

inline json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(int(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Basis rows of a subspace.
inline json to_json(const Subspace& s) { return to_json(s.basis()); }

namespace detail {
template <class T>
T get_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("field \"") + key + "\" has the wrong type");
  }
}

inline Matrix matrix_from_json(const Field& f, const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw ParseError("matrix must have " + std::to_string(rows) + " rows");
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw ParseError("matrix row must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[r][c].is_number_integer()) throw ParseError("matrix entries must be integers");
      const long long v = j[r][c].get<long long>();
      if (v < 0 || v >= static_cast<long long>(f.q())) throw ParseError("matrix entry " + std::to_string(v) + " is outside [0, q)");
      m(r, c) = gf::Elem(v);
    }
  }
  return m;
}

inline std::vector<Matrix> alternating_list(const Field& f, std::size_t n, const json& list, const char* key) {
  if (!list.is_array()) throw ParseError(std::string("\"") + key + "\" must be a list of matrices");
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    Matrix m = matrix_from_json(f, list[i], n, n);
    if (!alt::is_alternating(m)) throw ParseError(std::string(key) + "[" + std::to_string(i) + "] is not alternating");
    out.push_back(std::move(m));
  }
  return out;
}

inline Field field_from(unsigned q) {
  try {
    return Field(q);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}
}  // namespace detail

// --- matrix spaces: {"q":3,"n":4,"matrices":[...]}

inline json to_json(const alt::AltMatrixSpace& a) {
  json ms = json::array();
  for (const auto& m : a.basis()) ms.push_back(to_json(m));
  return {{"q", a.field().q()}, {"n", a.ambient()}, {"matrices", std::move(ms)}};
}

inline alt::AltMatrixSpace space_from_json(const json& j) {
  const Field f = detail::field_from(detail::get_field<unsigned>(j, "q"));
  const auto n = detail::get_field<std::size_t>(j, "n");
  if (n == 0) throw ParseError("n must be positive");
  if (!j.contains("matrices")) throw ParseError("missing field \"matrices\"");
  return alt::AltMatrixSpace(f, n, detail::alternating_list(f, n, j.at("matrices"), "matrices"));
}

// --- maps: the ordered tuple plus "codomain_dim"

inline json to_json(const bilinear::AltBilinearMap& phi) {
  json ms = json::array();
  for (const auto& m : phi.components()) ms.push_back(to_json(m));
  return {{"q", phi.field().q()}, {"n", phi.domain_dim()}, {"codomain_dim", phi.codomain_dim()}, {"matrices", std::move(ms)}};
}

inline bilinear::AltBilinearMap map_from_json(const json& j) {
  const Field f = detail::field_from(detail::get_field<unsigned>(j, "q"));
  const auto n = detail::get_field<std::size_t>(j, "n");
  if (n == 0) throw ParseError("n must be positive");
  if (!j.contains("matrices")) throw ParseError("missing field \"matrices\"");
  auto comps = detail::alternating_list(f, n, j.at("matrices"), "matrices");
  if (j.contains("codomain_dim") && detail::get_field<std::size_t>(j, "codomain_dim") != comps.size())
    throw ParseError("codomain_dim does not match the number of matrices");
  return bilinear::AltBilinearMap(f, n, std::move(comps));
}

// --- groups: {"p":3,"n":2,"m":1,"phi":[...]}

inline json to_json(const group::BaerGroup& P) {
  json ms = json::array();
  for (const auto& m : P.phi().components()) ms.push_back(to_json(m));
  return {{"p", P.p()}, {"n", P.n()}, {"m", P.m()}, {"phi", std::move(ms)}};
}

inline group::BaerGroup group_from_json(const json& j) {
  const auto p = detail::get_field<unsigned>(j, "p");
  if (p % 2 == 0) throw ParseError("p must be an odd prime");
  const Field f = detail::field_from(p);
  const auto n = detail::get_field<std::size_t>(j, "n");
  const auto m = detail::get_field<std::size_t>(j, "m");
  if (n == 0) throw ParseError("n must be positive");
  if (!j.contains("phi")) throw ParseError("missing field \"phi\"");
  auto comps = detail::alternating_list(f, n, j.at("phi"), "phi");
  if (comps.size() != m) throw ParseError("m does not match the number of matrices in phi");
  try {
    return group::BaerGroup(bilinear::AltBilinearMap(f, n, std::move(comps)), p);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

inline json to_json(const group::SubgroupDescriptor& s) { return {{"U", to_json(s.u)}, {"X", to_json(s.x)}}; }

// --- witnesses

inline json kappa_witness(std::size_t kappa, const Subspace& w) { return {{"kappa", kappa}, {"W", to_json(w)}}; }

inline json lambda_witness(std::size_t lambda, const Subspace& u, const Subspace& v) {
  return {{"lambda", lambda}, {"U", to_json(u)}, {"V", to_json(v)}};
}

}  // namespace blt::io
