/**
 * @file verify.hpp
 * @brief Sweep over labeled graphs checking kappa / lambda level by level.
 *
 * Each row is one labeled graph on n vertices, identified by n and the bitmask of its edge
 * set over the pairs (0,1), (0,2), ..., (n-2,n-1). Rows are computed on a worker pool and
 * delivered to the caller strictly in id order, so reports do not depend on the thread count.
 */
#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "blt/altspace.hpp"
#include "blt/bilinear.hpp"
#include "blt/error.hpp"
#include "blt/graph.hpp"
#include "blt/group.hpp"

namespace blt::verify {

enum class Level { graph, space, map, group, all };

inline Level parse_level(const std::string& s) {
  if (s == "graph") return Level::graph;
  if (s == "space") return Level::space;
  if (s == "map") return Level::map;
  if (s == "group") return Level::group;
  if (s == "all") return Level::all;
  throw Error("unknown level '" + s + "' (expected graph|space|map|group|all)");
}

inline const char* level_name(Level l) {
  switch (l) {
    case Level::graph: return "graph";
    case Level::space: return "space";
    case Level::map: return "map";
    case Level::group: return "group";
    case Level::all: return "all";
  }
  return "?";
}

inline constexpr std::size_t kMaxVertices = 6;

struct Options {
  std::size_t max_n = 4;
  unsigned q = 3;
  unsigned p = 3;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  Level level = Level::all;
  bool force = false;  ///< also run the literal group oracle outside its guard
};

struct Row {
  std::size_t n = 0;
  std::uint64_t mask = 0;
  std::size_t m = 0;
  unsigned q = 0, p = 0;
  std::optional<std::size_t> kappa_G, lambda_G, delta_G;
  std::optional<std::size_t> kappa_A, lambda_A, delta_A;
  std::optional<std::size_t> kappa_phi, lambda_phi;
  std::optional<std::size_t> kappa_P, lambda_P;
  bool pass = true;

  std::string id() const { return std::to_string(n) + ":" + std::to_string(mask); }
};

/// Accumulated seconds per stage. Not part of the report files.
struct StageTimes {
  double graph = 0, space = 0, map = 0, group = 0;
};

struct Summary {
  std::size_t rows = 0, pass = 0, fail = 0, group_skipped = 0;
};

inline std::uint64_t graph_count(std::size_t n) { return (std::uint64_t{1} << (n * (n - 1) / 2)) - 1; }

struct Instance {
  std::size_t n;
  std::uint64_t mask;
};

inline std::vector<Instance> instances(std::size_t max_n) {
  if (max_n > kMaxVertices) throw Error("--max-n is capped at " + std::to_string(kMaxVertices));
  std::vector<Instance> out;
  for (std::size_t n = 2; n <= max_n; ++n)
    for (std::uint64_t mask = 1; mask <= graph_count(n); ++mask) out.push_back({n, mask});
  return out;
}

inline bool wants(Level chosen, Level l) { return chosen == Level::all || chosen == l; }

/// Computes one row. The seed drives an isometric relabeling of the space before the map level.
inline Row compute_row(const Instance& inst, const Options& opt, StageTimes* times = nullptr) {
  using clock = std::chrono::steady_clock;
  auto secs = [](clock::time_point a) { return std::chrono::duration<double>(clock::now() - a).count(); };
  const graph::Graph g = graph::graph_from_mask(inst.n, inst.mask);
  Row r;
  r.n = inst.n;
  r.mask = inst.mask;
  r.m = g.edge_count();
  r.q = opt.q;
  r.p = opt.p;
  StageTimes local;

  auto t = clock::now();
  r.kappa_G = graph::vertex_connectivity(g).value;
  r.lambda_G = graph::edge_connectivity(g).value;
  r.delta_G = graph::min_degree(g);
  local.graph += secs(t);

  // graph-derived instances are bounded by the vertex cap, so the altspace guards are lifted
  const alt::SearchOptions search{kMaxVertices, kMaxVertices * (kMaxVertices - 1) / 2, true};
  const gf::Field fq(opt.q);
  std::optional<alt::AltMatrixSpace> space;
  if (wants(opt.level, Level::space) || wants(opt.level, Level::map)) space = alt::space_from_graph(g, fq);

  if (wants(opt.level, Level::space)) {
    t = clock::now();
    r.kappa_A = alt::kappa_space(*space, search).value;
    r.lambda_A = alt::lambda_space(*space, search).value;
    r.delta_A = alt::delta_space(*space);
    local.space += secs(t);
  }
  if (wants(opt.level, Level::map)) {
    t = clock::now();
    const auto rotated = alt::random_isometry_image(*space, opt.seed ^ (inst.mask * 0x9e3779b97f4a7c15ULL + inst.n));
    const auto phi = bilinear::map_from_space(rotated);
    r.kappa_phi = bilinear::kappa_map(phi, search).value;
    r.lambda_phi = bilinear::lambda_map(phi, search).value;
    local.map += secs(t);
  }
  if (wants(opt.level, Level::group)) {
    t = clock::now();
    const auto P = group::group_from_graph(g, opt.p);
    group::OracleOptions oo;
    oo.force = opt.force;
    if (opt.force || P.order() <= oo.max_order) {
      r.kappa_P = group::kappa_group(P, oo).value;
      r.lambda_P = group::lambda_group(P, oo).value;
    }
    local.group += secs(t);
  }

  auto agree = [](std::initializer_list<std::optional<std::size_t>> xs) {
    std::optional<std::size_t> ref;
    for (const auto& x : xs) {
      if (!x) continue;
      if (ref && *ref != *x) return false;
      ref = x;
    }
    return true;
  };
  r.pass = agree({r.kappa_G, r.kappa_A, r.kappa_phi, r.kappa_P}) && agree({r.lambda_G, r.lambda_A, r.lambda_phi, r.lambda_P});
  if (times) {
    times->graph += local.graph;
    times->space += local.space;
    times->map += local.map;
    times->group += local.group;
  }
  return r;
}

/**
 * Runs the sweep. `emit` receives rows in id order as soon as every earlier row is done.
 * With threads <= 1 everything runs on the calling thread.
 */
inline Summary run(const Options& opt, const std::function<void(const Row&)>& emit, StageTimes* times = nullptr) {
  gf::Field check_q(opt.q);
  if (opt.p % 2 == 0) throw Error("p must be an odd prime");
  gf::Field check_p(opt.p);
  const auto todo = instances(opt.max_n);
  Summary sum;
  auto tally = [&](const Row& r) {
    ++sum.rows;
    r.pass ? ++sum.pass : ++sum.fail;
    if (wants(opt.level, Level::group) && !r.kappa_P) ++sum.group_skipped;
    emit(r);
  };

  const unsigned threads = std::max(1u, opt.threads);
  if (threads == 1) {
    for (const auto& inst : todo) tally(compute_row(inst, opt, times));
    return sum;
  }

  std::vector<std::optional<Row>> done(todo.size());
  std::vector<StageTimes> per_thread(threads);
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i; (i = next.fetch_add(1)) < todo.size();) {
        try {
          Row r = compute_row(todo[i], opt, &per_thread[t]);
          std::lock_guard lock(mu);
          done[i] = std::move(r);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!failure) failure = std::current_exception();
          next = todo.size();
        }
        cv.notify_one();
      }
    });

  std::size_t emitted = 0;
  while (emitted < todo.size()) {
    std::unique_lock lock(mu);
    cv.wait(lock, [&] { return failure || done[emitted].has_value(); });
    if (failure) break;
    Row r = std::move(*done[emitted]);
    done[emitted].reset();
    lock.unlock();
    tally(r);
    ++emitted;
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  if (times)
    for (const auto& s : per_thread) {
      times->graph += s.graph;
      times->space += s.space;
      times->map += s.map;
      times->group += s.group;
    }
  return sum;
}

// --- report writers

inline const char* kCsvHeader =
    "graph_id,n,m,q,p,kappa_G,lambda_G,delta_G,kappa_A,lambda_A,delta_A,kappa_phi,lambda_phi,kappa_P,lambda_P,status";

inline std::string csv_row(const Row& r) {
  std::ostringstream o;
  auto cell = [&](const std::optional<std::size_t>& x) {
    o << ',';
    if (x) o << *x;
  };
  o << r.id() << ',' << r.n << ',' << r.m << ',' << r.q << ',' << r.p;
  for (const auto* x : {&r.kappa_G, &r.lambda_G, &r.delta_G, &r.kappa_A, &r.lambda_A, &r.delta_A, &r.kappa_phi, &r.lambda_phi,
                        &r.kappa_P, &r.lambda_P})
    cell(*x);
  o << ',' << (r.pass ? "PASS" : "FAIL");
  return o.str();
}

inline nlohmann::json row_json(const Row& r) {
  nlohmann::json j = {{"graph_id", r.id()}, {"n", r.n}, {"m", r.m}, {"q", r.q}, {"p", r.p}};
  auto put = [&](const char* k, const std::optional<std::size_t>& x) { j[k] = x ? nlohmann::json(*x) : nlohmann::json(nullptr); };
  put("kappa_G", r.kappa_G);
  put("lambda_G", r.lambda_G);
  put("delta_G", r.delta_G);
  put("kappa_A", r.kappa_A);
  put("lambda_A", r.lambda_A);
  put("delta_A", r.delta_A);
  put("kappa_phi", r.kappa_phi);
  put("lambda_phi", r.lambda_phi);
  put("kappa_P", r.kappa_P);
  put("lambda_P", r.lambda_P);
  j["status"] = r.pass ? "PASS" : "FAIL";
  return j;
}

inline nlohmann::json params_json(const Options& opt) {
  return {{"max_n", opt.max_n}, {"q", opt.q}, {"p", opt.p}, {"seed", opt.seed}, {"level", level_name(opt.level)}, {"force", opt.force}};
}

inline nlohmann::json summary_json(const Summary& s) {
  return {{"rows", s.rows}, {"pass", s.pass}, {"fail", s.fail}, {"group_skipped", s.group_skipped}};
}

inline std::string text_row(const Row& r) {
  std::ostringstream o;
  auto cell = [&](const std::optional<std::size_t>& x) {
    o << ' ';
    o.width(3);
    if (x) o << *x;
    else o << '-';
  };
  o.width(10);
  o << std::left << r.id() << std::right;
  for (const auto* x : {&r.kappa_G, &r.lambda_G, &r.delta_G, &r.kappa_A, &r.lambda_A, &r.delta_A, &r.kappa_phi, &r.lambda_phi,
                        &r.kappa_P, &r.lambda_P})
    cell(*x);
  o << "  " << (r.pass ? "PASS" : "FAIL");
  return o.str();
}

/// The CSV report file: header plus one line per row.
inline std::string csv_report(const std::vector<Row>& rows) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& r : rows) out += csv_row(r) + "\n";
  return out;
}

/// The JSON report file.
inline std::string json_report(const Options& opt, const std::vector<Row>& rows, const Summary& sum) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& r : rows) list.push_back(row_json(r));
  const nlohmann::json report = {{"params", params_json(opt)}, {"rows", std::move(list)}, {"summary", summary_json(sum)}};
  return report.dump(1) + "\n";
}

inline const char* kTextHeader = "graph       kG  lG  dG  kA  lA  dA kph lph  kP  lP  status";

// --- the kappa > lambda instance

struct SeparationReport {
  std::size_t s = 0, t = 0, n = 0, d = 0;
  unsigned q = 0;
  bool fully_connected = false;
  std::size_t kappa = 0, lambda = 0;
  std::optional<std::size_t> kappa_P, lambda_P;
  bool separation() const { return lambda < kappa && kappa_P && lambda_P && *lambda_P < *kappa_P; }
};

/// Builds the instance for (s, t) over F_q, solves it exactly, and pushes it to the group level.
inline SeparationReport counterexample(std::size_t s, std::size_t t, unsigned q) {
  const gf::Field f(q);
  const auto inst = alt::kappa_gt_lambda_instance(s, t, f);
  SeparationReport rep;
  rep.s = s;
  rep.t = t;
  rep.n = s + t;
  rep.d = inst.d;
  rep.q = q;
  alt::SearchOptions force{kMaxVertices, 64, true};
  rep.fully_connected = alt::is_fully_connected(inst.space);
  rep.kappa = alt::kappa_space(inst.space, force).value;
  rep.lambda = alt::lambda_space(inst.space, force).value;
  const group::BaerGroup P(bilinear::map_from_space(inst.space), q);
  rep.kappa_P = group::kappa_group_fast(P, force);
  rep.lambda_P = group::lambda_group_fast(P, force);
  return rep;
}

inline nlohmann::json to_json(const SeparationReport& r) {
  nlohmann::json j = {{"s", r.s},         {"t", r.t},         {"n", r.n},
                      {"d", r.d},         {"q", r.q},         {"fully_connected", r.fully_connected},
                      {"kappa", r.kappa}, {"lambda", r.lambda}, {"separation", r.separation()}};
  j["kappa_P"] = r.kappa_P ? nlohmann::json(*r.kappa_P) : nlohmann::json(nullptr);
  j["lambda_P"] = r.lambda_P ? nlohmann::json(*r.lambda_P) : nlohmann::json(nullptr);
  return j;
}

}  // namespace blt::verify
