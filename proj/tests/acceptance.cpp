// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any criterion fails.
//
// Worker count for the long sweep comes from BLT_THREADS, else all cores.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "blt/altspace.hpp"
#include "blt/bilinear.hpp"
#include "blt/graph.hpp"
#include "blt/group.hpp"
#include "blt/verify.hpp"

using namespace blt;
using gf::Field;
using gf::Matrix;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

unsigned worker_count() {
  if (const char* env = std::getenv("BLT_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<graph::Graph> labeled_graphs(std::size_t lo, std::size_t hi) {
  std::vector<graph::Graph> out;
  for (std::size_t n = lo; n <= hi; ++n)
    for (std::uint64_t mask = 1; mask <= verify::graph_count(n); ++mask) out.push_back(graph::graph_from_mask(n, mask));
  return out;
}

// Rows of criterion 1, kept for the degree bounds of criterion 5.
std::vector<verify::Row> g_space_rows;

struct GroupRecord {
  std::size_t kappa, lambda, delta, max_deg, n;
};
std::vector<GroupRecord> g_group_records;

struct SpaceRecord {
  std::size_t kappa, lambda, delta;
};
std::vector<SpaceRecord> g_random_records;

Outcome criterion1() {
  verify::Options opt;
  opt.max_n = 5;
  opt.q = 3;
  opt.level = verify::Level::space;
  opt.threads = worker_count();
  std::size_t mismatches = 0;
  auto sum = verify::run(opt, [&](const verify::Row& r) {
    g_space_rows.push_back(r);
    if (r.kappa_G != r.kappa_A || r.lambda_G != r.lambda_A) ++mismatches;
  });
  std::ostringstream d;
  d << sum.rows << " labeled graphs on 2..5 vertices, " << mismatches << " mismatches (" << opt.threads << " workers)";
  return {mismatches == 0 && sum.rows == 1 + 7 + 63 + 1023, d.str()};
}

Outcome criterion2() {
  std::size_t checked = 0, bad = 0;
  for (const auto& g : labeled_graphs(2, 4)) {
    auto a = alt::space_from_graph(g, Field(3));
    auto phi = bilinear::map_from_space(a);
    ++checked;
    if (alt::kappa_space(a).value != bilinear::kappa_map(phi).value || alt::lambda_space(a).value != bilinear::lambda_map(phi).value) ++bad;
  }
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 50; ++i) {
    const Field f(i % 2 ? 5 : 3);
    const std::size_t n = 2 + i % 3;
    const std::size_t m = std::min<std::size_t>(1 + (i / 3) % 4, n * (n - 1) / 2);
    auto a = alt::random_space(f, n, m, rng);
    auto phi = bilinear::map_from_space(a);
    const auto k = alt::kappa_space(a).value, l = alt::lambda_space(a).value;
    g_random_records.push_back({k, l, alt::delta_space(a)});
    ++checked;
    if (k != bilinear::kappa_map(phi).value || l != bilinear::lambda_map(phi).value) ++bad;
  }
  return {bad == 0, std::to_string(checked) + " spaces (71 graph-derived, 50 random), " + std::to_string(bad) + " mismatches"};
}

Outcome criterion3() {
  std::size_t checked = 0, bad = 0;
  for (const auto& g : labeled_graphs(2, 3)) {
    const auto P = group::group_from_graph(g, 3);
    const auto k = group::kappa_group(P).value;
    const auto l = group::lambda_group(P).value;
    ++checked;
    if (k != graph::vertex_connectivity(g).value || l != graph::edge_connectivity(g).value) ++bad;
    std::size_t max_deg = 0;
    for (std::uint64_t i = 0; i < P.order(); ++i) max_deg = std::max(max_deg, group::deg_element(P, P.element(i)));
    g_group_records.push_back({k, l, group::delta_group(P), max_deg, P.n()});
  }
  return {bad == 0 && checked == 8, std::to_string(checked) + " groups at p=3 via the structured oracle, " + std::to_string(bad) + " mismatches"};
}

Outcome criterion4() {
  std::size_t checked = 0, bad = 0;
  const Field f(3);
  for (const auto& g : labeled_graphs(2, 4)) {
    if (g.edge_count() > 4) continue;
    auto a = alt::space_from_graph(g, f);
    ++checked;
    if (alt::lambda_space(a).value != alt::lambda_space_oracle(a)) ++bad;
  }
  std::mt19937_64 rng(77);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 3 + i % 2;
    const std::size_t m = std::min<std::size_t>(1 + i % 4, n * (n - 1) / 2);
    auto a = alt::random_space(f, n, m, rng);
    ++checked;
    if (alt::lambda_space(a).value != alt::lambda_space_oracle(a)) ++bad;
  }
  return {bad == 0 && checked >= 100, std::to_string(checked) + " instances with m <= 4, n <= 4, q = 3, " + std::to_string(bad) + " mismatches"};
}

Outcome criterion5() {
  std::size_t violations = 0, checked = 0;
  for (const auto& r : g_space_rows) {
    ++checked;
    if (*r.kappa_A > *r.delta_A || *r.lambda_A > *r.delta_A) ++violations;
  }
  for (const auto& r : g_random_records) {
    ++checked;
    if (r.kappa > r.delta || r.lambda > r.delta) ++violations;
  }
  for (const auto& r : g_group_records) {
    ++checked;
    if (r.kappa > r.delta || r.lambda > r.delta || r.max_deg > r.n - 1) ++violations;
  }
  const bool complete = !g_space_rows.empty() && !g_group_records.empty();
  return {violations == 0 && complete, std::to_string(checked) + " spaces and groups from criteria 1-3, " + std::to_string(violations) + " violations"};
}

Outcome criterion6() {
  const auto rep = verify::counterexample(2, 2, 3);
  std::ostringstream d;
  d << "n=" << rep.n << " d=" << rep.d << " fully_connected=" << rep.fully_connected << " kappa=" << rep.kappa
    << " lambda=" << rep.lambda << " kappa_P=" << *rep.kappa_P << " lambda_P=" << *rep.lambda_P;
  return {rep.n == 4 && rep.fully_connected && rep.kappa == 3 && rep.lambda <= 2 && rep.separation(), d.str()};
}

Outcome criterion7() {
  std::ostringstream d;
  bool ok = true;
  for (auto [s, q] : {std::pair<std::size_t, unsigned>{2, 3}, {3, 3}, {2, 5}}) {
    const Field f(q);
    const auto c = alt::field_ext_full_space(s, f);
    // every nonzero combination of I, C, ..., C^{s-1}
    std::size_t members = 0, singular = 0;
    std::vector<gf::Elem> coeff(s, 0);
    while (true) {
      std::size_t t = s;
      while (t > 0 && ++coeff[t - 1] == q) coeff[--t] = 0;
      if (t == 0) break;
      Matrix m(f, s, s);
      for (std::size_t j = 0; j < s; ++j) m = m + c.regular[j].scaled(coeff[j]);
      ++members;
      if (gf::rank(m) != s) ++singular;
    }
    const bool full = alt::is_fully_connected(c.space) && c.space.dim() == s;
    ok = ok && singular == 0 && full;
    d << "(s=" << s << ",q=" << q << "): " << members << " members, " << singular << " singular, fully_connected=" << full << "; ";
  }
  return {ok, d.str()};
}

Outcome criterion8() {
  std::vector<group::BaerGroup> groups;
  for (const auto& g : labeled_graphs(2, 4))
    if (g.vertex_count() + g.edge_count() <= 5) groups.push_back(group::group_from_graph(g, 3));
  groups.push_back(group::group_from_graph(graph::complete_graph(2), 5));
  std::size_t failures = 0, exhaustive = 0;
  for (std::size_t idx = 0; idx < groups.size(); ++idx) {
    const auto& P = groups[idx];
    bool ok = group::check_associativity_sampled(P, 100000, 1000 + idx);
    if (P.order() <= 81 || P.p() == 5) {
      ok = ok && group::check_associativity_exhaustive(P, {.max_order = 125});
      ++exhaustive;
    }
    ok = ok && group::check_exponent(P);
    const auto derived = group::derived_subgroup_by_scan(P);
    const auto centre = group::center_by_scan(P);
    for (auto i : derived) ok = ok && centre.count(i) == 1;
    std::uint64_t pm = 1, pn = 1;
    for (std::size_t i = 0; i < P.m(); ++i) pm *= P.p();
    for (std::size_t i = 0; i < P.n(); ++i) pn *= P.p();
    ok = ok && derived.size() == pm && P.order() / derived.size() == pn;
    if (!ok) ++failures;
  }
  return {failures == 0, std::to_string(groups.size()) + " groups (" + std::to_string(exhaustive) +
                             " with exhaustive associativity), " + std::to_string(failures) + " failures"};
}

Outcome criterion9() {
  std::vector<alt::AltMatrixSpace> spaces;
  const Field f(3);
  for (auto g : {graph::cycle_graph(4), graph::path_graph(4), graph::star_graph(3), graph::complete_graph(4),
                 graph::Graph(4, {{0, 1}, {2, 3}}), graph::cycle_graph(5)})
    spaces.push_back(alt::space_from_graph(g, f));
  spaces.push_back(alt::kappa_gt_lambda_instance(2, 2, f).space);
  std::mt19937_64 rng(99);
  for (int i = 0; i < 3; ++i) spaces.push_back(alt::random_space(Field(5), 4, 2 + i, rng));
  std::size_t changed = 0, runs = 0;
  for (std::size_t s = 0; s < spaces.size(); ++s) {
    const auto& a = spaces[s];
    const auto k = alt::kappa_space(a).value, l = alt::lambda_space(a).value, d = alt::delta_space(a);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto b = alt::random_isometry_image(a, 31 * s + seed);
      ++runs;
      if (alt::kappa_space(b).value != k || alt::lambda_space(b).value != l || alt::delta_space(b) != d) ++changed;
    }
  }
  return {changed == 0, std::to_string(spaces.size()) + " spaces x 20 isometries, " + std::to_string(changed) + " changed values"};
}

Outcome criterion10() {
  auto report = [](unsigned threads) {
    verify::Options opt;
    opt.max_n = 4;
    opt.seed = 12345;
    opt.threads = threads;
    std::vector<verify::Row> rows;
    const auto sum = verify::run(opt, [&](const verify::Row& r) { rows.push_back(r); });
    return verify::csv_report(rows) + verify::json_report(opt, rows, sum);
  };
  const auto one = report(1), eight = report(8);
  return {one == eight, "max_n=4 reports at 1 and 8 threads: " + std::to_string(one.size()) + " bytes, " +
                            (one == eight ? "identical" : "different")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"graph/space equality, n <= 5, q = 3", criterion1},
      {"space/map equality", criterion2},
      {"map/group equality via the structured oracle, n <= 3, p = 3", criterion3},
      {"lambda equals its literal definition", criterion4},
      {"degree bounds", criterion5},
      {"kappa > lambda separation, s = t = 2, q = 3", criterion6},
      {"fully connected constructor", criterion7},
      {"group sanity", criterion8},
      {"isometry invariance", criterion9},
      {"determinism across thread counts", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].first << " | " << o.detail
              << " | " << secs << " s" << std::endl;
    if (!o.pass) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
