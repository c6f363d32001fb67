// blt: command-line front end for the connectivity toolkit.
//
// Exit codes: 0 success / all rows PASS, 1 verification failure, 2 usage, parse or guard error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "blt/altspace.hpp"
#include "blt/bilinear.hpp"
#include "blt/error.hpp"
#include "blt/graph.hpp"
#include "blt/group.hpp"
#include "blt/io.hpp"
#include "blt/verify.hpp"

namespace {

using nlohmann::json;
using namespace blt;

struct Common {
  unsigned q = 3;
  unsigned p = 3;
  std::string format = "json";
  bool force = false;
};

bool looks_like_json(const std::string& text) {
  auto i = text.find_first_not_of(" \t\r\n");
  return i != std::string::npos && text[i] == '{';
}

void warn_force(const Common& c) {
  if (c.force) std::cerr << "warning: --force lifts the search guards; this may take a very long time\n";
}

alt::SearchOptions search_options(const Common& c) {
  alt::SearchOptions o;
  o.force = c.force;
  return o;
}

void print(const json& j, const Common& c) {
  if (c.format == "json") {
    std::cout << j.dump() << '\n';
    return;
  }
  for (auto it = j.begin(); it != j.end(); ++it) std::cout << it.key() << ": " << it.value().dump() << '\n';
}

// A space from matrix-space JSON or from an edge-list graph file.
alt::AltMatrixSpace load_space(const std::string& path, const Common& c) {
  const auto text = io::read_file(path);
  if (looks_like_json(text)) return io::space_from_json(io::parse_json(text));
  return alt::space_from_graph(graph::parse_graph(text), gf::Field(c.q));
}

// A group from group JSON or from an edge-list graph file.
group::BaerGroup load_group(const std::string& path, const Common& c) {
  const auto text = io::read_file(path);
  if (looks_like_json(text)) return io::group_from_json(io::parse_json(text));
  if (c.p % 2 == 0) throw ParseError("p must be an odd prime");
  return group::group_from_graph(graph::parse_graph(text), c.p);
}

json separator_json(const graph::VertexCut& cut) {
  json s = json::array();
  for (auto v : cut.separator) s.push_back(v + 1);
  return s;
}

int cmd_graph_conn(const std::string& path, const Common& c) {
  const auto g = graph::parse_graph(io::read_file(path));
  const auto vc = graph::vertex_connectivity(g);
  const auto ec = graph::edge_connectivity(g);
  json cut = json::array();
  for (auto [a, b] : ec.cut) cut.push_back({a + 1, b + 1});
  json out = {{"kappa", vc.value}, {"lambda", ec.value}, {"delta", graph::min_degree(g)}};
  out["separator"] = vc.complete ? json(nullptr) : separator_json(vc);
  out["complete"] = vc.complete;
  out["cut"] = cut;
  print(out, c);
  return 0;
}

int cmd_space(const std::string& sub, const std::string& path, const Common& c, const std::vector<std::size_t>& sep) {
  warn_force(c);
  if (sub == "build") {
    if (!sep.empty()) {
      print(io::to_json(alt::kappa_gt_lambda_instance(sep[0], sep[1], gf::Field(c.q)).space), c);
      return 0;
    }
    if (path.empty()) throw ParseError("space build needs a graph file or --counterexample S T");
    print(io::to_json(alt::space_from_graph(graph::parse_graph(io::read_file(path)), gf::Field(c.q))), c);
    return 0;
  }
  if (path.empty()) throw ParseError("space " + sub + " needs an input file");
  const auto a = load_space(path, c);
  if (sub == "kappa") {
    const auto r = alt::kappa_space(a, search_options(c));
    print(io::kappa_witness(r.value, r.w), c);
  } else if (sub == "lambda") {
    const auto r = alt::lambda_space(a, search_options(c));
    print(io::lambda_witness(r.value, r.u, r.v), c);
  } else if (sub == "delta") {
    print({{"delta", alt::delta_space(a)}}, c);
  } else if (sub == "fullconn") {
    print({{"fully_connected", alt::is_fully_connected(a)}}, c);
  } else {
    throw ParseError("unknown space subcommand " + sub);
  }
  return 0;
}

int cmd_group(const std::string& sub, const std::string& path, const Common& c, const std::string& element, bool fast) {
  warn_force(c);
  if (path.empty()) throw ParseError("group " + sub + " needs an input file");
  const auto P = load_group(path, c);
  group::OracleOptions oo;
  oo.force = c.force;
  group::ScanOptions so;
  so.force = c.force;
  const bool literal = !fast && (c.force || P.order() <= oo.max_order);
  if (sub == "build") {
    json j = io::to_json(P);
    j["order"] = std::to_string(P.p()) + "^" + std::to_string(P.n() + P.m());
    j["order_value"] = P.order();
    print(j, c);
  } else if (sub == "kappa") {
    if (literal) {
      const auto r = group::kappa_group(P, oo);
      print({{"kappa", r.value}, {"path", "structured"}, {"S", io::to_json(r.subgroup)}}, c);
    } else {
      print({{"kappa", group::kappa_group_fast(P, search_options(c))}, {"path", "fast"}}, c);
    }
  } else if (sub == "lambda") {
    if (literal) {
      const auto r = group::lambda_group(P, oo);
      print({{"lambda", r.value}, {"path", "structured"}, {"N", io::to_json(r.normal)}}, c);
    } else {
      print({{"lambda", group::lambda_group_fast(P, search_options(c))}, {"path", "fast"}}, c);
    }
  } else if (sub == "delta") {
    if (!element.empty()) {
      const auto g = group::parse_element(P, element);
      print({{"element", group::format_element(g)}, {"centralizer_order", group::centralizer_order(P, g, so)},
             {"deg", group::deg_element(P, g, so)}},
            c);
    } else {
      print({{"delta", group::delta_group(P, so)}}, c);
    }
  } else if (sub == "decompose") {
    const auto d = group::is_centrally_decomposable(P, oo);
    json j = {{"decomposable", d.decomposable}};
    if (d.witness) {
      j["J"] = io::to_json(d.witness->first);
      j["K"] = io::to_json(d.witness->second);
    }
    print(j, c);
  } else {
    throw ParseError("unknown group subcommand " + sub);
  }
  return 0;
}

unsigned default_threads() {
  if (const char* env = std::getenv("BLT_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw ParseError("BLT_THREADS must be a positive integer");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int cmd_counterexample(std::size_t s, std::size_t t, const Common& c) {
  const auto rep = verify::counterexample(s, t, c.q);
  print(verify::to_json(rep), c);
  return rep.separation() && rep.fully_connected ? 0 : 1;
}

int cmd_verify(verify::Options opt, const Common& c, const std::string& out_path) {
  warn_force(c);
  std::ofstream csv;
  if (!out_path.empty()) {
    csv.open(out_path + ".csv");
    if (!csv) throw ParseError("cannot write " + out_path + ".csv");
    csv << verify::kCsvHeader << '\n';
  }
  std::vector<verify::Row> rows;
  if (c.format == "csv") std::cout << verify::kCsvHeader << '\n';
  if (c.format == "text") std::cout << verify::kTextHeader << '\n';
  verify::StageTimes times;
  const auto sum = verify::run(
      opt,
      [&](const verify::Row& r) {
        if (csv.is_open()) csv << verify::csv_row(r) << '\n' << std::flush;
        if (c.format == "csv") std::cout << verify::csv_row(r) << '\n' << std::flush;
        if (c.format == "text") std::cout << verify::text_row(r) << '\n' << std::flush;
        rows.push_back(r);
      },
      &times);
  const std::string report = verify::json_report(opt, rows, sum);
  if (!out_path.empty()) {
    std::ofstream js(out_path + ".json");
    if (!js) throw ParseError("cannot write " + out_path + ".json");
    js << report;
  }
  if (c.format == "json") std::cout << report;
  if (c.format == "text")
    std::cout << sum.rows << " rows, " << sum.pass << " PASS, " << sum.fail << " FAIL"
              << (sum.group_skipped ? ", group level skipped on " + std::to_string(sum.group_skipped) + " rows (guard)" : "") << '\n';
  std::cerr << "stage seconds: graph " << times.graph << ", space " << times.space << ", map " << times.map << ", group "
            << times.group << '\n';
  return sum.fail == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connectivity parameters for graphs, alternating matrix spaces, bilinear maps and p-groups"};
  app.require_subcommand(1);
  Common c;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--q", c.q, "field size (odd prime)")->capture_default_str();
    sub->add_option("--p", c.p, "group prime (odd)")->capture_default_str();
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "text", "csv"}))->capture_default_str();
    sub->add_flag("--force", c.force, "lift search guards");
  };

  std::string path, element;
  std::vector<std::size_t> sep;
  bool fast = false;

  auto* gc = app.add_subcommand("graph-conn", "vertex/edge connectivity and minimum degree of an edge-list graph");
  gc->add_option("file", path, "edge-list file")->required();
  add_common(gc);

  auto* sp = app.add_subcommand("space", "alternating matrix space commands");
  std::string space_sub;
  sp->add_option("action", space_sub, "build|kappa|lambda|delta|fullconn")
      ->required()
      ->check(CLI::IsMember({"build", "kappa", "lambda", "delta", "fullconn"}));
  sp->add_option("file", path, "matrix-space JSON or edge-list graph");
  sp->add_option("--counterexample", sep, "build the kappa > lambda instance for S T")->expected(2);
  add_common(sp);

  auto* gp = app.add_subcommand("group", "Baer group commands");
  std::string group_sub;
  gp->add_option("action", group_sub, "build|kappa|lambda|delta|decompose")
      ->required()
      ->check(CLI::IsMember({"build", "kappa", "lambda", "delta", "decompose"}));
  gp->add_option("file", path, "group JSON or edge-list graph");
  gp->add_option("--element", element, "element literal v1,...;u1,... (delta: report its degree)");
  gp->add_flag("--fast", fast, "use the commutator-map path for kappa/lambda");
  add_common(gp);

  auto* vf = app.add_subcommand("verify", "sweep labeled graphs and check every level");
  verify::Options vopt;
  std::string level = "all", out_path;
  std::optional<unsigned> threads;
  vf->add_option("--max-n", vopt.max_n, "largest vertex count (2..6)")->check(CLI::Range(2, 6))->capture_default_str();
  vf->add_option("--threads", threads, "worker threads (default: BLT_THREADS, else all cores)")->check(CLI::PositiveNumber);
  vf->add_option("--seed", vopt.seed, "seed for the isometric relabeling at the map level")->capture_default_str();
  vf->add_option("--level", level, "graph|space|map|group|all")
      ->check(CLI::IsMember({"graph", "space", "map", "group", "all"}))
      ->capture_default_str();
  vf->add_option("--out", out_path, "write PATH.csv and PATH.json");
  vf->add_option("--counterexample", sep, "report the kappa > lambda instance for S T instead of sweeping")->expected(2);
  add_common(vf);
  c.format = "text";
  vf->get_option("--format")->default_str("text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*gc) {
      if (gc->get_option("--format")->count() == 0) c.format = "json";
      return cmd_graph_conn(path, c);
    }
    if (*sp) {
      if (sp->get_option("--format")->count() == 0) c.format = "json";
      return cmd_space(space_sub, path, c, sep);
    }
    if (*gp) {
      if (gp->get_option("--format")->count() == 0) c.format = "json";
      return cmd_group(group_sub, path, c, element, fast);
    }
    if (!sep.empty()) {
      if (vf->get_option("--format")->count() == 0) c.format = "json";
      return cmd_counterexample(sep[0], sep[1], c);
    }
    vopt.q = c.q;
    vopt.p = c.p;
    vopt.force = c.force;
    vopt.level = verify::parse_level(level);
    vopt.threads = threads ? *threads : default_threads();
    return cmd_verify(vopt, c, out_path);
  } catch (const GuardExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
