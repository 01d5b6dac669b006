#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gcov/fibration.hpp"
#include "json.hpp"

using namespace gcov;
using json = nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  Group G;
  TargetCover target;
  Bounds bounds;
  std::string seed_text;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void reject_unknown(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) throw UsageError(where + ": unknown key '" + it.key() + "'");
  }
}

Group load_config_group(const json& g) {
  if (g.is_string()) return load_group(g.get<std::string>());
  if (g.is_object()) {
    reject_unknown(g, {"table"}, "group");
    return load_group_file(g.at("table").get<std::string>());
  }
  throw UsageError("group: expected a string or {\"table\": path}");
}

Config load_config(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
  if (!j.is_object()) throw UsageError(path + ": top level must be an object");
  reject_unknown(j, {"group", "target", "bounds", "seed", "sampling_seed"}, path);
  Config c;
  if (!j.contains("group") || !j.contains("target")) throw UsageError(path + ": 'group' and 'target' are required");
  c.G = load_config_group(j["group"]);
  for (auto& comp : j["target"]) {
    std::vector<Elem> m;
    for (auto& e : comp) m.push_back(e.is_number_integer() ? e.get<int>() : c.G.parse(e.get<std::string>()));
    for (Elem e : m)
      if (!c.G.valid(e)) throw UsageError("target: element out of range");
    c.target.components.push_back(m);
  }
  if (j.contains("bounds")) {
    const json& b = j["bounds"];
    reject_unknown(b, {"max_cuts", "max_block_size", "vertex_budget", "coset_budget", "slack"}, "bounds");
    c.bounds.max_cuts = b.value("max_cuts", c.bounds.max_cuts);
    c.bounds.max_block_size = b.value("max_block_size", c.bounds.max_block_size);
    c.bounds.vertex_budget = b.value("vertex_budget", c.bounds.vertex_budget);
    c.bounds.coset_budget = b.value("coset_budget", c.bounds.coset_budget);
    c.bounds.slack = b.value("slack", c.bounds.slack);
    if (c.bounds.max_cuts < 0 || c.bounds.max_block_size <= 0 || c.bounds.vertex_budget <= 0 ||
        c.bounds.coset_budget <= 0 || c.bounds.slack < 0)
      throw UsageError("bounds must be positive");
  }
  c.bounds.sampling_seed = j.value("sampling_seed", 0u);
  if (j.contains("seed") && !j["seed"].is_null()) c.seed_text = j["seed"].get<std::string>();
  if (!realizable(c.G, c.target)) throw UsageError("target is not realizable over " + c.G.describe());
  return c;
}

Param start_param(const Config& c, const std::string& override_text) {
  const std::string& text = override_text.empty() ? c.seed_text : override_text;
  if (text.empty()) return canonicalize(seed_parameterization(c.G, c.target)).param;
  try {
    return parse_param(c.G, c.target, text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("parameterization: ") + e.what());
  }
}

std::string bounds_line(const Bounds& b) {
  std::ostringstream o;
  o << "bounds max_cuts=" << b.max_cuts << " slack=" << b.slack << " vertex_budget=" << b.vertex_budget
    << " coset_budget=" << b.coset_budget;
  return o.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_validate(const Config& c, const std::string& param) {
  Param p = start_param(c, param);
  Report r = validate(c.G, p, c.target);
  if (r.ok()) {
    std::cout << "valid " << key_hex(canonical_key(p)) << "\n";
    return 0;
  }
  for (auto& s : r.problems) std::cout << "invalid: " << s << "\n";
  return 1;
}

int cmd_apply(const Config& c, const std::string& param, const std::string& path_text) {
  Param p = start_param(c, param);
  std::vector<Move> path;
  try {
    path = parse_path(c.G, path_text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("path: ") + e.what());
  }
  std::cout << "start " << key_hex(canonical_key(p)) << "\n" << to_text(c.G, p) << "\n";
  for (size_t i = 0; i < path.size(); ++i) {
    try {
      p = apply_move(c.G, p, path[i]);
    } catch (const MoveError& e) {
      std::cout << "step " << i + 1 << " " << format_move(c.G, path[i]) << " failed: " << e.what() << "\n";
      return 1;
    }
    std::cout << "step " << i + 1 << " " << format_move(c.G, path[i]) << " -> " << key_hex(canonical_key(p)) << "\n"
              << to_text(c.G, p) << "\n";
  }
  return 0;
}

int cmd_orbit(const Config& c) {
  auto t0 = std::chrono::steady_clock::now();
  TwoComplex g = build_graph(c.G, c.target, c.bounds);
  auto valid = enumerate_valid_vertices(c.G, c.target, c.bounds);
  auto conn = check_connected(g, valid);
  std::cout << bounds_line(c.bounds) << "\n"
            << "orbit vertices=" << g.vertex_count() << " edges=" << g.edge_count() << " valid=" << valid.size()
            << " unreached=" << conn.unreached.size() << " time=" << seconds_since(t0) << "s\n";
  for (auto& k : conn.unreached) std::cout << "unreached " << key_hex(k) << "\n";
  return conn.unreached.empty() ? 0 : 1;
}

int cmd_verify_relations(const Config& c) {
  auto t0 = std::chrono::steady_clock::now();
  TwoComplex g = build_graph(c.G, c.target, c.bounds);
  std::map<std::string, std::pair<long, long>> per;  // schema -> (instances, failures)
  for (auto& s : schema_names()) per[s] = {0, 0};
  for (int v = 0; v < g.vertex_count(); ++v)
    for (auto& inst : enumerate_all_instances(c.G, g.vertex(v), c.bounds)) {
      auto& [n, f] = per[inst.schema];
      ++n;
      if (!verify_closure(c.G, g.vertex(v), inst)) {
        ++f;
        std::cout << "open " << inst.schema << " at " << key_hex(inst.base) << ": " << format_path(c.G, inst.loop)
                  << "\n";
      }
    }
  long total = 0, failures = 0;
  std::cout << bounds_line(c.bounds) << "\nvertices=" << g.vertex_count() << "\n";
  for (auto& s : schema_names()) {
    auto [n, f] = per[s];
    std::cout << "schema " << s << ": instances=" << n << " failures=" << f << "\n";
    total += n;
    failures += f;
  }
  std::cout << "total instances=" << total << " failures=" << failures << " time=" << seconds_since(t0) << "s\n";
  return failures == 0 ? 0 : 1;
}

int cmd_complex(const Config& c, bool verify, const std::string& dump_path) {
  auto t0 = std::chrono::steady_clock::now();
  BuildStats st;
  TwoComplex cx = build_bounded(c.G, c.target, c.bounds, &st);
  if (!dump_path.empty()) {
    std::ofstream out(dump_path);
    if (!out) throw UsageError("cannot write " + dump_path);
    out << cx.dump();
  }
  std::cout << bounds_line(c.bounds) << "\n"
            << "complex vertices=" << cx.vertex_count() << " bfs_vertices=" << cx.bfs_vertex_count()
            << " edges=" << cx.edge_count() << " cells=" << cx.cell_count() << " instances=" << st.instances
            << " out_of_bounds=" << st.cells_out_of_bounds << " failed=" << st.cells_failed << "\n";
  if (!verify) return st.cells_failed == 0 ? 0 : 1;
  auto valid = enumerate_valid_vertices(c.G, c.target, c.bounds);
  auto conn = check_connected(cx, valid);
  TrivialityVerdict v;
  if (conn.connected) v = prove_trivial(pi1_presentation(cx), c.bounds.coset_budget);
  std::cout << "vertices=" << cx.vertex_count() << " connected=" << (conn.connected ? "true" : "false")
            << " pi1=" << (conn.connected ? status_name(v.status) : "n/a") << "\n";
  if (conn.connected) std::cout << "verdict " << v.describe() << "\n";
  for (auto& k : conn.unreached) std::cout << "unreached " << key_hex(k) << "\n";
  std::cout << "time=" << seconds_since(t0) << "s\n";
  return conn.connected && v.status == TrivialityVerdict::Status::ProvenTrivial && st.cells_failed == 0 ? 0 : 1;
}

int cmd_fiber(const Config& c, const std::string& param, bool no_t) {
  Param p = start_param(c, param);
  Fiber f = compute_fiber(c.G, c.target, p, c.bounds, FiberOptions{!no_t});
  FiberReport r = check_fiber(f, c.bounds.coset_budget);
  std::cout << r.line(f) << "\n";
  return r.connected && r.pi1.status == TrivialityVerdict::Status::ProvenTrivial ? 0 : 1;
}

int cmd_lifting(const Config& c, const std::string& param) {
  Param base = project(start_param(c, param));
  const Group E = Group::cyclic(1);
  bool ok = true;
  for (auto& m : enumerate_moves(E, base, c.bounds)) {
    if (m.kind != MoveKind::Z && m.kind != MoveKind::B && m.kind != MoveKind::F) continue;
    if (m.inverse) continue;
    SquareReport r = check_lifting_squares(c.G, c.target, base, m, c.bounds);
    std::cout << r.line() << " lifts=" << r.lifts << " no_lift=" << r.no_lift << " recipe=" << r.recipe_ok << "\n";
    ok = ok && r.fail == 0;
  }
  return ok ? 0 : 1;
}

int cmd_export(const Config& c, const std::string& format, const std::string& param, bool whole_complex) {
  if (whole_complex) {
    if (format != "text") throw UsageError("export --complex supports text only");
    std::cout << build_bounded(c.G, c.target, c.bounds).dump();
    return 0;
  }
  Param p = start_param(c, param);
  std::cout << (format == "dot" ? to_dot(c.G, p) : to_text(c.G, p) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gcov: parameterizations of principal G-covers of genus-zero surfaces"};
  app.require_subcommand(1);
  std::string config_path, param, path_text, dump_path, format;
  bool no_t = false, whole_complex = false;
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (runs are deterministic regardless)");
  auto with_config = [&](CLI::App* s) { s->add_option("config", config_path, "config JSON")->required(); };
  auto with_param = [&](CLI::App* s) { s->add_option("--param", param, "parameterization text (default: seed)"); };

  auto* validate_cmd = app.add_subcommand("validate", "check a parameterization against the target");
  with_config(validate_cmd);
  with_param(validate_cmd);
  auto* apply_cmd = app.add_subcommand("apply", "apply a path of moves");
  with_config(apply_cmd);
  with_param(apply_cmd);
  apply_cmd->add_option("--path", path_text, "moves separated by ';', e.g. Z@b1;B@b1#1")->required();
  auto* orbit_cmd = app.add_subcommand("orbit", "bounded move closure of the seed");
  with_config(orbit_cmd);
  auto* rel_cmd = app.add_subcommand("verify-relations", "replay every relation instance");
  with_config(rel_cmd);
  auto* complex_cmd = app.add_subcommand("complex", "bounded 2-complex");
  complex_cmd->require_subcommand(1);
  auto* build_cmd = complex_cmd->add_subcommand("build", "build and count");
  with_config(build_cmd);
  build_cmd->add_option("--dump", dump_path, "write the V/E/C dump here");
  auto* verify_cmd = complex_cmd->add_subcommand("verify", "connectivity and fundamental group");
  with_config(verify_cmd);
  verify_cmd->add_option("--dump", dump_path, "write the V/E/C dump here");
  auto* fiber_cmd = app.add_subcommand("fiber", "fiber over the marking of a parameterization");
  with_config(fiber_cmd);
  with_param(fiber_cmd);
  fiber_cmd->add_flag("--no-T", no_t, "drop T edges (diagnostic)");
  auto* lifting_cmd = app.add_subcommand("lifting", "lifting squares over every base Z/B/F edge");
  with_config(lifting_cmd);
  with_param(lifting_cmd);
  auto* export_cmd = app.add_subcommand("export", "dot or text export");
  export_cmd->add_option("format", format, "dot|text")->required()->check(CLI::IsMember({"dot", "text"}));
  with_config(export_cmd);
  with_param(export_cmd);
  export_cmd->add_flag("--complex", whole_complex, "export the bounded complex dump");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    Config c = load_config(config_path);
    if (*validate_cmd) return cmd_validate(c, param);
    if (*apply_cmd) return cmd_apply(c, param, path_text);
    if (*orbit_cmd) return cmd_orbit(c);
    if (*rel_cmd) return cmd_verify_relations(c);
    if (*build_cmd) return cmd_complex(c, false, dump_path);
    if (*verify_cmd) return cmd_complex(c, true, dump_path);
    if (*fiber_cmd) return cmd_fiber(c, param, no_t);
    if (*lifting_cmd) return cmd_lifting(c, param);
    if (*export_cmd) return cmd_export(c, format, param, whole_complex);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const GroupError& e) {
    std::cerr << "error: group: " << e.what() << "\n";
    return 2;
  } catch (const ComplexError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
