// Command-line front end. Exit codes: 0 success or feasible, 1 infeasible,
// 2 invalid input (with a JSON error on stderr).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "recdual/boundary_graph.hpp"
#include "recdual/generators.hpp"
#include "recdual/io.hpp"
#include "recdual/lp_layout.hpp"
#include "recdual/path_set.hpp"
#include "recdual/strips.hpp"
#include "recdual/svg.hpp"
#include "recdual/verify.hpp"

using namespace recdual;
using Json = nlohmann::ordered_json;

namespace {

struct Failure {
  int code;
  std::string kind, message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{2, "io", "cannot read " + path};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Failure{2, "io", "cannot write " + path};
  out << text;
}

InstanceFile load(const std::string& path) { return parse_instance(read_file(path)); }

void require_valid(const ValidationReport& r, const std::string& what) {
  if (!r.ok()) throw Failure{2, "invalid_input", what + ": " + r.violations.front()};
}

/// Checks the graph, the labeling and the fixed rectangles that are present.
void require_instance(const InstanceFile& f) {
  require_valid(validate_ptp(f.graph), "graph");
  if (f.rel) require_valid(validate_rel(f.graph, *f.rel), "rel");
  if (f.rel && !f.fixed.fixed.empty()) require_valid(check_partial(f.graph, *f.rel, f.fixed), "fixed");
}

Rel rel_or_compute(const InstanceFile& f) { return f.rel ? *f.rel : compute_rel(f.graph); }

Json infeasible_json(const Infeasible& inf) {
  Json w = Json::array();
  for (const DiffConstraint& c : inf.witness) w.push_back({{"a", c.a}, {"b", c.b}, {"c", c.c.str()}});
  Json j{{"feasible", false}, {"reason", inf.reason}};
  if (!w.empty()) j["witness"] = w;
  return j;
}

int cmd_validate(const std::string& path) {
  InstanceFile f = load(path);
  Json rep{{"ok", true}, {"violations", Json::array()}};
  auto add = [&](const std::string& what, const std::vector<std::string>& vs) {
    for (const auto& v : vs) rep["violations"].push_back(what + ": " + v);
  };
  add("graph", validate_ptp(f.graph).violations);
  if (rep["violations"].empty()) {
    if (f.rel) add("rel", validate_rel(f.graph, *f.rel).violations);
    if (f.rel && !f.fixed.fixed.empty() && rep["violations"].empty())
      add("fixed", check_partial(f.graph, *f.rel, f.fixed).violations);
    if (f.dual) {
      for (const auto& v : check_contact_rep(f.graph, *f.dual).violations) rep["violations"].push_back("dual: " + v.str());
      if (f.rel && rep["violations"].empty()) add("dual", check_realizes(f.graph, *f.rel, *f.dual).violations);
      for (const auto& [v, r] : f.fixed.fixed)
        if (f.dual->rects[v] != r) rep["violations"].push_back("dual: vertex " + std::to_string(v) + " moved");
    }
  }
  rep["ok"] = rep["violations"].empty();
  std::cout << rep.dump(2) << "\n";
  return rep["ok"].get<bool>() ? 0 : 2;
}

int cmd_rel(const std::string& path, const std::string& out) {
  InstanceFile f = load(path);
  require_valid(validate_ptp(f.graph), "graph");
  if (f.rel) {
    require_valid(validate_rel(f.graph, *f.rel), "rel");
  } else {
    f.rel = compute_rel(f.graph);
  }
  write_out(out, serialize_instance(f));
  return 0;
}

int cmd_dual(const std::string& path, bool minimize, const std::string& out) {
  InstanceFile f = load(path);
  require_instance(f);
  f.rel = rel_or_compute(f);
  f.dual = compute_dual(f.graph, *f.rel, minimize);
  write_out(out, serialize_instance(f));
  return 0;
}

int cmd_extend(const std::string& path, const std::string& method, const std::string& out) {
  InstanceFile f = load(path);
  if (!f.rel) throw Failure{2, "invalid_input", "extend needs a rel"};
  require_instance(f);
  Outcome<Dual> r = Infeasible{};
  if (method == "lp") {
    r = extend_via_lp(f.graph, *f.rel, f.fixed);
  } else if (method == "paths") {
    auto ps = compute_boundary_path_set(f.graph, *f.rel, f.fixed);
    if (feasible(ps))
      r = extend_from_path_set(f.graph, *f.rel, std::get<BoundaryPathSet>(ps));
    else
      r = std::get<Infeasible>(ps);
  } else {
    r = decide_and_extend(f.graph, *f.rel, f.fixed);
  }
  if (!feasible(r)) {
    std::cout << infeasible_json(std::get<Infeasible>(r)).dump(2) << "\n";
    return 1;
  }
  f.dual = std::get<Dual>(r);
  write_out(out, serialize_instance(f));
  return 0;
}

int cmd_simul(const std::vector<std::string>& paths, const std::string& share, const std::string& out) {
  std::vector<SimultaneousInstance> ins;
  for (const auto& p : paths) {
    InstanceFile f = load(p);
    require_instance(f);
    ins.push_back({f.graph, rel_or_compute(f)});
  }
  Json sj;
  try {
    sj = Json::parse(read_file(share));
  } catch (const nlohmann::json::exception& e) {
    throw Failure{2, "invalid_input", std::string("share file: ") + e.what()};
  }
  // {"shared": [[[graph, vertex], [graph, vertex]], ...]}
  detail::only_keys(sj, {"shared"}, "share file");
  std::vector<std::pair<SharedRef, SharedRef>> pairs;
  auto ref = [](const Json& j) {
    if (!j.is_array() || j.size() != 2) throw InvalidInput("shared entries are [graph, vertex]");
    return SharedRef{static_cast<int>(detail::json_int(j[0], "shared")),
                     static_cast<VertexId>(detail::json_int(j[1], "shared"))};
  };
  if (!sj.contains("shared") || !sj["shared"].is_array()) throw InvalidInput("share file needs a \"shared\" array");
  for (const auto& p : sj["shared"]) {
    if (!p.is_array() || p.size() != 2) throw InvalidInput("shared pairs are [[g, v], [g, v]]");
    pairs.emplace_back(ref(p[0]), ref(p[1]));
  }
  auto r = simultaneous(ins, pairs);
  if (!feasible(r)) {
    std::cout << infeasible_json(std::get<Infeasible>(r)).dump(2) << "\n";
    return 1;
  }
  Json j{{"feasible", true}, {"duals", Json::array()}};
  for (const Dual& d : std::get<std::vector<Dual>>(r)) j["duals"].push_back(dual_to_json(d));
  write_out(out, j.dump(2) + "\n");
  return 0;
}

int cmd_render(const std::string& path, const std::string& out, bool strips, bool labels) {
  InstanceFile f = load(path);
  require_instance(f);
  SvgOptions opt;
  opt.labels = labels;
  Rel rel;
  if (f.rel) {
    rel = *f.rel;
    opt.rel = &rel;
  }
  if (strips) {
    if (!f.rel) throw Failure{2, "invalid_input", "strips need a rel"};
    auto framed = framed_partial(f.graph, *f.rel, f.fixed);
    if (!feasible(framed)) throw Failure{1, "infeasible", std::get<Infeasible>(framed).reason};
    opt.strips = strip_outlines(f.graph, std::get<PartialDual>(framed));
  }
  for (const auto& [v, r] : f.fixed.fixed) opt.fixed.push_back(v);
  write_out(out, f.dual ? render_svg(*f.dual, opt) : render_svg(f.fixed, opt));
  return 0;
}

int cmd_gen(int n, int h, std::uint64_t seed, bool infeasible, const std::string& out) {
  if (n < 5) throw Failure{2, "invalid_input", "--n must be at least 5"};
  Instance in = sample_instance(n, h, seed);
  if (infeasible) {
    // Perturbed seeds until one has no extension.
    bool found = false;
    for (std::uint64_t k = 0; k < 1000 && !found; ++k) {
      in = adversarial_instance(n, h, seed + k * 7919, 2);
      found = !feasible(decide_and_extend(in.graph, in.rel, in.partial));
    }
    if (!found) throw Failure{2, "generator", "no infeasible instance found for these parameters"};
  }
  InstanceFile f{in.graph, in.rel, in.partial, std::nullopt, std::nullopt, static_cast<std::int64_t>(seed)};
  write_out(out, serialize_instance(f));
  return 0;
}

void report(const Failure& f) {
  std::cerr << Json{{"error", f.kind}, {"message", f.message}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rectangular duals and their partial extensions"};
  app.require_subcommand(1);
  std::string file, out, method = "fast", share;
  std::vector<std::string> files;
  bool minimize = false, strips = false, labels = false, infeasible = false;
  int n = 0, h = 0;
  std::uint64_t seed = 0;

  auto* validate = app.add_subcommand("validate", "check an instance file");
  validate->add_option("file", file)->required();
  auto* rel = app.add_subcommand("rel", "compute a labeling or check the given one");
  rel->add_option("file", file)->required();
  rel->add_option("-o,--output", out);
  auto* dual = app.add_subcommand("dual", "compute a rectangular dual");
  dual->add_option("file", file)->required();
  dual->add_flag("--minimize", minimize, "smallest integer width and height");
  dual->add_option("-o,--output", out);
  auto* extend = app.add_subcommand("extend", "extend the fixed rectangles to a dual");
  extend->add_option("file", file)->required();
  extend->add_option("--method", method)->check(CLI::IsMember({"lp", "paths", "fast"}));
  extend->add_option("-o,--output", out);
  auto* simul = app.add_subcommand("simul", "duals of several graphs agreeing on shared vertices");
  simul->add_option("files", files)->required();
  simul->add_option("--share", share)->required();
  simul->add_option("-o,--output", out);
  auto* render = app.add_subcommand("render", "draw the dual or the fixed rectangles as SVG");
  render->add_option("file", file)->required();
  render->add_option("-o,--output", out)->required();
  render->add_flag("--strips", strips);
  render->add_flag("--labels", labels);
  auto* gen = app.add_subcommand("gen", "sample an instance");
  gen->set_help_flag("--help", "print this help");
  gen->add_option("--n", n)->required();
  gen->add_option("--h", h)->required();
  gen->add_option("--seed", seed);
  gen->add_flag("--infeasible", infeasible);
  gen->add_option("-o,--output", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report({2, "usage", e.what()});
    return 2;
  }
  try {
    if (*validate) return cmd_validate(file);
    if (*rel) return cmd_rel(file, out);
    if (*dual) return cmd_dual(file, minimize, out);
    if (*extend) return cmd_extend(file, method, out);
    if (*simul) return cmd_simul(files, share, out);
    if (*render) return cmd_render(file, out, strips, labels);
    if (*gen) return cmd_gen(n, h, seed, infeasible, out);
  } catch (const Failure& f) {
    report(f);
    return f.code;
  } catch (const InvalidInput& e) {
    report({2, "invalid_input", e.what()});
    return 2;
  } catch (const InvalidDual& e) {
    report({2, "invalid_dual", e.what()});
    return 2;
  } catch (const std::exception& e) {
    report({2, "internal", e.what()});
    return 2;
  }
  return 2;
}
