#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mse/mse.hpp"

using namespace mse;

namespace {

enum Exit { ok = 0, no = 1, usage = 2, limit = 3 };

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("cannot write '" + path + "'");
  out << text;
}

int answer(bool yes) {
  std::cout << "answer " << (yes ? "yes" : "no") << "\n";
  return yes ? ok : no;
}

// `grid n m sx sy tx ty p k`, with or without the leading word, or a file holding that line.
GridInstance parse_grid(const std::vector<std::string>& args) {
  std::vector<std::string> tok = args;
  if (tok.size() == 1) {
    std::istringstream in(detail::read_file(tok[0]));
    tok.clear();
    for (std::string w; in >> w;) {
      if (w.front() == '#') {
        std::getline(in, w);
        continue;
      }
      tok.push_back(w);
    }
  }
  if (!tok.empty() && tok[0] == "grid") tok.erase(tok.begin());
  if (tok.size() != 8) throw precondition_error("expected 'grid n m sx sy tx ty p k'");
  std::vector<std::int64_t> v;
  for (const auto& t : tok) {
    std::size_t used = 0;
    long long x = 0;
    try {
      x = std::stoll(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.size()) throw precondition_error("not an integer: '" + t + "'");
    v.push_back(x);
  }
  GridInstance gi{v[0], v[1], {v[2], v[3]}, {v[4], v[5]}, v[6], v[7]};
  gi.validate();
  return gi;
}

std::vector<VertexId> parse_ids(const std::string& list) {
  std::vector<VertexId> out;
  std::string tok;
  std::istringstream in(list);
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    const long long v = std::stoll(tok, &used);
    if (used != tok.size() || v < 0) throw precondition_error("bad vertex id '" + tok + "'");
    out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

std::string join(const std::vector<VertexId>& ids) {
  std::string s;
  for (VertexId v : ids) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum shared edges: solvers, grid criteria, reductions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "mse 1.0");

  // solve
  auto* solve = app.add_subcommand("solve", "decide an instance");
  std::string inst_path, sol_path, out_path, witness_path, method = "fpt";
  unsigned jobs = 1;
  solve->add_option("instance", inst_path, "instance file")->required();
  solve->add_option("--method", method, "exhaustive|enum|fpt")
      ->check(CLI::IsMember({"exhaustive", "enum", "fpt"}));
  solve->add_option("--witness", witness_path, "write a witness solution here");
  solve->add_option("--jobs", jobs, "worker threads for fpt")->check(CLI::Range(1u, 256u));

  auto* verify = app.add_subcommand("verify", "check a solution against an instance");
  verify->add_option("instance", inst_path)->required();
  verify->add_option("solution", sol_path)->required();

  std::vector<std::string> grid_args;
  auto* gdecide = app.add_subcommand("grid-decide", "decide a full grid instance");
  gdecide->add_option("grid", grid_args, "'grid n m sx sy tx ty p k' or a file")->required();
  gdecide->add_option("--jobs", jobs)->check(CLI::Range(1u, 256u));

  std::string grid_inst_out;
  auto* gwit = app.add_subcommand("grid-witness", "build a witness for a grid instance");
  gwit->add_option("grid", grid_args)->required();
  gwit->add_option("--witness,-o", witness_path, "solution output (default stdout)");
  gwit->add_option("--instance", grid_inst_out, "also write the materialized grid instance");

  auto* reduce = app.add_subcommand("reduce", "compile vertex cover into a grid instance");
  std::string variant, vc_path, trace_path, cover_list;
  bool demo = false, expand = false;
  reduce->add_option("variant", variant, "vc2grid|vc2manhattan")
      ->required()
      ->check(CLI::IsMember({"vc2grid", "vc2manhattan"}));
  reduce->add_option("vc", vc_path, "vertex cover file")->required();
  reduce->add_option("-o,--out", out_path, "instance output")->required();
  reduce->add_option("--trace", trace_path, "trace sidecar (default <out>.trace)");
  reduce->add_flag("--demo", demo, "small, non-sound lengths for drawing");
  reduce->add_flag("--expand", expand, "write unit edges instead of chains");
  reduce->add_option("--cover", cover_list, "comma-separated cover; writes the forward witness");
  reduce->add_option("--witness", witness_path, "forward witness output (default <out>.msesol)");

  auto* compose = app.add_subcommand("compose", "OR-compose instances with equal (p, k)");
  std::vector<std::string> inputs;
  bool directed = false, no_measure = false;
  compose->add_option("instances", inputs)->required();
  compose->add_option("-o,--out", out_path)->required();
  compose->add_flag("--directed", directed);
  compose->add_flag("--no-measure", no_measure, "skip diameter measurement");

  auto* normalize = app.add_subcommand("normalize", "remove anti-parallel crossings from a solution");
  normalize->add_option("instance", inst_path)->required();
  normalize->add_option("solution", sol_path)->required();
  normalize->add_option("-o,--out", out_path, "normalized solution (default stdout)");

  auto* vcsolve = app.add_subcommand("vc-solve", "decide a vertex cover instance");
  vcsolve->add_option("vc", vc_path)->required();

  auto* genvc = app.add_subcommand("gen-vc", "random graph of maximum degree three");
  std::uint64_t seed = 1;
  std::size_t gn = 8, gm = 10;
  std::int64_t gk = 0;
  genvc->add_option("--seed", seed)->required();
  genvc->add_option("-n", gn, "vertices")->required();
  genvc->add_option("-m", gm, "edges")->required();
  genvc->add_option("-k", gk, "budget written to the file");
  genvc->add_option("-o,--out", out_path);

  auto* render = app.add_subcommand("render", "draw an instance as SVG or DOT");
  RenderSpec spec;
  std::string format = "svg";
  bool no_highlight = false;
  render->add_option("instance", inst_path)->required();
  render->add_option("--solution", sol_path);
  render->add_option("--format", format)->check(CLI::IsMember({"svg", "dot"}));
  render->add_option("--scale", spec.scale)->check(CLI::PositiveNumber);
  render->add_flag("--labels", spec.labels);
  render->add_flag("--collapse", spec.chains_collapsed, "draw chains as straight segments");
  render->add_flag("--no-highlight", no_highlight);
  render->add_option("-o,--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*solve) {
      const Instance inst = load_instance(inst_path);
      SolveReport rep = method == "exhaustive" ? solve_exhaustive_paths(inst)
                        : method == "enum"     ? solve_enum_oracle(inst)
                                               : solve_fpt_branching(inst, BranchingOptions{jobs});
      const int code = answer(rep.answer);
      std::cout << "method " << method << "\n";
      if (rep.answer) {
        const Solution w = extract_witness(rep, inst);
        std::cout << "shared " << shared_count(inst.graph, w) << "\n";
        if (!witness_path.empty()) write_text(witness_path, write_solution(w));
      }
      return code;
    }
    if (*verify) {
      const Instance inst = load_instance(inst_path);
      const Verdict v = verify_solution(inst, load_solution(sol_path));
      const int code = answer(v.accepted);
      std::cout << "shared " << v.shared << "\n";
      if (!v.accepted) std::cout << "reason " << v.reason << "\n";
      return code;
    }
    if (*gdecide) {
      const GridInstance gi = parse_grid(grid_args);
      const GridVerdict v = decide_grid(gi, BranchingOptions{jobs});
      const int code = answer(v.answer);
      std::cout << "class " << to_string(v.cls) << "\n";
      std::cout << "method " << (v.fallback ? "fpt" : "criteria") << "\n";
      if (v.cls == GridClass::pLarge && gi.p > 1) std::cout << "kmin " << nontrivial_threshold(gi).criteria.k_min << "\n";
      std::cout << "dist " << gi.dist() << "\n";
      return code;
    }
    if (*gwit) {
      const GridInstance gi = parse_grid(grid_args);
      const Instance inst = materialize_grid(gi);
      const GridVerdict v = decide_grid(gi);
      if (!v.answer) return answer(false);
      Solution sol;
      if (v.witness) {
        sol = *v.witness;
      } else if (v.cls == GridClass::pLarge) {
        sol = build_witness_p_large(gi);
      } else {
        // p copies of a shortest path.
        sol.paths.assign(static_cast<std::size_t>(gi.p), grid_path(gi, monotone_route(gi.s, gi.t)));
      }
      const Verdict check = verify_solution(inst, sol);
      if (!check.accepted) throw error("internal: grid witness rejected (" + check.reason + ")");
      answer(true);
      std::cout << "shared " << check.shared << "\n";
      if (!grid_inst_out.empty()) write_text(grid_inst_out, write_instance(inst));
      if (!witness_path.empty()) write_text(witness_path, write_solution(sol));
      return ok;
    }
    if (*reduce) {
      const VCInstance vc = load_vc(vc_path);
      const bool man = variant == "vc2manhattan";
      const ReductionArtifact art = man ? vc_to_manhattan_dag(vc, {demo}) : vc_to_holey_grid(vc, {demo});
      std::optional<Solution> wit;
      if (!cover_list.empty()) wit = synthesize_holey_witness(art, parse_ids(cover_list));
      Instance out = art.instance;
      if (expand) {
        const ExpandedGraph ex = expand_chains(art.instance.graph, 2'000'000);
        out.graph = ex.graph;
        if (wit) wit = to_expanded(ex, *wit);
      }
      write_text(out_path, write_instance(out, expand ? PolylineStyle::points : PolylineStyle::corners));
      write_text(trace_path.empty() ? out_path + ".trace" : trace_path, write_trace(art));
      std::cout << "variant " << variant << (art.demo ? " demo" : " sound") << "\n";
      std::cout << "vertices " << out.graph.vertex_count() << "\nedges " << out.graph.edge_count() << "\n";
      std::cout << "p " << out.p << "\nk " << out.k << "\n";
      if (wit) {
        const Verdict v = verify_solution(out, *wit);
        if (!v.accepted) throw error("internal: forward witness rejected (" + v.reason + ")");
        std::cout << "shared " << v.shared << "\n";
        write_text(witness_path.empty() ? out_path + ".msesol" : witness_path, write_solution(*wit));
      }
      return ok;
    }
    if (*compose) {
      std::vector<Instance> list;
      for (const auto& path : inputs) list.push_back(load_instance(path));
      const CompositionReport rep = or_compose(list, directed, !no_measure);
      write_text(out_path, write_instance(rep.instance));
      std::cout << "q " << rep.q << "\np " << rep.pPrime << "\nk " << rep.kPrime << "\n";
      std::cout << "degree " << rep.input_max_degree << " -> " << rep.composed_max_degree << "\n";
      if (!no_measure)
        std::cout << "diameter " << rep.composed_diameter << " bound " << rep.diameter_bound << "\n";
      return ok;
    }
    if (*normalize) {
      const Instance inst = load_instance(inst_path);
      const Solution before = load_solution(sol_path);
      const Verdict v0 = verify_solution(inst, before);
      if (!v0.accepted) throw precondition_error("input solution is invalid: " + v0.reason);
      const Solution after = normalize_antiparallel(inst, before);
      const Verdict v1 = verify_solution(inst, after);
      if (!v1.accepted) throw error("internal: normalized solution rejected (" + v1.reason + ")");
      std::cout << "shared-before " << v0.shared << "\nshared " << v1.shared << "\n";
      write_text(out_path, write_solution(after));
      return ok;
    }
    if (*vcsolve) {
      const VCInstance vc = load_vc(vc_path);
      const CoverResult r = vc_decide(vc);
      const int code = answer(r.exists);
      if (r.cover) std::cout << "cover " << join(*r.cover) << "\n";
      return code;
    }
    if (*genvc) {
      write_text(out_path, write_vc(gen_vc_deg3(seed, gn, gm, gk)));
      return ok;
    }
    if (*render) {
      const Instance inst = load_instance(inst_path);
      std::optional<Solution> sol;
      if (!sol_path.empty()) sol = load_solution(sol_path);
      spec.format = format == "dot" ? RenderFormat::dot : RenderFormat::svg;
      spec.highlight_solution = !no_highlight;
      write_text(out_path, render_embedding(inst, sol, spec));
      return ok;
    }
  } catch (const limit_error& e) {
    std::cerr << "limit: " << e.what() << "\n";
    return limit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}
