#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <ostream>
#include <sstream>

#include "mimicnet/bundle.hpp"
#include "mimicnet/cut_engine.hpp"
#include "mimicnet/dblexp_instance.hpp"
#include "mimicnet/dot_export.hpp"
#include "mimicnet/errors.hpp"
#include "mimicnet/graph_io.hpp"
#include "mimicnet/incidence.hpp"
#include "mimicnet/planar_instance.hpp"
#include "mimicnet/profile.hpp"

namespace mimicnet::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
  unsigned jobs = 1;
  std::uint64_t seed = 0;

  std::size_t k = 0;
  std::size_t max_k = kDefaultMaxPlanarK;
  std::size_t r = 0;
  std::string alpha;
  std::string max_outer = "10000";
  std::string out;

  std::string graph;
  std::string side;
  bool witness = false;
  bool uniqueness = false;
  std::string original;
  std::string compressed;
  std::string rows = "all";
  bool strict = false;
  bool dump = false;
  std::string instance;
  bool full = false;
  long scale = 1;
};

TerminalGraph load_graph(const std::string& path) { return parse_graph(read_text_file(path)); }

std::string side_text(const TerminalGraph& g, const Bipartition& b) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i : b.side()) {
    s += (first ? "" : ",") + g.label(g.terminal(i));
    first = false;
  }
  return s + "}";
}

Bipartition parse_side(const TerminalGraph& g, const std::string& text) {
  std::vector<std::size_t> indices;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (item.empty()) continue;
    const VertexId v = g.vertex(item);
    if (!g.is_terminal(v)) throw Error(ErrorCode::InvalidTerminalSet, "'" + item + "' is not a terminal");
    const std::size_t t = *g.terminal_index(v);
    if (std::find(indices.begin(), indices.end(), t) != indices.end()) {
      throw Error(ErrorCode::InvalidTerminalSet, "terminal '" + item + "' listed twice");
    }
    indices.push_back(t);
  }
  return Bipartition::from_subset(indices, g.terminal_count());
}

int emit(const VerificationReport& report, std::ostream& out) {
  out << report.render();
  return report.passed() ? kExitOk : kExitFailed;
}

int cmd_gen_planar(const Options& o, std::ostream& out) {
  const PlanarInstance inst = generate_planar_dual(o.k, o.max_k);
  const fs::path dir = o.out.empty() ? fs::path("planar-k" + std::to_string(o.k)) : fs::path(o.out);
  write_planar_bundle(inst, dir);
  out << "planar instance k=" << inst.k << " written to " << dir.string() << '\n';
  out << "  drawing: " << inst.dual.vertex_count() << " vertices, " << inst.dual.edge_count() << " edges, "
      << inst.dual.face_count() << " faces, " << inst.crossings.size() << " crossings"
      << (inst.sheared ? " (sheared)" : "") << '\n';
  out << "  primal: " << inst.primal.vertex_count() << " vertices, " << inst.primal.edge_count()
      << " edges, " << inst.primal.terminal_count() << " terminals\n";
  out << "  weights:";
  for (std::size_t i = 1; i < inst.weights.c.size(); ++i) out << " c_" << i << "=" << inst.weights.c[i].to_string();
  out << " C=" << inst.weights.big.to_string() << '\n';
  return kExitOk;
}

int cmd_gen_dblexp(const Options& o, std::ostream& out) {
  std::optional<Weight> alpha;
  if (!o.alpha.empty()) alpha = Weight::parse(o.alpha);
  BigInt max_outer;
  if (max_outer.set_str(o.max_outer, 10) != 0 || sgn(max_outer) < 0) {
    throw Error(ErrorCode::Parameter, "--max-outer must be a nonnegative integer");
  }
  const DblExpInstance inst = generate_dblexp(o.r, alpha, max_outer);
  const fs::path dir = o.out.empty() ? fs::path("dblexp-r" + std::to_string(o.r)) : fs::path(o.out);
  write_dblexp_bundle(inst, dir);
  out << "dblexp instance r=" << inst.r << " written to " << dir.string() << '\n';
  out << "  l=" << inst.ell << " |U|=" << inst.u.size() << " |W|=" << inst.w.size() << " alpha="
      << inst.alpha.to_string() << '\n';
  out << "  graph: " << inst.graph.vertex_count() << " vertices, " << inst.graph.edge_count() << " edges, "
      << inst.graph.terminal_count() << " terminals\n";
  return kExitOk;
}

int cmd_mincut(const Options& o, std::ostream& out) {
  const TerminalGraph g = load_graph(o.graph);
  const Bipartition b = parse_side(g, o.side);
  FlowWitness witness;
  const CanonicalCut cut = min_cut(g, b, o.witness ? &witness : nullptr);
  out << "S=" << side_text(g, b) << '\n';
  out << "value " << cut.value.to_string() << '\n';
  out << "unique " << (cut.unique ? "yes" : "no") << '\n';
  out << "source side";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (cut.source_side[v]) out << ' ' << g.label(v);
  }
  out << "\ncut edges";
  for (EdgeId e : cut.crossing_edges) {
    out << " e" << e << ':' << g.label(g.edge(e).u) << '-' << g.label(g.edge(e).v);
  }
  out << '\n';
  if (o.witness) {
    out << "flow\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (sgn(witness.edge_flow[e]) == 0) continue;
      out << "  " << g.label(g.edge(e).u) << " -> " << g.label(g.edge(e).v) << ' '
          << format_rational(witness.edge_flow[e]) << '\n';
    }
  }
  return kExitOk;
}

int cmd_profile(const Options& o, std::ostream& out) {
  const TerminalGraph g = load_graph(o.graph);
  const CutProfile profile = cut_profile(g, Parallelism{o.jobs});
  out << "bipartitions " << profile.size() << '\n';
  for (std::size_t i = 0; i < profile.size(); ++i) {
    out << "S=" << side_text(g, profile.bipartitions[i]) << " value " << profile.cuts[i].value.to_string();
    if (o.uniqueness) out << " unique " << (profile.cuts[i].unique ? "yes" : "no");
    out << '\n';
  }
  if (o.uniqueness) out << "unique " << profile.unique_count() << '/' << profile.size() << '\n';
  return kExitOk;
}

int cmd_compress(const Options& o, std::ostream& out) {
  const TerminalGraph g = load_graph(o.graph);
  const CompressionResult result = hagerup_compress(g, Parallelism{o.jobs});
  write_text_file(o.out, serialize_graph(result.graph));
  out << "compressed " << g.vertex_count() << " -> " << result.graph.vertex_count() << " vertices, "
      << g.edge_count() << " -> " << result.graph.edge_count() << " edges\n";
  return kExitOk;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const TerminalGraph a = load_graph(o.original);
  const TerminalGraph b = load_graph(o.compressed);
  const MimickingReport report = validate_mimicking(a, b, Parallelism{o.jobs});
  out << "checked " << report.checked << " bipartitions, " << report.mismatches.size() << " mismatches\n";
  for (const auto& m : report.mismatches) {
    out << "  S=" << side_text(a, m.bipartition) << " original " << m.original.to_string() << " other "
        << m.other.to_string() << '\n';
  }
  out << "result: " << (report.passed() ? "PASS" : "FAIL") << '\n';
  return report.passed() ? kExitOk : kExitFailed;
}

int cmd_rank(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.graph.empty() == o.instance.empty()) {
    throw CLI::ValidationError("rank", "exactly one of --graph and --instance is required");
  }
  std::optional<PlanarInstance> inst;
  TerminalGraph g = o.instance.empty() ? load_graph(o.graph) : TerminalGraph({"a", "b"}, {0, 1}, {});
  if (!o.instance.empty()) {
    if (bundle_kind(o.instance) != BundleKind::Planar) {
      throw Error(ErrorCode::Parameter, "rank --instance needs a planar bundle");
    }
    inst = read_planar_bundle(o.instance);
    g = inst->primal;
  }
  const RowMode mode = parse_row_mode(o.rows);
  const CutProfile profile = cut_profile(g, Parallelism{o.jobs});
  const IncidenceMatrix m = build_incidence_matrix(g, profile, mode, o.strict);
  for (const auto& w : m.warnings) err << "warning: " << w << '\n';
  out << "rows " << m.row_count() << " (" << to_string(mode) << ")\n";
  out << "cols " << m.cols << '\n';
  out << "rank " << exact_rank(m) << '\n';
  out << "rank mod 2 " << rank_mod2(m) << '\n';
  if (o.dump) out << m.dump();
  if (inst && mode != RowMode::UniqueOnly) {
    return emit(verify_identity_submatrix(*inst, m), out);
  }
  return kExitOk;
}

int cmd_verify(const std::string& check, const Options& o, std::ostream& out, std::ostream& err) {
  const BundleKind kind = bundle_kind(o.instance);
  const bool planar_check =
      check == "claim-paths" || check == "unique-cycles" || check == "identity-submatrix";
  const bool dblexp_check = check == "side-assignment" || check == "incompressibility";
  if ((planar_check && kind != BundleKind::Planar) || (dblexp_check && kind != BundleKind::DblExp)) {
    throw Error(ErrorCode::Parameter, "verify " + check + " does not apply to a " + to_string(kind) + " bundle");
  }
  const Parallelism p{o.jobs};
  if (kind == BundleKind::Planar) {
    const PlanarInstance inst = read_planar_bundle(o.instance);
    if (check == "claim-paths") return emit(verify_claim_paths(inst), out);
    if (check == "unique-cycles") return emit(verify_unique_cycles(inst, p), out);
    if (check == "identity-submatrix") return emit(verify_rank_certificate(inst, p), out);
    return emit(verify_structure(inst), out);
  }
  const DblExpInstance inst = read_dblexp_bundle(o.instance);
  if (check == "side-assignment") return emit(verify_side_assignment(inst, p), out);
  if (check == "incompressibility") {
    IncompressibilityOptions opts;
    opts.mode = o.full ? PairMode::Full : PairMode::Sampled;
    opts.seed = o.seed;
    opts.parallelism = p;
    if (o.full) {
      opts.progress = [&err](std::size_t done, std::size_t total) {
        if (done % 1000 == 0 || done == total) err << "progress " << done << '/' << total << '\n';
      };
    }
    return emit(verify_incompressibility(inst, opts), out);
  }
  return emit(verify_dblexp_structure(inst), out);
}

int cmd_export_dot(const Options& o, std::ostream& out) {
  const GraphDocument doc = parse_document(read_text_file(o.graph));
  DotOptions opts;
  opts.graph_name = fs::path(o.graph).stem().string();
  opts.scale = o.scale;
  const std::string dot = export_dot(doc, opts);
  if (o.out.empty()) {
    out << dot;
  } else {
    write_text_file(o.out, dot);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact terminal-cut tools for mimicking-network lower-bound instances", "mimicnet"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto jobs_flag = [&](CLI::App* sub) {
    sub->add_option("--jobs", o.jobs, "Worker threads (0 = all cores)")->capture_default_str();
  };

  CLI::App* gen = app.add_subcommand("gen", "Generate an instance bundle");
  gen->require_subcommand(1);
  CLI::App* gen_planar = gen->add_subcommand("planar", "Layered planar instance");
  gen_planar->add_option("--k", o.k, "Number of terminals (3..max-k)")->required();
  gen_planar->add_option("--max-k", o.max_k, "Upper bound on k")->capture_default_str();
  gen_planar->add_option("--out", o.out, "Bundle directory (default planar-k<N>)");
  gen_planar->callback([&] { action = [&] { return cmd_gen_planar(o, out); }; });

  CLI::App* gen_dblexp = gen->add_subcommand("dblexp", "Doubly exponential instance");
  gen_dblexp->add_option("--r", o.r, "Parameter r, r = 2 mod 4")->required();
  gen_dblexp->add_option("--alpha", o.alpha, "Heavy cost as p/q (default r^2 l |W| + 1)");
  gen_dblexp->add_option("--max-outer", o.max_outer, "Refuse when |W| exceeds this")->capture_default_str();
  gen_dblexp->add_option("--out", o.out, "Bundle directory (default dblexp-r<N>)");
  gen_dblexp->callback([&] { action = [&] { return cmd_gen_dblexp(o, out); }; });

  CLI::App* mincut = app.add_subcommand("mincut", "Minimum cut for one terminal bipartition");
  mincut->add_option("--graph", o.graph, "Graph file")->required();
  mincut->add_option("--side", o.side, "Comma-separated terminal labels of S")->required();
  mincut->add_flag("--witness", o.witness, "Print the flow certificate");
  mincut->callback([&] { action = [&] { return cmd_mincut(o, out); }; });

  CLI::App* profile = app.add_subcommand("profile", "Minimum cuts for all bipartitions");
  profile->add_option("--graph", o.graph, "Graph file")->required();
  profile->add_flag("--uniqueness", o.uniqueness, "Report whether each minimum cut is unique");
  jobs_flag(profile);
  profile->callback([&] { action = [&] { return cmd_profile(o, out); }; });

  CLI::App* compress = app.add_subcommand("compress", "Merge vertices with equal side vectors");
  compress->add_option("--graph", o.graph, "Graph file")->required();
  compress->add_option("--out", o.out, "Output graph file")->required();
  jobs_flag(compress);
  compress->callback([&] { action = [&] { return cmd_compress(o, out); }; });

  CLI::App* validate = app.add_subcommand("validate", "Check that two graphs have equal terminal cuts");
  validate->add_option("--original", o.original, "Original graph file")->required();
  validate->add_option("--compressed", o.compressed, "Candidate mimicking network")->required();
  jobs_flag(validate);
  validate->callback([&] { action = [&] { return cmd_validate(o, out); }; });

  CLI::App* rank = app.add_subcommand("rank", "Exact rank of the cutset-edge incidence matrix");
  rank->add_option("--graph", o.graph, "Graph file");
  rank->add_option("--instance", o.instance, "Planar bundle; also checks the identity submatrix");
  rank->add_option("--rows", o.rows, "Row selection")
      ->check(CLI::IsMember({"all", "unique-only", "important-only"}))
      ->capture_default_str();
  rank->add_flag("--strict", o.strict, "Fail if a selected row has a non-unique minimum cut");
  rank->add_flag("--dump", o.dump, "Print the matrix");
  jobs_flag(rank);
  rank->callback([&] { action = [&] { return cmd_rank(o, out, err); }; });

  CLI::App* verify = app.add_subcommand("verify", "Check a claim on an instance bundle");
  verify->require_subcommand(1);
  const std::vector<std::pair<std::string, std::string>> checks{
      {"claim-paths", "Edge-disjoint heavy north-south paths (planar)"},
      {"unique-cycles", "Important minimum cuts are unique important cycles (planar)"},
      {"identity-submatrix", "Identity submatrix and rank of the important rows (planar)"},
      {"side-assignment", "Outer vertices side with S iff u_S0 in Z (dblexp)"},
      {"incompressibility", "No pair of vertices can be merged (dblexp)"},
      {"structure", "Structural invariants (either kind)"}};
  for (const auto& [name, help] : checks) {
    CLI::App* sub = verify->add_subcommand(name, help);
    sub->add_option("--instance", o.instance, "Bundle directory")->required();
    jobs_flag(sub);
    if (name == "incompressibility") {
      sub->add_flag("--full", o.full, "Test every eligible pair instead of a sample");
      sub->add_option("--seed", o.seed, "Sampling seed")->capture_default_str();
    }
    sub->callback([&, check = name] { action = [&, check] { return cmd_verify(check, o, out, err); }; });
  }

  CLI::App* exp = app.add_subcommand("export", "Export a graph");
  exp->require_subcommand(1);
  CLI::App* dot = exp->add_subcommand("dot", "Graphviz DOT");
  dot->add_option("--graph", o.graph, "Graph file")->required();
  dot->add_option("--out", o.out, "Output file (default stdout)");
  dot->add_option("--scale", o.scale, "Coordinate scale")->capture_default_str();
  dot->callback([&] { action = [&] { return cmd_export_dot(o, out); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    return action ? action() : kExitUsage;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace mimicnet::cli
