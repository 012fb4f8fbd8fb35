#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "compatri/generate.hpp"
#include "compatri/io.hpp"
#include "compatri/oracles.hpp"
#include "compatri/rotation.hpp"
#include "compatri/visibility.hpp"
#include "svg.hpp"

using namespace compatri;
using nlohmann::json;

namespace {

// Exit codes: 0 ok, 1 negative verdict, 2 usage/validation error,
// 3 differential (--oracle) mismatch.
constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

struct Report {
  std::string path;  // empty = disabled
  json inputs = json::object();
  json outputs = json::object();

  void note_input(const std::string& file) {
    if (!path.empty()) inputs[file] = io::file_digest(file);
  }
  void flush(const std::string& subcommand, int exit_code) {
    if (path.empty()) return;
    const auto& c = stats::counters();
    json line{{"subcommand", subcommand},
              {"exit", exit_code},
              {"inputs", inputs},
              {"outputs", outputs},
              {"counters",
               {{"orientation_evals", c.orientation_evals},
                {"visibility_queries", c.visibility_queries},
                {"satisfies_dispatches", c.satisfies_dispatches},
                {"merge_steps", c.merge_steps},
                {"block_updates", c.block_updates},
                {"finalizations", c.finalizations},
                {"stored_intervals", c.stored_intervals}}}};
    std::ofstream out(path, std::ios::app);
    out << line.dump() << "\n";
  }
};

AdjacencyMatrix common_graph(const Polygon& p, const Polygon& q) {
  AdjacencyMatrix gp = oracles::visibility_graph(p);
  AdjacencyMatrix gq = oracles::visibility_graph(q);
  AdjacencyMatrix common(p.size());
  const int n = p.size();
  for (int i = 0; i < n; ++i) {
    common.set(i, (i + 1) % n);
    for (int j = i + 2; j < n; ++j)
      if (gp.at(i, j) && gq.at(i, j)) common.set(i, j);
  }
  return common;
}

int cmd_triangulate(const std::string& in, const std::string& out, Report& rep) {
  rep.note_input(in);
  Polygon p = io::read_polygon_file(in);
  Triangulation t = triangulate(p);
  std::ostringstream ss;
  io::write_diagonals(ss, t.diagonals);
  io::write_file(out, ss.str());
  rep.outputs["diagonals"] = t.diagonals.size();
  std::cout << "wrote " << t.diagonals.size() << " diagonals to " << out << "\n";
  return kExitOk;
}

int cmd_visquery(const std::string& in, int i, int j, bool all, bool oracle, Report& rep) {
  rep.note_input(in);
  Polygon p = io::read_polygon_file(in);
  const int n = p.size();
  VisibilityIndex idx = VisibilityIndex::build(p);
  if (all) {
    std::ostringstream table;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) table << (a != b && idx.visible(a, b) ? '1' : '0');
      table << "\n";
    }
    std::cout << table.str();
    if (oracle) {
      AdjacencyMatrix g = oracles::visibility_graph(p);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (a != b && idx.visible(a, b) != g.at(a, b)) {
            std::cerr << "oracle mismatch at (" << a << "," << b << ")\n";
            return kExitMismatch;
          }
      std::cout << "oracle: MATCH\n";
    }
    rep.outputs["pairs"] = n * n;
    return kExitOk;
  }
  if (i < 0 || i >= n || j < 0 || j >= n || i == j)
    throw Error(Error::Kind::IndexOutOfRange, "vertex pair out of range");
  bool vis = idx.visible(i, j);
  std::cout << (vis ? "true" : "false") << "\n";
  if (oracle) {
    bool expect = p.adjacent(i, j) || is_diagonal(p, IndexPair::of(i, j));
    if (expect != vis) {
      std::cerr << "oracle mismatch\n";
      return kExitMismatch;
    }
  }
  rep.outputs["visible"] = vis;
  return vis ? kExitOk : kExitNo;
}

int cmd_rotation_search(const std::string& pf, const std::string& tf,
                        const std::string& qf, const std::string& witness_dir,
                        bool oracle, Report& rep) {
  rep.note_input(pf);
  rep.note_input(tf);
  rep.note_input(qf);
  Polygon p = io::read_polygon_file(pf);
  Polygon q = io::read_polygon_file(qf);
  Triangulation t = assemble_triangulation(p, io::read_diagonals_file(tf, p.size()));
  RotationSearchResult res = find_rotations(t, q);

  std::ostringstream line;
  for (size_t k = 0; k < res.rotations.size(); ++k) {
    if (k) line << " ";
    line << res.rotations[k];
  }
  std::cout << line.str() << "\n";

  if (!witness_dir.empty()) {
    for (int s : res.rotations) {
      std::ostringstream ss;
      io::write_diagonals(ss, RotationSearchResult::witness(t, s));
      io::write_file(witness_dir + "/witness_" + std::to_string(s) + ".txt", ss.str());
    }
  }
  if (oracle) {
    auto expect = oracles::naive_rotation_set(t, q);
    if (expect != res.rotations) {
      std::cerr << "oracle mismatch: rotation sets differ\n";
      return kExitMismatch;
    }
    std::cout << "oracle: MATCH\n";
  }
  rep.outputs["rotations"] = res.rotations;
  return res.rotations.empty() ? kExitNo : kExitOk;
}

int cmd_compat(const std::string& pf, const std::string& qf, const std::string& out,
               const std::string& svg, bool oracle, Report& rep) {
  rep.note_input(pf);
  rep.note_input(qf);
  Polygon p = io::read_polygon_file(pf);
  Polygon q = io::read_polygon_file(qf);
  auto diags = compatible_fixed_correspondence(p, q);

  if (oracle) {
    AdjacencyMatrix a = common_graph(p, q);
    auto b = oracles::cubic_dp(a);
    bool expect = b[0][p.size() - 1] != 0;
    if (expect != diags.has_value()) {
      std::cerr << "oracle mismatch: cubic DP verdict differs\n";
      return kExitMismatch;
    }
    std::cout << "oracle: MATCH\n";
  }

  if (!diags) {
    std::cout << "NO\n";
    rep.outputs["compatible"] = false;
    return kExitNo;
  }
  std::cout << "YES\n";
  rep.outputs["compatible"] = true;
  rep.outputs["diagonals"] = diags->size();
  if (!out.empty()) {
    std::ostringstream ss;
    io::write_diagonals(ss, *diags);
    io::write_file(out, ss.str());
  }
  if (!svg.empty()) io::write_file(svg, svgout::render_pair(p, q, *diags));
  return kExitOk;
}

int cmd_count(const std::vector<std::string>& files, bool oracle, Report& rep) {
  AdjacencyMatrix a(3);
  if (files.size() == 1) {
    rep.note_input(files[0]);
    a = io::read_graph_file(files[0]);
  } else {
    rep.note_input(files[0]);
    rep.note_input(files[1]);
    Polygon p = io::read_polygon_file(files[0]);
    Polygon q = io::read_polygon_file(files[1]);
    a = common_graph(p, q);
  }
  BigInt count = count_triangulations(a);
  std::cout << count.str() << "\n";
  if (oracle) {
    BigInt expect = oracles::recursive_count(a);
    if (expect != count) {
      std::cerr << "oracle mismatch: counts differ\n";
      return kExitMismatch;
    }
    std::cout << "oracle: MATCH\n";
  }
  rep.outputs["count"] = count.str();
  return kExitOk;
}

int cmd_reduction(int m, const std::string& out, std::uint64_t seed, Report& rep) {
  std::mt19937_64 rng(seed);
  auto random_matrix = [&] {
    BoolMatrix mat(m, std::vector<uint8_t>(m, 0));
    for (auto& row : mat)
      for (auto& cell : row) cell = uint8_t(rng() & 1);
    return mat;
  };
  BoolMatrix m1 = random_matrix(), m2 = random_matrix();
  ReductionGadget g = build_reduction_graph(m1, m2);

  std::ostringstream ss;
  io::write_graph(ss, g.graph);
  io::write_file(out, ss.str());

  DecisionDp dp = run_decision_dp(g.graph);
  bool ok = true;
  for (int i = 1; i <= m && ok; ++i)
    for (int j = 1; j <= m && ok; ++j) {
      int prod = 0;
      for (int k = 1; k <= m; ++k) prod |= (m1[i - 1][k - 1] & m2[k - 1][j - 1]);
      IndexPair cell = g.chain_cell(i, j);
      if (dp.bit(cell.a, cell.b) != (prod != 0)) ok = false;
    }
  std::cout << (ok ? "MATCH" : "MISMATCH") << "\n";
  rep.outputs["match"] = ok;
  return ok ? kExitOk : kExitMismatch;
}

int cmd_gen(int n, const std::string& out, double reflex_fraction, bool has_fraction,
            std::uint64_t seed, Report& rep) {
  GenerateOptions opt;
  opt.n = n;
  opt.seed = seed;
  if (has_fraction) opt.reflex_fraction = reflex_fraction;
  Polygon p = generate_polygon(opt);
  std::ostringstream ss;
  io::write_polygon(ss, p);
  io::write_file(out, ss.str());
  int r = reflex_count(p);
  std::cout << "n " << n << " reflex " << r << "/" << n << "\n";
  rep.outputs["reflex"] = r;
  return kExitOk;
}

int cmd_render(const std::string& pf, const std::string& tf, const std::string& svg,
               Report& rep) {
  rep.note_input(pf);
  Polygon p = io::read_polygon_file(pf);
  std::vector<IndexPair> diags;
  if (!tf.empty()) {
    rep.note_input(tf);
    diags = io::read_diagonals_file(tf, p.size());
    for (const IndexPair& d : diags)
      if (p.adjacent(d.a, d.b))
        throw Error(Error::Kind::AdjacentPair, "AdjacentPair in triangulation file");
  }
  io::write_file(svg, svgout::render(p, diags));
  std::cout << "wrote " << svg << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compatible triangulations of simple polygons"};
  app.require_subcommand(1);

  std::string report_path;
  bool oracle = false;
  std::uint64_t seed = 1;
  app.add_option("--report", report_path, "append a JSON run report line to this file");
  app.add_flag("--oracle", oracle, "differential run against the brute-force oracle");
  app.add_option("--seed", seed, "seed for randomized subcommands");

  std::string in_file, out_file, q_file, t_file, svg_file, witness_dir;
  int vi = -1, vj = -1, gen_n = 0, red_m = 0;
  bool all = false;
  double reflex_fraction = 0.0;

  auto* tri = app.add_subcommand("triangulate", "triangulate a polygon file");
  tri->add_option("polygon", in_file)->required()->check(CLI::ExistingFile);
  tri->add_option("out", out_file)->required();

  auto* vq = app.add_subcommand("visquery", "vertex visibility queries");
  vq->add_option("polygon", in_file)->required()->check(CLI::ExistingFile);
  vq->add_option("i", vi);
  vq->add_option("j", vj);
  vq->add_flag("--all", all, "print the full n x n table");

  auto* rs = app.add_subcommand("rotation-search", "rotations admitting a compatible triangulation");
  rs->add_option("P", in_file)->required()->check(CLI::ExistingFile);
  rs->add_option("T", t_file)->required()->check(CLI::ExistingFile);
  rs->add_option("Q", q_file)->required()->check(CLI::ExistingFile);
  rs->add_option("--witness-dir", witness_dir, "write witness triangulation files here");

  auto* cp = app.add_subcommand("compat", "compatible triangulation with fixed correspondence");
  cp->add_option("P", in_file)->required()->check(CLI::ExistingFile);
  cp->add_option("Q", q_file)->required()->check(CLI::ExistingFile);
  cp->add_option("--out", out_file, "write the shared triangulation here");
  cp->add_option("--svg", svg_file, "render both polygons with the shared diagonals");

  std::vector<std::string> count_files;
  auto* ct = app.add_subcommand("count", "count triangulations of a graph or polygon pair");
  ct->add_option("files", count_files, "graph file, or two polygon files")
      ->expected(1, 2)
      ->check(CLI::ExistingFile);

  auto* rd = app.add_subcommand("reduction", "Boolean-product gadget generator and check");
  rd->add_option("m", red_m)->required()->check(CLI::Range(1, 512));
  rd->add_option("out", out_file)->required();

  auto* gn = app.add_subcommand("gen", "random simple polygon");
  gn->add_option("n", gen_n)->required()->check(CLI::Range(3, 100000));
  gn->add_option("out", out_file)->required();
  auto* frac_opt = gn->add_option("--reflex-fraction", reflex_fraction,
                                  "target share of reflex vertices")
                       ->check(CLI::Range(0.0, 1.0));

  auto* rn = app.add_subcommand("render", "SVG of a polygon and optional triangulation");
  rn->add_option("polygon", in_file)->required()->check(CLI::ExistingFile);
  rn->add_option("triangulation", t_file)->check(CLI::ExistingFile);
  rn->add_option("--svg", svg_file, "output SVG path")->required();

  for (auto* sub : {tri, vq, rs, cp, ct, rd, gn, rn}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  stats::reset();
  Report rep;
  rep.path = report_path;
  int code = kExitUsage;
  std::string name;
  try {
    if (tri->parsed()) {
      name = "triangulate";
      code = cmd_triangulate(in_file, out_file, rep);
    } else if (vq->parsed()) {
      name = "visquery";
      if (!all && (vq->count("i") == 0 || vq->count("j") == 0))
        throw Error(Error::Kind::IndexOutOfRange, "need i and j (or --all)");
      code = cmd_visquery(in_file, vi, vj, all, oracle, rep);
    } else if (rs->parsed()) {
      name = "rotation-search";
      code = cmd_rotation_search(in_file, t_file, q_file, witness_dir, oracle, rep);
    } else if (cp->parsed()) {
      name = "compat";
      code = cmd_compat(in_file, q_file, out_file, svg_file, oracle, rep);
    } else if (ct->parsed()) {
      name = "count";
      code = cmd_count(count_files, oracle, rep);
    } else if (rd->parsed()) {
      name = "reduction";
      code = cmd_reduction(red_m, out_file, seed, rep);
    } else if (gn->parsed()) {
      name = "gen";
      code = cmd_gen(gen_n, out_file, reflex_fraction, frac_opt->count() > 0, seed, rep);
    } else if (rn->parsed()) {
      name = "render";
      code = cmd_render(in_file, t_file, svg_file, rep);
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    code = kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = kExitUsage;
  }
  rep.flush(name, code);
  return code;
}
