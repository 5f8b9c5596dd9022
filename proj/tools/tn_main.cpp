// Command-line driver: verification sweeps, enumeration, certification and
// export, with pass/fail tables on stdout and optional JSON run reports.
// Exit codes: 0 all checks pass, 1 at least one check failed (or a library
// invariant broke mid-run), 2 bad input or bad usage.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tn/cactus.hpp"
#include "tn/cdlk.hpp"
#include "tn/descending.hpp"
#include "tn/dot.hpp"
#include "tn/error.hpp"
#include "tn/generators.hpp"
#include "tn/json_io.hpp"
#include "tn/parallel.hpp"
#include "tn/rank2_tree.hpp"
#include "tn/rose_enum.hpp"
#include "tn/toy.hpp"

namespace {

using nlohmann::json;
using namespace tn;

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct RunReport {
  std::string command;
  json parameters = json::object();
  std::vector<CheckResult> checks;
  json results = json::array();  // subcommand-specific structured rows
};

json matrix_rows_json(const IntMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c)
      row.push_back(static_cast<long long>(m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

std::string rows_str(const IntMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < m.rows(); ++r) {
    if (r) os << "; ";
    for (int c = 0; c < m.cols(); ++c) {
      if (c) os << ",";
      os << m.at(r, c);
    }
  }
  os << "]";
  return os.str();
}

json homology_json(const std::vector<HomologyGroup>& groups) {
  json out = json::array();
  for (std::size_t d = 0; d < groups.size(); ++d) {
    json g;
    g["dim"] = d;
    g["rank"] = groups[d].rank;
    json torsion = json::array();
    for (const Int& t : groups[d].torsion)
      torsion.push_back(static_cast<long long>(t));
    g["torsion"] = torsion;
    out.push_back(g);
  }
  return out;
}

void add_check(RunReport& report, const std::string& name, bool pass,
               const std::string& witness = "") {
  report.checks.push_back({name, pass, pass ? "" : witness});
}

int print_and_finish(const RunReport& report, double seconds,
                     const std::string& report_path) {
  int failed = 0;
  for (const CheckResult& c : report.checks) {
    std::cout << (c.pass ? "  pass  " : "  FAIL  ") << c.name;
    if (!c.pass && !c.witness.empty()) std::cout << "  [" << c.witness << "]";
    std::cout << "\n";
    if (!c.pass) ++failed;
  }
  if (!report.checks.empty()) {
    std::cout << report.command << ": " << (report.checks.size() - failed)
              << "/" << report.checks.size() << " checks passed ("
              << std::fixed << std::setprecision(2) << seconds << " s)\n";
  }
  if (!report_path.empty()) {
    json j;
    j["command"] = report.command;
    j["parameters"] = report.parameters;
    json checks = json::array();
    for (const CheckResult& c : report.checks)
      checks.push_back({{"name", c.name}, {"pass", c.pass},
                        {"witness", c.witness}});
    j["checks"] = checks;
    j["results"] = report.results;
    j["wall_seconds"] = seconds;
    write_text_file(report_path, j.dump(2) + "\n");
  }
  return failed == 0 ? 0 : 1;
}

// ---------------------------------------------------------------- torelli

void run_verify_appendix(RunReport& report, int n_max) {
  require(n_max >= 3, ErrorKind::invalid_input, "--n must be at least 3");
  for (int n = 3; n <= n_max; ++n)
    for (int l = 3; l <= n; ++l) {
      bool ok = verify_appendix_identity(l, n);
      add_check(report, "delta12-conjugate expansion l=" + std::to_string(l) +
                            " n=" + std::to_string(n),
                ok, "sides differ in Out");
    }
}

void run_verify_conjugation(RunReport& report, int n_max, int hmax) {
  require(n_max >= 3, ErrorKind::invalid_input, "--n must be at least 3");
  require(hmax >= 0, ErrorKind::invalid_input, "--hmax must be nonnegative");
  for (int n = 3; n <= n_max; ++n)
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          if (i == k || i == l || k == l) continue;
          // All conjugator words up to the length cap, letters avoiding i.
          std::vector<std::vector<int>> words{{}};
          bool ok = true;
          std::string bad;
          for (std::size_t w = 0; w < words.size(); ++w) {
            std::vector<int> h = words[w];
            if (!verify_conjugation_formula(n, i, k, l, h)) {
              ok = false;
              std::ostringstream os;
              os << "h=";
              for (int c : h) os << "x" << c << " ";
              bad = os.str();
              break;
            }
            if (static_cast<int>(h.size()) < hmax)
              for (int c = 1; c <= n; ++c)
                if (c != i) {
                  h.push_back(c);
                  words.push_back(h);
                  h.pop_back();
                }
          }
          std::ostringstream name;
          name << "conjugated commutator move n=" << n << " i=" << i
               << " k=" << k << " l=" << l << " |h|<=" << hmax;
          add_check(report, name.str(), ok, bad);
        }
}

// ------------------------------------------------------------------ roses

void run_roses_enumerate(RunReport& report, int rank, int bound,
                         const std::string& out_path) {
  std::vector<RoseCoset> roses = enumerate_roses(rank, bound);
  std::cout << roses.size() << " cosets (rank " << rank << ", entry bound "
            << bound << ")\n";
  json arr = json::array();
  for (std::size_t i = 0; i < roses.size(); ++i) {
    std::cout << "  " << (i + 1) << ": " << rows_str(roses[i].rep()) << "\n";
    arr.push_back(matrix_rows_json(roses[i].rep()));
  }
  report.results = arr;
  if (!out_path.empty()) write_text_file(out_path, arr.dump(2) + "\n");
}

// -------------------------------------------------------------- dlk / cdlk

std::vector<RoseCoset> roses_in_scope(const std::string& matrix_path,
                                      int rank, int bound) {
  if (!matrix_path.empty()) {
    IntMatrix m = matrix_from_json(read_text_file(matrix_path));
    require(m.rows() == m.cols(), ErrorKind::invalid_input,
            "marking matrix must be square");
    require(abs_int(m.det()) == 1, ErrorKind::invalid_input,
            "marking matrix must be unimodular");
    return {RoseCoset(m)};
  }
  require(rank >= 2, ErrorKind::invalid_input,
          "need --matrix or --rank/--bound");
  return enumerate_roses(rank, bound);
}

void run_dlk(RunReport& report, const std::string& matrix_path, int rank,
             int bound, const std::string& check) {
  require(check == "nonempty" || check == "connected" || check == "homology",
          ErrorKind::invalid_input,
          "--check must be nonempty, connected or homology");
  std::vector<RoseCoset> roses = roses_in_scope(matrix_path, rank, bound);

  struct Row {
    std::string name;
    bool pass = false;
    std::string witness;
    json result;
  };
  std::vector<Row> rows(roses.size());
  parallel_for(static_cast<int>(roses.size()), [&](int idx) {
    const RoseCoset& rho = roses[static_cast<std::size_t>(idx)];
    Row& row = rows[static_cast<std::size_t>(idx)];
    row.result["rose"] = matrix_rows_json(rho.rep());
    std::vector<IdealEdge> edges = descending_edges(rho);
    row.result["descending_edges"] = edges.size();
    if (check == "nonempty") {
      auto witness = descending_witness(rho);
      // Only the identity coset may lack one.
      row.pass = witness.has_value() != rho.is_identity();
      row.name = "descending-link-nonempty " + rows_str(rho.rep());
      if (witness) row.result["witness"] = witness->str();
      row.witness = "no descending 2-letter class found";
    } else if (check == "connected") {
      if (rho.is_identity()) {
        // The identity coset is the norm minimum; nothing descends from it.
        row.pass = !descending_witness(rho).has_value();
        row.result["connected"] = false;
        row.name = "descending-link-empty-at-identity";
        row.witness = "identity coset has a descending class";
      } else {
        bool connected = descending_link_connected(rho);
        row.result["connected"] = connected;
        row.pass = connected;
        row.name = "descending-link-connected " + rows_str(rho.rep());
        row.witness = "link splits into several components";
      }
    } else {
      CellComplexModel model = completely_descending_complex(rho);
      std::vector<HomologyGroup> groups = homology(model);
      row.result["homology"] = homology_json(groups);
      int max_allowed = 2 * rho.rank() - 5;
      bool ok = true;
      for (std::size_t d = 0; d < groups.size(); ++d)
        if (static_cast<int>(d) > max_allowed &&
            (groups[d].rank != 0 || !groups[d].torsion.empty()))
          ok = false;
      row.pass = ok;
      row.name = "homology vanishes above degree " +
                 std::to_string(max_allowed) + " " + rows_str(rho.rep());
      row.witness = "nonzero group above the dimension bound";
    }
  });
  for (Row& row : rows) {
    add_check(report, row.name, row.pass, row.witness);
    report.results.push_back(std::move(row.result));
  }
}

void run_cdlk(RunReport& report, const std::string& matrix_path, int rank,
              int bound) {
  std::vector<RoseCoset> roses = roses_in_scope(matrix_path, rank, bound);
  struct Row {
    std::vector<CheckResult> checks;
    json result;
  };
  std::vector<Row> rows(roses.size());
  parallel_for(static_cast<int>(roses.size()), [&](int idx) {
    const RoseCoset& rho = roses[static_cast<std::size_t>(idx)];
    Row& row = rows[static_cast<std::size_t>(idx)];
    std::string name = rows_str(rho.rep());
    CdlkResult result = completely_descending_link(rho);
    int max_dim = -1;
    for (int d : result.model.dims) max_dim = std::max(max_dim, d);
    std::vector<HomologyGroup> groups = homology(result.model);
    row.result["rose"] = matrix_rows_json(rho.rep());
    row.result["cells"] = result.model.cells.size();
    row.result["max_dim"] = max_dim;
    row.result["homology"] = homology_json(groups);
    int dim_bound = 2 * rho.rank() - 4;
    row.checks.push_back({"cell dimensions at most " +
                              std::to_string(dim_bound) + " " + name,
                          max_dim <= dim_bound,
                          "cell of dimension " + std::to_string(max_dim)});
    int hom_bound = 2 * rho.rank() - 5;
    bool ok = true;
    for (std::size_t d = 0; d < groups.size(); ++d)
      if (static_cast<int>(d) > hom_bound &&
          (groups[d].rank != 0 || !groups[d].torsion.empty()))
        ok = false;
    row.checks.push_back({"homology vanishes above degree " +
                              std::to_string(hom_bound) + " " + name,
                          ok, "nonzero group above the dimension bound"});
  });
  for (Row& row : rows) {
    for (CheckResult& c : row.checks)
      add_check(report, c.name, c.pass, c.witness);
    report.results.push_back(std::move(row.result));
  }
}

// ------------------------------------------------------------- rank2-tree

void run_rank2_tree(RunReport& report, int bound, const std::string& dot_path) {
  Rank2TreeReport tree = rank2_tree(bound);
  int core = 0;
  for (bool b : tree.in_core)
    if (b) ++core;
  std::cout << tree.vertices.size() << " cosets, " << tree.edges.size()
            << " adjacencies, " << core << " in the norm-closed core\n";
  add_check(report, "adjacency graph is acyclic", tree.acyclic,
            "a cycle of star-sharing cosets exists");
  add_check(report, "norm-closed core is connected", tree.core_connected,
            "core splits into several components");
  add_check(report, "adjacent cosets share a row slope", tree.farey_consistent,
            "an adjacency joins slope-disjoint cosets");
  report.results.push_back({{"vertices", tree.vertices.size()},
                            {"edges", tree.edges.size()},
                            {"core", core}});
  if (!dot_path.empty()) write_text_file(dot_path, rank2_tree_to_dot(tree));
}

// ------------------------------------------------------------------- toy

void run_toy_certify(RunReport& report, int rank, int window) {
  require(rank >= 3, ErrorKind::invalid_input, "--rank must be at least 3");
  require(window >= 0, ErrorKind::invalid_input, "--window must be >= 0");
  std::vector<std::pair<int, int>> classes;
  for (int p = -window; p <= window; ++p)
    for (int q = -window; q <= window; ++q) classes.emplace_back(p, q);

  std::set<std::string> rose_keys;
  for (auto [p, q] : classes) {
    TorusClass t{p, q, rank};
    RoseCoset rose = max_norm_rose(t);
    rose_keys.insert(rows_str(rose.rep()));
    json row;
    row["pq"] = {p, q};
    row["max_rose"] = matrix_rows_json(rose.rep());
    if (rank == 3) {
      TorusCells cells = z_pq_cells(t);
      row["cells"] = cells.cell_encodings.size();
      std::string name = "torus (" + std::to_string(p) + "," +
                         std::to_string(q) + ") closed with zero Euler number";
      add_check(report, name,
                cells.closed_surface && cells.euler_characteristic == 0,
                "chi=" + std::to_string(cells.euler_characteristic));
      if (p != 0 && q != 0) {
        SphereReport sphere =
            sphere_intersection({std::abs(p), std::abs(q), rank});
        row["sphere_ok"] = sphere.pass;
        add_check(report,
                  "sphere circle at (" + std::to_string(p) + "," +
                      std::to_string(q) + ")",
                  sphere.pass,
                  sphere.single_circle
                      ? (sphere.completely_descending
                             ? "loop intersection check failed"
                             : "an arc cell leaves the descending link")
                      : "cells do not close into one circle");
      } else {
        row["sphere_ok"] = true;  // no isolated certificate on the axes
      }
    }
    report.results.push_back(row);
  }
  add_check(report, "window classes have pairwise distinct maximal roses",
            rose_keys.size() == classes.size(),
            "two classes share a rose");
  int expected = (2 * window + 1) * (2 * window + 1);
  int rank_count = toy_homology_rank(rank, classes);
  add_check(report,
            "independent class count over the window = " +
                std::to_string(expected),
            rank_count == expected, "count=" + std::to_string(rank_count));
}

// ----------------------------------------------------------------- export

void run_export(RunReport& report, const std::string& in_path,
                const std::string& out_path) {
  LabelledGraph g = graph_from_json(read_text_file(in_path));
  std::string dot = graph_to_dot(g);
  if (out_path.empty()) {
    std::cout << dot;
  } else {
    write_text_file(out_path, dot);
  }
  report.results.push_back({{"vertices", g.num_vertices()},
                            {"edges", g.num_edges()}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification toolkit for rose complexes, descending "
               "links and the grid toy model"};
  app.require_subcommand(1);
  std::string report_path;
  app.add_option("--report", report_path, "write a JSON run report here");

  // torelli
  CLI::App* torelli = app.add_subcommand(
      "torelli", "identity checks in the homology-trivial subgroup");
  torelli->fallthrough();
  torelli->require_subcommand(1);
  int appendix_n = 4;
  CLI::App* appendix = torelli->add_subcommand(
      "verify-appendix", "expand the conjugated K[2,l,1] move");
  appendix->fallthrough();
  appendix->add_option("--n", appendix_n, "largest rank to sweep");
  int conj_n = 4, conj_hmax = 2;
  CLI::App* conjugation = torelli->add_subcommand(
      "verify-conjugation", "conjugated commutator moves against K[i,k,l]");
  conjugation->fallthrough();
  conjugation->add_option("--n", conj_n, "largest rank to sweep");
  conjugation->add_option("--hmax", conj_hmax, "conjugator length cap");

  // roses
  CLI::App* roses = app.add_subcommand("roses", "rose coset enumeration");
  roses->fallthrough();
  roses->require_subcommand(1);
  int roses_rank = 3, roses_bound = 1;
  std::string roses_out;
  CLI::App* roses_enum = roses->add_subcommand(
      "enumerate", "all cosets with entries within a bound");
  roses_enum->fallthrough();
  roses_enum->add_option("--rank", roses_rank, "matrix size")->required();
  roses_enum->add_option("--bound", roses_bound, "entry bound")->required();
  roses_enum->add_option("--out", roses_out, "write coset matrices as JSON");

  // dlk
  CLI::App* dlk = app.add_subcommand(
      "dlk", "descending-link checks per rose");
  dlk->fallthrough();
  std::string dlk_matrix, dlk_check = "connected";
  int dlk_rank = 0, dlk_bound = 1;
  dlk->add_option("--matrix", dlk_matrix, "marking matrix JSON file");
  dlk->add_option("--rank", dlk_rank, "sweep rank");
  dlk->add_option("--bound", dlk_bound, "sweep entry bound");
  dlk->add_option("--check", dlk_check, "nonempty | connected | homology");

  // cdlk
  CLI::App* cdlk = app.add_subcommand(
      "cdlk", "completely descending subcomplex census per rose");
  cdlk->fallthrough();
  std::string cdlk_matrix;
  int cdlk_rank = 0, cdlk_bound = 1;
  cdlk->add_option("--matrix", cdlk_matrix, "marking matrix JSON file");
  cdlk->add_option("--rank", cdlk_rank, "sweep rank");
  cdlk->add_option("--bound", cdlk_bound, "sweep entry bound");

  // rank2-tree
  CLI::App* rank2 = app.add_subcommand(
      "rank2-tree", "star-adjacency tree of rank-2 cosets");
  rank2->fallthrough();
  int rank2_bound = 3;
  std::string rank2_dot;
  rank2->add_option("--bound", rank2_bound, "entry bound");
  rank2->add_option("--dot", rank2_dot, "write Graphviz output here");

  // toy
  CLI::App* toy = app.add_subcommand("toy", "grid configuration toy model");
  toy->fallthrough();
  toy->require_subcommand(1);
  int toy_rank = 3, toy_window = 1;
  CLI::App* certify = toy->add_subcommand(
      "certify", "torus and sphere certificates over a window");
  certify->fallthrough();
  certify->add_option("--rank", toy_rank, "model rank (>= 3)");
  certify->add_option("--window", toy_window, "certify |p|,|q| <= window");

  // export
  CLI::App* export_cmd = app.add_subcommand(
      "export", "graph JSON to Graphviz DOT");
  export_cmd->fallthrough();
  std::string export_in, export_out;
  export_cmd->add_option("--in", export_in, "graph JSON file")->required();
  export_cmd->add_option("--out", export_out,
                         "output DOT file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  RunReport report;
  auto started = std::chrono::steady_clock::now();
  try {
    if (appendix->parsed()) {
      report.command = "torelli verify-appendix";
      report.parameters = {{"n", appendix_n}};
      run_verify_appendix(report, appendix_n);
    } else if (conjugation->parsed()) {
      report.command = "torelli verify-conjugation";
      report.parameters = {{"n", conj_n}, {"hmax", conj_hmax}};
      run_verify_conjugation(report, conj_n, conj_hmax);
    } else if (roses_enum->parsed()) {
      report.command = "roses enumerate";
      report.parameters = {{"rank", roses_rank}, {"bound", roses_bound}};
      run_roses_enumerate(report, roses_rank, roses_bound, roses_out);
    } else if (dlk->parsed()) {
      report.command = "dlk";
      report.parameters = {{"matrix", dlk_matrix}, {"rank", dlk_rank},
                           {"bound", dlk_bound}, {"check", dlk_check}};
      run_dlk(report, dlk_matrix, dlk_rank, dlk_bound, dlk_check);
    } else if (cdlk->parsed()) {
      report.command = "cdlk";
      report.parameters = {{"matrix", cdlk_matrix}, {"rank", cdlk_rank},
                           {"bound", cdlk_bound}};
      run_cdlk(report, cdlk_matrix, cdlk_rank, cdlk_bound);
    } else if (rank2->parsed()) {
      report.command = "rank2-tree";
      report.parameters = {{"bound", rank2_bound}};
      run_rank2_tree(report, rank2_bound, rank2_dot);
    } else if (certify->parsed()) {
      report.command = "toy certify";
      report.parameters = {{"rank", toy_rank}, {"window", toy_window}};
      run_toy_certify(report, toy_rank, toy_window);
    } else if (export_cmd->parsed()) {
      report.command = "export";
      report.parameters = {{"in", export_in}, {"out", export_out}};
      run_export(report, export_in, export_out);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::internal:
        return 1;  // a checked invariant failed mid-computation
      default:
        return 2;
    }
  }
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  return print_and_finish(report, seconds, report_path);
}
