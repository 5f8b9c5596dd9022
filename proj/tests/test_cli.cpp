#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

// Drives the installed binary through std::system; TN_CLI_PATH comes from
// the build system.

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliResult {
  int code = -1;
  std::string output;  // stdout and stderr interleaved
};

fs::path scratch_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "tn_cli_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  fs::path capture = scratch_dir() / ("capture" + std::to_string(counter++));
  std::string cmd = std::string("\"") + TN_CLI_PATH + "\" " + args + " > " +
                    capture.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  CliResult r;
  if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
  r.output = slurp(capture);
  return r;
}

int count_occurrences(const std::string& text, const std::string& needle) {
  int n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size()))
    ++n;
  return n;
}

const char* kTwoVertexGraph = R"({"rank": 3, "vertices": [0, 1],
 "edges": [
   {"src": 0, "dst": 0, "label": [1, 0, 0]},
   {"src": 1, "dst": 1, "label": [0, 1, 0]},
   {"src": 0, "dst": 1, "label": [0, 0, 1]},
   {"src": 1, "dst": 0, "label": [0, 0, 1]}
 ]})";

const char* kRoseGraph = R"({"rank": 3, "vertices": [0],
 "edges": [
   {"src": 0, "dst": 0, "label": [1, 0, 0]},
   {"src": 0, "dst": 0, "label": [0, 1, 0]},
   {"src": 0, "dst": 0, "label": [0, 0, 1]}
 ]})";

}  // namespace

TEST_CASE("verification sweeps succeed and tally their checks") {
  CliResult r = run_cli("torelli verify-appendix --n 4");
  CHECK(r.code == 0);
  CHECK(r.output.find("torelli verify-appendix: 3/3 checks passed") !=
        std::string::npos);
  CHECK(r.output.find("FAIL") == std::string::npos);

  r = run_cli("torelli verify-conjugation --n 3 --hmax 1");
  CHECK(r.code == 0);
  CHECK(r.output.find(" checks passed") != std::string::npos);
  CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("the run report mirrors the exit code contract") {
  fs::path rp = scratch_dir() / "report.json";
  CliResult r = run_cli("dlk --rank 2 --bound 1 --check nonempty --report " +
                        rp.string());
  CHECK(r.code == 0);
  json j = json::parse(slurp(rp), nullptr, false);
  REQUIRE(!j.is_discarded());
  CHECK(j["command"] == "dlk");
  CHECK(j["parameters"]["rank"] == 2);
  REQUIRE(j["checks"].is_array());
  CHECK(!j["checks"].empty());
  for (const json& c : j["checks"]) {
    CHECK(c["pass"] == true);
    CHECK(c.contains("name"));
  }
  CHECK(j["wall_seconds"].is_number());
  CHECK(j["wall_seconds"].get<double>() >= 0.0);
}

TEST_CASE("rose enumeration output is deterministic JSON") {
  fs::path out1 = scratch_dir() / "roses1.json";
  fs::path out2 = scratch_dir() / "roses2.json";
  CliResult r1 = run_cli("roses enumerate --rank 2 --bound 1 --out " +
                         out1.string());
  CliResult r2 = run_cli("roses enumerate --rank 2 --bound 1 --out " +
                         out2.string());
  CHECK(r1.code == 0);
  CHECK(r1.output == r2.output);
  std::string payload = slurp(out1);
  CHECK(payload == slurp(out2));
  json j = json::parse(payload, nullptr, false);
  REQUIRE(!j.is_discarded());
  REQUIRE(j.is_array());
  CHECK(j.size() == 5);
  json identity = json::array({json::array({1, 0}), json::array({0, 1})});
  bool found = false;
  for (const json& m : j) found = found || m == identity;
  CHECK(found);
}

TEST_CASE("graphs export as canonical Graphviz digraphs") {
  fs::path in = scratch_dir() / "two_vertex.json";
  spit(in, kTwoVertexGraph);
  CliResult r = run_cli("export --in " + in.string());
  CHECK(r.code == 0);
  CHECK(r.output.find("digraph G {") != std::string::npos);
  CHECK(count_occurrences(r.output, " -> ") == 4);
  CHECK(count_occurrences(r.output, "v0 -> v1") == 2);
  // Edge normalization may flip an edge, negating its label; between them
  // the four edges still show all three letters.
  CHECK(r.output.find("(-1,0,0)") != std::string::npos);
  CHECK(r.output.find("(0,-1,0)") != std::string::npos);
  CHECK(r.output.find("(0,0,1)") != std::string::npos);
  CHECK(r.output.find("(0,0,-1)") != std::string::npos);
  CHECK(r.output.find("len=1") != std::string::npos);

  CliResult again = run_cli("export --in " + in.string());
  CHECK(again.output == r.output);

  fs::path dot = scratch_dir() / "two_vertex.dot";
  CliResult to_file =
      run_cli("export --in " + in.string() + " --out " + dot.string());
  CHECK(to_file.code == 0);
  CHECK(slurp(dot) == r.output);

  fs::path rose = scratch_dir() / "rose.json";
  spit(rose, kRoseGraph);
  CliResult rr = run_cli("export --in " + rose.string());
  CHECK(rr.code == 0);
  CHECK(count_occurrences(rr.output, "v0 -> v0") == 3);
}

TEST_CASE("single-matrix link checks succeed on a sample marking") {
  fs::path m = scratch_dir() / "sample_matrix.json";
  spit(m, "[[2,1,0],[1,1,0],[0,0,1]]");
  CliResult r = run_cli("dlk --matrix " + m.string() + " --check homology");
  CHECK(r.code == 0);
  CHECK(r.output.find("dlk: 1/1 checks passed") != std::string::npos);

  r = run_cli("cdlk --matrix " + m.string());
  CHECK(r.code == 0);
  CHECK(r.output.find("cdlk: 2/2 checks passed") != std::string::npos);
}

TEST_CASE("rank-2 tree run writes fraction-labelled DOT") {
  fs::path dot = scratch_dir() / "tree.dot";
  CliResult r = run_cli("rank2-tree --bound 1 --dot " + dot.string());
  CHECK(r.code == 0);
  CHECK(r.output.find(" checks passed") != std::string::npos);
  std::string payload = slurp(dot);
  CHECK(payload.find("graph rank2_tree") != std::string::npos);
  CHECK(payload.find("0/1") != std::string::npos);
  CHECK(payload.find("1/0") != std::string::npos);
}

TEST_CASE("bad usage and bad input both exit two") {
  CHECK(run_cli("roses enumerate --rank 2 --bound 1 --bogus").code == 2);
  CHECK(run_cli("export").code == 2);  // --in is required
  CHECK(run_cli("no-such-command").code == 2);

  fs::path junk = scratch_dir() / "junk.json";
  spit(junk, "{ not json");
  CliResult r = run_cli("export --in " + junk.string());
  CHECK(r.code == 2);
  CHECK(r.output.find("error:") != std::string::npos);

  fs::path bad = scratch_dir() / "singular.json";
  spit(bad, "[[1,1],[1,1]]");
  r = run_cli("dlk --matrix " + bad.string() + " --check nonempty");
  CHECK(r.code == 2);
  CHECK(r.output.find("error:") != std::string::npos);

  CHECK(run_cli("toy certify --rank 2 --window 1").code == 2);
}

TEST_CASE("help is not an error") {
  CliResult r = run_cli("--help");
  CHECK(r.code == 0);
  CHECK(r.output.find("Exact verification") != std::string::npos);
}
