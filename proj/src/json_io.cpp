#include "tn/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "tn/error.hpp"

namespace tn {
namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  require(!j.is_discarded(), ErrorKind::invalid_input, "malformed JSON");
  return j;
}

long long to_i64(const Int& v, const char* what) {
  require(v >= std::numeric_limits<long long>::min() &&
              v <= std::numeric_limits<long long>::max(),
          ErrorKind::resource_limit,
          std::string(what) + " too large for JSON output");
  return static_cast<long long>(v);
}

long long expect_int(const json& j, const char* what) {
  require(j.is_number_integer(), ErrorKind::invalid_input,
          std::string(what) + " must be an integer");
  return j.get<long long>();
}

std::vector<Int> label_from_json(const json& j) {
  require(j.is_array(), ErrorKind::invalid_input, "label must be an array");
  std::vector<Int> label;
  for (const auto& e : j) label.emplace_back(expect_int(e, "label entry"));
  return label;
}

// "p" or "p/q"; q > 0 enforced by the Rat normalization.
Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    require(den != 0, ErrorKind::invalid_input, "zero denominator in length");
    return Rat(num, den);
  } catch (const std::runtime_error& e) {
    throw Error(ErrorKind::invalid_input,
                "bad rational \"" + s + "\": " + e.what());
  }
}

// Recipe step wire format, by tag arity:
//   ["K", i, k, exp]        conjugation generator
//   ["K", i, k, l, exp]     commutator generator
//   ["delta12", exp] / ["omega1", exp] / ["pi", i, exp]
json step_to_json(const RecipeStep& s) {
  json j = json::array();
  switch (s.gen.kind) {
    case GenKind::k2: j = {"K", s.gen.i, s.gen.k}; break;
    case GenKind::k3: j = {"K", s.gen.i, s.gen.k, s.gen.l}; break;
    case GenKind::delta12: j = {"delta12"}; break;
    case GenKind::omega1: j = {"omega1"}; break;
    case GenKind::pi: j = {"pi", s.gen.i}; break;
  }
  j.push_back(s.exp);
  return j;
}

RecipeStep step_from_json(const json& j) {
  require(j.is_array() && j.size() >= 2 && j[0].is_string(),
          ErrorKind::invalid_input, "recipe step must be [tag, ..., exp]");
  std::string tag = j[0].get<std::string>();
  std::vector<int> args;
  for (std::size_t i = 1; i < j.size(); ++i)
    args.push_back(static_cast<int>(expect_int(j[i], "recipe step argument")));
  int exp = args.back();
  args.pop_back();
  GeneratorName name{};
  if (tag == "K" && args.size() == 2) {
    name = {GenKind::k2, args[0], args[1], 0};
  } else if (tag == "K" && args.size() == 3) {
    name = {GenKind::k3, args[0], args[1], args[2]};
  } else if (tag == "delta12" && args.empty()) {
    name = {GenKind::delta12, 0, 0, 0};
  } else if (tag == "omega1" && args.empty()) {
    name = {GenKind::omega1, 0, 0, 0};
  } else if (tag == "pi" && args.size() == 1) {
    name = {GenKind::pi, args[0], 0, 0};
  } else {
    fail(ErrorKind::invalid_input, "unknown recipe step tag \"" + tag + "\"");
  }
  return RecipeStep{name, exp};
}

}  // namespace

std::string automorphism_to_json(const MarkedAutomorphism& phi) {
  json j;
  j["rank"] = phi.rank;
  json images = json::array();
  for (const FreeWord& w : phi.images) images.push_back(w.str());
  j["images"] = images;
  if (phi.recipe) {
    json recipe = json::array();
    for (const RecipeStep& s : *phi.recipe) recipe.push_back(step_to_json(s));
    j["recipe"] = recipe;
  }
  return j.dump(2);
}

MarkedAutomorphism automorphism_from_json(const std::string& text) {
  json j = parse_json(text);
  require(j.is_object() && j.contains("rank") && j.contains("images"),
          ErrorKind::invalid_input,
          "automorphism JSON needs \"rank\" and \"images\"");
  MarkedAutomorphism phi;
  phi.rank = static_cast<int>(expect_int(j["rank"], "rank"));
  require(phi.rank >= 1, ErrorKind::invalid_input, "rank must be positive");
  require(j["images"].is_array() &&
              static_cast<int>(j["images"].size()) == phi.rank,
          ErrorKind::invalid_input, "images must list one word per generator");
  for (const auto& w : j["images"]) {
    require(w.is_string(), ErrorKind::invalid_input, "image must be a string");
    phi.images.push_back(FreeWord::parse(phi.rank, w.get<std::string>()));
  }
  if (j.contains("recipe")) {
    require(j["recipe"].is_array(), ErrorKind::invalid_input,
            "recipe must be an array of steps");
    std::vector<RecipeStep> steps;
    for (const auto& s : j["recipe"]) steps.push_back(step_from_json(s));
    // The recipe must actually build the stated images.
    MarkedAutomorphism check = evaluate_recipe(phi.rank, steps);
    require(check.images == phi.images, ErrorKind::invalid_input,
            "recipe does not evaluate to the stated images");
    phi.recipe = std::move(steps);
  }
  return phi;
}

std::string matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c)
      row.push_back(to_i64(m.at(r, c), "matrix entry"));
    rows.push_back(row);
  }
  return rows.dump();
}

IntMatrix matrix_from_json(const std::string& text) {
  json j = parse_json(text);
  require(j.is_array() && !j.empty(), ErrorKind::invalid_input,
          "matrix JSON must be a nonempty array of rows");
  std::vector<std::vector<Int>> rows;
  for (const auto& row : j) {
    require(row.is_array() && row.size() == j[0].size(),
            ErrorKind::invalid_input, "matrix rows must have equal length");
    std::vector<Int> r;
    for (const auto& e : row) r.emplace_back(expect_int(e, "matrix entry"));
    rows.push_back(std::move(r));
  }
  return IntMatrix(rows);
}

std::string graph_to_json(const LabelledGraph& g) {
  json j;
  j["rank"] = g.rank();
  json vertices = json::array();
  for (int v = 0; v < g.num_vertices(); ++v) vertices.push_back(v);
  j["vertices"] = vertices;
  json edges = json::array();
  for (const Edge& e : g.edges()) {
    json je;
    je["src"] = e.src;
    je["dst"] = e.dst;
    json label = json::array();
    for (const Int& x : e.label) label.push_back(to_i64(x, "label entry"));
    je["label"] = label;
    je["len"] = to_string(e.length);
    edges.push_back(je);
  }
  j["edges"] = edges;
  return j.dump(2);
}

LabelledGraph graph_from_json(const std::string& text) {
  json j = parse_json(text);
  require(j.is_object() && j.contains("rank") && j.contains("vertices") &&
              j.contains("edges"),
          ErrorKind::invalid_input,
          "graph JSON needs \"rank\", \"vertices\" and \"edges\"");
  int rank = static_cast<int>(expect_int(j["rank"], "rank"));
  require(j["vertices"].is_array() && !j["vertices"].empty(),
          ErrorKind::invalid_input, "vertices must be a nonempty array");
  int n = static_cast<int>(j["vertices"].size());
  for (int v = 0; v < n; ++v)
    require(j["vertices"][v].is_number_integer() &&
                j["vertices"][v].get<long long>() == v,
            ErrorKind::invalid_input, "vertices must be listed as 0..V-1");
  require(j["edges"].is_array(), ErrorKind::invalid_input,
          "edges must be an array");
  std::vector<Edge> edges;
  for (const auto& je : j["edges"]) {
    require(je.is_object() && je.contains("src") && je.contains("dst") &&
                je.contains("label"),
            ErrorKind::invalid_input,
            "edge needs \"src\", \"dst\" and \"label\"");
    Edge e;
    e.src = static_cast<int>(expect_int(je["src"], "src"));
    e.dst = static_cast<int>(expect_int(je["dst"], "dst"));
    require(e.src >= 0 && e.src < n && e.dst >= 0 && e.dst < n,
            ErrorKind::invalid_input, "edge endpoint out of range");
    e.label = label_from_json(je["label"]);
    if (je.contains("len")) {
      require(je["len"].is_string(), ErrorKind::invalid_input,
              "len must be a string like \"1\" or \"1/2\"");
      e.length = rat_from_string(je["len"].get<std::string>());
    }
    edges.push_back(std::move(e));
  }
  return LabelledGraph(rank, n, std::move(edges));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), ErrorKind::invalid_input, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), ErrorKind::invalid_input, "cannot write " + path);
  out << content;
  require(out.good(), ErrorKind::invalid_input, "write failed for " + path);
}

}  // namespace tn
