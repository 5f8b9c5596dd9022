#pragma once

#include <string>

#include "tn/automorphism.hpp"
#include "tn/int_matrix.hpp"
#include "tn/labelled_graph.hpp"

namespace tn {

// JSON text <-> library values. Parsers throw Error(invalid_input) on
// malformed text, wrong shapes, or values violating type invariants.
// Numbers must fit in 64 bits on the wire; larger entries are refused
// rather than rounded.

std::string automorphism_to_json(const MarkedAutomorphism& phi);
MarkedAutomorphism automorphism_from_json(const std::string& text);

std::string matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const std::string& text);

std::string graph_to_json(const LabelledGraph& g);
LabelledGraph graph_from_json(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace tn
