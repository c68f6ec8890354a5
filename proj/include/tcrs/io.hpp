#pragma once

// JSON interchange for request graphs and temporal graphs, plus Graphviz
// export.
//
// Request graph:  {"comment"?: str, "vertices": [str...], "arcs": [[str,str]...]}
// Temporal graph: {"comment"?: str, "directed": bool, "vertices": [str...],
//                  "edges": [{"u": str, "v": str, "t": int >= 1}...]}
//
// The emitters write one canonical layout (keys in the order above, arcs and
// edges sorted), so parse followed by emit reproduces emitted files byte for
// byte.

#include "tcrs/graph.hpp"
#include "tcrs/temporal.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace tcrs {

struct RequestDocument {
    DiGraph graph;
    std::string comment;
};

struct TemporalDocument {
    TemporalGraph graph;
    std::string comment;
};

// Errors: ParseError (malformed JSON or schema, message names the field),
// DuplicateVertex, DuplicateArc, SelfLoop, UnknownVertex, InvalidTime.
RequestDocument parse_request(std::string_view text);
TemporalDocument parse_temporal(std::string_view text);

std::string emit_request(const DiGraph& g, std::string_view comment = {});
std::string emit_temporal(const TemporalGraph& g, std::string_view comment = {});

// True when the text looks like a temporal graph file (has "edges").
bool is_temporal_document(std::string_view text);

// Throws ParseError when the file cannot be read.
std::string read_file(const std::filesystem::path& path);

std::string to_dot(const DiGraph& g);
std::string to_dot(const TemporalGraph& g);

} // namespace tcrs
