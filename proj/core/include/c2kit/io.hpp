#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "c2kit/ecpog.hpp"
#include "c2kit/graph.hpp"
#include "c2kit/structure.hpp"

namespace c2kit {

// Line-oriented text formats, '#' starts a comment, all integers decimal.
//
//   graph <n> <m>        e <u> <v>          v <u> <color>   (optional)
//   sig <Name>/<arity> ...   univ <n>       <Name> <a1> ... <ar>
//   ecpog <n> <t>        u <a> <b> <color>  d <a> <b> <color>
//
// The ecpog reader additionally accepts optional `v <u> <color>` lines for
// vertex-colored inputs; the writer emits them only when a coloring is given.

ColoredGraph parse_graph(std::istream& in);
ColoredGraph parse_graph_text(const std::string& text);
ColoredGraph load_graph(const std::string& path);
std::string serialize_graph(const ColoredGraph& g);

RelationalStructure parse_structure(std::istream& in);
RelationalStructure parse_structure_text(const std::string& text);
RelationalStructure load_structure(const std::string& path);
std::string serialize_structure(const RelationalStructure& s);

struct ParsedEcPog {
    EcPog pog;
    std::optional<std::vector<int>> coloring;
};

ParsedEcPog parse_ecpog(std::istream& in);
ParsedEcPog parse_ecpog_text(const std::string& text);
ParsedEcPog load_ecpog(const std::string& path);
std::string serialize_ecpog(const EcPog& p,
                            const std::optional<std::vector<int>>& coloring = std::nullopt);

/// First non-comment keyword of a file: "graph", "sig", "ecpog", "c2inv",
/// "ecinv". Used by the CLI to dispatch on input kind.
std::string sniff_format(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace c2kit
