#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgs/signed_graph.hpp"

namespace sgs {

/// Edge-list text: a header `n m`, then m lines `u v s` with s one of
/// `+`, `-`, `+1`, `-1`, `1`. `#` starts a comment. Throws ParseError with
/// the offending line number, or the SignedGraph::build error.
SignedGraph read_edge_list(std::istream& in);
SignedGraph read_edge_list(std::string_view text);
SignedGraph read_edge_list_file(const std::filesystem::path& path);

/// Writes the normalized form; read_edge_list inverts it.
void write_edge_list(std::ostream& out, const SignedGraph& g);
std::string to_edge_list(const SignedGraph& g);

/// Decodes one graph6 line into an all-positive signed graph.
SignedGraph decode_graph6(std::string_view line);
std::string encode_graph6(const SignedGraph& g);

struct Graph6Batch {
  std::vector<SignedGraph> graphs;
  std::optional<std::string> error;  // set only in lenient mode
  int error_line = 0;
};

/// One graph per non-empty line; a `>>graph6<<` header is skipped. A bad
/// line throws ParseError naming the line, or with `lenient` ends the batch
/// keeping the graphs read so far.
Graph6Batch read_graph6(std::istream& in, bool lenient = false);
Graph6Batch read_graph6(std::string_view text, bool lenient = false);
Graph6Batch read_graph6_file(const std::filesystem::path& path, bool lenient = false);

}  // namespace sgs
