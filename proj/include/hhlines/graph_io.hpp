#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hhlines/graph.hpp"

namespace hhlines {

/// Decodes one graph6 line. An optional ">>graph6<<" header and trailing
/// whitespace are accepted. With `require_connected`, a disconnected graph is
/// rejected with Error{Disconnected}.
/// Throws Error{MalformedEncoding} or Error{TooLarge}.
Graph parse_graph6(std::string_view text, bool require_connected = false);

std::string to_graph6(const Graph& g);

/// Whitespace-separated "u v" lines, 0-based labels, '#' starts a comment.
/// The graph has max-label+1 vertices.
Graph parse_edge_list(std::string_view text);

enum class InputFormat { Graph6, EdgeList };

/// One entry per graph in a stream. Parse failures are kept per entry so that
/// a bad line does not hide the rest of the stream.
struct InputRecord {
  std::size_t line = 0;
  std::string text;
  std::optional<Graph> graph;
  std::string error;
};

/// graph6: one graph per non-blank line. Edge list: the whole stream is one graph.
std::vector<InputRecord> read_graphs(std::istream& in, InputFormat format);

}  // namespace hhlines
