#include "hhlines/graph_io.hpp"

#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>

namespace hhlines {
namespace {

constexpr int kBias = 63;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

int sextet(char c) {
  const int value = static_cast<unsigned char>(c) - kBias;
  if (value < 0 || value > 63)
    throw Error(ErrorKind::MalformedEncoding, std::string("byte '") + c + "' outside the graph6 range");
  return value;
}

}  // namespace

Graph parse_graph6(std::string_view text, bool require_connected) {
  text = trim(text);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw Error(ErrorKind::MalformedEncoding, "empty graph6 string");

  long n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = sextet(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] == '~') {
    throw Error(ErrorKind::TooLarge, "graph6 8-byte size header (n > 258047)");
  } else {
    if (text.size() < 4) throw Error(ErrorKind::MalformedEncoding, "truncated graph6 size header");
    n = (sextet(text[1]) << 12) | (sextet(text[2]) << 6) | sextet(text[3]);
    if (n < 63) throw Error(ErrorKind::MalformedEncoding, "non-minimal graph6 size header");
    pos = 4;
  }
  if (n > kMaxVertices) throw Error(ErrorKind::TooLarge, "graph6 encodes " + std::to_string(n) + " vertices");
  if (n == 0) throw Error(ErrorKind::MalformedEncoding, "graph6 encodes the empty graph");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t chars = (bits + 5) / 6;
  if (text.size() - pos != chars)
    throw Error(ErrorKind::MalformedEncoding, "expected " + std::to_string(chars) + " data bytes, got " +
                                                  std::to_string(text.size() - pos));

  std::vector<VertexPair> edges;
  std::size_t k = 0;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u, ++k) {
      const int byte = sextet(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({u, v});
    }
  for (; k < chars * 6; ++k)
    if ((sextet(text[pos + k / 6]) >> (5 - k % 6)) & 1)
      throw Error(ErrorKind::MalformedEncoding, "nonzero graph6 padding bit");

  Graph g(static_cast<int>(n), edges);
  if (require_connected && !g.is_connected()) throw Error(ErrorKind::Disconnected, "graph is disconnected");
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<VertexPair> edges;
  int max_label = -1;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<int> tokens;
    std::istringstream words{std::string(line)};
    for (std::string word; words >> word;) {
      int value = 0;
      const auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
      if (ec != std::errc{} || end != word.data() + word.size() || value < 0)
        throw Error(ErrorKind::NonInteger, "line " + std::to_string(line_no) + ": bad vertex label '" + word + "'");
      tokens.push_back(value);
    }
    if (tokens.empty()) continue;
    if (tokens.size() != 2)
      throw Error(ErrorKind::MalformedEncoding, "line " + std::to_string(line_no) + ": expected two labels");
    if (tokens[0] == tokens[1])
      throw Error(ErrorKind::SelfLoop, "line " + std::to_string(line_no) + ": self-loop at " +
                                           std::to_string(tokens[0]));
    if (std::max(tokens[0], tokens[1]) >= kMaxVertices)
      throw Error(ErrorKind::TooLarge, "line " + std::to_string(line_no) + ": label exceeds 63");
    max_label = std::max({max_label, tokens[0], tokens[1]});
    edges.push_back(VertexPair::of(tokens[0], tokens[1]));
  }
  if (max_label < 0) throw Error(ErrorKind::MalformedEncoding, "edge list has no edges");
  return Graph(max_label + 1, edges);
}

std::vector<InputRecord> read_graphs(std::istream& in, InputFormat format) {
  std::vector<InputRecord> records;
  if (format == InputFormat::EdgeList) {
    InputRecord rec;
    rec.line = 1;
    rec.text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    try {
      rec.graph = parse_edge_list(rec.text);
    } catch (const Error& e) {
      rec.error = std::string(to_string(e.kind())) + ": " + e.what();
    }
    records.push_back(std::move(rec));
    return records;
  }
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty() || body == ">>graph6<<") continue;
    InputRecord rec;
    rec.line = line_no;
    rec.text = std::string(body);
    try {
      rec.graph = parse_graph6(body);
    } catch (const Error& e) {
      rec.error = std::string(to_string(e.kind())) + ": " + e.what();
    }
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace hhlines
