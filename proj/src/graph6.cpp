#include "gturan/graph6.hpp"

#include "gturan/errors.hpp"

namespace gturan {

namespace {

constexpr std::string_view kPrefix = ">>graph6<<";

template <class HasEdge>
std::string encode(std::size_t n, HasEdge has_edge) {
  if (n > kMaxGraph6Order)
    throw LimitExceeded("graph6 supports at most " + std::to_string(kMaxGraph6Order) + " vertices");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

int sextet(std::string_view text, std::size_t pos, std::size_t base) {
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw ParseError("invalid graph6 byte", base + pos);
  return c - 63;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  return encode(g.order(), [&](Vertex i, Vertex j) { return g.has_edge(i, j); });
}

std::string graph6_encode(const BitGraph& g) {
  return encode(g.order(), [&](Vertex i, Vertex j) { return g.has_edge(i, j); });
}

Graph graph6_decode(std::string_view text) {
  std::size_t base = 0;
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
    text.remove_prefix(1);
    ++base;
  }
  while (!text.empty() && std::string_view(" \t\r\n").find(text.back()) != std::string_view::npos)
    text.remove_suffix(1);
  if (text.starts_with(kPrefix)) {
    text.remove_prefix(kPrefix.size());
    base += kPrefix.size();
  }
  if (text.empty()) throw ParseError("empty graph6 string", base);

  std::size_t n = 0;
  std::size_t pos = 0;
  if (static_cast<unsigned char>(text[0]) == 126) {
    if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126)
      throw ParseError("8-byte graph6 headers are not supported", base + 1);
    if (text.size() < 4) throw ParseError("truncated graph6 header", base + text.size());
    n = (static_cast<std::size_t>(sextet(text, 1, base)) << 12) |
        (static_cast<std::size_t>(sextet(text, 2, base)) << 6) | static_cast<std::size_t>(sextet(text, 3, base));
    pos = 4;
  } else {
    n = static_cast<std::size_t>(sextet(text, 0, base));
    pos = 1;
  }

  const std::size_t bits = n * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (text.size() - pos < need) throw ParseError("truncated graph6 body", base + text.size());
  if (text.size() - pos > need) throw ParseError("trailing bytes after graph6 body", base + pos + need);

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int value = sextet(text, pos + k / 6, base);
      if ((value >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  if (bits % 6 != 0) {
    const std::size_t last = pos + need - 1;
    const int value = sextet(text, last, base);
    if ((value & ((1 << (6 - bits % 6)) - 1)) != 0) throw ParseError("nonzero graph6 padding bits", base + last);
  }
  return Graph::from_edges(n, edges);
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    const std::size_t start = offset;
    offset += line.size() + 1;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(graph6_decode(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(out.size() + 1) + ": malformed graph6", start + e.offset());
    }
  }
  return out;
}

void write_graph6_stream(std::ostream& out, const std::vector<Graph>& graphs) {
  for (const auto& g : graphs) out << graph6_encode(g) << '\n';
}

}  // namespace gturan
