#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "gturan/graph.hpp"

namespace gturan {

/// Largest order graph6 can represent with the 4-byte header.
inline constexpr std::size_t kMaxGraph6Order = 258047;

/// Standard graph6 text (no trailing newline). Orders up to 62 use the
/// one-byte header.
std::string graph6_encode(const Graph& g);
std::string graph6_encode(const BitGraph& g);

/// Accepts an optional ">>graph6<<" prefix and surrounding whitespace.
/// Malformed input throws ParseError with the offending byte offset.
Graph graph6_decode(std::string_view text);

/// Newline-delimited streams; blank lines are skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);
void write_graph6_stream(std::ostream& out, const std::vector<Graph>& graphs);

}  // namespace gturan
