#pragma once

#include <string>
#include <string_view>

#include "bicirc/graph.hpp"

namespace bicirc {

/// Standard graph6 (no ">>graph6<<" header). Throws std::invalid_argument for n > 2^18.
std::string graph6_encode(const Graph& g);
/// Accepts an optional ">>graph6<<" header and trailing newline.
/// Throws ParseError on malformed input.
Graph graph6_decode(std::string_view text);

}  // namespace bicirc
