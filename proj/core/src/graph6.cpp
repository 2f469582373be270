#include "bicirc/graph6.hpp"

#include <stdexcept>

#include "bicirc/error.hpp"

namespace bicirc {

namespace {

constexpr std::size_t kMaxOrder = std::size_t{1} << 18;

void encode_order(std::size_t n, std::string& out) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63u) + 63));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63u) + 63));
  }
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const auto n = g.order();
  if (n > kMaxOrder) throw std::invalid_argument("graph6 encoding supports at most 2^18 vertices");
  std::string out;
  encode_order(n, out);
  // Upper triangle, column by column: (0,1),(0,2),(1,2),(0,3),...
  unsigned acc = 0;
  int filled = 0;
  for (std::uint32_t j = 1; j < n; ++j)
    for (std::uint32_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph graph6_decode(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 string");
  for (char c : text)
    if (c < 63 || c > 126) throw ParseError("graph6 byte out of range");

  std::size_t pos = 0;
  std::size_t n = 0;
  auto take = [&](int count) {
    if (pos + static_cast<std::size_t>(count) > text.size()) throw ParseError("truncated graph6 header");
    std::size_t v = 0;
    for (int i = 0; i < count; ++i) v = (v << 6) | static_cast<std::size_t>(text[pos++] - 63);
    return v;
  };
  if (text[0] != '~') {
    n = take(1);
  } else if (text.size() > 1 && text[1] == '~') {
    pos = 2;
    n = take(6);
  } else {
    pos = 1;
    n = take(3);
  }
  if (n > kMaxOrder) throw ParseError("graph6 order too large");

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) throw ParseError("graph6 body has wrong length");

  GraphBuilder b(n);
  std::size_t k = 0;
  for (std::uint32_t j = 1; j < n; ++j)
    for (std::uint32_t i = 0; i < j; ++i, ++k) {
      const auto byte = static_cast<unsigned>(text[pos + k / 6] - 63);
      if ((byte >> (5 - k % 6)) & 1u) b.add_edge(i, j);
    }
  if (bits % 6) {
    const auto last = static_cast<unsigned>(text.back() - 63);
    if (last & ((1u << (6 - bits % 6)) - 1u)) throw ParseError("non-zero graph6 padding");
  }
  return b.build();
}

}  // namespace bicirc
