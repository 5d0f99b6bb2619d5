// graph6 codec: size header N(n) then the upper triangle of the adjacency
// matrix in column order (0,1),(0,2),(1,2),(0,3),... packed six bits per
// byte, each byte offset by 63. Orders above 62 use the '~' + 3 byte header.

#include "reedcheck/graph.hpp"

namespace reedcheck {

namespace {

constexpr int kOffset = 63;
constexpr std::string_view kHeader = ">>graph6<<";

bool printable6(unsigned char c) { return c >= kOffset && c <= kOffset + 63; }

} // namespace

std::string to_graph6(const Graph &g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kOffset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kOffset));
    out.push_back(static_cast<char>((n & 63) + kOffset));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  }
  return out;
}

Graph from_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kHeader)) {
    pos = kHeader.size();
  }
  if (pos >= text.size()) {
    throw Graph6Error(pos, "missing size byte");
  }
  const auto byte_at = [&](std::size_t i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (!printable6(c)) {
      throw Graph6Error(i, "byte value " + std::to_string(c) + " outside 63..126");
    }
    return static_cast<int>(c) - kOffset;
  };

  int n = byte_at(pos);
  if (n == 63) {
    if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos + 1]) == 126) {
      throw Graph6Error(pos + 1, "orders above 258047 are not supported");
    }
    if (pos + 3 >= text.size()) {
      throw Graph6Error(text.size(), "truncated extended size header");
    }
    n = (byte_at(pos + 1) << 12) | (byte_at(pos + 2) << 6) | byte_at(pos + 3);
    if (n > kMaxOrder) {
      throw Graph6Error(pos, "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
    }
    pos += 4;
  } else {
    pos += 1;
  }

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() - pos < body) {
    throw Graph6Error(text.size(), "truncated body: expected " + std::to_string(body) + " bytes, got " +
                                       std::to_string(text.size() - pos));
  }
  if (text.size() - pos > body) {
    throw Graph6Error(pos + body, "unexpected trailing data");
  }

  std::vector<std::uint64_t> rows(n, 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = byte_at(pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
    }
  }
  if (bits % 6 != 0) {
    const int last = byte_at(pos + body - 1);
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) {
      throw Graph6Error(pos + body - 1, "nonzero padding bits");
    }
  }
  return Graph::from_rows(rows);
}

} // namespace reedcheck
