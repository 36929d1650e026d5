#include "hlink/graph6.hpp"

#include <cstdint>
#include <vector>

namespace hlink {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void append_size(std::string& out, long long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
}

int sextet(std::string_view text, std::size_t pos, std::size_t base) {
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126)
    throw ParseError(base + pos, "graph6 byte outside the printable range 63..126");
  return c - 63;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const long long n = g.vertex_count();
  if (n > kGraph6MaxVertices) throw DomainError("graph too large for graph6");
  std::string out;
  append_size(out, n);
  int acc = 0, bits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

Graph decode_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kHeader)) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError(base, "empty graph6 record");

  long long n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = sextet(text, 0, base);
    pos = 1;
  } else if (text.size() >= 2 && text[1] == '~') {
    if (text.size() < 8) throw ParseError(base + text.size(), "truncated 36-bit size field");
    for (pos = 2; pos < 8; ++pos) n = (n << 6) | sextet(text, pos, base);
  } else {
    if (text.size() < 4) throw ParseError(base + text.size(), "truncated 18-bit size field");
    for (pos = 1; pos < 4; ++pos) n = (n << 6) | sextet(text, pos, base);
  }
  if (n > 1'000'000) throw ParseError(base, "graph6 vertex count too large to materialize");

  const long long pairs = n * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((pairs + 5) / 6);
  if (text.size() - pos != body) {
    const std::size_t at = text.size() - pos < body ? text.size() : pos + body;
    throw ParseError(base + at, "graph6 body has " + std::to_string(text.size() - pos) +
                                    " bytes, expected " + std::to_string(body));
  }

  GraphBuilder b(static_cast<int>(n));
  long long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const std::size_t byte = pos + static_cast<std::size_t>(k / 6);
      const int value = sextet(text, byte, base);
      if ((value >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  // Padding bits of the last byte must be zero for a canonical record.
  if (pairs % 6 != 0) {
    const std::size_t last = pos + body - 1;
    const int value = sextet(text, last, base);
    const int pad = 6 - static_cast<int>(pairs % 6);
    if (value & ((1 << pad) - 1)) throw ParseError(base + last, "nonzero graph6 padding bits");
  }
  return b.build();
}

}  // namespace hlink
