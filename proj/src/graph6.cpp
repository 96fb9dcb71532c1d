#include "chrombound/graph6.hpp"

#include "chrombound/errors.hpp"

namespace chrombound {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sextet(char c) {
  if (c < 63 || c > 126) {
    throw FormatError(std::string("graph6 byte out of range: code ") +
                      std::to_string(static_cast<unsigned char>(c)));
  }
  return c - 63;
}

}  // namespace

Graph from_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
    text.remove_prefix(1);
  }
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw FormatError("empty graph6 string");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = sextet(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] == '~') {
    if (text.size() < 8) throw FormatError("truncated graph6 size header");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(text[i]);
    pos = 8;
  } else {
    if (text.size() < 4) throw FormatError("truncated graph6 size header");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | sextet(text[i]);
    if (n < 63) throw FormatError("non-minimal graph6 size header");
    pos = 4;
  }
  if (n > kMaxVertices) {
    throw FormatError("graph6 order " + std::to_string(n) +
                      " exceeds the 64-vertex cap");
  }

  const long bits = n * (n - 1) / 2;
  const long bytes = (bits + 5) / 6;
  if (static_cast<long>(text.size() - pos) != bytes) {
    throw FormatError("graph6 body has " + std::to_string(text.size() - pos) +
                      " bytes, expected " + std::to_string(bytes));
  }

  Graph g(static_cast<int>(n));
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int value = sextet(text[pos + k / 6]);
      if ((value >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if (sextet(text.back()) & pad_mask) {
      throw FormatError("graph6 padding bits are not zero");
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

}  // namespace chrombound
