#pragma once

// graph6 interchange: size prefix N(n) followed by the upper triangle of the
// adjacency matrix read column by column, packed 6 bits per byte, each byte
// offset by 63.

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spectra/graph.hpp"

namespace spectra {

class Graph6Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void put_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

inline int sextet(char c) {
  auto u = static_cast<unsigned char>(c);
  if (u < 63 || u > 126) throw Graph6Error(std::string("graph6: byte out of range: ") + c);
  return u - 63;
}

}  // namespace detail

inline std::string graph6_encode(const Graph& g) {
  std::string out;
  detail::put_size(out, static_cast<std::uint64_t>(g.n()));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < g.n(); ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

inline Graph graph6_decode(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("graph6: empty input");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (text[0] != '~') {
    n = static_cast<std::uint64_t>(detail::sextet(text[0]));
    pos = 1;
  } else {
    std::size_t digits = 3;
    pos = 1;
    if (text.size() > 1 && text[1] == '~') {
      digits = 6;
      pos = 2;
    }
    if (text.size() < pos + digits) throw Graph6Error("graph6: truncated size prefix");
    for (std::size_t k = 0; k < digits; ++k) n = (n << 6) | static_cast<std::uint64_t>(detail::sextet(text[pos + k]));
    pos += digits;
    if ((digits == 3 && n <= 62) || (digits == 6 && n <= 258047))
      throw Graph6Error("graph6: non-canonical size prefix");
  }
  if (n > 100000) throw Graph6Error("graph6: vertex count too large");

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes)
    throw Graph6Error("graph6: expected " + std::to_string(bytes) + " data bytes for n=" + std::to_string(n) + ", got " +
                      std::to_string(text.size() - pos));

  GraphBuilder b(static_cast<int>(n));
  std::uint64_t k = 0;
  for (int j = 1; j < static_cast<int>(n); ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = detail::sextet(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  for (std::uint64_t r = k; r < bytes * 6; ++r) {
    if ((detail::sextet(text[pos + r / 6]) >> (5 - r % 6)) & 1) throw Graph6Error("graph6: nonzero padding bits");
  }
  return std::move(b).build();
}

// One graph per line. Blank lines are skipped on reading.
inline void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  for (const auto& g : graphs) out << graph6_encode(g) << '\n';
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

inline std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line != "\r") out.push_back(graph6_decode(line));
  return out;
}

}  // namespace spectra
