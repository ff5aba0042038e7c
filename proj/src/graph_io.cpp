#include "limitlab/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "limitlab/error.hpp"

namespace limitlab {

namespace {

void append_size(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    // 18-bit size, high chunk first.
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.n();
  require(n <= 258047, "size-violation", "graph6 encoding supports at most 258047 vertices");
  std::string out;
  append_size(out, n);
  int chunk = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

Graph from_graph6(const std::string& line) {
  std::string s = line;
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  require(!s.empty(), "parse-error", "empty graph6 string");

  std::size_t pos = 0;
  auto next = [&]() -> int {
    require(pos < s.size(), "parse-error", "truncated graph6 string");
    int c = static_cast<unsigned char>(s[pos++]);
    require(c >= 63 && c <= 126, "parse-error", "graph6 byte out of range");
    return c - 63;
  };

  long long n;
  int first = next();
  if (first < 63) {
    n = first;
  } else {
    // "~" + 3 bytes covers sizes up to 258047; the high chunk stays below 63
    // there, so a second "~" can only start the unsupported 36-bit form.
    int a = next();
    require(a < 63, "size-violation", "graphs beyond 258047 vertices are not supported");
    int b = next(), c = next();
    n = (static_cast<long long>(a) << 12) | (b << 6) | c;
  }
  Graph g(static_cast<int>(n));

  int chunk = 0, avail = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (avail == 0) {
        chunk = next();
        avail = 6;
      }
      if ((chunk >> (avail - 1)) & 1) g.add_edge(i, j);
      --avail;
    }
  }
  require(pos == s.size(), "parse-error", "trailing bytes after graph6 data");
  return g;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), "file-not-found", "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph read_graph6_file(const std::string& path) {
  std::string text = read_text_file(path);
  std::size_t a = text.find_first_not_of(" \t\r\n");
  require(a != std::string::npos, "parse-error", "file contains no graph6 data: " + path);
  std::size_t b = text.find_last_not_of(" \t\r\n");
  return from_graph6(text.substr(a, b - a + 1));
}

}  // namespace limitlab
