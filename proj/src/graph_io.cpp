#include "fourcolor/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "fourcolor/errors.hpp"

namespace fourcolor {
namespace {

constexpr int kOffset = 63;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto pos = text.find('\n');
    lines.push_back(text.substr(0, pos));
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return lines;
}

std::vector<long> parse_ints(std::string_view line) {
  std::vector<long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc()) throw ParseError("expected integer in line: " + std::string(line));
    i = static_cast<std::size_t>(ptr - line.data());
    if (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
      throw ParseError("unexpected character in line: " + std::string(line));
    out.push_back(value);
  }
  return out;
}

bool is_content_line(std::string_view line) {
  line = trim(line);
  return !line.empty() && line.front() != '#';
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  for (char c : text) {
    auto b = static_cast<unsigned char>(c);
    if (b < kOffset || b > 126) throw ParseError("graph6: byte " + std::to_string(b) + " is not printable graph6");
  }
  if (text.empty()) throw ParseError("graph6: empty input");

  auto value = [&](std::size_t i) { return static_cast<long>(static_cast<unsigned char>(text[i]) - kOffset); };
  long n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = value(0);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) throw ParseError("graph6: truncated size header");
    n = (value(1) << 12) | (value(2) << 6) | value(3);
    if (n < 63) throw ParseError("graph6: non-canonical size header");
    pos = 4;
  } else {
    if (text.size() < 8) throw ParseError("graph6: truncated size header");
    n = 0;
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | value(i);
    if (n < 258048) throw ParseError("graph6: non-canonical size header");
    pos = 8;
  }
  if (n > (1L << 20)) throw ParseError("graph6: graph too large");

  const long bits = n * (n - 1) / 2;
  const long expected = (bits + 5) / 6;
  if (static_cast<long>(text.size() - pos) != expected)
    throw ParseError("graph6: expected " + std::to_string(expected) + " data bytes, found " +
                     std::to_string(text.size() - pos));

  const int nv = static_cast<int>(n);
  std::vector<Edge> edges;
  long k = 0;
  for (int j = 1; j < nv; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      long byte = value(pos + static_cast<std::size_t>(k / 6));
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  // Padding bits must be zero in canonical output; tolerate but ignore them.
  return Graph(nv, edges);
}

std::string emit_graph6(const Graph& g) {
  const long n = g.n();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kOffset));
  } else if (n < 258048) {
    out.push_back('~');
    for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  } else {
    out += "~~";
    for (int shift : {30, 24, 18, 12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string_view> lines;
  for (auto line : split_lines(text))
    if (is_content_line(line)) lines.push_back(trim(line));
  if (lines.empty()) throw ParseError("edge list: missing header");
  auto header = parse_ints(lines[0]);
  if (header.size() != 2 || header[0] < 0 || header[1] < 0) throw ParseError("edge list: header must be \"n m\"");
  const long n = header[0];
  const long m = header[1];
  if (static_cast<long>(lines.size()) - 1 != m)
    throw ParseError("edge list: header declares " + std::to_string(m) + " edges, found " +
                     std::to_string(lines.size() - 1));
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto e = parse_ints(lines[i]);
    if (e.size() != 2) throw ParseError("edge list: expected \"u v\": " + std::string(lines[i]));
    if (e[0] < 0 || e[1] < 0 || e[0] >= n || e[1] >= n || e[0] == e[1])
      throw ParseError("edge list: invalid edge " + std::string(lines[i]));
    edges.emplace_back(static_cast<Vertex>(e[0]), static_cast<Vertex>(e[1]));
  }
  return Graph(static_cast<int>(n), edges);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream os;
  auto edges = g.edges();
  os << g.n() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) os << u << ' ' << v << '\n';
  return os.str();
}

Graph parse_graph_auto(std::string_view text) {
  for (auto line : split_lines(text)) {
    if (!is_content_line(line)) continue;
    auto t = trim(line);
    bool numeric = true;
    for (char c : t)
      if (!(c == ' ' || c == '\t' || (c >= '0' && c <= '9'))) numeric = false;
    if (numeric && t.find_first_of(" \t") != std::string_view::npos) return parse_edge_list(text);
    return parse_graph6(t);
  }
  throw ParseError("no graph found in input");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Graph read_graph_file(const std::string& path) { return parse_graph_auto(read_text_file(path)); }

std::vector<int> parse_assignment(std::string_view text, int n) {
  std::vector<int> colors(n, 0);
  for (auto line : split_lines(text)) {
    if (!is_content_line(line)) continue;
    auto p = parse_ints(trim(line));
    if (p.size() != 2) throw ParseError("assignment: expected \"vertex color\": " + std::string(line));
    if (p[0] < 0 || p[0] >= n) throw ParseError("assignment: vertex out of range: " + std::string(line));
    if (p[1] < 1) throw ParseError("assignment: colors start at 1: " + std::string(line));
    if (colors[p[0]] != 0) throw ParseError("assignment: vertex listed twice: " + std::to_string(p[0]));
    colors[p[0]] = static_cast<int>(p[1]);
  }
  for (int v = 0; v < n; ++v)
    if (colors[v] == 0) throw ParseError("assignment: vertex " + std::to_string(v) + " has no color");
  return colors;
}

std::string emit_assignment(const std::vector<int>& colors) {
  std::ostringstream os;
  for (std::size_t v = 0; v < colors.size(); ++v) os << v << ' ' << colors[v] << '\n';
  return os.str();
}

}  // namespace fourcolor
