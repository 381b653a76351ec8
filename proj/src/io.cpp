#include "sparsecut/io.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <sstream>

#include "sparsecut/error.hpp"

namespace sparsecut {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order)
    fail(ErrorCode::TooLarge, "graph6 output limited to order " + std::to_string(kMaxGraph6Order));
  const int bits = n * (n - 1) / 2;
  std::string out;
  out.reserve(1 + (bits + 5) / 6);
  out.push_back(static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph from_graph6(std::string_view text, std::size_t line) {
  text = trim(text);
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw ParseError(line, "empty graph6 string");
  for (char c : text)
    if (c < 63 || c > 126) throw ParseError(line, "byte outside graph6 range");
  const int n = text[0] - 63;
  if (n > kMaxGraph6Order)
    throw ParseError(line, "graph6 orders above " + std::to_string(kMaxGraph6Order) +
                               " are not supported");
  const int bits = n * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() != 1 + body)
    throw ParseError(line, "graph6 length " + std::to_string(text.size()) + " does not match order " +
                               std::to_string(n));
  GraphBuilder b(n);
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) b.add(i, j);
    }
  }
  if (bits % 6) {
    const int last = text.back() - 63;
    if (last & ((1 << (6 - bits % 6)) - 1)) throw ParseError(line, "nonzero graph6 padding bits");
  }
  return std::move(b).build();
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Graph from_edge_list(std::string_view text) {
  std::vector<long> numbers;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    long value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + pos)
      throw ParseError(0, "edge list: expected an integer at offset " + std::to_string(pos));
    numbers.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
  }
  if (numbers.size() < 2) throw ParseError(1, "edge list: missing \"n m\" header");
  const long n = numbers[0];
  const long m = numbers[1];
  if (n < 0 || n > kMaxOrder) throw ParseError(1, "edge list: bad order " + std::to_string(n));
  if (m < 0 || numbers.size() != static_cast<std::size_t>(2 + 2 * m))
    throw ParseError(1, "edge list: header promises " + std::to_string(m) + " edges");
  std::vector<Edge> edges;
  for (long i = 0; i < m; ++i)
    edges.push_back({static_cast<int>(numbers[2 + 2 * i]), static_cast<int>(numbers[3 + 2 * i])});
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::vector<NumberedGraph> read_graph6_stream(std::istream& in) {
  std::vector<NumberedGraph> out;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s = trim(raw);
    if (s.starts_with(kHeader)) s.remove_prefix(kHeader.size());
    if (s.empty()) continue;
    out.push_back({line, from_graph6(s, line)});
  }
  return out;
}

}  // namespace sparsecut
