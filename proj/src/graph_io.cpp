#include "sgs/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace sgs {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::string_view strip(std::string_view s) {
  if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> fields(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

long long to_int(std::string_view text, int line) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    fail(line, "expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

int to_sign(std::string_view text, int line) {
  if (text == "+" || text == "+1" || text == "1") return 1;
  if (text == "-" || text == "-1") return -1;
  throw Error(Errc::BadSign, "line " + std::to_string(line) + ": bad sign '" + std::string(text) + "'");
}

}  // namespace

SignedGraph read_edge_list(std::istream& in) {
  std::string raw;
  int line = 0;
  long long n = -1;
  long long m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line;
    const auto content = strip(raw);
    if (content.empty()) continue;
    const auto f = fields(content);
    if (n < 0) {
      if (f.size() != 2) fail(line, "header must be 'n m'");
      n = to_int(f[0], line);
      m = to_int(f[1], line);
      if (n < 0 || m < 0) fail(line, "header values must be non-negative");
      if (n > 1'000'000) fail(line, "vertex count too large");
      continue;
    }
    if (f.size() != 3) fail(line, "edge line must be 'u v s'");
    if (static_cast<long long>(edges.size()) == m) fail(line, "more edges than the header declares");
    const long long u = to_int(f[0], line);
    const long long v = to_int(f[1], line);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(Errc::VertexOutOfRange, "line " + std::to_string(line) + ": vertex out of range");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), to_sign(f[2], line)});
  }
  if (n < 0) fail(std::max(line, 1), "missing 'n m' header");
  if (static_cast<long long>(edges.size()) != m) {
    fail(line, "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return SignedGraph::build(static_cast<int>(n), edges);
}

SignedGraph read_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

SignedGraph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::NotFound, "cannot open " + path.string());
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const SignedGraph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << (e.sign > 0 ? '+' : '-') << '\n';
}

std::string to_edge_list(const SignedGraph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

SignedGraph decode_graph6(std::string_view line) {
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  for (char c : line) {
    if (c < 63 || c > 126) {
      throw Error(Errc::ParseError, "invalid graph6 byte " + std::to_string(static_cast<unsigned char>(c)));
    }
  }
  std::size_t pos = 0;
  auto take = [&line, &pos](int count) {
    std::uint64_t value = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= line.size()) throw Error(Errc::ParseError, "truncated graph6 order");
      value = (value << 6) | static_cast<std::uint64_t>(line[pos++] - 63);
    }
    return value;
  };
  if (line.empty()) throw Error(Errc::ParseError, "empty graph6 line");
  std::uint64_t n = 0;
  if (line[0] != 126) {
    n = take(1);
  } else if (line.size() > 1 && line[1] != 126) {
    ++pos;
    n = take(3);
  } else {
    pos += 2;
    n = take(6);
  }
  if (n > 4096) throw Error(Errc::TooLarge, "graph6 order " + std::to_string(n) + " is too large");

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() - pos != need) {
    throw Error(Errc::ParseError, "graph6 body has " + std::to_string(line.size() - pos) +
                                      " bytes, expected " + std::to_string(need));
  }
  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (int v = 1; v < static_cast<int>(n); ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int byte = line[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({u, v, 1});
    }
  }
  return SignedGraph::build(static_cast<int>(n), edges);
}

std::string encode_graph6(const SignedGraph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  auto put = [&out](std::uint64_t value, int count) {
    for (int i = count - 1; i >= 0; --i) out.push_back(static_cast<char>(((value >> (6 * i)) & 63) + 63));
  };
  if (n < 63) {
    put(n, 1);
  } else if (n < 258048) {
    out.push_back(126);
    put(n, 3);
  } else {
    out.append(2, static_cast<char>(126));
    put(n, 6);
  }
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < g.order(); ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
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

Graph6Batch read_graph6(std::istream& in, bool lenient) {
  Graph6Batch batch;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view content = raw;
    while (!content.empty() && (content.back() == '\r' || content.back() == ' ')) content.remove_suffix(1);
    if (content.empty()) continue;
    try {
      batch.graphs.push_back(decode_graph6(content));
    } catch (const Error& e) {
      const std::string message = "line " + std::to_string(line) + ": " + e.what();
      if (!lenient) throw Error(Errc::ParseError, message);
      batch.error = message;
      batch.error_line = line;
      break;
    }
  }
  return batch;
}

Graph6Batch read_graph6(std::string_view text, bool lenient) {
  std::istringstream in{std::string(text)};
  return read_graph6(in, lenient);
}

Graph6Batch read_graph6_file(const std::filesystem::path& path, bool lenient) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::NotFound, "cannot open " + path.string());
  return read_graph6(in, lenient);
}

}  // namespace sgs
