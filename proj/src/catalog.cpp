#include "sgs/catalog.hpp"

#include <fstream>
#include <sstream>

#include "sgs/spectral.hpp"

namespace sgs {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw Error(Errc::ParseError, "catalog line " + std::to_string(line) + ": " + what);
}

std::string trimmed(const std::string& raw) {
  std::string s = raw.substr(0, raw.find('#'));
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

int to_int(const std::string& text, int line) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    fail(line, "expected an integer, got '" + text + "'");
  }
  if (used != text.size()) fail(line, "expected an integer, got '" + text + "'");
  return value;
}

struct Block {
  int first_line = 0;
  std::vector<std::pair<int, std::string>> lines;
};

CatalogEntry parse_block(const Block& block) {
  CatalogEntry entry;
  const auto& lines = block.lines;
  entry.name = lines[0].second;
  if (lines.size() < 2) fail(lines[0].first, "entry '" + entry.name + "' lacks an order line");
  const int n = to_int(lines[1].second, lines[1].first);
  if (n < 0) fail(lines[1].first, "negative order");

  std::vector<Edge> edges;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const auto& [line, text] = lines[i];
    std::istringstream in(text);
    std::string head;
    in >> head;
    if (head == "charpoly") {
      std::vector<BigInt> coeffs;
      std::string token;
      while (in >> token) {
        try {
          coeffs.emplace_back(token);
        } catch (const std::exception&) {
          fail(line, "bad coefficient '" + token + "'");
        }
      }
      entry.expected_char_poly = CharPolyInt(std::move(coeffs));
    } else if (head == "provenance") {
      std::string rest;
      std::getline(in >> std::ws, rest);
      entry.provenance = rest;
    } else {
      std::string v, s, extra;
      if (!(in >> v >> s) || (in >> extra)) fail(line, "edge line must be 'u v s'");
      int sign = 0;
      if (s == "+" || s == "+1" || s == "1") sign = 1;
      if (s == "-" || s == "-1") sign = -1;
      if (sign == 0) fail(line, "bad sign '" + s + "'");
      edges.push_back({to_int(head, line), to_int(v, line), sign});
    }
  }
  try {
    entry.graph = SignedGraph::build(n, edges);
  } catch (const Error& e) {
    fail(block.first_line, "entry '" + entry.name + "': " + e.what());
  }
  if (entry.expected_char_poly && !(char_poly(entry.graph) == *entry.expected_char_poly)) {
    throw Error(Errc::ValidationFailed, "catalog entry '" + entry.name + "' has characteristic polynomial " +
                                            char_poly(entry.graph).to_string() + ", declared " +
                                            entry.expected_char_poly->to_string());
  }
  return entry;
}

}  // namespace

std::vector<CatalogEntry> catalog_parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Block> blocks;
  Block current;
  std::string raw;
  int line = 0;
  auto flush = [&] {
    if (!current.lines.empty()) blocks.push_back(std::move(current));
    current = Block{};
  };
  while (std::getline(in, raw)) {
    ++line;
    const bool comment = raw.find_first_not_of(" \t") != std::string::npos &&
                         raw[raw.find_first_not_of(" \t")] == '#';
    if (comment) continue;
    const std::string s = trimmed(raw);
    if (s.empty()) {
      flush();
      continue;
    }
    if (current.lines.empty()) current.first_line = line;
    current.lines.emplace_back(line, s);
  }
  flush();

  std::vector<CatalogEntry> entries;
  for (const Block& b : blocks) entries.push_back(parse_block(b));
  return entries;
}

std::vector<CatalogEntry> catalog_load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::NotFound, "cannot open catalog " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return catalog_parse(text.str());
}

const std::vector<CatalogEntry>& bundled_catalog() {
  static const std::vector<CatalogEntry> entries = catalog_parse(bundled_catalog_text());
  return entries;
}

const CatalogEntry& catalog_find(const std::vector<CatalogEntry>& entries, std::string_view name) {
  for (const auto& e : entries) {
    if (e.name == name) return e;
  }
  throw Error(Errc::UnknownName, "no catalog entry named '" + std::string(name) + "'");
}

}  // namespace sgs
