#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgs/polynomial.hpp"
#include "sgs/signed_graph.hpp"

namespace sgs {

struct CatalogEntry {
  std::string name;
  SignedGraph graph;
  std::optional<CharPolyInt> expected_char_poly;
  std::string provenance;
};

/// Blocks separated by blank lines: a name line, an order line, edge lines
/// `u v s`, then optional `charpoly c0 c1 ... cn` and `provenance ...` lines.
/// Each declared polynomial is checked against the computed one.
/// Throws ParseError or ValidationFailed.
std::vector<CatalogEntry> catalog_parse(std::string_view text);
std::vector<CatalogEntry> catalog_load(const std::filesystem::path& path);

/// The catalog shipped with the library.
const std::vector<CatalogEntry>& bundled_catalog();

/// Throws UnknownName.
const CatalogEntry& catalog_find(const std::vector<CatalogEntry>& entries, std::string_view name);

/// Embedded data files.
std::string_view bundled_catalog_text();
/// All graphs of the given order, 1..7, in graph6. Throws NotFound otherwise.
std::string_view bundled_graph6(int order);
std::string_view bundled_petersen_graph6();

}  // namespace sgs
