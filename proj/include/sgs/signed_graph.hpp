#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "sgs/error.hpp"
#include "sgs/types.hpp"

namespace sgs {

/// An edge {u, v} with sign +1 or -1. Stored edges always have u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  int sign = 1;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex to;
  int edge;
};

/// Simple graph together with an edge signature.
///
/// Edges are kept sorted by (u, v), so two graphs built from the same edge set
/// in any order compare equal. Edge ids are positions in that sorted list.
/// Isolated vertices are allowed. Values are immutable once built.
class SignedGraph {
 public:
  SignedGraph() = default;

  /// Validates and normalizes. Throws Error with LoopEdge, DuplicateEdge,
  /// VertexOutOfRange or BadSign.
  static SignedGraph build(int n, std::span<const Edge> edges);
  static SignedGraph build(int n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(int id) const { return edges_.at(static_cast<std::size_t>(id)); }

  std::span<const Incidence> neighbors(Vertex v) const {
    return adjacency_.at(static_cast<std::size_t>(v));
  }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  int max_degree() const;

  /// Edge id of {u, v}, or -1.
  int edge_id(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return edge_id(u, v) >= 0; }
  /// Sign of {u, v}, or 0 when not adjacent.
  int sign(Vertex u, Vertex v) const;

  bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::vector<int> ids_;  // n*n table of edge ids
};

/// Subset of [0, n).
class VertexSet {
 public:
  explicit VertexSet(int universe = 0) : bits_(static_cast<std::size_t>(universe), false) {}
  VertexSet(int universe, std::initializer_list<Vertex> members);

  static VertexSet from_mask(int universe, std::uint64_t mask);

  int universe() const noexcept { return static_cast<int>(bits_.size()); }
  bool contains(Vertex v) const {
    return v >= 0 && v < universe() && bits_[static_cast<std::size_t>(v)];
  }
  void insert(Vertex v);
  void erase(Vertex v);
  int count() const;
  VertexSet complement() const;
  std::vector<Vertex> members() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<bool> bits_;
};

/// Spanning forest plus the cotree edges that close the independent cycles.
struct CycleBasis {
  std::vector<int> forest_edges;
  std::vector<int> cotree_edges;
  int xi = 0;
  int components = 0;
};

struct TriangleCensus {
  std::int64_t positive = 0;
  std::int64_t negative = 0;
  friend bool operator==(const TriangleCensus&, const TriangleCensus&) = default;
};

/// Negates every edge across the cut [U, V \ U].
SignedGraph switching(const SignedGraph& g, const VertexSet& u_set);

SignedGraph negate(const SignedGraph& g);

/// Same underlying graph with every edge positive.
SignedGraph underlying(const SignedGraph& g);

bool is_balanced(const SignedGraph& g);

/// BFS spanning forest; components are rooted at their least vertex and
/// forest edges are listed in discovery order, cotree edges by id.
CycleBasis cycle_basis(const SignedGraph& g);

/// The member of g's switching class whose forest edges are all positive.
SignedGraph forest_normalized(const SignedGraph& g, const CycleBasis& basis);

/// Product of edge signs around a closed vertex sequence.
int cycle_sign(const SignedGraph& g, std::span<const Vertex> cycle);

TriangleCensus triangle_sign_census(const SignedGraph& g);

/// All-positive graph on 2n vertices: (x, +) is vertex x, (x, -) is x + n.
SignedGraph double_cover(const SignedGraph& g);

// Deletions compact the surviving ids in increasing order.
SignedGraph delete_vertex(const SignedGraph& g, Vertex v);
SignedGraph delete_edge(const SignedGraph& g, int edge_id);
SignedGraph delete_vertices(const SignedGraph& g, const VertexSet& removed);

SignedGraph disjoint_union(const SignedGraph& a, const SignedGraph& b);

/// perm[old] = new label.
SignedGraph relabeled(const SignedGraph& g, std::span<const Vertex> perm);

/// Component index per vertex, numbered by least member.
std::vector<int> components(const SignedGraph& g);
bool is_connected(const SignedGraph& g);
bool is_regular(const SignedGraph& g);
bool is_complete(const SignedGraph& g);

/// Hop distances from a source; -1 for unreachable.
std::vector<int> bfs_distances(const SignedGraph& g, Vertex source);

}  // namespace sgs
