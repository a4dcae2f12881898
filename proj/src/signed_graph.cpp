#include "sgs/signed_graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace sgs {

namespace {

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + "," +
         std::to_string(e.sign) + ")";
}

}  // namespace

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::BadSign: return "BadSign";
    case Errc::NotFound: return "NotFound";
    case Errc::TooLarge: return "TooLarge";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::NotRegular: return "NotRegular";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationFailed: return "ValidationFailed";
    case Errc::UnknownName: return "UnknownName";
    case Errc::BadParams: return "BadParams";
  }
  return "Unknown";
}

SignedGraph SignedGraph::build(int n, std::span<const Edge> edges) {
  if (n < 0) {
    throw Error(Errc::BadParams, "negative vertex count");
  }
  SignedGraph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (const Edge& raw : edges) {
    if (raw.u < 0 || raw.u >= n || raw.v < 0 || raw.v >= n) {
      throw Error(Errc::VertexOutOfRange, "edge " + edge_text(raw) + " outside [0," +
                                              std::to_string(n) + ")");
    }
    if (raw.u == raw.v) {
      throw Error(Errc::LoopEdge, "loop at vertex " + std::to_string(raw.u));
    }
    if (raw.sign != 1 && raw.sign != -1) {
      throw Error(Errc::BadSign, "edge " + edge_text(raw) + " has sign outside {+1,-1}");
    }
    g.edges_.push_back({std::min(raw.u, raw.v), std::max(raw.u, raw.v), raw.sign});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  for (std::size_t i = 1; i < g.edges_.size(); ++i) {
    if (g.edges_[i].u == g.edges_[i - 1].u && g.edges_[i].v == g.edges_[i - 1].v) {
      throw Error(Errc::DuplicateEdge, "duplicate edge {" + std::to_string(g.edges_[i].u) +
                                           "," + std::to_string(g.edges_[i].v) + "}");
    }
  }
  g.adjacency_.assign(static_cast<std::size_t>(n), {});
  g.ids_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  for (int id = 0; id < g.size(); ++id) {
    const Edge& e = g.edges_[static_cast<std::size_t>(id)];
    g.adjacency_[static_cast<std::size_t>(e.u)].push_back({e.v, id});
    g.adjacency_[static_cast<std::size_t>(e.v)].push_back({e.u, id});
    g.ids_[static_cast<std::size_t>(e.u * n + e.v)] = id;
    g.ids_[static_cast<std::size_t>(e.v * n + e.u)] = id;
  }
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Incidence& a, const Incidence& b) { return a.to < b.to; });
  }
  return g;
}

int SignedGraph::max_degree() const {
  int best = 0;
  for (const auto& list : adjacency_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

int SignedGraph::edge_id(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return -1;
  return ids_[static_cast<std::size_t>(u * n_ + v)];
}

int SignedGraph::sign(Vertex u, Vertex v) const {
  const int id = edge_id(u, v);
  return id < 0 ? 0 : edges_[static_cast<std::size_t>(id)].sign;
}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
  VertexSet s(universe);
  for (int v = 0; v < universe && v < 64; ++v) {
    if ((mask >> v) & 1U) s.bits_[static_cast<std::size_t>(v)] = true;
  }
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v < 0 || v >= universe()) {
    throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " not in universe");
  }
  bits_[static_cast<std::size_t>(v)] = true;
}

void VertexSet::erase(Vertex v) {
  if (v >= 0 && v < universe()) bits_[static_cast<std::size_t>(v)] = false;
}

int VertexSet::count() const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), true));
}

VertexSet VertexSet::complement() const {
  VertexSet c(universe());
  for (std::size_t i = 0; i < bits_.size(); ++i) c.bits_[i] = !bits_[i];
  return c;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (int v = 0; v < universe(); ++v) {
    if (bits_[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

SignedGraph switching(const SignedGraph& g, const VertexSet& u_set) {
  if (u_set.universe() != g.order()) {
    throw Error(Errc::VertexOutOfRange, "vertex set universe does not match graph order");
  }
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Edge& e : edges) {
    if (u_set.contains(e.u) != u_set.contains(e.v)) e.sign = -e.sign;
  }
  return SignedGraph::build(g.order(), edges);
}

SignedGraph negate(const SignedGraph& g) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Edge& e : edges) e.sign = -e.sign;
  return SignedGraph::build(g.order(), edges);
}

SignedGraph underlying(const SignedGraph& g) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Edge& e : edges) e.sign = 1;
  return SignedGraph::build(g.order(), edges);
}

bool is_balanced(const SignedGraph& g) {
  // theta(v) in {+1,-1} with sign(uv) == theta(u) * theta(v), assigned per component.
  std::vector<int> theta(static_cast<std::size_t>(g.order()), 0);
  std::deque<Vertex> queue;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (theta[static_cast<std::size_t>(root)] != 0) continue;
    theta[static_cast<std::size_t>(root)] = 1;
    queue.push_back(root);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (const Incidence& inc : g.neighbors(x)) {
        const int want = theta[static_cast<std::size_t>(x)] * g.edge(inc.edge).sign;
        int& t = theta[static_cast<std::size_t>(inc.to)];
        if (t == 0) {
          t = want;
          queue.push_back(inc.to);
        } else if (t != want) {
          return false;
        }
      }
    }
  }
  return true;
}

CycleBasis cycle_basis(const SignedGraph& g) {
  CycleBasis basis;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  std::vector<bool> in_forest(static_cast<std::size_t>(g.size()), false);
  std::deque<Vertex> queue;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    ++basis.components;
    seen[static_cast<std::size_t>(root)] = true;
    queue.push_back(root);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (const Incidence& inc : g.neighbors(x)) {
        if (seen[static_cast<std::size_t>(inc.to)]) continue;
        seen[static_cast<std::size_t>(inc.to)] = true;
        in_forest[static_cast<std::size_t>(inc.edge)] = true;
        basis.forest_edges.push_back(inc.edge);
        queue.push_back(inc.to);
      }
    }
  }
  for (int id = 0; id < g.size(); ++id) {
    if (!in_forest[static_cast<std::size_t>(id)]) basis.cotree_edges.push_back(id);
  }
  basis.xi = g.size() - g.order() + basis.components;
  return basis;
}

SignedGraph forest_normalized(const SignedGraph& g, const CycleBasis& basis) {
  // Walk the forest in discovery order; each forest edge reaches one new vertex.
  std::vector<int> theta(static_cast<std::size_t>(g.order()), 0);
  for (int id : basis.forest_edges) {
    const Edge& e = g.edge(id);
    int& tu = theta[static_cast<std::size_t>(e.u)];
    int& tv = theta[static_cast<std::size_t>(e.v)];
    if (tu == 0 && tv == 0) tu = 1;
    if (tu == 0) {
      tu = tv * e.sign;
    } else if (tv == 0) {
      tv = tu * e.sign;
    }
  }
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Edge& e : edges) {
    const int tu = theta[static_cast<std::size_t>(e.u)] == 0 ? 1 : theta[static_cast<std::size_t>(e.u)];
    const int tv = theta[static_cast<std::size_t>(e.v)] == 0 ? 1 : theta[static_cast<std::size_t>(e.v)];
    e.sign *= tu * tv;
  }
  return SignedGraph::build(g.order(), edges);
}

int cycle_sign(const SignedGraph& g, std::span<const Vertex> cycle) {
  int s = 1;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vertex a = cycle[i];
    const Vertex b = cycle[(i + 1) % cycle.size()];
    const int sab = g.sign(a, b);
    if (sab == 0) {
      throw Error(Errc::NotFound, "vertices " + std::to_string(a) + " and " + std::to_string(b) +
                                      " are not adjacent");
    }
    s *= sab;
  }
  return s;
}

TriangleCensus triangle_sign_census(const SignedGraph& g) {
  TriangleCensus census;
  const int n = g.order();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      const int sab = g.sign(a, b);
      if (sab == 0) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        const int s = sab * g.sign(b, c) * g.sign(a, c);
        if (s > 0) ++census.positive;
        if (s < 0) ++census.negative;
      }
    }
  }
  return census;
}

SignedGraph double_cover(const SignedGraph& g) {
  const int n = g.order();
  std::vector<Edge> edges;
  edges.reserve(2 * static_cast<std::size_t>(g.size()));
  for (const Edge& e : g.edges()) {
    if (e.sign > 0) {
      edges.push_back({e.u, e.v, 1});
      edges.push_back({e.u + n, e.v + n, 1});
    } else {
      edges.push_back({e.u, e.v + n, 1});
      edges.push_back({e.u + n, e.v, 1});
    }
  }
  return SignedGraph::build(2 * n, edges);
}

SignedGraph delete_vertices(const SignedGraph& g, const VertexSet& removed) {
  if (removed.universe() != g.order()) {
    throw Error(Errc::VertexOutOfRange, "vertex set universe does not match graph order");
  }
  std::vector<int> new_id(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!removed.contains(v)) new_id[static_cast<std::size_t>(v)] = next++;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const int a = new_id[static_cast<std::size_t>(e.u)];
    const int b = new_id[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.push_back({a, b, e.sign});
  }
  return SignedGraph::build(next, edges);
}

SignedGraph delete_vertex(const SignedGraph& g, Vertex v) {
  if (!g.contains(v)) {
    throw Error(Errc::NotFound, "vertex " + std::to_string(v) + " not in graph");
  }
  return delete_vertices(g, VertexSet(g.order(), {v}));
}

SignedGraph delete_edge(const SignedGraph& g, int edge_id) {
  if (edge_id < 0 || edge_id >= g.size()) {
    throw Error(Errc::NotFound, "edge id " + std::to_string(edge_id) + " not in graph");
  }
  std::vector<Edge> edges;
  for (int id = 0; id < g.size(); ++id) {
    if (id != edge_id) edges.push_back(g.edge(id));
  }
  return SignedGraph::build(g.order(), edges);
}

SignedGraph disjoint_union(const SignedGraph& a, const SignedGraph& b) {
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  for (const Edge& e : b.edges()) edges.push_back({e.u + a.order(), e.v + a.order(), e.sign});
  return SignedGraph::build(a.order() + b.order(), edges);
}

SignedGraph relabeled(const SignedGraph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw Error(Errc::BadParams, "permutation size does not match graph order");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g.size()));
  for (const Edge& e : g.edges()) {
    edges.push_back({perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)], e.sign});
  }
  return SignedGraph::build(g.order(), edges);
}

std::vector<int> components(const SignedGraph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  std::deque<Vertex> queue;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (comp[static_cast<std::size_t>(root)] >= 0) continue;
    comp[static_cast<std::size_t>(root)] = next;
    queue.push_back(root);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (const Incidence& inc : g.neighbors(x)) {
        if (comp[static_cast<std::size_t>(inc.to)] < 0) {
          comp[static_cast<std::size_t>(inc.to)] = next;
          queue.push_back(inc.to);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool is_connected(const SignedGraph& g) {
  const auto comp = components(g);
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

bool is_regular(const SignedGraph& g) {
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) != g.degree(0)) return false;
  }
  return true;
}

bool is_complete(const SignedGraph& g) {
  const std::int64_t n = g.order();
  return g.size() == n * (n - 1) / 2;
}

std::vector<int> bfs_distances(const SignedGraph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  dist[static_cast<std::size_t>(source)] = 0;
  std::deque<Vertex> queue{source};
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (const Incidence& inc : g.neighbors(x)) {
      if (dist[static_cast<std::size_t>(inc.to)] < 0) {
        dist[static_cast<std::size_t>(inc.to)] = dist[static_cast<std::size_t>(x)] + 1;
        queue.push_back(inc.to);
      }
    }
  }
  return dist;
}

}  // namespace sgs
