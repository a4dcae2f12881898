#include "sgs/constructions.hpp"

#include <charconv>
#include <vector>

#include "sgs/spectral.hpp"

namespace sgs {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(Errc::BadParams, message);
}

int parse_int(std::string_view text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(Errc::BadParams, "expected an integer parameter, got '" + std::string(text) + "'");
  }
  return value;
}

int parse_sign(std::string_view text) {
  if (text == "+" || text == "+1" || text == "1") return 1;
  if (text == "-" || text == "-1") return -1;
  throw Error(Errc::BadParams, "expected a sign parameter, got '" + std::string(text) + "'");
}

BouquetLayout parse_layout(std::string_view text) {
  if (text == "disjoint") return BouquetLayout::Disjoint;
  if (text == "shared") return BouquetLayout::Shared;
  throw Error(Errc::BadParams, "bouquet layout is 'disjoint' or 'shared', got '" + std::string(text) + "'");
}

void arity(std::string_view name, std::span<const std::string> params, std::size_t lo, std::size_t hi) {
  if (params.size() < lo || params.size() > hi) {
    throw Error(Errc::BadParams, "wrong number of parameters for " + std::string(name));
  }
}

IntMatrix stack(const IntMatrix& a) {
  const Eigen::Index n = a.rows();
  IntMatrix b(2 * n, 2 * n);
  b << a, IntMatrix::Identity(n, n), IntMatrix::Identity(n, n), -a;
  return b;
}

}  // namespace

SignedGraph from_adjacency(const IntMatrix& a) {
  require(a.rows() == a.cols(), "adjacency matrix must be square");
  const int n = static_cast<int>(a.rows());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    if (a(i, i) != 0) throw Error(Errc::LoopEdge, "non-zero diagonal at " + std::to_string(i));
    for (int j = i + 1; j < n; ++j) {
      require(a(i, j) == a(j, i), "adjacency matrix must be symmetric");
      if (a(i, j) != 0) edges.push_back({i, j, static_cast<int>(a(i, j))});
    }
  }
  return SignedGraph::build(n, edges);
}

SignedGraph complete(int n, int sign) {
  require(n >= 0, "complete graph needs n >= 0");
  require(sign == 1 || sign == -1, "sign must be +1 or -1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v, sign});
  }
  return SignedGraph::build(n, edges);
}

SignedGraph cycle(int n, int sign) {
  require(n >= 3, "cycle needs n >= 3");
  require(sign == 1 || sign == -1, "sign must be +1 or -1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
  edges.push_back({0, n - 1, sign});
  return SignedGraph::build(n, edges);
}

SignedGraph path(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
  return SignedGraph::build(n, edges);
}

SignedGraph star(int n) {
  require(n >= 1, "star needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({0, i, 1});
  return SignedGraph::build(n, edges);
}

SignedGraph hypercube(int d) {
  require(d >= 0, "hypercube needs d >= 0");
  if (d > 6) throw Error(Errc::TooLarge, "hypercube supports d <= 6");
  const int n = 1 << d;
  std::vector<Edge> edges;
  for (int x = 0; x < n; ++x) {
    for (int b = 0; b < d; ++b) {
      const int y = x ^ (1 << b);
      if (x < y) edges.push_back({x, y, 1});
    }
  }
  return SignedGraph::build(n, edges);
}

SignedGraph unbalanced_c4() { return cycle(4, -1); }

SignedGraph bouquet(int count, int ell, BouquetLayout layout) {
  require(count >= 1, "bouquet needs at least one cycle");
  require(ell >= 3, "bouquet cycles need length >= 3");
  std::vector<Edge> edges;
  int n = layout == BouquetLayout::Shared ? 1 : 0;
  for (int c = 0; c < count; ++c) {
    const int sign = c < (count + 1) / 2 ? 1 : -1;
    std::vector<int> ring;
    if (layout == BouquetLayout::Shared) ring.push_back(0);
    while (static_cast<int>(ring.size()) < ell) ring.push_back(n++);
    for (int i = 0; i < ell; ++i) {
      const int a = ring[static_cast<std::size_t>(i)];
      const int b = ring[static_cast<std::size_t>((i + 1) % ell)];
      const bool closing = i == ell - 1;
      edges.push_back({std::min(a, b), std::max(a, b), closing ? sign : 1});
    }
  }
  return SignedGraph::build(n, edges);
}

SignedGraph named(std::string_view name, std::span<const std::string> params) {
  if (name == "complete") {
    arity(name, params, 1, 2);
    return complete(parse_int(params[0]), params.size() > 1 ? parse_sign(params[1]) : 1);
  }
  if (name == "cycle") {
    arity(name, params, 1, 2);
    return cycle(parse_int(params[0]), params.size() > 1 ? parse_sign(params[1]) : 1);
  }
  if (name == "path") {
    arity(name, params, 1, 1);
    return path(parse_int(params[0]));
  }
  if (name == "star") {
    arity(name, params, 1, 1);
    return star(parse_int(params[0]));
  }
  if (name == "hypercube") {
    arity(name, params, 1, 1);
    return hypercube(parse_int(params[0]));
  }
  if (name == "unbalanced_c4") {
    arity(name, params, 0, 0);
    return unbalanced_c4();
  }
  if (name == "bouquet") {
    arity(name, params, 2, 3);
    return bouquet(parse_int(params[0]), parse_int(params[1]),
                   params.size() > 2 ? parse_layout(params[2]) : BouquetLayout::Disjoint);
  }
  if (name == "huang") {
    arity(name, params, 1, 1);
    return huang_signing(parse_int(params[0]));
  }
  throw Error(Errc::UnknownName, "unknown graph family '" + std::string(name) + "'");
}

SignedGraph huang_signing(int d) {
  require(d >= 1, "Huang signing needs d >= 1");
  if (d > 6) throw Error(Errc::TooLarge, "Huang signing supports d <= 6 (64 vertices)");
  IntMatrix a(2, 2);
  a << 0, 1, 1, 0;
  for (int k = 1; k < d; ++k) a = stack(a);
  return from_adjacency(a);
}

SignedGraph double_signing(const SignedGraph& g) {
  if (!weighing_weight(g)) {
    throw Error(Errc::PreconditionFailed, "double signing needs A^2 = kI");
  }
  if (2 * g.order() > kMaxDenseOrder) {
    throw Error(Errc::TooLarge, "doubled graph would exceed order " + std::to_string(kMaxDenseOrder));
  }
  return from_adjacency(stack(adjacency<std::int64_t>(g)));
}

SignedGraph seidel(const SignedGraph& g) {
  require(g.order() >= 2, "Seidel matrix needs n >= 2");
  std::vector<Edge> edges;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) edges.push_back({u, v, g.adjacent(u, v) ? -1 : 1});
  }
  return SignedGraph::build(g.order(), edges);
}

}  // namespace sgs
