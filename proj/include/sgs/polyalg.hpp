#pragma once

#include <variant>
#include <vector>

#include "sgs/constructions.hpp"
#include "sgs/polynomial.hpp"
#include "sgs/signed_graph.hpp"

namespace sgs {

inline constexpr int kMaxSachsOrder = 12;
inline constexpr int kMaxMatchingOrder = 14;
inline constexpr int kMaxAverageXi = 16;

/// Characteristic polynomial from basic figures:
/// a_i = sum over figures B on i vertices of (-1)^p(B) 2^c(B) sigma(B).
/// Throws Error(TooLarge) above kMaxSachsOrder vertices.
CharPolyInt sachs_char_poly(const SignedGraph& g);

/// Signed cycle weight per vertex support: entry S is the sum of sigma(C)
/// over cycles C whose vertex set is exactly S (bitmask over g's vertices).
std::vector<std::int64_t> cycle_weights(const SignedGraph& g);

struct VertexPivot {
  Vertex v;
};
struct EdgePivot {
  int edge;
};
using Pivot = std::variant<VertexPivot, EdgePivot>;

/// LHS - RHS of Schwenk's vertex or edge expansion; identically zero.
/// Throws NotFound for a missing pivot and TooLarge above kMaxSachsOrder.
CharPolyInt schwenk_residual(const SignedGraph& g, const Pivot& pivot);

/// m_k = number of k-edge matchings of the underlying graph, k = 0..n/2.
struct MatchCounts {
  std::vector<BigInt> m;
};

MatchCounts match_counts(const SignedGraph& g);

/// sum_k (-1)^k m_k x^(n-2k). Signs of g are ignored.
CharPolyInt matching_polynomial(const SignedGraph& g);
CharPolyInt matching_polynomial(const MatchCounts& counts, int n);

/// Mean characteristic polynomial over the 2^xi switching classes of g's
/// underlying graph. Throws TooLarge above kMaxAverageXi.
RationalPoly godsil_gutman_average(const SignedGraph& g);

struct BouquetCheck {
  double rho = 0;
  double bound = 0;  // 2 sqrt(4k - 1)
  bool holds = false;
};

/// 2k cycles of odd length ell, k positive and k negative.
BouquetCheck odd_cycle_bouquet_check(int k, int ell, BouquetLayout layout = BouquetLayout::Disjoint);

}  // namespace sgs
