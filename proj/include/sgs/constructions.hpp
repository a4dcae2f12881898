#pragma once

#include <span>
#include <string>
#include <string_view>

#include "sgs/signed_graph.hpp"

namespace sgs {

enum class BouquetLayout { Disjoint, Shared };

/// Signed graph with the given {0, +1, -1} symmetric adjacency matrix.
SignedGraph from_adjacency(const IntMatrix& a);

SignedGraph complete(int n, int sign = 1);
/// C_n; with sign = -1 exactly one edge, {0, n-1}, is negative.
SignedGraph cycle(int n, int sign = 1);
SignedGraph path(int n);
/// K_{1, n-1}: n vertices in total, centre 0.
SignedGraph star(int n);
SignedGraph hypercube(int d);
SignedGraph unbalanced_c4();
/// `count` cycles of length ell, the first half positive and the rest
/// negative; either vertex-disjoint or all sharing vertex 0.
SignedGraph bouquet(int count, int ell, BouquetLayout layout = BouquetLayout::Disjoint);

/// Builder lookup by name; params are the textual arguments, e.g.
/// named("complete", {"4", "-"}). Throws UnknownName or BadParams.
SignedGraph named(std::string_view name, std::span<const std::string> params);

/// Q_d signed by A_1 = [[0,1],[1,0]], A_{d+1} = [[A_d, I], [I, -A_d]].
/// Throws TooLarge for d > 6.
SignedGraph huang_signing(int d);

/// [[A, I], [I, -A]] for A with A^2 = kI; then B^2 = (k+1) I.
/// Throws PreconditionFailed when A^2 is not scalar.
SignedGraph double_signing(const SignedGraph& g);

/// Signed K_n with adjacency J - I - 2A(g): edges of g negative.
SignedGraph seidel(const SignedGraph& g);

}  // namespace sgs
