#include "sgs/signature_space.hpp"

#include <string>

namespace sgs {

SignatureSpace::SignatureSpace(const SignedGraph& g, int max_xi)
    : base_(underlying(g)), basis_(cycle_basis(base_)) {
  if (basis_.xi > max_xi || basis_.xi > 62) {
    throw Error(Errc::TooLarge, "cyclomatic number " + std::to_string(basis_.xi) +
                                    " exceeds the bound " + std::to_string(max_xi));
  }
}

SignedGraph SignatureSpace::operator[](std::uint64_t word) const {
  std::vector<Edge> edges(base_.edges().begin(), base_.edges().end());
  for (int i = 0; i < basis_.xi; ++i) {
    if ((word >> i) & 1U) edges[static_cast<std::size_t>(basis_.cotree_edges[static_cast<std::size_t>(i)])].sign = -1;
  }
  return SignedGraph::build(base_.order(), edges);
}

std::uint64_t SignatureSpace::word_of(const SignedGraph& g) const {
  if (!(underlying(g) == base_)) {
    throw Error(Errc::BadParams, "graph does not share the signature space's underlying graph");
  }
  const SignedGraph normal = forest_normalized(g, basis_);
  std::uint64_t word = 0;
  for (int i = 0; i < basis_.xi; ++i) {
    if (normal.edge(basis_.cotree_edges[static_cast<std::size_t>(i)]).sign < 0) {
      word |= std::uint64_t{1} << i;
    }
  }
  return word;
}

}  // namespace sgs
