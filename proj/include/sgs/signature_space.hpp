#pragma once

#include <cstdint>

#include "sgs/signed_graph.hpp"

namespace sgs {

inline constexpr int kDefaultMaxXi = 24;

/// One representative per switching class of a fixed underlying graph.
///
/// Bit i of a sign word is the sign of cotree edge i (1 = negative); forest
/// edges are always positive. Words 0 .. 2^xi - 1 in counting order give
/// pairwise non-equivalent signatures covering every class.
class SignatureSpace {
 public:
  /// Throws Error(TooLarge) when xi > max_xi.
  explicit SignatureSpace(const SignedGraph& g, int max_xi = kDefaultMaxXi);

  const SignedGraph& base() const noexcept { return base_; }
  const CycleBasis& basis() const noexcept { return basis_; }
  int xi() const noexcept { return basis_.xi; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << basis_.xi; }

  SignedGraph operator[](std::uint64_t word) const;

  /// Word of the class containing g, which must share the base's underlying graph.
  std::uint64_t word_of(const SignedGraph& g) const;

  /// Writes the signed adjacency of `word` into a (resized to n x n).
  template <class Scalar>
  void fill_adjacency(std::uint64_t word, Matrix<Scalar>& a) const {
    const int n = base_.order();
    a.setZero(n, n);
    for (const Edge& e : base_.edges()) {
      a(e.u, e.v) = Scalar(1);
      a(e.v, e.u) = Scalar(1);
    }
    for (int i = 0; i < basis_.xi; ++i) {
      if ((word >> i) & 1U) {
        const Edge& e = base_.edge(basis_.cotree_edges[static_cast<std::size_t>(i)]);
        a(e.u, e.v) = Scalar(-1);
        a(e.v, e.u) = Scalar(-1);
      }
    }
  }

 private:
  SignedGraph base_;
  CycleBasis basis_;
};

}  // namespace sgs
