#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "sgs/signed_graph.hpp"

namespace sgs {

/// Default largest order accepted by the exact certificate search.
inline constexpr int kDefaultCertBound = 10;

/// Byte string identifying a switching-isomorphism class.
struct CanonicalCert {
  std::vector<std::uint8_t> bytes;

  std::string hex() const;

  friend auto operator<=>(const CanonicalCert&, const CanonicalCert&) = default;
};

/// Canonical form under vertex relabeling and switching.
///
/// Over all labelings the underlying adjacency string (column by column,
/// an edge sorting before a non-edge) is minimized; every minimizing labeling
/// gives each non-root vertex an earlier neighbour, so "lowest earlier
/// neighbour" is a spanning forest. Each such labeling is switched to make
/// that forest positive, and the least resulting sign string is kept.
///
/// Throws Error(TooLarge) when g.order() > max_order.
CanonicalCert canonical_cert(const SignedGraph& g, int max_order = kDefaultCertBound);

bool are_switching_isomorphic(const SignedGraph& a, const SignedGraph& b,
                              int max_order = kDefaultCertBound);

/// Switching isomorphic to its negation.
bool is_sign_symmetric(const SignedGraph& g, int max_order = kDefaultCertBound);

}  // namespace sgs
