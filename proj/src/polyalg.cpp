#include "sgs/polyalg.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "sgs/signature_space.hpp"
#include "sgs/spectral.hpp"

namespace sgs {

namespace {

using Mask = std::uint32_t;

void check_order(const SignedGraph& g, int bound, const char* what) {
  if (g.order() > bound) {
    throw Error(Errc::TooLarge, std::string(what) + " supports order <= " + std::to_string(bound) +
                                    ", got " + std::to_string(g.order()));
  }
}

// Signed counts of simple paths leaving `start`, indexed [mask * n + end].
// Only vertices allowed by `allowed` may be used.
std::vector<std::int64_t> path_sums(const SignedGraph& g, Vertex start, Mask allowed) {
  const int n = g.order();
  const std::size_t states = std::size_t{1} << n;
  std::vector<std::int64_t> dp(states * static_cast<std::size_t>(n), 0);
  dp[(Mask{1} << start) * static_cast<std::size_t>(n) + static_cast<std::size_t>(start)] = 1;
  for (Mask mask = 1; mask < states; ++mask) {
    if (!((mask >> start) & 1U) || (mask & ~allowed)) continue;
    for (Vertex x = 0; x < n; ++x) {
      const std::int64_t w = dp[mask * static_cast<std::size_t>(n) + static_cast<std::size_t>(x)];
      if (w == 0) continue;
      for (const Incidence& inc : g.neighbors(x)) {
        const Mask bit = Mask{1} << inc.to;
        if ((mask & bit) || !(allowed & bit)) continue;
        dp[(mask | bit) * static_cast<std::size_t>(n) + static_cast<std::size_t>(inc.to)] +=
            w * g.edge(inc.edge).sign;
      }
    }
  }
  return dp;
}

SignedGraph remove_mask(const SignedGraph& g, Mask mask) {
  return delete_vertices(g, VertexSet::from_mask(g.order(), mask));
}

CharPolyInt cycle_term(const SignedGraph& g, Mask support, std::int64_t weight) {
  return char_poly(remove_mask(g, support)) * BigInt(2 * weight);
}

}  // namespace

std::vector<std::int64_t> cycle_weights(const SignedGraph& g) {
  check_order(g, kMaxSachsOrder, "cycle enumeration");
  const int n = g.order();
  std::vector<std::int64_t> w(std::size_t{1} << n, 0);
  const Mask full = n == 0 ? 0 : static_cast<Mask>((std::size_t{1} << n) - 1);
  // Each cycle is traced from its least vertex, once per direction.
  for (Vertex s = 0; s < n; ++s) {
    const Mask allowed = full & ~((Mask{1} << s) - 1);
    const auto dp = path_sums(g, s, allowed);
    for (Mask mask = 0; mask < w.size(); ++mask) {
      if (std::popcount(mask) < 3 || !((mask >> s) & 1U) || (mask & ~allowed)) continue;
      for (const Incidence& inc : g.neighbors(s)) {
        const std::int64_t p = dp[mask * static_cast<std::size_t>(n) + static_cast<std::size_t>(inc.to)];
        w[mask] += p * g.edge(inc.edge).sign;
      }
    }
  }
  for (auto& v : w) v /= 2;
  return w;
}

CharPolyInt sachs_char_poly(const SignedGraph& g) {
  check_order(g, kMaxSachsOrder, "Sachs expansion");
  const int n = g.order();
  const auto w = cycle_weights(g);
  const std::size_t states = std::size_t{1} << n;

  // f[S]: signed weight of all basic figures with vertex support exactly S.
  std::vector<std::int64_t> f(states, 0);
  f[0] = 1;
  for (Mask s_mask = 1; s_mask < states; ++s_mask) {
    const int s = std::countr_zero(s_mask);
    const Mask rest = s_mask & (s_mask - 1);
    std::int64_t total = 0;
    for (const Incidence& inc : g.neighbors(s)) {
      const Mask bit = Mask{1} << inc.to;
      if (rest & bit) total -= f[rest & ~bit];
    }
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
      const Mask t = sub | (Mask{1} << s);
      if (w[t] != 0) total -= 2 * w[t] * f[s_mask & ~t];
      if (sub == 0) break;
    }
    f[s_mask] = total;
  }

  std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1, BigInt(0));
  for (Mask s_mask = 0; s_mask < states; ++s_mask) {
    coeffs[static_cast<std::size_t>(n - std::popcount(s_mask))] += f[s_mask];
  }
  return CharPolyInt(std::move(coeffs));
}

CharPolyInt schwenk_residual(const SignedGraph& g, const Pivot& pivot) {
  check_order(g, kMaxSachsOrder, "Schwenk expansion");
  const int n = g.order();
  const CharPolyInt lhs = char_poly(g);
  CharPolyInt rhs;

  if (const auto* vp = std::get_if<VertexPivot>(&pivot)) {
    const Vertex v = vp->v;
    if (!g.contains(v)) throw Error(Errc::NotFound, "pivot vertex " + std::to_string(v) + " not in graph");
    rhs = CharPolyInt::x() * char_poly(delete_vertex(g, v));
    for (const Incidence& inc : g.neighbors(v)) {
      rhs -= char_poly(remove_mask(g, (Mask{1} << v) | (Mask{1} << inc.to)));
    }
    const auto w = cycle_weights(g);
    for (Mask t = 0; t < w.size(); ++t) {
      if (((t >> v) & 1U) && w[t] != 0) rhs -= cycle_term(g, t, w[t]);
    }
  } else {
    const int id = std::get<EdgePivot>(pivot).edge;
    if (id < 0 || id >= g.size()) throw Error(Errc::NotFound, "pivot edge " + std::to_string(id) + " not in graph");
    const Edge e = g.edge(id);
    rhs = char_poly(delete_edge(g, id)) -
          char_poly(remove_mask(g, (Mask{1} << e.u) | (Mask{1} << e.v)));
    const Mask full = static_cast<Mask>((std::size_t{1} << n) - 1);
    const auto dp = path_sums(g, e.u, full);
    for (Mask t = 0; t < (Mask{1} << n); ++t) {
      if (std::popcount(t) < 3 || !((t >> e.v) & 1U)) continue;
      const std::int64_t p = dp[t * static_cast<std::size_t>(n) + static_cast<std::size_t>(e.v)];
      if (p != 0) rhs -= cycle_term(g, t, p * e.sign);
    }
  }
  return lhs - rhs;
}

MatchCounts match_counts(const SignedGraph& g) {
  check_order(g, kMaxMatchingOrder, "matching polynomial");
  const int n = g.order();
  const std::size_t states = std::size_t{1} << n;
  const std::size_t width = static_cast<std::size_t>(n / 2) + 1;

  // memo[S][k]: k-matchings of the subgraph induced on S. Pivoting on the
  // least vertex v applies mu(G) = mu(G - e) - mu(G - u - v) to each edge at v.
  std::vector<std::int64_t> memo(states * width, 0);
  memo[0] = 1;
  for (Mask s_mask = 1; s_mask < states; ++s_mask) {
    const int v = std::countr_zero(s_mask);
    const Mask rest = s_mask & (s_mask - 1);
    std::int64_t* out = &memo[s_mask * width];
    const std::int64_t* skip = &memo[rest * width];
    for (std::size_t k = 0; k < width; ++k) out[k] = skip[k];
    for (const Incidence& inc : g.neighbors(v)) {
      const Mask bit = Mask{1} << inc.to;
      if (!(rest & bit)) continue;
      const std::int64_t* used = &memo[(rest & ~bit) * width];
      for (std::size_t k = 1; k < width; ++k) out[k] += used[k - 1];
    }
  }

  MatchCounts counts;
  for (std::size_t k = 0; k < width; ++k) counts.m.emplace_back(memo[(states - 1) * width + k]);
  return counts;
}

CharPolyInt matching_polynomial(const MatchCounts& counts, int n) {
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, BigInt(0));
  for (std::size_t k = 0; k < counts.m.size() && 2 * static_cast<int>(k) <= n; ++k) {
    c[static_cast<std::size_t>(n) - 2 * k] = k % 2 == 0 ? counts.m[k] : BigInt(-counts.m[k]);
  }
  return CharPolyInt(std::move(c));
}

CharPolyInt matching_polynomial(const SignedGraph& g) {
  return matching_polynomial(match_counts(g), g.order());
}

RationalPoly godsil_gutman_average(const SignedGraph& g) {
  const SignatureSpace space(g, kMaxAverageXi);
  CharPolyInt sum;
  IntMatrix a;
  for (std::uint64_t word = 0; word < space.size(); ++word) {
    space.fill_adjacency(word, a);
    sum += char_poly(a);
  }
  return polynomial_cast<Rational>(sum) * Rational(BigInt(1), BigInt(space.size()));
}

BouquetCheck odd_cycle_bouquet_check(int k, int ell, BouquetLayout layout) {
  if (k < 1) throw Error(Errc::BadParams, "bouquet needs k >= 1");
  if (ell < 3 || ell % 2 == 0) throw Error(Errc::BadParams, "bouquet cycles need odd length >= 3");
  BouquetCheck out;
  out.rho = spectrum(bouquet(2 * k, ell, layout)).rho();
  out.bound = 2.0 * std::sqrt(4.0 * k - 1.0);
  out.holds = out.rho < out.bound;
  return out;
}

}  // namespace sgs
