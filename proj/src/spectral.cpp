#include "sgs/spectral.hpp"

#include <cmath>
#include <limits>

namespace sgs {

namespace {

// Below this many bits every intermediate of the integer routines fits in int64.
constexpr double kInt64Bits = 62.0;

double log2_at_least_one(double v) { return v <= 1.0 ? 0.0 : std::log2(v); }

// Spectral-norm bound sqrt(|M|_1 |M|_inf) <= max of the two.
double norm_bound(const IntMatrix& m) {
  double rows = 0, cols = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    rows = std::max(rows, static_cast<double>(m.row(i).cwiseAbs().sum()));
  }
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    cols = std::max(cols, static_cast<double>(m.col(j).cwiseAbs().sum()));
  }
  return std::max(rows, cols);
}

void check_dense_order(int n) {
  if (n > kMaxDenseOrder) {
    throw Error(Errc::TooLarge, "dense matrices support order <= " + std::to_string(kMaxDenseOrder) +
                                    ", got " + std::to_string(n));
  }
}

CharPolyInt widen(const Polynomial<std::int64_t>& p) {
  std::vector<BigInt> c;
  for (std::int64_t a : p.coefficients()) c.emplace_back(a);
  return CharPolyInt(std::move(c));
}

template <class Scalar>
std::vector<BigInt> moments_impl(const Matrix<Scalar>& a, int k) {
  std::vector<BigInt> out;
  Matrix<Scalar> power = Matrix<Scalar>::Identity(a.rows(), a.cols());
  out.emplace_back(power.trace());
  for (int j = 1; j <= k; ++j) {
    power = power * a;
    out.emplace_back(power.trace());
  }
  return out;
}

template <class Scalar>
BigInt walk_impl(const Matrix<Scalar>& a, Vertex u, Vertex v, int k) {
  Vector<Scalar> row = Vector<Scalar>::Zero(a.rows());
  row(u) = Scalar(1);
  for (int j = 0; j < k; ++j) row = a * row;
  return BigInt(row(v));
}

}  // namespace

Spectrum spectrum(const SignedGraph& g, double tol, int max_sweeps) {
  check_dense_order(g.order());
  return eigenvalues(adjacency<double>(g), tol, max_sweeps);
}

CharPolyInt char_poly(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::BadParams, "matrix is not square");
  const int n = static_cast<int>(m.rows());
  check_dense_order(n);
  if (n == 0) return CharPolyInt::constant(1);
  // Eigenvalues are bounded by r, so |c_i| <= C(n,i) r^(n-i) <= 2^n r^n, and
  // every entry of M_k and A M_k is at most 2^n r^n; traces add a factor n.
  const double r = norm_bound(m);
  const double bits = std::log2(static_cast<double>(n)) + n + n * log2_at_least_one(r) + 2;
  if (bits < kInt64Bits) return widen(faddeev_leverrier<std::int64_t>(m));
  return faddeev_leverrier<BigInt>(m.cast<BigInt>());
}

CharPolyInt char_poly(const SignedGraph& g) {
  check_dense_order(g.order());
  return char_poly(adjacency<std::int64_t>(g));
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::BadParams, "matrix is not square");
  const Eigen::Index n = m.rows();
  if (n == 0) return BigInt(1);
  Matrix<BigInt> a = m.cast<BigInt>();
  BigInt prev(1);
  int sign = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && a(pivot, k) == 0) ++pivot;
      if (pivot == n) return BigInt(0);
      a.row(k).swap(a.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : BigInt(-a(n - 1, n - 1));
}

BigInt walk_difference(const SignedGraph& g, Vertex u, Vertex v, int k) {
  if (!g.contains(u) || !g.contains(v)) {
    throw Error(Errc::VertexOutOfRange, "walk endpoint out of range");
  }
  if (k < 0) throw Error(Errc::BadParams, "walk length must be non-negative");
  check_dense_order(g.order());
  const double bits = k * log2_at_least_one(g.max_degree());
  if (bits < kInt64Bits) return walk_impl(adjacency<std::int64_t>(g), u, v, k);
  return walk_impl(adjacency<BigInt>(g), u, v, k);
}

std::vector<BigInt> spectral_moments(const SignedGraph& g, int k) {
  if (k < 0) throw Error(Errc::BadParams, "moment order must be non-negative");
  check_dense_order(g.order());
  const double bits = log2_at_least_one(g.order()) + k * log2_at_least_one(g.max_degree());
  if (bits < kInt64Bits) return moments_impl(adjacency<std::int64_t>(g), k);
  return moments_impl(adjacency<BigInt>(g), k);
}

SpectralSummary spectral_summary(const SignedGraph& g, int moment_count, double tol) {
  const Spectrum s = spectrum(g, tol);
  SpectralSummary out;
  out.lambda1 = s.lambda1();
  out.lambda_n = s.lambda_n();
  out.rho = s.rho();
  out.tol = tol;
  out.moments = spectral_moments(g, moment_count);
  return out;
}

int signed_diameter(const SignedGraph& g) {
  if (!is_connected(g)) throw Error(Errc::Disconnected, "signed diameter needs a connected graph");
  check_dense_order(g.order());
  const int n = g.order();
  std::vector<std::vector<int>> dist;
  int diameter = 0;
  for (Vertex u = 0; u < n; ++u) dist.push_back(bfs_distances(g, u));
  for (Vertex u = 0; u < n; ++u) diameter = std::max(diameter, *std::max_element(dist[u].begin(), dist[u].end()));

  // Row u of A^k for k = 0..diameter, one BFS layer at a time.
  const bool narrow = diameter * log2_at_least_one(g.max_degree()) < kInt64Bits;
  int best = 0;
  auto scan = [&](const auto& a) {
    using Scalar = typename std::decay_t<decltype(a)>::Scalar;
    for (Vertex u = 0; u < n; ++u) {
      Vector<Scalar> row = Vector<Scalar>::Zero(n);
      row(u) = Scalar(1);
      for (int k = 1; k <= diameter; ++k) {
        row = a * row;
        for (Vertex v = u + 1; v < n; ++v) {
          if (dist[u][v] == k && row(v) != Scalar(0)) best = std::max(best, k);
        }
      }
    }
  };
  if (narrow) {
    scan(adjacency<std::int64_t>(g));
  } else {
    scan(adjacency<BigInt>(g));
  }
  return best;
}

int distinct_eigenvalue_count(const CharPolyInt& p) { return distinct_root_count(p); }

bool is_cyclotomic(const SignedGraph& g) {
  if (g.order() == 0) return true;
  return count_roots_outside(char_poly(g), Rational(-2), Rational(2)) == 0;
}

bool laplacian_balance_check(const SignedGraph& g) {
  if (!is_connected(g)) {
    throw Error(Errc::Disconnected, "Laplacian balance check needs a connected graph");
  }
  check_dense_order(g.order());
  return determinant(laplacian<std::int64_t>(g)) == 0;
}

std::optional<int> weighing_weight(const SignedGraph& g) {
  if (g.order() == 0) return std::nullopt;
  check_dense_order(g.order());
  const IntMatrix a = adjacency<std::int64_t>(g);
  const IntMatrix sq = a * a;
  const std::int64_t k = sq(0, 0);
  if (sq != k * IntMatrix::Identity(g.order(), g.order())) return std::nullopt;
  return static_cast<int>(k);
}

GregoryCheck gregory_check(const SignedGraph& g, double tol) {
  GregoryCheck out;
  if (g.order() == 0) return out;
  out.bound = std::sqrt(2.0 * g.size() / g.order());
  out.rho = spectrum(g, tol).rho();
  out.weight = weighing_weight(g);
  out.equality = out.weight.has_value();
  return out;
}

}  // namespace sgs
