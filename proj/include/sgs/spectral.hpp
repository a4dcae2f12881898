#pragma once

#include <Eigen/Jacobi>
#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sgs/polynomial.hpp"
#include "sgs/roots.hpp"
#include "sgs/signed_graph.hpp"

namespace sgs {

inline constexpr double kDefaultTol = 1e-10;
inline constexpr int kDefaultSweepCap = 100;
inline constexpr int kDefaultMomentCount = 16;

/// Signed adjacency matrix: a_ij = sigma(ij) on edges, 0 elsewhere.
template <class Scalar = double>
Matrix<Scalar> adjacency(const SignedGraph& g) {
  Matrix<Scalar> a = Matrix<Scalar>::Zero(g.order(), g.order());
  for (const Edge& e : g.edges()) {
    a(e.u, e.v) = Scalar(e.sign);
    a(e.v, e.u) = Scalar(e.sign);
  }
  return a;
}

/// L = D(G) - A, degrees taken from the underlying graph.
template <class Scalar = double>
Matrix<Scalar> laplacian(const SignedGraph& g) {
  Matrix<Scalar> l = -adjacency<Scalar>(g);
  for (Vertex v = 0; v < g.order(); ++v) l(v, v) = Scalar(g.degree(v));
  return l;
}

/// Eigenvalues sorted descending. Every value lies within `tol` of an exact
/// eigenvalue: the iteration stops once the off-diagonal Frobenius norm is
/// below tol, which bounds the perturbation by Weyl's inequality.
struct Spectrum {
  Eigen::VectorXd values;
  double tol = kDefaultTol;
  int sweeps = 0;

  int size() const noexcept { return static_cast<int>(values.size()); }
  double lambda1() const { return values.size() ? values(0) : 0.0; }
  double lambda_n() const { return values.size() ? values(values.size() - 1) : 0.0; }
  double rho() const { return values.size() ? std::max(lambda1(), -lambda_n()) : 0.0; }
};

/// Cyclic Jacobi on a dense symmetric matrix; fixed row-major sweep order.
/// Throws Error(NoConvergence) when max_sweeps is exhausted.
template <class Derived>
Spectrum eigenvalues(const Eigen::MatrixBase<Derived>& m, double tol = kDefaultTol,
                     int max_sweeps = kDefaultSweepCap) {
  using Scalar = typename Derived::Scalar;
  if (!(tol > 0)) throw Error(Errc::BadParams, "eigenvalue tolerance must be positive");
  if (m.rows() != m.cols()) throw Error(Errc::BadParams, "matrix is not square");
  Matrix<Scalar> a = m;
  const Eigen::Index n = a.rows();

  auto off_norm = [&a, n] {
    Scalar s(0);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        if (i != j) s += a(i, j) * a(i, j);
      }
    }
    return std::sqrt(s);
  };

  Spectrum out;
  out.tol = tol;
  while (off_norm() >= Scalar(tol)) {
    if (out.sweeps == max_sweeps) {
      throw Error(Errc::NoConvergence,
                  "Jacobi did not converge in " + std::to_string(max_sweeps) + " sweeps");
    }
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) == Scalar(0)) continue;
        Eigen::JacobiRotation<Scalar> rot;
        rot.makeJacobi(a, p, q);
        a.applyOnTheLeft(p, q, rot.adjoint());
        a.applyOnTheRight(p, q, rot);
        a(p, q) = Scalar(0);
        a(q, p) = Scalar(0);
      }
    }
    ++out.sweeps;
  }

  std::vector<double> values(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = static_cast<double>(a(i, i));
  std::sort(values.begin(), values.end(), std::greater<>());
  out.values = Eigen::Map<Eigen::VectorXd>(values.data(), n);
  return out;
}

Spectrum spectrum(const SignedGraph& g, double tol = kDefaultTol, int max_sweeps = kDefaultSweepCap);

/// Faddeev-LeVerrier over an exact integer scalar: M_k = A M_{k-1} + c_{n-k+1} I,
/// c_{n-k} = -tr(A M_k) / k. Every division is exact for integer A.
template <class Scalar>
Polynomial<Scalar> faddeev_leverrier(const Matrix<Scalar>& a) {
  const Eigen::Index n = a.rows();
  std::vector<Scalar> c(static_cast<std::size_t>(n) + 1, Scalar(0));
  c[static_cast<std::size_t>(n)] = Scalar(1);
  Matrix<Scalar> m = Matrix<Scalar>::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    m = a * m;
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    const Matrix<Scalar> am = a * m;
    c[static_cast<std::size_t>(n - k)] = -am.trace() / Scalar(static_cast<long>(k));
  }
  return Polynomial<Scalar>(std::move(c));
}

/// Exact det(xI - M) for an integer matrix of order <= 64. Uses 64-bit
/// arithmetic when an a priori bound on every intermediate value fits, and
/// arbitrary precision otherwise.
CharPolyInt char_poly(const IntMatrix& m);
CharPolyInt char_poly(const SignedGraph& g);

/// Fraction-free (Bareiss) determinant; exact.
BigInt determinant(const IntMatrix& m);

/// (A^k)(u, v) with exact arithmetic.
BigInt walk_difference(const SignedGraph& g, Vertex u, Vertex v, int k);

/// trace(A^j) for j = 0..k, exact.
std::vector<BigInt> spectral_moments(const SignedGraph& g, int k);

struct SpectralSummary {
  double lambda1 = 0;
  double lambda_n = 0;
  double rho = 0;
  double tol = kDefaultTol;
  std::vector<BigInt> moments;
};

SpectralSummary spectral_summary(const SignedGraph& g, int moment_count = kDefaultMomentCount,
                                 double tol = kDefaultTol);

/// Largest signed distance; throws Disconnected.
int signed_diameter(const SignedGraph& g);

/// Number of distinct eigenvalues read off the characteristic polynomial.
int distinct_eigenvalue_count(const CharPolyInt& p);

/// Every eigenvalue lies in [-2, 2], decided exactly.
bool is_cyclotomic(const SignedGraph& g);

/// det L == 0 exactly. Throws Disconnected.
bool laplacian_balance_check(const SignedGraph& g);

/// Integer k with A^2 == k I, if any.
std::optional<int> weighing_weight(const SignedGraph& g);

struct GregoryCheck {
  double bound = 0;  // sqrt(2m / n)
  double rho = 0;
  bool equality = false;
  std::optional<int> weight;
};

GregoryCheck gregory_check(const SignedGraph& g, double tol = kDefaultTol);

}  // namespace sgs
