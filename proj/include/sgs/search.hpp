#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgs/canonical.hpp"
#include "sgs/polynomial.hpp"
#include "sgs/signature_space.hpp"
#include "sgs/spectral.hpp"

namespace sgs {

struct SearchOptions {
  int jobs = 1;
  double tol = kDefaultTol;
  int max_sweeps = kDefaultSweepCap;
  int max_xi = kDefaultMaxXi;
  int cert_bound = kDefaultCertBound;
  double tie_tol = 1e-9;
  bool keep_records = true;
};

/// Runs fn(begin, end, slice) over up to `jobs` contiguous slices of [0, count).
/// Slices are numbered in order, so per-slice results merge deterministically.
template <class Fn>
void for_each_slice(std::uint64_t count, int jobs, Fn&& fn);

SignatureSpace enumerate_classes(const SignedGraph& g, int max_xi = kDefaultMaxXi);

enum class Objective { Rho, Lambda1 };
std::string to_string(Objective objective);

struct SearchRecord {
  std::uint64_t word = 0;
  double value = 0;
};

struct SearchReport {
  std::string objective;
  int order = 0;
  int size = 0;
  int xi = 0;
  double tol = kDefaultTol;
  double tie_tol = 1e-9;
  std::vector<SearchRecord> records;  // counting order; empty unless kept
  double min_value = 0;
  std::vector<std::uint64_t> argmin_words;
  /// One certificate per switching-isomorphism class among the minimizers,
  /// when the order is within the certificate bound.
  std::vector<std::string> argmin_certs;
  bool certs_deduped = false;
  double max_value = 0;
  std::vector<std::uint64_t> argmax_words;
  bool exhaustive = true;
  double seconds = 0;
};

/// Exhaustive scan of every switching class of g's underlying graph.
SearchReport minimize(const SignedGraph& g, Objective objective, const SearchOptions& options = {});

enum class Conjecture { BiluLinial, MssLambda1, GregoryDelta, GregoryRho };
std::string to_string(Conjecture which);

struct ConjectureResult {
  std::string which;
  std::string bound_text;  // e.g. "2*sqrt(2)"
  double bound = 0;
  bool strict = false;  // bound must be beaten strictly
  bool holds = false;
  std::optional<std::uint64_t> witness;
  double witness_value = 0;
  std::uint64_t classes = 0;
  /// Classes whose numeric value fell within the guard band of the bound and
  /// were therefore decided with exact algebraic arithmetic.
  std::uint64_t exact_decisions = 0;
};

/// Is there a signature meeting the bound? bilu_linial: rho <= 2 sqrt(d-1);
/// mss_lambda1: lambda1 <= 2 sqrt(d-1) (both need a d-regular graph);
/// gregory_delta: rho < 2 sqrt(Delta-1); gregory_rho: rho < 2 sqrt(rho(G)-1).
/// Every decision is exact. Throws NotRegular, TooLarge, BadParams.
ConjectureResult conjecture_check(const SignedGraph& g, Conjecture which,
                                  const SearchOptions& options = {});

enum class CensusPredicate { Cyclotomic, Hoffman, SymNotSignSym, Weighing };
std::string to_string(CensusPredicate predicate);

struct CensusHit {
  std::uint64_t word = 0;
  std::optional<std::string> cert;
  std::optional<int> weight;  // weighing predicate
  bool borderline = false;    // decided by exact arithmetic inside the guard band
};

struct CensusReport {
  std::size_t index = 0;  // position in the input stream
  int order = 0;
  int size = 0;
  std::string status = "ok";  // ok | skipped | too_large
  std::string message;
  std::uint64_t classes = 0;
  std::vector<CensusHit> hits;
};

std::vector<CensusReport> census(const std::vector<SignedGraph>& graphs, CensusPredicate predicate,
                                 const SearchOptions& options = {});

/// Exact test of rho(A) <= sqrt(2 + sqrt(5)).
bool within_hoffman_bound(const CharPolyInt& p);

struct CospectralClass {
  std::string cert;
  std::vector<std::size_t> members;
};

struct CospectralGroup {
  CharPolyInt char_poly;
  std::vector<CospectralClass> classes;
  bool has_mates() const noexcept { return classes.size() >= 2; }
};

/// Groups by exact characteristic polynomial, then by certificate.
/// Groups appear in order of first member. Throws TooLarge.
std::vector<CospectralGroup> cospectral_mates(const std::vector<SignedGraph>& graphs,
                                              int cert_bound = kDefaultCertBound);

struct SeidelScan {
  int order = 0;
  std::size_t count = 0;
  double tol = kDefaultTol;
  double lower_bound = 0;  // 2(n-1)
  double upper_bound = 0;  // n sqrt(n-1)
  double min_energy = 0;
  double max_energy = 0;
  std::vector<std::size_t> argmin;
  std::vector<std::string> argmin_certs;
  std::vector<std::size_t> violations;
  std::vector<double> energies;
};

/// Sum of |eigenvalues| of J - I - 2A(g).
double seidel_energy(const SignedGraph& g, double tol = kDefaultTol);

/// All graphs must share one order n <= cert bound. Violations are energies
/// outside [2(n-1) - tol', n sqrt(n-1) + tol'] with tol' = n * tol.
SeidelScan seidel_scan(const std::vector<SignedGraph>& graphs, const SearchOptions& options = {});

struct SeidelKernel {
  int order = 0;
  int rank = 0;
  std::vector<BigInt> kernel;  // primitive integer vector, when rank = n - 1
  std::optional<bool> pm1_kernel;
};

/// Exact rank of the Seidel matrix of an odd-order graph (n <= 13) and, at
/// rank n - 1, whether the kernel is spanned by a +-1 vector.
SeidelKernel seidel_kernel_check(const SignedGraph& g);

/// Exact rank over the rationals.
int rational_rank(const IntMatrix& m);

}  // namespace sgs

#include "sgs/detail/slices.hpp"
