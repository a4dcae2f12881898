#include "sgs/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <set>

#include "sgs/constructions.hpp"

namespace sgs {

namespace {

// Numeric values closer than this to an algebraic bound are re-decided exactly.
constexpr double kGuardBand = 1e-6;

enum class Relation { RhoAtMost, RhoBelow, Lambda1AtMost };

struct Bound {
  RealAlgebraic alpha;
  double approx;
  Relation relation;
};

struct Decision {
  bool meets = false;
  bool exact = false;
};

Decision decide(const Bound& bound, double value, const IntMatrix& a) {
  if (value < bound.approx - kGuardBand) return {true, false};
  if (value > bound.approx + kGuardBand) return {false, false};
  const RationalPoly p = polynomial_cast<Rational>(char_poly(a));
  switch (bound.relation) {
    case Relation::RhoAtMost:
      return {count_roots_beyond(p, bound.alpha) == 0, true};
    case Relation::RhoBelow:
      return {count_roots_at_or_beyond(p, bound.alpha) == 0, true};
    case Relation::Lambda1AtMost:
      return {count_roots_above(p, bound.alpha) == 0, true};
  }
  return {};
}

Bound hoffman_bound() {
  // sqrt(2 + sqrt(5)) is the positive root of y^4 - 4y^2 - 1.
  const RationalPoly q{Rational(-1), Rational(0), Rational(-4), Rational(0), Rational(1)};
  RealAlgebraic alpha = RealAlgebraic::isolate(q, std::sqrt(2.0 + std::sqrt(5.0)));
  const double approx = alpha.approx();
  return {std::move(alpha), approx, Relation::RhoAtMost};
}

Bound cyclotomic_bound() {
  return {RealAlgebraic::from_rational(Rational(2)), 2.0, Relation::RhoAtMost};
}

double objective_value(const Spectrum& s, Objective objective) {
  return objective == Objective::Rho ? s.rho() : s.lambda1();
}

std::vector<std::string> dedup_certs(const SignatureSpace& space, const std::vector<std::uint64_t>& words,
                                     int cert_bound) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::uint64_t w : words) {
    std::string hex = canonical_cert(space[w], cert_bound).hex();
    if (seen.insert(hex).second) out.push_back(std::move(hex));
  }
  return out;
}

std::vector<std::vector<Rational>> rref(const IntMatrix& m, std::vector<int>& pivots) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(rows), std::vector<Rational>(static_cast<std::size_t>(cols)));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) a[i][j] = Rational(m(i, j));
  }
  pivots.clear();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rational inv = Rational(1) / a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return a;
}

}  // namespace

std::string to_string(Objective objective) { return objective == Objective::Rho ? "rho" : "lambda1"; }

std::string to_string(Conjecture which) {
  switch (which) {
    case Conjecture::BiluLinial: return "bilu_linial";
    case Conjecture::MssLambda1: return "mss_lambda1";
    case Conjecture::GregoryDelta: return "gregory_delta";
    case Conjecture::GregoryRho: return "gregory_rho";
  }
  return {};
}

std::string to_string(CensusPredicate predicate) {
  switch (predicate) {
    case CensusPredicate::Cyclotomic: return "cyclotomic";
    case CensusPredicate::Hoffman: return "hoffman";
    case CensusPredicate::SymNotSignSym: return "sym_not_signsym";
    case CensusPredicate::Weighing: return "weighing";
  }
  return {};
}

SignatureSpace enumerate_classes(const SignedGraph& g, int max_xi) { return SignatureSpace(g, max_xi); }

SearchReport minimize(const SignedGraph& g, Objective objective, const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (g.order() > kMaxDenseOrder) throw Error(Errc::TooLarge, "order exceeds the dense cap");
  const SignatureSpace space(g, options.max_xi);

  SearchReport report;
  report.objective = to_string(objective);
  report.order = g.order();
  report.size = g.size();
  report.xi = space.xi();
  report.tol = options.tol;
  report.tie_tol = options.tie_tol;

  std::vector<SearchRecord> records(space.size());
  for_each_slice(space.size(), options.jobs, [&](std::uint64_t begin, std::uint64_t end, std::size_t) {
    Matrix<double> a;
    for (std::uint64_t w = begin; w < end; ++w) {
      space.fill_adjacency(w, a);
      records[w] = {w, objective_value(eigenvalues(a, options.tol, options.max_sweeps), objective)};
    }
  });

  report.min_value = records.front().value;
  report.max_value = records.front().value;
  for (const auto& r : records) {
    report.min_value = std::min(report.min_value, r.value);
    report.max_value = std::max(report.max_value, r.value);
  }
  for (const auto& r : records) {
    if (r.value <= report.min_value + options.tie_tol) report.argmin_words.push_back(r.word);
    if (r.value >= report.max_value - options.tie_tol) report.argmax_words.push_back(r.word);
  }
  if (g.order() <= options.cert_bound) {
    report.argmin_certs = dedup_certs(space, report.argmin_words, options.cert_bound);
    report.certs_deduped = true;
  }
  if (options.keep_records) report.records = std::move(records);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

ConjectureResult conjecture_check(const SignedGraph& g, Conjecture which, const SearchOptions& options) {
  if (g.order() > kMaxDenseOrder) throw Error(Errc::TooLarge, "order exceeds the dense cap");
  ConjectureResult result;
  result.which = to_string(which);

  std::optional<Bound> bound;
  Objective objective = Objective::Rho;
  switch (which) {
    case Conjecture::BiluLinial:
    case Conjecture::MssLambda1: {
      if (!is_regular(g)) throw Error(Errc::NotRegular, result.which + " needs a regular graph");
      const int d = g.order() > 0 ? g.degree(0) : 0;
      if (d < 1) throw Error(Errc::BadParams, result.which + " needs degree >= 1");
      const bool lambda = which == Conjecture::MssLambda1;
      objective = lambda ? Objective::Lambda1 : Objective::Rho;
      bound = Bound{RealAlgebraic::sqrt_of(Rational(4 * (d - 1))), 2.0 * std::sqrt(d - 1.0),
                    lambda ? Relation::Lambda1AtMost : Relation::RhoAtMost};
      result.bound_text = "2*sqrt(" + std::to_string(d - 1) + ")";
      break;
    }
    case Conjecture::GregoryDelta: {
      const int delta = g.max_degree();
      if (delta < 1) throw Error(Errc::BadParams, "gregory_delta needs at least one edge");
      bound = Bound{RealAlgebraic::sqrt_of(Rational(4 * (delta - 1))), 2.0 * std::sqrt(delta - 1.0),
                    Relation::RhoBelow};
      result.bound_text = "2*sqrt(" + std::to_string(delta - 1) + ")";
      result.strict = true;
      break;
    }
    case Conjecture::GregoryRho: {
      if (g.size() == 0) throw Error(Errc::BadParams, "gregory_rho needs at least one edge");
      const SignedGraph base = underlying(g);
      const double r = spectrum(base, options.tol, options.max_sweeps).rho();
      // y = 2 sqrt(r - 1) is a root of phi_G(y^2 / 4 + 1).
      const RationalPoly phi = polynomial_cast<Rational>(char_poly(base));
      const RationalPoly inner{Rational(1), Rational(0), Rational(1, 4)};
      RealAlgebraic alpha = RealAlgebraic::isolate(phi.compose(inner), 2.0 * std::sqrt(std::max(r - 1.0, 0.0)));
      const double approx = alpha.approx();
      bound = Bound{std::move(alpha), approx, Relation::RhoBelow};
      result.bound_text = "2*sqrt(rho(G)-1)";
      result.strict = true;
      break;
    }
  }
  result.bound = bound->approx;

  const SignatureSpace space(g, options.max_xi);
  result.classes = space.size();
  struct SliceResult {
    std::optional<std::uint64_t> first;
    double value = 0;
    std::uint64_t exact = 0;
  };
  std::vector<SliceResult> slices(static_cast<std::size_t>(std::max(options.jobs, 1)));
  for_each_slice(space.size(), options.jobs, [&](std::uint64_t begin, std::uint64_t end, std::size_t s) {
    const Bound local = *bound;  // interval refinement mutates the bound
    Matrix<double> a;
    IntMatrix ai;
    auto& out = slices[s];
    for (std::uint64_t w = begin; w < end; ++w) {
      space.fill_adjacency(w, a);
      const double value = objective_value(eigenvalues(a, options.tol, options.max_sweeps), objective);
      space.fill_adjacency(w, ai);
      const Decision d = decide(local, value, ai);
      if (d.exact) ++out.exact;
      if (d.meets && !out.first) {
        out.first = w;
        out.value = value;
      }
    }
  });
  for (const auto& s : slices) {
    result.exact_decisions += s.exact;
    if (s.first && !result.witness) {
      result.witness = s.first;
      result.witness_value = s.value;
    }
  }
  result.holds = result.witness.has_value();
  return result;
}

bool within_hoffman_bound(const CharPolyInt& p) {
  static const Bound bound = hoffman_bound();
  const Bound local = bound;
  return count_roots_beyond(polynomial_cast<Rational>(p), local.alpha) == 0;
}

std::vector<CensusReport> census(const std::vector<SignedGraph>& graphs, CensusPredicate predicate,
                                 const SearchOptions& options) {
  std::vector<CensusReport> reports(graphs.size());
  const Bound shared = predicate == CensusPredicate::Hoffman ? hoffman_bound() : cyclotomic_bound();

  for_each_slice(graphs.size(), options.jobs, [&](std::uint64_t begin, std::uint64_t end, std::size_t) {
    const Bound local = shared;
    for (std::uint64_t i = begin; i < end; ++i) {
      const SignedGraph& g = graphs[i];
      CensusReport& rep = reports[i];
      rep.index = i;
      rep.order = g.order();
      rep.size = g.size();
      try {
        if (g.order() > kMaxDenseOrder) throw Error(Errc::TooLarge, "order exceeds the dense cap");
        if (predicate == CensusPredicate::SymNotSignSym) {
          if (!is_connected(g) || is_complete(g)) {
            rep.status = "skipped";
            rep.message = "needs a connected non-complete graph";
            continue;
          }
          if (g.order() > options.cert_bound) {
            throw Error(Errc::TooLarge, "order exceeds the certificate bound");
          }
        }
        const SignatureSpace space(g, options.max_xi);
        rep.classes = space.size();
        const bool certify = g.order() <= options.cert_bound;
        std::set<std::string> seen;
        Matrix<double> a;
        IntMatrix ai;
        for (std::uint64_t w = 0; w < space.size(); ++w) {
          CensusHit hit;
          hit.word = w;
          space.fill_adjacency(w, ai);
          bool keep = false;
          switch (predicate) {
            case CensusPredicate::Cyclotomic:
            case CensusPredicate::Hoffman: {
              space.fill_adjacency(w, a);
              const Decision d = decide(local, eigenvalues(a, options.tol, options.max_sweeps).rho(), ai);
              keep = d.meets;
              hit.borderline = d.exact;
              break;
            }
            case CensusPredicate::SymNotSignSym:
              keep = char_poly(ai).has_symmetric_roots() && !is_sign_symmetric(space[w], options.cert_bound);
              break;
            case CensusPredicate::Weighing: {
              const IntMatrix sq = ai * ai;
              const std::int64_t k = g.order() > 0 ? sq(0, 0) : 0;
              keep = g.order() > 0 && sq == k * IntMatrix::Identity(g.order(), g.order());
              if (keep) hit.weight = static_cast<int>(k);
              break;
            }
          }
          if (!keep) continue;
          if (certify) {
            hit.cert = canonical_cert(space[w], options.cert_bound).hex();
            if (!seen.insert(*hit.cert).second) continue;
          }
          rep.hits.push_back(std::move(hit));
        }
      } catch (const Error& e) {
        if (e.code() != Errc::TooLarge) throw;
        rep.status = "too_large";
        rep.message = e.what();
        rep.hits.clear();
      }
    }
  });
  return reports;
}

std::vector<CospectralGroup> cospectral_mates(const std::vector<SignedGraph>& graphs, int cert_bound) {
  std::vector<CospectralGroup> groups;
  std::map<std::string, std::size_t> by_poly;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const CharPolyInt p = char_poly(graphs[i]);
    const std::string cert = canonical_cert(graphs[i], cert_bound).hex();
    std::string key = std::to_string(graphs[i].order()) + ":";
    for (const auto& c : p.coefficients()) key += c.str() + ",";
    auto [it, fresh] = by_poly.emplace(key, groups.size());
    if (fresh) groups.push_back({p, {}});
    auto& group = groups[it->second];
    auto cls = std::find_if(group.classes.begin(), group.classes.end(),
                            [&cert](const CospectralClass& c) { return c.cert == cert; });
    if (cls == group.classes.end()) {
      group.classes.push_back({cert, {i}});
    } else {
      cls->members.push_back(i);
    }
  }
  return groups;
}

double seidel_energy(const SignedGraph& g, double tol) {
  const int n = g.order();
  if (n > kMaxDenseOrder) throw Error(Errc::TooLarge, "order exceeds the dense cap");
  Matrix<double> s = Matrix<double>::Ones(n, n) - Matrix<double>::Identity(n, n) - 2.0 * adjacency<double>(g);
  return eigenvalues(s, tol).values.cwiseAbs().sum();
}

SeidelScan seidel_scan(const std::vector<SignedGraph>& graphs, const SearchOptions& options) {
  SeidelScan scan;
  scan.count = graphs.size();
  scan.tol = options.tol;
  if (graphs.empty()) return scan;
  const int n = graphs.front().order();
  for (const auto& g : graphs) {
    if (g.order() != n) throw Error(Errc::BadParams, "Seidel scan needs graphs of a single order");
  }
  if (n > options.cert_bound) {
    throw Error(Errc::TooLarge, "Seidel scan supports order <= " + std::to_string(options.cert_bound));
  }
  scan.order = n;
  scan.lower_bound = 2.0 * (n - 1);
  scan.upper_bound = n * std::sqrt(std::max(n - 1.0, 0.0));

  scan.energies.resize(graphs.size());
  for_each_slice(graphs.size(), options.jobs, [&](std::uint64_t begin, std::uint64_t end, std::size_t) {
    for (std::uint64_t i = begin; i < end; ++i) scan.energies[i] = seidel_energy(graphs[i], options.tol);
  });

  const double slack = n * options.tol;
  scan.min_energy = *std::min_element(scan.energies.begin(), scan.energies.end());
  scan.max_energy = *std::max_element(scan.energies.begin(), scan.energies.end());
  std::set<std::string> seen;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const double e = scan.energies[i];
    if (e < scan.lower_bound - slack || e > scan.upper_bound + slack) scan.violations.push_back(i);
    if (e <= scan.min_energy + options.tie_tol) {
      scan.argmin.push_back(i);
      if (n >= 2) {
        std::string hex = canonical_cert(seidel(graphs[i]), options.cert_bound).hex();
        if (seen.insert(hex).second) scan.argmin_certs.push_back(std::move(hex));
      }
    }
  }
  return scan;
}

int rational_rank(const IntMatrix& m) {
  std::vector<int> pivots;
  rref(m, pivots);
  return static_cast<int>(pivots.size());
}

SeidelKernel seidel_kernel_check(const SignedGraph& g) {
  const int n = g.order();
  if (n % 2 == 0) throw Error(Errc::BadParams, "Seidel kernel check needs odd order");
  if (n > 13) throw Error(Errc::TooLarge, "Seidel kernel check supports order <= 13");
  const IntMatrix s =
      IntMatrix::Ones(n, n) - IntMatrix::Identity(n, n) - 2 * adjacency<std::int64_t>(g);
  std::vector<int> pivots;
  const auto r = rref(s, pivots);

  SeidelKernel out;
  out.order = n;
  out.rank = static_cast<int>(pivots.size());
  if (out.rank != n - 1) return out;

  int free_col = 0;
  while (free_col < static_cast<int>(pivots.size()) && pivots[static_cast<std::size_t>(free_col)] == free_col) {
    ++free_col;
  }
  std::vector<Rational> x(static_cast<std::size_t>(n), Rational(0));
  x[static_cast<std::size_t>(free_col)] = 1;
  for (std::size_t row = 0; row < pivots.size(); ++row) {
    x[static_cast<std::size_t>(pivots[row])] = -r[row][static_cast<std::size_t>(free_col)];
  }
  BigInt scale(1);
  for (const auto& v : x) {
    const BigInt d = boost::multiprecision::denominator(v);
    scale = scale / boost::multiprecision::gcd(scale, d) * d;
  }
  BigInt common(0);
  for (const auto& v : x) {
    const BigInt k = boost::multiprecision::numerator(v) * (scale / boost::multiprecision::denominator(v));
    out.kernel.push_back(k);
    common = boost::multiprecision::gcd(common, boost::multiprecision::abs(k));
  }
  bool pm1 = true;
  for (auto& k : out.kernel) {
    k /= common;
    if (boost::multiprecision::abs(k) != 1) pm1 = false;
  }
  out.pm1_kernel = pm1;
  return out;
}

}  // namespace sgs
