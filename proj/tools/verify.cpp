#include "verify.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "sgs/catalog.hpp"
#include "sgs/constructions.hpp"
#include "sgs/graph_io.hpp"
#include "sgs/polyalg.hpp"
#include "sgs/random.hpp"
#include "sgs/search.hpp"
#include "sgs/signature_space.hpp"
#include "sgs/spectral.hpp"

namespace sgs::cli {

namespace {

constexpr std::size_t kMaxReportedFailures = 10;

class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  void check(bool ok, const std::function<std::string()>& describe) {
    ++checked_;
    if (ok) return;
    ++failed_;
    if (failures_.size() < kMaxReportedFailures) failures_.push_back(describe());
  }

  bool passed() const { return failed_ == 0; }

  Json json() const {
    Json j;
    j["check"] = name_;
    j["passed"] = passed();
    j["checked"] = checked_;
    j["failed"] = failed_;
    j["failures"] = failures_;
    return j;
  }

 private:
  std::string name_;
  std::size_t checked_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

std::string show(const SignedGraph& g) {
  std::string s = to_edge_list(g);
  for (char& c : s) {
    if (c == '\n') c = ';';
  }
  return s;
}

int pick(int value, int fallback) { return value < 0 ? fallback : value; }

// Every switching class of every bundled underlying graph with 1 <= n <= max_n.
void for_each_bundled_class(int max_n, bool connected_only, const std::function<void(const SignedGraph&)>& fn) {
  for (int n = 1; n <= std::min(max_n, 7); ++n) {
    for (const SignedGraph& base : read_graph6(bundled_graph6(n)).graphs) {
      if (connected_only && !is_connected(base)) continue;
      const SignatureSpace space(base);
      for (std::uint64_t w = 0; w < space.size(); ++w) fn(space[w]);
    }
  }
}

// Signed closed walks of length k, counted one step at a time.
BigInt closed_walk_difference(const SignedGraph& g, int k) {
  std::int64_t total = 0;
  std::function<void(Vertex, Vertex, int, int)> walk = [&](Vertex start, Vertex at, int left, int sign) {
    if (left == 0) {
      if (at == start) total += sign;
      return;
    }
    for (const Incidence& inc : g.neighbors(at)) walk(start, inc.to, left - 1, sign * g.edge(inc.edge).sign);
  };
  for (Vertex v = 0; v < g.order(); ++v) walk(v, v, k, 1);
  return BigInt(total);
}

Json suite_coefficient(const SuiteOptions& o) {
  Tally exhaustive("sachs equals char_poly, all classes");
  auto check = [&](const SignedGraph& g) {
    exhaustive.check(sachs_char_poly(g) == char_poly(g), [&] { return show(g); });
  };
  for_each_bundled_class(pick(o.max_n, 6), false, check);
  for (const auto& g : o.extra) check(g);

  Tally random("sachs equals char_poly, random n = 7..9");
  std::mt19937_64 rng(o.seed);
  for (int i = 0; i < pick(o.samples, 100); ++i) {
    const SignedGraph g = random_signed_graph(rng, 7 + i % 3);
    random.check(sachs_char_poly(g) == char_poly(g), [&] { return show(g); });
  }
  return Json::array({exhaustive.json(), random.json()});
}

Json suite_moments(const SuiteOptions& o) {
  Tally t("trace(A^k) equals signed closed-walk count, k <= 6");
  auto check = [&](const SignedGraph& g) {
    const auto moments = spectral_moments(g, 6);
    for (int k = 0; k <= 6; ++k) {
      const BigInt walks = k == 0 ? BigInt(g.order()) : closed_walk_difference(g, k);
      t.check(moments[static_cast<std::size_t>(k)] == walks, [&] { return "k=" + std::to_string(k) + " " + show(g); });
    }
  };
  for_each_bundled_class(pick(o.max_n, 5), false, check);
  for (const auto& g : o.extra) check(g);
  return Json::array({t.json()});
}

Json suite_interlacing(const SuiteOptions& o) {
  Tally t("eigenvalues of g - v interlace those of g");
  std::mt19937_64 rng(o.seed);
  const int max_n = std::max(2, pick(o.max_n, 12));
  auto check = [&](const SignedGraph& g, Vertex v) {
    const auto big = spectrum(g).values;
    const auto small = spectrum(delete_vertex(g, v)).values;
    bool ok = true;
    for (Eigen::Index i = 0; i < small.size(); ++i) {
      ok = ok && big(i) + o.tol >= small(i) && small(i) >= big(i + 1) - o.tol;
    }
    t.check(ok, [&] { return "v=" + std::to_string(v) + " " + show(g); });
  };
  for (int i = 0; i < pick(o.samples, 200); ++i) {
    const int n = std::uniform_int_distribution<int>(2, max_n)(rng);
    const SignedGraph g = random_signed_graph(rng, n);
    check(g, std::uniform_int_distribution<int>(0, n - 1)(rng));
  }
  for (const auto& g : o.extra) {
    for (Vertex v = 0; v < g.order(); ++v) check(g, v);
  }
  return Json::array({t.json()});
}

Json suite_schwenk(const SuiteOptions& o) {
  Tally t("Schwenk residual vanishes at every vertex and edge");
  std::mt19937_64 rng(o.seed);
  auto check = [&](const SignedGraph& g) {
    for (Vertex v = 0; v < g.order(); ++v) {
      t.check(schwenk_residual(g, VertexPivot{v}).is_zero(), [&] { return "vertex " + std::to_string(v) + " " + show(g); });
    }
    for (int e = 0; e < g.size(); ++e) {
      t.check(schwenk_residual(g, EdgePivot{e}).is_zero(), [&] { return "edge " + std::to_string(e) + " " + show(g); });
    }
  };
  const int max_n = std::max(1, pick(o.max_n, 9));
  for (int i = 0; i < pick(o.samples, 50); ++i) {
    check(random_signed_graph(rng, std::uniform_int_distribution<int>(1, max_n)(rng)));
  }
  for (const auto& g : o.extra) check(g);
  return Json::array({t.json()});
}

Json suite_spread(const SuiteOptions& o) {
  Tally t("rho(G, sigma) <= rho(G, +)");
  auto check = [&](const SignedGraph& g) {
    const double rho = spectrum(g).rho();
    const double top = spectrum(underlying(g)).rho();
    t.check(rho <= top + o.tol, [&] { return show(g); });
  };
  for_each_bundled_class(pick(o.max_n, 6), false, check);
  for (const auto& g : o.extra) check(g);
  return Json::array({t.json()});
}

Json suite_godsil_gutman(const SuiteOptions& o) {
  Tally t("class-average char poly equals matching polynomial");
  auto check = [&](const SignedGraph& g) {
    t.check(godsil_gutman_average(g) == polynomial_cast<Rational>(matching_polynomial(g)), [&] { return show(g); });
  };
  for (int n = 1; n <= std::min(pick(o.max_n, 6), 7); ++n) {
    for (const SignedGraph& g : read_graph6(bundled_graph6(n)).graphs) {
      if (is_connected(g)) check(g);
    }
  }
  for (const auto& g : o.extra) check(g);
  return Json::array({t.json()});
}

Json suite_gregory(const SuiteOptions& o) {
  Tally floor("rho >= sqrt(2m/n)");
  std::mt19937_64 rng(o.seed);
  auto check = [&](const SignedGraph& g) {
    const GregoryCheck c = gregory_check(g);
    floor.check(c.rho >= c.bound - o.tol, [&] { return show(g); });
  };
  const int max_n = std::max(1, pick(o.max_n, 10));
  for (int i = 0; i < pick(o.samples, 200); ++i) {
    check(random_signed_graph(rng, std::uniform_int_distribution<int>(1, max_n)(rng)));
  }
  for (const auto& g : o.extra) check(g);

  Tally equality("equality detected exactly");
  const GregoryCheck c4 = gregory_check(unbalanced_c4());
  equality.check(c4.equality && c4.weight == 2, [] { return std::string("C4- is not a weight-2 weighing matrix"); });
  const GregoryCheck q3 = gregory_check(huang_signing(3));
  equality.check(q3.equality && q3.weight == 3, [] { return std::string("Huang Q3 is not a weight-3 weighing matrix"); });
  const GregoryCheck p3 = gregory_check(path(3));
  equality.check(!p3.equality, [] { return std::string("P3 reported as an equality case"); });
  return Json::array({floor.json(), equality.json()});
}

Json suite_huang(const SuiteOptions& o) {
  Tally square("A_d^2 = d I");
  for (int d = 1; d <= 6; ++d) {
    square.check(weighing_weight(huang_signing(d)) == d, [d] { return "d=" + std::to_string(d); });
  }
  Tally spec("spectrum of A_4 is +-2, each 8 times");
  const auto values = spectrum(huang_signing(4)).values;
  bool ok = values.size() == 16;
  for (Eigen::Index i = 0; ok && i < 16; ++i) ok = std::abs(values(i) - (i < 8 ? 2.0 : -2.0)) <= o.tol;
  spec.check(ok, [] { return std::string("unexpected spectrum"); });
  return Json::array({square.json(), spec.json()});
}

Json suite_double_cover(const SuiteOptions& o) {
  Tally t("phi(cover) = phi(G, +) phi(G, sigma)");
  Tally regular("cover repeats the degree sequence");
  auto check = [&](const SignedGraph& g) {
    const SignedGraph cover = double_cover(g);
    t.check(char_poly(cover) == char_poly(underlying(g)) * char_poly(g), [&] { return show(g); });
    bool same = cover.order() == 2 * g.order();
    for (Vertex v = 0; same && v < g.order(); ++v) {
      same = cover.degree(v) == g.degree(v) && cover.degree(v + g.order()) == g.degree(v);
    }
    regular.check(same, [&] { return show(g); });
  };
  for_each_bundled_class(pick(o.max_n, 5), false, check);
  for (const auto& g : o.extra) check(g);
  return Json::array({t.json(), regular.json()});
}

Json suite_seidel_bounds(const SuiteOptions& o) {
  const int n = std::clamp(pick(o.max_n, 7), 2, 7);
  SearchOptions so;
  so.jobs = o.jobs;
  const SeidelScan scan = seidel_scan(read_graph6(bundled_graph6(n)).graphs, so);
  Tally bounds("2(n-1) <= S <= n sqrt(n-1), order " + std::to_string(n));
  for (std::size_t i = 0; i < scan.energies.size(); ++i) {
    const double e = scan.energies[i];
    bounds.check(e >= scan.lower_bound - o.tol && e <= scan.upper_bound + o.tol,
                 [&] { return "graph " + std::to_string(i) + " energy " + std::to_string(e); });
  }
  Tally attained("lower bound attained by K_n");
  const double kn = seidel_energy(complete(n));
  attained.check(std::abs(kn - scan.lower_bound) <= o.tol && std::abs(scan.min_energy - scan.lower_bound) <= o.tol,
                 [&] { return "K_n energy " + std::to_string(kn); });
  return Json::array({bounds.json(), attained.json()});
}

using Suite = Json (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> table = {
      {"coefficient", suite_coefficient},     {"moments", suite_moments},
      {"interlacing", suite_interlacing},     {"schwenk", suite_schwenk},
      {"spread", suite_spread},               {"godsil-gutman", suite_godsil_gutman},
      {"gregory", suite_gregory},             {"huang", suite_huang},
      {"double-cover", suite_double_cover},   {"seidel-bounds", suite_seidel_bounds},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

Json run_suite(const std::string& name, const SuiteOptions& options) {
  for (const auto& [suite, fn] : suites()) {
    if (suite != name) continue;
    Json checks = fn(options);
    bool passed = true;
    for (const auto& c : checks) passed = passed && c["passed"].get<bool>();
    Json out;
    out["suite"] = name;
    out["passed"] = passed;
    out["seed"] = options.seed;
    out["tol"] = options.tol;
    out["checks"] = std::move(checks);
    return out;
  }
  throw Error(Errc::UnknownName, "unknown verify suite '" + name + "'");
}

}  // namespace sgs::cli
