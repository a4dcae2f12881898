#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sgs/canonical.hpp"
#include "sgs/catalog.hpp"
#include "sgs/constructions.hpp"
#include "sgs/graph_io.hpp"
#include "sgs/polyalg.hpp"
#include "sgs/search.hpp"
#include "sgs/spectral.hpp"
#include "verify.hpp"

#ifndef SGS_VERSION
#define SGS_VERSION "0.0.0"
#endif

namespace sgs::cli {

namespace {

struct Globals {
  double tol = kDefaultTol;
  int max_sweeps = kDefaultSweepCap;
  int jobs = 1;
  int max_xi = kDefaultMaxXi;
  int cert_bound = kDefaultCertBound;
  bool timing = false;
  bool pretty = false;

  SearchOptions search() const {
    SearchOptions o;
    o.tol = tol;
    o.max_sweeps = max_sweeps;
    o.jobs = jobs;
    o.max_xi = max_xi;
    o.cert_bound = cert_bound;
    return o;
  }

  Json bounds() const {
    return Json{{"tol", tol}, {"max_sweeps", max_sweeps}, {"jobs", jobs}, {"max_xi", max_xi}, {"cert_bound", cert_bound}};
  }
};

// Where graphs come from. Any mix of sources may be given; they are read in
// the order edge lists, graph6 files, named families, catalog entries.
struct Inputs {
  std::vector<std::string> edge_lists;
  std::vector<std::string> graph6;
  std::vector<std::string> named;
  std::vector<std::string> catalog;
  std::string catalog_file;
  bool lenient = false;
  int index = -1;
};

void add_inputs(CLI::App* app, Inputs& in) {
  app->add_option("-i,--input", in.edge_lists, "Edge-list file(s)");
  app->add_option("-g,--graph6", in.graph6,
                  "graph6 file(s); 'bundled:N' for all graphs of order N (1..7), 'bundled:petersen'");
  app->add_option("-n,--named", in.named, "Named family, e.g. \"complete 4 -\" or \"bouquet 2 3 shared\"");
  app->add_option("-c,--catalog-entry", in.catalog, "Catalog entry name(s)");
  app->add_option("--catalog-file", in.catalog_file, "Catalog file used by --catalog-entry (default: bundled)");
  app->add_flag("--lenient", in.lenient, "Keep graphs read before a malformed graph6 line");
  app->add_option("--index", in.index, "Use only the graph at this position of the combined input");
}

std::vector<std::string> split_words(const std::string& text) {
  std::vector<std::string> out;
  std::string word;
  for (char c : text) {
    if (c == ' ' || c == ',' || c == '\t') {
      if (!word.empty()) out.push_back(std::move(word));
      word.clear();
    } else {
      word.push_back(c);
    }
  }
  if (!word.empty()) out.push_back(std::move(word));
  return out;
}

Graph6Batch read_graph6_source(const std::string& source, bool lenient) {
  if (source.starts_with("bundled:")) {
    const std::string what = source.substr(8);
    if (what == "petersen") return read_graph6(bundled_petersen_graph6(), lenient);
    int order = 0;
    try {
      order = std::stoi(what);
    } catch (const std::exception&) {
      throw Error(Errc::BadParams, "unknown bundled graph list '" + what + "'");
    }
    return read_graph6(bundled_graph6(order), lenient);
  }
  return read_graph6_file(source, lenient);
}

struct Loaded {
  std::vector<SignedGraph> graphs;
  Json description = Json::array();
  Json warnings = Json::array();
};

Loaded load(const Inputs& in) {
  Loaded out;
  for (const auto& path : in.edge_lists) {
    out.graphs.push_back(read_edge_list_file(path));
    out.description.push_back({{"edge_list", path}});
  }
  for (const auto& source : in.graph6) {
    Graph6Batch batch = read_graph6_source(source, in.lenient);
    out.description.push_back({{"graph6", source}, {"graphs", batch.graphs.size()}});
    if (batch.error) out.warnings.push_back({{"graph6", source}, {"line", batch.error_line}, {"message", *batch.error}});
    for (auto& g : batch.graphs) out.graphs.push_back(std::move(g));
  }
  for (const auto& spec : in.named) {
    const auto words = split_words(spec);
    if (words.empty()) throw Error(Errc::BadParams, "empty --named value");
    out.graphs.push_back(named(words[0], std::span<const std::string>(words).subspan(1)));
    out.description.push_back({{"named", spec}});
  }
  if (!in.catalog.empty()) {
    const std::vector<CatalogEntry> loaded = in.catalog_file.empty() ? std::vector<CatalogEntry>{} : catalog_load(in.catalog_file);
    const auto& entries = in.catalog_file.empty() ? bundled_catalog() : loaded;
    for (const auto& name : in.catalog) {
      out.graphs.push_back(catalog_find(entries, name).graph);
      out.description.push_back({{"catalog", name}});
    }
  }
  if (in.index >= 0) {
    if (in.index >= static_cast<int>(out.graphs.size())) {
      throw Error(Errc::NotFound, "--index " + std::to_string(in.index) + " is beyond the " +
                                      std::to_string(out.graphs.size()) + " input graphs");
    }
    SignedGraph chosen = out.graphs[static_cast<std::size_t>(in.index)];
    out.graphs = {std::move(chosen)};
    out.description.push_back({{"index", in.index}});
  }
  return out;
}

const SignedGraph& only(const Loaded& loaded) {
  if (loaded.graphs.size() != 1) {
    throw Error(Errc::BadParams, "expected exactly one input graph, got " + std::to_string(loaded.graphs.size()) +
                                     " (use --index to pick one)");
  }
  return loaded.graphs.front();
}

Json big(const BigInt& v) { return v.str(); }

Json poly_json(const CharPolyInt& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(c.str());
  return Json{{"ascending", coeffs}, {"text", p.to_string()}};
}

Json graph_json(const SignedGraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(Json::array({e.u, e.v, e.sign > 0 ? "+" : "-"}));
  return Json{{"n", g.order()}, {"m", g.size()}, {"edges", edges}};
}

Json values_json(const Eigen::VectorXd& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Json words_json(const std::vector<std::uint64_t>& words) {
  Json a = Json::array();
  for (auto w : words) a.push_back(w);
  return a;
}

Json search_report_json(const SearchReport& r, bool timing) {
  Json j;
  j["objective"] = r.objective;
  j["n"] = r.order;
  j["m"] = r.size;
  j["xi"] = r.xi;
  j["classes"] = std::uint64_t{1} << r.xi;
  j["tol"] = r.tol;
  j["tie_tol"] = r.tie_tol;
  j["min"] = r.min_value;
  j["argmin_words"] = words_json(r.argmin_words);
  j["argmin_certs"] = r.argmin_certs;
  j["certs_deduped"] = r.certs_deduped;
  j["max"] = r.max_value;
  j["argmax_words"] = words_json(r.argmax_words);
  j["exhaustive"] = r.exhaustive;
  Json records = Json::array();
  for (const auto& rec : r.records) records.push_back({{"word", rec.word}, {"value", rec.value}});
  j["records"] = std::move(records);
  if (timing) j["seconds"] = r.seconds;
  return j;
}

Json triangles_json(const SignedGraph& g) {
  const TriangleCensus t = triangle_sign_census(g);
  return Json{{"positive", t.positive}, {"negative", t.negative}};
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::TooLarge:
    case Errc::NoConvergence:
      return kExitResource;
    case Errc::ValidationFailed:
      return kExitCheckFailed;
    default:
      return kExitUsage;
  }
}

void emit(std::ostream& out, const Json& j, bool pretty) { out << (pretty ? j.dump(2) : j.dump()) << '\n'; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral analysis of signed graphs", "sgs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", SGS_VERSION);
  Globals gl;
  app.add_option("--tol", gl.tol, "Eigenvalue tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--max-sweeps", gl.max_sweeps, "Jacobi sweep cap")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("-j,--jobs", gl.jobs, "Worker threads")->capture_default_str()->check(CLI::Range(1, 1024));
  app.add_option("--max-xi", gl.max_xi, "Largest cyclomatic number to enumerate")->capture_default_str()->check(CLI::Range(0, 62));
  app.add_option("--cert-bound", gl.cert_bound, "Largest order for canonical certificates")->capture_default_str()->check(CLI::Range(0, 64));
  app.add_flag("--timing", gl.timing, "Include wall-clock timings (not reproducible)");
  app.add_flag("--pretty", gl.pretty, "Indent JSON output");

  Json report;
  Json exact = Json::object();
  int status = kExitOk;
  std::string command;
  Inputs in;
  Loaded loaded;

  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    add_inputs(s, in);
    return s;
  };

  // spectrum
  bool laplacian_matrix = false;
  int moment_count = -1;
  CLI::App* spectrum_cmd = sub("spectrum", "Eigenvalues of the adjacency (or Laplacian) matrix");
  spectrum_cmd->add_flag("--laplacian", laplacian_matrix, "Use L = D - A");
  spectrum_cmd->add_option("--moments", moment_count, "Also report exact trace(A^k) for k = 0..K")->check(CLI::Range(0, 64));
  spectrum_cmd->callback([&] {
    const SignedGraph& g = only(loaded);
    const Spectrum s = laplacian_matrix ? eigenvalues(laplacian<double>(g), gl.tol, gl.max_sweeps)
                                        : spectrum(g, gl.tol, gl.max_sweeps);
    report = {{"matrix", laplacian_matrix ? "laplacian" : "adjacency"},
              {"values", values_json(s.values)},
              {"lambda1", s.lambda1()},
              {"lambda_n", s.lambda_n()},
              {"rho", s.rho()},
              {"tol", s.tol},
              {"sweeps", s.sweeps}};
    exact["values"] = false;
    if (moment_count >= 0) {
      Json m = Json::array();
      for (const auto& v : spectral_moments(g, moment_count)) m.push_back(big(v));
      report["moments"] = m;
      exact["moments"] = true;
    }
  });

  // charpoly
  bool charpoly_laplacian = false;
  bool with_sachs = false;
  CLI::App* charpoly_cmd = sub("charpoly", "Exact characteristic polynomial");
  charpoly_cmd->add_flag("--laplacian", charpoly_laplacian, "Use L = D - A");
  charpoly_cmd->add_flag("--sachs", with_sachs, "Cross-check with the basic-figure expansion");
  charpoly_cmd->callback([&] {
    const SignedGraph& g = only(loaded);
    const CharPolyInt p = charpoly_laplacian ? char_poly(laplacian<std::int64_t>(g)) : char_poly(g);
    report = {{"matrix", charpoly_laplacian ? "laplacian" : "adjacency"},
              {"char_poly", poly_json(p)},
              {"distinct_eigenvalues", distinct_eigenvalue_count(p)},
              {"symmetric_spectrum", p.has_symmetric_roots()},
              {"roots_outside_minus2_2", g.order() == 0 ? 0 : count_roots_outside(p, Rational(-2), Rational(2))}};
    if (with_sachs) {
      if (charpoly_laplacian) throw Error(Errc::BadParams, "--sachs applies to the adjacency matrix");
      report["sachs_agrees"] = sachs_char_poly(g) == p;
      if (!report["sachs_agrees"].get<bool>()) status = kExitCheckFailed;
    }
    exact["char_poly"] = true;
  });

  // switch
  std::string set_text;
  std::string switch_output;
  CLI::App* switch_cmd = sub("switch", "Switch signs across the cut [U, V \\ U]");
  switch_cmd->add_option("-U,--set", set_text, "Comma-separated vertices of U")->required();
  switch_cmd->add_option("-o,--output", switch_output, "Write the switched graph as an edge list");
  switch_cmd->callback([&] {
    const SignedGraph& g = only(loaded);
    VertexSet u(g.order());
    Json members = Json::array();
    for (const auto& w : split_words(set_text)) {
      int v = -1;
      try {
        v = std::stoi(w);
      } catch (const std::exception&) {
        throw Error(Errc::BadParams, "bad vertex '" + w + "' in --set");
      }
      if (!g.contains(v)) throw Error(Errc::VertexOutOfRange, "vertex " + w + " is not in the graph");
      u.insert(v);
      members.push_back(v);
    }
    const SignedGraph h = switching(g, u);
    if (!switch_output.empty()) {
      std::ofstream file(switch_output);
      if (!file) throw Error(Errc::NotFound, "cannot write " + switch_output);
      write_edge_list(file, h);
    }
    report = {{"set", members}, {"graph", graph_json(h)}, {"edge_list", to_edge_list(h)}};
  });

  // balance
  CLI::App* balance_cmd = sub("balance", "Balance by potentials and by det L");
  balance_cmd->callback([&] {
    const SignedGraph& g = only(loaded);
    const CycleBasis basis = cycle_basis(g);
    report = {{"balanced", is_balanced(g)},
              {"xi", basis.xi},
              {"components", basis.components},
              {"laplacian_det_zero", is_connected(g) ? Json(laplacian_balance_check(g)) : Json(nullptr)},
              {"triangles", triangles_json(g)}};
    exact["balance"] = true;
  });

  // sign-symmetric
  CLI::App* symmetric_cmd = sub("sign-symmetric", "Is the graph switching isomorphic to its negation?");
  symmetric_cmd->callback([&] {
    const SignedGraph& g = only(loaded);
    report = {{"sign_symmetric", is_sign_symmetric(g, gl.cert_bound)},
              {"symmetric_spectrum", char_poly(g).has_symmetric_roots()},
              {"triangles", triangles_json(g)},
              {"cert", canonical_cert(g, gl.cert_bound).hex()}};
    exact["sign_symmetric"] = true;
  });

  // signed-diameter
  CLI::App* diameter_cmd = sub("signed-diameter", "Largest signed distance");
  diameter_cmd->callback([&] {
    const SignedGraph& g = only(loaded);
    const int sd = signed_diameter(g);
    const int distinct = distinct_eigenvalue_count(char_poly(g));
    int diameter = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      const auto d = bfs_distances(g, v);
      diameter = std::max(diameter, *std::max_element(d.begin(), d.end()));
    }
    report = {{"signed_diameter", sd},
              {"diameter", diameter},
              {"distinct_eigenvalues", distinct},
              {"bound_holds", sd <= distinct - 1}};
    exact["signed_diameter"] = true;
  });

  // enumerate
  std::uint64_t limit = 1024;
  CLI::App* enumerate_cmd = sub("enumerate", "One representative per switching class");
  enumerate_cmd->add_option("--limit", limit, "Largest number of signatures listed")->capture_default_str();
  enumerate_cmd->callback([&] {
    const SignatureSpace space = enumerate_classes(only(loaded), gl.max_xi);
    Json sigs = Json::array();
    for (std::uint64_t w = 0; w < space.size() && w < limit; ++w) {
      Json negative = Json::array();
      for (const Edge& e : space[w].edges()) {
        if (e.sign < 0) negative.push_back(Json::array({e.u, e.v}));
      }
      sigs.push_back({{"word", w}, {"negative_edges", negative}});
    }
    report = {{"xi", space.xi()},
              {"classes", space.size()},
              {"forest_edges", space.basis().forest_edges},
              {"cotree_edges", space.basis().cotree_edges},
              {"signatures", sigs},
              {"truncated", space.size() > limit}};
  });

  // minimize
  std::string objective_name = "rho";
  bool no_records = false;
  CLI::App* minimize_cmd = sub("minimize", "Exhaustive minimization over switching classes");
  minimize_cmd->add_option("--objective", objective_name, "rho or lambda1")
      ->check(CLI::IsMember({"rho", "lambda1"}))
      ->capture_default_str();
  minimize_cmd->add_flag("--no-records", no_records, "Omit per-class records");
  minimize_cmd->callback([&] {
    SearchOptions o = gl.search();
    o.keep_records = !no_records;
    const Objective objective = objective_name == "rho" ? Objective::Rho : Objective::Lambda1;
    Json reports = Json::array();
    for (const auto& g : loaded.graphs) reports.push_back(search_report_json(minimize(g, objective, o), gl.timing));
    report = reports.size() == 1 ? reports[0] : Json{{"reports", reports}};
    exact["values"] = false;
  });

  // conjecture
  std::string which_name;
  CLI::App* conjecture_cmd = sub("conjecture", "Exhaustive existence check of a signature under a bound");
  conjecture_cmd->add_option("--which", which_name, "bilu_linial | mss_lambda1 | gregory_delta | gregory_rho")
      ->required()
      ->check(CLI::IsMember({"bilu_linial", "mss_lambda1", "gregory_delta", "gregory_rho"}));
  conjecture_cmd->callback([&] {
    const Conjecture which = which_name == "bilu_linial"    ? Conjecture::BiluLinial
                             : which_name == "mss_lambda1"  ? Conjecture::MssLambda1
                             : which_name == "gregory_delta" ? Conjecture::GregoryDelta
                                                             : Conjecture::GregoryRho;
    Json results = Json::array();
    for (const auto& g : loaded.graphs) {
      const ConjectureResult r = conjecture_check(g, which, gl.search());
      results.push_back({{"which", r.which},
                         {"bound", r.bound_text},
                         {"bound_value", r.bound},
                         {"strict", r.strict},
                         {"holds", r.holds},
                         {"witness_word", r.witness ? Json(*r.witness) : Json(nullptr)},
                         {"witness_value", r.witness ? Json(r.witness_value) : Json(nullptr)},
                         {"classes", r.classes},
                         {"exact_decisions", r.exact_decisions}});
    }
    report = results.size() == 1 ? results[0] : Json{{"results", results}};
    exact["holds"] = true;
  });

  // census
  std::string predicate_name;
  int regular_degree = -1;
  bool connected_only = false;
  bool all_reports = false;
  CLI::App* census_cmd = sub("census", "Scan every class of every input graph for a predicate");
  census_cmd->add_option("--predicate", predicate_name, "cyclotomic | hoffman | sym_not_signsym | weighing")
      ->required()
      ->check(CLI::IsMember({"cyclotomic", "hoffman", "sym_not_signsym", "weighing"}));
  census_cmd->add_option("--regular", regular_degree, "Keep only d-regular input graphs");
  census_cmd->add_flag("--connected", connected_only, "Keep only connected input graphs");
  census_cmd->add_flag("--all", all_reports, "Report graphs without hits too");
  census_cmd->callback([&] {
    const CensusPredicate predicate = predicate_name == "cyclotomic" ? CensusPredicate::Cyclotomic
                                      : predicate_name == "hoffman"  ? CensusPredicate::Hoffman
                                      : predicate_name == "weighing" ? CensusPredicate::Weighing
                                                                     : CensusPredicate::SymNotSignSym;
    std::vector<SignedGraph> stream;
    std::vector<std::size_t> origin;
    for (std::size_t i = 0; i < loaded.graphs.size(); ++i) {
      const auto& g = loaded.graphs[i];
      if (connected_only && !is_connected(g)) continue;
      if (regular_degree >= 0 && !(is_regular(g) && (g.order() == 0 || g.degree(0) == regular_degree))) continue;
      stream.push_back(g);
      origin.push_back(i);
    }
    const auto reports = census(stream, predicate, gl.search());
    Json rows = Json::array();
    std::size_t hits = 0;
    std::size_t too_large = 0;
    for (const auto& r : reports) {
      hits += r.hits.size();
      if (r.status == "too_large") ++too_large;
      if (!all_reports && r.hits.empty() && r.status == "ok") continue;
      Json h = Json::array();
      for (const auto& hit : r.hits) {
        Json row = {{"word", hit.word}, {"graph", graph_json(SignatureSpace(stream[r.index], gl.max_xi)[hit.word])}};
        if (hit.cert) row["cert"] = *hit.cert;
        if (hit.weight) row["weight"] = *hit.weight;
        if (predicate == CensusPredicate::Cyclotomic || predicate == CensusPredicate::Hoffman) {
          row["borderline"] = hit.borderline;
        }
        h.push_back(std::move(row));
      }
      Json row = {{"input_index", origin[r.index]}, {"n", r.order}, {"m", r.size}, {"status", r.status}, {"classes", r.classes}};
      if (!r.message.empty()) row["message"] = r.message;
      row["hits"] = std::move(h);
      rows.push_back(std::move(row));
    }
    report = {{"predicate", predicate_name},
              {"graphs_scanned", stream.size()},
              {"total_hits", hits},
              {"too_large", too_large},
              {"reports", rows}};
    exact["hits"] = true;
  });

  // cospectral
  bool mates_only = false;
  CLI::App* cospectral_cmd = sub("cospectral", "Group inputs by exact characteristic polynomial and certificate");
  cospectral_cmd->add_flag("--mates-only", mates_only, "Report only groups with two or more classes");
  cospectral_cmd->callback([&] {
    const auto groups = cospectral_mates(loaded.graphs, gl.cert_bound);
    Json rows = Json::array();
    std::size_t mates = 0;
    for (const auto& grp : groups) {
      if (grp.has_mates()) ++mates;
      if (mates_only && !grp.has_mates()) continue;
      Json classes = Json::array();
      for (const auto& c : grp.classes) classes.push_back({{"cert", c.cert}, {"members", c.members}});
      rows.push_back({{"char_poly", poly_json(grp.char_poly)}, {"mates", grp.has_mates()}, {"classes", classes}});
    }
    report = {{"graphs", loaded.graphs.size()}, {"groups_with_mates", mates}, {"groups", rows}};
    exact["char_poly"] = true;
  });

  // seidel
  bool kernel_mode = false;
  CLI::App* seidel_cmd = sub("seidel", "Seidel energy scan or exact kernel check");
  seidel_cmd->add_flag("--kernel", kernel_mode, "Exact rank and +-1 kernel test (odd order)");
  seidel_cmd->callback([&] {
    if (kernel_mode) {
      Json rows = Json::array();
      for (const auto& g : loaded.graphs) {
        const SeidelKernel k = seidel_kernel_check(g);
        Json kernel = Json::array();
        for (const auto& v : k.kernel) kernel.push_back(big(v));
        rows.push_back({{"n", k.order},
                        {"rank", k.rank},
                        {"kernel", k.rank == k.order - 1 ? kernel : Json(nullptr)},
                        {"pm1_kernel", k.pm1_kernel ? Json(*k.pm1_kernel) : Json("n/a")}});
      }
      report = rows.size() == 1 ? rows[0] : Json{{"results", rows}};
      exact["rank"] = true;
      return;
    }
    const SeidelScan s = seidel_scan(loaded.graphs, gl.search());
    report = {{"n", s.order},
              {"graphs", s.count},
              {"tol", s.tol},
              {"lower_bound", s.lower_bound},
              {"upper_bound", s.upper_bound},
              {"min_energy", s.min_energy},
              {"max_energy", s.max_energy},
              {"argmin", s.argmin},
              {"argmin_certs", s.argmin_certs},
              {"violations", s.violations}};
    exact["energy"] = false;
    if (!s.violations.empty()) status = kExitCheckFailed;
  });

  // catalog
  std::string catalog_name;
  std::string compare_spec;
  std::string catalog_path;
  CLI::App* catalog_cmd = app.add_subcommand("catalog", "List or inspect catalog entries");
  catalog_cmd->add_option("--file", catalog_path, "Catalog file (default: bundled)");
  catalog_cmd->add_option("--name", catalog_name, "Show one entry in full");
  catalog_cmd->add_option("--compare", compare_spec, "Named family to test for switching isomorphism, e.g. \"huang 4\"");
  catalog_cmd->callback([&] {
    const std::vector<CatalogEntry> file_entries = catalog_path.empty() ? std::vector<CatalogEntry>{} : catalog_load(catalog_path);
    const auto& entries = catalog_path.empty() ? bundled_catalog() : file_entries;
    if (catalog_name.empty()) {
      Json rows = Json::array();
      for (const auto& e : entries) {
        rows.push_back({{"name", e.name},
                        {"n", e.graph.order()},
                        {"m", e.graph.size()},
                        {"char_poly_checked", e.expected_char_poly.has_value()},
                        {"provenance", e.provenance}});
      }
      report = {{"source", catalog_path.empty() ? "bundled" : catalog_path}, {"entries", rows}};
      return;
    }
    const CatalogEntry& e = catalog_find(entries, catalog_name);
    const CharPolyInt p = char_poly(e.graph);
    report = {{"name", e.name},
              {"graph", graph_json(e.graph)},
              {"char_poly", poly_json(p)},
              {"char_poly_checked", e.expected_char_poly.has_value()},
              {"provenance", e.provenance},
              {"cyclotomic", is_cyclotomic(e.graph)},
              {"distinct_eigenvalues", distinct_eigenvalue_count(p)},
              {"symmetric_spectrum", p.has_symmetric_roots()},
              {"sign_symmetric", e.graph.order() <= gl.cert_bound ? Json(is_sign_symmetric(e.graph, gl.cert_bound)) : Json(nullptr)}};
    if (!compare_spec.empty()) {
      const auto words = split_words(compare_spec);
      if (words.empty()) throw Error(Errc::BadParams, "empty --compare value");
      const SignedGraph other = named(words[0], std::span<const std::string>(words).subspan(1));
      report["compare"] = {{"named", compare_spec}, {"switching_isomorphic", are_switching_isomorphic(e.graph, other, gl.cert_bound)}};
    }
    exact["char_poly"] = true;
  });

  // verify
  std::string suite;
  SuiteOptions suite_options;
  CLI::App* verify_cmd = sub("verify", "Run a named invariant suite");
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  verify_cmd->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_choices));
  verify_cmd->add_option("--max-n", suite_options.max_n, "Largest order checked (suite default if omitted)");
  verify_cmd->add_option("--samples", suite_options.samples, "Random instances (suite default if omitted)");
  verify_cmd->add_option("--seed", suite_options.seed, "Random seed")->capture_default_str();
  verify_cmd->add_option("--check-tol", suite_options.tol, "Tolerance of numeric checks")->capture_default_str();
  verify_cmd->callback([&] {
    suite_options.jobs = gl.jobs;
    suite_options.extra = loaded.graphs;
    const std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
    Json results = Json::array();
    bool passed = true;
    for (const auto& name : names) {
      Json r = run_suite(name, suite_options);
      passed = passed && r["passed"].get<bool>();
      results.push_back(std::move(r));
    }
    report = names.size() == 1 ? results[0] : Json{{"passed", passed}, {"suites", results}};
    if (!passed) status = kExitCheckFailed;
  });

  // Inputs are loaded before any subcommand callback runs.
  app.parse_complete_callback([&] {
    for (CLI::App* s : app.get_subcommands()) command = s->get_name();
    if (command != "catalog") loaded = load(in);
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << SGS_VERSION << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    emit(err, {{"error", {{"code", "UsageError"}, {"message", e.what()}}}}, false);
    return kExitUsage;
  } catch (const Error& e) {
    emit(err, {{"command", command}, {"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}}, false);
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    emit(err, {{"command", command}, {"error", {{"code", "InternalError"}, {"message", e.what()}}}}, false);
    return kExitUsage;
  }

  Json input = {{"sources", loaded.description}, {"graphs", loaded.graphs.size()}, {"bounds", gl.bounds()}};
  if (!loaded.warnings.empty()) input["warnings"] = loaded.warnings;
  if (loaded.graphs.size() == 1 && command != "verify") input["graph"] = graph_json(loaded.graphs.front());
  Json doc = {{"command", command}, {"input", input}, {"result", report}, {"version", SGS_VERSION}, {"exact", exact}};
  emit(out, doc, gl.pretty);
  return status;
}

}  // namespace sgs::cli
