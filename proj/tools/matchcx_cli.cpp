#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "matchcx/basis.hpp"
#include "matchcx/boards.hpp"
#include "matchcx/cycles.hpp"
#include "matchcx/errors.hpp"
#include "matchcx/homology.hpp"
#include "matchcx/morse.hpp"
#include "matchcx/spec.hpp"

using namespace matchcx;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 2;
constexpr int kGuard = 3;
constexpr int kUsage = 4;

struct Budget {
  double max_mem_gib = 4.0;
  double max_seconds = 0;  // 0: unlimited
  unsigned threads = 1;

  HomologyOptions options() const {
    HomologyOptions o;
    o.threads = threads;
    o.snf.max_dense_bytes = static_cast<std::size_t>(max_mem_gib * double(1ull << 30));
    if (max_seconds > 0)
      o.snf.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(static_cast<long long>(max_seconds * 1000));
    return o;
  }
};

long peak_rss_kb() {
  std::ifstream f("/proc/self/status");
  std::string line;
  while (std::getline(f, line))
    if (line.rfind("VmHWM:", 0) == 0) return std::stol(line.substr(6));
  return -1;
}

// Rough bytes for the two boundary matrices around degree k.
void check_size(const Complex& c, int k, const Budget& b) {
  double nnz = double(c.num_faces(k)) * (k + 1) + double(c.num_faces(k + 1)) * (k + 2);
  double bytes = nnz * 48.0;
  double limit = b.max_mem_gib * double(1ull << 30);
  if (bytes > limit) {
    std::ostringstream o;
    o << "sizing: " << c.name() << " f_" << k << "=" << c.num_faces(k) << " f_" << k + 1 << "=" << c.num_faces(k + 1)
      << " needs about " << bytes / double(1ull << 30) << " GiB for boundary matrices, budget " << b.max_mem_gib << " GiB";
    throw ScaleGuardError(o.str());
  }
}

json torsion_json(const HomologyGroup& g) {
  json t = json::array();
  for (const auto& d : g.torsion) {
    if (d.fits_slong_p()) t.push_back(d.get_si());
    else t.push_back(d.get_str());
  }
  return t;
}

json chain_json(const Chain& z) {
  json terms = json::array();
  for (const auto& [s, c] : z.terms()) {
    json verts = json::array();
    for (const auto& v : s) verts.push_back(v.to_string());
    terms.push_back({{"simplex", verts}, {"coeff", c.get_str()}});
  }
  return {{"degree", z.degree()}, {"terms", terms}};
}

std::vector<int> parse_list(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

struct HomologyResult {
  HomologyRun run;
  Complex complex;
  long long elapsed_ms = 0;
};

HomologyResult run_homology(const ComplexSpec& spec, int dim, const Budget& b) {
  auto t0 = std::chrono::steady_clock::now();
  HomologyResult r;
  r.complex = spec.build(dim + 1);
  check_size(r.complex, dim, b);
  r.run = homology_run(r.complex, dim, b.options());
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

int cmd_homology(const std::string& text, std::optional<int> dim, const std::string& format, const Budget& b) {
  auto spec = ComplexSpec::parse(text);
  if (!dim) dim = spec.nu();
  if (!dim) throw CLI::ValidationError("--dim", "required for scheme '" + spec.scheme + "'");
  auto r = run_homology(spec, *dim, b);
  if (format == "text") {
    std::cout << spec.to_string() << " H~_" << *dim << " = " << r.run.group.to_string() << "\n";
  } else {
    json faces = json::object();
    auto counts = r.complex.face_counts();
    for (std::size_t i = 0; i < counts.size(); ++i) faces[std::to_string(int(i) - 1)] = counts[i];
    json out = {{"spec", spec.to_string()},
                {"dim", *dim},
                {"betti", r.run.group.betti},
                {"torsion", torsion_json(r.run.group)},
                {"faces", faces},
                {"elapsed_ms", r.elapsed_ms}};
    std::cout << out.dump() << "\n";
  }
  const auto& s = r.run.stats_out;
  std::cerr << "peak_rss_kb=" << peak_rss_kb() << " unit_pivots=" << s.unit_pivots << " divisor_pivots=" << s.divisor_pivots
            << " residual=" << s.residual_rows << "x" << s.residual_cols << "\n";
  return kOk;
}

const char* tier_name(GoldenTier t) {
  switch (t) {
    case GoldenTier::Required: return "required";
    case GoldenTier::Stretch: return "stretch";
    case GoldenTier::Beyond: return "beyond-guard";
    default: return "unknown";
  }
}

int cmd_table(const std::string& name, std::optional<int> max_n, const std::string& max_mn, bool stretch, const Budget& b) {
  const auto& table = golden_table(name);
  int lim_m = 6, lim_n = 7;
  if (!max_mn.empty()) {
    auto x = max_mn.find('x');
    if (x == std::string::npos) throw CLI::ValidationError("--max", "expected MxN");
    lim_m = std::stoi(max_mn.substr(0, x));
    lim_n = std::stoi(max_mn.substr(x + 1));
  }
  int lim = max_n.value_or(name == "diag" ? 5 : 10);
  int rc = kOk;
  for (const auto& e : table.entries) {
    bool in_range = name == "chess" ? (e.m <= lim_m && e.n <= lim_n) : e.n <= lim;
    if (!in_range) continue;
    std::cout << e.spec() << " [" << tier_name(e.tier) << "] ";
    if (e.tier == GoldenTier::Unknown || e.tier == GoldenTier::Beyond || (e.tier == GoldenTier::Stretch && !stretch)) {
      std::cout << "skipped\n";
      continue;
    }
    auto expected = HomologyGroup::parse(e.expected);
    try {
      auto r = run_homology(ComplexSpec::parse(e.spec()), e.dim(), b);
      bool ok = r.run.group == expected;
      std::cout << "dim " << e.dim() << " expected " << expected.to_string() << " got " << r.run.group.to_string() << " "
                << (ok ? "PASS" : "FAIL") << " (" << r.elapsed_ms << " ms)\n";
      if (!ok) rc = kMismatch;
    } catch (const ScaleGuardError& g) {
      std::cout << "ABORT " << g.what() << "\n";
      if (rc == kOk) rc = kGuard;
    }
  }
  return rc;
}

int cmd_cycle(const std::string& kind, const std::string& args, const std::string& rows, const std::string& cols,
              const std::string& sigma, const std::vector<std::string>& checks, const Budget& b) {
  CycleParams p{parse_list(args), parse_list(rows), parse_list(cols), parse_list(sigma)};
  auto nc = named_generators(kind, p);
  json out = {{"kind", kind}, {"provenance", nc.provenance}, {"ambient", nc.ambient->name()}, {"chain", chain_json(nc.chain)}};
  for (const auto& c : checks) {
    if (c == "torsion-order") out["torsion_order"] = torsion_order(nc.chain, *nc.ambient, b.options().snf).get_str();
    else if (c == "cycle") out["is_cycle"] = is_cycle(nc.chain);
    else if (c == "boundary") out["is_boundary"] = is_boundary(nc.chain, *nc.ambient, b.options().snf);
    else throw CLI::ValidationError("--check", "unknown check '" + c + "' (torsion-order, cycle, boundary)");
  }
  std::cout << out.dump() << "\n";
  return kOk;
}

int cmd_basis(int m, int n, bool verify) {
  auto pairs = p_mn_pairs(m, n);
  if (!verify) {
    for (const auto& p : pairs) std::cout << word_to_string(p.word) << "  v=" << v_simplex(p).to_string() << "\n";
    return kOk;
  }
  auto r = verify_basis(m, n);
  std::cout << "pairs=" << r.pairs << " garst=" << r.garst << " unitriangular=" << (r.lower_unitriangular ? "true" : "false")
            << " diagonal=" << (r.u_v_diagonal ? "true" : "false") << " sign_identity=" << (r.eta_sign_identity ? "true" : "false")
            << " literal_sign_matches=" << r.literal_b_sign << " top_betti=" << r.top_betti
            << " torsion_free=" << (r.top_torsion_free ? "true" : "false") << " span=" << (r.eta_spans ? "ok" : "fail") << "\n";
  return r.ok() ? kOk : kMismatch;
}

int cmd_morse(int n, std::optional<int> dim) {
  int nu = nu_matching(n);
  auto r = morse_pairs(n, dim.value_or(nu + 1));
  std::size_t at_nu = nu + 1 < int(r.critical_by_dim.size()) ? r.critical_by_dim[std::size_t(nu + 1)] : 0;
  json out = {{"n", n},
              {"max_dim", r.max_dim},
              {"pairs", r.pairs.size()},
              {"cells_by_dim", r.cells_by_dim},
              {"critical_by_dim", r.critical_by_dim},
              {"critical_at_nu", at_nu},
              {"c_n", n >= 2 ? critical_count_formula(n).get_str() : "0"},
              {"pattern_mismatches", r.pattern_mismatches},
              {"perfect", r.perfect()},
              {"acyclic", r.acyclic}};
  if (r.cycle_witness) out["cycle_witness"] = simplex_to_string(*r.cycle_witness);
  std::cout << out.dump() << "\n";
  return r.acyclic && r.perfect() && r.pattern_mismatches == 0 ? kOk : kMismatch;
}

int cmd_shelling(int n, bool literal, bool restrictions) {
  auto c = matching_complex(n, nu_matching(n));
  auto order = lex_facet_order(n, literal ? FacetOrder::Literal : FacetOrder::EdgeFirst);
  auto r = verify_shelling(c, order);
  json out = {{"n", n},
              {"order", literal ? "literal" : "edge-first"},
              {"facets", order.size()},
              {"shelling", r.ok},
              {"homology_facets", r.homology_facets}};
  if (r.first_violation) out["first_violation"] = simplex_to_string(order[*r.first_violation]);
  if (restrictions) {
    json rs = json::array();
    for (std::size_t i = 0; i < order.size(); ++i)
      rs.push_back({{"facet", simplex_to_string(order[i])}, {"restriction", simplex_to_string(r.restriction[i])}});
    out["restrictions"] = rs;
  }
  std::cout << out.dump() << "\n";
  return r.ok ? kOk : kMismatch;
}

int cmd_bounds(const std::string& family, const std::string& size, bool compute) {
  json out = {{"family", family}, {"size", size}};
  RankBounds rb;
  std::optional<BigInt> actual;
  if (family == "matching") {
    int n = std::stoi(size);
    KnownRanks known;
    for (int k = std::max(0, n - 4); k < n; ++k) known[k] = computed_rank_matching(k);
    rb = rank_bounds_matching(n, known);
    if (compute) actual = computed_rank_matching(n);
  } else if (family == "chess") {
    auto x = size.find('x');
    if (x == std::string::npos) throw CLI::ValidationError("size", "expected MxN");
    int m = std::stoi(size.substr(0, x)), n = std::stoi(size.substr(x + 1));
    KnownChessRanks known;
    for (auto [a, c] : {std::pair{m - 2, n - 1}, {m - 1, n - 2}, {m - 2, n - 2}})
      if (a >= 0 && c >= 0) known[{std::min(a, c), std::max(a, c)}] = computed_rank_chess(a, c);
    rb = rank_bounds_chess(m, n, known);
    if (compute) actual = computed_rank_chess(m, n);
  } else {
    throw CLI::ValidationError("family", "matching or chess");
  }
  out["branch"] = rb.branch;
  out["lower"] = rb.lower ? json(rb.lower->get_str()) : json(nullptr);
  out["upper"] = rb.upper ? json(rb.upper->get_str()) : json(nullptr);
  bool ok = true;
  if (actual) {
    out["rank"] = actual->get_str();
    ok = (!rb.lower || *rb.lower <= *actual) && (!rb.upper || *actual <= *rb.upper);
    out["bracketed"] = ok;
  }
  std::cout << out.dump() << "\n";
  return ok ? kOk : kMismatch;
}

int cmd_export(const std::string& text, int dim, const std::string& path) {
  auto spec = ComplexSpec::parse(text);
  auto c = spec.build(dim);
  auto m = c.boundary_matrix(dim).transposed();
  if (path.empty() || path == "-") {
    write_sms(std::cout, m);
  } else {
    save_sms(path, m);
    std::cerr << "wrote " << m.rows() << "x" << m.cols() << " (" << m.nnz() << " nonzeros) to " << path << "\n";
  }
  return kOk;
}

int cmd_snf(const std::string& path, const Budget& b) {
  auto m = load_sms(path);
  auto r = smith_normal_form(m, b.options().snf);
  json inv = json::array();
  for (const auto& d : r.nontrivial()) inv.push_back(d.get_str());
  std::cout << json{{"rows", m.rows()}, {"cols", m.cols()}, {"rank", r.rank()}, {"invariant_factors", inv}}.dump() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact homology of matching and chessboard complexes"};
  app.require_subcommand(1);
  Budget budget;
  app.add_option("--max-mem", budget.max_mem_gib, "memory budget in GiB")->capture_default_str();
  app.add_option("--max-seconds", budget.max_seconds, "wall-clock budget per computation (0 = none)");
  app.add_option("--threads", budget.threads, "worker threads")->check(CLI::PositiveNumber);

  std::string spec_text, format = "json", table_name, max_mn, kind, args, rows, cols, sigma, family, size, out_path, sms;
  std::optional<int> dim, max_n;
  std::vector<std::string> checks;
  int m = 0, n = 0;
  bool stretch = false, verify = false, literal = false, restrictions = false, compute = true;
  int rc = kOk;

  auto* h = app.add_subcommand("homology", "reduced integral homology of a complex");
  h->add_option("spec", spec_text, "matching:N | chess:MxN | board:PATH | diag:N | gamma:N,K | bboard:N [;skeleton=D]")->required();
  h->add_option("--dim", dim, "degree (default: connectivity degree when defined)");
  h->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* t = app.add_subcommand("table", "replay an embedded golden table");
  t->add_option("name", table_name)->required()->check(CLI::IsMember(golden_names()));
  t->add_option("--max-n", max_n, "largest n for matching/diag");
  t->add_option("--max", max_mn, "largest MxN for chess (default 6x7)");
  t->add_flag("--stretch", stretch, "also run stretch entries");

  auto* cy = app.add_subcommand("cycle", "build a named cycle and run checks");
  cy->add_option("kind", kind)->required()->check(CLI::IsMember(cycle_kinds()));
  cy->add_option("--args", args, "comma separated integers");
  cy->add_option("--rows", rows);
  cy->add_option("--cols", cols);
  cy->add_option("--sigma", sigma);
  cy->add_option("--check", checks, "torsion-order | cycle | boundary")->take_all();

  auto* ba = app.add_subcommand("basis", "top homology basis from tableau pairs");
  ba->add_option("m", m)->required();
  ba->add_option("n", n)->required();
  ba->add_flag("--verify", verify);

  auto* mo = app.add_subcommand("morse", "acyclic matching on M_n");
  mo->add_option("n", n)->required();
  mo->add_option("--dim", dim, "largest cell dimension (default nu_n + 1)");

  auto* sh = app.add_subcommand("shelling", "check the lexicographic facet order of the nu_n-skeleton");
  sh->add_option("n", n)->required();
  sh->add_flag("--literal", literal, "empty two-vertex block before the edge");
  sh->add_flag("--restrictions", restrictions, "print restriction faces");

  auto* bo = app.add_subcommand("bounds", "rank bounds against computed ranks");
  bo->add_option("family", family)->required()->check(CLI::IsMember({"matching", "chess"}));
  bo->add_option("size", size, "N or MxN")->required();
  bo->add_flag("!--no-compute", compute, "skip computing the rank itself");

  auto* ex = app.add_subcommand("export", "write the transposed boundary matrix of degree dim as SMS");
  ex->add_option("spec", spec_text)->required();
  ex->add_option("--dim", dim)->required();
  ex->add_option("-o,--output", out_path, "file (default stdout)");

  auto* sn = app.add_subcommand("snf", "Smith normal form of an SMS matrix");
  sn->add_option("path", sms)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*h) rc = cmd_homology(spec_text, dim, format, budget);
    else if (*t) rc = cmd_table(table_name, max_n, max_mn, stretch, budget);
    else if (*cy) rc = cmd_cycle(kind, args, rows, cols, sigma, checks, budget);
    else if (*ba) rc = cmd_basis(m, n, verify);
    else if (*mo) rc = cmd_morse(n, dim);
    else if (*sh) rc = cmd_shelling(n, literal, restrictions);
    else if (*bo) rc = cmd_bounds(family, size, compute);
    else if (*ex) rc = cmd_export(spec_text, *dim, out_path);
    else if (*sn) rc = cmd_snf(sms, budget);
  } catch (const ScaleGuardError& e) {
    std::cerr << "scale guard: " << e.what() << "\n";
    return kGuard;
  } catch (const std::length_error& e) {
    std::cerr << "scale guard: " << e.what() << "\n";
    return kGuard;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
