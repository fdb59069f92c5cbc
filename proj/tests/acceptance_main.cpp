// Acceptance suite: one line per criterion, PASS / FAIL / SKIP plus timing.
// Exits nonzero if any criterion fails. Reference datasets beyond the bundled
// karate network are looked up in the data directory (HOCENT_DATA_DIR
// overrides the source-tree default); criteria for absent files are reported
// as SKIP with the file name.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hocent/hocent.hpp"
#include "oracles.hpp"

namespace {

using Clock = std::chrono::steady_clock;
using hocent::Graph;
using hocent::MapSpec;
using hocent::NodeId;
using hocent::SolverOptions;
using hocent::SolverReport;
using hocent::TensorVariant;
using hocent::TriangleSet;

std::string data_dir() {
  if (const char* env = std::getenv("HOCENT_DATA_DIR")) return env;
  return std::string(HOCENT_SOURCE_DIR) + "/data";
}

/// One parsed `stats` CLI row per dataset, cached across criteria 1 and 2.
struct StatsRow {
  std::vector<std::string> fields;
  double seconds = 0.0;
};

std::optional<StatsRow> run_stats_cli(const std::string& file) {
  const std::filesystem::path input = std::filesystem::path(data_dir()) / file;
  if (!std::filesystem::exists(input)) return std::nullopt;
  static int counter = 0;
  const std::filesystem::path out =
      std::filesystem::temp_directory_path() /
      ("hocent_acceptance_stats_" + std::to_string(counter++) + ".csv");
  const std::string command = std::string(HOCENT_CLI_PATH) + " stats --input " +
                              input.string() + " > " + out.string() + " 2>/dev/null";
  const auto start = Clock::now();
  const int raw = std::system(command.c_str());
  StatsRow row;
  row.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (raw != 0) return std::nullopt;
  std::ifstream in(out);
  std::string line;
  bool header_seen = false;
  std::string data;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    data = line;
    break;
  }
  std::filesystem::remove(out);
  if (data.empty()) return std::nullopt;
  std::istringstream fields(data);
  std::string field;
  while (std::getline(fields, field, ',')) row.fields.push_back(field);
  return row;
}

std::map<std::string, StatsRow> g_stats_rows;  // file -> parsed CLI row

struct CriterionResult {
  int number = 0;
  std::string status = "PASS";  // PASS | FAIL | SKIP
  std::string detail;
  double seconds = 0.0;
};

std::vector<CriterionResult> g_results;
std::vector<SolverReport> g_reports;  // collected for the bracket criterion

class Checker {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool passed() const { return failures_.empty(); }
  std::string summary(const std::string& on_pass) const {
    if (failures_.empty()) return on_pass;
    std::string s = failures_.front();
    if (failures_.size() > 1)
      s += " (+" + std::to_string(failures_.size() - 1) + " more)";
    return s;
  }

 private:
  std::vector<std::string> failures_;
};

void run_criterion(int number, const std::string& title,
                   const std::function<CriterionResult()>& body) {
  const auto start = Clock::now();
  CriterionResult result;
  try {
    result = body();
  } catch (const std::exception& e) {
    result.status = "FAIL";
    result.detail = std::string("exception: ") + e.what();
  }
  result.number = number;
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (!result.detail.empty()) result.detail = " - " + result.detail;
  std::ostringstream line;
  line << result.status << " criterion " << number << ": " << title << result.detail
       << " [" << std::fixed << std::setprecision(2) << result.seconds << "s]";
  std::cout << line.str() << std::endl;
  g_results.push_back(result);
}

struct ReferenceRow {
  std::string file;
  std::int64_t n, m, triangles;
  double global_cc, avg_cc, avg_closure;
};

// Reference values for the four benchmark datasets (two-decimal columns).
const std::vector<ReferenceRow> kReference = {
    {"karate.mtx", 34, 78, 45, 0.26, 0.57, 0.22},
    {"chesapeake.mtx", 39, 170, 194, 0.28, 0.45, 0.25},
    {"adjnoun.mtx", 112, 425, 284, 0.16, 0.17, 0.09},
    {"celegans.mtx", 277, 1918, 2699, 0.19, 0.28, 0.15},
};

double l1_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

std::optional<Graph> load_if_present(const std::string& file) {
  const std::filesystem::path path = std::filesystem::path(data_dir()) / file;
  if (!std::filesystem::exists(path)) return std::nullopt;
  return hocent::load_graph_file(path.string());
}

// ---- criterion bodies -------------------------------------------------------

CriterionResult table1_structural() {
  CriterionResult res;
  Checker check;
  std::vector<std::string> missing;
  for (const ReferenceRow& ref : kReference) {
    const auto row = run_stats_cli(ref.file);
    if (!row) {
      missing.push_back(ref.file);
      continue;
    }
    g_stats_rows[ref.file] = *row;
    // columns: n,m,triangles,global_cc,avg_cc,...
    check.require(row->fields.size() >= 8, ref.file + ": stats row malformed");
    if (row->fields.size() >= 3) {
      check.require(row->fields[0] == std::to_string(ref.n), ref.file + ": node count");
      check.require(row->fields[1] == std::to_string(ref.m), ref.file + ": edge count");
      check.require(row->fields[2] == std::to_string(ref.triangles),
                    ref.file + ": triangle count");
    }
    check.require(row->seconds < 1.0, ref.file + ": stats took too long");
  }
  if (!check.passed()) {
    res.status = "FAIL";
    res.detail = check.summary("");
    return res;
  }
  if (missing.size() == kReference.size()) {
    res.status = "FAIL";
    res.detail = "no reference dataset available";
    return res;
  }
  std::string detail = std::to_string(kReference.size() - missing.size()) +
                       "/4 datasets exact";
  if (!missing.empty()) {
    res.status = "SKIP";
    detail += "; missing (user-supplied): ";
    for (std::size_t i = 0; i < missing.size(); ++i)
      detail += (i ? ", " : "") + missing[i];
    detail += "; all present datasets PASS";
  }
  res.detail = detail;
  return res;
}

CriterionResult table1_coefficients() {
  CriterionResult res;
  Checker check;
  std::vector<std::string> missing;
  std::string reported;
  for (const ReferenceRow& ref : kReference) {
    auto it = g_stats_rows.find(ref.file);
    if (it == g_stats_rows.end()) {
      const auto row = run_stats_cli(ref.file);
      if (!row) {
        missing.push_back(ref.file);
        continue;
      }
      it = g_stats_rows.emplace(ref.file, *row).first;
    }
    // columns: n,m,triangles,global_cc,avg_cc,avg_spectral_cc,avg_closure,
    //          avg_spectral_closure,...
    const auto& fields = it->second.fields;
    if (fields.size() < 8) {
      check.require(false, ref.file + ": stats row malformed");
      continue;
    }
    const double global_cc = std::strtod(fields[3].c_str(), nullptr);
    const double avg_cc = std::strtod(fields[4].c_str(), nullptr);
    const double avg_closure = std::strtod(fields[6].c_str(), nullptr);
    check.require(fields[3] != "NA" && std::abs(global_cc - ref.global_cc) <= 0.005,
                  ref.file + ": global clustering");
    check.require(std::abs(avg_cc - ref.avg_cc) <= 0.005,
                  ref.file + ": average clustering");
    check.require(std::abs(avg_closure - ref.avg_closure) <= 0.005,
                  ref.file + ": average closure");
    // spectral averages reported, not gated (normalization convention)
    reported += (reported.empty() ? "" : "; ") + ref.file + " x_C=" + fields[5] +
                " x_L=" + fields[7];
  }
  if (!check.passed()) {
    res.status = "FAIL";
    res.detail = check.summary("");
    return res;
  }
  res.detail = "reported " + reported;
  if (!missing.empty()) {
    res.status = "SKIP";
    res.detail += "; missing (user-supplied): " + std::to_string(missing.size()) +
                  " file(s); all present datasets PASS";
  }
  return res;
}

CriterionResult linear_case_equivalence() {
  CriterionResult res;
  Checker check;
  int used_seeds = 0;
  std::uint64_t seed = 1;
  while (used_seeds < 5 && seed < 100) {
    const Graph g = oracle::random_graph(12, 0.4, seed++);
    if (!hocent::components(g).is_connected) continue;
    const TriangleSet ts = hocent::enumerate_triangles(g);
    if (ts.count() == 0) continue;
    ++used_seeds;
    const Eigen::MatrixXd a = oracle::dense_adjacency(g);
    for (const TensorVariant variant :
         {TensorVariant::Binary, TensorVariant::Clustering, TensorVariant::Closure}) {
      const auto lin = hocent::linearized_matrix(g, ts, {variant});
      Eigen::MatrixXd tensor_dense = Eigen::MatrixXd::Zero(g.node_count(), g.node_count());
      for (NodeId i = 0; i < g.node_count(); ++i)
        for (NodeId j = 0; j < g.node_count(); ++j)
          tensor_dense(i, j) = lin.value_at(i, j);
      for (const double alpha : {0.3, 0.7}) {
        MapSpec spec;
        spec.alpha = alpha;
        spec.p = 1.0;
        spec.tensor.variant = variant;
        const SolverReport rep = hocent::solve(g, ts, spec);
        check.require(rep.converged, "solver did not converge");
        const auto dominant =
            oracle::dominant_eigenpair(alpha * a + (1.0 - alpha) * tensor_dense);
        const double cosine = oracle::cosine_similarity(rep.eigenvector, dominant.vector);
        check.require(cosine >= 1.0 - 1e-8, "eigenvector cosine similarity");
        check.require(std::abs(rep.eigenvalue - dominant.value) <=
                          1e-6 * std::abs(dominant.value),
                      "eigenvalue relative error");
        g_reports.push_back(rep);
      }
    }
  }
  check.require(used_seeds == 5, "not enough connected random instances");
  if (!check.passed()) {
    res.status = "FAIL";
    res.detail = check.summary("");
  } else {
    res.detail = "5 seeds x 3 tensors x 2 alphas vs dense eigendecomposition";
  }
  return res;
}

CriterionResult h_eigenvector_identity() {
  CriterionResult res;
  Checker check;
  std::vector<std::pair<std::string, Graph>> graphs;
  {
    std::istringstream diamond("1 2\n1 3\n2 3\n2 4\n3 4\n");
    graphs.emplace_back("diamond", hocent::load_graph(diamond));
  }
  graphs.emplace_back("karate",
                      hocent::load_graph_file(data_dir() + "/karate.mtx"));
  for (const auto& [name, g] : graphs) {
    const TriangleSet ts = hocent::enumerate_triangles(g);
    MapSpec spec;
    spec.alpha = 0.0;
    spec.p = 0.0;
    SolverOptions opts;
    opts.tol = 1e-12;
    const SolverReport rep = hocent::solve(g, ts, spec, opts);
    check.require(rep.converged, name + ": solver did not converge");
    std::vector<double> y(rep.eigenvector.size());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = std::sqrt(rep.eigenvector[i]);
    const oracle::DenseTensor dense(g, TensorVariant::Binary);
    const auto residual = dense.h_residual(y, rep.eigenvalue);
    double norm = 0.0;
    for (const double r : residual) norm += std::abs(r);
    check.require(norm <= 1e-9 * rep.eigenvalue, name + ": H-eigen residual");
    g_reports.push_back(rep);
  }
  if (!check.passed()) {
    res.status = "FAIL";
    res.detail = check.summary("");
  } else {
    res.detail = "diamond and karate, change of variable residual <= 1e-9 * lambda";
  }
  return res;
}

CriterionResult bracket_property() {
  CriterionResult res;
  Checker check;
  check.require(!g_reports.empty(), "no solver reports collected");
  for (const SolverReport& rep : g_reports) {
    for (std::size_t k = 0; k < rep.lower_history.size(); ++k) {
      check.require(rep.lower_history[k] <= rep.upper_history[k], "lower <= upper");
      if (k > 0) {
        check.require(rep.lower_history[k] >= rep.lower_history[k - 1],
                      "lower bound nondecreasing");
        check.require(rep.upper_history[k] <= rep.upper_history[k - 1],
                      "upper bound nonincreasing");
      }
    }
    check.require(rep.eigenvalue >= rep.lower_history.back() &&
                      rep.eigenvalue <= rep.upper_history.back(),
                  "eigenvalue inside final bracket");
  }
  if (!check.passed()) {
    res.status = "FAIL";
    res.detail = check.summary("");
  } else {
    res.detail = std::to_string(g_reports.size()) + " solver runs checked";
  }
  return res;
}

CriterionResult uniqueness() {
  CriterionResult res;
  Checker check;
  const Graph g = hocent::load_graph_file(data_dir() + "/karate.mtx");
  const TriangleSet ts = hocent::enumerate_triangles(g);
  hocent::rng::Engine eng(2024);
  for (const double p : {-1.0, 0.0, 1.0, 2.0}) {
    MapSpec spec;
    spec.alpha = 0.5;
    spec.p = p;
    spec.tensor.variant = TensorVariant::Binary;
    std::vector<std::vector<double>> results;
    for (int run = 0; run < 10; ++run) {
      SolverOptions opts;
      std::vector<double> x0(g.node_count());
      for (double& v : x0) v = 0.01 + hocent::rng::canonical(eng);
      opts.x0 = std::move(x0);
      SolverReport rep = hocent::solve(g, ts, spec, opts);
      check.require(rep.converged, "solver did not converge");
      results.push_back(rep.eigenvector);
      g_reports.push_back(std::move(rep));
    }
    for (std::size_t i = 0; i < results.size(); ++i)
      for (std::size_t j = i + 1; j < results.size(); ++j)
        check.require(l1_distance(results[i], results[j]) <= 1e-6,
                      "p=" + std::to_string(p) + ": starts disagree");
  }
  if (!check.passed()) {
    res.status = "FAIL";
    res.detail = check.summary("");
  } else {
    res.detail = "10 random starts x p in {-1,0,1,2} pairwise within 1e-6";
  }
  return res;
}

CriterionResult synthetic_crossover() {
  CriterionResult res;
  Checker check;
  SolverOptions opts;
  int cells_checked = 0;
  for (int m = 4; m <= 10; ++m) {
    const int boundary = m * (m - 3);
    const int k_hi = boundary + 20;
    // alpha = 1: exact integer condition plus the closed-form eigenvalue
    for (const auto& cell : hocent::sweep_phase_diagram(
             m, m, 0, k_hi, 1.0, {TensorVariant::Binary}, 1.0, opts)) {
      check.require(cell.solver_converged, "alpha=1 solver convergence");
      check.require(std::abs(cell.lambda - (1.0 + std::sqrt(1.0 + m + cell.k))) <= 1e-8,
                    "alpha=1 eigenvalue formula");
      if (cell.k != boundary) {
        check.require(cell.numeric_hub_gt_cycle == (cell.k < boundary ? 1 : 0),
                      "alpha=1 crossover at m=" + std::to_string(m) +
                          " k=" + std::to_string(cell.k));
      }
      ++cells_checked;
    }
    // alpha in {0.2, 0.5}: binary closed form and clustering quadratic
    for (const double alpha : {0.2, 0.5}) {
      for (const TensorVariant variant :
           {TensorVariant::Binary, TensorVariant::Clustering}) {
        for (const auto& cell :
             hocent::sweep_phase_diagram(m, m, 0, k_hi, alpha, {variant}, 1.0, opts)) {
          check.require(cell.solver_converged, "solver convergence");
          if (cell.analytic_hub_gt_cycle >= 0 && cell.numeric_hub_gt_cycle >= 0)
            check.require(cell.numeric_hub_gt_cycle == cell.analytic_hub_gt_cycle,
                          "grid mismatch at alpha=" + std::to_string(alpha) +
                              " tensor=" + hocent::tensor_code(variant) +
                              " m=" + std::to_string(m) + " k=" + std::to_string(cell.k));
          ++cells_checked;
        }
      }
    }
  }
  // sample direct solver runs across the grid so the bracket criterion also
  // covers the synthetic sweeps
  for (const int m : {4, 7, 10}) {
    const int boundary = m * (m - 3);
    for (const int k : {0, boundary, boundary + 20}) {
      for (const double alpha : {1.0, 0.5}) {
        const Graph g = hocent::generate_wheel({m, k});
        const TriangleSet ts = hocent::enumerate_triangles(g);
        MapSpec spec;
        spec.alpha = alpha;
        spec.p = 1.0;
        SolverReport rep = hocent::solve(g, ts, spec, opts);
        check.require(rep.converged, "sampled wheel solve convergence");
        g_reports.push_back(std::move(rep));
      }
    }
  }
  if (!check.passed()) {
    res.status = "FAIL";
    res.detail = check.summary("");
  } else {
    res.detail = std::to_string(cells_checked) + " grid cells";
  }
  return res;
}

CriterionResult linkpred_reduction() {
  CriterionResult res;
  Checker check;
  const Graph g = hocent::load_graph_file(data_dir() + "/karate.mtx");
  const TriangleSet ts = hocent::enumerate_triangles(g);
  MapSpec spec;
  spec.alpha = 1.0;
  spec.matrix = hocent::MatrixKind::RandomWalk;
  spec.tensor.variant = TensorVariant::RandomWalk;
  for (const double c : {0.5, 0.85}) {
    for (const NodeId seed : {0, 5, 11, 20, 33}) {
      const auto linear = hocent::seeded_pagerank(g, c, seed);
      const auto nonlinear = hocent::nonlinear_seeded_diffusion(g, ts, spec, c, seed);
      check.require(nonlinear.converged, "diffusion convergence");
      check.require(l1_distance(linear, nonlinear.vector) <= 1e-10,
                    "seed " + std::to_string(seed) + " c=" + std::to_string(c));
    }
  }
  if (!check.passed()) {
    res.status = "FAIL";
    res.detail = check.summary("");
  } else {
    res.detail = "5 seeds x c in {0.5, 0.85}, l1 distance <= 1e-10";
  }
  return res;
}

CriterionResult linkpred_experiment() {
  CriterionResult res;
  Checker check;
  const Graph karate = hocent::load_graph_file(data_dir() + "/karate.mtx");

  // (a) determinism: identical seeds give byte-identical serialized output
  MapSpec second_order;
  second_order.alpha = 0.5;
  second_order.p = 0.0;
  second_order.matrix = hocent::MatrixKind::RandomWalk;
  second_order.tensor.variant = TensorVariant::RandomWalk;
  const hocent::io::ConfigEcho echo{{"subcommand", "linkpred"}, {"rng_seed", "31"}};
  std::string first_csv, first_json;
  for (int run = 0; run < 2; ++run) {
    const auto trials = hocent::run_split_experiment(karate, second_order, 0.85, 31, 5);
    std::ostringstream csv, json;
    hocent::io::write_experiment_csv(csv, echo, trials);
    hocent::io::write_experiment_json(json, echo, trials);
    if (run == 0) {
      first_csv = csv.str();
      first_json = json.str();
    } else {
      check.require(csv.str() == first_csv, "CSV not byte-identical across reruns");
      check.require(json.str() == first_json, "JSON not byte-identical across reruns");
    }
  }

  // (b) identical methods: every ratio is exactly 1
  MapSpec degenerate = second_order;
  degenerate.alpha = 1.0;
  for (const auto& trial : hocent::run_split_experiment(karate, degenerate, 0.85, 7, 5)) {
    check.require(trial.hits_second_order == trial.hits_pagerank,
                  "alpha=1 hit counts differ");
    if (trial.hits_pagerank > 0)
      check.require(trial.ratio == 1.0, "alpha=1 ratio not exactly 1");
  }

  // (c) soft check on the UK faculty network, reported only
  std::string soft = "uk_faculty.mtx not supplied; soft check skipped";
  if (const auto uk = load_if_present("uk_faculty.mtx")) {
    const auto trials = hocent::run_split_experiment(*uk, second_order, 0.85, 1, 10);
    std::vector<double> ratios;
    for (const auto& t : trials) ratios.push_back(t.ratio);
    const auto q = hocent::summarize_ratios(ratios);
    std::ostringstream report;
    report << "uk_faculty ratio median=" << q.median << " q1=" << q.q1
           << " q3=" << q.q3 << " (reported, not gated)";
    soft = report.str();
  }

  if (!check.passed()) {
    res.status = "FAIL";
    res.detail = check.summary("");
  } else {
    res.detail = "determinism + unit ratios; " + soft;
  }
  return res;
}

CriterionResult invariant_suite() {
  CriterionResult res;
  Checker check;
  hocent::rng::Engine eng(555);
  constexpr TensorVariant kVariants[] = {TensorVariant::Binary, TensorVariant::RandomWalk,
                                         TensorVariant::Clustering, TensorVariant::Closure};
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 6 + static_cast<int>(hocent::rng::uniform_index(eng, 11));
    const double prob = 0.2 + 0.3 * hocent::rng::canonical(eng);
    const Graph g = oracle::random_graph(n, prob, 10000 + trial);
    const TriangleSet ts = hocent::enumerate_triangles(g);
    const auto brute = oracle::brute_force_triangles(g);
    check.require(static_cast<std::int64_t>(brute.size()) == ts.count(),
                  "triangle count vs brute force");

    std::vector<double> x(n), y(n);
    for (int i = 0; i < n; ++i) {
      x[i] = 0.1 + hocent::rng::canonical(eng);
      y[i] = x[i] * (0.2 + 0.8 * hocent::rng::canonical(eng));  // 0 < y <= x
    }
    const double theta = 0.5 + 2.0 * hocent::rng::canonical(eng);
    const double p = -3.0 + 6.0 * hocent::rng::canonical(eng);

    // independent per-node reference counts
    std::vector<std::int64_t> tri_at(n, 0);
    for (const auto& t : brute) {
      ++tri_at[t[0]];
      ++tri_at[t[1]];
      ++tri_at[t[2]];
    }

    for (const TensorVariant variant : kVariants) {
      const auto tx = hocent::tensor_apply(g, ts, {variant}, p, x);
      std::vector<double> scaled = x;
      for (double& v : scaled) v *= theta;
      const auto t_scaled = hocent::tensor_apply(g, ts, {variant}, p, scaled);
      const auto ty = hocent::tensor_apply(g, ts, {variant}, p, y);
      for (int i = 0; i < n; ++i) {
        check.require(std::abs(t_scaled[i] - theta * tx[i]) <=
                          1e-12 * std::max(1.0, std::abs(theta * tx[i])),
                      "homogeneity");
        check.require(ty[i] <= tx[i] * (1 + 1e-12), "monotonicity");
        check.require((tx[i] == 0.0) == (tri_at[i] == 0), "zero iff triangle-free");
      }
    }

    // permutation equivariance under a rotation relabeling
    std::vector<hocent::Label> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = (i + 1) % n;
    std::vector<std::pair<hocent::Label, hocent::Label>> relabeled;
    for (const auto& [u, v] : g.edges()) relabeled.emplace_back(perm[u], perm[v]);
    std::vector<hocent::Label> universe(n);
    for (int i = 0; i < n; ++i) universe[i] = i;
    const Graph h = Graph::build(relabeled, universe);
    const TriangleSet hts = hocent::enumerate_triangles(h);
    std::vector<double> hx(n);
    for (int i = 0; i < n; ++i) hx[perm[i]] = x[i];
    const auto tg = hocent::tensor_apply(g, ts, {TensorVariant::Binary}, p, x);
    const auto th = hocent::tensor_apply(h, hts, {TensorVariant::Binary}, p, hx);
    for (int i = 0; i < n; ++i)
      check.require(std::abs(th[perm[i]] - tg[i]) <= 1e-12 * std::max(1.0, tg[i]),
                    "permutation equivariance");

    // static identities against independently recomputed coefficients
    const auto stat_b = hocent::static_coefficient(g, ts, {TensorVariant::Binary});
    const auto stat_c = hocent::static_coefficient(g, ts, {TensorVariant::Clustering});
    const auto stat_l = hocent::static_coefficient(g, ts, {TensorVariant::Closure});
    for (int i = 0; i < n; ++i) {
      check.require(stat_b.values[i] == 2.0 * static_cast<double>(tri_at[i]),
                    "static binary identity");
      const std::int64_t d = g.degree(i);
      const double want_c =
          d >= 2 ? 2.0 * static_cast<double>(tri_at[i]) / static_cast<double>(d * (d - 1))
                 : 0.0;
      check.require(stat_c.values[i] == want_c, "static clustering identity");
      std::int64_t w = 0;
      for (const NodeId j : g.neighbors(i)) w += g.degree(j) - 1;
      const double want_l =
          w > 0 ? 2.0 * static_cast<double>(tri_at[i]) / static_cast<double>(w) : 0.0;
      check.require(stat_l.values[i] == want_l, "static closure identity");
    }
  }
  if (!check.passed()) {
    res.status = "FAIL";
    res.detail = check.summary("");
  } else {
    res.detail = "50 random graphs x 4 tensors";
  }
  return res;
}

}  // namespace

int main() {
  std::cout << "hocent acceptance suite (data dir: " << data_dir() << ")\n";

  run_criterion(1, "reference dataset structural columns (exact)", table1_structural);
  run_criterion(2, "reference dataset coefficient columns (+/-0.005)",
                table1_coefficients);

  CriterionResult timing_probe;
  run_criterion(3, "linear-case oracle equivalence (p=1)", [&] {
    auto r = linear_case_equivalence();
    return r;
  });
  const double crit3_seconds = g_results.back().seconds;
  if (g_results.back().status == "PASS" && crit3_seconds >= 5.0) {
    g_results.back().status = "FAIL";
    std::cout << "FAIL criterion 3 (runtime): took " << crit3_seconds
              << "s, budget 5s" << std::endl;
  }

  run_criterion(4, "H-eigenvector change-of-variable identity", h_eigenvector_identity);
  run_criterion(6, "uniqueness from random starts", uniqueness);

  run_criterion(7, "synthetic wheel crossover grids", synthetic_crossover);
  const double crit7_seconds = g_results.back().seconds;
  if (g_results.back().status == "PASS" && crit7_seconds >= 60.0) {
    g_results.back().status = "FAIL";
    std::cout << "FAIL criterion 7 (runtime): took " << crit7_seconds
              << "s, budget 60s" << std::endl;
  }

  // evaluated after 3, 4, 6 and 7 so it sees every solver run of the suite
  run_criterion(5, "Collatz-Wielandt bracket property", bracket_property);

  run_criterion(8, "nonlinear diffusion reduces to seeded PageRank at alpha=1",
                linkpred_reduction);
  run_criterion(9, "link-prediction experiment determinism and sanity",
                linkpred_experiment);

  run_criterion(10, "invariant property suite", invariant_suite);
  const double crit10_seconds = g_results.back().seconds;
  if (g_results.back().status == "PASS" && crit10_seconds >= 30.0) {
    g_results.back().status = "FAIL";
    std::cout << "FAIL criterion 10 (runtime): took " << crit10_seconds
              << "s, budget 30s" << std::endl;
  }

  int failed = 0;
  for (const CriterionResult& r : g_results)
    if (r.status == "FAIL") ++failed;
  std::sort(g_results.begin(), g_results.end(),
            [](const CriterionResult& a, const CriterionResult& b) {
              return a.number < b.number;
            });
  std::cout << "----\n";
  for (const CriterionResult& r : g_results)
    std::cout << "criterion " << r.number << ": " << r.status << "\n";
  std::cout << (failed == 0 ? "ALL CRITERIA SATISFIED" : "FAILURES PRESENT")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
