#pragma once

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hocent/common.hpp"
#include "hocent/graph.hpp"
#include "hocent/link_prediction.hpp"
#include "hocent/measures.hpp"
#include "hocent/solver.hpp"
#include "hocent/synthetic.hpp"

namespace hocent::io {

using Json = nlohmann::ordered_json;

/// 17 significant digits: doubles round-trip losslessly through the output.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string format_optional(const std::optional<double>& v) {
  return v.has_value() ? format_double(*v) : "NA";
}

/// Ordered key=value pairs describing the run; echoed into every output.
using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

inline void write_csv_preamble(std::ostream& out, const ConfigEcho& config) {
  out << "# hocent " << kVersion << '\n';
  for (const auto& [key, value] : config) out << "# " << key << '=' << value << '\n';
}

inline Json config_json(const ConfigEcho& config) {
  Json j = Json::object();
  for (const auto& [key, value] : config) j[key] = value;
  return j;
}

inline Json document_json(const ConfigEcho& config) {
  Json j = Json::object();
  j["tool"] = "hocent";
  j["version"] = kVersion;
  j["config"] = config_json(config);
  return j;
}

// ---- measure vectors -------------------------------------------------------

inline void write_measure_csv(std::ostream& out, const ConfigEcho& config,
                              const Graph& g, const MeasureVector& mv,
                              const SolverReport* report = nullptr) {
  write_csv_preamble(out, config);
  out << "# measure=" << mv.name << '\n';
  out << "# normalization=" << normalization_name(mv.normalization) << '\n';
  if (report != nullptr) {
    out << "# eigenvalue=" << format_double(report->eigenvalue) << '\n';
    out << "# eigenvalue_lower=" << format_double(report->lower_history.back()) << '\n';
    out << "# eigenvalue_upper=" << format_double(report->upper_history.back()) << '\n';
    out << "# iterations=" << report->iterations << '\n';
    out << "# converged=" << (report->converged ? "true" : "false") << '\n';
  }
  const auto& warnings = report != nullptr ? report->hypothesis_warnings : mv.warnings;
  for (const auto& w : warnings) out << "# warning: " << w << '\n';
  out << "node_id,value\n";
  for (NodeId i = 0; i < g.node_count(); ++i)
    out << g.label(i) << ',' << format_double(mv.values[i]) << '\n';
}

inline void write_measure_json(std::ostream& out, const ConfigEcho& config,
                               const Graph& g, const MeasureVector& mv,
                               const SolverReport* report = nullptr) {
  Json j = document_json(config);
  j["measure"] = mv.name;
  j["normalization"] = normalization_name(mv.normalization);
  if (report != nullptr) {
    j["eigenvalue"] = report->eigenvalue;
    j["eigenvalue_bracket"] =
        Json::array({report->lower_history.back(), report->upper_history.back()});
    j["bracket_history_lower"] = report->lower_history;
    j["bracket_history_upper"] = report->upper_history;
    j["iterations"] = report->iterations;
    j["converged"] = report->converged;
  }
  j["warnings"] = report != nullptr ? report->hypothesis_warnings : mv.warnings;
  Json nodes = Json::array();
  Json values = Json::array();
  for (NodeId i = 0; i < g.node_count(); ++i) {
    nodes.push_back(g.label(i));
    values.push_back(mv.values[i]);
  }
  j["node_id"] = std::move(nodes);
  j["value"] = std::move(values);
  out << j.dump(2) << '\n';
}

// ---- dataset summaries ------------------------------------------------------

inline void write_summary_csv(std::ostream& out, const ConfigEcho& config,
                              const DatasetSummary& s) {
  write_csv_preamble(out, config);
  for (const auto& w : s.warnings) out << "# warning: " << w << '\n';
  out << "n,m,triangles,global_cc,avg_cc,avg_spectral_cc,avg_closure,"
         "avg_spectral_closure,avg_spectral_cc_one_scaled,"
         "avg_spectral_closure_one_scaled\n";
  out << s.n << ',' << s.m << ',' << s.triangle_count << ','
      << format_optional(s.global_cc) << ',' << format_double(s.average_cc) << ','
      << format_optional(s.avg_spectral_cc_inf) << ','
      << format_double(s.average_closure) << ','
      << format_optional(s.avg_spectral_closure_inf) << ','
      << format_optional(s.avg_spectral_cc_one_scaled) << ','
      << format_optional(s.avg_spectral_closure_one_scaled) << '\n';
}

inline void write_summary_json(std::ostream& out, const ConfigEcho& config,
                               const DatasetSummary& s) {
  Json j = document_json(config);
  const auto opt = [](const std::optional<double>& v) {
    return v.has_value() ? Json(*v) : Json(nullptr);
  };
  j["n"] = s.n;
  j["m"] = s.m;
  j["triangles"] = s.triangle_count;
  j["global_cc"] = opt(s.global_cc);
  j["avg_cc"] = s.average_cc;
  j["avg_spectral_cc"] = opt(s.avg_spectral_cc_inf);
  j["avg_closure"] = s.average_closure;
  j["avg_spectral_closure"] = opt(s.avg_spectral_closure_inf);
  j["avg_spectral_cc_one_scaled"] = opt(s.avg_spectral_cc_one_scaled);
  j["avg_spectral_closure_one_scaled"] = opt(s.avg_spectral_closure_one_scaled);
  j["warnings"] = s.warnings;
  out << j.dump(2) << '\n';
}

// ---- link prediction --------------------------------------------------------

inline void write_experiment_csv(std::ostream& out, const ConfigEcho& config,
                                 const std::vector<SplitTrial>& trials) {
  write_csv_preamble(out, config);
  out << "trial,method,hits,total,ratio\n";
  for (const SplitTrial& t : trials) {
    out << t.trial << ",second-order," << t.hits_second_order << ',' << t.total << ','
        << format_double(t.ratio) << '\n';
    out << t.trial << ",pagerank," << t.hits_pagerank << ',' << t.total << ','
        << format_double(t.ratio) << '\n';
  }
}

inline void write_experiment_json(std::ostream& out, const ConfigEcho& config,
                                  const std::vector<SplitTrial>& trials) {
  Json j = document_json(config);
  std::vector<double> ratios;
  Json rows = Json::array();
  int disconnected = 0;
  for (const SplitTrial& t : trials) {
    ratios.push_back(t.ratio);
    Json row = Json::object();
    row["trial"] = t.trial;
    row["hits_second_order"] = t.hits_second_order;
    row["hits_pagerank"] = t.hits_pagerank;
    row["total"] = t.total;
    row["ratio"] = std::isnan(t.ratio) ? Json(nullptr) : Json(t.ratio);
    row["retained_graph_connected"] = t.retained_graph_connected;
    rows.push_back(std::move(row));
    if (!t.retained_graph_connected) ++disconnected;
  }
  const RatioSummary rs = summarize_ratios(ratios);
  j["trials"] = std::move(rows);
  Json q = Json::object();
  const auto num = [](double v) { return std::isnan(v) ? Json(nullptr) : Json(v); };
  q["min"] = num(rs.min);
  q["q1"] = num(rs.q1);
  q["median"] = num(rs.median);
  q["q3"] = num(rs.q3);
  q["max"] = num(rs.max);
  q["mean"] = num(rs.mean);
  j["ratio_quartiles"] = std::move(q);
  j["defined_ratios"] = rs.defined;
  j["undefined_ratios"] = rs.undefined;
  j["disconnected_retained_graphs"] = disconnected;
  out << j.dump(2) << '\n';
}

// ---- synthetic sweep --------------------------------------------------------

inline std::string tristate(int v) {
  if (v < 0) return "NA";
  return v ? "1" : "0";
}

inline void write_grid_csv(std::ostream& out, const ConfigEcho& config,
                           const std::vector<PhaseCell>& cells) {
  write_csv_preamble(out, config);
  out << "m,k,alpha,tensor,numeric_x_gt_y,analytic_x_gt_y,lambda,lambda_analytic\n";
  for (const PhaseCell& c : cells) {
    out << c.m << ',' << c.k << ',' << format_double(c.alpha) << ','
        << tensor_code(c.tensor) << ',' << tristate(c.numeric_hub_gt_cycle) << ','
        << tristate(c.analytic_hub_gt_cycle) << ',' << format_double(c.lambda) << ','
        << (std::isnan(c.lambda_analytic) ? "NA" : format_double(c.lambda_analytic))
        << '\n';
  }
}

}  // namespace hocent::io
