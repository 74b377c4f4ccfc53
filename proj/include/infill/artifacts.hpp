#pragma once

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "infill/case_study.hpp"
#include "infill/csv.hpp"
#include "infill/diagnostics.hpp"
#include "infill/evaluation.hpp"
#include "infill/moo.hpp"
#include "infill/numfmt.hpp"
#include "infill/spacefill.hpp"
#include "infill/svg.hpp"

namespace infill {

using json = nlohmann::json;

inline json vector_to_json(const Vector& v) {
  json out = json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

inline json suggestion_to_json(const InfillSuggestion& s,
                               const std::vector<std::string>& objective_labels) {
  json out;
  out["desirability"] = s.desirability;
  out["flat_landscape"] = s.flat_landscape;
  out["objective_labels"] = objective_labels;
  out["x_best"] = vector_to_json(s.x_best);
  out["y_best"] = vector_to_json(s.y_best);
  json trace = json::array();
  for (const auto& t : s.trace) {
    json row;
    row["iteration"] = t.iteration;
    row["desirability"] = t.best_desirability;
    row["y"] = vector_to_json(t.y);
    trace.push_back(std::move(row));
  }
  out["trace"] = std::move(trace);
  return out;
}

// Console block mirroring the reference tool output.
inline std::string suggestion_console_text(const InfillSuggestion& s,
                                           const std::vector<std::string>& objective_labels) {
  std::string labels;
  for (std::size_t i = 0; i < objective_labels.size(); ++i)
    labels += (i ? " + " : "") + objective_labels[i];
  std::string out = "Input values of the best point (" + labels + "):\n[";
  for (int i = 0; i < s.x_best.size(); ++i)
    out += (i ? " " : "") + fmt_fixed(s.x_best[i], 8);
  out += "]\nBest desirability (" + labels + "): " + fmt_fixed(s.desirability, 4) + "\n";
  out += "Target values of the best point (" + labels + "): [[";
  for (int i = 0; i < s.y_best.size(); ++i) out += (i ? " " : "") + fmt_fixed(s.y_best[i], 8);
  out += "]]\n";
  return out;
}

namespace detail {

struct ParetoPlotInput {
  std::string title;
  std::string x_label;
  std::string y_label;
  // Rows of (x, y) per series; non-finite rows are dropped before plotting.
  std::vector<std::pair<double, double>> original;
  std::vector<std::pair<double, double>> callback;
  std::vector<std::pair<double, double>> best;
};

inline std::vector<std::pair<double, double>> finite_only(
    std::vector<std::pair<double, double>> pts) {
  pts.erase(std::remove_if(pts.begin(), pts.end(),
                           [](const auto& p) {
                             return !std::isfinite(p.first) || !std::isfinite(p.second);
                           }),
            pts.end());
  return pts;
}

// Front polyline over whichever series carries the data points (original when
// present, callback trace otherwise), maximizing both axes.
inline std::string render_pareto_plot(const ParetoPlotInput& input,
                                      std::vector<std::vector<std::string>>* csv_rows) {
  const auto original = finite_only(input.original);
  const auto callback = finite_only(input.callback);
  const auto best = finite_only(input.best);

  double lo_x = 0.0, hi_x = 1.0, lo_y = 0.0, hi_y = 1.0;
  bool first = true;
  auto widen = [&](const std::vector<std::pair<double, double>>& pts) {
    for (const auto& [x, y] : pts) {
      if (first) {
        lo_x = hi_x = x;
        lo_y = hi_y = y;
        first = false;
      }
      lo_x = std::min(lo_x, x);
      hi_x = std::max(hi_x, x);
      lo_y = std::min(lo_y, y);
      hi_y = std::max(hi_y, y);
    }
  };
  widen(original);
  widen(callback);
  widen(best);
  const double pad_x = (hi_x - lo_x) * 0.05 + 1e-9;
  const double pad_y = (hi_y - lo_y) * 0.05 + 1e-9;

  SvgWriter svg(520.0, 460.0);
  AxesPanel panel(svg, 70.0, 50.0, 400.0, 350.0, lo_x - pad_x, hi_x + pad_x, lo_y - pad_y,
                  hi_y + pad_y);
  panel.frame(input.title, input.x_label, input.y_label);

  const auto& front_source = original.empty() ? callback : original;
  if (!front_source.empty()) {
    Matrix y(front_source.size(), 2);
    for (std::size_t i = 0; i < front_source.size(); ++i) {
      y(static_cast<int>(i), 0) = front_source[i].first;
      y(static_cast<int>(i), 1) = front_source[i].second;
    }
    std::vector<int> front = pareto_front(y, {Orientation::maximize, Orientation::maximize});
    std::sort(front.begin(), front.end(),
              [&](int a, int b) { return y(a, 0) < y(b, 0); });
    std::vector<double> fx, fy;
    for (const int idx : front) {
      fx.push_back(y(idx, 0));
      fy.push_back(y(idx, 1));
    }
    panel.series_line(fx, fy, kColorAccent, 1.2);
    if (csv_rows)
      for (const int idx : front)
        csv_rows->push_back({fmt_shortest(y(idx, 0)), fmt_shortest(y(idx, 1)), "front"});
  }

  for (const auto& [x, y] : original) panel.point(x, y, 3.0, kColorNeutral);
  for (const auto& [x, y] : callback) panel.point(x, y, 2.0, "#c9a227");
  for (const auto& [x, y] : best) panel.point(x, y, 5.5, kColorWithMm);

  if (csv_rows) {
    for (const auto& [x, y] : original)
      csv_rows->push_back({fmt_shortest(x), fmt_shortest(y), "original"});
    for (const auto& [x, y] : callback)
      csv_rows->push_back({fmt_shortest(x), fmt_shortest(y), "callback"});
    for (const auto& [x, y] : best)
      csv_rows->push_back({fmt_shortest(x), fmt_shortest(y), "best"});
  }
  return svg.finish();
}

inline std::string sanitize(std::string s) {
  for (char& c : s)
    if (c == ' ' || c == '/') c = '_';
  return s;
}

}  // namespace detail

struct ArtifactList {
  std::vector<std::string> svg_files;
  std::vector<std::string> csv_files;
  std::vector<std::string> json_files;
  std::vector<std::string> text_files;
};

inline void write_ip_artifacts(const SamplingPlan& X, const std::vector<Marker>& markers,
                               const std::filesystem::path& dir, const std::string& command,
                               ArtifactList& artifacts, int feature_i = 0, int feature_j = 1,
                               int bins = 20) {
  const IpPlotData boxes = ip_boxplots(X, markers);
  const IpPlotData hists = ip_histograms(X, markers, bins);

  std::vector<std::string> box_header{"feature",      "q1",          "median",       "q3",
                                      "whisker_low",  "whisker_high", "outlier_count"};
  for (const auto& m : markers) box_header.push_back(detail::sanitize(m.label));
  std::vector<std::vector<std::string>> box_rows;
  for (int j = 0; j < X.k(); ++j) {
    const BoxSummary& b = boxes.boxes[static_cast<std::size_t>(j)];
    std::vector<std::string> row{X.feature_names[static_cast<std::size_t>(j)],
                                 fmt_shortest(b.q1),
                                 fmt_shortest(b.median),
                                 fmt_shortest(b.q3),
                                 fmt_shortest(b.whisker_low),
                                 fmt_shortest(b.whisker_high),
                                 std::to_string(b.outliers.size())};
    for (const auto& m : markers) row.push_back(fmt_shortest(m.x[j]));
    box_rows.push_back(std::move(row));
  }
  const std::string box_base = command + "_ip_boxplots";
  write_csv_rows((dir / (box_base + ".csv")).string(), box_header, box_rows);
  write_text((dir / (box_base + ".svg")).string(), render_ip_boxplots(boxes));
  artifacts.csv_files.push_back(box_base + ".csv");
  artifacts.svg_files.push_back(box_base + ".svg");

  std::vector<std::vector<std::string>> hist_rows;
  for (int j = 0; j < X.k(); ++j) {
    const HistSummary& h = hists.hists[static_cast<std::size_t>(j)];
    for (std::size_t b = 0; b < h.counts.size(); ++b)
      hist_rows.push_back({X.feature_names[static_cast<std::size_t>(j)],
                           fmt_shortest(h.edges[b]), fmt_shortest(h.edges[b + 1]),
                           std::to_string(h.counts[b]), h.low_cardinality ? "1" : "0"});
  }
  const std::string hist_base = command + "_ip_histograms";
  write_csv_rows((dir / (hist_base + ".csv")).string(),
                 {"feature", "bin_left", "bin_right", "count", "low_cardinality"}, hist_rows);
  write_text((dir / (hist_base + ".svg")).string(), render_ip_histograms(hists));
  artifacts.csv_files.push_back(hist_base + ".csv");
  artifacts.svg_files.push_back(hist_base + ".svg");

  std::vector<std::vector<std::string>> scatter_rows;
  for (int r = 0; r < X.n(); ++r)
    scatter_rows.push_back({fmt_shortest(X.points(r, feature_i)),
                            fmt_shortest(X.points(r, feature_j)), "existing"});
  for (const auto& m : markers)
    scatter_rows.push_back({fmt_shortest(m.x[feature_i]), fmt_shortest(m.x[feature_j]),
                            detail::sanitize(m.label)});
  const std::string scatter_base = command + "_updated_design";
  write_csv_rows((dir / (scatter_base + ".csv")).string(),
                 {X.feature_names[static_cast<std::size_t>(feature_i)],
                  X.feature_names[static_cast<std::size_t>(feature_j)], "series"},
                 scatter_rows);
  write_text((dir / (scatter_base + ".svg")).string(),
             updated_design_scatter(X, feature_i, feature_j, markers));
  artifacts.csv_files.push_back(scatter_base + ".csv");
  artifacts.svg_files.push_back(scatter_base + ".svg");
}

// Persists the full case-study output: two suggestion JSONs, four Pareto
// plots, and the three infill-point diagnostics, each SVG with a sibling CSV.
inline ArtifactList write_case_study_artifacts(const SyntheticDataset& data,
                                               const CaseStudyResult& result,
                                               const std::string& out_dir,
                                               const std::string& command = "suggest",
                                               int feature_i = 0, int feature_j = 1) {
  namespace fs = std::filesystem;
  const fs::path dir(out_dir);
  fs::create_directories(dir);
  ArtifactList artifacts;

  const std::string& name_a = result.objective_names[0];
  const std::string& name_b = result.objective_names[1];

  const std::string json_wo = command + "_suggestion_without_mm.json";
  const std::string json_w = command + "_suggestion_with_mm.json";
  write_text((dir / json_wo).string(),
             suggestion_to_json(result.without_mm, {name_a, name_b}).dump(2) + "\n");
  write_text((dir / json_w).string(),
             suggestion_to_json(result.with_mm, {name_a, name_b, "mm"}).dump(2) + "\n");
  artifacts.json_files.push_back(json_wo);
  artifacts.json_files.push_back(json_w);

  auto write_pareto = [&](const detail::ParetoPlotInput& input, const std::string& base) {
    std::vector<std::vector<std::string>> rows;
    const std::string svg = detail::render_pareto_plot(input, &rows);
    write_text((dir / (base + ".svg")).string(), svg);
    write_csv_rows((dir / (base + ".csv")).string(), {input.x_label, input.y_label, "series"},
                   rows);
    artifacts.svg_files.push_back(base + ".svg");
    artifacts.csv_files.push_back(base + ".csv");
  };

  auto objective_pairs = [&](const InfillSuggestion& s, int a, int b) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& t : s.trace) pts.emplace_back(t.y[a], t.y[b]);
    return pts;
  };

  detail::ParetoPlotInput p1;
  p1.title = "Pareto front (" + name_a + " vs " + name_b + "), without MM";
  p1.x_label = name_a;
  p1.y_label = name_b;
  for (int r = 0; r < data.Z.rows(); ++r)
    p1.original.emplace_back(data.Z(r, 0), data.Z(r, 1));
  p1.callback = objective_pairs(result.without_mm, 0, 1);
  p1.best.emplace_back(result.without_mm.y_best[0], result.without_mm.y_best[1]);
  write_pareto(p1, command + "_pareto_" + name_a + "_" + name_b + "_without_mm");

  detail::ParetoPlotInput p2;
  p2.title = "Pareto front (" + name_a + " vs " + name_b + "), with MM";
  p2.x_label = name_a;
  p2.y_label = name_b;
  p2.original = p1.original;
  p2.callback = objective_pairs(result.with_mm, 0, 1);
  p2.best.emplace_back(result.with_mm.y_best[0], result.with_mm.y_best[1]);
  write_pareto(p2, command + "_pareto_" + name_a + "_" + name_b + "_with_mm");

  // No original data exists for the MM axis; the optimizer trace is the data.
  detail::ParetoPlotInput p3;
  p3.title = "Pareto front (" + name_a + " vs mm)";
  p3.x_label = name_a;
  p3.y_label = "mm";
  p3.callback = objective_pairs(result.with_mm, 0, 2);
  p3.best.emplace_back(result.with_mm.y_best[0], result.with_mm.y_best[2]);
  write_pareto(p3, command + "_pareto_" + name_a + "_mm");

  detail::ParetoPlotInput p4;
  p4.title = "Pareto front (" + name_b + " vs mm)";
  p4.x_label = name_b;
  p4.y_label = "mm";
  p4.callback = objective_pairs(result.with_mm, 1, 2);
  p4.best.emplace_back(result.with_mm.y_best[1], result.with_mm.y_best[2]);
  write_pareto(p4, command + "_pareto_" + name_b + "_mm");

  const std::vector<Marker> markers{
      Marker{"with mm", result.with_mm.x_best, MarkerRole::with_mm},
      Marker{"without mm", result.without_mm.x_best, MarkerRole::without_mm}};
  write_ip_artifacts(data.X, markers, dir, command, artifacts, feature_i, feature_j);
  return artifacts;
}

// Artifacts for a run without the Morris-Mitchell objective: one suggestion
// JSON, its Pareto plot, and the diagnostics with a single marker.
inline ArtifactList write_plain_artifacts(const SyntheticDataset& data,
                                          const InfillSuggestion& suggestion,
                                          const std::vector<std::string>& objective_names,
                                          const std::string& out_dir,
                                          const std::string& command = "suggest",
                                          int feature_i = 0, int feature_j = 1) {
  namespace fs = std::filesystem;
  const fs::path dir(out_dir);
  fs::create_directories(dir);
  ArtifactList artifacts;

  const std::string json_file = command + "_suggestion_without_mm.json";
  write_text((dir / json_file).string(),
             suggestion_to_json(suggestion, objective_names).dump(2) + "\n");
  artifacts.json_files.push_back(json_file);

  detail::ParetoPlotInput plot;
  plot.title = "Pareto front (" + objective_names[0] + " vs " + objective_names[1] +
               "), without MM";
  plot.x_label = objective_names[0];
  plot.y_label = objective_names[1];
  for (int r = 0; r < data.Z.rows(); ++r) plot.original.emplace_back(data.Z(r, 0), data.Z(r, 1));
  for (const auto& t : suggestion.trace) plot.callback.emplace_back(t.y[0], t.y[1]);
  plot.best.emplace_back(suggestion.y_best[0], suggestion.y_best[1]);

  std::vector<std::vector<std::string>> rows;
  const std::string svg = detail::render_pareto_plot(plot, &rows);
  const std::string base =
      command + "_pareto_" + objective_names[0] + "_" + objective_names[1] + "_without_mm";
  write_text((dir / (base + ".svg")).string(), svg);
  write_csv_rows((dir / (base + ".csv")).string(), {plot.x_label, plot.y_label, "series"}, rows);
  artifacts.svg_files.push_back(base + ".svg");
  artifacts.csv_files.push_back(base + ".csv");

  const std::vector<Marker> markers{
      Marker{"without mm", suggestion.x_best, MarkerRole::without_mm}};
  write_ip_artifacts(data.X, markers, dir, command, artifacts, feature_i, feature_j);
  return artifacts;
}

inline ArtifactList write_scaling_artifacts(const std::vector<ScalingRow>& rows,
                                            const std::string& out_dir,
                                            const std::string& command = "scaling") {
  namespace fs = std::filesystem;
  const fs::path dir(out_dir);
  fs::create_directories(dir);
  ArtifactList artifacts;

  Matrix table(rows.size(), 4);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    table(static_cast<int>(i), 0) = rows[i].n;
    table(static_cast<int>(i), 1) = rows[i].phi;
    table(static_cast<int>(i), 2) = rows[i].phi_intensive;
    table(static_cast<int>(i), 3) = static_cast<double>(rows[i].pair_count);
  }
  const std::string base = command + "_mm_vs_n";
  write_csv((dir / (base + ".csv")).string(), {"n", "phi", "phi_intensive", "M"}, table);

  std::vector<double> xs, phi, phi_int;
  for (const auto& row : rows) {
    xs.push_back(row.n);
    phi.push_back(row.phi);
    phi_int.push_back(row.phi_intensive);
  }
  SvgWriter svg(560.0, 640.0);
  {
    AxesPanel top(svg, 70.0, 40.0, 440.0, 230.0, xs.front(), xs.back(), 0.0,
                  *std::max_element(phi.begin(), phi.end()) * 1.05);
    top.frame("Phi vs n", "n", "Phi");
    top.series_line(xs, phi, kColorSeries);
    for (std::size_t i = 0; i < xs.size(); ++i) top.point(xs[i], phi[i], 3.0, kColorSeries);
  }
  {
    AxesPanel bottom(svg, 70.0, 350.0, 440.0, 230.0, xs.front(), xs.back(), 0.0,
                     *std::max_element(phi_int.begin(), phi_int.end()) * 1.05);
    bottom.frame("Phi* vs n", "n", "Phi*");
    bottom.series_line(xs, phi_int, kColorAccent);
    for (std::size_t i = 0; i < xs.size(); ++i) bottom.point(xs[i], phi_int[i], 3.0, kColorAccent);
  }
  write_text((dir / (base + ".svg")).string(), svg.finish());
  artifacts.csv_files.push_back(base + ".csv");
  artifacts.svg_files.push_back(base + ".svg");
  return artifacts;
}

inline ArtifactList write_point_addition_artifacts(const std::vector<AdditionRow>& rows,
                                                   const std::string& out_dir,
                                                   const std::string& command = "point-addition") {
  namespace fs = std::filesystem;
  const fs::path dir(out_dir);
  fs::create_directories(dir);
  ArtifactList artifacts;

  Matrix table(rows.size(), 3);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    table(static_cast<int>(i), 0) = rows[i].step;
    table(static_cast<int>(i), 1) = rows[i].phi_intensive;
    table(static_cast<int>(i), 2) = rows[i].improvement;
  }
  const std::string base = command + "_trace";
  write_csv((dir / (base + ".csv")).string(), {"step", "phi_intensive", "improvement"}, table);

  std::vector<double> xs, ys;
  for (const auto& row : rows) {
    xs.push_back(row.step);
    ys.push_back(row.phi_intensive);
  }
  const double lo = *std::min_element(ys.begin(), ys.end());
  const double hi = *std::max_element(ys.begin(), ys.end());
  SvgWriter svg(560.0, 400.0);
  AxesPanel panel(svg, 70.0, 40.0, 440.0, 300.0, 0.0, xs.back(), lo - 0.05 * (hi - lo + 1e-12),
                  hi + 0.05 * (hi - lo + 1e-12));
  panel.frame("Phi* vs added points", "added points", "Phi*");
  panel.series_line(xs, ys, kColorSeries);
  for (std::size_t i = 0; i < xs.size(); ++i) panel.point(xs[i], ys[i], 3.0, kColorSeries);
  write_text((dir / (base + ".svg")).string(), svg.finish());
  artifacts.csv_files.push_back(base + ".csv");
  artifacts.svg_files.push_back(base + ".svg");
  return artifacts;
}

inline ArtifactList write_noise_sweep_artifacts(const NoiseSweepResult& result,
                                                const std::string& out_dir,
                                                const std::string& command = "noise-sweep") {
  namespace fs = std::filesystem;
  const fs::path dir(out_dir);
  fs::create_directories(dir);
  ArtifactList artifacts;

  Matrix table(result.rows.size(), 3);
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    table(static_cast<int>(i), 0) = result.rows[i].sigma;
    table(static_cast<int>(i), 1) = result.rows[i].mean_improvement;
    table(static_cast<int>(i), 2) = result.rows[i].std_improvement;
  }
  const std::string base = command + "_summary";
  write_csv((dir / (base + ".csv")).string(), {"sigma", "mean_improvement", "std_improvement"},
            table);

  std::vector<double> xs, mean, lo_band, hi_band;
  double lo = result.uniform_mean_improvement;
  double hi = result.uniform_mean_improvement;
  for (const auto& row : result.rows) {
    xs.push_back(row.sigma);
    mean.push_back(row.mean_improvement);
    lo_band.push_back(row.mean_improvement - row.std_improvement);
    hi_band.push_back(row.mean_improvement + row.std_improvement);
    lo = std::min(lo, lo_band.back());
    hi = std::max(hi, hi_band.back());
  }
  SvgWriter svg(560.0, 400.0);
  AxesPanel panel(svg, 70.0, 40.0, 440.0, 300.0, xs.front(), xs.back(),
                  lo - 0.05 * (hi - lo + 1e-12), hi + 0.05 * (hi - lo + 1e-12));
  panel.frame("MM improvement vs noise sigma", "sigma", "improvement");
  panel.series_line(xs, lo_band, "#cccccc", 1.0);
  panel.series_line(xs, hi_band, "#cccccc", 1.0);
  panel.series_line(xs, mean, kColorSeries);
  for (std::size_t i = 0; i < xs.size(); ++i) panel.point(xs[i], mean[i], 3.0, kColorSeries);
  panel.h_line(result.uniform_mean_improvement, kColorWithMm);
  write_text((dir / (base + ".svg")).string(), svg.finish());
  artifacts.csv_files.push_back(base + ".csv");
  artifacts.svg_files.push_back(base + ".svg");
  return artifacts;
}

inline ArtifactList write_design_artifacts(const SamplingPlan& plan, const std::string& out_dir,
                                           const std::string& command = "opt-lhs") {
  namespace fs = std::filesystem;
  const fs::path dir(out_dir);
  fs::create_directories(dir);
  ArtifactList artifacts;

  const std::string base = command + "_design";
  write_csv((dir / (base + ".csv")).string(), plan.feature_names, plan.points);

  SvgWriter svg(520.0, 480.0);
  AxesPanel panel(svg, 70.0, 50.0, 400.0, 370.0, 0.0, 1.0, 0.0, 1.0);
  if (plan.k() >= 2) {
    panel.frame("Design", plan.feature_names[0], plan.feature_names[1]);
    for (int r = 0; r < plan.n(); ++r)
      panel.point(plan.points(r, 0), plan.points(r, 1), 2.5, kColorSeries);
  } else {
    panel.frame("Design", plan.feature_names[0], "");
    for (int r = 0; r < plan.n(); ++r) panel.point(plan.points(r, 0), 0.5, 2.5, kColorSeries);
  }
  write_text((dir / (base + ".svg")).string(), svg.finish());
  artifacts.csv_files.push_back(base + ".csv");
  artifacts.svg_files.push_back(base + ".svg");
  return artifacts;
}

inline ArtifactList write_cv_artifacts(const CvReport& report, const std::string& out_dir,
                                       const std::string& command = "fit-cv") {
  namespace fs = std::filesystem;
  const fs::path dir(out_dir);
  fs::create_directories(dir);
  ArtifactList artifacts;

  const std::string table_file = command + "_table.txt";
  write_text((dir / table_file).string(), report.to_table());
  artifacts.text_files.push_back(table_file);

  const auto rows = report.summary();
  std::vector<std::vector<std::string>> csv_rows;
  for (const auto& row : rows)
    csv_rows.push_back({row.target, row.model, row.metric, fmt_shortest(row.stats.mean),
                        fmt_shortest(row.stats.stddev), fmt_shortest(row.stats.min),
                        fmt_shortest(row.stats.max)});
  const std::string base = command + "_summary";
  write_csv_rows((dir / (base + ".csv")).string(),
                 {"target", "model", "metric", "mean", "std", "min", "max"}, csv_rows);
  artifacts.csv_files.push_back(base + ".csv");

  // Grouped bars: one panel per metric, one bar per (target, model).
  double max_value = 0.0;
  for (const auto& row : rows) max_value = std::max(max_value, row.stats.mean);
  const int groups = static_cast<int>(report.targets.size() * report.models.size());
  SvgWriter svg(640.0, 420.0);
  const char* metrics[2] = {"MSE", "MAE"};
  for (int mtx = 0; mtx < 2; ++mtx) {
    AxesPanel panel(svg, 70.0 + 290.0 * mtx, 50.0, 240.0, 280.0, 0.0, groups, 0.0,
                    max_value * 1.1 + 1e-12);
    panel.frame(metrics[mtx], "", mtx == 0 ? "score" : "");
    int slot = 0;
    for (std::size_t t = 0; t < report.targets.size(); ++t)
      for (std::size_t m = 0; m < report.models.size(); ++m) {
        const auto& folds = (mtx == 0) ? report.mse[m][t] : report.mae[m][t];
        const double value = cv_stats(folds).mean;
        const double x0 = panel.sx(slot + 0.15);
        const double x1 = panel.sx(slot + 0.85);
        svg.rect(x0, panel.sy(value), x1 - x0, panel.sy(0.0) - panel.sy(value),
                 m == 0 ? kColorSeries : kColorAccent, "none", 0.9);
        svg.text((x0 + x1) / 2.0, 355.0, report.targets[t], "middle", 9.0);
        ++slot;
      }
  }
  svg.text(70.0, 20.0, "mean CV score per target (left bar: " + report.models.front() +
                           (report.models.size() > 1 ? ", right bar: " + report.models[1] : "") +
                           ")",
           "start", 10.0);
  const std::string plot = command + "_comparison.svg";
  write_text((dir / plot).string(), svg.finish());
  artifacts.svg_files.push_back(plot);
  return artifacts;
}

// Criterion summary for a single design evaluation.
inline json eval_design_json(const MmResult& full, const MmResult& intensive) {
  json out;
  out["phi"] = full.quality;
  out["phi_intensive"] = intensive.quality;
  out["pair_count"] = intensive.profile.pair_count;
  out["q"] = intensive.profile.q;
  out["p"] = intensive.profile.norm_p;
  out["distinct_distances"] = intensive.profile.d.size();
  json d = json::array();
  json j_mult = json::array();
  for (const double v : intensive.profile.d) d.push_back(v);
  for (const auto v : intensive.profile.J) j_mult.push_back(v);
  out["d"] = std::move(d);
  out["J"] = std::move(j_mult);
  return out;
}

}  // namespace infill
