#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "infill/design.hpp"
#include "infill/errors.hpp"
#include "infill/svg.hpp"
#include "infill/types.hpp"

namespace infill {

enum class MarkerRole { with_mm, without_mm };

struct Marker {
  std::string label;
  Vector x;  // k-dimensional point
  MarkerRole role = MarkerRole::with_mm;
};

inline const char* marker_color(MarkerRole role) {
  return role == MarkerRole::with_mm ? kColorWithMm : kColorWithoutMm;
}

// Features with fewer distinct values than this are flagged low-cardinality.
inline constexpr int kLowCardinalityThreshold = 10;

// Linear interpolation between order statistics (the common "type 7" rule).
inline double quantile_sorted(const std::vector<double>& sorted, double prob) {
  if (sorted.empty()) throw invalid_argument_error("quantile of empty data");
  const double h = (static_cast<double>(sorted.size()) - 1.0) * prob;
  const std::size_t lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

struct BoxSummary {
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double whisker_low = 0.0;   // Tukey convention: within 1.5 IQR of the box
  double whisker_high = 0.0;
  std::vector<double> outliers;
};

struct HistSummary {
  std::vector<double> edges;  // bins + 1 values
  std::vector<int> counts;
  bool low_cardinality = false;
};

struct IpPlotData {
  std::vector<std::string> feature_names;
  std::vector<BoxSummary> boxes;   // filled by ip_boxplots
  std::vector<HistSummary> hists;  // filled by ip_histograms
  std::vector<Marker> markers;
};

namespace detail {

inline void validate_markers(const SamplingPlan& X, const std::vector<Marker>& markers) {
  for (const auto& m : markers)
    if (m.x.size() != X.k())
      throw invalid_argument_error("marker dimension does not match the plan");
}

inline BoxSummary box_summary(std::vector<double> column) {
  std::sort(column.begin(), column.end());
  BoxSummary box;
  box.q1 = quantile_sorted(column, 0.25);
  box.median = quantile_sorted(column, 0.5);
  box.q3 = quantile_sorted(column, 0.75);
  const double iqr = box.q3 - box.q1;
  const double lo_fence = box.q1 - 1.5 * iqr;
  const double hi_fence = box.q3 + 1.5 * iqr;
  box.whisker_low = box.q3;
  box.whisker_high = box.q1;
  for (const double v : column) {
    if (v < lo_fence || v > hi_fence)
      box.outliers.push_back(v);
    else {
      box.whisker_low = std::min(box.whisker_low, v);
      box.whisker_high = std::max(box.whisker_high, v);
    }
  }
  return box;
}

inline HistSummary hist_summary(const std::vector<double>& column, int bins) {
  HistSummary hist;
  std::set<double> distinct(column.begin(), column.end());
  hist.low_cardinality = static_cast<int>(distinct.size()) < kLowCardinalityThreshold;

  const double lo = *std::min_element(column.begin(), column.end());
  const double hi = *std::max_element(column.begin(), column.end());
  if (lo == hi) {  // degenerate column: a single bin holds everything
    hist.edges = {lo, hi};
    hist.counts = {static_cast<int>(column.size())};
    return hist;
  }
  hist.edges.resize(static_cast<std::size_t>(bins) + 1);
  for (int b = 0; b <= bins; ++b)
    hist.edges[static_cast<std::size_t>(b)] = lo + (hi - lo) * b / bins;
  hist.counts.assign(static_cast<std::size_t>(bins), 0);
  for (const double v : column) {
    int b = static_cast<int>((v - lo) / (hi - lo) * bins);
    b = std::clamp(b, 0, bins - 1);  // rightmost edge is inclusive
    ++hist.counts[static_cast<std::size_t>(b)];
  }
  return hist;
}

inline std::vector<double> column_of(const SamplingPlan& X, int j) {
  std::vector<double> col(static_cast<std::size_t>(X.n()));
  for (int i = 0; i < X.n(); ++i) col[static_cast<std::size_t>(i)] = X.points(i, j);
  return col;
}

}  // namespace detail

// One Tukey boxplot per feature with suggested points overlaid.
inline IpPlotData ip_boxplots(const SamplingPlan& X, const std::vector<Marker>& markers) {
  detail::validate_markers(X, markers);
  IpPlotData data;
  data.feature_names = X.feature_names;
  data.markers = markers;
  for (int j = 0; j < X.k(); ++j) data.boxes.push_back(detail::box_summary(detail::column_of(X, j)));
  return data;
}

// One histogram per feature; low-cardinality features are flagged and drawn
// in the alternate (red) style.
inline IpPlotData ip_histograms(const SamplingPlan& X, const std::vector<Marker>& markers,
                                int bins = 20) {
  if (bins < 1) throw invalid_argument_error("ip_histograms requires bins >= 1");
  detail::validate_markers(X, markers);
  IpPlotData data;
  data.feature_names = X.feature_names;
  data.markers = markers;
  for (int j = 0; j < X.k(); ++j)
    data.hists.push_back(detail::hist_summary(detail::column_of(X, j), bins));
  return data;
}

inline std::string render_ip_boxplots(const IpPlotData& data) {
  const int k = static_cast<int>(data.boxes.size());
  const double slot = 80.0;
  const double width = 90.0 + slot * k;
  SvgWriter svg(width, 420.0);
  AxesPanel panel(svg, 60.0, 40.0, slot * k, 320.0, 0.0, static_cast<double>(k), 0.0, 1.0);
  panel.frame("Infill-point boxplots", "", "value", 5);
  for (int j = 0; j < k; ++j) {
    const BoxSummary& box = data.boxes[static_cast<std::size_t>(j)];
    const double cx = panel.sx(j + 0.5);
    const double half = slot * 0.28;
    svg.line(cx, panel.sy(box.whisker_low), cx, panel.sy(box.q1), "#444444");
    svg.line(cx, panel.sy(box.q3), cx, panel.sy(box.whisker_high), "#444444");
    svg.line(cx - half * 0.6, panel.sy(box.whisker_low), cx + half * 0.6,
             panel.sy(box.whisker_low), "#444444");
    svg.line(cx - half * 0.6, panel.sy(box.whisker_high), cx + half * 0.6,
             panel.sy(box.whisker_high), "#444444");
    svg.rect(cx - half, panel.sy(box.q3), 2 * half, panel.sy(box.q1) - panel.sy(box.q3),
             "#d9e6f2", "#444444");
    svg.line(cx - half, panel.sy(box.median), cx + half, panel.sy(box.median), "#222222", 1.5);
    for (const double v : box.outliers) svg.circle(cx, panel.sy(v), 2.0, "#777777");
    for (const auto& m : data.markers)
      svg.circle(cx, panel.sy(m.x[j]), 4.0, marker_color(m.role),
                 "data-x=\"" + SvgWriter::num6(m.x[j]) + "\"");
    svg.text(cx, 380.0, data.feature_names[static_cast<std::size_t>(j)], "middle", 10.0);
  }
  double legend_y = 18.0;
  for (const auto& m : data.markers) {
    svg.circle(70.0, legend_y - 3.0, 4.0, marker_color(m.role));
    svg.text(80.0, legend_y, m.label, "start", 10.0);
    legend_y += 14.0;
  }
  return svg.finish();
}

inline std::string render_ip_histograms(const IpPlotData& data) {
  const int k = static_cast<int>(data.hists.size());
  const int cols = std::min(3, k);
  const int rows = (k + cols - 1) / cols;
  const double panel_w = 210.0;
  const double panel_h = 170.0;
  SvgWriter svg(60.0 + panel_w * cols, 50.0 + panel_h * rows);
  for (int j = 0; j < k; ++j) {
    const HistSummary& hist = data.hists[static_cast<std::size_t>(j)];
    const int r = j / cols;
    const int c = j % cols;
    const double left = 50.0 + panel_w * c;
    const double top = 40.0 + panel_h * r;
    int max_count = 1;
    for (const int v : hist.counts) max_count = std::max(max_count, v);
    AxesPanel panel(svg, left, top, panel_w - 55.0, panel_h - 60.0, hist.edges.front(),
                    hist.edges.back(), 0.0, static_cast<double>(max_count));
    panel.frame(data.feature_names[static_cast<std::size_t>(j)] +
                    (hist.low_cardinality ? " (low cardinality)" : ""),
                "", "", 3);
    const std::string fill = hist.low_cardinality ? kColorWithMm : "#7fa8d0";
    for (std::size_t b = 0; b < hist.counts.size(); ++b) {
      const double x0 = panel.sx(hist.edges[b]);
      const double x1 = panel.sx(hist.edges[b + 1]);
      const double y1 = panel.sy(static_cast<double>(hist.counts[b]));
      const double y0 = panel.sy(0.0);
      if (hist.counts[b] > 0) svg.rect(x0, y1, std::max(1.0, x1 - x0), y0 - y1, fill, "#ffffff", 0.85);
    }
    for (const auto& m : data.markers)
      if (m.x[j] >= panel.x_lo() && m.x[j] <= panel.x_hi())
        panel.v_line(m.x[j], marker_color(m.role));
  }
  double legend_y = 16.0;
  for (const auto& m : data.markers) {
    svg.line(54.0, legend_y - 4.0, 66.0, legend_y - 4.0, marker_color(m.role), 1.5, "4,3");
    svg.text(70.0, legend_y, m.label, "start", 10.0);
    legend_y += 13.0;
  }
  return svg.finish();
}

// 2-D scatter of the design over one feature pair, existing points in grey,
// suggested points in their role colors. Every point element carries its
// data coordinates to six decimals.
inline std::string updated_design_scatter(const SamplingPlan& X, int i, int j,
                                          const std::vector<Marker>& markers) {
  if (i == j || i < 0 || j < 0 || i >= X.k() || j >= X.k())
    throw invalid_argument_error("updated_design_scatter requires two distinct feature indices");
  detail::validate_markers(X, markers);

  SvgWriter svg(520.0, 480.0);
  AxesPanel panel(svg, 70.0, 50.0, 400.0, 370.0, 0.0, 1.0, 0.0, 1.0);
  panel.frame("Updated design", X.feature_names[static_cast<std::size_t>(i)],
              X.feature_names[static_cast<std::size_t>(j)], 5);
  for (int r = 0; r < X.n(); ++r) panel.point(X.points(r, i), X.points(r, j), 2.5, kColorNeutral);
  for (const auto& m : markers) panel.point(m.x[i], m.x[j], 5.0, marker_color(m.role));
  double legend_y = 22.0;
  for (const auto& m : markers) {
    svg.circle(84.0, legend_y - 3.0, 4.0, marker_color(m.role));
    svg.text(94.0, legend_y, m.label, "start", 10.0);
    legend_y += 13.0;
  }
  return svg.finish();
}

}  // namespace infill
