#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"
#include "infill/design.hpp"
#include "infill/diagnostics.hpp"
#include "infill/rng.hpp"

using namespace infill;

namespace {

int count_occurrences(const std::string& haystack, const std::string& needle) {
  int count = 0;
  std::size_t pos = 0;
  while ((pos = haystack.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

// Independent quantile: same type-7 rule, separate implementation.
double oracle_quantile(std::vector<double> values, double prob) {
  std::sort(values.begin(), values.end());
  const double idx = prob * (static_cast<double>(values.size()) - 1.0);
  const auto lower = static_cast<std::size_t>(idx);
  if (lower + 1 == values.size()) return values.back();
  const double w = idx - static_cast<double>(lower);
  return (1.0 - w) * values[lower] + w * values[lower + 1];
}

}  // namespace

TEST_CASE("constant feature column gives a degenerate box", "[diagnostics]") {
  Matrix pts(6, 2);
  pts.col(0).setConstant(0.4);
  for (int i = 0; i < 6; ++i) pts(i, 1) = i / 5.0;
  const IpPlotData data = ip_boxplots(SamplingPlan(pts), {});
  CHECK(data.boxes[0].q1 == 0.4);
  CHECK(data.boxes[0].median == 0.4);
  CHECK(data.boxes[0].q3 == 0.4);
  CHECK(data.boxes[0].whisker_low == 0.4);
  CHECK(data.boxes[0].whisker_high == 0.4);
  CHECK(data.boxes[0].outliers.empty());
}

TEST_CASE("boxplot markers render inside the unit axis range", "[diagnostics]") {
  const SamplingPlan plan = generate_lhs(30, 2, 5);
  Vector m(2);
  m << 0.3, 0.8;
  const IpPlotData data = ip_boxplots(plan, {Marker{"with mm", m, MarkerRole::with_mm}});
  const std::string svg = render_ip_boxplots(data);
  CHECK(svg.find("data-x=\"0.300000\"") != std::string::npos);
  CHECK(svg.find("data-x=\"0.800000\"") != std::string::npos);
  CHECK(svg.find(kColorWithMm) != std::string::npos);
}

TEST_CASE("quartiles match a sort-based oracle", "[diagnostics]") {
  Rng rng(77);
  for (int rep = 0; rep < 1000; ++rep) {
    const int n = 5 + rng.uniform_int(60);
    Matrix pts(n, 1);
    for (int i = 0; i < n; ++i) pts(i, 0) = rng.uniform01();
    std::vector<double> col(pts.data(), pts.data() + n);
    const IpPlotData data = ip_boxplots(SamplingPlan(pts), {});
    CHECK(data.boxes[0].q1 == Catch::Approx(oracle_quantile(col, 0.25)).margin(1e-12));
    CHECK(data.boxes[0].median == Catch::Approx(oracle_quantile(col, 0.5)).margin(1e-12));
    CHECK(data.boxes[0].q3 == Catch::Approx(oracle_quantile(col, 0.75)).margin(1e-12));
  }
}

TEST_CASE("whiskers follow the Tukey fences", "[diagnostics]") {
  Matrix pts(11, 1);
  for (int i = 0; i < 10; ++i) pts(i, 0) = 0.4 + 0.02 * i;
  pts(10, 0) = 1.0;  // far outlier
  const IpPlotData data = ip_boxplots(SamplingPlan(pts), {});
  REQUIRE(data.boxes[0].outliers.size() == 1);
  CHECK(data.boxes[0].outliers[0] == 1.0);
  CHECK(data.boxes[0].whisker_high <= 0.58 + 1e-12);
}

TEST_CASE("histogram counts are conserved", "[diagnostics]") {
  const SamplingPlan plan = generate_lhs(87, 3, 6);
  const IpPlotData data = ip_histograms(plan, {}, 20);
  for (const auto& hist : data.hists) {
    int total = 0;
    for (const int c : hist.counts) total += c;
    CHECK(total == 87);
    CHECK(hist.edges.size() == hist.counts.size() + 1);
  }
}

TEST_CASE("uniform data fills bins evenly", "[diagnostics]") {
  Rng rng(13);
  Matrix pts(2000, 1);
  for (int i = 0; i < 2000; ++i) pts(i, 0) = rng.uniform01();
  const IpPlotData data = ip_histograms(SamplingPlan(pts), {}, 20);
  const double expected = 2000.0 / 20.0;
  for (const int c : data.hists[0].counts)
    CHECK(std::abs(c - expected) < 5.0 * std::sqrt(expected));
}

TEST_CASE("binary features are flagged low-cardinality", "[diagnostics]") {
  Matrix pts(40, 2);
  Rng rng(3);
  for (int i = 0; i < 40; ++i) {
    pts(i, 0) = (rng.uniform01() < 0.5) ? 0.0 : 1.0;
    pts(i, 1) = rng.uniform01();
  }
  const IpPlotData data = ip_histograms(SamplingPlan(pts), {});
  CHECK(data.hists[0].low_cardinality);
  CHECK_FALSE(data.hists[1].low_cardinality);
  const std::string svg = render_ip_histograms(data);
  CHECK(svg.find("low cardinality") != std::string::npos);
}

TEST_CASE("updated design scatter counts one element per point", "[diagnostics]") {
  const SamplingPlan plan = generate_lhs(25, 3, 9);
  Vector a(3), b(3);
  a << 0.25, 0.75, 0.5;
  b << 0.1, 0.9, 0.2;
  const std::vector<Marker> markers{Marker{"with mm", a, MarkerRole::with_mm},
                                    Marker{"without mm", b, MarkerRole::without_mm}};
  const std::string svg = updated_design_scatter(plan, 0, 1, markers);
  // 25 design points + 2 markers as data points, plus one legend swatch per marker.
  CHECK(count_occurrences(svg, "data-x=") == 25 + 2);
  CHECK(count_occurrences(svg, "<circle") == 25 + 2 + 2);
  CHECK(svg.find("data-x=\"0.250000\" data-y=\"0.750000\"") != std::string::npos);
  CHECK(svg.find("data-x=\"0.100000\" data-y=\"0.900000\"") != std::string::npos);
}

TEST_CASE("swapping the feature pair transposes coordinates", "[diagnostics]") {
  const SamplingPlan plan = generate_lhs(10, 2, 10);
  Vector m(2);
  m << 0.25, 0.75;
  const std::vector<Marker> markers{Marker{"with mm", m, MarkerRole::with_mm}};
  const std::string original = updated_design_scatter(plan, 0, 1, markers);
  const std::string swapped = updated_design_scatter(plan, 1, 0, markers);
  CHECK(original.find("data-x=\"0.250000\" data-y=\"0.750000\"") != std::string::npos);
  CHECK(swapped.find("data-x=\"0.750000\" data-y=\"0.250000\"") != std::string::npos);
}

TEST_CASE("plot rendering is byte-stable", "[diagnostics]") {
  const SamplingPlan plan = generate_lhs(15, 2, 11);
  Vector m(2);
  m << 0.5, 0.5;
  const std::vector<Marker> markers{Marker{"with mm", m, MarkerRole::with_mm}};
  CHECK(updated_design_scatter(plan, 0, 1, markers) ==
        updated_design_scatter(plan, 0, 1, markers));
  CHECK(render_ip_boxplots(ip_boxplots(plan, markers)) ==
        render_ip_boxplots(ip_boxplots(plan, markers)));
  CHECK(render_ip_histograms(ip_histograms(plan, markers)) ==
        render_ip_histograms(ip_histograms(plan, markers)));
}

TEST_CASE("diagnostics validate their inputs", "[diagnostics]") {
  const SamplingPlan plan = generate_lhs(10, 2, 12);
  Vector wrong(3);
  wrong << 0.1, 0.2, 0.3;
  CHECK_THROWS_AS(ip_boxplots(plan, {Marker{"m", wrong, MarkerRole::with_mm}}),
                  invalid_argument_error);
  CHECK_THROWS_AS(ip_histograms(plan, {}, 0), invalid_argument_error);
  CHECK_THROWS_AS(updated_design_scatter(plan, 0, 0, {}), invalid_argument_error);
  CHECK_THROWS_AS(updated_design_scatter(plan, 0, 5, {}), invalid_argument_error);
}
