#pragma once

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "infill/errors.hpp"

namespace infill {

// Shared color roles across all plots.
inline constexpr const char* kColorWithMm = "#d62728";     // red
inline constexpr const char* kColorWithoutMm = "#1f77b4";  // blue
inline constexpr const char* kColorNeutral = "#9a9a9a";    // grey
inline constexpr const char* kColorSeries = "#2c6fbb";
inline constexpr const char* kColorAccent = "#2ca02c";

// Minimal deterministic SVG assembly: fixed-precision coordinates, no
// timestamps, elements emitted in call order.
class SvgWriter {
 public:
  SvgWriter(double width, double height) : width_(width), height_(height) {}

  static std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
  }

  static std::string num6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
  }

  void line(double x1, double y1, double x2, double y2, const std::string& stroke,
            double stroke_width = 1.0, const std::string& dash = "") {
    body_ += "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" +
             num(y2) + "\" stroke=\"" + stroke + "\" stroke-width=\"" + num(stroke_width) + "\"";
    if (!dash.empty()) body_ += " stroke-dasharray=\"" + dash + "\"";
    body_ += "/>\n";
  }

  void rect(double x, double y, double w, double h, const std::string& fill,
            const std::string& stroke = "none", double opacity = 1.0) {
    body_ += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(w) +
             "\" height=\"" + num(h) + "\" fill=\"" + fill + "\" stroke=\"" + stroke + "\"";
    if (opacity != 1.0) body_ += " fill-opacity=\"" + num(opacity) + "\"";
    body_ += "/>\n";
  }

  // extra is appended verbatim inside the tag (e.g. data-x/data-y attributes).
  void circle(double cx, double cy, double r, const std::string& fill,
              const std::string& extra = "") {
    body_ += "<circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" + num(r) +
             "\" fill=\"" + fill + "\"";
    if (!extra.empty()) body_ += " " + extra;
    body_ += "/>\n";
  }

  void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& stroke,
                double stroke_width = 1.5) {
    if (pts.size() < 2) return;
    body_ += "<polyline fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" +
             num(stroke_width) + "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) body_ += " ";
      body_ += num(pts[i].first) + "," + num(pts[i].second);
    }
    body_ += "\"/>\n";
  }

  void text(double x, double y, const std::string& s, const std::string& anchor = "start",
            double size = 11.0, const std::string& color = "#333333") {
    body_ += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-size=\"" + num(size) +
             "\" font-family=\"sans-serif\" text-anchor=\"" + anchor + "\" fill=\"" + color +
             "\">" + escape(s) + "</text>\n";
  }

  std::string finish() const {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width_) + "\" height=\"" +
           num(height_) + "\" viewBox=\"0 0 " + num(width_) + " " + num(height_) + "\">\n" +
           "<rect x=\"0\" y=\"0\" width=\"" + num(width_) + "\" height=\"" + num(height_) +
           "\" fill=\"#ffffff\"/>\n" + body_ + "</svg>\n";
  }

 private:
  static std::string escape(const std::string& s) {
    std::string out;
    for (const char c : s) {
      if (c == '&') out += "&amp;";
      else if (c == '<') out += "&lt;";
      else if (c == '>') out += "&gt;";
      else out += c;
    }
    return out;
  }

  double width_;
  double height_;
  std::string body_;
};

// Linear axes over a screen rectangle, with a framed plot area and ticks.
class AxesPanel {
 public:
  AxesPanel(SvgWriter& svg, double left, double top, double width, double height, double x_lo,
            double x_hi, double y_lo, double y_hi)
      : svg_(svg), left_(left), top_(top), width_(width), height_(height) {
    if (!(x_hi > x_lo)) x_hi = x_lo + 1.0;
    if (!(y_hi > y_lo)) y_hi = y_lo + 1.0;
    x_lo_ = x_lo;
    x_hi_ = x_hi;
    y_lo_ = y_lo;
    y_hi_ = y_hi;
  }

  double sx(double x) const { return left_ + (x - x_lo_) / (x_hi_ - x_lo_) * width_; }
  double sy(double y) const { return top_ + height_ - (y - y_lo_) / (y_hi_ - y_lo_) * height_; }

  void frame(const std::string& title, const std::string& x_label, const std::string& y_label,
             int ticks = 5) {
    svg_.rect(left_, top_, width_, height_, "none", "#444444");
    for (int t = 0; t < ticks; ++t) {
      const double fx = x_lo_ + (x_hi_ - x_lo_) * t / (ticks - 1);
      const double fy = y_lo_ + (y_hi_ - y_lo_) * t / (ticks - 1);
      const double px = sx(fx);
      const double py = sy(fy);
      svg_.line(px, top_ + height_, px, top_ + height_ + 4, "#444444");
      svg_.text(px, top_ + height_ + 16, tick_label(fx), "middle", 9.0);
      svg_.line(left_ - 4, py, left_, py, "#444444");
      svg_.text(left_ - 6, py + 3, tick_label(fy), "end", 9.0);
    }
    if (!title.empty()) svg_.text(left_ + width_ / 2, top_ - 8, title, "middle", 12.0);
    if (!x_label.empty())
      svg_.text(left_ + width_ / 2, top_ + height_ + 30, x_label, "middle", 10.0);
    if (!y_label.empty())
      svg_.text(left_ - 38, top_ + height_ / 2, y_label, "middle", 10.0);
  }

  // A data point carrying its coordinates verbatim as data attributes.
  void point(double x, double y, double r, const std::string& color) {
    svg_.circle(sx(x), sy(y), r, color,
                "data-x=\"" + SvgWriter::num6(x) + "\" data-y=\"" + SvgWriter::num6(y) + "\"");
  }

  void series_line(const std::vector<double>& xs, const std::vector<double>& ys,
                   const std::string& color, double width = 1.5) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) pts.emplace_back(sx(xs[i]), sy(ys[i]));
    svg_.polyline(pts, color, width);
  }

  void h_line(double y, const std::string& color, const std::string& dash = "4,3") {
    svg_.line(left_, sy(y), left_ + width_, sy(y), color, 1.0, dash);
  }

  void v_line(double x, const std::string& color, const std::string& dash = "4,3") {
    svg_.line(sx(x), top_, sx(x), top_ + height_, color, 1.0, dash);
  }

  double x_lo() const { return x_lo_; }
  double x_hi() const { return x_hi_; }
  double y_lo() const { return y_lo_; }
  double y_hi() const { return y_hi_; }

 private:
  static std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
  }

  SvgWriter& svg_;
  double left_, top_, width_, height_;
  double x_lo_ = 0.0, x_hi_ = 1.0, y_lo_ = 0.0, y_hi_ = 1.0;
};

}  // namespace infill
