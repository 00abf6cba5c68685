#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "ccgwl/errors.hpp"
#include "ccgwl/experiment.hpp"

namespace ccgwl::experiment {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

void write_csv(const std::filesystem::path& path, const std::vector<CurvePoint>& curve) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << "trial,mean,ci_low,ci_high\n";
  for (const auto& p : curve) {
    out << p.trial << ',' << fmt(p.mean) << ',' << fmt(p.ci_low) << ',' << fmt(p.ci_high)
        << '\n';
  }
}

// Minimal SVG line plots with CI bands; enough to mirror the two result
// figures without a plotting dependency.
struct Series {
  const std::vector<CurvePoint>* curve;
  std::string color;
  std::string label;
  bool right_axis = false;
};

struct Plot {
  std::string title, x_label, y_label, y2_label;
  double y_min = 0.0, y_max = 1.0;
  double y2_min = 0.0, y2_max = 1.0;
  std::vector<Series> series;
};

constexpr double kWidth = 720, kHeight = 440;
constexpr double kLeft = 64, kRight = 64, kTop = 40, kBottom = 52;

double sx(double t, double t_max) {
  return kLeft + (kWidth - kLeft - kRight) * (t_max > 0 ? t / t_max : 0.0);
}

double sy(double v, double lo, double hi) {
  const double f = hi > lo ? (v - lo) / (hi - lo) : 0.5;
  return kHeight - kBottom - (kHeight - kTop - kBottom) * f;
}

void write_svg(const std::filesystem::path& path, const Plot& plot) {
  double t_max = 1.0;
  for (const auto& s : plot.series) {
    for (const auto& p : *s.curve) t_max = std::max(t_max, static_cast<double>(p.trial));
  }

  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\" "
         "font-family=\"sans-serif\">"
      << plot.title << "</text>\n";

  // axes
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kHeight - kBottom << "\" x2=\""
      << kWidth - kRight << "\" y2=\"" << kHeight - kBottom << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
      << kHeight - kBottom << "\" stroke=\"black\"/>\n";
  const bool has_right = std::any_of(plot.series.begin(), plot.series.end(),
                                     [](const Series& s) { return s.right_axis; });
  if (has_right) {
    out << "<line x1=\"" << kWidth - kRight << "\" y1=\"" << kTop << "\" x2=\""
        << kWidth - kRight << "\" y2=\"" << kHeight - kBottom << "\" stroke=\"black\"/>\n";
  }

  // ticks
  for (int i = 0; i <= 5; ++i) {
    const double t = t_max * i / 5.0;
    const double x = sx(t, t_max);
    out << "<line x1=\"" << x << "\" y1=\"" << kHeight - kBottom << "\" x2=\"" << x << "\" y2=\""
        << kHeight - kBottom + 5 << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << x << "\" y=\"" << kHeight - kBottom + 20
        << "\" text-anchor=\"middle\" font-size=\"11\" font-family=\"sans-serif\">"
        << static_cast<int>(t) << "</text>\n";

    const double v = plot.y_min + (plot.y_max - plot.y_min) * i / 5.0;
    const double y = sy(v, plot.y_min, plot.y_max);
    out << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << y << "\" x2=\"" << kLeft << "\" y2=\"" << y
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << kLeft - 8 << "\" y=\"" << y + 4
        << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">" << fmt(v)
        << "</text>\n";
    if (has_right) {
      const double v2 = plot.y2_min + (plot.y2_max - plot.y2_min) * i / 5.0;
      const double y2 = sy(v2, plot.y2_min, plot.y2_max);
      out << "<text x=\"" << kWidth - kRight + 8 << "\" y=\"" << y2 + 4
          << "\" text-anchor=\"start\" font-size=\"11\" font-family=\"sans-serif\">" << fmt(v2)
          << "</text>\n";
    }
  }

  // labels
  out << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 12
      << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\">" << plot.x_label
      << "</text>\n";
  out << "<text x=\"16\" y=\"" << kHeight / 2
      << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\" "
         "transform=\"rotate(-90 16 "
      << kHeight / 2 << ")\">" << plot.y_label << "</text>\n";
  if (has_right && !plot.y2_label.empty()) {
    out << "<text x=\"" << kWidth - 16 << "\" y=\"" << kHeight / 2
        << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\" "
           "transform=\"rotate(90 "
        << kWidth - 16 << " " << kHeight / 2 << ")\">" << plot.y2_label << "</text>\n";
  }

  double legend_y = kTop + 8;
  for (const auto& s : plot.series) {
    const double lo = s.right_axis ? plot.y2_min : plot.y_min;
    const double hi = s.right_axis ? plot.y2_max : plot.y_max;

    // CI band
    std::string band;
    for (const auto& p : *s.curve) {
      band += fmt(sx(p.trial, t_max)) + "," + fmt(sy(p.ci_high, lo, hi)) + " ";
    }
    for (auto it = s.curve->rbegin(); it != s.curve->rend(); ++it) {
      band += fmt(sx(it->trial, t_max)) + "," + fmt(sy(it->ci_low, lo, hi)) + " ";
    }
    out << "<polygon points=\"" << band << "\" fill=\"" << s.color
        << "\" fill-opacity=\"0.15\" stroke=\"none\"/>\n";

    std::string line;
    for (const auto& p : *s.curve) {
      line += fmt(sx(p.trial, t_max)) + "," + fmt(sy(p.mean, lo, hi)) + " ";
    }
    out << "<polyline points=\"" << line << "\" fill=\"none\" stroke=\"" << s.color
        << "\" stroke-width=\"1.6\"/>\n";

    out << "<line x1=\"" << kLeft + 12 << "\" y1=\"" << legend_y << "\" x2=\"" << kLeft + 36
        << "\" y2=\"" << legend_y << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << kLeft + 42 << "\" y=\"" << legend_y + 4
        << "\" font-size=\"12\" font-family=\"sans-serif\">" << s.label << "</text>\n";
    legend_y += 18;
  }
  out << "</svg>\n";
}

}  // namespace

void emit_report(const ExperimentResult& result, const std::filesystem::path& outdir) {
  std::filesystem::create_directories(outdir);
  write_csv(outdir / "accuracy_base.csv", result.base_curve);
  write_csv(outdir / "accuracy_overhyp.csv", result.overhyp_curve);
  write_csv(outdir / "gap.csv", result.gap_curve);
  write_csv(outdir / "belief.csv", result.belief_curve);

  Plot accuracy;
  accuracy.title = "Online accuracy";
  accuracy.x_label = "training trials";
  accuracy.y_label = "accuracy on fixed test set";
  accuracy.series = {Series{&result.overhyp_curve, "#c0392b", "overhypothesis model", false},
                     Series{&result.base_curve, "#2980b9", "base model", false}};
  write_svg(outdir / "accuracy.svg", accuracy);

  double gap_max = 0.05;
  for (const auto& p : result.gap_curve) gap_max = std::max(gap_max, p.ci_high);
  double gap_min = 0.0;
  for (const auto& p : result.gap_curve) gap_min = std::min(gap_min, p.ci_low);
  Plot gap;
  gap.title = "Accuracy gap and overhypothesis belief";
  gap.x_label = "training trials";
  gap.y_label = "accuracy gap (overhyp - base)";
  gap.y2_label = "p(color | NP/NP)";
  gap.y_min = gap_min;
  gap.y_max = gap_max;
  gap.y2_min = 0.0;
  gap.y2_max = 1.0;
  gap.series = {Series{&result.gap_curve, "#c0392b", "accuracy gap", false},
                Series{&result.belief_curve, "#7f8c8d", "belief p(color|NP/NP)", true}};
  write_svg(outdir / "gap_belief.svg", gap);

  std::ofstream summary(outdir / "summary.txt");
  if (!summary) throw IoError("cannot write summary.txt");
  summary << "restarts " << result.base_runs.size() << '\n';
  summary << "peak_gap " << fmt(result.peak_gap) << '\n';
  summary << "peak_gap_trial " << result.peak_gap_trial << '\n';
  summary << "final_gap " << fmt(result.final_gap) << '\n';
  summary << "final_accuracy_base " << fmt(result.final_base_accuracy) << '\n';
  summary << "final_accuracy_overhyp " << fmt(result.final_overhyp_accuracy) << '\n';
  summary << "final_belief " << fmt(result.final_belief) << '\n';
}

}  // namespace ccgwl::experiment
