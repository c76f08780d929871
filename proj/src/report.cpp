#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "dpplab/error.hpp"
#include "json.hpp"
#include "dpplab/experiments.hpp"

namespace dpplab::experiments {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit_csv(const RateReport& report, std::ostream& out) {
  out << "ensemble,N,s,w1,dtv,trace_norm,bound_shape,ratio\n";
  for (const auto& r : report.rows) {
    out << to_string(report.ensemble) << ',' << r.n << ',' << num(report.s) << ',' << num(r.w1) << ','
        << num(r.dtv) << ',' << num(r.trace_norm) << ',' << num(r.bound_shape) << ',' << num(r.ratio) << '\n';
  }
}

nlohmann::json fit_json(const SlopeFit& f) {
  return {{"slope", f.slope}, {"intercept", f.intercept}, {"r_squared", f.r_squared}};
}

void emit_json(const RateReport& report, std::ostream& out) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    nlohmann::json row = {{"N", r.n},
                          {"w1", r.w1},
                          {"dtv", r.dtv},
                          {"trace_norm", r.trace_norm},
                          {"bound_shape", r.bound_shape},
                          {"ratio", r.ratio}};
    if (r.mc) {
      row["mc"] = {{"tv", r.mc->tv},
                   {"mean", r.mc->mean},
                   {"mean_standard_error", r.mc->mean_standard_error},
                   {"exact_mean", r.mc->exact_mean}};
    }
    rows.push_back(std::move(row));
  }
  const nlohmann::json doc = {{"ensemble", std::string(to_string(report.ensemble))},
                              {"s", report.s},
                              {"rows", rows},
                              {"w1_fit", fit_json(report.w1_fit)},
                              {"trace_norm_fit", fit_json(report.tnorm_fit)},
                              {"violations", report.violations}};
  out << doc.dump(2) << '\n';
}

// Log-log scatter of W1 and trace norm against N with the fitted lines.
void emit_svg(const RateReport& report, std::ostream& out) {
  constexpr double width = 640, height = 480, margin = 60;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
      << to_string(report.ensemble) << ", s = " << report.s << "</text>\n";
  if (report.rows.empty()) {
    out << "</svg>\n";
    return;
  }

  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& r : report.rows) {
    const double lx = std::log10(static_cast<double>(r.n));
    xmin = std::min(xmin, lx);
    xmax = std::max(xmax, lx);
    for (double v : {r.w1, r.trace_norm}) {
      if (v > 0.0) {
        ymin = std::min(ymin, std::log10(v));
        ymax = std::max(ymax, std::log10(v));
      }
    }
  }
  if (xmax == xmin) xmax = xmin + 1.0;
  if (ymax <= ymin) ymax = ymin + 1.0;
  auto px = [&](double lx) { return margin + (lx - xmin) / (xmax - xmin) * (width - 2 * margin); };
  auto py = [&](double ly) { return height - margin - (ly - ymin) / (ymax - ymin) * (height - 2 * margin); };

  out << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin << "\" y2=\""
      << height - margin << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\"" << height - margin
      << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << width / 2 << "\" y=\"" << height - 20
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">log10 N</text>\n";

  struct Series {
    const char* name;
    const char* color;
    double RateRow::*field;
    const SlopeFit* fit;
  };
  const Series series[] = {{"W1", "#1f77b4", &RateRow::w1, &report.w1_fit},
                           {"trace norm", "#d62728", &RateRow::trace_norm, &report.tnorm_fit}};
  int legend = 0;
  for (const auto& s : series) {
    out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-opacity=\"0.4\" points=\"";
    bool first = true;
    for (const auto& r : report.rows) {
      const double v = r.*(s.field);
      if (!(v > 0.0)) continue;
      out << (first ? "" : " ") << px(std::log10(static_cast<double>(r.n))) << ',' << py(std::log10(v));
      first = false;
    }
    out << "\"/>\n";
    for (const auto& r : report.rows) {
      const double v = r.*(s.field);
      if (!(v > 0.0)) continue;
      out << "<circle cx=\"" << px(std::log10(static_cast<double>(r.n))) << "\" cy=\"" << py(std::log10(v))
          << "\" r=\"4\" fill=\"" << s.color << "\"/>\n";
    }
    // log10 y = slope log10 x + intercept / ln 10
    const double b = s.fit->intercept / std::log(10.0);
    out << "<line x1=\"" << px(xmin) << "\" y1=\"" << py(s.fit->slope * xmin + b) << "\" x2=\"" << px(xmax)
        << "\" y2=\"" << py(s.fit->slope * xmax + b) << "\" stroke=\"" << s.color
        << "\" stroke-dasharray=\"6,4\"/>\n";
    char label[96];
    std::snprintf(label, sizeof label, "%s: slope %.3f (r^2 %.4f)", s.name, s.fit->slope, s.fit->r_squared);
    out << "<text x=\"" << width - margin - 230 << "\" y=\"" << margin + 18 * legend
        << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << s.color << "\">" << label << "</text>\n";
    ++legend;
  }
  out << "</svg>\n";
}

}  // namespace

ReportFormat parse_report_format(const std::string& name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  if (name == "svg") return ReportFormat::svg;
  throw DomainError("unknown report format '" + name + "'");
}

void emit_report(const RateReport& report, ReportFormat format, std::ostream& out) {
  switch (format) {
    case ReportFormat::csv: emit_csv(report, out); break;
    case ReportFormat::json: emit_json(report, out); break;
    case ReportFormat::svg: emit_svg(report, out); break;
  }
}

void write_report(const RateReport& report, ReportFormat format, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  emit_report(report, format, out);
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace dpplab::experiments
