#include "slr/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>

#include "slr/fileio.hpp"

namespace slr::svg {

namespace {

constexpr double kWidth = 720;
constexpr double kLeft = 80, kRight = 30, kTop = 40, kBottom = 60;
constexpr std::array<const char*, 10> kPalette{"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                               "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Panel {
  double x0, y0, w, h;  // pixel box
  double xmin, xmax, ymin, ymax;

  double px(double x) const { return x0 + (x - xmin) / (xmax - xmin) * w; }
  double py(double y) const { return y0 + h - (y - ymin) / (ymax - ymin) * h; }
};

double nice_max(double v) {
  if (!(v > 0)) return 1.0;
  const double mag = std::pow(10.0, std::floor(std::log10(v)));
  for (double step : {1.0, 2.0, 2.5, 5.0, 10.0}) {
    if (step * mag >= v) return step * mag;
  }
  return 10.0 * mag;
}

std::string header(double height) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(kWidth) +
         "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " + fmt(kWidth) + " " + fmt(height) +
         "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return out;
}

// Axes with five ticks each and axis titles.
void axes(std::string& out, const Panel& p, std::string_view xlabel, std::string_view ylabel,
          bool integer_x) {
  out += "<g class=\"axes\" stroke=\"black\" fill=\"none\">\n";
  out += "<line x1=\"" + fmt(p.x0) + "\" y1=\"" + fmt(p.y0 + p.h) + "\" x2=\"" + fmt(p.x0 + p.w) +
         "\" y2=\"" + fmt(p.y0 + p.h) + "\"/>\n";
  out += "<line x1=\"" + fmt(p.x0) + "\" y1=\"" + fmt(p.y0) + "\" x2=\"" + fmt(p.x0) + "\" y2=\"" +
         fmt(p.y0 + p.h) + "\"/>\n";
  out += "</g>\n<g class=\"ticks\" fill=\"black\">\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = p.xmin + (p.xmax - p.xmin) * i / 4.0;
    const double yv = p.ymin + (p.ymax - p.ymin) * i / 4.0;
    char xl[32], yl[32];
    if (integer_x) {
      std::snprintf(xl, sizeof xl, "%.0f", std::round(xv));
    } else {
      std::snprintf(xl, sizeof xl, "%g", xv);
    }
    std::snprintf(yl, sizeof yl, "%g", yv);
    out += "<text x=\"" + fmt(p.px(xv)) + "\" y=\"" + fmt(p.y0 + p.h + 16) +
           "\" text-anchor=\"middle\">" + xl + "</text>\n";
    out += "<text x=\"" + fmt(p.x0 - 6) + "\" y=\"" + fmt(p.py(yv) + 4) + "\" text-anchor=\"end\">" +
           yl + "</text>\n";
  }
  out += "<text x=\"" + fmt(p.x0 + p.w / 2) + "\" y=\"" + fmt(p.y0 + p.h + 34) +
         "\" text-anchor=\"middle\">" + escape(xlabel) + "</text>\n";
  out += "<text x=\"" + fmt(p.x0 - 56) + "\" y=\"" + fmt(p.y0 + p.h / 2) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 " + fmt(p.x0 - 56) + " " +
         fmt(p.y0 + p.h / 2) + ")\">" + escape(ylabel) + "</text>\n";
  out += "</g>\n";
}

}  // namespace

std::string scatter_svg(const scimap::ScienceMap& m) {
  const double height = 540;
  double xmax = 0, ymax = 0, gmax = 0;
  for (const auto& p : m.profiles) {
    xmax = std::max(xmax, static_cast<double>(p.paper_count));
    ymax = std::max(ymax, static_cast<double>(p.citation_sum));
    gmax = std::max(gmax, std::max(p.growth_pct, 0.0));
  }
  if (!m.profiles.empty()) {
    xmax = std::max(xmax, m.interest.p90);
    ymax = std::max(ymax, m.impact.p90);
  }
  const Panel panel{kLeft, kTop, kWidth - kLeft - kRight, height - kTop - kBottom,
                    0.0, nice_max(xmax * 1.05), 0.0, nice_max(ymax * 1.05)};

  std::string out = header(height);
  out += "<text x=\"" + fmt(kWidth / 2) +
         "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">Research interest vs impact</text>\n";
  axes(out, panel, "Research interest (papers)", "Research impact (citations)", false);
  if (!m.profiles.empty()) {
    out += "<g class=\"boundaries\" stroke=\"#888888\" stroke-dasharray=\"4 3\">\n";
    const std::array<std::pair<const char*, double>, 3> vx{
        {{"median", m.interest.median}, {"q3", m.interest.q3}, {"p90", m.interest.p90}}};
    const std::array<std::pair<const char*, double>, 3> vy{
        {{"median", m.impact.median}, {"q3", m.impact.q3}, {"p90", m.impact.p90}}};
    for (const auto& [name, v] : vx) {
      out += "<line class=\"boundary\" data-axis=\"interest\" data-cut=\"" + std::string(name) +
             "\" x1=\"" + fmt(panel.px(v)) + "\" y1=\"" + fmt(panel.y0) + "\" x2=\"" +
             fmt(panel.px(v)) + "\" y2=\"" + fmt(panel.y0 + panel.h) + "\"/>\n";
    }
    for (const auto& [name, v] : vy) {
      out += "<line class=\"boundary\" data-axis=\"impact\" data-cut=\"" + std::string(name) +
             "\" x1=\"" + fmt(panel.x0) + "\" y1=\"" + fmt(panel.py(v)) + "\" x2=\"" +
             fmt(panel.x0 + panel.w) + "\" y2=\"" + fmt(panel.py(v)) + "\"/>\n";
    }
    out += "</g>\n";
  }
  // Largest bubble is capped at 28 px.
  const double unit = std::min(5.0, 28.0 / std::sqrt(gmax + 1.0));
  out += "<g class=\"topics\">\n";
  for (const auto& p : m.profiles) {
    const double cx = panel.px(static_cast<double>(p.paper_count));
    const double cy = panel.py(static_cast<double>(p.citation_sum));
    const double r = unit * std::sqrt(std::max(p.growth_pct, 0.0) + 1.0);
    const char* color = kPalette[static_cast<std::size_t>(p.topic_id) % kPalette.size()];
    out += "<circle class=\"bubble\" data-topic=\"" + std::to_string(p.topic_id) + "\" cx=\"" +
           fmt(cx) + "\" cy=\"" + fmt(cy) + "\" r=\"" + fmt(r) + "\" fill=\"" + color +
           "\" fill-opacity=\"0.5\" stroke=\"" + color + "\"><title>T" +
           std::to_string(p.topic_id) + " (" + std::string(1, p.grid_cell) + "): " +
           std::to_string(p.paper_count) + " papers, " + std::to_string(p.citation_sum) +
           " citations, growth " + fmt(p.growth_pct) + "%</title></circle>\n";
    out += "<text class=\"label\" x=\"" + fmt(cx) + "\" y=\"" + fmt(cy + 4) +
           "\" text-anchor=\"middle\">" + std::to_string(p.topic_id) + "</text>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

std::string evolution_svg(const scimap::ScienceMap& m, std::span<const int> topic_ids) {
  const double panel_h = 200;
  const double height = kTop + 2 * panel_h + 2 * kBottom;
  std::vector<const scimap::TopicProfile*> chosen;
  for (int id : topic_ids) {
    auto it = std::find_if(m.profiles.begin(), m.profiles.end(),
                           [&](const auto& p) { return p.topic_id == id; });
    if (it != m.profiles.end()) chosen.push_back(&*it);
  }
  int ymin = 0, ymax = 0;
  bool any_year = false;
  double max_papers = 0, max_cites = 0;
  for (const auto* p : chosen) {
    for (const auto& [y, t] : p->yearly) {
      if (!any_year) ymin = ymax = y;
      any_year = true;
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
      max_papers = std::max(max_papers, static_cast<double>(t.papers));
      max_cites = std::max(max_cites, static_cast<double>(t.citations));
    }
  }
  double xlo = any_year ? ymin : 0.0;
  double xhi = any_year ? ymax : 1.0;
  if (xhi == xlo) {
    xlo -= 1;
    xhi += 1;
  }
  const double w = kWidth - kLeft - kRight;
  const Panel top{kLeft, kTop, w, panel_h, xlo, xhi, 0.0, nice_max(max_papers)};
  const Panel bottom{kLeft, kTop + panel_h + kBottom, w, panel_h, xlo, xhi, 0.0, nice_max(max_cites)};

  std::string out = header(height);
  out += "<text x=\"" + fmt(kWidth / 2) +
         "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">Evolution of topics</text>\n";
  axes(out, top, "Year", "Papers", true);
  axes(out, bottom, "Year", "Citations", true);

  auto series = [&](const Panel& panel, const char* kind, bool papers) {
    out += "<g class=\"" + std::string(kind) + "\" fill=\"none\" stroke-width=\"1.5\">\n";
    for (const auto* p : chosen) {
      if (p->yearly.empty()) continue;
      std::string points, values;
      for (int y = ymin; y <= ymax; ++y) {
        const auto it = p->yearly.find(y);
        const std::int64_t v = it == p->yearly.end() ? 0 : papers ? it->second.papers : it->second.citations;
        if (!points.empty()) {
          points += ' ';
          values += ' ';
        }
        points += fmt(panel.px(y)) + "," + fmt(panel.py(static_cast<double>(v)));
        values += std::to_string(y) + ":" + std::to_string(v);
      }
      const char* color = kPalette[static_cast<std::size_t>(p->topic_id) % kPalette.size()];
      out += "<polyline class=\"series\" data-topic=\"" + std::to_string(p->topic_id) +
             "\" data-values=\"" + values + "\" stroke=\"" + color + "\" points=\"" + points +
             "\"><title>T" + std::to_string(p->topic_id) + "</title></polyline>\n";
    }
    out += "</g>\n";
  };
  series(top, "papers", true);
  series(bottom, "citations", false);

  out += "<g class=\"legend\">\n";
  double ly = kTop + 8;
  for (const auto* p : chosen) {
    const char* color = kPalette[static_cast<std::size_t>(p->topic_id) % kPalette.size()];
    out += "<rect x=\"" + fmt(kWidth - kRight - 60) + "\" y=\"" + fmt(ly - 8) +
           "\" width=\"10\" height=\"10\" fill=\"" + color + "\"/>\n";
    out += "<text x=\"" + fmt(kWidth - kRight - 46) + "\" y=\"" + fmt(ly) + "\">T" +
           std::to_string(p->topic_id) + "</text>\n";
    ly += 14;
  }
  out += "</g>\n</svg>\n";
  return out;
}

void emit_scatter_svg(const scimap::ScienceMap& m, const std::filesystem::path& path) {
  write_file(path, scatter_svg(m));
}

void emit_evolution_svg(const scimap::ScienceMap& m, std::span<const int> topic_ids,
                        const std::filesystem::path& path) {
  write_file(path, evolution_svg(m, topic_ids));
}

}  // namespace slr::svg
