#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "cascost/errors.hpp"
#include "cascost/report.hpp"
#include "cascost/text_util.hpp"

namespace cascost {

namespace {

constexpr const char* kPalette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759",
                                    "#76b7b2", "#edc948", "#b07aa1", "#9c755f"};
constexpr int kPaletteSize = 8;

std::string xml_escape(const std::string& s) {
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

std::string num(int v) { return std::to_string(v); }

struct SvgWriter {
  std::string out;

  void open(int width, int height) {
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           num(width) + "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) +
           " " + num(height) + "\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) +
           "\" fill=\"#ffffff\"/>\n";
  }

  void close() { out += "</svg>\n"; }

  void line(int x1, int y1, int x2, int y2) {
    out += "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) +
           "\" y2=\"" + num(y2) + "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  }

  void bar(int x, int y, int w, int h, const std::string& fill) {
    out += "<rect class=\"bar\" x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" +
           num(w) + "\" height=\"" + num(h) + "\" fill=\"" + fill + "\"/>\n";
  }

  void swatch(int x, int y, int size, const std::string& fill) {
    out += "<rect class=\"swatch\" x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" +
           num(size) + "\" height=\"" + num(size) + "\" fill=\"" + fill + "\"/>\n";
  }

  void text(int x, int y, const std::string& s, const char* anchor, int size) {
    out += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-family=\"monospace\" " +
           "font-size=\"" + num(size) + "\" text-anchor=\"" + anchor + "\" fill=\"#111111\">" +
           xml_escape(s) + "</text>\n";
  }
};

struct Panel {
  int left, top, width, height;  // plot area, y grows down
};

// One bar per point; bar heights proportional to values, 1 px quantization.
void draw_bars(SvgWriter& svg, const Panel& panel,
               const std::vector<std::pair<std::string, double>>& values,
               const std::vector<std::string>& fills) {
  double max_value = 0.0;
  for (const auto& [label, v] : values) max_value = std::max(max_value, v);

  int n = static_cast<int>(values.size());
  int slot = panel.width / std::max(n, 1);
  int bar_w = std::max(slot * 3 / 5, 2);
  int baseline = panel.top + panel.height;

  svg.line(panel.left, panel.top, panel.left, baseline);
  svg.line(panel.left, baseline, panel.left + panel.width, baseline);
  svg.text(panel.left - 6, baseline + 4, "0", "end", 11);
  if (max_value > 0.0)
    svg.text(panel.left - 6, panel.top + 4, format_ms(max_value), "end", 11);

  for (int i = 0; i < n; ++i) {
    const auto& [label, value] = values[i];
    int h = max_value > 0.0
                ? static_cast<int>(std::lround(value / max_value * panel.height))
                : 0;
    int x = panel.left + i * slot + (slot - bar_w) / 2;
    int y = baseline - h;
    svg.bar(x, y, bar_w, h, fills[static_cast<std::size_t>(i) % fills.size()]);
    svg.text(x + bar_w / 2, y - 5, format_ms(value), "middle", 11);
    svg.text(x + bar_w / 2, baseline + 16, label, "middle", 11);
  }
}

void validate(const ChartSpec& chart) {
  if (chart.series.empty()) throw ChartError("chart has no series");
  if (chart.width_px <= 0 || chart.height_px <= 0)
    throw ChartError("chart dimensions must be positive");
  std::set<std::string> labels;
  for (const auto& series : chart.series) {
    if (!labels.insert(series.label).second)
      throw ChartError("duplicate series label '" + series.label + "'");
    if (series.points.empty())
      throw ChartError("series '" + series.label + "' has no points");
    for (const auto& [key, value] : series.points) {
      (void)key;
      if (!(value >= 0.0) || !std::isfinite(value))
        throw ChartError("series '" + series.label + "' has a negative or non-finite value");
    }
  }
}

std::string render_single(const ChartSpec& chart) {
  if (chart.series.size() != 1)
    throw ChartError("a per-category chart takes exactly one series");
  const ChartSeries& series = chart.series.front();

  SvgWriter svg;
  svg.open(chart.width_px, chart.height_px);
  svg.text(chart.width_px / 2, 24, chart.title, "middle", 14);

  Panel panel{70, 50, std::max(chart.width_px - 90, 1),
              std::max(chart.height_px - 110, 1)};
  std::vector<std::string> fills;
  for (std::size_t i = 0; i < series.points.size(); ++i)
    fills.push_back(kPalette[0]);
  draw_bars(svg, panel, series.points, fills);
  svg.close();
  return svg.out;
}

std::string render_grouped(const ChartSpec& chart) {
  // every series must carry the same metrics in the same order
  const auto& reference = chart.series.front().points;
  for (const auto& series : chart.series) {
    if (series.points.size() != reference.size())
      throw ChartError("series '" + series.label + "' has mismatched metrics");
    for (std::size_t i = 0; i < reference.size(); ++i)
      if (series.points[i].first != reference[i].first)
        throw ChartError("series '" + series.label + "' has mismatched metrics");
  }

  SvgWriter svg;
  svg.open(chart.width_px, chart.height_px);
  svg.text(chart.width_px / 2, 24, chart.title, "middle", 14);

  // metrics have different units, so each gets its own sub-axis
  int legend_w = 200;
  int metrics = static_cast<int>(reference.size());
  int panel_w = std::max(
      (chart.width_px - legend_w - 70 - 20 * metrics) / std::max(metrics, 1), 1);
  for (int m = 0; m < metrics; ++m) {
    Panel panel{70 + m * (panel_w + 20), 50, panel_w, std::max(chart.height_px - 130, 1)};
    std::vector<std::pair<std::string, double>> values;
    std::vector<std::string> fills;
    for (std::size_t s = 0; s < chart.series.size(); ++s) {
      values.emplace_back("", chart.series[s].points[static_cast<std::size_t>(m)].second);
      fills.push_back(kPalette[s % kPaletteSize]);
    }
    draw_bars(svg, panel, values, fills);
    svg.text(panel.left + panel.width / 2, panel.top + panel.height + 36,
             reference[static_cast<std::size_t>(m)].first, "middle", 12);
  }

  int lx = chart.width_px - legend_w + 10;
  int ly = 56;
  for (std::size_t s = 0; s < chart.series.size(); ++s) {
    svg.swatch(lx, ly - 10, 12, kPalette[s % kPaletteSize]);
    svg.text(lx + 18, ly, chart.series[s].label, "start", 12);
    ly += 20;
  }
  svg.close();
  return svg.out;
}

}  // namespace

std::string render_svg(const ChartSpec& chart) {
  validate(chart);
  switch (chart.kind) {
    case ChartKind::PerCategorySingle: return render_single(chart);
    case ChartKind::TotalsGrouped: return render_grouped(chart);
  }
  throw ChartError("unknown chart kind");
}

void render_svg(const ChartSpec& chart, const std::filesystem::path& file) {
  std::string svg = render_svg(chart);
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + file.string() + "'");
  out << svg;
  out.flush();
  if (!out) throw IoError("failed writing '" + file.string() + "'");
}

}  // namespace cascost
