#include "cascost/report.hpp"

#include <cmath>
#include <fstream>

#include "cascost/errors.hpp"
#include "cascost/text_util.hpp"

namespace cascost {

std::string format_ms(double value) {
  if (!(value * 10000.0 < 9.0e18)) return format_double(value);  // beyond fixed-point range
  long long scaled = static_cast<long long>(std::floor(value * 10000.0 + 0.5));
  long long whole = scaled / 10000;
  long long frac = scaled % 10000;
  std::string out = std::to_string(whole);
  if (frac != 0) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "%04lld", frac);
    std::string digits(buf);
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    out += "." + digits;
  }
  return out;
}

namespace {

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    quoted += c;
    if (c == '"') quoted += '"';
  }
  quoted += '"';
  return quoted;
}

void write_text_file(const std::string& text, const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + file.string() + "'");
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing '" + file.string() + "'");
}

}  // namespace

std::string render_table(const AnalysisResult& result, const CostModel& model) {
  std::string out;
  out += "Protocol: " + result.protocol_name + "\n";
  out += "Cost model: " + result.model_name + "\n\n";

  const std::size_t name_w = 26, sym_w = 6, count_w = 7, unit_w = 11, sub_w = 15;
  out += pad_right("Category", name_w) + pad_right("Symbol", sym_w) +
         pad_left("Count", count_w) + pad_left("Unit (ms)", unit_w) +
         pad_left("Subtotal (ms)", sub_w) + "\n";
  for (CostCategory c : kAllCategories) {
    double subtotal = static_cast<double>(result.counts[c]) * model.unit_ms(c);
    out += pad_right(category_description(c), name_w) +
           pad_right(model.display_symbols[category_index(c)], sym_w) +
           pad_left(format_u64(result.counts[c]), count_w) +
           pad_left(model.unit_text(c), unit_w) + pad_left(format_ms(subtotal), sub_w) +
           "\n";
  }
  for (const auto& [fn, n] : result.counts.unclassified_calls) {
    out += pad_right("function " + fn, name_w) + pad_right("-", sym_w) +
           pad_left(format_u64(n), count_w) + pad_left("-", unit_w) +
           pad_left("0", sub_w) + "\n";
  }
  out += "\n";
  out += "Total computation (ms): " + format_ms(result.computation_ms) + "\n";
  out += "Communication: " + format_u64(result.communication) + "\n";
  return out;
}

std::string render_table(const ComparisonTable& table) {
  std::size_t name_w = 10;
  for (const auto& row : table.rows) name_w = std::max(name_w, row.protocol_name.size());
  name_w += 2;

  std::string out;
  out += pad_right("Protocol", name_w) + pad_left("Computation (ms)", 18) +
         pad_left("Communication", 16) + "\n";
  for (const auto& row : table.rows) {
    out += pad_right(row.protocol_name, name_w) +
           pad_left(format_ms(row.computation_ms), 18) +
           pad_left(format_u64(row.communication), 16) + "\n";
  }
  return out;
}

namespace {

std::string csv_row(const std::string& name, const OperationCounts& counts,
                    double computation_ms, std::uint64_t communication) {
  std::string out = csv_field(name);
  for (CostCategory c : kAllCategories) out += "," + format_u64(counts[c]);
  out += "," + format_double(computation_ms);
  out += "," + format_u64(communication);
  out += "\r\n";
  return out;
}

const char* kCsvHeader = "protocol,Th,Pm,Pe,Pd,Se,Sd,computation_ms,communication\r\n";

}  // namespace

std::string to_csv(const AnalysisResult& result) {
  return kCsvHeader + csv_row(result.protocol_name, result.counts,
                              result.computation_ms, result.communication);
}

std::string to_csv(const ComparisonSet& set) {
  std::string out = kCsvHeader;
  for (const auto& entry : set.entries)
    out += csv_row(entry.result.protocol_name, entry.result.counts,
                   entry.result.computation_ms, entry.result.communication);
  return out;
}

void export_csv(const AnalysisResult& result, const std::filesystem::path& file) {
  write_text_file(to_csv(result), file);
}

void export_csv(const ComparisonSet& set, const std::filesystem::path& file) {
  write_text_file(to_csv(set), file);
}

ChartSpec chart_from_result(const AnalysisResult& result, ChartMode mode,
                            const CostModel& model) {
  ChartSpec chart;
  chart.kind = ChartKind::PerCategorySingle;
  chart.title = result.protocol_name +
                (mode == ChartMode::Counts ? " - operation counts"
                                           : " - operation costs (ms)");
  ChartSeries series;
  series.label = result.protocol_name;
  for (CostCategory c : kAllCategories) {
    double value = static_cast<double>(result.counts[c]);
    if (mode == ChartMode::Costs) value *= model.unit_ms(c);
    series.points.emplace_back(model.display_symbols[category_index(c)], value);
  }
  chart.series.push_back(std::move(series));
  return chart;
}

ChartSpec chart_from_comparison(const ComparisonSet& set) {
  ChartSpec chart;
  chart.kind = ChartKind::TotalsGrouped;
  chart.title = "Protocol comparison";
  chart.width_px = 960;
  chart.height_px = 420;
  for (const auto& entry : set.entries) {
    ChartSeries series;
    series.label = entry.result.protocol_name;
    series.points.emplace_back("computation_ms", entry.result.computation_ms);
    series.points.emplace_back("communication",
                               static_cast<double>(entry.result.communication));
    chart.series.push_back(std::move(series));
  }
  return chart;
}

}  // namespace cascost
