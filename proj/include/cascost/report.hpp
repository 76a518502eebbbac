#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "cascost/analyzer.hpp"
#include "cascost/result_store.hpp"

namespace cascost {

enum class ChartKind {
  PerCategorySingle,  // one protocol, one bar per cost category
  TotalsGrouped,      // one group per protocol: computation and communication
};

struct ChartSeries {
  std::string label;
  std::vector<std::pair<std::string, double>> points;  // (category or metric, value)
};

struct ChartSpec {
  std::string title;
  ChartKind kind = ChartKind::PerCategorySingle;
  std::vector<ChartSeries> series;
  int width_px = 720;
  int height_px = 420;
};

enum class ChartMode { Counts, Costs };

// Fixed-width table for one analysis: a row per category with count, unit
// cost, and subtotal, rows for unpriced function calls, then the
// "Total computation (ms)" and "Communication" footer rows.
std::string render_table(const AnalysisResult& result, const CostModel& model);

// One row per protocol: name, computation (ms), communication.
std::string render_table(const ComparisonTable& table);

// RFC 4180 CSV with header protocol,Th,Pm,Pe,Pd,Se,Sd,computation_ms,
// communication. Numbers keep full stored precision.
std::string to_csv(const AnalysisResult& result);
std::string to_csv(const ComparisonSet& set);
void export_csv(const AnalysisResult& result, const std::filesystem::path& file);
void export_csv(const ComparisonSet& set, const std::filesystem::path& file);

ChartSpec chart_from_result(const AnalysisResult& result, ChartMode mode,
                            const CostModel& model);
ChartSpec chart_from_comparison(const ComparisonSet& set);

// Standalone SVG 1.1 document. Output is a pure function of the spec: no
// timestamps, no randomness. Throws ChartError on an empty or invalid spec.
std::string render_svg(const ChartSpec& chart);
void render_svg(const ChartSpec& chart, const std::filesystem::path& file);

// Display rounding used by tables and chart labels: half-up to 4 decimals,
// trailing zeros trimmed.
std::string format_ms(double value);

}  // namespace cascost
