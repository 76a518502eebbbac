#include <doctest.h>

#include "cascost/errors.hpp"
#include "cascost/parser.hpp"
#include "cascost/report.hpp"
#include "support/helpers.hpp"

using namespace cascost;

namespace {

AnalysisResult lske_result() {
  CostModel model = load_model(helpers::corpus_dir() / "corpus.model.json");
  return analyze(resolve(parse_source(helpers::corpus_source("lske.cas+")), model), model);
}

ComparisonSet paper_set() {
  ComparisonSet set;
  auto push = [&](const char* name, double ms, std::uint64_t comm) {
    StoredResult s;
    s.result.protocol_name = name;
    s.result.computation_ms = ms;
    s.result.communication = comm;
    s.result.model_digest = "m";
    add_entry(set, std::move(s));
  };
  push("Wide Mouthed Frog", 0.0184, 2);
  push("Needham Schroeder", 23.1, 3);
  push("Otway-Rees", 0.046, 4);
  push("SMAK-IOV", 69.3, 9);
  push("CE-SKE", 23.1161, 3);
  push("LSKE", 19.8704, 3);
  return set;
}

}  // namespace

TEST_CASE("display rounding is half-up at four decimals, trimmed") {
  CHECK(format_ms(19.8704) == "19.8704");
  CHECK(format_ms(23.1) == "23.1");
  CHECK(format_ms(0.0) == "0");
  CHECK(format_ms(0.00005) == "0.0001");
  CHECK(format_ms(0.00004) == "0");
  CHECK(format_ms(1.23456) == "1.2346");
  CHECK(format_ms(7.7) == "7.7");
}

TEST_CASE("analysis tables end with the two footer rows") {
  AnalysisResult result = lske_result();
  CostModel model = load_model(helpers::corpus_dir() / "corpus.model.json");
  std::string table = render_table(result, model);
  CHECK(table.find("Total computation (ms): 19.8704\n") != std::string::npos);
  CHECK(table.find("Communication: 3\n") != std::string::npos);
  CHECK(table.find("Hash operation") != std::string::npos);
  CHECK(table.find("3.8500") != std::string::npos);  // unit column keeps the text
}

TEST_CASE("an all-zero result renders zero subtotals and total") {
  AnalysisResult result;
  result.protocol_name = "Empty";
  result.model_name = "default";
  std::string table = render_table(result, default_model());
  CHECK(table.find("Total computation (ms): 0\n") != std::string::npos);
  CHECK(table.find("Communication: 0\n") != std::string::npos);
}

TEST_CASE("comparison tables list one row per protocol in insertion order") {
  ComparisonTable table = compare(paper_set());
  std::string text = render_table(table);
  std::size_t frog = text.find("Wide Mouthed Frog");
  std::size_t smak = text.find("SMAK-IOV");
  std::size_t lske = text.find("LSKE");
  CHECK(frog != std::string::npos);
  CHECK(frog < smak);
  CHECK(smak < lske);
  CHECK(helpers::count_occurrences(text, "\n") == 7);  // header + 6 rows
}

TEST_CASE("csv carries the fixed header and full precision") {
  AnalysisResult result = lske_result();
  std::string csv = to_csv(result);
  CHECK(csv.rfind("protocol,Th,Pm,Pe,Pd,Se,Sd,computation_ms,communication\r\n", 0) == 0);
  CHECK(csv.find("LSKE,8,2,2,2,0,0,19.8704,3\r\n") != std::string::npos);
  CHECK(helpers::count_occurrences(csv, "\r\n") == 2);

  std::string comparison = to_csv(paper_set());
  CHECK(helpers::count_occurrences(comparison, "\r\n") == 7);
}

TEST_CASE("csv quotes fields containing commas per RFC 4180") {
  AnalysisResult result;
  result.protocol_name = "roses, red";
  std::string csv = to_csv(result);
  CHECK(csv.find("\"roses, red\",0,0,0,0,0,0,0,0\r\n") != std::string::npos);

  AnalysisResult quoted;
  quoted.protocol_name = "say \"hi\"";
  CHECK(to_csv(quoted).find("\"say \"\"hi\"\"\"") != std::string::npos);
}

TEST_CASE("per-category charts draw one labeled bar per category") {
  AnalysisResult result = lske_result();
  CostModel model = load_model(helpers::corpus_dir() / "corpus.model.json");

  ChartSpec counts = chart_from_result(result, ChartMode::Counts, model);
  std::string svg = render_svg(counts);
  CHECK(helpers::count_occurrences(svg, "class=\"bar\"") == 6);
  for (const char* label : {">8<", ">2<", ">0<"})
    CHECK(svg.find(label) != std::string::npos);
  for (const char* symbol : {">Th<", ">Pm<", ">Pe<", ">Pd<", ">Se<", ">Sd<"})
    CHECK(svg.find(symbol) != std::string::npos);

  ChartSpec costs = chart_from_result(result, ChartMode::Costs, model);
  std::string cost_svg = render_svg(costs);
  for (const char* value : {">0.0184<", ">4.452<", ">7.7<"})
    CHECK(cost_svg.find(value) != std::string::npos);
}

TEST_CASE("grouped charts draw a bar per protocol per metric plus a legend") {
  ChartSpec chart = chart_from_comparison(paper_set());
  std::string svg = render_svg(chart);
  CHECK(helpers::count_occurrences(svg, "class=\"bar\"") == 12);  // 6 protocols x 2 metrics
  CHECK(helpers::count_occurrences(svg, "class=\"swatch\"") == 6);
  CHECK(svg.find("computation_ms") != std::string::npos);
  CHECK(svg.find("communication") != std::string::npos);
  CHECK(svg.find("Wide Mouthed Frog") != std::string::npos);
}

TEST_CASE("svg output is deterministic and well-formed") {
  AnalysisResult result = lske_result();
  CostModel model = load_model(helpers::corpus_dir() / "corpus.model.json");
  ChartSpec chart = chart_from_result(result, ChartMode::Counts, model);
  std::string first = render_svg(chart);
  std::string second = render_svg(chart);
  CHECK(first == second);
  CHECK(first.rfind("<?xml", 0) == 0);
  CHECK(first.find("</svg>") != std::string::npos);
}

TEST_CASE("empty or invalid charts are refused") {
  ChartSpec empty;
  CHECK_THROWS_AS(render_svg(empty), ChartError);

  ChartSpec negative;
  negative.series.push_back({"s", {{"x", -1.0}}});
  CHECK_THROWS_AS(render_svg(negative), ChartError);

  ChartSpec duplicates;
  duplicates.kind = ChartKind::TotalsGrouped;
  duplicates.series.push_back({"s", {{"x", 1.0}}});
  duplicates.series.push_back({"s", {{"x", 2.0}}});
  CHECK_THROWS_AS(render_svg(duplicates), ChartError);
}

TEST_CASE("zero values still render bars with labels") {
  ChartSpec chart;
  chart.kind = ChartKind::PerCategorySingle;
  chart.title = "zeros";
  chart.series.push_back({"z", {{"a", 0.0}, {"b", 0.0}}});
  std::string svg = render_svg(chart);
  CHECK(helpers::count_occurrences(svg, "class=\"bar\"") == 2);
  CHECK(helpers::count_occurrences(svg, "height=\"0\"") == 2);
}

TEST_CASE("export_csv writes the same bytes to disk") {
  helpers::TempDir dir;
  auto path = dir.path() / "out.csv";
  ComparisonSet set = paper_set();
  export_csv(set, path);
  CHECK(helpers::read_file(path) == to_csv(set));
}
