#include <cctype>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cascost/analyzer.hpp"
#include "cascost/errors.hpp"
#include "cascost/parser.hpp"
#include "cascost/pretty_print.hpp"
#include "cascost/report.hpp"
#include "cascost/resolver.hpp"
#include "cascost/result_store.hpp"
#include "cascost/text_util.hpp"

namespace {

using namespace cascost;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSyntax = 2;
constexpr int kExitSemantic = 3;
constexpr int kExitIo = 4;
constexpr int kExitStore = 5;

// stdout carries only the requested artifact; everything else goes here.
void diag(const std::string& message) { std::cerr << message << "\n"; }

std::string location(const std::string& file, SourceSpan span) {
  return file + ":" + std::to_string(span.line) + ":" + std::to_string(span.column);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Maps library errors onto the documented exit codes, prefixing span-carrying
// diagnostics with file:line:column.
int guarded(const std::string& file, const std::function<int()>& body) {
  try {
    return body();
  } catch (const SemanticError& e) {
    diag(location(file, e.span()) + ": error: " + e.what());
    return kExitSemantic;
  } catch (const LexError& e) {
    diag(location(file, e.span()) + ": error: " + e.what());
    return kExitSyntax;
  } catch (const ParseError& e) {
    diag(location(file, e.span()) + ": error: " + e.what());
    return kExitSyntax;
  } catch (const MissingSectionError& e) {
    diag(location(file, e.span()) + ": error: " + e.what());
    return kExitSyntax;
  } catch (const ModelFormatError& e) {
    diag(std::string("error: ") + e.what());
    return kExitIo;
  } catch (const ModelValueError& e) {
    diag(std::string("error: ") + e.what());
    return kExitIo;
  } catch (const StoreError& e) {
    diag(std::string("error: ") + e.what());
    return kExitStore;
  } catch (const IoError& e) {
    diag(std::string("error: ") + e.what());
    return kExitIo;
  } catch (const ChartError& e) {
    diag(std::string("error: ") + e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    diag(std::string("error: ") + e.what());
    return kExitUsage;
  }
}

void print_warnings(const std::string& file, const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) {
    if (!w.empty() && std::isdigit(static_cast<unsigned char>(w.front())))
      diag(file + ":" + w);
    else
      diag(w);
  }
}

struct Analysis {
  AnalysisResult result;
  CostModel model;
  std::string source_digest;
};

Analysis analyze_file(const std::string& file, const std::string& model_path) {
  Analysis out;
  std::string source = read_file(file);
  out.source_digest = fnv1a_hex(source);
  out.model = model_path.empty() ? default_model() : load_model(model_path);
  ResolvedSpec resolved = resolve(parse_source(source), out.model);
  out.result = analyze(resolved, out.model);
  return out;
}

int cmd_check(const std::string& file) {
  return guarded(file, [&] {
    std::string source = read_file(file);
    ResolvedSpec resolved = resolve(parse_source(source), default_model());
    for (const auto& warning : resolved.warnings) diag(file + ":" + warning.to_string());
    return kExitOk;
  });
}

int cmd_analyze(const std::string& file, const std::string& model_path,
                const std::string& store_dir, const std::string& format) {
  return guarded(file, [&] {
    Analysis a = analyze_file(file, model_path);
    print_warnings(file, a.result.warnings);

    if (!store_dir.empty()) {
      StoreMeta meta;
      meta.source_path = file;
      meta.source_digest = a.source_digest;
      save_result(a.result, store_dir, meta);
    }

    if (format == "table") {
      std::cout << render_table(a.result, a.model);
    } else if (format == "csv") {
      std::cout << to_csv(a.result);
    } else {
      StoredResult stored;
      stored.result = a.result;
      stored.created_at = "1970-01-01T00:00:00Z";  // stdout stays reproducible
      stored.source_path = file;
      stored.source_digest = a.source_digest;
      std::cout << result_to_json(stored);
    }
    return kExitOk;
  });
}

int cmd_compare(const std::string& store_dir, const std::vector<std::string>& names,
                const std::string& format, const std::string& chart_path) {
  return guarded("", [&] {
    ComparisonSet set = load_results(store_dir, names);
    ComparisonTable table = compare(set);
    for (const auto& warning : table.warnings) diag("warning: " + warning);

    if (format == "csv")
      std::cout << to_csv(set);
    else
      std::cout << render_table(table);

    if (!chart_path.empty()) render_svg(chart_from_comparison(set), chart_path);
    return kExitOk;
  });
}

int cmd_chart(const std::string& input, const std::string& out_path,
              const std::string& mode, const std::string& model_path,
              const std::string& store_dir) {
  return guarded(input, [&] {
    AnalysisResult result;
    CostModel model = model_path.empty() ? default_model() : load_model(model_path);
    if (std::filesystem::exists(input)) {
      Analysis a = analyze_file(input, model_path);
      print_warnings(input, a.result.warnings);
      result = std::move(a.result);
      model = std::move(a.model);
    } else if (!store_dir.empty()) {
      ComparisonSet set = load_results(store_dir, {input});
      result = set.entries.front().result;
    } else {
      throw IoError("cannot read '" + input + "' (pass --store to chart a stored result)");
    }
    ChartMode chart_mode = mode == "costs" ? ChartMode::Costs : ChartMode::Counts;
    render_svg(chart_from_result(result, chart_mode, model), out_path);
    return kExitOk;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Static cost analyzer for CAS+ protocol specifications"};
  app.require_subcommand(1);

  std::string file, model_path, store_dir, format, chart_path, out_path, mode, input;
  std::vector<std::string> names;

  CLI::App* check = app.add_subcommand("check", "Parse and validate a protocol file");
  check->add_option("file", file, "protocol source (.cas or .cas+)")->required();

  CLI::App* analyze = app.add_subcommand("analyze", "Count operations and price them");
  analyze->add_option("file", file, "protocol source (.cas or .cas+)")->required();
  analyze->add_option("--model", model_path, "cost model JSON file");
  analyze->add_option("--store", store_dir, "persist the result in this directory");
  analyze->add_option("--format", format, "output format")
      ->default_val("table")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  CLI::App* compare = app.add_subcommand("compare", "Compare stored results");
  compare->add_option("--store", store_dir, "result store directory")->required();
  compare->add_option("names", names, "protocol names to compare")->required()->expected(-1);
  compare->add_option("--format", format, "output format")
      ->default_val("table")
      ->check(CLI::IsMember({"table", "csv"}));
  compare->add_option("--chart", chart_path, "write a grouped SVG chart here");

  CLI::App* chart = app.add_subcommand("chart", "Render a per-category bar chart");
  chart->add_option("input", input, "protocol file or stored protocol name")->required();
  chart->add_option("--out", out_path, "output SVG path")->required();
  chart->add_option("--mode", mode, "bar values")
      ->default_val("counts")
      ->check(CLI::IsMember({"counts", "costs"}));
  chart->add_option("--model", model_path, "cost model JSON file");
  chart->add_option("--store", store_dir, "result store directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (check->parsed()) return cmd_check(file);
  if (analyze->parsed()) return cmd_analyze(file, model_path, store_dir, format);
  if (compare->parsed()) return cmd_compare(store_dir, names, format, chart_path);
  if (chart->parsed()) return cmd_chart(input, out_path, mode, model_path, store_dir);
  return kExitUsage;
}
