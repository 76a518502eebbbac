#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cascost/analyzer.hpp"

namespace cascost {

struct StoredResult {
  AnalysisResult result;
  std::string created_at;     // RFC 3339, UTC, seconds precision
  std::string source_path;    // not persisted; empty after load
  std::string source_digest;
};

struct ComparisonSet {
  std::string name;
  std::vector<StoredResult> entries;  // pairwise distinct protocol names
};

// Adds an entry; an existing entry with the same protocol name is replaced
// in place.
void add_entry(ComparisonSet& set, StoredResult entry);

struct ComparisonRow {
  std::string protocol_name;
  double computation_ms = 0.0;
  std::uint64_t communication = 0;
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;                  // insertion order
  std::vector<std::string> by_computation;          // ascending, name tiebreak
  std::vector<std::string> by_communication;        // ascending, name tiebreak
  std::vector<std::string> warnings;
};

// lowercase, runs of non-alphanumerics collapsed to '-', trimmed.
std::string slugify(const std::string& name);

struct StoreMeta {
  std::string source_path;
  std::string source_digest;
  std::string created_at;  // empty = now (UTC)
};

// Writes <slug>.result.json under store_dir (created if absent) and returns
// the path. Overwrites a previous result for the same protocol; a different
// protocol name mapping to an occupied slug raises SlugCollisionError.
std::filesystem::path save_result(const AnalysisResult& result,
                                  const std::filesystem::path& store_dir,
                                  const StoreMeta& meta = {});

// Loads the named results in the order requested. Missing names are all
// collected into one NotFoundError.
ComparisonSet load_results(const std::filesystem::path& store_dir,
                           const std::vector<std::string>& names);

// Rows in entry order plus both rankings. Entries priced by different cost
// models are flagged with a warning. Throws EmptySetError on no entries.
ComparisonTable compare(const ComparisonSet& set);

// Result-file JSON (the on-disk schema). created_at/source_digest come from
// the StoredResult envelope.
std::string result_to_json(const StoredResult& stored);
StoredResult result_from_json(const std::string& text, const std::string& origin);

}  // namespace cascost
