#include "cascost/result_store.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cascost/errors.hpp"
#include "cascost/text_util.hpp"

namespace cascost {

using ordered_json = nlohmann::ordered_json;

std::string slugify(const std::string& name) {
  std::string out;
  bool pending_dash = false;
  for (unsigned char c : name) {
    if (std::isalnum(c)) {
      if (pending_dash && !out.empty()) out += '-';
      pending_dash = false;
      out += static_cast<char>(std::tolower(c));
    } else {
      pending_dash = true;
    }
  }
  return out;
}

void add_entry(ComparisonSet& set, StoredResult entry) {
  for (auto& existing : set.entries) {
    if (existing.result.protocol_name == entry.result.protocol_name) {
      existing = std::move(entry);
      return;
    }
  }
  set.entries.push_back(std::move(entry));
}

namespace {

ordered_json counts_to_json(const OperationCounts& counts) {
  ordered_json obj = ordered_json::object();
  for (CostCategory c : kAllCategories) obj[category_symbol(c)] = counts[c];
  return obj;
}

ordered_json calls_to_json(const std::map<std::string, std::uint64_t>& calls) {
  ordered_json obj = ordered_json::object();
  for (const auto& [name, n] : calls) obj[name] = n;
  return obj;
}

OperationCounts counts_from_json(const ordered_json& obj, const std::string& origin) {
  if (!obj.is_object()) throw ResultFormatError(origin + ": counts must be an object");
  OperationCounts counts;
  for (const auto& [key, value] : obj.items()) {
    auto category = category_from_symbol(key);
    if (!category) throw ResultFormatError(origin + ": unknown count category '" + key + "'");
    if (!value.is_number_unsigned() && !value.is_number_integer())
      throw ResultFormatError(origin + ": count '" + key + "' must be an integer");
    long long n = value.get<long long>();
    if (n < 0) throw ResultFormatError(origin + ": count '" + key + "' is negative");
    counts[*category] = static_cast<std::uint64_t>(n);
  }
  return counts;
}

std::map<std::string, std::uint64_t> calls_from_json(const ordered_json& obj,
                                                     const std::string& origin) {
  if (!obj.is_object())
    throw ResultFormatError(origin + ": unclassified_calls must be an object");
  std::map<std::string, std::uint64_t> calls;
  for (const auto& [key, value] : obj.items()) {
    if (!value.is_number_integer() && !value.is_number_unsigned())
      throw ResultFormatError(origin + ": call count '" + key + "' must be an integer");
    long long n = value.get<long long>();
    if (n < 0) throw ResultFormatError(origin + ": call count '" + key + "' is negative");
    calls[key] = static_cast<std::uint64_t>(n);
  }
  return calls;
}

const ordered_json& require(const ordered_json& doc, const char* key,
                            const std::string& origin) {
  auto it = doc.find(key);
  if (it == doc.end())
    throw ResultFormatError(origin + ": missing key '" + std::string(key) + "'");
  return *it;
}

}  // namespace

std::string result_to_json(const StoredResult& stored) {
  const AnalysisResult& r = stored.result;
  ordered_json doc = ordered_json::object();
  doc["protocol_name"] = r.protocol_name;
  doc["counts"] = counts_to_json(r.counts);
  doc["unclassified_calls"] = calls_to_json(r.counts.unclassified_calls);
  ordered_json roles = ordered_json::array();
  for (const auto& attribution : r.per_role) {
    ordered_json entry = ordered_json::object();
    entry["role"] = attribution.role;
    entry["counts"] = counts_to_json(attribution.counts);
    entry["unclassified_calls"] = calls_to_json(attribution.counts.unclassified_calls);
    roles.push_back(std::move(entry));
  }
  doc["per_role"] = std::move(roles);
  doc["computation_ms"] = r.computation_ms;
  doc["communication"] = r.communication;
  doc["model_name"] = r.model_name;
  doc["model_digest"] = r.model_digest;
  doc["created_at"] = stored.created_at;
  doc["source_digest"] = stored.source_digest;
  doc["warnings"] = r.warnings;
  return doc.dump(2) + "\n";
}

namespace {

StoredResult result_from_doc(const ordered_json& doc, const std::string& origin);

}  // namespace

StoredResult result_from_json(const std::string& text, const std::string& origin) {
  try {
    ordered_json doc = ordered_json::parse(text);
    if (!doc.is_object())
      throw ResultFormatError(origin + ": result must be a JSON object");
    return result_from_doc(doc, origin);
  } catch (const ordered_json::exception& e) {
    throw ResultFormatError(origin + ": " + e.what());
  }
}

namespace {

StoredResult result_from_doc(const ordered_json& doc, const std::string& origin) {
  StoredResult stored;
  AnalysisResult& r = stored.result;
  const auto& name = require(doc, "protocol_name", origin);
  if (!name.is_string()) throw ResultFormatError(origin + ": protocol_name must be a string");
  r.protocol_name = name.get<std::string>();
  r.counts = counts_from_json(require(doc, "counts", origin), origin);
  r.counts.unclassified_calls =
      calls_from_json(require(doc, "unclassified_calls", origin), origin);

  const auto& roles = require(doc, "per_role", origin);
  if (!roles.is_array()) throw ResultFormatError(origin + ": per_role must be an array");
  for (const auto& entry : roles) {
    RoleAttribution attribution;
    const auto& role = require(entry, "role", origin);
    if (!role.is_string()) throw ResultFormatError(origin + ": role must be a string");
    attribution.role = role.get<std::string>();
    attribution.counts = counts_from_json(require(entry, "counts", origin), origin);
    if (entry.contains("unclassified_calls"))
      attribution.counts.unclassified_calls =
          calls_from_json(entry["unclassified_calls"], origin);
    r.per_role.push_back(std::move(attribution));
  }

  const auto& ms = require(doc, "computation_ms", origin);
  if (!ms.is_number()) throw ResultFormatError(origin + ": computation_ms must be a number");
  r.computation_ms = ms.get<double>();
  const auto& comm = require(doc, "communication", origin);
  if (!comm.is_number_unsigned() &&
      !(comm.is_number_integer() && comm.get<long long>() >= 0))
    throw ResultFormatError(origin + ": communication must be a nonnegative integer");
  r.communication = comm.get<std::uint64_t>();
  r.model_name = require(doc, "model_name", origin).get<std::string>();
  r.model_digest = require(doc, "model_digest", origin).get<std::string>();
  stored.created_at = require(doc, "created_at", origin).get<std::string>();
  stored.source_digest = require(doc, "source_digest", origin).get<std::string>();
  const auto& warnings = require(doc, "warnings", origin);
  if (!warnings.is_array()) throw ResultFormatError(origin + ": warnings must be an array");
  for (const auto& w : warnings) r.warnings.push_back(w.get<std::string>());
  return stored;
}

}  // namespace

std::filesystem::path save_result(const AnalysisResult& result,
                                  const std::filesystem::path& store_dir,
                                  const StoreMeta& meta) {
  std::string slug = slugify(result.protocol_name);
  if (slug.empty()) slug = "protocol";

  std::error_code ec;
  std::filesystem::create_directories(store_dir, ec);
  if (ec && !std::filesystem::is_directory(store_dir))
    throw IoError("cannot create store directory '" + store_dir.string() + "'");

  std::filesystem::path target = store_dir / (slug + ".result.json");
  if (std::filesystem::exists(target)) {
    std::ifstream in(target, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
      StoredResult prior = result_from_json(buf.str(), target.string());
      if (prior.result.protocol_name != result.protocol_name)
        throw SlugCollisionError(prior.result.protocol_name, result.protocol_name, slug);
    } catch (const ResultFormatError&) {
      // unreadable slot: claim it
    }
  }

  StoredResult stored;
  stored.result = result;
  stored.created_at = meta.created_at.empty() ? utc_now_rfc3339() : meta.created_at;
  stored.source_path = meta.source_path;
  stored.source_digest = meta.source_digest;

  std::filesystem::path tmp = store_dir / (slug + ".result.json.tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + tmp.string() + "'");
    out << result_to_json(stored);
    out.flush();
    if (!out) throw IoError("failed writing '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) throw IoError("cannot move result into place at '" + target.string() + "'");
  return target;
}

ComparisonSet load_results(const std::filesystem::path& store_dir,
                           const std::vector<std::string>& names) {
  ComparisonSet set;
  set.name = "comparison";
  std::vector<std::string> missing;
  for (const auto& name : names) {
    std::filesystem::path file = store_dir / (slugify(name) + ".result.json");
    std::ifstream in(file, std::ios::binary);
    if (!in) {
      missing.push_back(name);
      continue;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    add_entry(set, result_from_json(buf.str(), file.string()));
  }
  if (!missing.empty()) throw NotFoundError(std::move(missing));
  return set;
}

ComparisonTable compare(const ComparisonSet& set) {
  if (set.entries.empty()) throw EmptySetError();

  ComparisonTable table;
  for (const auto& entry : set.entries) {
    table.rows.push_back(ComparisonRow{entry.result.protocol_name,
                                       entry.result.computation_ms,
                                       entry.result.communication});
  }

  auto ranked = [&](auto key) {
    std::vector<const ComparisonRow*> order;
    for (const auto& row : table.rows) order.push_back(&row);
    std::stable_sort(order.begin(), order.end(),
                     [&](const ComparisonRow* a, const ComparisonRow* b) {
                       auto ka = key(*a), kb = key(*b);
                       if (ka != kb) return ka < kb;
                       return a->protocol_name < b->protocol_name;
                     });
    std::vector<std::string> names;
    for (const auto* row : order) names.push_back(row->protocol_name);
    return names;
  };
  table.by_computation = ranked([](const ComparisonRow& r) { return r.computation_ms; });
  table.by_communication =
      ranked([](const ComparisonRow& r) { return static_cast<double>(r.communication); });

  bool mixed_models = false;
  for (const auto& entry : set.entries)
    if (entry.result.model_digest != set.entries.front().result.model_digest)
      mixed_models = true;
  if (mixed_models)
    table.warnings.push_back(
        "entries were priced by different cost models; computation totals are "
        "not directly comparable");
  return table;
}

}  // namespace cascost
